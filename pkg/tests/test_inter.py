import pytest
from hypothesis import assume, given

from conftest import filtered, ideals, nonlinear_ideals
from idealdecomp.automata import Mode, equivalent, includes, is_linear, isomorphic, product
from idealdecomp.errors import (
    DampingPresent,
    IndexOutOfRange,
    LinearInput,
    NoDampingPattern,
    NonLinearInput,
    NotInSeparatorSet,
    PrimeInput,
)
from idealdecomp.fixtures import (
    branching,
    branching_drawn,
    branching_family_drawn,
    chain_example,
    chain_example_reduced,
    nonempty_words,
    running_example,
    universal,
)
from idealdecomp.ideals import check_ideal, gen_fig6, power, principal_automaton
from idealdecomp.inter import (
    damping_scan,
    decompose_inter,
    decompose_inter_recursive,
    decompose_linear,
    decompose_nonlinear,
    family_automaton,
    is_inter_prime,
    reduced_automaton,
    separator,
    witness,
)

CHAIN = chain_example()


class TestSeparator:
    def test_branching_drawn(self):
        info = separator(branching_drawn())
        assert (info.sep, info.sep_set, info.sep_rank) == (2, (3, 4), 2)

    def test_running_example(self):
        a = running_example()
        info = separator(a)
        assert info.sep == a.dfa.run("c") and info.sep_rank == 1
        assert set(info.sep_set) == {a.dfa.run("ca"), a.dfa.run("cb")}

    def test_linear_input(self):
        with pytest.raises(LinearInput):
            separator(CHAIN)


class TestFamily:
    @pytest.mark.parametrize("rho", [3, 4])
    def test_branching_drawn_tables(self, rho):
        got = family_automaton(branching_drawn(), rho)
        assert got == branching_family_drawn(rho)

    def test_redirected_edges(self):
        d = branching_drawn()
        # separator's b-edge leads to rho2 outside Fam(rho1); it must follow rho1's b-edge to q4
        a1 = family_automaton(d, 3)
        assert a1.n_states == 6 and a1.run("bbb") == a1.run("bbab") == a1.run("ab")
        a2 = family_automaton(d, 4)
        assert a2.n_states == 7 and a2.run("a") == a2.run("ba") == a2.run("bba") == a2.run("bbb")

    def test_not_in_separator_set(self):
        with pytest.raises(NotInSeparatorSet):
            family_automaton(branching_drawn(), 0)

    def test_outputs_are_ideals(self):
        a = branching()
        for rho in separator(a).sep_set:
            f = family_automaton(a, rho)
            # not necessarily minimal, but recognizes an ideal
            assert f.n_states < a.state_count
            check_ideal(f)


class TestNonlinear:
    def test_branching(self):
        dec = decompose_nonlinear(branching())
        assert dec.verified and [c.dfa.n_states for c in dec.components] == [6, 7]
        assert all(c.tag.startswith("family:rho=") for c in dec.components)

    def test_running_example(self):
        dec = decompose_nonlinear(running_example())
        assert len(dec) == 2 and dec.verified
        assert all(c.dfa.n_states < 10 for c in dec.components)

    def test_generator(self):
        dec = decompose_nonlinear(gen_fig6(2))
        assert len(dec) == 2 and dec.verified

    def test_linear_input(self):
        with pytest.raises(LinearInput):
            decompose_nonlinear(CHAIN)


class TestDamping:
    def test_chain(self):
        scan = damping_scan(CHAIN)
        assert scan.damping_indices == [1]
        row = scan.rows[0]
        assert row.stay_before | row.step == {"a"} == row.stay_after

    def test_principal(self):
        scan = damping_scan(check_ideal(principal_automaton("ab", "ab")))
        assert not scan.has_damping
        row = scan.rows[0]
        assert (row.stay_before, row.step, row.stay_after) == ({"b"}, {"a"}, {"a"})

    def test_two_states_has_no_interior_index(self):
        # q0 -a-> q1 only; indices run over 1..n-1, which is empty for n = 1
        scan = damping_scan(check_ideal(nonempty_words("a")))
        assert scan.rows == () and not scan.has_damping

    def test_nonlinear(self):
        with pytest.raises(NonLinearInput):
            damping_scan(running_example())


class TestReduced:
    @pytest.mark.parametrize("k", [0, 1])
    def test_chain(self, k):
        got = reduced_automaton(CHAIN, k)
        assert isomorphic(got, chain_example_reduced(k))
        assert check_ideal(got).state_count == 3

    def test_initial_moves_for_zero(self):
        got = reduced_automaton(CHAIN, 0)
        assert got.accepts("b") and not CHAIN.dfa.accepts("b")

    @pytest.mark.parametrize("k", [-1, 3])
    def test_out_of_range(self, k):
        with pytest.raises(IndexOutOfRange):
            reduced_automaton(CHAIN, k)


class TestLinear:
    def test_chain(self):
        dec = decompose_linear(CHAIN)
        assert [c.tag for c in dec.components] == ["reduced:k=0", "reduced:k=1"]
        assert dec.verified
        assert equivalent(product(Mode.INTER, dec.dfas()), CHAIN.dfa)

    def test_square(self):
        dec = decompose_linear(power(CHAIN, 2))
        assert [c.dfa.n_states for c in dec.components] == [6, 6] and dec.verified

    def test_prime(self):
        with pytest.raises(NoDampingPattern):
            decompose_linear(check_ideal(principal_automaton("ab", "ab")))

    def test_nonlinear(self):
        with pytest.raises(NonLinearInput):
            decompose_linear(running_example())


class TestPrimality:
    def test_verdicts(self):
        assert not is_inter_prime(CHAIN)
        assert not is_inter_prime(branching())
        assert is_inter_prime(check_ideal(principal_automaton("ab", "ab")))
        assert is_inter_prime(check_ideal(universal("ab")))

    def test_dispatch_prime(self):
        with pytest.raises(PrimeInput):
            decompose_inter(check_ideal(principal_automaton("ab", "ab")))

    def test_dispatch_routes(self):
        assert decompose_inter(CHAIN).components[0].tag.startswith("reduced")
        assert decompose_inter(branching()).components[0].tag.startswith("family")


class TestWitness:
    def test_principal(self):
        a = check_ideal(principal_automaton("ab", "ab"))
        w = witness(a)
        assert w.factors == ("ba",) and w.word == "ba"
        assert not a.dfa.accepts("ba") and a.dfa.accepts("baba")

    def test_two_states_empty_witness(self):
        a = check_ideal(nonempty_words("ab"))
        w = witness(a)
        assert w.factors == () and not a.dfa.accepts(w.word)

    def test_damping_present(self):
        with pytest.raises(DampingPresent) as e:
            witness(CHAIN)
        assert e.value.k == 1

    def test_nonlinear(self):
        with pytest.raises(NonLinearInput):
            witness(branching())

    def test_pumped(self):
        a = check_ideal(principal_automaton("abc", "abc"))
        w = witness(a)
        assert len(w.factors) == 2
        for i in (1, 2):
            assert a.dfa.accepts(w.pumped(i))


class TestRecursive:
    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_generator_linear_leaves(self, n):
        dec = decompose_inter_recursive(gen_fig6(n), until="linear")
        assert len(dec) == dec.raw_count == 2**n
        assert all(is_linear(c.dfa) for c in dec.components)

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_power_prime_leaves(self, n):
        dec = decompose_inter_recursive(power(CHAIN, n))
        assert len(dec) == 2**n and dec.verified
        assert all(is_inter_prime(check_ideal(c.dfa)) for c in dec.components)

    def test_leaves_are_concatenations(self):
        from idealdecomp.ideals import concat

        a0, a1 = (check_ideal(chain_example_reduced(k)) for k in (0, 1))
        expected = {concat(x, y).dfa for x in (a0, a1) for y in (a0, a1)}
        got = {c.dfa for c in decompose_inter_recursive(power(CHAIN, 2)).components}
        assert got == expected

    def test_prime_input_is_leaf(self):
        dec = decompose_inter_recursive(check_ideal(principal_automaton("ab", "ab")))
        assert len(dec) == 1 and dec.combinator == "leaf"

    def test_running_example_dedup(self):
        dec = decompose_inter_recursive(running_example())
        assert dec.raw_count >= len(dec) and dec.verified

    def test_bad_mode(self):
        with pytest.raises(ValueError):
            decompose_inter_recursive(CHAIN, until="forever")


# --- properties ---------------------------------------------------------------


@filtered
@given(nonlinear_ideals())
def test_family_properties(a):
    info = separator(a)
    assert 2 <= len(info.sep_set) <= len(a.alphabet)
    assert a.ranks.states_at(info.sep_rank) == [info.sep]
    assert all(a.ranks[r] == info.sep_rank + 1 for r in info.sep_set)
    assert set(info.sep_set) <= set(a.dfa.table[info.sep])
    parts = []
    for rho in info.sep_set:
        f = family_automaton(a, rho)
        assert f.n_states < a.state_count
        check_ideal(f)
        parts.append(f)
    assert equivalent(product(Mode.INTER, parts), a.dfa)


@filtered
@given(ideals())
def test_reduced_properties(a):
    assume(is_linear(a.dfa))
    n = a.state_count - 1
    for k in range(n):
        r = reduced_automaton(a, k)
        assert includes(a.dfa, r)
        check_ideal(r)
    for k in damping_scan(a).damping_indices:
        pair = [reduced_automaton(a, k - 1), reduced_automaton(a, k)]
        assert equivalent(product(Mode.INTER, pair), a.dfa)


@filtered
@given(ideals())
def test_witness_soundness(a):
    # Σ* accepts everything, so a rejected witness needs at least two states
    assume(a.state_count > 1 and is_inter_prime(a))
    w = witness(a)
    d = a.dfa
    assert not d.accepts(w.word)
    chain = damping_scan(a).chain
    for i, factor in enumerate(w.factors, 1):
        assert d.run(factor, chain[i - 1]) == chain[i] != d.run(factor, chain[i])
        assert d.accepts(w.pumped(i))


@given(ideals(max_words=2, max_len=3))
def test_recursive_bound(a):
    dec = decompose_inter_recursive(a)
    assert dec.raw_count <= 2 ** (2 * a.state_count)
    assert all(is_inter_prime(check_ideal(c.dfa)) for c in dec.components)
