"""Intersection decomposition of minimal automata recognizing ideals.

Non-linear automata split along their separator set into family automata;
linear automata split at a damping pattern into two reduced automata.  A
linear automaton without damping pattern is prime, and :func:`witness`
produces a word that proves it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .automata import (
    Dfa,
    Mode,
    RankTable,
    ReachOrder,
    canonical,
    from_table,
    is_linear,
    ranks,
    reach_order,
)
from .decomposition import Component, Decomposition
from .errors import (
    DampingPresent,
    IndexOutOfRange,
    LinearInput,
    NoDampingPattern,
    NonLinearInput,
    NotInSeparatorSet,
    PrimeInput,
    VerificationError,
)
from .ideals import IdealAutomaton, check_ideal


@dataclass(frozen=True)
class _Shape:
    dfa: Dfa
    order: ReachOrder
    ranks: RankTable


def _shape(a: IdealAutomaton | Dfa) -> _Shape:
    # Structural routines also run on plain partially ordered automata, which
    # lets callers inspect inputs that failed ideal validation.
    if isinstance(a, IdealAutomaton):
        return _Shape(a.dfa, a.order, a.ranks)
    return _Shape(a, reach_order(a), ranks(a))


def _dfa(a: IdealAutomaton | Dfa) -> Dfa:
    return a.dfa if isinstance(a, IdealAutomaton) else a


# ---------------------------------------------------------------------------
# non-linear automata


@dataclass(frozen=True)
class SeparatorInfo:
    sep: int
    sep_set: tuple[int, ...]
    sep_rank: int


def separator(a: IdealAutomaton | Dfa) -> SeparatorInfo:
    """Separator state (last state of the singleton-rank prefix) and the states one rank above."""
    s = _shape(a)
    pair = s.order.incomparable_pair()
    if pair is None:
        raise LinearInput("a linear automaton has no separator state")
    counts = s.ranks.counts
    rank = 0
    while counts.get(rank + 1) == 1:
        rank += 1
    (sep,) = s.ranks.states_at(rank)
    return SeparatorInfo(sep, tuple(s.ranks.states_at(rank + 1)), rank)


def family_automaton(a: IdealAutomaton | Dfa, rho: int) -> Dfa:
    """The automaton on Anc(rho) and Desc(rho) with escaping edges redirected.

    An edge (q, x) leaving the family is replaced by the x-edge of the least
    state s above q whose x-successor stays in the family.  Such an s lies on
    the ancestor chain of rho, which is totally ordered, so it is found by
    walking up that chain from q.
    """
    s = _shape(a)
    info = separator(a)
    if rho not in info.sep_set:
        raise NotInSeparatorSet(f"state {rho} is not in the separator set {list(info.sep_set)}")
    d = s.dfa
    desc = s.order.desc(rho)
    chain = sorted(s.order.anc(rho), key=lambda q: s.ranks[q])
    fam = sorted(desc | set(chain))
    members = set(fam)
    position = {q: i for i, q in enumerate(chain)}
    new = {q: i for i, q in enumerate(fam)}
    table = []
    for q in fam:
        row = []
        for li, t in enumerate(d.table[q]):
            if t not in members:
                # q is a strict ancestor of rho here; rho itself always qualifies
                for up in chain[position[q] + 1 :]:
                    t = d.table[up][li]
                    if t in members:
                        break
            row.append(new[t])
        table.append(row)
    finals = [new[q] for q in fam if q in d.finals]
    return canonical(from_table(d.alphabet, table, new[d.initial], finals))


def decompose_nonlinear(a: IdealAutomaton, verify: bool = True) -> Decomposition:
    info = separator(a)
    comps = [Component(family_automaton(a, rho), f"family:rho={rho}") for rho in info.sep_set]
    dec = Decomposition(Mode.INTER, a.dfa, comps, raw_count=len(comps))
    return dec.verify() if verify else dec


# ---------------------------------------------------------------------------
# linear automata


def linear_states(a: IdealAutomaton | Dfa) -> list[int]:
    """States of a linear automaton as q_0 < q_1 < ... < q_n."""
    s = _shape(a)
    pair = s.order.incomparable_pair()
    if pair is not None:
        raise NonLinearInput(pair)
    return sorted(s.dfa.states, key=lambda q: s.ranks[q])


def letters_between(d: Dfa, q: int, r: int) -> frozenset[str]:
    """Letters labelling an edge from q to r."""
    return frozenset(c for c, t in zip(d.alphabet, d.table[q]) if t == r)


@dataclass(frozen=True)
class DampingRow:
    k: int
    stay_before: frozenset[str]  # letters looping on q_{k-1}
    step: frozenset[str]  # letters from q_{k-1} to q_k
    stay_after: frozenset[str]  # letters looping on q_k

    @property
    def damping(self) -> bool:
        return (self.stay_before | self.step) <= self.stay_after


@dataclass(frozen=True)
class DampingScan:
    chain: tuple[int, ...]  # original state ids of q_0..q_n
    rows: tuple[DampingRow, ...]  # one per k in 1..n-1

    @property
    def damping_indices(self) -> list[int]:
        return [r.k for r in self.rows if r.damping]

    @property
    def has_damping(self) -> bool:
        return any(r.damping for r in self.rows)


def damping_scan(a: IdealAutomaton | Dfa) -> DampingScan:
    chain = linear_states(a)
    d = _dfa(a)
    rows = []
    for k in range(1, len(chain) - 1):
        p, q = chain[k - 1], chain[k]
        rows.append(DampingRow(k, letters_between(d, p, p), letters_between(d, p, q), letters_between(d, q, q)))
    return DampingScan(tuple(chain), tuple(rows))


def reduced_automaton(a: IdealAutomaton | Dfa, k: int) -> Dfa:
    """Drop q_k and send its incoming edges to q_{k+1}.

    States of the result are numbered along the chain, so the result is again
    labelled q_0 < q_1 < ...
    """
    chain = linear_states(a)
    n = len(chain) - 1
    if not 0 <= k <= n - 1:
        raise IndexOutOfRange(f"k={k} outside 0..{n - 1}")
    d = _dfa(a)
    removed, heir = chain[k], chain[k + 1]
    kept = [q for q in chain if q != removed]
    new = {q: i for i, q in enumerate(kept)}
    table = []
    for q in kept:
        table.append([new[heir if t == removed else t] for t in d.table[q]])
    initial = chain[1] if k == 0 else chain[0]
    finals = [new[q] for q in kept if q in d.finals]
    return from_table(d.alphabet, table, new[initial], finals)


def decompose_linear(a: IdealAutomaton, verify: bool = True) -> Decomposition:
    scan = damping_scan(a)
    if not scan.has_damping:
        raise NoDampingPattern("linear automaton without damping pattern is prime")
    k = scan.damping_indices[0]
    comps = [
        Component(reduced_automaton(a, k - 1), f"reduced:k={k - 1}"),
        Component(reduced_automaton(a, k), f"reduced:k={k}"),
    ]
    dec = Decomposition(Mode.INTER, a.dfa, comps, raw_count=2)
    return dec.verify() if verify else dec


def is_inter_prime(a: IdealAutomaton) -> bool:
    if not is_linear(a.dfa):
        return False
    return not damping_scan(a).has_damping


def decompose_inter(a: IdealAutomaton, verify: bool = True) -> Decomposition:
    """One decomposition step; raises PrimeInput when none exists."""
    if not is_linear(a.dfa):
        return decompose_nonlinear(a, verify)
    if not damping_scan(a).has_damping:
        raise PrimeInput("automaton is prime for intersection")
    return decompose_linear(a, verify)


@dataclass(frozen=True)
class Witness:
    factors: tuple[str, ...]

    @property
    def word(self) -> str:
        return "".join(self.factors)

    def pumped(self, i: int) -> str:
        """The witness with factor i (1-based) written twice."""
        f = list(self.factors)
        return "".join(f[: i - 1] + [f[i - 1], f[i - 1]] + f[i:])


def witness(a: IdealAutomaton | Dfa) -> Witness:
    """Primality witness of a linear automaton without damping pattern."""
    scan = damping_scan(a)
    factors = []
    for row in scan.rows:
        forward = row.step - row.stay_after
        if forward:
            factors.append(min(forward))
            continue
        looping = row.stay_before - row.stay_after
        if not looping:
            raise DampingPresent(row.k)
        factors.append(min(looping) + min(row.step))
    return Witness(tuple(factors))


# ---------------------------------------------------------------------------
# iteration down to primes


def decompose_inter_recursive(
    a: IdealAutomaton, verify: bool = True, until: str = "prime"
) -> Decomposition:
    """Split repeatedly until every component is prime (or merely linear).

    With ``until="linear"`` only non-linear components are split further.
    Components are minimized and re-validated before each step.  Equivalent
    leaves are merged at the end; ``raw_count`` keeps the count before merging.
    """
    if until not in ("prime", "linear"):
        raise ValueError("until must be 'prime' or 'linear'")
    leaves: list[tuple[IdealAutomaton, str]] = []
    work = [(a, "")]
    while work:
        b, path = work.pop()
        linear = bool(is_linear(b.dfa))
        done = linear if until == "linear" else linear and not damping_scan(b).has_damping
        if done:
            leaves.append((b, path or "leaf"))
            continue
        step = decompose_inter(b, verify)
        for comp in reversed(step.components):
            tag = f"{path}/{comp.tag}" if path else comp.tag
            work.append((check_ideal(comp.dfa), tag))

    raw = len(leaves)
    bound = 2 ** (2 * a.state_count)
    if raw > bound:
        raise VerificationError(f"{raw} leaves exceed the 2^(2|A|) = {bound} bound")
    seen = {}
    for b, tag in leaves:
        seen.setdefault(b.dfa, Component(b.dfa, tag))
    comps = list(seen.values())
    dec = Decomposition(Mode.INTER, a.dfa, comps, raw_count=raw)
    if verify:
        if any(c.dfa.n_states >= a.state_count for c in comps) and not (raw == 1 and comps[0].tag == "leaf"):
            raise VerificationError("component not smaller than the source")
        dec.verify()
    return dec
