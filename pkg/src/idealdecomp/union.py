"""Union decomposition into principal automata."""

from __future__ import annotations

from dataclasses import dataclass

from .automata import Mode, is_linear
from .decomposition import Component, Decomposition
from .errors import PrimeInput, VerificationError
from .ideals import IdealAutomaton, lmin, principal_automaton
from .inter import letters_between, linear_states


@dataclass(frozen=True)
class AccelRow:
    i: int
    incoming: dict[int, frozenset[str]]  # j -> letters from q_j to q_i, for j < i

    @property
    def accelerating(self) -> bool:
        earlier = frozenset().union(*(s for j, s in self.incoming.items() if j < self.i - 1))
        return self.incoming[self.i - 1] <= earlier


@dataclass(frozen=True)
class AccelScan:
    chain: tuple[int, ...]
    rows: tuple[AccelRow, ...]  # one per i in 1..n

    @property
    def accelerating_indices(self) -> list[int]:
        return [r.i for r in self.rows if r.accelerating]

    @property
    def has_accelerating(self) -> bool:
        return any(r.accelerating for r in self.rows)


def accel_scan(a: IdealAutomaton) -> AccelScan:
    chain = linear_states(a)
    d = a.dfa
    rows = []
    for i in range(1, len(chain)):
        incoming = {j: letters_between(d, chain[j], chain[i]) for j in range(i)}
        rows.append(AccelRow(i, incoming))
    return AccelScan(tuple(chain), tuple(rows))


def is_union_prime(a: IdealAutomaton) -> bool:
    """Linear without accelerating pattern; cross-checked against the size of Lmin."""
    structural = bool(is_linear(a.dfa)) and not accel_scan(a).has_accelerating
    by_size = a.state_count == lmin(a).max_length + 1
    if structural != by_size:
        raise VerificationError(
            f"structural verdict {structural} disagrees with size verdict {by_size}"
        )
    return structural


def decompose_union(a: IdealAutomaton, verify: bool = True) -> Decomposition:
    if is_union_prime(a):
        raise PrimeInput("automaton is prime for union")
    comps = [
        Component(principal_automaton(w, a.alphabet), f"principal:w={w}") for w in lmin(a)
    ]
    dec = Decomposition(Mode.UNION, a.dfa, comps, raw_count=len(comps))
    if verify:
        big = [c.tag for c in comps if c.dfa.n_states >= a.state_count]
        if big:
            raise VerificationError(f"components not smaller than the source: {big}")
        dec.verify()
    return dec
