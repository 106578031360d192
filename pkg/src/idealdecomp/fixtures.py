"""Hand-written automata used as running examples, tests and CLI samples.

Two of the commonly reproduced drawings of these examples do not recognize
ideals when read literally.  Both the literal drawings and corrected
versions are kept so the discrepancy stays testable; see the README.
"""

from __future__ import annotations

from .automata import Dfa, from_edges, from_table
from .ideals import IdealAutomaton, check_ideal, shuffle_ideal

RUNNING_WORDS = ("cabb", "cacca", "cbca")


def running_example() -> IdealAutomaton:
    """Minimal automaton of the ideal generated by cabb, cacca and cbca (10 states)."""
    return shuffle_ideal(RUNNING_WORDS, "abc")


def running_example_drawn() -> Dfa:
    """The 8-state drawing of the running example, read literally.

    States: 0 initial, 1..6 the inner states, 7 final.  It is minimal but
    rejects caccbb although cabb is accepted, so it is not an ideal.
    """
    edges = [
        (0, "ab", 0), (0, "c", 1),
        (1, "a", 2), (1, "b", 3), (1, "c", 1),
        (2, "a", 2), (2, "b", 6), (2, "c", 4),
        (3, "a", 4), (3, "b", 3), (3, "c", 5),
        (4, "a", 4), (4, "b", 6), (4, "c", 5),
        (5, "a", 7), (5, "bc", 5),
        (6, "a", 6), (6, "b", 7), (6, "c", 5),
        (7, "abc", 7),
    ]  # fmt: skip
    return from_edges("abc", 8, edges, 0, [7])


# Branching example over {a, b}.  Indices: 0 initial, 1 q2, 2 separator,
# 3 rho1, 4 rho2, 5 q3, 6 q4, 7 final.
BRANCHING_SEP = 2
BRANCHING_RHO = (3, 4)

_BRANCHING_COMMON = [
    (0, "a", 3), (0, "b", 1),
    (1, "a", 3), (1, "b", 2),
    (2, "a", 3), (2, "b", 4),
    (3, "a", 3), (3, "b", 6),
    (5, "b", 6), (5, "a", 7),
    (6, "ab", 7), (7, "ab", 7),
]  # fmt: skip


def branching_drawn() -> Dfa:
    """The branching example exactly as usually drawn.

    Minimal and partially ordered with two incomparable states, but it
    accepts bbabb and rejects bbbabb, so its language is not an ideal.
    """
    return from_edges("ab", 8, _BRANCHING_COMMON + [(4, "a", 4), (4, "b", 5)], 0, [7])


def branching() -> IdealAutomaton:
    """The branching example with the letters on rho2 swapped, which makes it an ideal.

    Lmin is {aba, abb, bbbaa}.  Validation renumbers states canonically, so
    indices differ from :func:`branching_drawn`.
    """
    d = from_edges("ab", 8, _BRANCHING_COMMON + [(4, "b", 4), (4, "a", 5)], 0, [7])
    return check_ideal(d)


def branching_family_drawn(rho: int) -> Dfa:
    """Family automata of :func:`branching_drawn` as drawn, in canonical numbering."""
    tables = {
        3: ((1, 2), (1, 3), (1, 4), (5, 5), (1, 3), (5, 5)),
        4: ((1, 2), (1, 3), (1, 4), (5, 6), (1, 1), (5, 5), (5, 5)),
    }
    table = tables[rho]
    return from_table("ab", table, 0, [5])


def chain_example() -> IdealAutomaton:
    """Four-state linear automaton over {a, b, c} with Lmin {ab, ba, bb, ca, cb}."""
    edges = [
        (0, "a", 1), (0, "bc", 2),
        (1, "a", 1), (1, "b", 3), (1, "c", 2),
        (2, "c", 2), (2, "ab", 3),
        (3, "abc", 3),
    ]  # fmt: skip
    return check_ideal(from_edges("abc", 4, edges, 0, [3]))


def chain_example_reduced(k: int) -> Dfa:
    """The two reduced automata of :func:`chain_example`, written out by hand."""
    if k == 0:
        # q1 initial, q2, q3
        edges = [(0, "a", 0), (0, "b", 2), (0, "c", 1), (1, "c", 1), (1, "ab", 2), (2, "abc", 2)]
    elif k == 1:
        # q0 initial, q2, q3
        edges = [(0, "abc", 1), (1, "c", 1), (1, "ab", 2), (2, "abc", 2)]
    else:
        raise ValueError("k must be 0 or 1")
    return from_edges("abc", 3, edges, 0, [2])


def exact_word(w: str, alphabet) -> Dfa:
    """Automaton accepting exactly w, with a rejecting sink."""
    alphabet = tuple(sorted(set(alphabet)))
    n = len(w)
    sink = n + 1
    table = []
    for i in range(n + 1):
        table.append([i + 1 if i < n and c == w[i] else sink for c in alphabet])
    table.append([sink] * len(alphabet))
    return from_table(alphabet, table, 0, [n])


def universal(alphabet) -> Dfa:
    """One accepting state looping on every letter."""
    alphabet = tuple(sorted(set(alphabet)))
    return from_table(alphabet, [[0] * len(alphabet)], 0, [0])


def nonempty_words(alphabet) -> Dfa:
    """Two states: Σ·Σ*."""
    alphabet = tuple(sorted(set(alphabet)))
    k = len(alphabet)
    return from_table(alphabet, [[1] * k, [1] * k], 0, [1])

