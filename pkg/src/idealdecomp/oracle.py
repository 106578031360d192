"""Brute-force ground truth for small automata.

Nothing here uses the structural characterizations; primality is decided
from the definition by trying every strictly smaller complete automaton.
"""

from __future__ import annotations

import itertools
import os
from functools import lru_cache
from typing import Iterator

from .automata import Dfa, Mode, equivalent, from_table, includes, minimize, product
from .errors import TooLarge
from .ideals import IdealAutomaton, WordSet, check_ideal, is_subword
from .errors import NotIdeal, EmptyLanguage

DEFAULT_CAP = 4
MAX_ALPHABET = 2


def default_cap() -> int:
    raw = os.environ.get("IDEAL_ORACLE_CAP")
    return int(raw) if raw else DEFAULT_CAP


def words_up_to(alphabet, max_len: int) -> Iterator[str]:
    """All words of length <= max_len, by length then lexicographically."""
    letters = sorted(alphabet)
    for n in range(max_len + 1):
        for t in itertools.product(letters, repeat=n):
            yield "".join(t)


def enumerate_language(a: Dfa, max_len: int) -> WordSet:
    return WordSet((w for w in words_up_to(a.alphabet, max_len) if a.accepts(w)), a.alphabet)


def subword_closure(k: WordSet, max_len: int, alphabet=None) -> WordSet:
    alphabet = tuple(sorted(alphabet)) if alphabet is not None else k.alphabet
    gens = list(k)
    hits = (w for w in words_up_to(alphabet, max_len) if any(is_subword(u, w) for u in gens))
    return WordSet(hits, alphabet)


def all_dfas(alphabet, n_states: int) -> Iterator[Dfa]:
    """Every complete DFA on states 0..n-1 with initial state 0 (renaming covers the rest)."""
    alphabet = tuple(sorted(alphabet))
    cells = n_states * len(alphabet)
    width = len(alphabet)
    for targets in itertools.product(range(n_states), repeat=cells):
        table = [targets[i * width : (i + 1) * width] for i in range(n_states)]
        for mask in range(1 << n_states):
            finals = [q for q in range(n_states) if mask >> q & 1]
            yield from_table(alphabet, table, 0, finals)


@lru_cache(maxsize=None)
def smaller_languages(alphabet: tuple[str, ...], bound: int) -> tuple[Dfa, ...]:
    """Minimal automata of all languages recognized with fewer than ``bound`` states."""
    seen = {}
    for n in range(1, bound):
        for d in all_dfas(alphabet, n):
            m = minimize(d)
            seen.setdefault(m, None)
    return tuple(seen)


def _mode(mode) -> Mode:
    return mode if isinstance(mode, Mode) else Mode(mode)


def exhaustive_prime(a: IdealAutomaton | Dfa, mode: Mode | str, cap: int | None = None) -> bool:
    """Primality straight from the definition.

    Intersection: L(a) is an intersection of smaller languages iff it equals
    the intersection of every smaller language containing it.  Union is the
    dual with contained languages.
    """
    mode = _mode(mode)
    d = a.dfa if isinstance(a, IdealAutomaton) else minimize(a)
    cap = default_cap() if cap is None else cap
    if d.n_states > cap:
        raise TooLarge(f"{d.n_states} states exceeds oracle cap {cap}")
    if len(d.alphabet) > MAX_ALPHABET:
        raise TooLarge(f"alphabet of size {len(d.alphabet)} exceeds {MAX_ALPHABET}")
    if mode is Mode.INTER:
        admissible = [b for b in smaller_languages(d.alphabet, d.n_states) if includes(d, b)]
    else:
        admissible = [b for b in smaller_languages(d.alphabet, d.n_states) if includes(b, d)]
    if not admissible:
        return True
    acc = admissible[0]
    for b in admissible[1:]:
        acc = minimize(product(mode, [acc, b]))
    return not equivalent(acc, d)


def admissible_supersets(a: IdealAutomaton) -> list[Dfa]:
    """Smaller automata whose language contains L(a)."""
    return [b for b in smaller_languages(a.alphabet, a.state_count) if includes(a.dfa, b)]


def minimal_ideal_automata(alphabet, max_states: int) -> list[IdealAutomaton]:
    """Every minimal automaton of an ideal with at most ``max_states`` states.

    Candidates have initial state 0 and the last state as the only final
    state, a sink; any ideal automaton can be renamed into that shape.
    """
    alphabet = tuple(sorted(alphabet))
    width = len(alphabet)
    found = {}
    for n in range(1, max_states + 1):
        sink = [n - 1] * width
        for targets in itertools.product(range(n), repeat=(n - 1) * width):
            table = [targets[i * width : (i + 1) * width] for i in range(n - 1)] + [sink]
            d = from_table(alphabet, table, 0, [n - 1])
            try:
                ia = check_ideal(d)
            except (NotIdeal, EmptyLanguage):
                continue
            if ia.state_count == n:
                found.setdefault(ia.dfa, ia)
    return sorted(found.values(), key=lambda ia: (ia.state_count, ia.dfa.table))
