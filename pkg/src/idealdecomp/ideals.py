"""Ideal languages: validation, minimal generators and the standard builders."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable

from .automata import (
    Dfa,
    Mode,
    RankTable,
    ReachOrder,
    _distinguish,
    access_words,
    from_edges,
    from_table,
    minimize,
    product,
    ranks,
    reach_order,
)
from .errors import AlphabetMismatch, EmptyLanguage, NotIdeal, NotPartiallyOrdered, VerificationError


def is_subword(u: str, v: str) -> bool:
    """True iff ``u`` embeds in ``v`` as a (not necessarily contiguous) subsequence."""
    it = iter(v)
    return all(c in it for c in u)


def word_key(w: str):
    return (len(w), w)


class WordSet:
    """A finite set of words, kept sorted by length then lexicographically."""

    def __init__(self, words: Iterable[str], alphabet: Iterable[str] | None = None):
        words = set(words)
        letters = {c for w in words for c in w}
        if alphabet is None:
            alphabet = letters
        alphabet = tuple(sorted(set(alphabet)))
        unknown = letters - set(alphabet)
        if unknown:
            raise AlphabetMismatch(tuple(sorted(unknown)), alphabet)
        self.alphabet = alphabet
        self.words = tuple(sorted(words, key=word_key))

    def __iter__(self):
        return iter(self.words)

    def __len__(self):
        return len(self.words)

    def __contains__(self, w):
        return w in self.words

    def __eq__(self, other):
        if isinstance(other, WordSet):
            return self.words == other.words and self.alphabet == other.alphabet
        return NotImplemented

    def __hash__(self):
        return hash((self.words, self.alphabet))

    def __repr__(self):
        return f"WordSet({list(self.words)!r}, alphabet={''.join(self.alphabet)!r})"

    @property
    def max_length(self) -> int:
        return max((len(w) for w in self.words), default=0)


@dataclass(frozen=True)
class IdealAutomaton:
    """A minimal, trim automaton whose language is a non-empty ideal."""

    dfa: Dfa
    order: ReachOrder = field(compare=False, repr=False)
    ranks: RankTable = field(compare=False, repr=False)
    final_state: int = 0

    @property
    def alphabet(self):
        return self.dfa.alphabet

    @property
    def state_count(self) -> int:
        return self.dfa.n_states


def _closure_violation(a: Dfa) -> tuple[str, str] | None:
    """Find (w, w') with w accepted, w' = w plus one inserted letter, w' rejected.

    Ideal-ness is closure under single-letter insertion, i.e. R(q) is included
    in R(delta(q, x)) for every reachable q and letter x.  All those inclusions
    are checked at once by a search over state pairs started from every
    (q, delta(q, x)); a pair (accepting, rejecting) means failure.
    """
    sources = []
    for q in range(a.n_states):
        for t in a.table[q]:
            if t != q:
                sources.append((q, t))
    seen = set(sources)
    queue = deque(seen)
    failed = False
    while queue:
        p, r = queue.popleft()
        if p in a.finals and r not in a.finals:
            failed = True
            break
        for tp, tr in zip(a.table[p], a.table[r]):
            if tp != tr and (tp, tr) not in seen:
                seen.add((tp, tr))
                queue.append((tp, tr))
    if not failed:
        return None

    # slow path, only on failure: pick the shortest, least certificate
    access = access_words(a)
    best = None
    for q in range(a.n_states):
        u = access[q]
        for x, t in zip(a.alphabet, a.table[q]):
            if t == q:
                continue
            v = _distinguish(a.reroot(q), a.reroot(t), lambda x_in, y_in: x_in and not y_in)
            if v is None:
                continue
            cand = (len(u) + len(v) + 1, u + x + v, u + v)
            if best is None or cand < best:
                best = cand
    _, upper, word = best
    return word, upper


def check_ideal(a: Dfa) -> IdealAutomaton:
    """Validate that L(a) is a non-empty ideal; returns the minimal automaton wrapper."""
    m = minimize(a)
    if not m.finals:
        raise EmptyLanguage("the automaton accepts no word")
    bad = _closure_violation(m)
    if bad is not None:
        raise NotIdeal(*bad)
    # an accepted word stays accepted under any suffix, so F is a single sink
    if len(m.finals) != 1:
        raise VerificationError("ideal with several final states after minimization")
    (qf,) = m.finals
    if any(t != qf for t in m.table[qf]):
        raise VerificationError("final state of an ideal is not a sink")
    try:
        rk = ranks(m)
    except NotPartiallyOrdered as exc:  # pragma: no cover - impossible for ideals
        raise VerificationError(str(exc)) from exc
    return IdealAutomaton(m, reach_order(m), rk, qf)


def is_ideal(a: Dfa) -> bool:
    try:
        check_ideal(a)
    except (NotIdeal, EmptyLanguage):
        return False
    return True


def principal_automaton(w: str, alphabet: Iterable[str]) -> Dfa:
    """The |w|+1 state chain recognizing {w} shuffled with Sigma*."""
    alphabet = tuple(sorted(set(alphabet)))
    n = len(w)
    for c in w:
        if c not in alphabet:
            from .errors import UnknownLetter

            raise UnknownLetter(c)
    table = []
    for i in range(n):
        table.append([i + 1 if c == w[i] else i for c in alphabet])
    table.append([n] * len(alphabet))
    return from_table(alphabet, table, 0, [n])


def shuffle_ideal(k: WordSet | Iterable[str], alphabet: Iterable[str] | None = None) -> IdealAutomaton:
    """Minimal automaton of the ideal generated by the words of ``k``."""
    if not isinstance(k, WordSet):
        k = WordSet(k, alphabet)
    elif alphabet is not None:
        k = WordSet(k.words, alphabet)
    if not k.words:
        raise EmptyLanguage("no generators")
    parts = [principal_automaton(w, k.alphabet) for w in k.words]
    return check_ideal(minimize(product(Mode.UNION, parts)))


def lmin(a: IdealAutomaton) -> WordSet:
    """Subword-minimal accepted words.

    A minimal word's run never stays in a state (the letter read would be
    deletable), so only runs that move at every step are enumerated; a
    candidate is kept when no single-letter deletion of it is accepted.
    """
    d = a.dfa
    qf = a.final_state
    found = set()
    stack = [(d.initial, "")]
    while stack:
        q, w = stack.pop()
        if q == qf:
            found.add(w)
            continue
        for c, t in zip(d.alphabet, d.table[q]):
            if t != q:
                stack.append((t, w + c))
    minimal = [w for w in found if not any(d.accepts(w[:i] + w[i + 1 :]) for i in range(len(w)))]
    return WordSet(minimal, d.alphabet)


def _chain(da: Dfa, fa: int, db: Dfa, fb: int) -> tuple[Dfa, int]:
    """Raw concatenation: da's final state fa is replaced by db's initial state."""
    if da.initial == fa:
        return db, fb
    keep = [q for q in da.states if q != fa]
    new = {q: i for i, q in enumerate(keep)}
    offset = len(keep)
    b_initial = offset + db.initial
    table = [[b_initial if t == fa else new[t] for t in da.table[q]] for q in keep]
    table += [[offset + t for t in db.table[q]] for q in db.states]
    return from_table(da.alphabet, table, new[da.initial], [offset + fb]), offset + fb


def concat(a: IdealAutomaton, b: IdealAutomaton) -> IdealAutomaton:
    """Chain two ideal automata: a's final state is replaced by b's initial state."""
    if a.alphabet != b.alphabet:
        raise AlphabetMismatch(a.alphabet, b.alphabet)
    composite, _ = _chain(a.dfa, a.final_state, b.dfa, b.final_state)
    return check_ideal(composite)


def power(a: IdealAutomaton, n: int) -> IdealAutomaton:
    """a concatenated with itself n times, validated once at the end."""
    if n < 1:
        raise ValueError("power needs n >= 1")
    d, f = a.dfa, a.final_state
    for _ in range(n - 1):
        d, f = _chain(d, f, a.dfa, a.final_state)
    return check_ideal(d)


def gen_fig6(n: int) -> IdealAutomaton:
    """Two interleaved tracks of n columns over {a, b, c} with crossing a-edges.

    State 0 is initial (loops on a), column j has a top state 2j-1 and a
    bottom state 2j, state 2n+1 is the accepting sink.  Each column state
    loops on one of b/c; reading the other of b/c keeps it on its track and
    reading a crosses to the other track.  Loop letters alternate from column
    to column, and the last column sends both non-loop letters to the sink.
    Every path from 0 to the sink picks one state per column, giving 2^n
    linear automata after repeated family decomposition.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    final = 2 * n + 1

    def top(j):
        return 2 * j - 1

    def bottom(j):
        return 2 * j

    def loop_letter(j, is_top):
        odd = j % 2 == 1
        return "b" if odd == is_top else "c"

    edges = [(0, "a", 0), (0, "b", top(1)), (0, "c", bottom(1))]
    for j in range(1, n + 1):
        for is_top in (True, False):
            q = top(j) if is_top else bottom(j)
            loop = loop_letter(j, is_top)
            straight = "c" if loop == "b" else "b"
            edges.append((q, loop, q))
            if j == n:
                edges.append((q, "a" + straight, final))
            else:
                same = top(j + 1) if is_top else bottom(j + 1)
                other = bottom(j + 1) if is_top else top(j + 1)
                edges.append((q, straight, same))
                edges.append((q, "a", other))
    edges.append((final, "abc", final))
    dfa = from_edges("abc", 2 * n + 2, edges, 0, [final])
    return check_ideal(dfa)
