"""Complete deterministic automata and the operations the decompositions rest on.

States are the integers ``0..n_states-1`` and the transition function is a
dense table indexed by ``(state, letter position)``.  Everything here is
pure: a :class:`Dfa` is never mutated, operations return new values.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import (
    AlphabetMismatch,
    BadIndex,
    DuplicateTransition,
    EmptyList,
    FormatError,
    MissingTransition,
    NotPartiallyOrdered,
    UnknownLetter,
)


@dataclass(frozen=True)
class Dfa:
    alphabet: tuple[str, ...]
    n_states: int
    initial: int
    finals: frozenset[int]
    table: tuple[tuple[int, ...], ...]

    @property
    def state_count(self) -> int:
        return self.n_states

    @property
    def states(self) -> range:
        return range(self.n_states)

    def letter_index(self, letter: str) -> int:
        try:
            return self._index[letter]
        except KeyError:
            raise UnknownLetter(letter) from None

    @property
    def _index(self) -> dict[str, int]:
        # cached lazily; frozen dataclass so go through object.__setattr__
        idx = self.__dict__.get("_index_cache")
        if idx is None:
            idx = {c: i for i, c in enumerate(self.alphabet)}
            object.__setattr__(self, "_index_cache", idx)
        return idx

    def step(self, state: int, letter: str) -> int:
        return self.table[state][self.letter_index(letter)]

    def run(self, word: Iterable[str], start: int | None = None) -> int:
        q = self.initial if start is None else start
        index = self._index
        table = self.table
        for c in word:
            try:
                q = table[q][index[c]]
            except KeyError:
                raise UnknownLetter(c) from None
        return q

    def accepts(self, word: Iterable[str]) -> bool:
        return self.run(word) in self.finals

    def reroot(self, state: int) -> Dfa:
        """Same automaton started in ``state``; recognizes the residual R(A, state)."""
        return Dfa(self.alphabet, self.n_states, state, self.finals, self.table)

    def edges(self) -> Iterator[tuple[int, str, int]]:
        for q, row in enumerate(self.table):
            for c, t in zip(self.alphabet, row):
                yield q, c, t

    def __repr__(self) -> str:
        return (
            f"Dfa(alphabet={''.join(self.alphabet)!r}, n_states={self.n_states}, "
            f"initial={self.initial}, finals={sorted(self.finals)})"
        )


def from_table(alphabet, table, initial=0, finals=()) -> Dfa:
    """Build a Dfa from ``table[state][letter_position]`` without parsing."""
    alphabet = tuple(alphabet)
    table = tuple(tuple(row) for row in table)
    n = len(table)
    if n == 0:
        raise FormatError("an automaton needs at least one state")
    for q, row in enumerate(table):
        if len(row) != len(alphabet):
            raise MissingTransition(q, alphabet[len(row)] if len(row) < len(alphabet) else None)
        for t in row:
            if not 0 <= t < n:
                raise BadIndex("target", t, n)
    if not 0 <= initial < n:
        raise BadIndex("initial", initial, n)
    finals = frozenset(finals)
    for f in finals:
        if not 0 <= f < n:
            raise BadIndex("final", f, n)
    return Dfa(alphabet, n, initial, finals, table)


def from_edges(alphabet, n_states, edges, initial=0, finals=()) -> Dfa:
    """Build a Dfa from ``(source, letter, target)`` triples.

    ``letter`` may also be a string of several letters, handy for hand-written
    fixtures: ``(0, "bc", 2)`` adds one edge per letter.
    """
    alphabet = tuple(sorted(set(alphabet)))
    index = {c: i for i, c in enumerate(alphabet)}
    rows: list[list[int | None]] = [[None] * len(alphabet) for _ in range(n_states)]
    for src, letters, dst in edges:
        for c in letters:
            if c not in index:
                raise UnknownLetter(c)
            if not 0 <= src < n_states:
                raise BadIndex("source", src, n_states)
            if not 0 <= dst < n_states:
                raise BadIndex("target", dst, n_states)
            if rows[src][index[c]] is not None:
                raise DuplicateTransition(src, c)
            rows[src][index[c]] = dst
    for q, row in enumerate(rows):
        for i, t in enumerate(row):
            if t is None:
                raise MissingTransition(q, alphabet[i])
    return from_table(alphabet, rows, initial, finals)


def validate(raw: dict) -> Dfa:
    """Check a parsed canonical-JSON description and build the Dfa."""
    try:
        letters = raw["alphabet"]
        n = raw["states"]
        initial = raw["initial"]
        finals = raw["finals"]
        transitions = raw["transitions"]
    except (KeyError, TypeError) as exc:
        raise FormatError(f"missing field {exc}") from None
    if not isinstance(letters, list) or not all(
        isinstance(c, str) and len(c) == 1 and c.isprintable() and not c.isspace() for c in letters
    ):
        raise FormatError("alphabet must be a list of single printable characters")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise FormatError("states must be a positive integer")
    for name, v in (("initial", initial),):
        if not isinstance(v, int) or isinstance(v, bool):
            raise FormatError(f"{name} must be an integer")
    if not 0 <= initial < n:
        raise BadIndex("initial", initial, n)
    if not isinstance(finals, list):
        raise FormatError("finals must be a list")
    for f in finals:
        if not isinstance(f, int) or isinstance(f, bool):
            raise FormatError("final states must be integers")
        if not 0 <= f < n:
            raise BadIndex("final", f, n)
    alphabet = set(letters)
    edges = []
    for tr in transitions:
        if not (isinstance(tr, (list, tuple)) and len(tr) == 3):
            raise FormatError(f"transition {tr!r} is not a [source, letter, target] triple")
        src, c, dst = tr
        if not (isinstance(src, int) and isinstance(dst, int)) or isinstance(src, bool) or isinstance(dst, bool):
            raise FormatError(f"transition {tr!r} has non-integer states")
        if not (isinstance(c, str) and len(c) == 1):
            raise FormatError(f"transition {tr!r} letter must be a single character")
        if c not in alphabet:
            raise UnknownLetter(c)
        edges.append((src, c, dst))
    return from_edges(alphabet, n, edges, initial, finals)


def to_json(a: Dfa) -> dict:
    return {
        "alphabet": list(a.alphabet),
        "states": a.n_states,
        "initial": a.initial,
        "finals": sorted(a.finals),
        "transitions": [[q, c, t] for q, c, t in a.edges()],
    }


# ---------------------------------------------------------------------------
# certificates


@dataclass(frozen=True)
class Certificate:
    kind: str  # "word" | "state" | "state-pair" | "letter" | "cycle"
    payload: object

    def __str__(self):
        if self.kind == "word":
            return repr(self.payload) if self.payload else "ε"
        return f"{self.kind} {self.payload}"


@dataclass(frozen=True)
class Check:
    """Outcome of a yes/no check; falsy on failure, with an explanation."""

    ok: bool
    certificate: Certificate | None = None

    def __bool__(self):
        return self.ok

    def __iter__(self):
        return iter((self.ok, self.certificate))


# ---------------------------------------------------------------------------
# reachability


def reachable(a: Dfa, start: int | None = None) -> list[int]:
    """States reachable from ``start`` in breadth-first, alphabet-ordered discovery order."""
    start = a.initial if start is None else start
    seen = {start}
    order = [start]
    queue = deque(order)
    while queue:
        q = queue.popleft()
        for t in a.table[q]:
            if t not in seen:
                seen.add(t)
                order.append(t)
                queue.append(t)
    return order


def access_words(a: Dfa) -> dict[int, str]:
    """Shortest, then lexicographically least, word reaching each reachable state."""
    words = {a.initial: ""}
    queue = deque([a.initial])
    while queue:
        q = queue.popleft()
        for c, t in zip(a.alphabet, a.table[q]):
            if t not in words:
                words[t] = words[q] + c
                queue.append(t)
    return words


def coreachable(a: Dfa) -> set[int]:
    """States from which some final state is reachable."""
    preds: list[list[int]] = [[] for _ in a.states]
    for q, row in enumerate(a.table):
        for t in row:
            preds[t].append(q)
    seen = set(a.finals)
    queue = deque(seen)
    while queue:
        q = queue.popleft()
        for p in preds[q]:
            if p not in seen:
                seen.add(p)
                queue.append(p)
    return seen


def trim_check(a: Dfa) -> Check:
    acc = set(reachable(a))
    co = coreachable(a)
    for q in a.states:
        if q not in acc or q not in co:
            return Check(False, Certificate("state", q))
    return Check(True)


def canonical(a: Dfa) -> Dfa:
    """Renumber reachable states in BFS discovery order; drop the unreachable ones."""
    order = reachable(a)
    new = {q: i for i, q in enumerate(order)}
    table = [tuple(new[t] for t in a.table[q]) for q in order]
    finals = frozenset(new[q] for q in order if q in a.finals)
    return Dfa(a.alphabet, len(order), 0, finals, tuple(table))


def minimize(a: Dfa) -> Dfa:
    """Minimal complete DFA of L(a) in canonical numbering (Hopcroft refinement)."""
    a = canonical(a)
    n, k = a.n_states, len(a.alphabet)
    inverse = [[[] for _ in range(n)] for _ in range(k)]
    for q, row in enumerate(a.table):
        for i, t in enumerate(row):
            inverse[i][t].append(q)

    block_of = [0] * n
    finals = [q for q in range(n) if q in a.finals]
    others = [q for q in range(n) if q not in a.finals]
    blocks: list[set[int]] = [b for b in (set(finals), set(others)) if b]
    for b_id, b in enumerate(blocks):
        for q in b:
            block_of[q] = b_id
    work = set()
    if len(blocks) == 2:
        work.add(0 if len(blocks[0]) <= len(blocks[1]) else 1)
    while work:
        splitter = blocks[work.pop()]
        for i in range(k):
            pre = set()
            for t in splitter:
                pre.update(inverse[i][t])
            touched: dict[int, set[int]] = {}
            for q in pre:
                touched.setdefault(block_of[q], set()).add(q)
            for b_id, inside in touched.items():
                block = blocks[b_id]
                if len(inside) == len(block):
                    continue
                rest = block - inside
                blocks[b_id] = inside
                new_id = len(blocks)
                blocks.append(rest)
                for q in rest:
                    block_of[q] = new_id
                if b_id in work:
                    work.add(new_id)
                else:
                    work.add(b_id if len(inside) <= len(rest) else new_id)
    table = [[0] * k for _ in blocks]
    for b_id, block in enumerate(blocks):
        q = next(iter(block))
        table[b_id] = [block_of[t] for t in a.table[q]]
    quotient = Dfa(
        a.alphabet,
        len(blocks),
        block_of[a.initial],
        frozenset(block_of[q] for q in a.finals),
        tuple(tuple(r) for r in table),
    )
    return canonical(quotient)


def isomorphic(a: Dfa, b: Dfa) -> bool:
    """Equal up to renaming of reachable states."""
    return a.alphabet == b.alphabet and canonical(a) == canonical(b)


def is_minimal(a: Dfa) -> bool:
    return minimize(a).n_states == a.n_states and len(reachable(a)) == a.n_states


# ---------------------------------------------------------------------------
# products and language comparison


def _same_alphabet(a: Dfa, b: Dfa) -> None:
    if a.alphabet != b.alphabet:
        raise AlphabetMismatch(a.alphabet, b.alphabet)


class Mode(str, enum.Enum):
    INTER = "inter"
    UNION = "union"


def product(mode: Mode | str, parts: Sequence[Dfa]) -> Dfa:
    """Reachable product automaton for the intersection or union of ``parts``."""
    mode = Mode(mode)
    parts = list(parts)
    if not parts:
        raise EmptyList("product of no automata")
    for p in parts[1:]:
        _same_alphabet(parts[0], p)
    alphabet = parts[0].alphabet
    tables = [p.table for p in parts]
    finals = [p.finals for p in parts]
    test = all if mode is Mode.INTER else any

    start = tuple(p.initial for p in parts)
    ids = {start: 0}
    order = [start]
    rows = []
    i = 0
    while i < len(order):
        tup = order[i]
        i += 1
        row = []
        for li in range(len(alphabet)):
            nxt = tuple(t[q][li] for t, q in zip(tables, tup))
            j = ids.get(nxt)
            if j is None:
                j = ids[nxt] = len(order)
                order.append(nxt)
            row.append(j)
        rows.append(tuple(row))
    acc = frozenset(j for j, tup in enumerate(order) if test(q in f for q, f in zip(tup, finals)))
    return Dfa(alphabet, len(order), 0, acc, tuple(rows))


def _distinguish(a: Dfa, b: Dfa, bad) -> str | None:
    """Shortest, lexicographically least word w with bad(w in L(a), w in L(b))."""
    _same_alphabet(a, b)
    start = (a.initial, b.initial)
    parent: dict[tuple[int, int], tuple[tuple[int, int], str] | None] = {start: None}
    queue = deque([start])
    while queue:
        pair = queue.popleft()
        p, q = pair
        if bad(p in a.finals, q in b.finals):
            word = []
            while parent[pair] is not None:
                pair, c = parent[pair]
                word.append(c)
            return "".join(reversed(word))
        for c, tp, tq in zip(a.alphabet, a.table[p], b.table[q]):
            nxt = (tp, tq)
            if nxt not in parent:
                parent[nxt] = (pair, c)
                queue.append(nxt)
    return None


def equivalent(a: Dfa, b: Dfa) -> Check:
    w = _distinguish(a, b, lambda x, y: x != y)
    return Check(True) if w is None else Check(False, Certificate("word", w))


def includes(a: Dfa, b: Dfa) -> Check:
    """Is L(a) a subset of L(b)?  The certificate is a word of L(a) outside L(b)."""
    w = _distinguish(a, b, lambda x, y: x and not y)
    return Check(True) if w is None else Check(False, Certificate("word", w))


def accepts(a: Dfa, word: str) -> bool:
    return a.accepts(word)


# ---------------------------------------------------------------------------
# reachability order, ranks, linearity


class Relation(enum.Enum):
    LEQ = "q<=r"
    GEQ = "r<=q"
    BOTH = "both"
    INCOMPARABLE = "incomparable"


def _sccs(a: Dfa) -> list[list[int]]:
    """Strongly connected components in reverse topological order (Tarjan, iterative)."""
    index = {}
    low = {}
    on_stack = set()
    stack = []
    out = []
    counter = 0
    for root in a.states:
        if root in index:
            continue
        work = [(root, 0)]
        while work:
            v, i = work.pop()
            if i == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack.add(v)
            row = a.table[v]
            recurse = False
            while i < len(row):
                w = row[i]
                i += 1
                if w not in index:
                    work.append((v, i))
                    work.append((w, 0))
                    recurse = True
                    break
                if w in on_stack:
                    low[v] = min(low[v], index[w])
            if recurse:
                continue
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.append(w)
                    if w == v:
                        break
                out.append(sorted(comp))
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
    return out


class ReachOrder:
    """The accessibility preorder: q <= r iff some word leads from q to r.

    Stored as one bitset of descendants per state.
    """

    def __init__(self, a: Dfa):
        self.n = a.n_states
        desc = [0] * self.n
        for comp in _sccs(a):  # sinks first
            bits = 0
            for v in comp:
                bits |= 1 << v
            for v in comp:
                for t in a.table[v]:
                    bits |= desc[t]
            for v in comp:
                desc[v] = bits
        self._desc = desc
        anc = [0] * self.n
        for q, bits in enumerate(desc):
            m = bits
            while m:
                low = m & -m
                anc[low.bit_length() - 1] |= 1 << q
                m ^= low
        self._anc = anc

    def leq(self, q: int, r: int) -> bool:
        return bool(self._desc[q] >> r & 1)

    def lt(self, q: int, r: int) -> bool:
        return q != r and self.leq(q, r)

    def compare(self, q: int, r: int) -> Relation:
        fw, bw = self.leq(q, r), self.leq(r, q)
        if fw and bw:
            return Relation.BOTH
        if fw:
            return Relation.LEQ
        if bw:
            return Relation.GEQ
        return Relation.INCOMPARABLE

    def comparable(self, q: int, r: int) -> bool:
        return self.compare(q, r) is not Relation.INCOMPARABLE

    def desc(self, q: int) -> set[int]:
        return _bits(self._desc[q])

    def anc(self, q: int) -> set[int]:
        return _bits(self._anc[q])

    def family(self, q: int) -> set[int]:
        return _bits(self._desc[q] | self._anc[q])

    def incomparable_pair(self) -> tuple[int, int] | None:
        full = (1 << self.n) - 1
        for q in range(self.n):
            missing = full & ~(self._desc[q] | self._anc[q])
            if missing:
                r = (missing & -missing).bit_length() - 1
                return (q, r)
        return None


def _bits(m: int) -> set[int]:
    out = set()
    while m:
        low = m & -m
        out.add(low.bit_length() - 1)
        m ^= low
    return out


def reach_order(a: Dfa) -> ReachOrder:
    return ReachOrder(a)


def nontrivial_cycle(a: Dfa) -> list[int] | None:
    """A cycle visiting at least two states, or None if every cycle is a self-loop."""
    for comp in _sccs(a):
        if len(comp) > 1:
            members = set(comp)
            start = comp[0]
            parent = {start: None}
            queue = deque([start])
            while queue:
                q = queue.popleft()
                for t in a.table[q]:
                    if t == start:
                        cycle = [q]
                        while parent[cycle[-1]] is not None:
                            cycle.append(parent[cycle[-1]])
                        return list(reversed(cycle))
                    if t in members and t not in parent:
                        parent[t] = q
                        queue.append(t)
    return None


def is_partially_ordered(a: Dfa) -> bool:
    return nontrivial_cycle(a) is None


class RankTable(dict):
    """Map state -> length of a longest loop-free path from the initial state."""

    @property
    def counts(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for r in self.values():
            out[r] = out.get(r, 0) + 1
        return dict(sorted(out.items()))

    def states_at(self, rank: int) -> list[int]:
        return sorted(q for q, r in self.items() if r == rank)


def ranks(a: Dfa) -> RankTable:
    """Longest-path ranks of the states reachable from the initial state.

    Requires every cycle to be a self-loop, so that the remaining transition
    graph is acyclic and longest paths follow a topological order.
    """
    cycle = nontrivial_cycle(a)
    if cycle is not None:
        raise NotPartiallyOrdered(cycle)
    live = reachable(a)
    indeg = {q: 0 for q in live}
    succ = {q: sorted({t for t in a.table[q] if t != q}) for q in live}
    for q in live:
        for t in succ[q]:
            indeg[t] += 1
    rank = {q: 0 for q in live}
    ready = deque(q for q in live if indeg[q] == 0)
    while ready:
        q = ready.popleft()
        for t in succ[q]:
            rank[t] = max(rank[t], rank[q] + 1)
            indeg[t] -= 1
            if indeg[t] == 0:
                ready.append(t)
    return RankTable(sorted(rank.items()))


def is_linear(a: Dfa) -> Check:
    pair = reach_order(a).incomparable_pair()
    if pair is None:
        return Check(True)
    return Check(False, Certificate("state-pair", pair))


def linear_order(a: Dfa) -> list[int]:
    """States of a linear, partially ordered automaton listed q_0 < q_1 < ... < q_n."""
    rk = ranks(a)
    return sorted(a.states, key=lambda q: rk[q])
