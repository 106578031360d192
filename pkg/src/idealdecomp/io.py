"""Reading and writing automata, decompositions, word lists and DOT graphs."""

from __future__ import annotations

import json
from collections import defaultdict
from pathlib import Path

from .automata import Dfa, to_json, validate
from .decomposition import Decomposition
from .errors import FormatError
from .ideals import WordSet

SCHEMA_VERSION = 1


def parse_automaton(text: str) -> Dfa:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from None
    return validate(raw)


def load_automaton(path: str | Path) -> Dfa:
    return parse_automaton(Path(path).read_text(encoding="utf-8"))


def _dump(obj, indent: str = "") -> str:
    # one transition per line: readable diffs and stable bytes
    if isinstance(obj, dict):
        inner = indent + "  "
        items = [f"{inner}{json.dumps(k)}: {_dump(v, inner)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + indent + "}"
    if isinstance(obj, list) and obj and all(isinstance(x, (list, dict)) for x in obj):
        inner = indent + "  "
        return "[\n" + ",\n".join(inner + _dump(x, inner) for x in obj) + "\n" + indent + "]"
    return json.dumps(obj, ensure_ascii=False)


def dumps_automaton(a: Dfa) -> str:
    return _dump(to_json(a)) + "\n"


def save_automaton(a: Dfa, path: str | Path) -> None:
    Path(path).write_text(dumps_automaton(a), encoding="utf-8")


def decomposition_to_json(dec: Decomposition) -> dict:
    return {
        "mode": dec.mode.value,
        "source": to_json(dec.source),
        "components": [{"tag": c.tag, "automaton": to_json(c.dfa)} for c in dec.components],
        "verified": dec.verified,
    }


def dumps_decomposition(dec: Decomposition) -> str:
    return _dump(decomposition_to_json(dec)) + "\n"


def to_dot(a: Dfa, name: str = "A") -> str:
    """Graphviz text; nodes and edges sorted so the output is reproducible."""
    grouped: dict[tuple[int, int], list[str]] = defaultdict(list)
    for q, c, t in a.edges():
        grouped[(q, t)].append(c)
    lines = [f"digraph {json.dumps(name)} {{", "  rankdir=LR;", '  __start [shape=point, label=""];']
    for q in a.states:
        shape = "doublecircle" if q in a.finals else "circle"
        lines.append(f'  {q} [shape={shape}, label="q{q}"];')
    lines.append(f"  __start -> {a.initial};")
    for (q, t), letters in sorted(grouped.items()):
        lines.append(f"  {q} -> {t} [label={json.dumps(','.join(sorted(letters)))}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def parse_wordset(text: str) -> WordSet:
    """One word per line; ``#`` starts a comment; ``@alphabet abc`` fixes the alphabet.

    A line holding only ``ε`` or ``""`` denotes the empty word.
    """
    alphabet = None
    words = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("@alphabet"):
            letters = line[len("@alphabet") :].strip()
            if not letters:
                raise FormatError(f"line {lineno}: empty @alphabet header")
            alphabet = letters
            continue
        if line.startswith("@"):
            raise FormatError(f"line {lineno}: unknown directive {line.split()[0]!r}")
        if any(ch.isspace() for ch in line):
            raise FormatError(f"line {lineno}: words may not contain spaces")
        words.append("" if line in ("ε", '""') else line)
    return WordSet(words, alphabet)


def load_wordset(path: str | Path) -> WordSet:
    return parse_wordset(Path(path).read_text(encoding="utf-8"))
