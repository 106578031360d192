from __future__ import annotations

import os

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from idealdecomp.automata import from_table
from idealdecomp.ideals import WordSet, shuffle_ideal

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

ALPHABETS = ["a", "ab", "abc"]


@st.composite
def dfas(draw, max_states=5, alphabet=None):
    letters = alphabet or draw(st.sampled_from(ALPHABETS))
    n = draw(st.integers(1, max_states))
    table = [[draw(st.integers(0, n - 1)) for _ in letters] for _ in range(n)]
    finals = draw(st.sets(st.integers(0, n - 1)))
    initial = draw(st.integers(0, n - 1))
    return from_table(letters, table, initial, finals)


@st.composite
def word_sets(draw, max_words=3, max_len=4, alphabet=None, min_words=1):
    letters = alphabet or draw(st.sampled_from(ALPHABETS))
    words = draw(
        st.lists(st.text(alphabet=letters, max_size=max_len), min_size=min_words, max_size=max_words)
    )
    return WordSet(words, letters)


@st.composite
def ideals(draw, max_words=3, max_len=4, alphabet=None):
    return shuffle_ideal(draw(word_sets(max_words, max_len, alphabet)))


def nonlinear_ideals():
    from idealdecomp.automata import is_linear

    sets = word_sets(max_words=3, max_len=4, alphabet=None, min_words=2)
    return sets.map(shuffle_ideal).filter(lambda a: not is_linear(a.dfa))


filtered = settings(suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much])


# one line per acceptance criterion, printed at the end of the run
ACCEPTANCE: dict[str, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE, key=lambda k: (len(k), k)):
        ok, note = ACCEPTANCE[key]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {key}: {note}")
