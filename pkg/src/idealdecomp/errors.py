"""Exception hierarchy.

Every error that a caller may want to handle carries the offending element
(or a :class:`~idealdecomp.automata.Certificate`) as attributes, so the CLI
can turn it into a machine-readable report.
"""


class AutomatonError(Exception):
    """Base class for everything raised by this package."""


class FormatError(AutomatonError):
    """Malformed automaton description (bad JSON shape, bad letters...)."""


class MissingTransition(FormatError):
    def __init__(self, state, letter):
        super().__init__(f"missing transition ({state}, {letter!r})")
        self.state = state
        self.letter = letter


class DuplicateTransition(FormatError):
    def __init__(self, state, letter):
        super().__init__(f"duplicate transition ({state}, {letter!r})")
        self.state = state
        self.letter = letter


class BadIndex(FormatError):
    def __init__(self, what, index, bound):
        super().__init__(f"{what} index {index!r} out of range 0..{bound - 1}")
        self.what = what
        self.index = index


class UnknownLetter(AutomatonError):
    def __init__(self, letter):
        super().__init__(f"letter {letter!r} not in alphabet")
        self.letter = letter


class AlphabetMismatch(AutomatonError):
    def __init__(self, left, right):
        super().__init__(f"alphabets differ: {''.join(left)!r} vs {''.join(right)!r}")


class EmptyList(AutomatonError):
    pass


class NotPartiallyOrdered(AutomatonError):
    def __init__(self, cycle):
        super().__init__(f"non-trivial cycle through states {list(cycle)}")
        self.cycle = tuple(cycle)


class EmptyLanguage(AutomatonError):
    pass


class NotIdeal(AutomatonError):
    """The language is not upward closed.

    ``word`` is accepted, ``upper`` is ``word`` with one letter inserted and is
    rejected.
    """

    def __init__(self, word, upper):
        super().__init__(f"{word!r} is accepted but its upper-word {upper!r} is not")
        self.word = word
        self.upper = upper


class LinearInput(AutomatonError):
    pass


class NonLinearInput(AutomatonError):
    def __init__(self, pair=None):
        msg = "automaton is not linear"
        if pair is not None:
            msg += f": states {pair[0]} and {pair[1]} are incomparable"
        super().__init__(msg)
        self.pair = pair


class NotInSeparatorSet(AutomatonError):
    pass


class NoDampingPattern(AutomatonError):
    pass


class DampingPresent(AutomatonError):
    def __init__(self, k):
        super().__init__(f"damping pattern between q{k - 1} and q{k}")
        self.k = k


class IndexOutOfRange(AutomatonError):
    pass


class PrimeInput(AutomatonError):
    pass


class TooLarge(AutomatonError):
    pass


class VerificationError(AutomatonError):
    """A construction produced a result that should be impossible.

    Only raised when internal verification is enabled; indicates a bug.
    """
