"""Decomposition result type shared by the intersection and union routines."""

from __future__ import annotations

from dataclasses import dataclass, field

from .automata import Dfa, Mode, equivalent, product
from .errors import VerificationError


@dataclass(frozen=True)
class Component:
    dfa: Dfa
    tag: str  # "family:rho=3", "reduced:k=1", "principal:w=ab", "leaf"; nested with "/"


@dataclass
class Decomposition:
    mode: Mode
    source: Dfa
    components: list[Component] = field(default_factory=list)
    verified: bool = False
    # number of components before equivalent ones were merged
    raw_count: int = 0

    @property
    def combinator(self) -> str:
        if len(self.components) == 1 and self.components[0].tag == "leaf":
            return "leaf"
        return self.mode.value

    def __len__(self):
        return len(self.components)

    def dfas(self) -> list[Dfa]:
        return [c.dfa for c in self.components]

    def verify(self) -> Decomposition:
        """Check the product language against the source; raises on mismatch."""
        ok, cert = equivalent(product(self.mode, self.dfas()), self.source)
        if not ok:
            raise VerificationError(f"{self.mode.value} of components differs from source on {cert}")
        self.verified = True
        return self
