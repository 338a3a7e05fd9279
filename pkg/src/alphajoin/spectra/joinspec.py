"""Join descriptions: the join kind, both factors and the class of G2."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from ..errors import InvalidInputError, PreconditionError
from ..graph import Graph, JoinKind, complete_bipartite_parts, regularity


@dataclass(frozen=True)
class Regular:
    t2: int

    def __str__(self) -> str:
        return f"regular({self.t2})"


@dataclass(frozen=True)
class CompleteBipartite:
    a: int
    b: int

    def __str__(self) -> str:
        return f"complete_bipartite({self.a},{self.b})"


@dataclass(frozen=True)
class Arbitrary:
    def __str__(self) -> str:
        return "arbitrary"


G2Class = Union[Regular, CompleteBipartite, Arbitrary]


def classify_g2(g2: Graph, prefer: str = "regular") -> G2Class:
    """Most specific class of ``g2``.

    ``K_{a,a}`` is both regular and complete bipartite; ``prefer`` picks which.
    """
    if prefer not in ("bipartite", "regular"):
        raise ValueError(f"prefer must be 'bipartite' or 'regular', got {prefer!r}")
    parts = complete_bipartite_parts(g2)
    t2 = regularity(g2) if g2.n > 0 else None
    if parts is not None and (prefer == "bipartite" or t2 is None):
        return CompleteBipartite(*parts)
    if t2 is not None:
        return Regular(t2)
    return Arbitrary()


@dataclass(frozen=True)
class JoinSpec:
    """A join together with the structural facts the formulas rely on.

    ``g2class`` defaults to :func:`classify_g2`; an explicit class is checked
    against ``g2``.  ``Arbitrary()`` is always accepted.
    """

    kind: JoinKind
    g1: Graph
    g2: Graph
    g2class: G2Class = field(default=None)

    def __post_init__(self):
        if not isinstance(self.kind, JoinKind):
            object.__setattr__(self, "kind", JoinKind.parse(self.kind))
        t1 = regularity(self.g1)
        if self.g1.m < 1:
            raise PreconditionError("G1 must have at least one edge")
        if t1 is None:
            raise PreconditionError("G1 must be regular")
        if self.g2class is None:
            object.__setattr__(self, "g2class", classify_g2(self.g2))
        cls = self.g2class
        if isinstance(cls, Regular):
            if self.g2.n == 0 or regularity(self.g2) != cls.t2:
                raise InvalidInputError(f"G2 is not {cls.t2}-regular")
        elif isinstance(cls, CompleteBipartite):
            want = (min(cls.a, cls.b), max(cls.a, cls.b))
            if complete_bipartite_parts(self.g2) != want:
                raise InvalidInputError(f"G2 is not K_{{{cls.a},{cls.b}}}")
        elif not isinstance(cls, Arbitrary):
            raise InvalidInputError(f"unknown G2 class {cls!r}")

    @property
    def t1(self) -> int:
        return regularity(self.g1)

    @property
    def n1(self) -> int:
        return self.g1.n

    @property
    def m1(self) -> int:
        return self.g1.m

    @property
    def n2(self) -> int:
        return self.g2.n

    @property
    def dim(self) -> int:
        return self.g1.n + self.g1.m + self.g2.n
