"""Torus-fixed points of ``P^{n[2]}`` and their cell classes.

The fixed points of the standard torus action are the monomial ideals of
two points.  They come in three kinds, each indexed by ``0 <= i < j <= n``,
so there are ``3*C(n+1,2)`` of them: ``I_{i,j}`` (quadric generator
``x_i*x_j``), ``J_{i,j}`` (generator ``x_j^2``, the variable ``x_i`` free)
and ``K_{i,j}`` (generator ``x_i^2``, the variable ``x_j`` free).

Each fixed point carries the class of the closure of its attracting cell,
which is how the BB basis arises:

    I_{i,j} -> A_{i,j}     (cell dimension i+j)
    J_{i,j} -> B_{i,j-1}   (cell dimension i+j-1)
    K_{i,j} -> C_{i+1,j}   (cell dimension i+j+1)
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .chow import BasisSymbol, Family
from .errors import InvalidIndex, InvalidInput


class IdealKind(str, Enum):
    I = "I"
    J = "J"
    K = "K"


@dataclass(frozen=True)
class MonomialIdealDescriptor:
    """One torus-fixed monomial ideal, identified by (kind, i, j)."""

    kind: IdealKind
    i: int
    j: int
    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise InvalidInput(f"ambient dimension must be an integer >= 1, got {self.n!r}")
        if not 0 <= self.i < self.j <= self.n:
            raise InvalidIndex(
                f"{self.kind.value}_{{{self.i},{self.j}}} needs 0 <= i < j <= {self.n}"
            )

    def generators(self) -> list[str]:
        """Generators of the ideal, rendered as monomial strings."""
        quad = {
            IdealKind.I: f"x{self.i}*x{self.j}",
            IdealKind.J: f"x{self.j}^2",
            IdealKind.K: f"x{self.i}^2",
        }[self.kind]
        linear = [f"x{k}" for k in range(self.n + 1) if k not in (self.i, self.j)]
        return [quad] + linear

    def __str__(self):
        return f"{self.kind.value}_{{{self.i},{self.j}}}"


def enumerate_fixed_points(n: int) -> list[MonomialIdealDescriptor]:
    """All ``3*C(n+1,2)`` fixed points, kinds I, J, K in turn, (i, j) lex."""
    if not isinstance(n, int) or n < 1:
        raise InvalidInput(f"ambient dimension must be an integer >= 1, got {n!r}")
    return [
        MonomialIdealDescriptor(kind, i, j, n)
        for kind in IdealKind
        for i in range(n)
        for j in range(i + 1, n + 1)
    ]


def bb_cell_of(fp: MonomialIdealDescriptor) -> tuple[BasisSymbol, int]:
    """Class and dimension of the attracting cell of a fixed point."""
    if fp.kind is IdealKind.I:
        sym = BasisSymbol(Family.A, fp.i, fp.j, fp.n)
    elif fp.kind is IdealKind.J:
        sym = BasisSymbol(Family.B, fp.i, fp.j - 1, fp.n)
    else:
        sym = BasisSymbol(Family.C, fp.i + 1, fp.j, fp.n)
    return sym, sym.dimension
