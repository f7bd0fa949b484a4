"""Complementary-codimension intersection numbers and cone membership.

Two symbols ``X_{i,j}`` and ``Y_{k,l}`` have *complementary indices* when
``(k, l) = (n - j, n - i)``; every supported pairing vanishes away from that
pattern.  On complementary indices the nonzero products are

    MS x MS:  A.A = A.B' = B'.A = B'.C = C.B' = 1,
              B'.B' = 1  (2 when i = j),
    ES x MS:  A'.A = configurable positive diagonal (default 1),
              B.C  = 2,   C.B' = 1,

while A.C, C.C, A'.B', A'.C, B.A and B.B' are identically zero.  One corner
of the B.C block deviates: ``B_{0,0} . C_{n,n} = 1``, because ``B_{0,0}`` is
the point class (equal to ``B'_{0,0}``) and ``C_{n,n}`` the fundamental
class, so their product is the degree of a point; the multiplicity-2
argument behind the generic entry needs a ``C_{n-k,n-k}`` term that does not
exist in dimension zero.  Pairs whose
first argument is not an ES or MS family symbol, or whose second argument is
not an MS family symbol (so any ES x ES pairing, for instance), are refused
rather than guessed.

The ES/MS duality makes both cone tests coordinate checks: a codimension-k
class in MS coordinates is nef iff its coefficients are nonnegative, and a
dimension-k class is effective iff it pairs nonnegatively with every MS
generator of codimension k.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from .chow import BasisId, BasisSymbol, Family, GradedClass, enumerate_basis
from .errors import (
    InvalidGrading,
    InvalidInput,
    MixedAmbient,
    NotComplementary,
    UnsupportedBasisPair,
    UnsupportedFamilyPair,
    WrongBasis,
)

_MS_FAMILIES = frozenset({Family.A, Family.BP, Family.C})

# Supported (x.family, y.family) combos; value None marks an identically
# zero block, "cfg" the configurable A'.A diagonal.
_PAIR_TABLE = {
    (Family.A, Family.A): 1,
    (Family.A, Family.BP): 1,
    (Family.A, Family.C): None,
    (Family.BP, Family.A): 1,
    (Family.BP, Family.BP): 1,  # 2 on balanced indices, handled below
    (Family.BP, Family.C): 1,
    (Family.C, Family.A): None,
    (Family.C, Family.BP): 1,
    (Family.C, Family.C): None,
    (Family.AP, Family.A): "cfg",
    (Family.AP, Family.BP): None,
    (Family.AP, Family.C): None,
    (Family.B, Family.A): None,
    (Family.B, Family.BP): None,
    (Family.B, Family.C): 2,
}


@dataclass(frozen=True)
class PairingConfig:
    """Values for the diagonal entries the duality argument leaves free.

    ``ap_a_diagonal`` is the common value of ``A'_{i,j} . A_{n-j,n-i}``;
    only its positivity is pinned down, so it is configurable.
    """

    ap_a_diagonal: int = 1

    def __post_init__(self):
        if not isinstance(self.ap_a_diagonal, int) or self.ap_a_diagonal < 1:
            raise InvalidInput(f"ap_a_diagonal must be an integer >= 1, got {self.ap_a_diagonal!r}")


DEFAULT_CONFIG = PairingConfig()


def partner_indices(sym: BasisSymbol) -> tuple[int, int]:
    """The complementary index pair ``(n - j, n - i)`` of a symbol."""
    return sym.n - sym.j, sym.n - sym.i


def has_complementary_indices(x: BasisSymbol, y: BasisSymbol) -> bool:
    return (y.i, y.j) == partner_indices(x)


def pair_symbols(
    x: BasisSymbol, y: BasisSymbol, cfg: PairingConfig = DEFAULT_CONFIG
) -> Fraction:
    """Intersection number of two symbols of complementary codimension."""
    if x.n != y.n:
        raise MixedAmbient(f"{x} lives on P^{x.n}[2], {y} on P^{y.n}[2]")
    entry = _PAIR_TABLE.get((x.family, y.family))
    if (x.family, y.family) not in _PAIR_TABLE:
        raise UnsupportedFamilyPair(
            f"no intersection rule for {x.family.value} . {y.family.value}"
        )
    if x.codimension + y.codimension != 2 * x.n:
        raise NotComplementary(
            f"codim {x.codimension} + codim {y.codimension} != {2 * x.n} for {x} . {y}"
        )
    if entry is None or not has_complementary_indices(x, y):
        return Fraction(0)
    if entry == "cfg":
        return Fraction(cfg.ap_a_diagonal)
    if x.family is Family.BP and y.family is Family.BP and x.i == x.j:
        return Fraction(2)
    if x.family is Family.B and x.i == x.j == 0:
        return Fraction(1)  # point class against the fundamental class
    return Fraction(entry)


def pair_classes(
    X: GradedClass, Y: GradedClass, cfg: PairingConfig = DEFAULT_CONFIG
) -> Fraction:
    """Bilinear extension of :func:`pair_symbols` to homogeneous classes."""
    if X.is_zero or Y.is_zero:
        return Fraction(0)
    if X.n != Y.n:
        raise MixedAmbient(f"classes live on P^{X.n}[2] and P^{Y.n}[2]")
    cx, cy = X.codimension(), Y.codimension()  # raises NotHomogeneous
    if cx + cy != 2 * X.n:
        raise NotComplementary(f"codim {cx} + codim {cy} != {2 * X.n}")
    total = Fraction(0)
    for sx, a in X.items():
        for sy, b in Y.items():
            total += a * b * pair_symbols(sx, sy, cfg)
    return total


@dataclass(frozen=True)
class IntersectionMatrix:
    """A pairing matrix together with the symbols labelling its rows/columns."""

    n: int
    k: int
    rows: BasisId
    cols: BasisId
    row_symbols: tuple[BasisSymbol, ...]
    col_symbols: tuple[BasisSymbol, ...]
    entries: tuple[tuple[Fraction, ...], ...] = field(repr=False)

    def entry(self, r: int, c: int) -> Fraction:
        return self.entries[r][c]

    def is_diagonal(self) -> bool:
        return all(
            self.entries[r][c] == 0
            for r in range(len(self.row_symbols))
            for c in range(len(self.col_symbols))
            if r != c
        )


_PARTNER_FAMILY = {Family.AP: Family.A, Family.B: Family.C, Family.C: Family.BP}


def dual_generator(sym: BasisSymbol) -> BasisSymbol:
    """MS symbol pairing nonzero with an ES symbol: its complementary partner.

    The family swap is A' -> A, B -> C, C -> B'; the indices are the
    complementary pair, which is always in range for the swapped family.
    """
    if sym.family not in _PARTNER_FAMILY:
        raise UnsupportedFamilyPair(f"{sym} is not an ES basis symbol")
    i, j = partner_indices(sym)
    return BasisSymbol(_PARTNER_FAMILY[sym.family], i, j, sym.n)


def intersection_matrix(
    n: int,
    k: int,
    rows: Union[BasisId, str] = BasisId.ES,
    cols: Union[BasisId, str] = BasisId.MS,
    cfg: PairingConfig = DEFAULT_CONFIG,
) -> IntersectionMatrix:
    """Pairing matrix of the dimension-k ``rows`` basis against the
    codimension-k ``cols`` basis.

    For (MS, MS) both sides carry their canonical enumeration order.  For
    (ES, MS) the columns are listed as the complementary partners of the
    rows (a permutation of the canonical codimension-k enumeration), which
    is the order in which the matrix is literally diagonal.
    """
    rows, cols = BasisId(rows), BasisId(cols)
    if (rows, cols) not in ((BasisId.ES, BasisId.MS), (BasisId.MS, BasisId.MS)):
        raise UnsupportedBasisPair(f"no intersection matrix for ({rows.value}, {cols.value})")
    if not isinstance(k, int) or not 0 <= k <= 2 * n:
        raise InvalidGrading(f"grading {k!r} outside [0, {2 * n}]")
    row_syms = tuple(enumerate_basis(n, rows, dim=k))
    if rows is BasisId.ES:
        col_syms = tuple(dual_generator(s) for s in row_syms)
    else:
        col_syms = tuple(enumerate_basis(n, cols, codim=k))
    entries = tuple(
        tuple(pair_symbols(r, c, cfg) for c in col_syms) for r in row_syms
    )
    return IntersectionMatrix(n, k, rows, cols, row_syms, col_syms, entries)


def _require_ms(X: GradedClass, what: str) -> None:
    bad = [f.value for f in sorted(X.families() - _MS_FAMILIES, key=lambda f: f.value)]
    if bad:
        raise WrongBasis(f"{what} expects MS coordinates; found families {bad}")


def is_nef(X: GradedClass, k: int | None = None) -> bool:
    """Whether a homogeneous codimension-k class in MS coordinates is nef.

    The MS generators span the nef cone in each grading, so this is a
    nonnegativity check on the coefficients.
    """
    if X.is_zero:
        return True
    _require_ms(X, "is_nef")
    codim = X.codimension()  # raises NotHomogeneous
    if k is not None and k != codim:
        raise InvalidInput(f"class has codimension {codim}, not {k}")
    return all(c >= 0 for _, c in X.items())


def is_effective(
    X: GradedClass, k: int | None = None, cfg: PairingConfig = DEFAULT_CONFIG
) -> bool:
    """Whether a homogeneous dimension-k class in MS coordinates is effective.

    The effective cone in dimension k is dual to the nef cone in
    codimension k, so membership is a nonnegative pairing against every MS
    generator of codimension k.
    """
    if X.is_zero:
        return True
    _require_ms(X, "is_effective")
    dim = X.dimension()  # raises NotHomogeneous
    if k is not None and k != dim:
        raise InvalidInput(f"class has dimension {dim}, not {k}")
    return all(
        pair_classes(X, GradedClass.from_symbol(y), cfg) >= 0
        for y in enumerate_basis(X.n, BasisId.MS, codim=dim)
    )


def effectivity_pairings(
    X: GradedClass, cfg: PairingConfig = DEFAULT_CONFIG
) -> list[tuple[BasisSymbol, Fraction]]:
    """The pairing vector behind :func:`is_effective`, for reporting."""
    if X.is_zero:
        return []
    _require_ms(X, "effectivity_pairings")
    dim = X.dimension()
    return [
        (y, pair_classes(X, GradedClass.from_symbol(y), cfg))
        for y in enumerate_basis(X.n, BasisId.MS, codim=dim)
    ]
