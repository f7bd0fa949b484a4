"""Products with the two top codimension-2 classes.

The engine multiplies a class termwise by ``B'_{n-1,n-1}`` or by
``C_{n-1,n-1}``, the only multipliers with complete rule sets.  Base rules
(any output whose indices leave the valid range is the zero class):

    B'_{n-1,n-1} . A_{i,j}  = 2 B'_{i-1,j-1}
    B'_{n-1,n-1} . B_{i,j}  = 2 B_{i-2,j}
    B'_{n-1,n-1} . C_{i,i}  =   B'_{i-1,i-1}
    C_{n-1,n-1}  . A_{i,j}  =   A_{i-1,j-1}
    C_{n-1,n-1}  . B'_{i,j} =   B'_{i-1,j-1}

Products by ``B'_{n-1,n-1}`` of B' terms are not hard-coded: they are derived
from the basis-change identities

    B_{i,j} = 2 (B'_{i,j} - A_{i,j})        for i < j,
    B_{i,i} = 2 (B'_{i,i} - 2 C_{i,i})      for i > 0,

by expanding B' into A/B/C, applying the base rules, and converting any B
output back to MS coordinates.  Iterating reproduces the closed form

    B'_{n-1,n-1}^k = 2^(k-1) (B'_{n-k,n-k}
                     + sum_i (B'_{n-k-i,n-k+i} - A_{n-k-i,n-k+i}))

with the sum running to k-1 while 2k-1 <= n and to n-k once n <= 2k-1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .chow import BasisSymbol, Family, GradedClass
from .errors import (
    InvalidExponent,
    InvalidIndex,
    InvalidInput,
    UnsupportedFamily,
    UnsupportedMonomial,
    UnsupportedTerm,
)


def _symbol_or_zero(family: Family, i: int, j: int, n: int) -> list[tuple[Fraction, BasisSymbol]]:
    """One-term list, or empty when the indices fall out of range."""
    try:
        return [(Fraction(1), BasisSymbol(family, i, j, n))]
    except InvalidIndex:
        return []


def to_ms(x: BasisSymbol) -> GradedClass:
    """Rewrite a B-family symbol in MS coordinates.

    ``B_{i,j} -> 2B'_{i,j} - 2A_{i,j}`` for i < j,
    ``B_{i,i} -> 2B'_{i,i} - 4C_{i,i}`` for i > 0, and ``B_{0,0} -> B'_{0,0}``
    (both are the point class).
    """
    if x.family is not Family.B:
        raise UnsupportedFamily(f"to_ms converts family B only, got {x}")
    n = x.n
    if x.i == x.j == 0:
        return GradedClass(n, [(BasisSymbol(Family.BP, 0, 0, n), 1)])
    if x.i == x.j:
        return GradedClass(
            n,
            [(BasisSymbol(Family.BP, x.i, x.i, n), 2), (BasisSymbol(Family.C, x.i, x.i, n), -4)],
        )
    return GradedClass(
        n,
        [(BasisSymbol(Family.BP, x.i, x.j, n), 2), (BasisSymbol(Family.A, x.i, x.j, n), -2)],
    )


def _expand_bprime(sym: BasisSymbol) -> list[tuple[Fraction, BasisSymbol]]:
    """B' in terms of A, B, C: ``B'_{i,j} = B_{i,j}/2 + A_{i,j}`` (i < j),
    ``B'_{i,i} = B_{i,i}/2 + 2C_{i,i}`` (i > 0), ``B'_{0,0} = B_{0,0}``."""
    n, i, j = sym.n, sym.i, sym.j
    if i == j == 0:
        return [(Fraction(1), BasisSymbol(Family.B, 0, 0, n))]
    if i == j:
        return [
            (Fraction(1, 2), BasisSymbol(Family.B, i, i, n)),
            (Fraction(2), BasisSymbol(Family.C, i, i, n)),
        ]
    return [
        (Fraction(1, 2), BasisSymbol(Family.B, i, j, n)),
        (Fraction(1), BasisSymbol(Family.A, i, j, n)),
    ]


def _bprime_base_rule(sym: BasisSymbol) -> list[tuple[Fraction, BasisSymbol]]:
    """Base product rules for B'_{n-1,n-1} times an A, B or balanced C term."""
    n, i, j = sym.n, sym.i, sym.j
    if sym.family is Family.A:
        return [(2 * q, s) for q, s in _symbol_or_zero(Family.BP, i - 1, j - 1, n)]
    if sym.family is Family.B:
        return [(2 * q, s) for q, s in _symbol_or_zero(Family.B, i - 2, j, n)]
    if sym.family is Family.C:
        if i != j:
            raise UnsupportedTerm(f"no rule for B'_{{{n-1},{n-1}}} . {sym} (unbalanced C)")
        return _symbol_or_zero(Family.BP, i - 1, i - 1, n)
    raise UnsupportedTerm(f"no rule for B'_{{{n-1},{n-1}}} . {sym}")


def mul_bprime_top(X: GradedClass) -> GradedClass:
    """Multiply a class by ``B'_{n-1,n-1}``.

    Terms may be A, B, B', or balanced C; B' terms are expanded through the
    basis-change identities and the resulting B parts converted back, so the
    image of an MS-coordinate class stays in MS coordinates.
    """
    n = X.n
    out: list[tuple[BasisSymbol, Fraction]] = []
    for sym, c in X.items():
        if sym.family is Family.BP:
            for q, s in _expand_bprime(sym):
                for q2, s2 in _bprime_base_rule(s):
                    if s2.family is Family.B:
                        out.extend((t, c * q * q2 * v) for t, v in to_ms(s2).items())
                    else:
                        out.append((s2, c * q * q2))
        else:
            out.extend((s2, c * q2) for q2, s2 in _bprime_base_rule(sym))
    return GradedClass(n, out)


def mul_c_top(X: GradedClass) -> GradedClass:
    """Multiply a class with A and B' terms by ``C_{n-1,n-1}``.

    Both rules shift the index pair down by (1, 1) and truncate to zero.
    """
    n = X.n
    out: list[tuple[BasisSymbol, Fraction]] = []
    for sym, c in X.items():
        if sym.family not in (Family.A, Family.BP):
            raise UnsupportedTerm(f"no rule for C_{{{n-1},{n-1}}} . {sym}")
        for q, s in _symbol_or_zero(sym.family, sym.i - 1, sym.j - 1, n):
            out.append((s, c * q))
    return GradedClass(n, out)


def bprime_top_power(n: int, k: int) -> GradedClass:
    """Closed form of ``B'_{n-1,n-1}^k`` for 1 <= k <= n."""
    if not isinstance(n, int) or n < 1:
        raise InvalidInput(f"ambient dimension must be an integer >= 1, got {n!r}")
    if not isinstance(k, int) or not 1 <= k <= n:
        raise InvalidExponent(f"exponent {k!r} outside [1, {n}]")
    lead = Fraction(2) ** (k - 1)
    bound = k - 1 if 2 * k - 1 <= n else n - k
    terms: list[tuple[BasisSymbol, Fraction]] = []
    for q, s in _symbol_or_zero(Family.BP, n - k, n - k, n):
        terms.append((s, lead * q))
    for i in range(1, bound + 1):
        for q, s in _symbol_or_zero(Family.BP, n - k - i, n - k + i, n):
            terms.append((s, lead * q))
        for q, s in _symbol_or_zero(Family.A, n - k - i, n - k + i, n):
            terms.append((s, -lead * q))
    return GradedClass(n, terms)


@dataclass(frozen=True)
class MonomialSpec:
    """Exponents of a monomial ``B'_{n-1,n-1}^a . C_{n-1,n-1}^b``."""

    n: int
    a: int
    b: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise InvalidInput(f"ambient dimension must be an integer >= 1, got {self.n!r}")
        if not isinstance(self.a, int) or not isinstance(self.b, int) or self.a < 0 or self.b < 0:
            raise InvalidInput(f"exponents must be nonnegative integers, got a={self.a!r}, b={self.b!r}")
        if self.a + self.b > self.n:
            raise InvalidInput(
                f"total codimension {2 * (self.a + self.b)} exceeds the ring dimension {2 * self.n}"
            )


def eval_monomial(spec: MonomialSpec) -> GradedClass:
    """Evaluate ``B'_{n-1,n-1}^a . C_{n-1,n-1}^b`` (a >= 1) in MS coordinates.

    Pure powers of ``C_{n-1,n-1}`` have no rule and are refused.
    """
    if spec.a == 0:
        raise UnsupportedMonomial("no rule for pure powers of C_{n-1,n-1} (a = 0)")
    X = bprime_top_power(spec.n, spec.a)
    for _ in range(spec.b):
        X = mul_c_top(X)
    return X
