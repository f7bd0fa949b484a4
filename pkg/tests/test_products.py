from fractions import Fraction

import pytest

from hilb2 import (
    GradedClass,
    InvalidExponent,
    InvalidInput,
    MonomialSpec,
    UnsupportedFamily,
    UnsupportedMonomial,
    UnsupportedTerm,
    bprime_top_power,
    enumerate_basis,
    eval_monomial,
    linear_combine,
    mul_bprime_top,
    mul_c_top,
    pair_symbols,
    to_ms,
    validate_symbol,
)

S = validate_symbol


def cls(*pairs):
    return linear_combine([(c, sym) for c, sym in pairs])


def test_to_ms_examples():
    assert to_ms(S("B", 1, 3, 4)) == cls((2, S("B'", 1, 3, 4)), (-2, S("A", 1, 3, 4)))
    assert to_ms(S("B", 1, 1, 2)) == cls((2, S("B'", 1, 1, 2)), (-4, S("C", 1, 1, 2)))
    assert to_ms(S("B", 0, 0, 3)) == GradedClass.from_symbol(S("B'", 0, 0, 3))


def test_to_ms_rejects_other_families():
    with pytest.raises(UnsupportedFamily):
        to_ms(S("A", 0, 1, 2))
    with pytest.raises(UnsupportedFamily):
        to_ms(S("B'", 1, 1, 2))


def test_to_ms_roundtrip_pairing():
    # the image has the same dimension and pairs against the complementary C
    # class exactly like the B.C table entry: 2 generically, 1 at the
    # point-class corner B_{0,0} (where C_{n,n} is the fundamental class)
    for n in range(2, 7):
        for sym in enumerate_basis(n, "ES"):
            if sym.family.value != "B":
                continue
            X = to_ms(sym)
            assert X.dimension() == sym.dimension
            target = S("C", n - sym.j, n - sym.i, n)
            total = sum(c * pair_symbols(s, target) for s, c in X.items())
            assert total == pair_symbols(sym, target)
            assert total == (1 if sym.dimension == 0 else 2)


def test_mul_bprime_top_examples():
    assert mul_bprime_top(GradedClass.from_symbol(S("A", 1, 3, 4))) == cls(
        (2, S("B'", 0, 2, 4))
    )
    assert mul_bprime_top(GradedClass.from_symbol(S("B", 1, 3, 4))).is_zero
    assert mul_bprime_top(GradedClass.from_symbol(S("B'", 2, 2, 4))) == cls(
        (2, S("B'", 1, 1, 4)), (2, S("B'", 0, 2, 4)), (-2, S("A", 0, 2, 4))
    )


def test_mul_bprime_top_b_family_shift():
    assert mul_bprime_top(GradedClass.from_symbol(S("B", 2, 3, 5))) == cls(
        (2, S("B", 0, 3, 5))
    )


def test_mul_bprime_top_balanced_c():
    assert mul_bprime_top(GradedClass.from_symbol(S("C", 3, 3, 5))) == cls(
        (1, S("B'", 2, 2, 5))
    )


def test_mul_bprime_top_rejects_unbalanced_c():
    with pytest.raises(UnsupportedTerm):
        mul_bprime_top(GradedClass.from_symbol(S("C", 1, 2, 4)))


def test_mul_c_top_examples():
    assert mul_c_top(GradedClass.from_symbol(S("A", 1, 3, 4))) == cls((1, S("A", 0, 2, 4)))
    assert mul_c_top(GradedClass.from_symbol(S("B'", 0, 2, 4))).is_zero
    assert mul_c_top(GradedClass.from_symbol(S("B'", 2, 2, 4))) == cls((1, S("B'", 1, 1, 4)))


def test_mul_c_top_rejects_other_families():
    with pytest.raises(UnsupportedTerm):
        mul_c_top(GradedClass.from_symbol(S("C", 1, 1, 3)))
    with pytest.raises(UnsupportedTerm):
        mul_c_top(GradedClass.from_symbol(S("B", 1, 1, 3)))


def test_bprime_top_power_examples():
    assert bprime_top_power(5, 2) == cls(
        (2, S("B'", 3, 3, 5)), (2, S("B'", 2, 4, 5)), (-2, S("A", 2, 4, 5))
    )
    for n in (1, 3, 6):
        assert bprime_top_power(n, 1) == GradedClass.from_symbol(S("B'", n - 1, n - 1, n))
    assert bprime_top_power(4, 3) == cls(
        (4, S("B'", 1, 1, 4)), (4, S("B'", 0, 2, 4)), (-4, S("A", 0, 2, 4))
    )


def test_bprime_top_power_bad_exponent():
    with pytest.raises(InvalidExponent):
        bprime_top_power(4, 0)
    with pytest.raises(InvalidExponent):
        bprime_top_power(4, 5)


def test_closed_form_equals_iteration():
    for n in range(1, 13):
        X = GradedClass.from_symbol(S("B'", n - 1, n - 1, n))
        for k in range(1, n + 1):
            assert bprime_top_power(n, k) == X, (n, k)
            X = mul_bprime_top(X)


def test_products_lower_dimension_by_two():
    for n in range(2, 8):
        for k in range(1, n):
            X = bprime_top_power(n, k)
            Y = mul_bprime_top(X)
            if not Y.is_zero:
                assert Y.dimension() == X.dimension() - 2
            Z = mul_c_top(X)
            if not Z.is_zero:
                assert Z.dimension() == X.dimension() - 2


def test_eval_monomial_examples():
    assert eval_monomial(MonomialSpec(4, 2, 0)) == cls(
        (2, S("B'", 2, 2, 4)), (2, S("B'", 1, 3, 4)), (-2, S("A", 1, 3, 4))
    )
    assert eval_monomial(MonomialSpec(4, 2, 1)) == cls(
        (2, S("B'", 1, 1, 4)), (2, S("B'", 0, 2, 4)), (-2, S("A", 0, 2, 4))
    )
    with pytest.raises(UnsupportedMonomial):
        eval_monomial(MonomialSpec(4, 0, 2))


def test_monomial_spec_validation():
    with pytest.raises(InvalidInput):
        MonomialSpec(4, 3, 2)  # codimension 10 > 8
    with pytest.raises(InvalidInput):
        MonomialSpec(4, -1, 0)
    MonomialSpec(4, 2, 2)  # boundary is fine


def test_eval_monomial_families_are_a_and_bprime():
    for n in range(2, 9):
        for a in range(1, n + 1):
            for b in range(0, n - a + 1):
                X = eval_monomial(MonomialSpec(n, a, b))
                assert all(s.family.value in ("A", "B'") for s, _ in X.items())


def test_triple_product_vanishing_small():
    # dimension-2m part of B'^k C^{n-m-k} pairs to zero with C_{n-2m,n}
    # whenever k <= m
    from hilb2 import pair_classes

    for n in range(4, 9):
        for m in range(1, n):
            if 2 * m + 1 >= n:
                break
            target = GradedClass.from_symbol(S("C", n - 2 * m, n, n))
            for k in range(1, m + 1):
                X = eval_monomial(MonomialSpec(n, k, n - m - k))
                assert pair_classes(X, target) == 0, (n, m, k)
