"""Nef and effective cone membership for cycle classes in any codimension.

Run:  python demos/03_cones.py
"""

from hilb2 import (
    effectivity_pairings,
    enumerate_basis,
    is_effective,
    is_nef,
    linear_combine,
    to_ms,
    validate_symbol,
)

n = 2

# MS generators span the nef cones, so nef-ness in MS coordinates is just
# coefficient nonnegativity.
X = linear_combine([(2, validate_symbol("A", 0, 2, n)), (1, validate_symbol("C", 1, 1, n))])
Y = linear_combine([(1, validate_symbol("A", 0, 2, n)), (-1, validate_symbol("C", 1, 1, n))])
print(f"is_nef({X}) =", is_nef(X))
print(f"is_nef({Y}) =", is_nef(Y))
print()

# Effectivity is the dual test: pair against every MS generator of
# complementary grading.  B_{1,1} rewritten in MS coordinates is effective;
# its pairing vector shows it sits on two walls of the cone.
B11 = to_ms(validate_symbol("B", 1, 1, n))
print(f"B_{{1,1}} in MS coordinates: {B11}")
print("pairings against MS^2:")
for sym, value in effectivity_pairings(B11):
    print(f"   . {sym} = {value}")
print("is_effective:", is_effective(B11))
print()

Z = linear_combine([(-1, validate_symbol("A", 0, 2, n))])
print(f"is_effective({Z}) =", is_effective(Z))
print()

# Every single basis symbol behaves as expected.
print("all MS generators nef: ",
      all(is_nef(linear_combine([(1, s)])) for s in enumerate_basis(n, "MS")))
print("all converted B generators effective: ",
      all(is_effective(to_ms(s)) for s in enumerate_basis(n, "ES") if s.family.value == "B"))
