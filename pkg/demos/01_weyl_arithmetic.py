"""
Arithmetic in the Weyl algebra
==============================

Elements of A_1 are kept in normal form, sums of x^i y^j.  The relation
yx = xy + 1 is applied whenever a y sits to the left of an x.
"""

from weylpi import Char, WeylElement, normal_form, quartic_closed_form, weyl_mul
from weylpi.weyl import weyl_commutator

# normal-order a word in the generators
print("yyxx =", normal_form("yyxx"))
print("yyxx over F_2 =", normal_form("yyxx", Char(2)))

# the spanning elements c_i = x^i y and a product of two of them
c1, c2 = WeylElement.basis(1), WeylElement.basis(2)
print("c1 c2 =", weyl_mul(c1, c2))

# the commutator keeps us inside span{c_i}: [c_i, c_j] = (j - i) c_{i+j-1}
print("[c1, c2] =", weyl_commutator(c1, c2))
print("[c0, c3] =", weyl_commutator(WeylElement.basis(0), WeylElement.basis(3)))

# a product of four spanning elements in closed form, checked against the chain
q = quartic_closed_form(1, 2, 0, 3)
chain = c1 * c2 * WeylElement.basis(0) * WeylElement.basis(3)
print("c1 c2 c0 c3 =", q)
print("closed form agrees with the chain:", q == chain)

# x^p is central in characteristic p
for p in (2, 3, 5):
    c = Char(p)
    xp, y = WeylElement.monomial(p, 0, c), WeylElement.monomial(0, 1, c)
    print(f"[x^{p}, y] over F_{p} =", weyl_commutator(xp, y))
