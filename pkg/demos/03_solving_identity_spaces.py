"""
Solving for all identities of a multidegree
===========================================

Every word of the multidegree gets an unknown coefficient.  The vanishing
conditions are linear in those unknowns, and the identity space is the exact
nullspace of that system.
"""

from weylpi import Char, contains, named, render, solve
from weylpi.idsolve import characteristic_sweep

for d in [(1, 1, 1), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]:
    print(f"{d}: dimension by characteristic {characteristic_sweep(d)}")

# the single (2,2) identity, over Q
r = solve((2, 2))
for f in r.polynomials():
    print("(2,2) basis:", render(f))
print("contains Phi22:", contains(r, named("Phi22")))

# the extra (2,1,1) identity in characteristic 2
r2 = solve((2, 1, 1), Char(2))
print("(2,1,1) over F_2 contains [[x1,x2],[x1,x3]]:", contains(r2, named("CommSq211", Char(2))))
print("... and over Q:", contains(solve((2, 1, 1)), named("CommSq211")))

# reports serialise to a small JSON schema
print(solve((2, 2), Char(2)).to_json())
