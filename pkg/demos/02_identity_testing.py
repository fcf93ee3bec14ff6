"""
Testing polynomial identities
=============================

A polynomial f in the free algebra is an identity for span{x^i y} when it
vanishes at every tuple of spanning elements.  Each variable gets a symbolic
index, so the check covers all tuples at once.
"""

from weylpi import Char, eval_concrete, eval_symbolic, is_identity, named, parse

# a degree-two polynomial is never an identity; the witness can be replayed
report = is_identity(parse("x1*x2 - x2*x1"))
print(report.to_text())
w = report.witness
print("replayed value:", eval_concrete(w.polynomial, w.point), "| recheck:", w.recheck())

# the standard polynomial of degree three is one
print("St3:", is_identity(parse("St3(x1,x2,x3)")).verdict)

# symbolic evaluation: each coefficient is a polynomial in the indices i1, i2, ...
print("x1*x2 at (c_i1, c_i2) =", eval_symbolic(parse("x1*x2")))

# some elements are identities only in characteristic 2
for name in ("Phi22", "Delta", "Psi", "CommSq"):
    verdicts = {p: is_identity(named(name, Char(p))).verdict for p in (0, 2, 3)}
    print(f"{name:7s}", verdicts)

rep = is_identity(named("Delta"))
print("Delta over Q fails at", rep.witness.point, "with value", rep.witness.value)
