"""
Rebuilding the coefficient matrices
===================================

Three square matrices certify that the degree-four identity spaces are no
larger than claimed.  They are rebuilt here from evaluations at explicit
basis tuples and compared entry by entry.
"""

from weylpi import assemble_paper_matrix
from weylpi.idsolve import REFERENCE_MATRICES

for label in ("P44", "P45", "P45S"):
    m = assemble_paper_matrix(label)
    rows, cols = m.shape
    where = "Z" if m.char.p == 0 else f"F_{m.char.p}"
    print(f"{label}: {rows}x{cols}, det = {m.det()} over {where},"
          f" matches reference: {m.entries == REFERENCE_MATRICES[label]}")

for row in assemble_paper_matrix("P44").entries:
    print(" ".join(f"{v:3d}" for v in row))
