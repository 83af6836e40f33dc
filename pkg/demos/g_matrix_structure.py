"""
Where g' stops being diagonal
=============================

Scans every partition up to n = 8 and reports which g' matrices are
diagonal and which inverses leave {-1, 0, 1}.  Only the coefficient of the
identity in each projector is needed, so this runs well past the sizes at
which the projectors themselves could be expanded.
"""

from snreps import irrep_bundle
from snreps.projectors import structure_scan

scan = structure_scan(8)

print(f"{'n':>2}  {'partition':<16} {'dim':>4}  diagonal  max|g'^-1|")
for row in scan:
    print(f"{row['n']:>2}  {row['partition']:<16} {row['dim']:>4}  {str(row['gDiagonal']):<8}  {row['gInverseMaxAbs']}")

###############################################################################
# The first off-diagonal entry
# ----------------------------

first = next(r for r in scan if not r["gDiagonal"])
print("\nfirst non-diagonal g':", first["n"], first["partition"])
b = irrep_bundle((3, 2))
for t in b.tableaux:
    print("  ", t)
print("g' =", b.g_reduced.tolist())

###############################################################################
# The first inverse with a 2
# --------------------------

first = next((r for r in scan if not r["gInverseReduced"]), None)
print("first g'^-1 outside {-1,0,1}:", first and (first["n"], first["partition"], first["gInverseMaxAbs"]))
