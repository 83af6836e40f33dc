"""
How small are the matrix entries?
=================================

For each partition of n = 5 this scans every permutation and checks three
objects for entries outside {-1, 0, 1}:

* y(b), the coefficients of b in the projectors,
* x'(b), the coordinates of b in the renormalised projectors,
* M(b) = x'(b) g', the ordinary matrix representation.
"""

from snreps import Permutation, irrep_bundle, partitions, rep_matrix
from snreps.representations import reduced_entry_scan

for shape in partitions(5):
    scan = reduced_entry_scan(irrep_bundle(shape))
    print(f"{str(shape):<10} y: {len(scan['y_violations']):>3}  x': {len(scan['x_violations']):>3}  M: {len(scan['m_violations']):>3}  (of {scan['checked']})")

###############################################################################
# One x' with a 2 in it
# ---------------------
# When g' is not diagonal, x'(e) = g'^-1 and other x'(b) can pick up a 2,
# while M(b) stays in {-1, 0, 1}.

b = irrep_bundle((3, 2))
bad = reduced_entry_scan(b)["x_violations"][0]
r = rep_matrix(b, Permutation.parse(bad))
print(f"\nx'{bad} =", r.x_reduced.tolist())
print(f"M{bad}  =", r.conventional.tolist())
