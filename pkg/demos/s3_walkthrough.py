"""
S_3 from tableaux to matrices
=============================

Builds every projector of S_3, inverts the coordinate system, and reads
off the two-dimensional representation and the character table.
"""

from snreps import Permutation, irrep_bundle, partitions, projector_expand, rep_matrix
from snreps.characters import character_table, scaled_unit
from snreps.perm import format_element

# Permutations in one-line notation; products apply the left factor first.
s = [Permutation.parse(t) for t in ("123", "132", "213", "231", "312", "321")]
print("s2 * s3 =", s[1] * s[2])

###############################################################################
# Standard tableaux and projectors
# --------------------------------
# Each shape has one projector p_ij per ordered pair of standard tableaux.

for shape in partitions(3):
    b = irrep_bundle(shape)
    print(f"shape {shape}: tableaux", ", ".join(str(t) for t in b.tableaux))
    for i in range(b.dim):
        for j in range(b.dim):
            p = projector_expand(b, i, j)
            print(f"  p{i + 1}{j + 1} =", format_element(p))

###############################################################################
# The g matrices
# --------------
# p_ij p_kl = g_jk p_il.  For S_3 every g is diagonal.

for shape in partitions(3):
    b = irrep_bundle(shape)
    print(shape, "g =", b.g_unnormalized().tolist(), " g' =", b.g_reduced.tolist())

###############################################################################
# Representation matrices
# -----------------------
# The coordinates of each permutation in the renormalised projectors give
# integer matrices directly; for (2,1) they are the familiar 2x2 ones.

b = irrep_bundle((2, 1))
for k, perm in enumerate(s, start=1):
    print(f"s{k} = {perm}:", rep_matrix(b, perm).x_reduced.tolist())

a, c = s[1], s[2]
lhs = rep_matrix(b, a).conventional @ rep_matrix(b, c).conventional
print("M(s2) M(s3) == M(s2 s3):", lhs == rep_matrix(b, a * c).conventional)

###############################################################################
# Units and characters
# --------------------
# V = sum (g'^-1)_ij p_ij is central; its coefficients are the characters.

print("V(2,1) =", format_element(scaled_unit(b)))
print(character_table(3).to_text())
