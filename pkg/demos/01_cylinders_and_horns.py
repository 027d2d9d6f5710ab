# coding: utf-8

# # Cylinders and horns over Z
#
# Cyl_q(B) is the ring of normalized cochains on the q-simplex with
# coefficients in a DG ring B.  Everything below is exact integer arithmetic.

from dgcyl import check_axioms, cyl, horn_nerve
from dgcyl.intlin import cohomology
from dgcyl import certify_surjective_quasi_iso, restriction_hom

# Cyl_1 has the two vertices in degree 0 and the edge in degree 1.

C = cyl(1)
print(C.ids)
print("d δ(0) =", C.format(C.d(C.delta((0,)))))
print("d δ(1) =", C.format(C.d(C.delta((1,)))))

# Products follow the front face / back face rule, so δ(0)·δ(0,1) is the
# edge and δ(0,1)·δ(0) vanishes.

print(C.format(C.mul(C.delta((0,)), C.delta((0, 1)))))
print(C.format(C.mul(C.delta((0, 1)), C.delta((0,)))) or "0")

# The axioms are checked exhaustively on basis elements.

print(check_axioms(cyl(3)).summary())


# # The horn Λ^2_1
#
# Dropping the face opposite vertex 1 (and the interior) leaves two edges.

H = horn_nerve(2, 1)
print(H.ids)
print(H.ranks())

# Both rings are contractible, so their cohomology is Z in degree 0.

for ring in (cyl(2), H):
    h = cohomology(ring.underlying_complex())
    print(ring.name, {k: str(g) for k, g in h.items()})

# Restricting from the full simplex to the horn is onto with acyclic kernel.
# This certificate is what makes horn filling work.

cert = certify_surjective_quasi_iso(restriction_hom(2, 1))
print(cert.summary())
