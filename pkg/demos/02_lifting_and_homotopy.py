# coding: utf-8

# # Lifting a map through a surjective quasi-isomorphism
#
# A semi-free ring is presented by generators and differentials.  Here x is
# a closed generator of degree 1 and y has d y = x.

from dgcyl import GradedVar, NCPoly, SemiFreeHom, SemiFreePresentation
from dgcyl.horn import restriction_hom
from dgcyl.keller import check_homotopy
from dgcyl.lifting import homotopy_between_lifts, is_lift, lift_hom

P = SemiFreePresentation([GradedVar("x", 1, 0), GradedVar("y", 0, 1)],
                         {"y": NCPoly.var("x")})
print(P.dumps())

# A map into the horn ring Λ^3_1 is fixed by where y goes.

v = restriction_hom(3, 1)
H = v.target
u = SemiFreeHom(P, H, {"x": H.d(H.delta((1,))), "y": H.delta((1,))}, name="u")
print(u.check().summary())

ut = lift_hom(v, u)
for name in P.names:
    print(name, "->", v.source.format(ut.image(name)))
print("lift:", is_lift(v, u, ut))


# # Two lifts are homotopic
#
# Adding a boundary from the kernel of v changes the lift but not v∘ũ.  A
# closed generator of degree 2 has room for that.

w = SemiFreePresentation([GradedVar("w", 2, 0)], {})
v = restriction_hom(2, 1)
C = v.source
u = SemiFreeHom(w, v.target, {})
u0 = lift_hom(v, u)
u1 = lift_hom(v, u, adjust=lambda gen: C.d(C.delta((0, 2))))
print("u0(w) =", C.format(u0.image("w")) or "0")
print("u1(w) =", C.format(u1.image("w")))

gamma = homotopy_between_lifts(v, u, u0, u1)
print("γ(w) =", C.format(gamma["w"]))
print(check_homotopy(u0, u1, gamma).summary())
