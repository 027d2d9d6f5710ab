import random

import pytest

from dgcyl.dgring import DGRingHom, Element
from dgcyl.horn import product_ring, projection, restriction_hom
from dgcyl.keller import check_homotopy
from dgcyl.lifting import (CertificateError, LiftingError, homotopy_between_lifts, is_lift,
                           lift_boundary_in_kernel, lift_cocycle, lift_hom)
from dgcyl.nerve import cyl, face_map
from dgcyl.sampling import kernel_boundary, random_presentation, sample_hom
from dgcyl.semifree import GradedVar, NCPoly, SemiFreeHom, SemiFreePresentation


def xy():
    return SemiFreePresentation([GradedVar("x", 1, 0), GradedVar("y", 0, 1)],
                                {"y": NCPoly.var("x")})


def test_lift_cocycle_unit():
    v = restriction_hom(2, 1)
    assert lift_cocycle(v, v.target.unit) == v.source.unit


def test_lift_cocycle_rejects_non_cocycle():
    v = restriction_hom(2, 1)
    with pytest.raises(LiftingError):
        lift_cocycle(v, v.target.delta((1,)))


def test_lift_boundary_in_kernel():
    v = restriction_hom(2, 1)
    C = v.source
    m = C.delta((0, 1, 2))
    mp = lift_boundary_in_kernel(v, m)
    assert C.d(mp) == m and not v(mp)
    assert mp in (C.delta((0, 2)), -C.delta((0, 2)))
    assert lift_boundary_in_kernel(v, Element(), 1) == 0


def test_lift_boundary_needs_kernel_cocycle():
    v = restriction_hom(2, 1)
    with pytest.raises(LiftingError):
        lift_boundary_in_kernel(v, v.source.delta((0, 1)))


def test_lift_xy_over_horn():
    v = restriction_hom(3, 1)
    H = v.target
    u = SemiFreeHom(xy(), H, {"x": H.d(H.delta((1,))), "y": H.delta((1,))})
    ut = lift_hom(v, u)
    assert is_lift(v, u, ut)
    C = v.source
    # δ(1) already lifts itself and the lift of x is then forced
    assert ut.image("y") == C.delta((1,))
    assert ut.image("x") == C.d(C.delta((1,)))


def test_lift_rejects_non_surjective():
    Z, C = cyl(0), cyl(1)
    incl = DGRingHom(Z, C, {"(0)|1": C.unit})
    u = SemiFreeHom(xy(), C, {"x": C.delta((0, 1)), "y": C.delta((1,))})
    with pytest.raises(CertificateError):
        lift_hom(incl, u)
    # no certificate check: degree 1 is simply not reachable
    with pytest.raises(CertificateError):
        lift_hom(incl, u, certify=False)


def test_lift_rejects_surjection_with_kernel_cohomology():
    # projecting a product of two points onto one is onto but leaves H^0
    # in the kernel; collapsing an edge onto a vertex is fine
    Z = cyl(0)
    p = projection(product_ring({0: Z, 1: Z}), 0, Z)
    u = SemiFreeHom(SemiFreePresentation([GradedVar("t", 0, 0)], {}), Z, {"t": Z.unit})
    with pytest.raises(CertificateError):
        lift_hom(p, u)
    assert is_lift(face_map(1, 1), u, lift_hom(face_map(1, 1), u))


def test_lift_rejects_bad_input():
    v = restriction_hom(2, 1)
    H = v.target
    bad = SemiFreeHom(xy(), H, {"x": H.delta((0, 1)), "y": H.delta((1,))})
    with pytest.raises(LiftingError):
        lift_hom(v, bad)


def test_random_lifts():
    rng = random.Random(7)
    v = restriction_hom(2, 0)
    for _ in range(15):
        P = random_presentation(rng)
        u = sample_hom(rng, P, v.target)
        ut = lift_hom(v, u)
        assert is_lift(v, u, ut)


def test_adjusted_lift_and_homotopy():
    v = restriction_hom(2, 1)
    P = SemiFreePresentation([GradedVar("w", 2, 0)], {})
    u = SemiFreeHom(P, v.target, {})
    u0 = lift_hom(v, u)
    C = v.source
    u1 = lift_hom(v, u, adjust=lambda x: C.d(C.delta((0, 2))))
    assert u0 != u1
    gamma = homotopy_between_lifts(v, u, u0, u1)
    assert check_homotopy(u0, u1, gamma).ok
    assert gamma["w"] in (C.delta((0, 2)), -C.delta((0, 2)))
    assert all(not v(g) for g in gamma.values())


def test_homotopy_between_equal_lifts():
    rng = random.Random(1)
    v = restriction_hom(3, 2)
    P = random_presentation(rng)
    u = sample_hom(rng, P, v.target)
    ut = lift_hom(v, u)
    gamma = homotopy_between_lifts(v, u, ut, ut)
    assert check_homotopy(ut, ut, gamma).ok


def test_random_homotopies_between_distinct_lifts():
    rng = random.Random(4)
    v = restriction_hom(2, 1)
    found = 0
    for _ in range(40):
        P = random_presentation(rng)
        u = sample_hom(rng, P, v.target)
        u0 = lift_hom(v, u)
        u1 = lift_hom(v, u, adjust=lambda x: kernel_boundary(rng, v, x.degree))
        if u0 == u1:
            continue
        found += 1
        gamma = homotopy_between_lifts(v, u, u0, u1)
        assert check_homotopy(u0, u1, gamma).ok
    assert found >= 3


def test_homotopy_rejects_non_lifts():
    v = restriction_hom(2, 1)
    H, C = v.target, v.source
    u = SemiFreeHom(xy(), H, {"x": H.d(H.delta((1,))), "y": H.delta((1,))})
    wrong = SemiFreeHom(xy(), C, {"x": C.d(C.delta((2,))), "y": C.delta((2,))})
    with pytest.raises(LiftingError):
        homotopy_between_lifts(v, u, lift_hom(v, u), wrong)
