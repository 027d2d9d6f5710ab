"""Lifting maps out of semi-free DG rings through surjective quasi-isomorphisms.

Given ``v: C̃ -> C`` (degreewise surjective, acyclic kernel) and
``u: Ã -> C`` with ``Ã`` semi-free, ``lift_hom`` builds ``ũ: Ã -> C̃`` with
``v ∘ ũ = u`` one generator at a time, in filtration order.  Every step is
an integer linear solve and every result is re-checked by evaluation.
"""
from __future__ import annotations

from typing import Callable

import numpy as np

from . import intlin
from .dgring import DGRingHom, Element
from .horn import QuasiIsoCertificate, certify_surjective_quasi_iso
from .keller import (E0, E1, check_homotopy, comparison_ring, decode_homotopy, encode_homotopy,
                     place)
from .semifree import GradedVar, SemiFreeHom


class LiftingError(ArithmeticError):
    pass


class CertificateError(LiftingError):
    """The map being lifted through is not a surjective quasi-isomorphism."""


def _vec(ring, el: Element, k: int) -> np.ndarray:
    return np.array(ring.to_vector(el, k), dtype=object)


def _degree(ring, el: Element, degree: int | None) -> int:
    k = ring.degree_of(el) if degree is None else degree
    if k is None:
        raise ValueError("pass the degree explicitly for a zero element")
    if not ring.is_homogeneous(el, k):
        raise ValueError(f"element is not homogeneous of degree {k}")
    return k


def lift_cocycle(phi: DGRingHom, m: Element, degree: int | None = None) -> Element:
    """A cocycle ``m̃`` with ``phi(m̃) = m``, for a cocycle ``m``."""
    S, T = phi.source, phi.target
    k = _degree(T, m, degree)
    if T.d(m):
        raise LiftingError("lift_cocycle needs a cocycle")
    n = S.rank(k)
    D = S.diff_matrix(k)
    F = phi.matrix(k)
    A = np.vstack([D.reshape(S.rank(k + 1), n), F.reshape(T.rank(k), n)])
    b = [0] * S.rank(k + 1) + T.to_vector(m, k)
    x = intlin.solve(A, b)
    if x is None:
        raise CertificateError(f"no cocycle over the given one in degree {k}: "
                               f"cocycles do not map onto cocycles")
    mt = S.from_vector(x, k)
    if S.d(mt) or phi(mt) != m:
        raise LiftingError("lift_cocycle post-condition failed")
    return mt


def lift_boundary_in_kernel(phi: DGRingHom, m: Element, degree: int | None = None) -> Element:
    """``m′`` with ``d m′ = m`` and ``phi(m′) = 0``, for a cocycle ``m`` in ``ker phi``."""
    S = phi.source
    k = _degree(S, m, degree)
    if S.d(m) or phi(m):
        raise LiftingError("lift_boundary_in_kernel needs a cocycle in the kernel")
    if not m:
        return Element()
    K = intlin.kernel_basis(phi.matrix(k - 1)) if S.rank(k - 1) else []
    if not K:
        raise CertificateError(f"the kernel is zero in degree {k - 1} but has a cocycle above it")
    Kmat = intlin.as_int_matrix(K).T
    y = intlin.solve(S.diff_matrix(k - 1) @ Kmat, S.to_vector(m, k))
    if y is None:
        raise CertificateError(f"cocycle in the kernel is not a boundary there (degree {k})")
    mp = S.from_vector(Kmat @ np.array(y, dtype=object), k - 1)
    if S.d(mp) != m or phi(mp):
        raise LiftingError("lift_boundary_in_kernel post-condition failed")
    return mp


Adjust = Callable[[GradedVar], Element]


def lift_hom(v: DGRingHom, u: SemiFreeHom, certify: bool = True,
             certificate: QuasiIsoCertificate | None = None,
             adjust: Adjust | None = None) -> SemiFreeHom:
    """``ũ`` with ``v ∘ ũ = u``.

    Generators of filtration 0 are closed and get ``lift_cocycle``.  For
    the others: solve ``v(c̃) = u(x)``, correct by the kernel element
    ``c″`` whose boundary is ``ũ(dx) - d c̃``, so that ``v(c̃ + c″) = u(x)``
    still holds.  ``adjust`` may add a cocycle of ``ker v`` to each image,
    which keeps both conditions; it is there to produce other lifts.
    """
    if u.target != v.target:
        raise ValueError(f"{u!r} does not land in the target of {v!r}")
    bad = u.check()
    if not bad.ok:
        raise LiftingError("the map to lift is not a DG ring map: " + "; ".join(bad.failures))
    if certify:
        cert = certificate or certify_surjective_quasi_iso(v)
        if not cert.ok:
            raise CertificateError(f"{v.name}: " + "; ".join(cert.failures))
    S = v.source
    P = u.source
    images: dict[str, Element] = {}
    partial = SemiFreeHom(P, S, {})
    for x in P.vars:
        k = x.degree
        target = u.image(x.name)
        if x.filt == 0:
            img = lift_cocycle(v, target, k)
        else:
            if S.rank(k):
                sol = intlin.solve(v.matrix(k), v.target.to_vector(target, k))
            else:
                sol = [] if not target else None
            if sol is None:
                raise CertificateError(f"{v.name} is not onto in degree {k} (generator {x.name})")
            ct = S.from_vector(sol, k)
            cp = partial.eval(P.d(x.name)) - S.d(ct)
            img = ct + lift_boundary_in_kernel(v, cp, k + 1)
        if adjust is not None:
            z = adjust(x)
            if z and (S.d(z) or v(z) or not S.is_homogeneous(z, k)):
                raise LiftingError(f"adjustment for {x.name} is not a cocycle in ker v")
            img = img + z
        images[x.name] = img
        partial = SemiFreeHom(P, S, images)
        if v(img) != target:
            raise LiftingError(f"v(ũ({x.name})) != u({x.name})")
        if S.d(img) != partial.eval(P.d(x.name)):
            raise LiftingError(f"d ũ({x.name}) != ũ(d {x.name})")
    return SemiFreeHom(P, S, images, name=f"lift[{u.name}]")


def is_lift(v: DGRingHom, u: SemiFreeHom, ut: SemiFreeHom) -> bool:
    return ut.check().ok and all(v(ut.image(x)) == u.image(x) for x in u.source.names)


def homotopy_between_lifts(v: DGRingHom, u: SemiFreeHom, u0: SemiFreeHom,
                           u1: SemiFreeHom, certify: bool = True) -> dict[str, Element]:
    """A homotopy ``γ: u0 ⇒ u1`` with ``v ∘ γ = 0``.

    The pair ``(u0, u1)`` is a map into the comparison ring ``D``; lifting
    it through ``w: Cyl_Kel(C̃) -> D`` gives a map into the Keller cylinder
    whose corners are ``u0``, ``u1`` and the homotopy.
    """
    for ut in (u0, u1):
        if not is_lift(v, u, ut):
            raise LiftingError(f"{ut!r} is not a lift of {u!r} through {v.name}")
    D, w = comparison_ring(v)
    diag = SemiFreeHom(u.source, D, {x: place(E0, u0.image(x)) + place(E1, u1.image(x))
                                     for x in u.source.names}, name="diag")
    h = lift_hom(w, diag, certify=certify)
    f0, f1, gamma = decode_homotopy(h, v.source)
    if f0.images != u0.images or f1.images != u1.images:
        raise LiftingError("lift through w changed the diagonal")
    for x, g in gamma.items():
        if v(g):
            raise LiftingError(f"v(γ({x})) != 0")
    report = check_homotopy(u0, u1, gamma)
    if not report.ok:
        raise LiftingError("; ".join(report.failures))
    if not encode_homotopy(u0, u1, gamma).check().ok:
        raise LiftingError("encoded homotopy is not a DG ring map")
    return gamma
