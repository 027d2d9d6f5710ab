"""The horn ring ``N(Lambda^q_i, B)``, its limit presentation, and the
restriction map from the cylinder."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import intlin
from .dgring import (BasisDGRing, BasisSymbol, CheckReport, DGRingHom, Element,
                     check_hom, compose_hom, identity_hom)
from .intlin import CohomologyGroup, IntCochainComplex, cohomology
from .nerve import NerveRing, cyl, induced_hom, nerve_ring
from .simplex import Delta, Horn, HornDiagram, coface, horn_diagram, identity


def horn_nerve(q: int, i: int, B: BasisDGRing | None = None) -> NerveRing:
    return nerve_ring(Horn(q, i), B)


def restriction_hom(q: int, i: int, B: BasisDGRing | None = None) -> DGRingHom:
    """``v: Cyl_q(B) -> N(Lambda^q_i, B)``, killing simplices outside the horn."""
    return induced_hom(identity(q), B, source=Horn(q, i), target=Delta(q))


def face_restriction(q: int, i: int, j: int, B: BasisDGRing | None = None) -> DGRingHom:
    """``N(Lambda^q_i, B) -> Cyl_{q-1}(B)`` along the face inclusion ``∂^j``."""
    if j == i or not 0 <= j <= q:
        raise ValueError(f"face {j} is not part of the horn Lambda^{q}_{i}")
    return induced_hom(coface(j, q), B, source=Delta(q - 1), target=Horn(q, i))


@dataclass
class QuasiIsoCertificate:
    """Three independent verdicts on a DG ring map ``f``.

    ``surjective``: every degree is onto over Z.  ``kernel_acyclic``: the
    subcomplex ``ker f`` has zero cohomology.  ``cohomology_match``: the
    cohomology groups of source and target agree.
    """

    name: str
    surjective: bool
    kernel_acyclic: bool
    cohomology_match: bool
    source_cohomology: dict[int, CohomologyGroup]
    target_cohomology: dict[int, CohomologyGroup]
    kernel_cohomology: dict[int, CohomologyGroup]
    kernel_ranks: dict[int, int]
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.surjective and self.kernel_acyclic and self.cohomology_match

    def __bool__(self):
        return self.ok

    def summary(self) -> str:
        def fmt(h):
            return ", ".join(f"H^{k}={g}" for k, g in h.items() if not g.is_zero) or "0"
        return (f"{self.name}: surjective={self.surjective} "
                f"ker acyclic={self.kernel_acyclic} "
                f"H(source)≅H(target)={self.cohomology_match} "
                f"[{fmt(self.source_cohomology)}]")


def kernel_complex(f: DGRingHom) -> tuple[IntCochainComplex, dict[int, np.ndarray]]:
    """The subcomplex ``ker f`` in a Z-basis, with the basis matrices."""
    degs = f.source.degrees
    if not degs:
        return IntCochainComplex({}), {}
    lo, hi = degs[0], degs[-1]
    basis = {}
    for k in range(lo, hi + 2):
        vecs = intlin.kernel_basis(f.matrix(k)) if f.source.rank(k) else []
        n = f.source.rank(k)
        basis[k] = (intlin.as_int_matrix(vecs).T.copy() if vecs else intlin.zeros(n, 0))
    diffs = {}
    for k in range(lo, hi + 1):
        image = f.source.diff_matrix(k) @ basis[k]
        snf = intlin.smith(basis[k + 1])
        cols = []
        for c in range(image.shape[1]):
            sol = intlin.solve(basis[k + 1], image[:, c], smith_form=snf)
            if sol is None:
                raise ArithmeticError(f"d does not preserve ker f in degree {k}")
            cols.append(sol)
        diffs[k] = (intlin.as_int_matrix(cols).T.copy() if cols
                    else intlin.zeros(basis[k + 1].shape[1], 0))
    ranks = {k: basis[k].shape[1] for k in range(lo, hi + 2)}
    return IntCochainComplex(ranks, diffs), basis


def certify_surjective_quasi_iso(f: DGRingHom) -> QuasiIsoCertificate:
    failures = []
    degs = sorted(set(f.source.degrees) | set(f.target.degrees))
    surjective = True
    for k in degs:
        if f.target.rank(k) and not intlin.is_surjective(f.matrix(k)):
            surjective = False
            failures.append(f"not surjective in degree {k}")
    kc, _ = kernel_complex(f)
    h_ker = cohomology(kc)
    acyclic = all(g.is_zero for g in h_ker.values())
    if not acyclic:
        failures.append("kernel has cohomology: " + ", ".join(
            f"H^{k}={g}" for k, g in h_ker.items() if not g.is_zero))
    h_src = cohomology(f.source.underlying_complex())
    h_tgt = cohomology(f.target.underlying_complex())

    def nonzero(h):
        return {k: g for k, g in h.items() if not g.is_zero}

    match = nonzero(h_src) == nonzero(h_tgt)
    if not match:
        failures.append("source and target cohomology differ")
    return QuasiIsoCertificate(f.name, surjective, acyclic, match, h_src, h_tgt, h_ker,
                               dict(kc.ranks), failures)


def product_ring(factors: dict[int, BasisDGRing], name: str = "") -> BasisDGRing:
    """Finite product of DG rings, symbols ``"j:sym"``."""
    symbols, diff, mul = [], {}, {}
    unit = Element()
    for j, R in factors.items():
        def tag(s, j=j):
            return f"{j}:{s}"
        symbols += [BasisSymbol(tag(s.id), s.degree) for s in R.symbols]
        unit = unit + Element((tag(s), c) for s, c in R.unit.items())
        for s, v in R.diff.items():
            diff[tag(s)] = Element((tag(t), c) for t, c in v.items())
        for (a, b), v in R.products.items():
            mul[(tag(a), tag(b))] = Element((tag(t), c) for t, c in v.items())
    return BasisDGRing(symbols, unit, diff, mul, name=name)


def projection(P: BasisDGRing, j: int, R: BasisDGRing) -> DGRingHom:
    prefix = f"{j}:"
    return DGRingHom(P, R, {s: Element.basis(s[len(prefix):])
                            for s in P.ids if s.startswith(prefix)}, name=f"pr_{j}")


class LimitError(ArithmeticError):
    pass


@dataclass
class LimitRing:
    """The equalizer of ``Π_{j∈J0} Cyl_{q-1}(B)`` along the horn diagram.

    ``kernel[k]`` holds a Z-basis of the equalizer in degree ``k`` as
    columns over the product's degree ``k`` basis; ``ring`` is the
    equalizer with its own DG structure; ``to_limit``/``from_limit`` are
    the comparison maps with the horn ring.
    """

    horn: Horn
    coeff: BasisDGRing
    diagram: HornDiagram
    product: BasisDGRing
    projections: dict[int, DGRingHom]
    constraints: dict[int, np.ndarray]
    kernel: dict[int, np.ndarray]
    ring: BasisDGRing
    inclusion: DGRingHom
    to_limit: DGRingHom
    from_limit: DGRingHom

    def components(self, t: Element) -> dict[int, Element]:
        amb = self.inclusion(t)
        return {j: pr(amb) for j, pr in self.projections.items()}

    def from_components(self, parts: dict[int, Element], degree: int) -> Element:
        """The equalizer element with the given components, if there is one."""
        amb = Element()
        for j, el in parts.items():
            amb = amb + Element((f"{j}:{s}", c) for s, c in el.items())
        sol = intlin.solve(self.kernel[degree], self.product.to_vector(amb, degree))
        if sol is None:
            raise LimitError("components do not agree on the overlaps")
        return self.ring.from_vector(sol, degree)


def _solve_columns(basis: np.ndarray, image: np.ndarray, what: str) -> np.ndarray:
    snf = intlin.smith(basis)
    cols = []
    for c in range(image.shape[1]):
        sol = intlin.solve(basis, image[:, c], smith_form=snf)
        if sol is None:
            raise LimitError(what)
        cols.append(sol)
    if not cols:
        return intlin.zeros(basis.shape[1], 0)
    return intlin.as_int_matrix(cols).T.copy()


def limit_ring(q: int, i: int, B: BasisDGRing | None = None) -> LimitRing:
    horn = Horn(q, i)
    diagram = horn_diagram(horn)
    C = cyl(q - 1, B)
    P = product_ring({j: C for j in diagram.J0}, name=f"Π Cyl_{q - 1}")
    projections = {j: projection(P, j, C) for j in diagram.J0}
    edges = {kl: (induced_hom(diagram.beta[kl], B), induced_hom(diagram.gamma[kl], B))
             for kl in diagram.J1}

    degs = P.degrees
    constraints, kernel = {}, {}
    for k in degs:
        blocks = []
        for (a, b), (beta, gamma) in edges.items():
            blocks.append(beta.matrix(k) @ projections[a].matrix(k)
                          - gamma.matrix(k) @ projections[b].matrix(k))
        if blocks:
            constraints[k] = np.vstack(blocks)
        else:
            constraints[k] = intlin.zeros(0, P.rank(k))
        vecs = intlin.kernel_basis(constraints[k])
        kernel[k] = intlin.as_int_matrix(vecs).T.copy() if vecs else intlin.zeros(P.rank(k), 0)

    def kid(k, n):
        return f"t{k}.{n}"

    symbols = [BasisSymbol(kid(k, n), k) for k in degs for n in range(kernel[k].shape[1])]

    def to_kernel(amb: Element, k: int, what: str) -> Element:
        if not amb:
            return Element()
        sol = _solve_columns(kernel[k], intlin.as_int_matrix([P.to_vector(amb, k)]).T, what)
        return Element((kid(k, n), v) for n, v in enumerate(sol[:, 0]))

    def ambient(k, n) -> Element:
        return P.from_vector(kernel[k][:, n], k)

    basis = {kid(k, n): (k, ambient(k, n)) for k in degs for n in range(kernel[k].shape[1])}
    diff = {s: to_kernel(P.d(v), k + 1, "equalizer not closed under d")
            for s, (k, v) in basis.items()}
    mul = {}
    for a, (ka, va) in basis.items():
        for b, (kb, vb) in basis.items():
            prod = P.mul(va, vb)
            if prod:
                mul[(a, b)] = to_kernel(prod, ka + kb, "equalizer not closed under products")
    unit = to_kernel(P.unit, 0, "unit is not in the equalizer")
    L = BasisDGRing(symbols, unit, diff, mul, name=f"lim Cyl({horn})")
    inclusion = DGRingHom(L, P, {s: v for s, (k, v) in basis.items()}, name="incl")

    H = horn_nerve(q, i, B)
    faces = {j: face_restriction(q, i, j, B) for j in diagram.J0}
    to_images = {}
    for s in H.ids:
        k = H.degree(s)
        amb = Element()
        for j, fr in faces.items():
            amb = amb + Element((f"{j}:{t}", c) for t, c in fr.image(s).items())
        to_images[s] = to_kernel(amb, k, "face restrictions of a horn cochain disagree")
    to_limit = DGRingHom(H, L, to_images, name="horn->lim")
    inverse = {}
    for k in degs:
        m = to_limit.matrix(k)
        if m.shape[0] != m.shape[1] or not intlin.is_unimodular(m):
            raise LimitError(f"comparison map is not invertible in degree {k}")
        inverse[k] = intlin.inverse(m)
    from_limit = DGRingHom.from_matrices(L, H, inverse, name="lim->horn")
    return LimitRing(horn, C.coeff, diagram, P, projections, constraints, kernel, L,
                     inclusion, to_limit, from_limit)


def limit_iso_report(lim: LimitRing) -> CheckReport:
    """Both comparison maps are DG ring maps and mutually inverse."""
    report = CheckReport(f"limit≅horn[{lim.horn}]")
    for f in (lim.to_limit, lim.from_limit, lim.inclusion):
        sub = check_hom(f)
        report.checked += sub.checked
        report.failures += [f"{f.name}: {m}" for m in sub.failures]
    for f, g, label in ((lim.from_limit, lim.to_limit, "horn"), (lim.to_limit, lim.from_limit, "lim")):
        comp = compose_hom(f, g)
        report.checked += 1
        if comp.images != identity_hom(comp.source).images:
            report.fail(f"round trip on the {label} side is not the identity")
    H = lim.to_limit.source
    for s in H.ids:
        report.checked += 1
        parts = lim.components(lim.to_limit.image(s))
        for j, pr in parts.items():
            expected = face_restriction(lim.horn.q, lim.horn.i, j, lim.coeff)(Element.basis(s))
            if pr != expected:
                report.fail(f"component {j} of {s} is not its face restriction")
    return report
