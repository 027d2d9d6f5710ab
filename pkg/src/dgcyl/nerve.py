"""Cochain DG rings ``N(X, B)`` of standard simplices and horns.

``N(X, B)`` is built on the nondegenerate simplices of ``X``: delta
functions ``δ_x`` with differential

    d(δ_y) = Σ_i (-1)^i Σ_{z : ∂_i z = y} δ_z

and Alexander-Whitney product ``δ_x * δ_y = Σ δ_w`` over the simplices
``w`` whose front face is ``x`` and back face is ``y``.  Coefficients
enter as ``N(X, Z) ⊗ B``.  ``normalization_oracle`` rebuilds the same
ring the long way (all simplices, kernels of codegeneracies) so the
shortcut can be cross-checked.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from . import intlin
from .dgring import (BasisDGRing, BasisSymbol, CheckReport, DGRingHom, Element,
                     compose_hom, identity_hom, integers, tensor)
from .simplex import (Delta, MonotoneMap, Simplex, Space, all_nondegenerate,
                      coface, codegeneracy, compose, degeneracy, face, format_simplex,
                      identity, is_nondegenerate, monotone_maps, parse_simplex)


def simplex_id(x: Simplex) -> str:
    return format_simplex(x)


class NerveRing(BasisDGRing):
    """``N(space, coeff)`` with symbols ``"(simplex)|b"``."""

    def __init__(self, base: BasisDGRing, space: Space, coeff: BasisDGRing):
        super().__init__(base.symbols, base.unit, base.diff, base.products, name=base.name)
        self.space = space
        self.coeff = coeff

    def sym(self, x: Simplex, b: str) -> str:
        return f"{simplex_id(x)}|{b}"

    @staticmethod
    def split(sym: str) -> tuple[Simplex, str]:
        head, _, tail = sym.partition("|")
        return parse_simplex(head), tail

    def delta(self, x: Simplex, b: Element | None = None) -> Element:
        """``δ_x ⊗ b``; ``b`` defaults to the unit of the coefficient ring."""
        b = self.coeff.unit if b is None else b
        return Element((self.sym(x, s), c) for s, c in b.items())

    def simplices(self) -> list[Simplex]:
        return all_nondegenerate(self.space)


def chain_ring(space: Space) -> BasisDGRing:
    """``R(X^nd, Z)`` with symbols named by simplices."""
    simplices = all_nondegenerate(space)
    symbols = [BasisSymbol(simplex_id(x), len(x) - 1) for x in simplices]
    unit = Element((simplex_id(x), 1) for x in simplices if len(x) == 1)

    diff: dict[str, dict[str, int]] = {}
    for z in simplices:
        if len(z) < 2:
            continue
        for i in range(len(z)):
            y = face(z, i)
            slot = diff.setdefault(simplex_id(y), {})
            slot[simplex_id(z)] = slot.get(simplex_id(z), 0) + (-1) ** i

    by_first: dict[int, list[Simplex]] = {}
    for y in simplices:
        by_first.setdefault(y[0], []).append(y)
    mul = {}
    for x in simplices:
        for y in by_first.get(x[-1], ()):
            w = x + y[1:]
            if space.contains(w):
                mul[(simplex_id(x), simplex_id(y))] = Element.basis(simplex_id(w))
    return BasisDGRing(symbols, unit, {k: Element(v) for k, v in diff.items()}, mul,
                       name=f"R({space})")


@lru_cache(maxsize=256)
def nerve_ring(space: Space, B: BasisDGRing | None = None) -> NerveRing:
    B = integers() if B is None else B
    base = tensor(chain_ring(space), B, name=f"N({space}, {B.name})")
    return NerveRing(base, space, B)


def cyl(q: int, B: BasisDGRing | None = None) -> NerveRing:
    """The ``q``-th cylinder ring ``N(Delta^q, B)``."""
    return nerve_ring(Delta(q), B)


def induced_hom(theta: MonotoneMap, B: BasisDGRing | None = None,
                source: Space | None = None, target: Space | None = None) -> DGRingHom:
    """Pullback along the simplicial map ``x -> theta ∘ x``.

    The simplicial map goes ``source -> target`` (defaults ``Delta^p`` and
    ``Delta^q`` for ``theta: [p] -> [q]``); the ring map goes the other
    way, ``N(target, B) -> N(source, B)``, with
    ``δ_y ⊗ b -> Σ_{x nondegenerate, theta∘x = y} δ_x ⊗ b``.
    """
    source = Delta(theta.p) if source is None else source
    target = Delta(theta.q) if target is None else target
    if source.q != theta.p or target.q != theta.q:
        raise ValueError(f"{theta} does not map [{source.q}] to [{target.q}]")
    src_ring, tgt_ring = nerve_ring(target, B), nerve_ring(source, B)
    bids = src_ring.coeff.ids
    fibres: dict[Simplex, list[Simplex]] = {}
    for x in all_nondegenerate(source):
        y = theta.apply(x)
        if not target.contains(y):
            raise ValueError(f"{theta} sends {format_simplex(x)} outside {target}")
        if is_nondegenerate(y):
            fibres.setdefault(y, []).append(x)
    images = {}
    for y in all_nondegenerate(target):
        for b in bids:
            xs = fibres.get(y)
            if xs:
                images[src_ring.sym(y, b)] = Element((tgt_ring.sym(x, b), 1) for x in xs)
    return DGRingHom(src_ring, tgt_ring, images,
                     name=f"N({theta}: {source} -> {target})")


def face_map(j: int, q: int, B: BasisDGRing | None = None) -> DGRingHom:
    """``Cyl_q(B) -> Cyl_{q-1}(B)`` along the coface ``∂^j``."""
    return induced_hom(coface(j, q), B)


def degeneracy_map(j: int, q: int, B: BasisDGRing | None = None) -> DGRingHom:
    """``Cyl_q(B) -> Cyl_{q+1}(B)`` along the codegeneracy ``s^j``."""
    return induced_hom(codegeneracy(j, q), B)


def simplicial_structure(B: BasisDGRing | None = None,
                         max_q: int = 3) -> dict[MonotoneMap, DGRingHom]:
    """Every structure map ``Cyl_q(B) -> Cyl_p(B)`` for ``p, q <= max_q``."""
    return {theta: induced_hom(theta, B)
            for p in range(max_q + 1) for q in range(max_q + 1)
            for theta in monotone_maps(p, q)}


# -- independent normalization route ---------------------------------------

@dataclass
class OracleResult:
    """Normalized cochains computed from all simplices.

    ``basis[p]`` has one column per basis vector of ``N^p`` written over
    ``levels[p]``; ``d[p]`` and ``products[(p, a, r, b)]`` are expressed
    in those bases.
    """

    space: Space
    max_dim: int
    levels: dict[int, list[Simplex]] = field(default_factory=dict)
    basis: dict[int, np.ndarray] = field(default_factory=dict)
    d: dict[int, np.ndarray] = field(default_factory=dict)
    products: dict[tuple[int, int, int, int], list[int]] = field(default_factory=dict)

    def rank(self, p: int) -> int:
        return self.basis[p].shape[1]


def _columns(vectors: list[list[int]], rows: int) -> np.ndarray:
    if not vectors:
        return intlin.zeros(rows, 0)
    return intlin.as_int_matrix(vectors).T.copy()


def normalization_oracle(space: Space, max_dim: int = 3, bound: int = 4) -> OracleResult:
    """Normalize the cosimplicial ring ``Hom(X_p, Z)`` by brute force.

    Enumerates every ``p``-simplex up to ``max_dim`` (degenerate ones
    included), takes the joint kernel of the codegeneracies as ``N^p``,
    and expresses the alternating coface sum and the front/back-face
    product in the resulting bases.
    """
    if max_dim > bound:
        raise ValueError(f"max_dim {max_dim} exceeds the enumeration bound {bound}")
    out = OracleResult(space, max_dim)
    levels = out.levels
    for p in range(max_dim + 1):
        levels[p] = list(space.simplices(p))
    pos = {p: {x: n for n, x in enumerate(levels[p])} for p in levels}

    for p in range(max_dim + 1):
        n = len(levels[p])
        rows = []
        if p > 0:
            for i in range(p):
                for x in levels[p - 1]:
                    row = [0] * n
                    row[pos[p][degeneracy(x, i)]] = 1
                    rows.append(row)
        if rows:
            out.basis[p] = _columns(intlin.kernel_basis(rows), n)
        else:
            out.basis[p] = intlin.eye(n)

    for p in range(max_dim):
        # coboundary on all cochains: (df)(z) = Σ_i (-1)^i f(∂_i z)
        full = intlin.zeros(len(levels[p + 1]), len(levels[p]))
        for r, z in enumerate(levels[p + 1]):
            for i in range(p + 2):
                full[r, pos[p][face(z, i)]] += (-1) ** i
        image = full @ out.basis[p]
        snf = intlin.smith(out.basis[p + 1])
        cols = []
        for c in range(image.shape[1]):
            sol = intlin.solve(out.basis[p + 1], image[:, c], smith_form=snf)
            if sol is None:
                raise ArithmeticError(f"coboundary leaves the normalized subgroup in degree {p}")
            cols.append(sol)
        out.d[p] = _columns(cols, out.rank(p + 1)) if cols else intlin.zeros(out.rank(p + 1), 0)

    smiths = {p: intlin.smith(out.basis[p]) for p in out.basis}
    for p in range(max_dim + 1):
        for r in range(max_dim + 1 - p):
            for a in range(out.rank(p)):
                fa = out.basis[p][:, a]
                for b in range(out.rank(r)):
                    fb = out.basis[r][:, b]
                    prod = [fa[pos[p][w[:p + 1]]] * fb[pos[r][w[p:]]] for w in levels[p + r]]
                    sol = intlin.solve(out.basis[p + r], prod, smith_form=smiths[p + r])
                    if sol is None:
                        raise ArithmeticError("product leaves the normalized subgroup")
                    out.products[(p, a, r, b)] = sol
    return out


def compare_oracle(oracle: OracleResult) -> CheckReport:
    """Check that restriction to nondegenerate simplices is a DG ring iso
    from the oracle's normalized cochains onto ``nerve_ring(space, Z)``."""
    space = oracle.space
    ring = nerve_ring(space)
    report = CheckReport(f"normalization[{space}, p<={oracle.max_dim}]")
    restrict = {}
    for p, P in oracle.basis.items():
        nd = space.nondegenerate(p)
        rows = [oracle.levels[p].index(x) for x in nd]
        restrict[p] = P[rows, :] if rows else intlin.zeros(0, P.shape[1])
        report.checked += 1
        if [ring.sym(x, "1") for x in nd] != ring.basis_in_degree(p):
            report.fail(f"degree {p}: ring basis is not the nondegenerate simplices")
        if restrict[p].shape[0] != restrict[p].shape[1] or not intlin.is_unimodular(restrict[p]):
            report.fail(f"degree {p}: restriction is not invertible over Z "
                        f"(shape {restrict[p].shape})")

    def to_ring(vec, p):
        return ring.from_vector(restrict[p] @ np.array(vec, dtype=object), p) if len(vec) else Element()

    for p, D in oracle.d.items():
        for c in range(oracle.rank(p)):
            report.checked += 1
            col = [int(v) for v in oracle.basis[p][:, c]]
            lhs = to_ring(list(D[:, c]), p + 1)
            rhs = ring.d(to_ring([1 if k == c else 0 for k in range(oracle.rank(p))], p))
            if lhs != rhs:
                report.fail(f"differential mismatch in degree {p} on basis vector {col}")
    for (p, a, r, b), vec in oracle.products.items():
        report.checked += 1
        ea = to_ring([1 if k == a else 0 for k in range(oracle.rank(p))], p)
        eb = to_ring([1 if k == b else 0 for k in range(oracle.rank(r))], r)
        if to_ring(vec, p + r) != ring.mul(ea, eb):
            report.fail(f"product mismatch for degrees ({p}, {r}), basis ({a}, {b})")
    return report


def coalgebra_duality_check(space: Space, max_dim: int | None = None) -> CheckReport:
    """Dualize the chain coalgebra on nondegenerate simplices.

    The chains carry ``∂y = Σ (-1)^i ∂_i y`` and the Alexander-Whitney
    coproduct ``AW(y) = Σ_i front_i(y) ⊗ back(y)``.  Checks ``∂∂ = 0``,
    coassociativity and the coderivation rule, then that the pairing
    ``<δ_x, y> = [x == y]`` (and ``<f ⊗ g, a ⊗ b> = f(a) g(b)``) carries
    ``∂`` and ``AW`` onto the differential and product of the ring.
    """
    max_dim = space.q if max_dim is None else max_dim
    ring = nerve_ring(space)
    report = CheckReport(f"coalgebra-duality[{space}, p<={max_dim}]")
    chains = {p: space.nondegenerate(p) for p in range(max_dim + 1)}

    def boundary(y: Simplex) -> dict[Simplex, int]:
        out: dict[Simplex, int] = {}
        if len(y) > 1:
            for i in range(len(y)):
                f = face(y, i)
                out[f] = out.get(f, 0) + (-1) ** i
        return {k: v for k, v in out.items() if v}

    def aw(y: Simplex) -> dict[tuple[Simplex, Simplex], int]:
        return {(y[:i + 1], y[i:]): 1 for i in range(len(y))}

    def linear(fn, chain):
        out: dict = {}
        for k, c in chain.items():
            for t, tc in fn(k).items():
                out[t] = out.get(t, 0) + c * tc
        return {k: v for k, v in out.items() if v}

    for p, ys in chains.items():
        for y in ys:
            report.checked += 3
            if linear(boundary, boundary(y)):
                report.fail(f"∂∂{format_simplex(y)} != 0")
            left: dict = {}
            right: dict = {}
            for (a, b), c in aw(y).items():
                for (a1, a2), c1 in aw(a).items():
                    left[(a1, a2, b)] = left.get((a1, a2, b), 0) + c * c1
                for (b1, b2), c2 in aw(b).items():
                    right[(a, b1, b2)] = right.get((a, b1, b2), 0) + c * c2
            if left != right:
                report.fail(f"AW not coassociative on {format_simplex(y)}")
            lhs = linear(aw, boundary(y))
            rhs: dict = {}
            for (a, b), c in aw(y).items():
                for a2, ca in boundary(a).items():
                    rhs[(a2, b)] = rhs.get((a2, b), 0) + c * ca
                sign = (-1) ** (len(a) - 1)
                for b2, cb in boundary(b).items():
                    rhs[(a, b2)] = rhs.get((a, b2), 0) + sign * c * cb
            rhs = {k: v for k, v in rhs.items() if v}
            if lhs != rhs:
                report.fail(f"∂ is not a coderivation of AW on {format_simplex(y)}")

    for p in range(max_dim):
        for y in chains[p]:
            dy = ring.d(ring.delta(y))
            for z in chains[p + 1]:
                report.checked += 1
                if dy[ring.sym(z, "1")] != boundary(z).get(y, 0):
                    report.fail(f"<d δ{format_simplex(y)}, {format_simplex(z)}> disagrees with ∂")
    for w_dim in range(max_dim + 1):
        for w in chains[w_dim]:
            cop = aw(w)
            for p in range(w_dim + 1):
                for x in chains[p]:
                    for y in chains[w_dim - p]:
                        report.checked += 1
                        prod = ring.mul(ring.delta(x), ring.delta(y))
                        if prod[ring.sym(w, "1")] != cop.get((x, y), 0):
                            report.fail(f"<δ{format_simplex(x)} * δ{format_simplex(y)}, "
                                        f"{format_simplex(w)}> disagrees with AW")
    return report


def _same(f: DGRingHom, g: DGRingHom) -> bool:
    if f.source != g.source or f.target != g.target:
        return False
    return all(np.array_equal(f.matrix(k), g.matrix(k)) for k in f.source.degrees)


def structure_identity_check(max_q: int = 3, B: BasisDGRing | None = None) -> CheckReport:
    """Verify that ``q -> Cyl_q(B)`` is a simplicial DG ring.

    Functoriality ``N(θ∘ψ) = N(ψ)∘N(θ)`` is checked for every composable
    pair of monotone maps between ``[0..max_q]``, and the five families of
    face/degeneracy identities are checked as integer matrix equalities.
    """
    report = CheckReport(f"simplicial-identities[Cyl_q, q<={max_q}]")
    maps = simplicial_structure(B, max_q)
    for q in range(max_q + 1):
        report.checked += 1
        if not _same(maps[identity(q)], identity_hom(cyl(q, B))):
            report.fail(f"N(id_[{q}]) is not the identity")
    for theta in maps:
        for psi in maps:
            if psi.q != theta.p:
                continue
            report.checked += 1
            if not _same(maps[compose(theta, psi)], compose_hom(maps[psi], maps[theta])):
                report.fail(f"N({theta}∘{psi}) != N({psi})∘N({theta})")

    def d(i, q):
        return face_map(i, q, B)

    def s(j, q):
        return degeneracy_map(j, q, B)

    def check(lhs, rhs, label):
        report.checked += 1
        if not _same(lhs, rhs):
            report.fail(label)

    for q in range(1, max_q + 1):
        for j in range(q + 1):
            for i in range(j):
                if q >= 2:
                    check(compose_hom(d(i, q - 1), d(j, q)), compose_hom(d(j - 1, q - 1), d(i, q)),
                          f"d{i}d{j} != d{j - 1}d{i} on Cyl_{q}")
    for q in range(max_q + 1):
        for j in range(q + 1):
            ident = identity_hom(cyl(q, B))
            check(compose_hom(d(j, q + 1), s(j, q)), ident, f"d{j}s{j} != id on Cyl_{q}")
            check(compose_hom(d(j + 1, q + 1), s(j, q)), ident, f"d{j + 1}s{j} != id on Cyl_{q}")
            for i in range(q + 2):
                if i < j:
                    check(compose_hom(d(i, q + 1), s(j, q)), compose_hom(s(j - 1, q - 1), d(i, q)),
                          f"d{i}s{j} != s{j - 1}d{i} on Cyl_{q}")
                elif i > j + 1:
                    check(compose_hom(d(i, q + 1), s(j, q)), compose_hom(s(j, q - 1), d(i - 1, q)),
                          f"d{i}s{j} != s{j}d{i - 1} on Cyl_{q}")
            for i in range(j + 1):
                check(compose_hom(s(i, q + 1), s(j, q)), compose_hom(s(j + 1, q + 1), s(i, q)),
                      f"s{i}s{j} != s{j + 1}s{i} on Cyl_{q}")
    return report
