"""Keller's cylinder as a 2x2 matrix DG ring and homotopies encoded as maps into it.

``Cyl_Kel(Z)`` has basis ``e0, e1`` in degree 0 and ``e01`` in degree 1,
multiplying like the matrix units of upper triangular 2x2 matrices, with
``d(e0) = -e01`` and ``d(e1) = e01``.  Over a coefficient ring ``C`` the
ring is ``Cyl_Kel(Z) ⊗ C`` with the matrix factor on the left, so symbols
read ``"e0|c"``, ``"e1|c"``, ``"e01|c"``.

A homotopy ``γ: f0 ⇒ f1`` of maps out of a semi-free ring is a degree -1
assignment on generators, extended to words by the twisted rule

    γ(x1⋯xn) = Σ_k (-1)^{|x1|+⋯+|x_{k-1}|} f0(x1⋯x_{k-1}) γ(x_k) f1(x_{k+1}⋯xn),

with ``dγ + γd = f1 - f0``.  It corresponds to the map

    f_γ(x) = e0⊗f0(x) + e1⊗f1(x) + e01⊗γ(x),

which is a DG ring map exactly when ``γ`` is such a homotopy.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Mapping

from .dgring import (BasisDGRing, BasisSymbol, CheckReport, DGRingHom, Element, check_hom,
                     compose_hom, identity_hom, integers, tensor)
from .nerve import cyl
from .semifree import NCPoly, SemiFreeHom, Word

E0, E1, E01 = "e0", "e1", "e01"


def keller_z() -> BasisDGRing:
    e = Element.basis
    return BasisDGRing(
        [BasisSymbol(E0, 0), BasisSymbol(E1, 0), BasisSymbol(E01, 1)],
        e(E0) + e(E1),
        {E0: e(E01, -1), E1: e(E01)},
        {(E0, E0): e(E0), (E1, E1): e(E1), (E0, E01): e(E01), (E01, E1): e(E01)},
        name="Cyl_Kel(Z)")


@lru_cache(maxsize=64)
def keller_cyl(B: BasisDGRing | None = None) -> BasisDGRing:
    B = integers() if B is None else B
    return tensor(keller_z(), B, name=f"Cyl_Kel({B.name})")


def split(sym: str) -> tuple[str, str]:
    e, _, b = sym.partition("|")
    return e, b


def corner(el: Element, which: str) -> Element:
    """The coefficient element in ``C`` of the ``which`` matrix unit."""
    out = {}
    for sym, c in el.items():
        e, b = split(sym)
        if e == which:
            out[b] = c
    return Element(out)


def place(which: str, el: Element) -> Element:
    return Element((f"{which}|{b}", c) for b, c in el.items())


def keller_to_cyl1(B: BasisDGRing | None = None) -> DGRingHom:
    """``e0 ↦ δ(0)``, ``e1 ↦ δ(1)``, ``e01 ↦ δ(0,1)``, tensored with ``B``."""
    K, C = keller_cyl(B), cyl(1, B)
    rename = {E0: "(0)", E1: "(1)", E01: "(0,1)"}
    images = {}
    for sym in K.ids:
        e, b = split(sym)
        images[sym] = Element.basis(f"{rename[e]}|{b}")
    return DGRingHom(K, C, images, name="Kel->Cyl_1")


def cyl1_to_keller(B: BasisDGRing | None = None) -> DGRingHom:
    K, C = keller_cyl(B), cyl(1, B)
    rename = {"(0)": E0, "(1)": E1, "(0,1)": E01}
    images = {}
    for sym in C.ids:
        x, b = split(sym)
        images[sym] = Element.basis(f"{rename[x]}|{b}")
    return DGRingHom(C, K, images, name="Cyl_1->Kel")


def keller_iso_report(B: BasisDGRing | None = None) -> CheckReport:
    """Both directions are DG ring maps and compose to identities."""
    f, g = keller_to_cyl1(B), cyl1_to_keller(B)
    report = CheckReport(f"Cyl_Kel≅Cyl_1[{f.source.name}]")
    for h in (f, g):
        sub = check_hom(h)
        report.checked += sub.checked
        report.failures += sub.failures
    for comp in (compose_hom(g, f), compose_hom(f, g)):
        report.checked += 1
        if comp.images != identity_hom(comp.source).images:
            report.fail(f"{comp.name} is not the identity")
    return report


# -- homotopies ------------------------------------------------------------

def extend_homotopy(f0: SemiFreeHom, f1: SemiFreeHom, gamma: Mapping[str, Element],
                    poly: NCPoly) -> Element:
    """``γ`` on a polynomial by the twisted rule."""
    T = f0.target
    P = f0.source
    out = Element()
    for word, coef in poly.items():
        sign = 1
        for k, x in enumerate(word):
            g = gamma.get(x, Element())
            if g:
                left = f0.eval(NCPoly({word[:k]: 1}))
                right = f1.eval(NCPoly({word[k + 1:]: 1}))
                out = out + T.mul(T.mul(left, g), right) * (sign * coef)
            if P.var(x).degree % 2:
                sign = -sign
    return out


def homotopy_defect(f0: SemiFreeHom, f1: SemiFreeHom, gamma: Mapping[str, Element],
                    poly: NCPoly) -> Element:
    """``dγ(p) + γ(dp) - (f1(p) - f0(p))``; zero exactly when the identity holds on ``p``."""
    T = f0.target
    lhs = T.d(extend_homotopy(f0, f1, gamma, poly)) + extend_homotopy(
        f0, f1, gamma, f0.source.extend_d(poly))
    return lhs - (f1.eval(poly) - f0.eval(poly))


def check_homotopy(f0: SemiFreeHom, f1: SemiFreeHom, gamma: Mapping[str, Element],
                   words: Iterable[Word] = ()) -> CheckReport:
    """The homotopy identity on every generator and on the extra ``words``."""
    report = CheckReport("homotopy")
    P, T = f0.source, f0.target
    if f1.source != P or f1.target != T:
        report.fail("f0 and f1 have different sources or targets")
        return report
    for x, g in gamma.items():
        report.checked += 1
        if not T.is_homogeneous(g, P.var(x).degree - 1):
            report.fail(f"γ({x}) is not of degree {P.var(x).degree - 1}")
    for word in [(v.name,) for v in P.vars] + [tuple(w) for w in words]:
        report.checked += 1
        defect = homotopy_defect(f0, f1, gamma, NCPoly({word: 1}))
        if defect:
            report.fail(f"dγ + γd != f1 - f0 on {'·'.join(word)}: off by {T.format(defect)}")
    return report


def encode_homotopy(f0: SemiFreeHom, f1: SemiFreeHom,
                    gamma: Mapping[str, Element]) -> SemiFreeHom:
    """The map ``f_γ`` into ``keller_cyl(C)``; valid iff ``γ`` is a homotopy."""
    if f0.source != f1.source or f0.target != f1.target:
        raise ValueError("f0 and f1 must share source and target")
    P, C = f0.source, f0.target
    K = keller_cyl(C)
    images = {}
    for v in P.vars:
        g = gamma.get(v.name, Element())
        if not C.is_homogeneous(g, v.degree - 1):
            raise ValueError(f"γ({v.name}) is not of degree {v.degree - 1}")
        images[v.name] = (place(E0, f0.image(v.name)) + place(E1, f1.image(v.name))
                          + place(E01, g))
    return SemiFreeHom(P, K, images, name="f_γ")


def decode_homotopy(h: SemiFreeHom, C: BasisDGRing) -> tuple[SemiFreeHom, SemiFreeHom,
                                                             dict[str, Element]]:
    """Read ``(f0, f1, γ)`` off the three matrix corners."""
    if h.target != keller_cyl(C):
        raise ValueError(f"{h!r} does not land in Cyl_Kel({C.name})")
    P = h.source
    f0 = SemiFreeHom(P, C, {x: corner(h.image(x), E0) for x in P.names}, name="f0")
    f1 = SemiFreeHom(P, C, {x: corner(h.image(x), E1) for x in P.names}, name="f1")
    gamma = {x: corner(h.image(x), E01) for x in P.names if corner(h.image(x), E01)}
    return f0, f1, gamma


# -- the mixed matrix ring used to compare two lifts ------------------------

def comparison_ring(v: DGRingHom) -> tuple[BasisDGRing, DGRingHom]:
    """For ``v: C̃ -> C`` the ring ``D`` of matrices ``[[a, c], [0, b]]``
    with ``a, b ∈ C̃`` and ``c ∈ C`` shifted up by one, together with the
    map ``w: Cyl_Kel(C̃) -> D`` that applies ``v`` in the corner.

    ``D`` multiplies through ``v``: ``(e0⊗a)(e01⊗c) = (-1)^|a| e01⊗v(a)c``
    and ``(e01⊗c)(e1⊗b) = e01⊗c v(b)``; ``d(e0⊗a) = -e01⊗v(a) + e0⊗da``,
    ``d(e1⊗a) = e01⊗v(a) + e1⊗da``, ``d(e01⊗c) = -e01⊗dc``.
    """
    Ct, C = v.source, v.target
    symbols = ([BasisSymbol(f"{E0}|{a.id}", a.degree) for a in Ct.symbols]
               + [BasisSymbol(f"{E1}|{a.id}", a.degree) for a in Ct.symbols]
               + [BasisSymbol(f"{E01}|{c.id}", c.degree + 1) for c in C.symbols])
    unit = place(E0, Ct.unit) + place(E1, Ct.unit)
    diff = {}
    for a in Ct.ids:
        da, va = Ct.d(Element.basis(a)), v.image(a)
        diff[f"{E0}|{a}"] = place(E0, da) - place(E01, va)
        diff[f"{E1}|{a}"] = place(E1, da) + place(E01, va)
    for c in C.ids:
        diff[f"{E01}|{c}"] = -place(E01, C.d(Element.basis(c)))
    mul = {}
    for (a, b), ab in Ct.products.items():
        mul[(f"{E0}|{a}", f"{E0}|{b}")] = place(E0, ab)
        mul[(f"{E1}|{a}", f"{E1}|{b}")] = place(E1, ab)
    for a in Ct.ids:
        va = v.image(a)
        sign = -1 if Ct.degree(a) % 2 else 1
        for c in C.ids:
            cb = Element.basis(c)
            left = C.mul(va, cb)
            if left:
                mul[(f"{E0}|{a}", f"{E01}|{c}")] = place(E01, left) * sign
            right = C.mul(cb, va)
            if right:
                mul[(f"{E01}|{c}", f"{E1}|{a}")] = place(E01, right)
    D = BasisDGRing(symbols, unit, diff, mul, name=f"D[{v.name}]")
    K = keller_cyl(Ct)
    images = {}
    for sym in K.ids:
        e, a = split(sym)
        images[sym] = place(E01, v.image(a)) if e == E01 else Element.basis(sym)
    return D, DGRingHom(K, D, images, name="w")
