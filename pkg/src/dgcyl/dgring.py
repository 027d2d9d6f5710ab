"""DG rings over Z presented by a finite graded basis and structure constants."""
from __future__ import annotations

import json
from collections.abc import Mapping
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .intlin import IntCochainComplex, as_int_matrix, zeros


class Element(Mapping):
    """A sparse integer combination of basis symbol ids.

    Zero coefficients are never stored.  Elements add, subtract and scale
    by integers on their own; products and differentials go through the
    ring (``ring.mul``, ``ring.d``).
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping | Iterable | None = None):
        acc: dict[str, int] = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for key, coef in items:
                coef = int(coef)
                if coef:
                    acc[key] = acc.get(key, 0) + coef
        self._terms = {k: c for k, c in acc.items() if c}

    @classmethod
    def basis(cls, sym: str, coef: int = 1) -> Element:
        return cls({sym: coef})

    def __getitem__(self, key):
        return self._terms.get(key, 0)

    def __contains__(self, key):
        return key in self._terms

    def __iter__(self):
        return iter(self._terms)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self._terms
        if isinstance(other, Mapping):
            return self._terms == {k: v for k, v in other.items() if v}
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        out = dict(self._terms)
        for k, c in other.items():
            out[k] = out.get(k, 0) + c
        return Element(out)

    __radd__ = __add__

    def __neg__(self):
        return Element({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-Element(other))

    def __mul__(self, scalar):
        if not isinstance(scalar, (int, np.integer)):
            return NotImplemented
        return Element({k: c * int(scalar) for k, c in self._terms.items()})

    __rmul__ = __mul__

    def __repr__(self):
        if not self._terms:
            return "Element(0)"
        return "Element(" + " ".join(f"{c:+d}*{k}" for k, c in self._terms.items()) + ")"


ZERO = Element()


@dataclass(frozen=True)
class BasisSymbol:
    id: str
    degree: int


@dataclass
class CheckReport:
    """Outcome of an exhaustive identity check; ``failures`` carry witnesses."""

    name: str
    failures: list[str] = field(default_factory=list)
    checked: int = 0

    @property
    def ok(self) -> bool:
        return not self.failures

    def __bool__(self):
        return self.ok

    def fail(self, message: str):
        self.failures.append(message)

    def summary(self) -> str:
        status = "pass" if self.ok else f"FAIL ({len(self.failures)})"
        return f"{self.name}: {status} [{self.checked} identities]"


class BasisDGRing:
    """A DG ring free of finite rank over Z, given by structure constants.

    ``diff`` maps a symbol id to its differential, ``mul`` maps an ordered
    pair of ids to their product (stored as ``products``); absent entries
    are zero.  The symbol order is canonical: by degree, then by the order
    the constructor was given.  Instances are treated as immutable.
    """

    def __init__(self, symbols: Iterable[BasisSymbol], unit: Element,
                 diff: Mapping[str, Element], mul: Mapping[tuple[str, str], Element],
                 name: str = ""):
        syms = list(symbols)
        order = sorted(range(len(syms)), key=lambda k: (syms[k].degree, k))
        self.symbols: tuple[BasisSymbol, ...] = tuple(syms[k] for k in order)
        self._index = {s.id: n for n, s in enumerate(self.symbols)}
        if len(self._index) != len(self.symbols):
            raise ValueError("basis symbol ids must be unique")
        self._degree = {s.id: s.degree for s in self.symbols}
        self._by_degree: dict[int, list[str]] = {}
        for s in self.symbols:
            self._by_degree.setdefault(s.degree, []).append(s.id)
        self.unit = self._own(unit)
        self.diff = {k: self._own(v) for k, v in diff.items() if v}
        self.products = {k: self._own(v) for k, v in mul.items() if v}
        for a, b in self.products:
            self._check_ids((a, b))
        self._check_ids(self.diff)
        self.name = name
        self._key = None

    # -- basis bookkeeping -------------------------------------------------
    def _check_ids(self, ids):
        for k in ids:
            if k not in self._index:
                raise KeyError(f"unknown basis symbol {k!r} in ring {self.name!r}")

    def _own(self, el) -> Element:
        el = el if isinstance(el, Element) else Element(el)
        self._check_ids(el)
        return el

    def __contains__(self, sym):
        return sym in self._index

    def __len__(self):
        return len(self.symbols)

    @property
    def ids(self) -> list[str]:
        return [s.id for s in self.symbols]

    def index(self, sym: str) -> int:
        return self._index[sym]

    def degree(self, sym: str) -> int:
        return self._degree[sym]

    @property
    def degrees(self) -> list[int]:
        return sorted(self._by_degree)

    def basis_in_degree(self, k: int) -> list[str]:
        return list(self._by_degree.get(k, ()))

    def rank(self, k: int) -> int:
        return len(self._by_degree.get(k, ()))

    def ranks(self) -> dict[int, int]:
        return {k: len(v) for k, v in sorted(self._by_degree.items())}

    def element(self, terms=None) -> Element:
        return self._own(Element(terms))

    def sorted_items(self, el: Element) -> list[tuple[str, int]]:
        return sorted(el.items(), key=lambda kv: self._index[kv[0]])

    def components(self, el: Element) -> dict[int, Element]:
        """Split an element into homogeneous components by degree."""
        parts: dict[int, dict[str, int]] = {}
        for k, c in el.items():
            parts.setdefault(self._degree[k], {})[k] = c
        return {deg: Element(t) for deg, t in sorted(parts.items())}

    def degree_of(self, el: Element) -> int | None:
        """Degree of a homogeneous element; ``None`` for zero."""
        degs = {self._degree[k] for k in el}
        if len(degs) > 1:
            raise ValueError(f"element is not homogeneous (degrees {sorted(degs)})")
        return degs.pop() if degs else None

    def is_homogeneous(self, el: Element, degree: int) -> bool:
        return all(self._degree[k] == degree for k in el)

    # -- arithmetic --------------------------------------------------------
    def add(self, *els: Element) -> Element:
        out = ZERO
        for e in els:
            out = out + self._own(e)
        return out

    def d(self, el: Element) -> Element:
        acc: dict[str, int] = {}
        for k, c in el.items():
            for t, dc in self.diff.get(k, ZERO).items():
                acc[t] = acc.get(t, 0) + c * dc
        return Element(acc)

    def mul(self, a: Element, b: Element) -> Element:
        acc: dict[str, int] = {}
        for ka, ca in a.items():
            for kb, cb in b.items():
                prod = self.products.get((ka, kb))
                if prod is None:
                    continue
                for t, pc in prod.items():
                    acc[t] = acc.get(t, 0) + ca * cb * pc
        return Element(acc)

    def prod(self, *els: Element) -> Element:
        out = self.unit
        for e in els:
            out = self.mul(out, e)
        return out

    # -- linear algebra views ----------------------------------------------
    def to_vector(self, el: Element, k: int) -> list[int]:
        if not self.is_homogeneous(el, k):
            raise ValueError(f"element has components outside degree {k}")
        return [el[s] for s in self._by_degree.get(k, ())]

    def from_vector(self, vec, k: int) -> Element:
        return Element(zip(self._by_degree.get(k, ()), (int(v) for v in vec)))

    def diff_matrix(self, k: int) -> np.ndarray:
        """Matrix of ``d: R^k -> R^{k+1}`` in canonical bases."""
        rows, cols = self.basis_in_degree(k + 1), self.basis_in_degree(k)
        m = zeros(len(rows), len(cols))
        pos = {s: n for n, s in enumerate(rows)}
        for c, s in enumerate(cols):
            for t, coef in self.diff.get(s, ZERO).items():
                m[pos[t], c] = coef
        return m

    def underlying_complex(self) -> IntCochainComplex:
        degs = self.degrees
        if not degs:
            return IntCochainComplex({})
        ranks = {k: self.rank(k) for k in range(degs[0], degs[-1] + 1)}
        return IntCochainComplex(ranks, {k: self.diff_matrix(k) for k in ranks})

    # -- equality and serialization ----------------------------------------
    def structure_key(self):
        if self._key is None:
            self._key = (
                tuple((s.id, s.degree) for s in self.symbols),
                tuple(self.sorted_items(self.unit)),
                tuple((k, tuple(self.sorted_items(v)))
                      for k, v in sorted(self.diff.items(), key=lambda kv: self._index[kv[0]])),
                tuple((k, tuple(self.sorted_items(v)))
                      for k, v in sorted(self.products.items(),
                                         key=lambda kv: (self._index[kv[0][0]], self._index[kv[0][1]]))),
            )
        return self._key

    def __eq__(self, other):
        if not isinstance(other, BasisDGRing):
            return NotImplemented
        return self is other or self.structure_key() == other.structure_key()

    def __hash__(self):
        return hash(self.structure_key())

    def __repr__(self):
        return f"<BasisDGRing {self.name or '?'} ranks={self.ranks()}>"

    def format(self, el: Element) -> str:
        if not el:
            return "0"
        return " ".join(f"{c:+d}*{k}" for k, c in self.sorted_items(el))

    def element_to_json(self, el: Element) -> dict:
        return {k: c for k, c in self.sorted_items(el)}

    def to_json(self) -> dict:
        idx = self._index
        diff = [{"from": s, "to": t, "coef": c}
                for s in self.ids for t, c in self.sorted_items(self.diff.get(s, ZERO))]
        mul = []
        for (a, b), v in sorted(self.products.items(), key=lambda kv: (idx[kv[0][0]], idx[kv[0][1]])):
            for t, c in self.sorted_items(v):
                mul.append({"left": a, "right": b, "to": t, "coef": c})
        return {
            "basis": [{"id": s.id, "degree": s.degree} for s in self.symbols],
            "unit": self.element_to_json(self.unit),
            "diff": diff,
            "mul": mul,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=1, ensure_ascii=False) + "\n"

    @classmethod
    def from_json(cls, data: dict, name: str = "") -> BasisDGRing:
        symbols = [BasisSymbol(str(s["id"]), int(s["degree"])) for s in data["basis"]]
        diff: dict[str, dict[str, int]] = {}
        for e in data.get("diff", []):
            diff.setdefault(e["from"], {})
            diff[e["from"]][e["to"]] = diff[e["from"]].get(e["to"], 0) + int(e["coef"])
        mul: dict[tuple[str, str], dict[str, int]] = {}
        for e in data.get("mul", []):
            slot = mul.setdefault((e["left"], e["right"]), {})
            slot[e["to"]] = slot.get(e["to"], 0) + int(e["coef"])
        return cls(symbols, Element(data["unit"]),
                   {k: Element(v) for k, v in diff.items()},
                   {k: Element(v) for k, v in mul.items()}, name=name)


def integers() -> BasisDGRing:
    """Z concentrated in degree 0."""
    return BasisDGRing([BasisSymbol("1", 0)], Element.basis("1"), {},
                       {("1", "1"): Element.basis("1")}, name="Z")


def check_axioms(ring: BasisDGRing) -> CheckReport:
    """Exhaustively verify the DG ring axioms on basis symbols.

    Checks homogeneity of the structure constants, the unit (closed and
    two-sided), ``d∘d = 0``, the graded Leibniz rule on all pairs and
    associativity on all triples.
    """
    report = CheckReport(f"axioms[{ring.name}]")
    fmt = ring.format
    ids = ring.ids
    deg = ring.degree
    basis = {s: Element.basis(s) for s in ids}

    for s in ids:
        report.checked += 1
        if not ring.is_homogeneous(ring.d(basis[s]), deg(s) + 1):
            report.fail(f"d({s}) = {fmt(ring.d(basis[s]))} is not of degree {deg(s) + 1}")
    for (a, b), v in ring.products.items():
        report.checked += 1
        if not ring.is_homogeneous(v, deg(a) + deg(b)):
            report.fail(f"{a}*{b} = {fmt(v)} is not of degree {deg(a) + deg(b)}")

    report.checked += 1
    if not ring.is_homogeneous(ring.unit, 0):
        report.fail(f"unit {fmt(ring.unit)} is not of degree 0")
    du = ring.d(ring.unit)
    report.checked += 1
    if du:
        report.fail(f"d(unit) = {fmt(du)} != 0")
    for s in ids:
        report.checked += 2
        if ring.mul(ring.unit, basis[s]) != basis[s]:
            report.fail(f"unit*{s} = {fmt(ring.mul(ring.unit, basis[s]))}")
        if ring.mul(basis[s], ring.unit) != basis[s]:
            report.fail(f"{s}*unit = {fmt(ring.mul(basis[s], ring.unit))}")

    for s in ids:
        report.checked += 1
        dd = ring.d(ring.d(basis[s]))
        if dd:
            report.fail(f"d(d({s})) = {fmt(dd)}")

    for a in ids:
        da = ring.d(basis[a])
        sign = -1 if deg(a) % 2 else 1
        for b in ids:
            report.checked += 1
            lhs = ring.d(ring.mul(basis[a], basis[b]))
            rhs = ring.mul(da, basis[b]) + sign * ring.mul(basis[a], ring.d(basis[b]))
            if lhs != rhs:
                report.fail(f"Leibniz fails on ({a}, {b}): {fmt(lhs)} vs {fmt(rhs)}")

    for a in ids:
        for b in ids:
            ab = ring.mul(basis[a], basis[b])
            for c in ids:
                report.checked += 1
                bc = ring.mul(basis[b], basis[c])
                if not ab and not bc:
                    continue
                lhs = ring.mul(ab, basis[c])
                rhs = ring.mul(basis[a], bc)
                if lhs != rhs:
                    report.fail(f"associativity fails on ({a}, {b}, {c}): "
                                f"{fmt(lhs)} vs {fmt(rhs)}")
    return report


def tensor(R: BasisDGRing, S: BasisDGRing, name: str | None = None) -> BasisDGRing:
    """Graded tensor product ``R ⊗ S`` with Koszul signs; ids are ``"r|s"``."""
    def key(r, s):
        return f"{r}|{s}"

    symbols = [BasisSymbol(key(r.id, s.id), r.degree + s.degree)
               for r in R.symbols for s in S.symbols]
    unit = Element({key(r, s): cr * cs for r, cr in R.unit.items() for s, cs in S.unit.items()})

    diff: dict[str, Element] = {}
    for r in R.symbols:
        dr = R.diff.get(r.id, ZERO)
        sign = -1 if r.degree % 2 else 1
        for s in S.symbols:
            ds = S.diff.get(s.id, ZERO)
            terms = [(key(t, s.id), c) for t, c in dr.items()]
            terms += [(key(r.id, t), sign * c) for t, c in ds.items()]
            diff[key(r.id, s.id)] = Element(terms)

    mul: dict[tuple[str, str], Element] = {}
    for (r1, r2), rv in R.products.items():
        dr2 = R.degree(r2)
        for (s1, s2), sv in S.products.items():
            sign = -1 if (S.degree(s1) * dr2) % 2 else 1
            mul[(key(r1, s1), key(r2, s2))] = Element(
                (key(rt, st), sign * rc * sc) for rt, rc in rv.items() for st, sc in sv.items())
    return BasisDGRing(symbols, unit, diff, mul,
                       name=name or f"({R.name} ⊗ {S.name})")


class DGRingHom:
    """A degree-preserving additive map given on basis symbols."""

    def __init__(self, source: BasisDGRing, target: BasisDGRing,
                 images: Mapping[str, Element], name: str = ""):
        self.source = source
        self.target = target
        source._check_ids(images)
        self.images = {k: target._own(v) for k, v in images.items() if v}
        self.name = name

    def __call__(self, el: Element) -> Element:
        acc: dict[str, int] = {}
        for k, c in el.items():
            if k not in self.source:
                raise KeyError(f"{k!r} is not a symbol of {self.source.name!r}")
            for t, tc in self.images.get(k, ZERO).items():
                acc[t] = acc.get(t, 0) + c * tc
        return Element(acc)

    def image(self, sym: str) -> Element:
        return self.images.get(sym, ZERO)

    def matrix(self, k: int) -> np.ndarray:
        """Matrix of the degree ``k`` part, canonical bases on both sides."""
        rows, cols = self.target.basis_in_degree(k), self.source.basis_in_degree(k)
        m = zeros(len(rows), len(cols))
        pos = {s: n for n, s in enumerate(rows)}
        for c, s in enumerate(cols):
            for t, coef in self.image(s).items():
                if t not in pos:
                    raise ValueError(f"image of {s} has a component {t} outside degree {k}")
                m[pos[t], c] = coef
        return m

    def __eq__(self, other):
        if not isinstance(other, DGRingHom):
            return NotImplemented
        return (self.source == other.source and self.target == other.target
                and self.images == other.images)

    def __hash__(self):
        return hash((self.source, self.target, frozenset(self.images.items())))

    def __repr__(self):
        return f"<DGRingHom {self.name or '?'}: {self.source.name} -> {self.target.name}>"

    @classmethod
    def from_matrices(cls, source, target, matrices: Mapping[int, np.ndarray], name=""):
        images = {}
        for k, m in matrices.items():
            m = as_int_matrix(m, (target.rank(k), source.rank(k)))
            for c, s in enumerate(source.basis_in_degree(k)):
                images[s] = target.from_vector(m[:, c], k)
        return cls(source, target, images, name)


def identity_hom(R: BasisDGRing) -> DGRingHom:
    return DGRingHom(R, R, {s: Element.basis(s) for s in R.ids}, name=f"id[{R.name}]")


def compose_hom(f: DGRingHom, g: DGRingHom) -> DGRingHom:
    """``f ∘ g``."""
    if g.target != f.source:
        raise ValueError(f"cannot compose {f!r} after {g!r}")
    return DGRingHom(g.source, f.target, {s: f(v) for s, v in g.images.items()},
                     name=f"{f.name}∘{g.name}")


def check_hom(f: DGRingHom) -> CheckReport:
    report = CheckReport(f"hom[{f.name}]")
    S, T = f.source, f.target
    basis = {s: Element.basis(s) for s in S.ids}
    for s in S.ids:
        report.checked += 1
        if not T.is_homogeneous(f.image(s), S.degree(s)):
            report.fail(f"image of {s} is not of degree {S.degree(s)}: {T.format(f.image(s))}")
    report.checked += 1
    if f(S.unit) != T.unit:
        report.fail(f"unit maps to {T.format(f(S.unit))}")
    for s in S.ids:
        report.checked += 1
        lhs, rhs = f(S.d(basis[s])), T.d(f.image(s))
        if lhs != rhs:
            report.fail(f"f(d {s}) = {T.format(lhs)} but d f({s}) = {T.format(rhs)}")
    for a in S.ids:
        for b in S.ids:
            report.checked += 1
            lhs = f(S.mul(basis[a], basis[b]))
            rhs = T.mul(f.image(a), f.image(b))
            if lhs != rhs:
                report.fail(f"f({a}*{b}) = {T.format(lhs)} but f({a})*f({b}) = {T.format(rhs)}")
    return report


def tensor_hom(f: DGRingHom, g: DGRingHom, source: BasisDGRing | None = None,
               target: BasisDGRing | None = None) -> DGRingHom:
    """``f ⊗ g`` between the tensor rings (built here unless passed in)."""
    source = source or tensor(f.source, g.source)
    target = target or tensor(f.target, g.target)
    images = {}
    for r in f.source.ids:
        fr = f.image(r)
        for s in g.source.ids:
            gs = g.image(s)
            images[f"{r}|{s}"] = Element(
                (f"{a}|{b}", ca * cb) for a, ca in fr.items() for b, cb in gs.items())
    return DGRingHom(source, target, images, name=f"({f.name}⊗{g.name})")
