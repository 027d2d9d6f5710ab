"""Semi-free noncommutative DG rings over Z and homomorphisms out of them.

A presentation lists graded generators with a filtration index and gives
each generator's differential as a noncommutative polynomial in
generators of strictly smaller filtration.  The differential extends to
words by the graded Leibniz rule.  A homomorphism into a basis-presented
ring is determined by generator images; multiplicativity is automatic,
so the only condition to check is compatibility with ``d``.
"""
from __future__ import annotations

import json
from collections.abc import Mapping
from dataclasses import dataclass
from typing import Iterable

from .dgring import BasisDGRing, CheckReport, DGRingHom, Element

Word = tuple[str, ...]


class PresentationError(ValueError):
    pass


class NCPoly(Mapping):
    """Sparse integer combination of words; the empty word is the unit."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping | Iterable | None = None):
        acc: dict[Word, int] = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for word, coef in items:
                word = tuple(word)
                acc[word] = acc.get(word, 0) + int(coef)
        self._terms = {w: c for w, c in acc.items() if c}

    @classmethod
    def var(cls, name: str, coef: int = 1) -> NCPoly:
        return cls({(name,): coef})

    @classmethod
    def one(cls) -> NCPoly:
        return cls({(): 1})

    def __getitem__(self, word):
        return self._terms.get(tuple(word), 0)

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
            return self._terms == {tuple(k): v for k, v in other.items() if v}
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        return NCPoly(list(self._terms.items()) + list(other.items()))

    __radd__ = __add__

    def __neg__(self):
        return NCPoly({w: -c for w, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return NCPoly({w: c * other for w, c in self._terms.items()})
        return NCPoly((a + b, ca * cb) for a, ca in self._terms.items()
                      for b, cb in other.items())

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def variables(self) -> set[str]:
        return {x for w in self._terms for x in w}

    def sorted_items(self) -> list[tuple[Word, int]]:
        return sorted(self._terms.items(), key=lambda kv: (len(kv[0]), kv[0]))

    def __repr__(self):
        if not self._terms:
            return "NCPoly(0)"
        return "NCPoly(" + " ".join(f"{c:+d}*{'·'.join(w) or '1'}"
                                    for w, c in self.sorted_items()) + ")"


@dataclass(frozen=True)
class GradedVar:
    name: str
    degree: int
    filt: int = 0


class SemiFreePresentation:
    """Generators plus their differentials; validated on construction.

    Generators are kept in processing order: by filtration, then in the
    order given.
    """

    def __init__(self, vars: Iterable[GradedVar], d_assign: Mapping[str, NCPoly | Mapping],
                 validate: bool = True):
        given = list(vars)
        order = sorted(range(len(given)), key=lambda k: (given[k].filt, k))
        self.vars: tuple[GradedVar, ...] = tuple(given[k] for k in order)
        self._by_name = {v.name: v for v in self.vars}
        self.d_assign: dict[str, NCPoly] = {
            name: p if isinstance(p, NCPoly) else NCPoly(p) for name, p in d_assign.items()}
        if validate:
            self.validate()

    def __repr__(self):
        gens = ", ".join(f"{v.name}:{v.degree}/{v.filt}" for v in self.vars)
        return f"<SemiFreePresentation {gens}>"

    def __eq__(self, other):
        if not isinstance(other, SemiFreePresentation):
            return NotImplemented
        return self.vars == other.vars and all(
            self.d(v.name) == other.d(v.name) for v in self.vars)

    def __hash__(self):
        return hash(self.vars)

    @property
    def names(self) -> list[str]:
        return [v.name for v in self.vars]

    def var(self, name: str) -> GradedVar:
        try:
            return self._by_name[name]
        except KeyError:
            raise PresentationError(f"unknown generator {name!r}") from None

    def d(self, name: str) -> NCPoly:
        self.var(name)
        return self.d_assign.get(name, NCPoly())

    def word_degree(self, word: Word) -> int:
        return sum(self.var(x).degree for x in word)

    def degree_of(self, poly: NCPoly) -> int | None:
        degs = {self.word_degree(w) for w in poly}
        if len(degs) > 1:
            raise PresentationError(f"polynomial is not homogeneous: {poly!r}")
        return degs.pop() if degs else None

    def extend_d(self, poly: NCPoly) -> NCPoly:
        """``d`` on polynomials via the graded Leibniz rule."""
        out: dict[Word, int] = {}
        for word, coef in poly.items():
            sign = 1
            for k, x in enumerate(word):
                for w, c in self.d(x).items():
                    key = word[:k] + w + word[k + 1:]
                    out[key] = out.get(key, 0) + sign * coef * c
                if self.var(x).degree % 2:
                    sign = -sign
        return NCPoly(out)

    def validate(self):
        names = [v.name for v in self.vars]
        if len(set(names)) != len(names):
            raise PresentationError("generator names must be unique")
        for v in self.vars:
            if not v.name or "|" in v.name:
                raise PresentationError(f"bad generator name {v.name!r}")
            if v.filt < 0:
                raise PresentationError(f"{v.name}: filtration must be >= 0")
        for name in self.d_assign:
            self.var(name)
        for v in self.vars:
            dx = self.d(v.name)
            if v.filt == 0 and dx:
                raise PresentationError(f"{v.name} has filtration 0 but d({v.name}) != 0")
            for w in dx:
                for y in w:
                    if self.var(y).filt >= v.filt:
                        raise PresentationError(
                            f"d({v.name}) uses {y} of filtration {self.var(y).filt} "
                            f">= {v.filt}")
                if self.word_degree(w) != v.degree + 1:
                    raise PresentationError(
                        f"d({v.name}) has a term of degree {self.word_degree(w)}, "
                        f"expected {v.degree + 1}")
            dd = self.extend_d(dx)
            if dd:
                raise PresentationError(f"d(d({v.name})) = {dd!r} != 0")

    @classmethod
    def infer_filtration(cls, gens: Iterable[tuple[str, int]],
                         d_assign: Mapping[str, NCPoly]) -> SemiFreePresentation:
        """Assign the least filtration compatible with ``d`` (longest
        dependency chain); cycles are rejected."""
        degrees = dict(gens)
        filt: dict[str, int] = {}
        visiting: set[str] = set()

        def depth(x: str) -> int:
            if x in filt:
                return filt[x]
            if x in visiting:
                raise PresentationError(f"cyclic dependency through {x}")
            if x not in degrees:
                raise PresentationError(f"unknown generator {x!r}")
            visiting.add(x)
            dx = NCPoly(d_assign.get(x, {}))
            filt[x] = 1 + max((depth(y) for y in dx.variables()), default=0) if dx else 0
            visiting.discard(x)
            return filt[x]

        return cls([GradedVar(x, degrees[x], depth(x)) for x in degrees], d_assign)

    def to_json(self) -> dict:
        return {
            "vars": [{"name": v.name, "degree": v.degree, "filt": v.filt} for v in self.vars],
            "d": {v.name: [{"coef": c, "word": list(w)} for w, c in self.d(v.name).sorted_items()]
                  for v in self.vars if self.d(v.name)},
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=1) + "\n"

    @classmethod
    def from_json(cls, data: dict) -> SemiFreePresentation:
        try:
            vars = [GradedVar(str(v["name"]), int(v["degree"]), int(v.get("filt", 0)))
                    for v in data["vars"]]
            d = {name: NCPoly((tuple(t["word"]), int(t["coef"])) for t in terms)
                 for name, terms in data.get("d", {}).items()}
        except (KeyError, TypeError) as exc:
            raise PresentationError(f"malformed presentation: {exc}") from None
        return cls(vars, d)


def extend_d(P: SemiFreePresentation, poly: NCPoly) -> NCPoly:
    return P.extend_d(poly)


class SemiFreeHom:
    """A DG ring map from a semi-free ring, given on generators."""

    def __init__(self, source: SemiFreePresentation, target: BasisDGRing,
                 images: Mapping[str, Element], name: str = ""):
        self.source = source
        self.target = target
        for x in images:
            source.var(x)
        self.images = {x: target._own(e) for x, e in images.items() if e}
        self.name = name

    def image(self, x: str) -> Element:
        self.source.var(x)
        return self.images.get(x, Element())

    def eval(self, poly: NCPoly) -> Element:
        """Words go to ordered products of images."""
        out = Element()
        T = self.target
        for word, coef in poly.items():
            term = T.unit
            for x in word:
                term = T.mul(term, self.image(x))
                if not term:
                    break
            out = out + term * coef
        return out

    __call__ = eval

    def postcompose(self, f: DGRingHom) -> SemiFreeHom:
        if f.source != self.target:
            raise ValueError(f"{f!r} does not start at {self.target.name}")
        return SemiFreeHom(self.source, f.target, {x: f(e) for x, e in self.images.items()},
                           name=f"{f.name}∘{self.name}" if self.name else f.name)

    def check(self) -> CheckReport:
        return check_sf_hom(self)

    def __eq__(self, other):
        if not isinstance(other, SemiFreeHom):
            return NotImplemented
        return (self.source == other.source and self.target == other.target
                and self.images == other.images)

    def __hash__(self):
        return hash((self.source, frozenset(self.images.items())))

    def __repr__(self):
        return f"<SemiFreeHom {self.name or '?'} -> {self.target.name}>"

    def to_json(self) -> dict:
        return {"images": {x: self.target.element_to_json(self.image(x))
                           for x in self.source.names if self.image(x)}}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=1, ensure_ascii=False) + "\n"

    @classmethod
    def from_json(cls, source: SemiFreePresentation, target: BasisDGRing, data: dict,
                  name: str = "") -> SemiFreeHom:
        images = data.get("images", data)
        return cls(source, target, {x: Element(e) for x, e in images.items()}, name=name)


def check_sf_hom(h: SemiFreeHom) -> CheckReport:
    """Degrees of images and ``h(d x) == d h(x)`` on every generator."""
    report = CheckReport(f"sf-hom[{h.name}]")
    T = h.target
    for v in h.source.vars:
        report.checked += 2
        img = h.image(v.name)
        if not T.is_homogeneous(img, v.degree):
            report.fail(f"image of {v.name} is not of degree {v.degree}: {T.format(img)}")
        lhs, rhs = h.eval(h.source.d(v.name)), T.d(img)
        if lhs != rhs:
            report.fail(f"h(d {v.name}) = {T.format(lhs)} but d h({v.name}) = {T.format(rhs)}")
    return report
