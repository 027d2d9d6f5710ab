"""Combinatorics of the simplex category, standard simplices and horns.

A ``p``-simplex of a simplicial subset of ``Delta^q`` is a nondecreasing
sequence ``(i_0, ..., i_p)`` in ``[q]``.  Simplices are plain tuples; the
spaces ``Delta`` and ``Horn`` are predicates over such tuples and never
materialize more than the dimension that was asked for.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import comb
from typing import Iterator, Union

Simplex = tuple[int, ...]


@dataclass(frozen=True)
class MonotoneMap:
    """A nondecreasing function ``[p] -> [q]``, stored as its value sequence."""

    values: Simplex
    q: int

    def __post_init__(self):
        values = tuple(int(v) for v in self.values)
        object.__setattr__(self, "values", values)
        if not values:
            raise ValueError("a monotone map needs a nonempty source [p]")
        if self.q < 0:
            raise ValueError(f"target dimension must be >= 0, got {self.q}")
        if any(v < 0 or v > self.q for v in values):
            raise ValueError(f"values {values} leave the target [{self.q}]")
        if any(a > b for a, b in zip(values, values[1:])):
            raise ValueError(f"values {values} are not nondecreasing")

    @property
    def p(self) -> int:
        return len(self.values) - 1

    def __call__(self, k: int) -> int:
        return self.values[k]

    def __str__(self):
        return format_simplex(self.values)

    @property
    def injective(self) -> bool:
        return is_nondegenerate(self.values)

    def then(self, other: MonotoneMap) -> MonotoneMap:
        """``other ∘ self``."""
        return compose(other, self)

    def apply(self, simplex: Simplex) -> Simplex:
        """Push a simplex of ``Delta^p`` forward to ``Delta^q`` (``self ∘ x``)."""
        return tuple(self.values[k] for k in simplex)


def identity(q: int) -> MonotoneMap:
    return MonotoneMap(tuple(range(q + 1)), q)


def compose(f: MonotoneMap, g: MonotoneMap) -> MonotoneMap:
    """The composite ``f ∘ g``; requires ``target(g) == source(f)``."""
    if g.q != f.p:
        raise ValueError(
            f"cannot compose: g lands in [{g.q}] but f starts at [{f.p}]")
    return MonotoneMap(tuple(f.values[v] for v in g.values), f.q)


def coface(j: int, q: int) -> MonotoneMap:
    """The injection ``[q-1] -> [q]`` whose image misses ``j``."""
    if q < 1 or not 0 <= j <= q:
        raise ValueError(f"coface index {j} out of range for [{q}]")
    return MonotoneMap(tuple(k if k < j else k + 1 for k in range(q)), q)


def codegeneracy(j: int, q: int) -> MonotoneMap:
    """The surjection ``[q+1] -> [q]`` hitting ``j`` twice."""
    if q < 0 or not 0 <= j <= q:
        raise ValueError(f"codegeneracy index {j} out of range for [{q}]")
    return MonotoneMap(tuple(k if k <= j else k - 1 for k in range(q + 2)), q)


def front_face(p: int, q: int) -> MonotoneMap:
    """``(0, ..., p)`` as a map ``[p] -> [p+q]``."""
    return MonotoneMap(tuple(range(p + 1)), p + q)


def back_face(p: int, q: int) -> MonotoneMap:
    """``(p, ..., p+q)`` as a map ``[q] -> [p+q]``."""
    return MonotoneMap(tuple(range(p, p + q + 1)), p + q)


def is_nondegenerate(simplex: Simplex) -> bool:
    return all(a < b for a, b in zip(simplex, simplex[1:]))


def face(simplex: Simplex, i: int) -> Simplex:
    """The ``i``-th face: drop entry ``i``."""
    return simplex[:i] + simplex[i + 1:]


def degeneracy(simplex: Simplex, i: int) -> Simplex:
    """The ``i``-th degeneracy: repeat entry ``i``."""
    return simplex[:i + 1] + simplex[i:]


def format_simplex(simplex: Simplex) -> str:
    return "(" + ",".join(str(v) for v in simplex) + ")"


def parse_simplex(text: str) -> Simplex:
    text = text.strip()
    if not (text.startswith("(") and text.endswith(")")):
        raise ValueError(f"not a simplex literal: {text!r}")
    body = text[1:-1].strip()
    if not body:
        raise ValueError("empty simplex")
    return tuple(int(part) for part in body.split(","))


@dataclass(frozen=True)
class Delta:
    """The standard simplex ``Delta^q``."""

    q: int

    def __post_init__(self):
        if self.q < 0:
            raise ValueError(f"Delta^q needs q >= 0, got {self.q}")

    def contains(self, simplex: Simplex) -> bool:
        return (all(0 <= v <= self.q for v in simplex)
                and all(a <= b for a, b in zip(simplex, simplex[1:])))

    def simplices(self, p: int) -> Iterator[Simplex]:
        """All ``p``-simplices, degenerate ones included, in lex order."""
        for s in itertools.combinations_with_replacement(range(self.q + 1), p + 1):
            if self.contains(s):
                yield s

    def nondegenerate(self, p: int) -> list[Simplex]:
        return [s for s in itertools.combinations(range(self.q + 1), p + 1)
                if self.contains(s)]

    @property
    def top_dim(self) -> int:
        return self.q

    def __str__(self):
        return f"Delta^{self.q}"


@dataclass(frozen=True)
class Horn(Delta):
    """The horn ``Lambda^q_i``: simplices ``s`` with ``image(s) ∪ {i} != [q]``."""

    i: int = field(default=0)

    def __post_init__(self):
        if self.q < 1:
            raise ValueError("horns need q >= 1")
        if not 0 <= self.i <= self.q:
            raise ValueError(f"apex {self.i} outside [0, {self.q}]")

    def contains(self, simplex: Simplex) -> bool:
        return Delta.contains(self, simplex) and horn_contains(self, simplex)

    @property
    def top_dim(self) -> int:
        return self.q - 1

    def __str__(self):
        return f"Lambda^{self.q}_{self.i}"


HornId = Horn
Space = Union[Delta, Horn]


def horn_contains(h: Horn, simplex: Simplex) -> bool:
    if not Delta.contains(Delta(h.q), simplex):
        raise ValueError(f"{format_simplex(simplex)} is not a simplex of Delta^{h.q}")
    return len(set(simplex) | {h.i}) != h.q + 1


def nondegenerate_simplices(space: Space, p: int) -> list[Simplex]:
    return space.nondegenerate(p)


def all_nondegenerate(space: Space) -> list[Simplex]:
    """Every nondegenerate simplex, ordered by dimension then lexicographically."""
    out: list[Simplex] = []
    for p in range(space.q + 1):
        out.extend(space.nondegenerate(p))
    return out


def count_nondegenerate(q: int, p: int) -> int:
    return comb(q + 1, p + 1)


def monotone_maps(p: int, q: int) -> Iterator[MonotoneMap]:
    for values in itertools.combinations_with_replacement(range(q + 1), p + 1):
        yield MonotoneMap(values, q)


@dataclass(frozen=True)
class HornDiagram:
    """The finite diagram whose colimit is the horn.

    ``alpha[j]`` embeds ``Delta^{q-1}`` as face ``j``.  For ``k < l`` the
    two maps ``Delta^{q-2} -> Delta^{q-1}`` are ``beta[(k, l)] = ∂^{l-1}``
    and ``gamma[(k, l)] = ∂^k``; they are the unique injections with
    ``alpha[k] ∘ beta = alpha[l] ∘ gamma`` (image missing ``k`` and ``l``).
    """

    horn: Horn
    J0: tuple[int, ...]
    J1: tuple[tuple[int, int], ...]
    alpha: dict
    beta: dict
    gamma: dict


def horn_diagram(h: Horn) -> HornDiagram:
    q = h.q
    J0 = tuple(j for j in range(q + 1) if j != h.i)
    J1 = tuple((k, l) for k in J0 for l in J0 if k < l)
    alpha = {j: coface(j, q) for j in J0}
    beta = {(k, l): coface(l - 1, q - 1) for k, l in J1}
    gamma = {(k, l): coface(k, q - 1) for k, l in J1}
    return HornDiagram(h, J0, J1, alpha, beta, gamma)


def missing_two(k: int, l: int, q: int) -> MonotoneMap:
    """The injection ``[q-2] -> [q]`` whose image misses ``k`` and ``l``."""
    return MonotoneMap(tuple(v for v in range(q + 1) if v not in (k, l)), q)


@dataclass
class CoequalizerReport:
    horn: Horn
    max_dim: int
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def __bool__(self):
        return self.ok


def check_coequalizer(h: Horn, max_dim: int | None = None,
                      bound: int = 5) -> CoequalizerReport:
    """Brute-force check that the horn diagram is a coequalizer.

    In every dimension ``p <= max_dim`` (default ``q + 1``) this verifies,
    once over all simplices and once over nondegenerate ones only:

    * the fork commutes, ``alpha ∘ beta == alpha ∘ gamma``;
    * ``alpha`` hits every horn simplex;
    * ``alpha_k(x) == alpha_l(y)`` with ``k < l`` forces a simplex ``z``
      of ``Delta^{q-2}`` with ``beta(z) == x`` and ``gamma(z) == y``;
      within one component ``alpha_j`` is injective.
    """
    if h.q > bound:
        raise ValueError(f"q = {h.q} exceeds the brute-force bound {bound}")
    if max_dim is None:
        max_dim = h.q + 1
    diagram = horn_diagram(h)
    report = CoequalizerReport(h, max_dim)
    fail = report.failures.append
    q = h.q

    for (k, l), b in diagram.beta.items():
        g = diagram.gamma[(k, l)]
        if compose(diagram.alpha[k], b) != compose(diagram.alpha[l], g):
            fail(f"fork does not commute on ({k},{l})")

    for p in range(max_dim + 1):
        for nd_only in (False, True):
            label = "nd" if nd_only else "all"
            source = (Delta(q - 1).nondegenerate(p) if nd_only
                      else list(Delta(q - 1).simplices(p)))
            target = h.nondegenerate(p) if nd_only else list(h.simplices(p))
            preimages: dict[Simplex, list[tuple[int, Simplex]]] = {}
            for j in diagram.J0:
                for x in source:
                    y = diagram.alpha[j].apply(x)
                    if not h.contains(y):
                        fail(f"[{label}] alpha_{j}{format_simplex(x)} leaves the horn")
                        continue
                    if nd_only and not is_nondegenerate(y):
                        fail(f"[{label}] alpha_{j}{format_simplex(x)} is degenerate")
                    preimages.setdefault(y, []).append((j, x))
            for y in target:
                if y not in preimages:
                    fail(f"[{label}] {format_simplex(y)} not hit by alpha")
            if q < 2:
                witnesses_src: list[Simplex] = []
            elif nd_only:
                witnesses_src = Delta(q - 2).nondegenerate(p)
            else:
                witnesses_src = list(Delta(q - 2).simplices(p))
            for y, pre in preimages.items():
                for (j1, x1), (j2, x2) in itertools.combinations(pre, 2):
                    if j1 == j2:
                        fail(f"[{label}] alpha_{j1} not injective at {format_simplex(y)}")
                        continue
                    (k, x), (l, xl) = sorted([(j1, x1), (j2, x2)])
                    b, g = diagram.beta[(k, l)], diagram.gamma[(k, l)]
                    if not any(b.apply(z) == x and g.apply(z) == xl
                               for z in witnesses_src):
                        fail(f"[{label}] no witness identifying "
                             f"({k},{format_simplex(x)}) ~ ({l},{format_simplex(xl)})")
    return report
