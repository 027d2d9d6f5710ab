"""Horns in ``Hom(A, Cyl(B))`` and how to fill them.

A horn is a family of maps ``A -> Cyl_{q-1}(B)``, one per face ``j ≠ i``,
agreeing on shared codimension-two faces.  ``assemble`` glues them into
one map ``A -> N(Lambda^q_i, B)`` through the limit presentation of the
horn ring; ``fill`` lifts that map through the restriction
``Cyl_q(B) -> N(Lambda^q_i, B)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .dgring import BasisDGRing, DGRingHom, identity_hom, integers, tensor_hom
from .horn import (LimitRing, QuasiIsoCertificate, certify_surjective_quasi_iso,
                   face_restriction, horn_nerve, limit_ring, restriction_hom)
from .lifting import LiftingError, lift_hom
from .nerve import chain_ring, cyl, face_map, induced_hom, nerve_ring
from .semifree import SemiFreeHom, SemiFreePresentation
from .simplex import Delta, Horn, horn_diagram


class IncompatibleHornError(ValueError):
    """Two faces disagree on their common face."""

    def __init__(self, pair: tuple[int, int], generator: str, detail: str = ""):
        self.pair = pair
        self.generator = generator
        super().__init__(f"faces {pair[0]} and {pair[1]} disagree on generator "
                         f"{generator!r}" + (f": {detail}" if detail else ""))


class FillError(LiftingError):
    pass


@lru_cache(maxsize=64)
def cached_limit_ring(q: int, i: int, B: BasisDGRing | None = None) -> LimitRing:
    return limit_ring(q, i, B)


@lru_cache(maxsize=64)
def restriction_certificate(q: int, i: int, B: BasisDGRing | None = None) -> QuasiIsoCertificate:
    return certify_surjective_quasi_iso(restriction_hom(q, i, B))


@dataclass
class HornDatum:
    horn: Horn
    coeff: BasisDGRing
    presentation: SemiFreePresentation
    faces: dict[int, SemiFreeHom] = field(default_factory=dict)

    def validate(self) -> HornDatum:
        q = self.horn.q
        diagram = horn_diagram(self.horn)
        if sorted(self.faces) != list(diagram.J0):
            raise ValueError(f"faces given for {sorted(self.faces)}, expected {list(diagram.J0)}")
        face_ring = cyl(q - 1, self.coeff)
        for j, f in self.faces.items():
            if f.source != self.presentation:
                raise ValueError(f"face {j} starts at a different presentation")
            if f.target != face_ring:
                raise ValueError(f"face {j} does not land in {face_ring.name}")
            report = f.check()
            if not report.ok:
                raise ValueError(f"face {j} is not a DG ring map: " + "; ".join(report.failures))
        for (k, l) in diagram.J1:
            beta = induced_hom(diagram.beta[(k, l)], self.coeff)
            gamma = induced_hom(diagram.gamma[(k, l)], self.coeff)
            for x in self.presentation.names:
                a = beta(self.faces[k].image(x))
                b = gamma(self.faces[l].image(x))
                if a != b:
                    raise IncompatibleHornError((k, l), x, f"{beta.target.format(a)} vs "
                                                           f"{beta.target.format(b)}")
        return self

    def __eq__(self, other):
        if not isinstance(other, HornDatum):
            return NotImplemented
        return (self.horn == other.horn and self.coeff == other.coeff
                and self.presentation == other.presentation and self.faces == other.faces)

    def to_json(self) -> dict:
        return {"faces": {str(j): f.to_json()["images"] for j, f in sorted(self.faces.items())}}

    @classmethod
    def from_json(cls, horn: Horn, coeff: BasisDGRing, presentation: SemiFreePresentation,
                  data: dict) -> HornDatum:
        ring = cyl(horn.q - 1, coeff)
        faces = {int(j): SemiFreeHom.from_json(presentation, ring, {"images": imgs})
                 for j, imgs in data.get("faces", data).items()}
        return cls(horn, coeff, presentation, faces)


def _coeff(B: BasisDGRing | None) -> BasisDGRing:
    return integers() if B is None else B


def assemble(datum: HornDatum) -> SemiFreeHom:
    """The map ``A -> N(Lambda^q_i, B)`` whose face restrictions are the given faces."""
    datum.validate()
    q, i, B = datum.horn.q, datum.horn.i, datum.coeff
    lim = cached_limit_ring(q, i, B)
    H = horn_nerve(q, i, B)
    images = {}
    for v in datum.presentation.vars:
        parts = {j: f.image(v.name) for j, f in datum.faces.items()}
        if not any(parts.values()):
            continue
        t = lim.from_components(parts, v.degree)
        images[v.name] = lim.from_limit(t)
    h = SemiFreeHom(datum.presentation, H, images, name=f"assemble[{datum.horn}]")
    report = h.check()
    if not report.ok:
        raise LiftingError("assembled map is not a DG ring map: " + "; ".join(report.failures))
    if horn_faces(h, datum.horn, B) != datum.faces:
        raise LiftingError("assembled map does not restrict to the given faces")
    return h


def horn_faces(h: SemiFreeHom, horn: Horn, B: BasisDGRing | None = None) -> dict[int, SemiFreeHom]:
    """Restrict a map into the horn ring to each face."""
    B = _coeff(B)
    return {j: h.postcompose(face_restriction(horn.q, horn.i, j, B))
            for j in horn_diagram(horn).J0}


def restrict_to_horn(h: SemiFreeHom, horn: Horn, B: BasisDGRing | None = None) -> HornDatum:
    """The horn datum of a map ``A -> N(Lambda^q_i, B)``."""
    return HornDatum(horn, _coeff(B), h.source, horn_faces(h, horn, B))


def boundary(f: SemiFreeHom | Filler, horn: Horn, B: BasisDGRing | None = None) -> HornDatum:
    """Faces ``j ≠ i`` of a ``q``-simplex ``A -> Cyl_q(B)``."""
    if isinstance(f, Filler):
        f = f.hom
    B = _coeff(B)
    if f.target != cyl(horn.q, B):
        raise ValueError(f"{f!r} does not land in Cyl_{horn.q}({B.name})")
    faces = {j: f.postcompose(face_map(j, horn.q, B)) for j in horn_diagram(horn).J0}
    return HornDatum(horn, B, f.source, faces)


@dataclass
class Filler:
    datum: HornDatum
    hom: SemiFreeHom

    def check(self) -> bool:
        return self.hom.check().ok and boundary(self.hom, self.datum.horn,
                                                self.datum.coeff).faces == self.datum.faces


def fill(datum: HornDatum) -> Filler:
    """A map ``A -> Cyl_q(B)`` whose faces are the given ones."""
    q, i, B = datum.horn.q, datum.horn.i, datum.coeff
    f = assemble(datum)
    v = restriction_hom(q, i, B)
    ft = lift_hom(v, f, certificate=restriction_certificate(q, i, B))
    filler = Filler(datum, ft)
    got = boundary(ft, datum.horn, B).faces
    for j, face in datum.faces.items():
        if got[j] != face:
            raise FillError(f"face {j} of the filler differs from the datum")
    return filler


def coefficient_pushforward(g: DGRingHom, space: Delta) -> DGRingHom:
    """``N(space, B) -> N(space, B′)`` induced by ``g: B -> B′``."""
    R = chain_ring(space)
    return tensor_hom(identity_hom(R), g, source=nerve_ring(space, g.source),
                      target=nerve_ring(space, g.target))


def push_datum(datum: HornDatum, g: DGRingHom) -> HornDatum:
    if g.source != datum.coeff:
        raise ValueError("coefficient map does not start at the datum's coefficients")
    push = coefficient_pushforward(g, Delta(datum.horn.q - 1))
    return HornDatum(datum.horn, g.target, datum.presentation,
                     {j: f.postcompose(push) for j, f in datum.faces.items()})
