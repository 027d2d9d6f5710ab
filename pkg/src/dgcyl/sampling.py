"""Random semi-free presentations and random maps out of them.

Maps are sampled generator by generator: closed generators go to random
cocycles, the others to a solution of ``d c = f(dx)`` plus a random
cocycle.  When the equation has no integer solution the whole map is
resampled.
"""
from __future__ import annotations

import random

import numpy as np

from . import intlin
from .dgring import BasisDGRing, DGRingHom, Element
from .semifree import GradedVar, NCPoly, SemiFreeHom, SemiFreePresentation, Word


class SamplingError(RuntimeError):
    pass


def _random_word(rng: random.Random, pool: list[GradedVar], degree: int,
                 max_len: int) -> Word | None:
    for _ in range(20):
        n = rng.randint(1, max_len)
        word = tuple(rng.choice(pool) for _ in range(n))
        if sum(v.degree for v in word) == degree:
            return tuple(v.name for v in word)
    return None


def random_presentation(rng: random.Random, max_gens: int = 6, degrees: tuple[int, int] = (-2, 2),
                        max_filt: int = 3, max_len: int = 3) -> SemiFreePresentation:
    """Generators with degrees in ``degrees`` and filtration up to ``max_filt``.

    A generator of positive filtration gets ``d x = d(p) + c·w`` where ``p``
    is a random polynomial in earlier generators and ``w`` a word in closed
    ones, so ``d∘d = 0`` holds by construction.
    """
    n = rng.randint(1, max_gens)
    lo, hi = degrees
    gens: list[GradedVar] = []
    d: dict[str, NCPoly] = {}
    closed: list[GradedVar] = []
    for k in range(n):
        name = f"x{k}"
        deg = rng.randint(lo, hi)
        earlier = [g for g in gens if g.filt < max_filt]
        if not earlier or rng.random() < 0.35:
            g = GradedVar(name, deg, 0)
            gens.append(g)
            closed.append(g)
            continue
        filt_cap = max(g.filt for g in earlier) + 1
        partial = SemiFreePresentation(gens, d, validate=False)
        dx = NCPoly()
        w = _random_word(rng, earlier, deg, max_len)
        if w is not None:
            dx = dx + partial.extend_d(NCPoly({w: rng.choice([-1, 1, 2])}))
        cw = _random_word(rng, closed, deg + 1, max_len) if closed else None
        if cw is not None and rng.random() < 0.7:
            dx = dx + NCPoly({cw: rng.choice([-1, 1])})
        if dx:
            filt = 1 + max(partial.var(y).filt for y in dx.variables())
        else:
            filt = rng.randint(1, filt_cap)
        g = GradedVar(name, deg, filt)
        gens.append(g)
        if dx:
            d[name] = dx
        else:
            closed.append(g)
    return SemiFreePresentation(gens, d)


def random_cocycle(rng: random.Random, ring: BasisDGRing, k: int, scale: int = 2,
                   zero_p: float = 0.25) -> Element:
    if not ring.rank(k) or rng.random() < zero_p:
        return Element()
    basis = intlin.kernel_basis(ring.diff_matrix(k))
    vec = np.zeros(ring.rank(k), dtype=object)
    for b in basis:
        vec = vec + rng.randint(-scale, scale) * np.array(b, dtype=object)
    return ring.from_vector(vec, k)


def sample_hom(rng: random.Random, P: SemiFreePresentation, target: BasisDGRing,
               attempts: int = 200, scale: int = 2) -> SemiFreeHom:
    """A random DG ring map ``P -> target``."""
    for _ in range(attempts):
        images: dict[str, Element] = {}
        ok = True
        for v in P.vars:
            partial = SemiFreeHom(P, target, images)
            need = partial.eval(P.d(v.name))
            k = v.degree
            if need:
                sol = intlin.solve(target.diff_matrix(k), target.to_vector(need, k + 1)) \
                    if target.rank(k) else None
                if sol is None:
                    ok = False
                    break
                base = target.from_vector(sol, k)
            else:
                base = Element()
            images[v.name] = base + random_cocycle(rng, target, k, scale)
        if ok:
            h = SemiFreeHom(P, target, images, name="sample")
            if not h.check().ok:
                raise SamplingError("sampled map failed its own check")
            return h
    raise SamplingError(f"no map found to {target.name} after {attempts} attempts")


def kernel_boundary(rng: random.Random, v: DGRingHom, k: int, scale: int = 2) -> Element:
    """``d e`` for a random ``e`` of degree ``k - 1`` in ``ker v``."""
    S = v.source
    if not S.rank(k - 1):
        return Element()
    vecs = intlin.kernel_basis(v.matrix(k - 1))
    e = Element()
    for b in vecs:
        e = e + S.from_vector(b, k - 1) * rng.randint(-scale, scale)
    return S.d(e)
