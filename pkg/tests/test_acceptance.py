"""The ten acceptance criteria, each run in full and reported on one line.

Run under pytest (lines are printed even with output capture on) or as a
script: ``python3 tests/test_acceptance.py``.
"""
import random
import sys
import time

import pytest

from dgcyl.dgring import DGRingHom, Element, check_axioms, integers
from dgcyl.horn import (certify_surjective_quasi_iso, horn_nerve, limit_iso_report, limit_ring,
                        restriction_hom)
from dgcyl.intlin import CohomologyGroup
from dgcyl.kan import assemble, boundary, fill, restrict_to_horn
from dgcyl.keller import extend_homotopy, keller_cyl, keller_to_cyl1
from dgcyl.lifting import CertificateError, homotopy_between_lifts, is_lift, lift_hom
from dgcyl.nerve import compare_oracle, cyl, normalization_oracle, structure_identity_check
from dgcyl.sampling import kernel_boundary, random_presentation, sample_hom
from dgcyl.semifree import GradedVar, SemiFreeHom, SemiFreePresentation
from dgcyl.simplex import Delta, Horn, check_coequalizer

SEED = 20240611


def horns(max_q, min_q=1):
    return [(q, i) for q in range(min_q, max_q + 1) for i in range(q + 1)]


def announce(number, title, ok, elapsed, budget, detail=""):
    verdict = "PASS" if ok and elapsed < budget else "FAIL"
    line = f"criterion {number:>2} {title}: {verdict} ({elapsed:.2f}s of {budget}s)"
    return line + (f" {detail}" if detail else "")


@pytest.fixture
def emit(capsys):
    def _emit(line):
        with capsys.disabled():
            print("\n" + line)
    return _emit


def run_criterion(number, title, budget, body, emit):
    start = time.perf_counter()
    failures = []
    detail = body(failures) or ""
    elapsed = time.perf_counter() - start
    emit(announce(number, title, not failures, elapsed, budget,
                  detail if not failures else f"{detail} first failure: {failures[0]}"))
    assert not failures, failures[:5]
    assert elapsed < budget


# -- 1 ------------------------------------------------------------------------

def axioms(failures):
    count = 0
    for q in range(5):
        rings = [cyl(q)] + [horn_nerve(q, i) for i in range(q + 1) if q >= 1]
        for R in rings:
            report = check_axioms(R)
            count += 1
            if not report.ok:
                failures.append(report.summary())
    return f"{count} rings"


def test_01_axioms(emit):
    run_criterion(1, "axiom suite q<=4", 10, axioms, emit)


# -- 2 ------------------------------------------------------------------------

def oracle(failures):
    spaces = [Delta(q) for q in range(4)] + [Horn(q, i) for q, i in horns(3)]
    for space in spaces:
        report = compare_oracle(normalization_oracle(space, max_dim=3))
        if not report.ok:
            failures.append(report.summary())
    return f"{len(spaces)} spaces"


def test_02_normalization_oracle(emit):
    run_criterion(2, "normalization oracle q,p<=3", 30, oracle, emit)


# -- 3 ------------------------------------------------------------------------

def keller(failures):
    f = keller_to_cyl1()
    K, C = keller_cyl(), cyl(1)
    ids = K.ids
    hit = [next(iter(f.image(a))) for a in ids if len(f.image(a)) == 1
           and f.image(a)[next(iter(f.image(a)))] == 1]
    if len(ids) != 3 or sorted(hit) != sorted(C.ids):
        failures.append("e -> δ is not a bijection of bases")
    diff_checked = prod_checked = 0
    for a in ids:
        diff_checked += 1
        if f(K.d(Element.basis(a))) != C.d(f.image(a)):
            failures.append(f"d({a})")
        for b in ids:
            prod_checked += 1
            if f(K.mul(Element.basis(a), Element.basis(b))) != C.mul(f.image(a), f.image(b)):
                failures.append(f"{a}*{b}")
    if f(K.unit) != C.unit:
        failures.append("unit")
    return f"{diff_checked} differential and {prod_checked} product constants"


def test_03_keller_iso(emit):
    run_criterion(3, "Keller cylinder iso Cyl_1", 1, keller, emit)


# -- 4 ------------------------------------------------------------------------

def certificates(failures):
    count = 0
    Z = CohomologyGroup(1)
    for B in (integers(), cyl(1)):
        for q, i in horns(4):
            cert = certify_surjective_quasi_iso(restriction_hom(q, i, B))
            count += 1
            if not cert.ok:
                failures.append(cert.summary())
            for side in (cert.source_cohomology, cert.target_cohomology):
                nonzero = {k: g for k, g in side.items() if not g.is_zero}
                if nonzero != {0: Z}:
                    failures.append(f"({q},{i}) over {B.name}: H = {nonzero}")
    return f"{count} restriction maps"


def test_04_certificates(emit):
    run_criterion(4, "restriction certificates q<=4", 60, certificates, emit)


# -- 5 ------------------------------------------------------------------------

def limits(failures):
    for q, i in horns(4):
        lim = limit_ring(q, i)
        report = limit_iso_report(lim)
        if not report.ok:
            failures.append(report.summary())
        if lim.ring.ranks() != horn_nerve(q, i).ranks():
            failures.append(f"({q},{i}) ranks differ")
    return f"{len(horns(4))} horns"


def test_05_limit_iso(emit):
    run_criterion(5, "limit ring iso q<=4", 60, limits, emit)


# -- 6 ------------------------------------------------------------------------

def coequalizers(failures):
    for q, i in horns(4):
        report = check_coequalizer(Horn(q, i), max_dim=q + 1)
        if not report.ok:
            failures.append(f"({q},{i}): {report.failures[0]}")
    return f"{len(horns(4))} horns"


def test_06_coequalizer(emit):
    run_criterion(6, "coequalizer brute force q<=4", 10, coequalizers, emit)


# -- 7 ------------------------------------------------------------------------

def random_lifts(failures):
    rng = random.Random(SEED)
    lifted = 0
    while lifted < 50:
        q = rng.randint(1, 3)
        i = rng.randint(0, q)
        v = restriction_hom(q, i)
        P = random_presentation(rng)
        u = sample_hom(rng, P, v.target)
        if all(not u.image(x) or u.image(x) == v.target.unit for x in P.names):
            continue
        ut = lift_hom(v, u)
        lifted += 1
        if not is_lift(v, u, ut):
            failures.append(f"({q},{i}) lift of {u.images} failed")
    # negative control: the unit inclusion Z -> Cyl_1 is not onto
    Zr, C = cyl(0), cyl(1)
    incl = DGRingHom(Zr, C, {"(0)|1": C.unit})
    P = SemiFreePresentation([GradedVar("y", 0, 0)], {})
    controls = 0
    for target in (C.unit, Element()):
        u = SemiFreeHom(P, C, {"y": target})
        try:
            lift_hom(incl, u)
            failures.append("non-surjective map was accepted")
        except CertificateError:
            controls += 1
    return f"{lifted} lifts, {controls} rejections"


def test_07_random_lifts(emit):
    run_criterion(7, "random lifts", 120, random_lifts, emit)


# -- 8 ------------------------------------------------------------------------

def lift_homotopies(failures):
    rng = random.Random(SEED + 8)
    pairs = tries = 0
    while pairs < 10:
        tries += 1
        if tries > 2000:
            failures.append(f"only {pairs} distinct pairs in {tries} tries")
            break
        q = rng.randint(1, 3)
        i = rng.randint(0, q)
        v = restriction_hom(q, i)
        P = random_presentation(rng)
        u = sample_hom(rng, P, v.target)
        u0 = lift_hom(v, u)
        u1 = lift_hom(v, u, adjust=lambda x: kernel_boundary(rng, v, x.degree))
        if u0 == u1:
            continue
        pairs += 1
        gamma = homotopy_between_lifts(v, u, u0, u1)
        S = v.source
        for x in P.vars:
            g = gamma.get(x.name, Element())
            if v(g):
                failures.append(f"v(γ({x.name})) != 0")
            lhs = S.d(g) + _gamma_of_d(u0, u1, gamma, x.name)
            if lhs != u1.image(x.name) - u0.image(x.name):
                failures.append(f"homotopy identity fails on {x.name}")
    return f"{pairs} pairs from {tries} samples"


def _gamma_of_d(u0, u1, gamma, name):
    return extend_homotopy(u0, u1, gamma, u0.source.d(name))


def test_08_homotopies_between_lifts(emit):
    run_criterion(8, "homotopies between distinct lifts", 60, lift_homotopies, emit)


# -- 9 ------------------------------------------------------------------------

def kan_fills(failures):
    rng = random.Random(SEED + 9)
    cases = horns(3, min_q=2)
    done = 0
    while done < 25:
        q, i = cases[done % len(cases)]
        P = random_presentation(rng)
        f = sample_hom(rng, P, cyl(q))
        datum = boundary(f, Horn(q, i))
        if all(not g.image(x) or g.image(x) == g.target.unit
               for g in datum.faces.values() for x in P.names):
            continue
        done += 1
        filler = fill(datum)
        if boundary(filler, Horn(q, i)) != datum:
            failures.append(f"({q},{i}) boundary of the filler differs")
        glued = assemble(datum)
        if restrict_to_horn(glued, Horn(q, i)) != datum:
            failures.append(f"({q},{i}) assemble/restrict round trip")
        if glued != f.postcompose(restriction_hom(q, i)):
            failures.append(f"({q},{i}) assemble differs from the restriction of f")
    return f"{done} horn data over {len(cases)} horns"


def test_09_kan_fills(emit):
    run_criterion(9, "generate-then-forget horn filling", 180, kan_fills, emit)


# -- 10 -----------------------------------------------------------------------

def identities(failures):
    report = structure_identity_check(max_q=3, B=integers())
    if not report.ok:
        failures.extend(report.failures)
    return f"{report.checked} identities"


def test_10_simplicial_identities(emit):
    run_criterion(10, "simplicial identities q<=3", 10, identities, emit)


if __name__ == "__main__":
    rows = [(1, "axiom suite q<=4", 10, axioms), (2, "normalization oracle q,p<=3", 30, oracle),
            (3, "Keller cylinder iso Cyl_1", 1, keller),
            (4, "restriction certificates q<=4", 60, certificates),
            (5, "limit ring iso q<=4", 60, limits), (6, "coequalizer brute force q<=4", 10, coequalizers),
            (7, "random lifts", 120, random_lifts),
            (8, "homotopies between distinct lifts", 60, lift_homotopies),
            (9, "generate-then-forget horn filling", 180, kan_fills),
            (10, "simplicial identities q<=3", 10, identities)]
    bad = 0
    for number, title, budget, body in rows:
        start = time.perf_counter()
        fails = []
        try:
            detail = body(fails) or ""
        except Exception as exc:  # report and keep going
            fails.append(repr(exc))
            detail = ""
        line = announce(number, title, not fails, time.perf_counter() - start, budget, detail)
        bad += "FAIL" in line
        print(line)
    sys.exit(1 if bad else 0)
