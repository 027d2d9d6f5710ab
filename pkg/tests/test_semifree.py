import json
import random

import pytest

from dgcyl.dgring import Element
from dgcyl.nerve import cyl
from dgcyl.sampling import random_presentation, sample_hom
from dgcyl.semifree import (GradedVar, NCPoly, PresentationError, SemiFreeHom,
                            SemiFreePresentation, check_sf_hom, extend_d)

x = NCPoly.var


def xy_presentation():
    return SemiFreePresentation([GradedVar("x", 1, 0), GradedVar("y", 0, 1)], {"y": x("x")})


def test_d_of_unit_is_zero():
    assert extend_d(xy_presentation(), NCPoly.one()) == 0


def test_leibniz_sign_on_words():
    P = xy_presentation()
    # d(x·y) = d(x)·y + (-1)^1 x·d(y) = -x·x
    assert extend_d(P, x("x") * x("y")) == NCPoly({("x", "x"): -1})
    assert extend_d(P, x("y") * x("x")) == NCPoly({("x", "x"): 1})


def test_d_squared_on_random_words():
    rng = random.Random(3)
    for _ in range(30):
        P = random_presentation(rng)
        names = P.names
        for _ in range(5):
            word = tuple(rng.choice(names) for _ in range(rng.randint(0, 4)))
            poly = NCPoly({word: 1})
            assert extend_d(P, extend_d(P, poly)) == 0


def test_validation_errors():
    with pytest.raises(PresentationError, match="degree"):
        SemiFreePresentation([GradedVar("x", 0, 0), GradedVar("y", 0, 1)], {"y": x("x")})
    with pytest.raises(PresentationError, match="filtration"):
        SemiFreePresentation([GradedVar("x", 1, 1), GradedVar("y", 0, 1)], {"y": x("x")})
    with pytest.raises(PresentationError, match="filtration 0"):
        SemiFreePresentation([GradedVar("x", 1, 0), GradedVar("y", 0, 0)], {"y": x("x")})
    with pytest.raises(PresentationError, match="unknown"):
        SemiFreePresentation([GradedVar("y", 0, 1)], {"y": x("x")})
    with pytest.raises(PresentationError, match="unique"):
        SemiFreePresentation([GradedVar("x", 0, 0), GradedVar("x", 1, 0)], {})


def test_validation_rejects_d_squared_nonzero():
    # d z = y with d y = x != 0 gives d d z = x
    with pytest.raises(PresentationError, match="d\\(d"):
        SemiFreePresentation([GradedVar("x", 1, 0), GradedVar("y", 0, 1),
                              GradedVar("z", -1, 2)], {"y": x("x"), "z": x("y")})


def test_infer_filtration():
    P = SemiFreePresentation.infer_filtration(
        [("x", 0), ("y", -1), ("z", -2)],
        {"y": x("x") * x("x") - x("x"), "z": x("y") * x("x") - x("x") * x("y")})
    assert [(v.name, v.filt) for v in P.vars] == [("x", 0), ("y", 1), ("z", 2)]
    with pytest.raises(PresentationError, match="cyclic"):
        SemiFreePresentation.infer_filtration([("a", 0), ("b", 1)], {"a": x("b"), "b": x("a")})


def test_json_round_trip():
    P = SemiFreePresentation([GradedVar("x", 0, 0), GradedVar("y", -1, 1)],
                             {"y": x("x") * x("x") - x("x")})
    Q = SemiFreePresentation.from_json(json.loads(P.dumps()))
    assert Q == P
    assert json.loads(P.dumps())["d"]["y"] == [{"coef": -1, "word": ["x"]},
                                               {"coef": 1, "word": ["x", "x"]}]


def test_eval_unit_and_products():
    C = cyl(2)
    P = xy_presentation()
    h = SemiFreeHom(P, C, {"x": C.d(C.delta((1,))), "y": C.delta((1,))})
    assert h.eval(NCPoly.one()) == C.unit
    rng = random.Random(5)
    for _ in range(20):
        w1 = tuple(rng.choice("xy") for _ in range(rng.randint(0, 3)))
        w2 = tuple(rng.choice("xy") for _ in range(rng.randint(0, 3)))
        assert h.eval(NCPoly({w1 + w2: 1})) == C.mul(h.eval(NCPoly({w1: 1})), h.eval(NCPoly({w2: 1})))


def test_check_sf_hom_accepts_and_rejects():
    C = cyl(2)
    P = xy_presentation()
    good = SemiFreeHom(P, C, {"x": C.d(C.delta((1,))), "y": C.delta((1,))})
    assert check_sf_hom(good).ok
    bad = SemiFreeHom(P, C, {"x": C.d(C.delta((1,))), "y": C.delta((2,))})
    report = check_sf_hom(bad)
    assert not report.ok
    assert report.failures[0].startswith("h(d y)")


def test_hom_json_round_trip():
    C = cyl(1)
    P = xy_presentation()
    h = SemiFreeHom(P, C, {"x": -C.delta((0, 1)), "y": C.delta((0,))})
    again = SemiFreeHom.from_json(P, C, json.loads(h.dumps()))
    assert again == h


def test_sample_hom_is_valid():
    rng = random.Random(11)
    for _ in range(20):
        P = random_presentation(rng)
        h = sample_hom(rng, P, cyl(2))
        assert h.check().ok
        for v in P.vars:
            assert cyl(2).is_homogeneous(h.image(v.name), v.degree)


def test_random_presentations_respect_bounds():
    rng = random.Random(2)
    for _ in range(50):
        P = random_presentation(rng)
        assert 1 <= len(P.vars) <= 6
        assert all(-2 <= v.degree <= 2 and 0 <= v.filt <= 3 for v in P.vars)


def test_postcompose():
    from dgcyl.nerve import face_map
    C = cyl(1)
    P = xy_presentation()
    h = SemiFreeHom(P, C, {"x": -C.delta((0, 1)), "y": C.delta((0,))})
    g = h.postcompose(face_map(1, 1))
    assert g.image("y") == cyl(0).delta((0,))
    assert g.image("x") == Element()
    assert g.check().ok
