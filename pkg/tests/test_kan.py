import random

import pytest

from dgcyl.dgring import DGRingHom, integers
from dgcyl.horn import horn_nerve, restriction_hom
from dgcyl.kan import (Filler, HornDatum, IncompatibleHornError, assemble, boundary,
                       coefficient_pushforward, fill, push_datum, restrict_to_horn)
from dgcyl.nerve import cyl, face_map
from dgcyl.sampling import random_presentation, sample_hom
from dgcyl.semifree import GradedVar, SemiFreeHom, SemiFreePresentation
from dgcyl.simplex import Delta, Horn

from conftest import load


def unit_only():
    return SemiFreePresentation([GradedVar("t", 0, 0)], {})


def unit_datum(q, i, B=None):
    B = integers() if B is None else B
    face = cyl(q - 1, B)
    faces = {j: SemiFreeHom(unit_only(), face, {"t": face.unit})
             for j in range(q + 1) if j != i}
    return HornDatum(Horn(q, i), B, unit_only(), faces)


def test_assemble_unit_10():
    h = assemble(unit_datum(1, 0))
    H = horn_nerve(1, 0)
    assert h.image("t") == H.unit == H.delta((0,))


def test_assemble_unit_21():
    h = assemble(unit_datum(2, 1))
    assert h.image("t") == horn_nerve(2, 1).unit


@pytest.mark.parametrize("q,i", [(1, 0), (1, 1), (2, 0), (2, 1), (3, 3)])
def test_fill_unit(q, i):
    filler = fill(unit_datum(q, i))
    assert filler.hom.image("t") == cyl(q).unit
    assert filler.check()


def test_fixture_fill(presentation_2_1):
    datum = HornDatum.from_json(Horn(2, 1), integers(), presentation_2_1,
                                load("faces_2_1.json")).validate()
    filler = fill(datum)
    assert isinstance(filler, Filler)
    assert boundary(filler, Horn(2, 1)) == datum
    C = cyl(2)
    assert filler.hom.image("t") == C.unit
    # face 0 sees the edge (1,2), where vertex 1 is relabelled 0
    assert boundary(filler, Horn(2, 1)).faces[0].image("y") == cyl(1).delta((0,))


def test_json_round_trip(presentation_2_1):
    data = load("faces_2_1.json")
    datum = HornDatum.from_json(Horn(2, 1), integers(), presentation_2_1, data)
    assert datum.to_json() == data


def test_incompatible_fixture(presentation_2_1):
    datum = HornDatum.from_json(Horn(2, 1), integers(), presentation_2_1,
                                load("faces_2_1_incompatible.json"))
    with pytest.raises(IncompatibleHornError) as err:
        fill(datum)
    assert err.value.pair == (0, 2)
    assert err.value.generator == "y"


def test_incompatible_pair_is_reported():
    # Λ^3_0 with face 3 sending the unit to zero
    F = cyl(2)
    P = SemiFreePresentation([GradedVar("s", 0, 0)], {})
    faces = {j: SemiFreeHom(P, F, {"s": F.unit}) for j in (1, 2)}
    faces[3] = SemiFreeHom(P, F, {})
    with pytest.raises(IncompatibleHornError) as err:
        HornDatum(Horn(3, 0), integers(), P, faces).validate()
    assert err.value.pair[1] == 3 and err.value.generator == "s"
    assert unit_datum(3, 0).validate().horn == Horn(3, 0)


def test_validate_rejects_wrong_faces():
    datum = unit_datum(2, 1)
    with pytest.raises(ValueError):
        HornDatum(datum.horn, datum.coeff, datum.presentation,
                  {0: datum.faces[0]}).validate()


def test_generate_then_forget():
    rng = random.Random(9)
    for q, i in [(2, 0), (2, 2), (3, 1)]:
        v = restriction_hom(q, i)
        for _ in range(4):
            P = random_presentation(rng)
            f = sample_hom(rng, P, cyl(q))
            datum = boundary(f, Horn(q, i))
            filler = fill(datum)
            assert filler.check()
            g = assemble(datum)
            assert g == f.postcompose(v)
            assert restrict_to_horn(g, Horn(q, i)) == datum


def test_coefficient_naturality():
    B = cyl(1)
    g = face_map(1, 1)
    rng = random.Random(2)
    P = random_presentation(rng)
    f = sample_hom(rng, P, cyl(2, B))
    datum = boundary(f, Horn(2, 0), B)
    pushed = push_datum(datum, g)
    filler = fill(datum)
    image = filler.hom.postcompose(coefficient_pushforward(g, Delta(2)))
    assert boundary(image, Horn(2, 0), g.target) == pushed
    assert fill(pushed).check()


def test_pushforward_of_unit_map():
    Z, B = integers(), cyl(1)
    g = DGRingHom(Z, B, {"1": B.unit})
    datum = unit_datum(2, 1)
    pushed = push_datum(datum, g)
    assert pushed == unit_datum(2, 1, B)
    with pytest.raises(ValueError):
        push_datum(pushed, g)
