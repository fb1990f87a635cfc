"""Roots, walls and chamber classification of the conifold"""
import json

import pytest

from conifolddt import errors
from conifolddt.conifold import CANONICAL_CHAMBERS, CONIFOLD, ChamberLabel, \
    IMAGINARY, REAL, Root, chamber_to_json, classify_chamber, is_generic, \
    negative_roots, positive_roots, roots_up_to, walls
from conifolddt.torus import Stability


def vecs(roots):
    return [tuple(r.vec) for r in roots]


def test_roots_up_to():
    assert vecs(roots_up_to(4)) == [(1, 0), (0, 1), (1, 1), (2, 1),
                                    (1, 2), (2, 2)]
    assert [r.kind for r in roots_up_to(2)] == [REAL, REAL, IMAGINARY]
    with pytest.raises(ValueError, match="at least 1"):
        roots_up_to(0)


def test_root_validation():
    assert Root((2, 2)).kind == IMAGINARY
    assert Root((2, 3)).is_real
    assert Root((3, 2)).size == 5
    with pytest.raises(ValueError, match="is not a real root"):
        Root((3, 1))
    with pytest.raises(ValueError, match="is not a imaginary root"):
        Root((1, 2), IMAGINARY)
    with pytest.raises(ValueError, match="Unknown root kind"):
        Root((1, 1), "complex")


def test_quiver_data():
    assert CONIFOLD.is_cut()
    assert CONIFOLD.cut_degree(("a1", "b1", "a2", "b2")) == 1
    assert CONIFOLD.euler_form((1, 1), (1, 1)) == -2
    assert CONIFOLD.skew_form((2, 1), (1, 3)) == 0
    assert CONIFOLD.cut_dimension((2, 3)) == 6


def test_walls():
    assert walls("+", 3) == Root((3, 2))
    assert walls("-", 1) == Root((0, 1))
    assert walls("inf") == Root((1, 1))
    with pytest.raises(ValueError, match="positive"):
        walls("+", 0)
    with pytest.raises(ValueError, match="Unknown wall kind"):
        walls("x", 1)


@pytest.mark.parametrize("name", list(CANONICAL_CHAMBERS))
def test_canonical_chambers(name):
    zs = CANONICAL_CHAMBERS[name]
    assert is_generic(zs)
    assert classify_chamber(zs) == ChamberLabel(name)
    # the label only depends on the ray of zeta
    assert classify_chamber(zs.scaled(5)).name == name


@pytest.mark.parametrize("zs,witness", [
    (Stability((-1, 1)), (1, 1)),
    (Stability((1, -1), (1, -1)), (1, 1)),
    (Stability((-2, 3)), (3, 2)),
    (Stability((-1, 2)), (2, 1)),
    (Stability((3, -2)), (2, 3)),
    (Stability((0, 1)), (1, 0)),
    (Stability((1, 0)), (0, 1)),
    (Stability((0, 0), (-3, 4)), (4, 3)),
])
def test_walls_detected(zs, witness):
    result = is_generic(zs)
    assert not result
    assert tuple(result.witness.vec) == witness
    with pytest.raises(errors.NotGenericError, match="lies on the wall"):
        classify_chamber(zs)
    with pytest.raises(errors.NotGenericError) as exc:
        negative_roots(zs, 4)
    assert tuple(exc.value.witness.vec) == witness


def test_negative_roots():
    pt = CANONICAL_CHAMBERS["PT_Y"]
    assert vecs(negative_roots(pt, 5)) == [(1, 0), (2, 1), (3, 2)]
    assert vecs(positive_roots(pt, 3)) == [(0, 1), (1, 1), (1, 2)]
    dt = CANONICAL_CHAMBERS["DT_Y"]
    assert vecs(negative_roots(dt, 4)) == [(1, 0), (1, 1), (2, 1), (2, 2)]
    assert negative_roots(CANONICAL_CHAMBERS["Empty"], 6) == []
    assert len(negative_roots(CANONICAL_CHAMBERS["NCDT"], 6)) == \
        len(roots_up_to(6))


def test_other_chamber():
    # (m, m-1) is negative for m <= 2 only
    zs = Stability((-2, 3), (1, 0))
    label = classify_chamber(zs)
    assert label.name == "Other"
    assert label.description == "negative roots: (m,m-1) for m<=2"
    assert str(label) == "Other(negative roots: (m,m-1) for m<=2)"
    assert vecs(negative_roots(zs, 8)) == [(1, 0), (2, 1)]


def test_other_chamber_tail():
    # (m, m-1) is negative for m > 4 only
    zs = Stability((3, -4), (0, 1))
    label = classify_chamber(zs)
    assert label.name == "Other"
    assert label.description == "negative roots: (m,m-1) for m>4; " \
        "(m,m) for all m; (m-1,m) for all m"
    assert vecs(negative_roots(zs, 9)) == [(0, 1), (1, 1), (1, 2), (2, 2),
                                           (2, 3), (3, 3), (3, 4), (4, 4),
                                           (5, 4), (4, 5)]


def test_chamber_label():
    with pytest.raises(ValueError, match="Unknown chamber name"):
        ChamberLabel("DT_X")
    assert str(ChamberLabel("NCDT")) == "NCDT"


def test_chamber_to_json():
    data = chamber_to_json(CANONICAL_CHAMBERS["PT_Y"], 3)
    assert data == {"zeta": ["-1", "1"], "eps": ["1", "0"],
                    "label": "PT_Y", "generic": True,
                    "negative_roots": [[1, 0], [2, 1]], "witness": None}
    wall = chamber_to_json(Stability(("1/2", "-1/2")), 3)
    assert wall["generic"] is False
    assert wall["label"] is None
    assert wall["witness"] == [1, 1]
    json.dumps(wall)


if __name__ == "__main__":
    # Run all tests
    _loc = locals()
    for _key in list(_loc.keys()):
        if _key.startswith("test_") and hasattr(_loc[_key], "__call__"):
            _loc[_key]()
