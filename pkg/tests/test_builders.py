import pytest

from eulerpoincare import build, classify, counts, euler_characteristic, validate
from eulerpoincare.builders import MODEL_NAMES, ModelId, model_catalog
from eulerpoincare.errors import InvalidParameter
from eulerpoincare.orientation import orientability_check
from eulerpoincare.surfaces import surface_kind


@pytest.mark.parametrize(
    "model, expected",
    [
        ("sphere-tetra", (4, 6, 4)),
        ("sphere-cube", (8, 18, 12)),
        ("torus", (9, 27, 18)),
        ("klein", (9, 27, 18)),
        ("projective-plane", (6, 15, 10)),
        ("pinched-torus", (7, 18, 12)),
    ],
)
def test_counts(model, expected):
    c = build(model)
    assert counts(c) == expected
    assert validate(c, require_pure=2).ok


def test_torus():
    c = build("torus")
    assert euler_characteristic(c) == 0
    assert orientability_check(c).orientable
    assert surface_kind(c).kind == "closed"


def test_pinched_torus():
    c = build("pinched-torus")
    assert euler_characteristic(c) == 1
    k = surface_kind(c)
    assert k.kind == "pseudo" and len(k.pinch_vertices) == 1


def test_klein_torus_discriminating_pair():
    t, k = build("torus"), build("klein")
    assert counts(t) == counts(k)
    assert orientability_check(t).orientable != orientability_check(k).orientable


@pytest.mark.parametrize("g", range(6))
def test_genus_family(g):
    c = build(f"genus({g})")
    assert euler_characteristic(c) == 2 - 2 * g
    assert validate(c, require_pure=2).ok


@pytest.mark.parametrize("k", range(1, 6))
def test_crosscap_family(k):
    c = build(ModelId("crosscaps", k))
    assert euler_characteristic(c) == 2 - k
    assert validate(c, require_pure=2).ok


def test_genus_three():
    assert euler_characteristic(build("genus(3)")) == -4


def test_genus_zero_is_tetrahedron():
    assert build("genus(0)") == build("sphere-tetra")


@pytest.mark.parametrize("bad", ["genus(-1)", "crosscaps(0)", "donut", "torus(2)", "genus"])
def test_invalid_models(bad):
    with pytest.raises(InvalidParameter):
        build(bad)


def test_model_id_round_trip():
    for text in ["torus", "genus(4)", "crosscaps(2)"]:
        assert str(ModelId.parse(text)) == text


def test_catalog():
    cat = model_catalog()
    assert len(cat) == len(MODEL_NAMES)
    assert {m.name for m, _ in cat} == set(MODEL_NAMES)
    by_name = {m.name: r for m, r in cat}
    assert (by_name["klein"].chi, by_name["klein"].orientable, by_name["klein"].genus) == (0, False, 2)
    assert by_name["sphere-cube"].chi == 2


@pytest.mark.parametrize("m, expected", model_catalog(), ids=lambda x: str(x) if isinstance(x, ModelId) else "")
def test_classify_matches_catalog(m, expected):
    r = classify(build(m))
    assert (r.chi, r.orientable, r.genus, r.kind, r.label) == (
        expected.chi, expected.orientable, expected.genus, expected.kind, expected.label)
    assert r.pinch_vertices == expected.pinch_vertices


def test_builders_return_equal_values():
    assert build("klein") == build("klein")
    assert build("genus(2)") is build(ModelId("genus", 2))
