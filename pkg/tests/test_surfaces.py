import random

import pytest

from eulerpoincare import build, from_maximal, star_subdivide, euler_characteristic, counts
from eulerpoincare.errors import Disconnected, NoTriangle, NotPure, VertexNotFound
from eulerpoincare.orientation import orientability_check, witness_flips
from eulerpoincare.surfaces import (
    ClosedSurface, NotSurface, PseudoSurface, classify, connected_sum, surface_kind, vertex_link,
)

from conftest import CLOSED_MODELS


def _link_oracle(c, v):
    """Link edges read straight off the triangle list."""
    return {tuple(x for x in t if x != v) for t in c.triangles if v in t}


def test_pinched_apex_link():
    c = build("pinched-torus")
    apex = 6
    link = vertex_link(c, apex)
    assert set(link.edges) == _link_oracle(c, apex)
    assert set(link.edges) == {(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)}
    assert link.cycle_count() == 2
    assert sorted(map(sorted, link.components())) == [[0, 1, 2], [3, 4, 5]]


def test_torus_links_are_hexagons(torus):
    for v in torus.vertices:
        link = vertex_link(torus, v)
        assert set(link.edges) == _link_oracle(torus, v)
        assert len(link.vertices) == 6 and len(link.edges) == 6
        assert link.is_cycle()
    assert set(vertex_link(torus, 0).vertices) == {1, 2, 3, 4, 6, 8}


def test_single_triangle_link():
    link = vertex_link(from_maximal([(0, 1, 2)]), 0)
    assert link.edges == ((1, 2),)
    assert not link.is_cycle()


def test_vertex_link_missing():
    with pytest.raises(VertexNotFound):
        vertex_link(build("torus"), 42)


def test_surface_kind_examples(torus):
    assert isinstance(surface_kind(torus), ClosedSurface)
    pk = surface_kind(build("pinched-torus"))
    assert isinstance(pk, PseudoSurface) and list(pk.pinch_vertices) == [6]
    assert isinstance(surface_kind(from_maximal([(0, 1, 2)])), NotSurface)
    assert isinstance(surface_kind(from_maximal([(0, 1, 2), (0, 1, 3), (0, 1, 4)])), NotSurface)


def test_classify_klein():
    r = classify(build("klein"))
    assert (r.chi, r.orientable, r.genus) == (0, False, 2)
    assert r.label == "connected sum of 2 projective planes"
    assert r.summary() == "non-orientable, genus 2, chi 0"


def test_classify_projective_plane():
    r = classify(build("projective-plane"))
    assert (r.chi, r.orientable, r.genus) == (1, False, 1)
    assert r.label == "connected sum of 1 projective plane"


def test_classify_sphere(tetra):
    r = classify(tetra)
    assert (r.chi, r.orientable, r.genus, r.closed) == (2, True, 0, True)
    assert r.label == "orientable genus-0 surface"


def test_classify_pseudo_surface():
    r = classify(build("pinched-torus"))
    assert r.chi == 1 and r.kind == "pseudo" and r.genus is None
    assert r.pinch_vertices == [6]
    assert not r.closed


def test_classify_not_surface():
    r = classify(from_maximal([(0, 1, 2)]))
    assert r.kind == "not-surface" and r.orientable is None and r.genus is None


def test_classify_preconditions(tetra):
    with pytest.raises(NotPure):
        classify(tetra.union(from_maximal([(7,)])))
    with pytest.raises(Disconnected):
        classify(tetra.union(tetra.relabel(lambda v: v + 10)))


@pytest.mark.parametrize("model", CLOSED_MODELS)
def test_report_invariant(model):
    r = classify(build(model))
    assert r.closed
    if r.orientable:
        assert r.chi == 2 - 2 * r.genus
    else:
        assert r.chi == 2 - r.genus


def test_connected_sum_examples(tetra, torus):
    tt = connected_sum(torus, torus)
    r = classify(tt)
    assert (r.chi, r.orientable, r.genus) == (-2, True, 2)
    pp = classify(connected_sum(build("projective-plane"), build("projective-plane")))
    assert (pp.chi, pp.orientable, pp.genus) == (0, False, 2)
    st = classify(connected_sum(tetra, torus))
    assert (st.chi, st.genus) == (0, 1)


def _oracle_connected_sum_chi(a, b):
    """Recount by hand: drop one triangle from each, merge three vertex pairs and three edge pairs."""
    na, nb = counts(a), counts(b)
    return (na[0] + nb[0] - 3) - (na[1] + nb[1] - 3) + (na[2] - 1 + nb[2] - 1)


@pytest.mark.parametrize("a", CLOSED_MODELS)
@pytest.mark.parametrize("b", CLOSED_MODELS)
def test_connected_sum_chi_by_recount(a, b):
    ca, cb = build(a), build(b)
    s = connected_sum(ca, cb)
    n = counts(s)
    assert n == (counts(ca)[0] + counts(cb)[0] - 3, counts(ca)[1] + counts(cb)[1] - 3,
                 counts(ca)[2] + counts(cb)[2] - 2)
    assert euler_characteristic(s) == _oracle_connected_sum_chi(ca, cb)
    assert euler_characteristic(s) == euler_characteristic(ca) + euler_characteristic(cb) - 2
    assert surface_kind(s).kind == "closed"
    v = orientability_check(s)
    if not (orientability_check(ca).orientable and orientability_check(cb).orientable):
        assert not v.orientable and witness_flips(v.witness)
    else:
        assert v.orientable


@pytest.mark.parametrize("model", CLOSED_MODELS)
def test_sphere_is_identity(tetra, model):
    c = build(model)
    s = connected_sum(c, tetra)
    assert classify(s).label == classify(c).label
    assert euler_characteristic(s) == euler_characteristic(c)


def test_connected_sum_no_triangle():
    with pytest.raises(NoTriangle):
        connected_sum(from_maximal([(0, 1)]), build("torus"))


def test_connected_sum_two_tetrahedra(tetra):
    s = connected_sum(tetra, tetra)
    assert counts(s) == (5, 9, 6)
    assert classify(s).genus == 0


def test_subdivided_torus_stays_genus_one(torus):
    rng = random.Random(7)
    for _ in range(20):
        c = torus
        for _ in range(rng.randint(0, 10)):
            c = star_subdivide(c, rng.choice(c.triangles))
        assert isinstance(surface_kind(c), ClosedSurface)
        assert classify(c).genus == 1
