import random
import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

from eulerpoincare import build, star_subdivide
from eulerpoincare.simplicial import SimplicialComplex

DATA = Path(__file__).parent / "data"

CLOSED_MODELS = ["sphere-tetra", "sphere-cube", "torus", "klein", "projective-plane", "genus(2)", "crosscaps(3)"]


@pytest.fixture
def data_dir():
    return DATA


@pytest.fixture
def tetra():
    return build("sphere-tetra")


@pytest.fixture
def torus():
    return build("torus")


def random_subdivision(c, rng, max_steps=20):
    for _ in range(rng.randint(0, max_steps)):
        c = star_subdivide(c, rng.choice(c.triangles))
    return c


def subdivided_variants(model, n, seed=0, max_steps=20):
    rng = random.Random(f"{model}-{seed}")
    base = build(model)
    return [random_subdivision(base, rng, max_steps) for _ in range(n)]


@st.composite
def maximal_families(draw, n_vertices=9, max_dim=3, max_size=8):
    """Lists of vertex tuples with distinct entries, as accepted by from_maximal."""
    size = draw(st.integers(0, max_size))
    out = []
    for _ in range(size):
        k = draw(st.integers(1, max_dim + 1))
        vs = draw(st.lists(st.integers(0, n_vertices - 1), min_size=k, max_size=k, unique=True))
        out.append(tuple(vs))
    return out


@st.composite
def complexes(draw, **kw):
    return SimplicialComplex.from_maximal(draw(maximal_families(**kw)))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if not mod or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for row in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.format_result(*row))
