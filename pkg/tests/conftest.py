from __future__ import annotations

import random

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from coxring.coxsys import INF, CoxeterMatrix, default_names, preset_from_string
from coxring.pathalg import Element
from coxring.quotient import QuotientRing, enumerate_basis

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

ACCEPTANCE_PRESETS = ["A2", "A3", "B2", "I2(5)", "I2(6)", "I2(7)", "running-example", "universal3"]
WEYL_PRESETS = ["A2", "A3", "B2", "B3", "I2(6)"]


@pytest.fixture(params=ACCEPTANCE_PRESETS)
def preset_matrix(request) -> CoxeterMatrix:
    return preset_from_string(request.param)


@st.composite
def coxeter_matrices(draw, min_rank=1, max_rank=4, labels=(2, 3, 4, 5, 6, INF)):
    n = draw(st.integers(min_rank, max_rank))
    rows = [[1] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            rows[i][j] = rows[j][i] = draw(st.sampled_from(labels))
    return CoxeterMatrix(default_names(n), rows)


def random_element(rng: random.Random, ring: QuotientRing, paths, terms: int = 3, bound: int = 4):
    chosen = rng.sample(paths, min(terms, len(paths)))
    return ring(Element(ring.alg, {p: rng.randint(-bound, bound) for p in chosen}, ring.domain))


def random_component(rng: random.Random, ring: QuotientRing, max_len: int, r: int, s: int, terms: int = 3):
    paths = enumerate_basis(ring.M, ring.ring, max_len, r, s)
    return random_element(rng, ring, paths, terms) if paths else ring.zero()


def random_word(rng: random.Random, rank: int, max_len: int = 4) -> tuple:
    return tuple(rng.randrange(rank) for _ in range(rng.randint(0, max_len)))


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
