from __future__ import annotations

import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coxring.coxsys import INF, preset_from_string
from coxring.freeprod import (MatrixQ, QRing, edge_letter, embedding, letter_names,
                              near_domain_check, q_mul, q_system, sample_component)
from coxring.linalg import sparse_rank
from coxring.pathalg import QQ, Element, PathAlgebra
from coxring.quotient import QuotientRing, enumerate_basis, qmul
from coxring.rewrite import C_relator, verify_overlaps
from conftest import ACCEPTANCE_PRESETS, coxeter_matrices
from oracles import naive_reduce, rules_as_dicts

RUN = preset_from_string("running-example")


def _word(Q: QRing, *letters, c=1):
    return Element(Q.alg, {tuple(letters): c}, QQ)


def test_letter_names_and_rule_counts():
    assert letter_names(preset_from_string("A2")) == ["x_{r,s}", "X_{r,s}"]
    assert len(q_system(RUN)) == 10
    assert len(q_system(preset_from_string("I2(inf)"))) == 0
    assert edge_letter(RUN, 1, 0) == 1


def test_I2_4_rules():
    sys = q_system(preset_from_string("I2(4)"))
    assert {(r.tip, str(r.replacement)) for r in sys.rules} == {((0, 1), "2"), ((1, 0), "2")}


def test_small_products():
    Q = QRing(preset_from_string("I2(4)"))
    x, X = _word(Q, 0), _word(Q, 1)
    assert str(Q.mul(x, X)) == "2"
    assert Q.mul(Q.one(), x) == x
    Q5 = QRing(preset_from_string("I2(5)"))
    xX = _word(Q5, 0, 1)
    assert str(Q5.mul(xX, xX)) == "3*x_{r,s}*X_{r,s} - 1"
    assert q_mul(xX, xX, Q5.M) == Q5.mul(xX, xX)


@pytest.mark.parametrize("name", ACCEPTANCE_PRESETS)
def test_q_system_is_confluent(name):
    assert verify_overlaps(q_system(preset_from_string(name))).ok


@settings(max_examples=25)
@given(coxeter_matrices(max_rank=4, labels=(2, 3, 4, 5, 6, 7, 8, 9, 10, 12, INF)))
def test_q_system_confluent_random(M):
    assert verify_overlaps(q_system(M)).ok


@pytest.mark.parametrize("name", ["I2(5)", "I2(7)", "running-example"])
def test_q_normal_form_matches_naive_reducer(name):
    Q = QRing(preset_from_string(name))
    rules = rules_as_dicts(Q.system)
    rng = random.Random(3)
    n = len(Q.alg.letters)
    for trial in range(30):
        terms = {tuple(rng.randrange(n) for _ in range(rng.randint(0, 9))): rng.randint(-3, 3)
                 for _ in range(3)}
        assert dict(Q(terms).terms) == naive_reduce(terms, rules, random.Random(trial))


@pytest.mark.parametrize("name", ACCEPTANCE_PRESETS)
def test_inverse_witnesses(name):
    M = preset_from_string(name)
    Q = QRing(M)
    for k, (i, j) in enumerate(M.graph.pos_edges):
        if M.m(i, j) == INF:
            with pytest.raises(ValueError):
                Q.inverse_witness(k)
            continue
        inv = Q.inverse_witness(k)
        x = _word(Q, 2 * k)
        assert Q.mul(x, inv) == Q.one() == Q.mul(inv, x)


@pytest.mark.parametrize("name", ACCEPTANCE_PRESETS)
def test_no_zero_divisors_sampled(name):
    Q = QRing(preset_from_string(name))
    n = len(Q.alg.letters)
    if not n:
        return
    rng = random.Random(8)
    for _ in range(100):
        a, b = (Q({tuple(rng.randrange(n) for _ in range(rng.randint(0, 5))): rng.randint(1, 3)
                   for _ in range(3)}) for _ in range(2))
        if not a.is_zero() and not b.is_zero():
            assert not Q.mul(a, b).is_zero()


def _lemma_A(E):
    n = E.N + 1
    for i, j, k, l in itertools.product(range(n), repeat=4):
        expected = E.P(i, l) if j == k else E.R.zero()
        assert qmul(E.P(i, j), E.P(k, l)) == expected
    for i in range(n):
        assert E.P(i, i) == E.R.path(i)


def test_lemma_A_running_example():
    _lemma_A(embedding(RUN))


@settings(max_examples=6)
@given(coxeter_matrices(max_rank=6))
def test_lemma_A_random(M):
    _lemma_A(embedding(M))


def test_psi_and_conjugation():
    E = embedding(RUN)
    Q = E.Q
    n = E.N + 1
    for i in range(n):
        assert E.psi(i, Q.one()) == E.R.path(i)
    rng = random.Random(0)
    letters = len(Q.alg.letters)
    for _ in range(10):
        q = Q({tuple(rng.randrange(letters) for _ in range(rng.randint(0, 4))): rng.randint(-2, 2)
               for _ in range(2)})
        i, j = rng.randrange(n), rng.randrange(n)
        assert qmul(qmul(E.P(j, i), E.psi(i, q)), E.P(i, j)) == E.psi(j, q)
    # psi_i(x X) = P_i^o (y ybar) P_o^i
    u, v = RUN.graph.pos_edges[0]
    i = 3
    lhs = E.psi(i, _word(Q, 0, 1))
    rhs = qmul(qmul(E.P(i, u), E.R.path(u, v, u)), E.P(u, i))
    assert lhs == rhs


def test_phi_values():
    E = embedding(RUN)
    n = E.N + 1
    for i in range(n):
        assert E.Phi(E.R.path(i)) == MatrixQ.unit(E.Q, i, i)
        for j in range(n):
            assert E.Phi(E.P(i, j)) == MatrixQ.unit(E.Q, i, j)
    assert E.Phi(E.R.path(1, 0)) == MatrixQ.unit(E.Q, 1, 0, E.Q.letter(1, 0))


def test_phi_kills_ideal_generators():
    E = embedding(RUN)
    alg = PathAlgebra(E.ext)
    for i in range(E.ext.rank):
        for j in range(E.ext.rank):
            if i != j and 3 <= E.ext.m(i, j) < INF:
                assert E.Phi(C_relator(alg, i, j, QQ)).is_zero()


def _check_inverse_pair(E):
    for g in E.generators():
        assert E.Psi(E.Phi(g)) == g
    for X in E.matrix_generators():
        assert E.Phi(E.Psi(X)) == X


def test_phi_psi_inverse_running_example():
    _check_inverse_pair(embedding(RUN))


@settings(max_examples=10)
@given(coxeter_matrices(max_rank=5))
def test_phi_psi_inverse_random(M):
    _check_inverse_pair(embedding(M))


def _random_ext(rng, E, max_len=4):
    paths = enumerate_basis(E.ext, "Rhat", max_len)
    return E.R(Element(E.R.alg, {p: rng.randint(-3, 3) for p in rng.sample(paths, 3)}, QQ))


def test_phi_and_psi_are_multiplicative():
    E = embedding(RUN)
    rng = random.Random(6)
    for _ in range(60):
        x, y = _random_ext(rng, E), _random_ext(rng, E)
        assert E.Phi(qmul(x, y)) == E.Phi(x) @ E.Phi(y)
        X, Y = E.Phi(x), E.Phi(y)
        assert E.Psi(X @ Y) == qmul(E.Psi(X), E.Psi(Y))


@pytest.mark.parametrize("name", ACCEPTANCE_PRESETS)
def test_embed_multiplicative(name):
    M = preset_from_string(name)
    E = embedding(M)
    ring = QuotientRing(M, "Rhat")
    paths = enumerate_basis(M, "Rhat", 5)
    rng = random.Random(2)
    for _ in range(40):
        x, y = (ring(Element(ring.alg, {p: rng.randint(-3, 3) for p in rng.sample(paths, min(3, len(paths)))}, QQ))
                for _ in range(2))
        assert E.embed(x * y) == E.embed(x) @ E.embed(y)
    assert E.embed(ring.path(0)) == MatrixQ.unit(E.Q, 0, 0)


def embed_rank(M, max_len: int) -> tuple[int, int]:
    E = embedding(M)
    paths = enumerate_basis(M, "Rhat", max_len)
    vecs = []
    for p in paths:
        X = E.embed(E.base.path(*p))
        vecs.append({(i, j, w): c for (i, j), q in X.entries.items() for w, c in q.terms.items()})
    return sparse_rank(vecs), len(paths)


@pytest.mark.parametrize("name", ["A3", "B2", "I2(5)", "I2(7)", "running-example"])
def test_embed_injective_on_basis(name):
    r, n = embed_rank(preset_from_string(name), 6)
    assert r == n


def test_negative_control_non_composable_zero():
    ring = QuotientRing(RUN, "Rhat")
    r, s = ring.path(0), ring.path(1)
    assert (r * s).is_zero()
    assert not (r * r).is_zero()


def test_sampler_never_returns_zero():
    ring = QuotientRing(preset_from_string("I2(4)"), "Rhat")
    paths = enumerate_basis(ring.M, "Rhat", 5, 0, 1)
    rng = random.Random(0)
    for _ in range(200):
        assert not sample_component(rng, paths, ring, 1).is_zero()


def test_near_domain_report_is_reproducible():
    M = preset_from_string("B2")
    a = near_domain_check(M, 30, 4, 5, seed=12)
    b = near_domain_check(M, 30, 4, 5, seed=12)
    assert a.ok and a.seed == 12 and a.checked_embed == 30
    assert a == b
    with pytest.raises(ValueError):
        near_domain_check(M, 0)


@settings(max_examples=10)
@given(coxeter_matrices(max_rank=4), st.integers(0, 2 ** 16))
def test_near_domain_random_systems(M, seed):
    rep = near_domain_check(M, 20, 4, 5, seed=seed)
    assert rep.ok, rep.counterexamples
