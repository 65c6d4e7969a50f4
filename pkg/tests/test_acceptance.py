"""Acceptance criteria, one test per criterion, exact integer comparisons.

Each test appends a PASS/FAIL line to the acceptance log, which is printed in
the pytest terminal summary.  Runtimes are measured with perf_counter and
compared against the stated budget.
"""
import random
import time
from contextlib import contextmanager
from pathlib import Path

from casson import io, sampling
from casson.cocycle import eval_J, j_form, jt_form, uniqueness_certificate
from casson.engine import (AnnotatedWord, Block, alexander_from_seifert, casson_surgery,
                           connected_sum, eval_F, eval_lambda, half_second_derivative,
                           second_difference, surgery_increment_series)
from casson.exterior import ExteriorCubeVector, basis_triples, induced_action
from casson.freegroup import Endo, magnus_identity_check, power, suzuki_generators
from casson.johnson import Separating, lantern_check
from casson.linalg import identity, neg
from casson.suite import run_suite
from casson.symplectic import HomologyVector, gl_embed

DATA = Path(__file__).resolve().parent.parent / "data"


@contextmanager
def criterion(log, number, text, budget=None):
    """Time the body; record PASS only if it finished without error inside the budget."""
    state = {"ok": False}
    start = time.perf_counter()
    try:
        yield state
        state["ok"] = True
    finally:
        elapsed = time.perf_counter() - start
        within = budget is None or elapsed < budget
        verdict = "PASS" if state["ok"] and within else "FAIL"
        limit = f" < {budget:g} s" if budget is not None else ""
        line = f"{verdict} criterion {number}: {text} [{elapsed:.2f} s{limit}]"
        log.append(line)
        print(line)
    assert within, f"criterion {number} took {elapsed:.2f} s, budget {budget} s"


def test_criterion_1_worked_example(acceptance_log):
    with criterion(acceptance_log, 1, "worked example F = 2, lambda = -2", 1.0):
        w = io.parse_annotated(io.load_json(DATA / "example_phab.json"))
        assert eval_F(w) == 2
        assert eval_lambda(w, sign=-1) == -2


def test_criterion_2_uniqueness(acceptance_log):
    with criterion(acceptance_log, 2, "invariant admissible forms: dim 1 = <J>, relaxed adds tJ", 60.0):
        for g in (3, 4):
            strict = uniqueness_certificate(g)
            assert strict.dimension == 1
            assert strict.generator.flat() in (j_form(g).flat(), (-j_form(g)).flat())
            relaxed = uniqueness_certificate(g, relaxed=True)
            assert relaxed.dimension == 2
            assert relaxed.contains_J and relaxed.contains_Jt
            assert j_form(g).flat() != jt_form(g).flat()


def test_criterion_3_minus_id(acceptance_log):
    with criterion(acceptance_log, 3, "gl_embed(-I) acts as -Id on every monomial, g = 3, 4, 5", 5.0):
        for g, count in ((3, 20), (4, 56), (5, 120)):
            M = gl_embed(neg(identity(g)))
            triples = basis_triples(g)
            assert len(triples) == count
            for t in triples:
                e = ExteriorCubeVector.monomial(t, g)
                assert induced_action(M, e) == -e


def test_criterion_4_lantern(acceptance_log):
    with criterion(acceptance_log, 4, "lantern identity at (b1, b2, b3) and 100 random triples", 5.0):
        b = [HomologyVector.b(i, 3) for i in (1, 2, 3)]
        assert lantern_check(*b).passed
        rng = random.Random(2024)
        for _ in range(100):
            rep = lantern_check(*sampling.lagrangian_triple(rng, 3))
            assert rep.orthogonal and rep.passed


def test_criterion_5_magnus(acceptance_log):
    with criterion(acceptance_log, 5, "sigma2 K12 sigma2^-1 = K12^-1 at g = 3, Q^g = id at g = 3, 4, 5", 1.0):
        assert magnus_identity_check(3).passed
        for g in (3, 4, 5):
            assert power(suzuki_generators(g)["Q"], g) == Endo.identity(2 * g)


def test_criterion_6_surgery(acceptance_log):
    with criterion(acceptance_log, 6, "trefoil Delta = t - 1 + t^-1, lambda(+1) = 1; figure-eight -1", 1.0):
        tre = io.parse_seifert(io.load_json(DATA / "trefoil.json"))
        delta = alexander_from_seifert(tre)
        assert delta.coeffs == {-1: 1, 0: -1, 1: 1}
        assert half_second_derivative(delta) == 1
        assert casson_surgery(tre, 1) == 1
        fig = io.parse_seifert(io.load_json(DATA / "figure_eight.json"))
        assert half_second_derivative(alexander_from_seifert(fig)) == -1


def test_criterion_7_connected_sum(acceptance_log):
    with criterion(acceptance_log, 7, "double worked example F = 4, cross term 0 on 100 pairs"):
        w = io.parse_annotated(io.load_json(DATA / "example_phab.json"))
        assert eval_F(connected_sum(w, w)) == 4
        rng = random.Random(7)
        for _ in range(100):
            g1, g2 = rng.randint(3, 4), rng.randint(3, 4)
            w1 = AnnotatedWord(g1, (Block(sampling.bp_word(rng, g1), rng.randint(-3, 3)),))
            w2 = AnnotatedWord(g2, (Block(sampling.bp_word(rng, g2), rng.randint(-3, 3)),))
            s = connected_sum(w1, w2)
            assert eval_J(s.taus[0], s.taus[1]) == 0
            assert eval_F(s) == eval_F(w1) + eval_F(w2)


def test_criterion_8_surgery_increments(acceptance_log):
    with criterion(acceptance_log, 8, "T_K^n increments constant for n = 1..10, F'' = 0"):
        rng = random.Random(8)
        for _ in range(100):
            w = AnnotatedWord(3, tuple(Block(sampling.bp_word(rng, 3), rng.randint(-3, 3))
                                       for _ in range(2)))
            K = sampling.separating(rng, 3)
            series = surgery_increment_series(w, K, 10)
            assert len({y - x for x, y in zip(series, series[1:])}) == 1
            L = Separating(3, 1, rng.randint(-5, 5))
            assert second_difference(w, K, L, rng.randint(0, 5), rng.randint(0, 5)) == 0


PROPERTIES = {
    "2J satisfies the cocycle identity",
    "J is bilinear",
    "J vanishes off W_A x W_B",
    "J is GL_g(Z)-invariant",
    "tau is additive on concatenation",
    "tau is equivariant under conjugation",
    "J is stable under genus inclusion",
    "stabilization commutes with tau and h1_action",
    "F is invariant under stabilization, lambda = sign * F",
}


def test_criterion_9_property_suite(acceptance_log):
    with criterion(acceptance_log, 9, "property suite at g = 3, >= 100 cases per property", 120.0):
        results = {r.name: r for r in run_suite(3, seed=0)}
        assert PROPERTIES <= set(results)
        for name in PROPERTIES:
            assert results[name].cases >= 100, name
        failed = [r.name for r in results.values() if not r.passed]
        assert not failed, failed
