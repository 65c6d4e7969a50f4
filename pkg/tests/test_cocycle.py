import random

import pytest
import sympy
from hypothesis import given

from casson import linalg, sampling
from casson.cocycle import (cocycle_value, eval_J, eval_Jt, j_form,
                            jt_form, minus_id_homomorphism_obstruction, uniqueness_certificate)
from casson.errors import GenusMismatchError
from casson.exterior import (ExteriorCubeVector, basis_triples, component, induced_action,
                             induced_matrix, wedge3)
from casson.symplectic import gl_embed, gl_generators

from conftest import a, b
from strategies import cube_vectors


def matching_oracle(u, v):
    """-sum u[i,j,k] v[i+g,j+g,k+g] over A-triples: the determinant of -Id on matched indices."""
    g = u.genus
    return -sum(c * v[tuple(x + g for x in t)] for t, c in u if all(x < g for x in t))


def test_J_examples():
    aaa, bbb = wedge3(a(1), a(2), a(3)), wedge3(b(1), b(2), b(3))
    assert eval_J(aaa, bbb) == -1
    assert eval_J(wedge3(a(1), b(2), b(3)), bbb) == 0
    assert eval_J(bbb, bbb) == 0
    tau_a = wedge3(a(1), b(1) - a(3), a(2))
    tau_b = wedge3(a(1) + b(3), b(1), b(2))
    assert eval_J(tau_a, tau_b) == -1
    assert -2 * eval_J(tau_a, tau_b) == 2


def test_Jt_examples():
    aaa, bbb = wedge3(a(1), a(2), a(3)), wedge3(b(1), b(2), b(3))
    assert eval_Jt(bbb, aaa) == -1
    assert eval_Jt(aaa, bbb) == 0


def test_cocycle_value_examples():
    tau_a = wedge3(a(1), b(1) - a(3), a(2))
    tau_b = wedge3(a(1) + b(3), b(1), b(2))
    assert cocycle_value(tau_a, tau_b) == -2
    assert cocycle_value(ExteriorCubeVector.zero(3), tau_b) == 0
    mixed = wedge3(a(1), a(2), b(3))
    assert cocycle_value(mixed, wedge3(a(1), b(2), b(3))) == 0


def test_genus_mismatch():
    with pytest.raises(GenusMismatchError):
        eval_J(ExteriorCubeVector.zero(3), ExteriorCubeVector.zero(4))


@given(cube_vectors(3, 10), cube_vectors(3, 10))
def test_J_matches_oracle(u, v):
    assert eval_J(u, v) == matching_oracle(u, v)
    assert eval_Jt(u, v) == eval_J(v, u)
    assert j_form(3)(u, v) == eval_J(u, v)
    assert jt_form(3)(u, v) == eval_Jt(u, v)


@given(cube_vectors(4), cube_vectors(4), cube_vectors(4))
def test_bilinear_and_cocycle_identity(u, v, w):
    assert eval_J(u + v, w) == eval_J(u, w) + eval_J(v, w)
    assert eval_J(u, v + w) == eval_J(u, v) + eval_J(u, w)
    C = cocycle_value
    assert C(u, v) + C(u + v, w) == C(u, v + w) + C(v, w)


def test_vanishing_exhaustive_g3():
    basis = basis_triples(3)
    for s in basis:
        for t in basis:
            val = eval_J(ExteriorCubeVector.monomial(s, 3), ExteriorCubeVector.monomial(t, 3))
            if component(s, 3) != "A" or component(t, 3) != "B":
                assert val == 0


def test_gl_invariance_random():
    rng = random.Random(3)
    for _ in range(100):
        M = gl_embed(sampling.unimodular(rng, 4))
        u, v = sampling.cube_vector(rng, 4, 8), sampling.cube_vector(rng, 4, 8)
        assert eval_J(induced_action(M, u), induced_action(M, v)) == eval_J(u, v)


def test_stabilization():
    rng = random.Random(4)
    for _ in range(100):
        u, v = sampling.cube_vector(rng, 3, 8), sampling.cube_vector(rng, 3, 8)
        assert eval_J(u.embed(4), v.embed(4)) == eval_J(u, v)


@pytest.mark.parametrize("g", [3, 4])
def test_uniqueness_certificate(g):
    rep = uniqueness_certificate(g)
    assert rep.dimension == 1
    assert rep.matches_J
    assert rep.generator.flat() in (j_form(g).flat(), (-j_form(g)).flat())
    assert rep.to_json()["matches_J"] is True


@pytest.mark.parametrize("g", [3, 4])
def test_relaxed_admits_transpose(g):
    rep = uniqueness_certificate(g, relaxed=True)
    assert rep.dimension == 2
    assert rep.contains_J and rep.contains_Jt


def invariance_oracle(g, relaxed):
    """Nullity of the map B -> (tP B P - B)_P computed column by column with sympy."""
    basis = basis_triples(g)
    kinds = [component(t, g) for t in basis]
    allowed = {("A", "B"), ("B", "A")} if relaxed else {("A", "B")}
    n = len(basis)
    support = [(s, t) for s in range(n) for t in range(n) if (kinds[s], kinds[t]) in allowed]
    Ps = [sympy.Matrix(induced_matrix(gl_embed(G))) for G in gl_generators(g)]
    cols = []
    for s, t in support:
        E = sympy.zeros(n, n)
        E[s, t] = 1
        cols.append(sympy.Matrix.vstack(*[(P.T * E * P - E).reshape(n * n, 1) for P in Ps]))
    return len(sympy.Matrix.hstack(*cols).nullspace())


@pytest.mark.parametrize("g", [3, 4])
@pytest.mark.parametrize("relaxed", [False, True])
def test_uniqueness_matches_sympy(g, relaxed):
    assert uniqueness_certificate(g, relaxed).dimension == invariance_oracle(g, relaxed)


def test_J_satisfies_invariance_directly():
    g = 3
    J = j_form(g)
    for G in gl_generators(g):
        M = gl_embed(G)
        for s in basis_triples(g):
            for t in basis_triples(g):
                u, v = ExteriorCubeVector.monomial(s, g), ExteriorCubeVector.monomial(t, g)
                assert J(induced_action(M, u), induced_action(M, v)) == J(u, v)


@pytest.mark.parametrize("g,count", [(3, 20), (4, 56), (5, 120)])
def test_minus_id_obstruction(g, count):
    rep = minus_id_homomorphism_obstruction(g)
    assert rep.checked == count
    assert rep.passed
