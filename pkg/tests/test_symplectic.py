import random

import pytest
from hypothesis import given, strategies as st

from casson import linalg, sampling
from casson.errors import BlockFormError, GenusMismatchError, NotSymplecticError
from casson.symplectic import (BlockPair, HomologyVector, SymplecticMatrix, coset_block_analysis,
                               compose_spB, decompose_spB, elementary, gl_embed, omega,
                               omega_matrix, transvection)

from conftest import a, b
from strategies import vectors


def test_omega_basis_convention():
    assert omega(a(1), b(1)) == 1
    assert omega(a(1), a(2)) == 0
    assert omega(b(1), a(1)) == -1
    assert omega(b(1), b(2)) == 0
    assert omega(a(1), b(2)) == 0


def test_omega_genus_mismatch():
    with pytest.raises(GenusMismatchError):
        omega(a(1, 3), b(1, 4))


@given(vectors(3), vectors(3), vectors(3), st.integers(-5, 5))
def test_omega_antisymmetric_bilinear(x, y, z, k):
    assert omega(x, y) == -omega(y, x)
    assert omega(x + k * z, y) == omega(x, y) + k * omega(z, y)


def test_transvection_examples():
    T = transvection(a(1), 1)
    # x + omega(x, a1) a1 with omega(b1, a1) = -1
    assert T @ b(1) == b(1) - a(1)
    assert T @ a(1) == a(1)
    assert transvection(HomologyVector.zero(3), 7).is_identity()
    assert transvection(a(2), -1) == transvection(a(2), 1).inverse()


@given(vectors(3, -2, 2), st.integers(-3, 3), st.integers(-3, 3))
def test_transvection_powers_add(c, p, q):
    assert transvection(c, p) @ transvection(c, q) == transvection(c, p + q)


def test_not_symplectic_rejected():
    with pytest.raises(NotSymplecticError):
        SymplecticMatrix(1, ((2, 0), (0, 1)))


def test_decompose_identity_and_transvection():
    I3 = linalg.identity(3)
    assert decompose_spB(SymplecticMatrix.identity(3)) == BlockPair(I3, linalg.zeros(3))
    # twist along b1 sends a1 -> a1 + b1, so M' = E11 and S = E11
    p = decompose_spB(transvection(b(1)))
    assert p.G == I3
    assert p.S == ((1, 0, 0), (0, 0, 0), (0, 0, 0))


def test_decompose_rejects_non_spB():
    with pytest.raises(BlockFormError):
        decompose_spB(transvection(a(1)))


@pytest.mark.parametrize("g", [3, 4, 5])
def test_semidirect_law(g):
    rng = random.Random(g)
    for _ in range(100):
        A, B = sampling.spb_matrix(rng, g), sampling.spb_matrix(rng, g)
        assert decompose_spB(A @ B) == decompose_spB(A) * decompose_spB(B)
        assert compose_spB(decompose_spB(A)) == A


def test_gl_embed_examples():
    assert gl_embed(linalg.identity(3)).is_identity()
    minus = gl_embed(linalg.neg(linalg.identity(3)))
    assert minus.entries == linalg.neg(linalg.identity(6))
    E12 = elementary(0, 1, 3)
    _, _, _, BB = gl_embed(E12).blocks()
    # tE12^-1: b1 -> b1 - b2, b2 -> b2
    assert BB == ((1, 0, 0), (-1, 1, 0), (0, 0, 1))
    with pytest.raises(BlockFormError):
        gl_embed(((2, 0, 0), (0, 1, 0), (0, 0, 1)))


def test_symplecticity_of_constructions():
    rng = random.Random(0)
    om = omega_matrix(4)
    for _ in range(50):
        for M in (transvection(sampling.vector(rng, 4)), gl_embed(sampling.unimodular(rng, 4))):
            e = M.entries
            assert linalg.matmul(linalg.transpose(e), linalg.matmul(om, e)) == om


def test_coset_block_analysis():
    I = SymplecticMatrix.identity(3)
    assert coset_block_analysis(I, I) == linalg.identity(3)
    G = linalg.matmul(elementary(0, 2, 3), elementary(1, 0, 3))
    M = gl_embed(G)
    assert coset_block_analysis(M.inverse(), M) == G
    # a counterexample pair whose product is not the identity
    with pytest.raises(BlockFormError):
        coset_block_analysis(transvection(a(1)), transvection(b(1)))
    with pytest.raises(BlockFormError):
        coset_block_analysis(transvection(a(1)).inverse(), transvection(a(1)))


def test_embed_vector_and_matrix():
    v = HomologyVector(2, (1, 2, 3, 4))
    assert v.embed(4, 1).coords == (0, 1, 2, 0, 0, 3, 4, 0)
    T = transvection(v)
    assert T.embed(4, 1) == transvection(v.embed(4, 1))
