"""Seeded random generators of test data (symplectic matrices, BP twists, ...)."""
from __future__ import annotations

import random
from typing import List, Tuple

from . import linalg
from .exterior import ExteriorCubeVector, basis_triples
from .johnson import BoundingPair, Separating, TwistWord
from .symplectic import (BlockPair, HomologyVector, SymplecticMatrix, compose_spB,
                         elementary, gl_embed, transvection)


def vector(rng: random.Random, genus: int, lo: int = -2, hi: int = 2) -> HomologyVector:
    return HomologyVector(genus, tuple(rng.randint(lo, hi) for _ in range(2 * genus)))


def cube_vector(rng: random.Random, genus: int, terms: int = 4, lo: int = -3, hi: int = 3) -> ExteriorCubeVector:
    basis = basis_triples(genus)
    out = {}
    for _ in range(terms):
        t = rng.choice(basis)
        out[t] = out.get(t, 0) + rng.randint(lo, hi)
    return ExteriorCubeVector(genus, out)


def unimodular(rng: random.Random, genus: int, steps: int = 4) -> linalg.Matrix:
    G = linalg.identity(genus)
    for _ in range(steps):
        i, j = rng.sample(range(genus), 2)
        E = elementary(i, j, genus)
        if rng.random() < 0.5:
            E = linalg.inverse_unimodular(E)
        G = linalg.matmul(G, E)
    if rng.random() < 0.5:
        k = rng.randrange(genus)
        D = [list(r) for r in linalg.identity(genus)]
        D[k][k] = -1
        G = linalg.matmul(G, linalg.as_matrix(D))
    return G


def symplectic(rng: random.Random, genus: int, steps: int = 4) -> SymplecticMatrix:
    """Product of random transvections along small vectors and a GL block."""
    M = gl_embed(unimodular(rng, genus, 2))
    for _ in range(steps):
        c = vector(rng, genus, -1, 1)
        M = M @ transvection(c, rng.choice((-1, 1)))
    return M


def symmetric(rng: random.Random, genus: int, lo: int = -3, hi: int = 3) -> linalg.Matrix:
    m = [[0] * genus for _ in range(genus)]
    for i in range(genus):
        for j in range(i, genus):
            m[i][j] = m[j][i] = rng.randint(lo, hi)
    return linalg.as_matrix(m)


def spb_matrix(rng: random.Random, genus: int) -> SymplecticMatrix:
    return compose_spB(BlockPair(unimodular(rng, genus), symmetric(rng, genus)))


def bounding_pair(rng: random.Random, genus: int, power: int | None = None,
                  transform: bool = True) -> BoundingPair:
    """A random BP twist: standard data for a genus-h subsurface moved by a symplectic matrix."""
    h = rng.randint(1, max(1, genus - 1)) if genus > 1 else 1
    spine = [(HomologyVector.a(i, genus), HomologyVector.b(i, genus)) for i in range(1, h + 1)]
    # a primitive class on the remaining handles
    k = rng.randint(h + 1, genus)
    c = HomologyVector.a(k, genus) if rng.random() < 0.5 else HomologyVector.b(k, genus)
    if k < genus and rng.random() < 0.5:
        c = c + rng.randint(-2, 2) * HomologyVector.a(genus, genus)
    if transform:
        M = symplectic(rng, genus, 3)
        spine = [(M @ x, M @ y) for x, y in spine]
        c = M @ c
    p = power if power is not None else rng.choice((-2, -1, 1, 2))
    return BoundingPair(tuple(spine), c, p)


def bp_word(rng: random.Random, genus: int, length: int | None = None) -> TwistWord:
    n = length if length is not None else rng.randint(1, 3)
    return TwistWord(genus, tuple(bounding_pair(rng, genus) for _ in range(n)))


def separating(rng: random.Random, genus: int) -> Separating:
    return Separating(genus, 1, rng.randint(-5, 5))


def lagrangian_triple(rng: random.Random, genus: int) -> Tuple[HomologyVector, HomologyVector, HomologyVector]:
    """Three pairwise omega-orthogonal classes: random B-vectors moved by a symplectic matrix."""
    M = symplectic(rng, genus, 3)
    out: List[HomologyVector] = []
    for _ in range(3):
        coords = [0] * genus + [rng.randint(-2, 2) for _ in range(genus)]
        out.append(M @ HomologyVector(genus, tuple(coords)))
    return out[0], out[1], out[2]


def side_bounding_pair(rng: random.Random, genus: int, side: str):
    """A conjugated BP twist whose tau lies in W_A + W_AB (side TB) or W_AB + W_B (side TA).

    Modelled on a_i ^ (b_i + m a_j) ^ a_k and its mirror (a_i + m b_j) ^ b_i ^ b_k,
    then moved by a random GL_g(Z) matrix, which preserves the W-splitting.
    """
    from .johnson import Conjugated
    i, j, k = rng.sample(range(1, genus + 1), 3)
    m = rng.choice((-2, -1, 1, 2))
    a = lambda n: HomologyVector.a(n, genus)  # noqa: E731
    b = lambda n: HomologyVector.b(n, genus)  # noqa: E731
    if side == "TB":
        f = BoundingPair(((a(i), b(i) + m * a(j)),), a(k), rng.choice((-1, 1)))
    elif side == "TA":
        f = BoundingPair(((a(i) + m * b(j), b(i)),), b(k), rng.choice((-1, 1)))
    else:
        raise ValueError(f"side must be TA or TB, got {side!r}")
    return Conjugated(gl_embed(unimodular(rng, genus)), f)
