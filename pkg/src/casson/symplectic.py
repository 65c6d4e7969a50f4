"""The symplectic lattice H = H_1(surface; Z) and integral symplectic matrices.

Basis order is a_1..a_g, b_1..b_g with omega(a_i, b_j) = delta_ij.  Matrices act
on column vectors, so column j of a matrix is the image of basis vector j.
In this ordering the handlebody-type subgroup preserving B is the set of
lower block-triangular matrices (G 0; M tG^-1).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Tuple

from . import linalg
from .errors import BlockFormError, GenusMismatchError, NotSymplecticError
from .linalg import Matrix


def _check_genus(g1: int, g2: int) -> None:
    if g1 != g2:
        raise GenusMismatchError(f"genus mismatch: {g1} != {g2}")


@dataclass(frozen=True)
class HomologyVector:
    genus: int
    coords: Tuple[int, ...]

    def __post_init__(self):
        if self.genus < 1:
            raise ValueError("genus must be positive")
        object.__setattr__(self, "coords", tuple(int(x) for x in self.coords))
        if len(self.coords) != 2 * self.genus:
            raise ValueError(f"expected {2 * self.genus} coordinates, got {len(self.coords)}")

    @classmethod
    def zero(cls, genus: int) -> "HomologyVector":
        return cls(genus, (0,) * (2 * genus))

    @classmethod
    def basis(cls, index: int, genus: int) -> "HomologyVector":
        c = [0] * (2 * genus)
        c[index] = 1
        return cls(genus, tuple(c))

    @classmethod
    def a(cls, i: int, genus: int) -> "HomologyVector":
        """The class a_i (1-based)."""
        return cls.basis(i - 1, genus)

    @classmethod
    def b(cls, i: int, genus: int) -> "HomologyVector":
        """The class b_i (1-based)."""
        return cls.basis(genus + i - 1, genus)

    def __add__(self, other: "HomologyVector") -> "HomologyVector":
        _check_genus(self.genus, other.genus)
        return HomologyVector(self.genus, tuple(x + y for x, y in zip(self.coords, other.coords)))

    def __sub__(self, other: "HomologyVector") -> "HomologyVector":
        return self + (-other)

    def __neg__(self) -> "HomologyVector":
        return HomologyVector(self.genus, tuple(-x for x in self.coords))

    def __rmul__(self, k: int) -> "HomologyVector":
        return HomologyVector(self.genus, tuple(k * x for x in self.coords))

    def __bool__(self) -> bool:
        return any(self.coords)

    def embed(self, new_genus: int, offset: int = 0) -> "HomologyVector":
        """Place this vector on handles offset+1..offset+genus of a larger surface."""
        if offset < 0 or offset + self.genus > new_genus:
            raise ValueError("handles do not fit in the target genus")
        g, h = self.genus, new_genus
        c = [0] * (2 * h)
        for i in range(g):
            c[offset + i] = self.coords[i]
            c[h + offset + i] = self.coords[g + i]
        return HomologyVector(h, tuple(c))

    def to_json(self) -> list:
        return list(self.coords)


def omega(x: HomologyVector, y: HomologyVector) -> int:
    """Intersection pairing, omega(a_i, b_j) = delta_ij."""
    _check_genus(x.genus, y.genus)
    g = x.genus
    xc, yc = x.coords, y.coords
    return sum(xc[i] * yc[g + i] - xc[g + i] * yc[i] for i in range(g))


def omega_matrix(genus: int) -> Matrix:
    g = genus
    return linalg.from_blocks(
        linalg.zeros(g), linalg.identity(g), linalg.neg(linalg.identity(g)), linalg.zeros(g)
    )


@dataclass(frozen=True)
class SymplecticMatrix:
    genus: int
    entries: Matrix

    def __post_init__(self):
        m = linalg.as_matrix(self.entries)
        n = 2 * self.genus
        if len(m) != n or any(len(r) != n for r in m):
            raise ValueError(f"expected a {n}x{n} matrix")
        object.__setattr__(self, "entries", m)
        om = omega_matrix(self.genus)
        if linalg.matmul(linalg.transpose(m), linalg.matmul(om, m)) != om:
            raise NotSymplecticError("matrix does not preserve the intersection form")

    @classmethod
    def identity(cls, genus: int) -> "SymplecticMatrix":
        return cls(genus, linalg.identity(2 * genus))

    def __matmul__(self, other):
        if isinstance(other, SymplecticMatrix):
            _check_genus(self.genus, other.genus)
            return SymplecticMatrix(self.genus, linalg.matmul(self.entries, other.entries))
        if isinstance(other, HomologyVector):
            _check_genus(self.genus, other.genus)
            return HomologyVector(self.genus, linalg.mat_vec(self.entries, other.coords))
        return NotImplemented

    def inverse(self) -> "SymplecticMatrix":
        # M^-1 = Omega^-1 tM Omega, and Omega^-1 = -Omega
        om = omega_matrix(self.genus)
        inv = linalg.matmul(linalg.neg(om), linalg.matmul(linalg.transpose(self.entries), om))
        return SymplecticMatrix(self.genus, inv)

    def __pow__(self, n: int) -> "SymplecticMatrix":
        base = self if n >= 0 else self.inverse()
        out = SymplecticMatrix.identity(self.genus)
        for _ in range(abs(n)):
            out = out @ base
        return out

    def is_identity(self) -> bool:
        return self.entries == linalg.identity(2 * self.genus)

    def column(self, j: int) -> HomologyVector:
        return HomologyVector(self.genus, tuple(row[j] for row in self.entries))

    def blocks(self) -> Tuple[Matrix, Matrix, Matrix, Matrix]:
        """(AA, AB, BA, BB) blocks; AB is the A-rows/B-columns block."""
        g = self.genus
        lo, hi = range(g), range(g, 2 * g)
        e = self.entries
        return (linalg.block(e, lo, lo), linalg.block(e, lo, hi),
                linalg.block(e, hi, lo), linalg.block(e, hi, hi))

    def embed(self, new_genus: int, offset: int = 0) -> "SymplecticMatrix":
        """Extend by the identity on the handles outside offset+1..offset+genus."""
        g, h = self.genus, new_genus
        if offset < 0 or offset + g > h:
            raise ValueError("handles do not fit in the target genus")
        idx = [offset + i for i in range(g)] + [h + offset + i for i in range(g)]
        m = [list(r) for r in linalg.identity(2 * h)]
        for i, ii in enumerate(idx):
            for j, jj in enumerate(idx):
                m[ii][jj] = self.entries[i][j]
        return SymplecticMatrix(h, m)

    def to_json(self) -> list:
        return [list(r) for r in self.entries]


@dataclass(frozen=True)
class BlockPair:
    """An element (G, S) of GL_g(Z) semidirect the symmetric integer matrices."""

    G: Matrix
    S: Matrix

    def __post_init__(self):
        G, S = linalg.as_matrix(self.G), linalg.as_matrix(self.S)
        object.__setattr__(self, "G", G)
        object.__setattr__(self, "S", S)
        if abs(linalg.det(G)) != 1:
            raise BlockFormError("G is not in GL_g(Z)")
        if S != linalg.transpose(S):
            raise BlockFormError("S is not symmetric")

    def __mul__(self, other: "BlockPair") -> "BlockPair":
        # (G, S)(H, T) = (GH, tH S H + T)
        H, T = other.G, other.S
        s = linalg.add(linalg.matmul(linalg.transpose(H), linalg.matmul(self.S, H)), T)
        return BlockPair(linalg.matmul(self.G, H), s)


def transvection(c: HomologyVector, power: int = 1) -> SymplecticMatrix:
    """Matrix of x -> x + power * omega(x, c) * c, the homology action of T_c^power."""
    g = c.genus
    n = 2 * g
    cols = []
    for j in range(n):
        e = HomologyVector.basis(j, g)
        k = power * omega(e, c)
        cols.append(tuple(e.coords[i] + k * c.coords[i] for i in range(n)))
    return SymplecticMatrix(g, linalg.transpose(tuple(cols)))


def gl_embed(G: Sequence[Sequence[int]]) -> SymplecticMatrix:
    """diag(G, tG^-1) for G in GL_g(Z)."""
    G = linalg.as_matrix(G)
    g = len(G)
    if abs(linalg.det(G)) != 1:
        raise BlockFormError("G is not invertible over the integers")
    Gi_t = linalg.transpose(linalg.inverse_unimodular(G))
    return SymplecticMatrix(g, linalg.from_blocks(G, linalg.zeros(g), linalg.zeros(g), Gi_t))


def elementary(i: int, j: int, genus: int) -> Matrix:
    """E_ij: a_k -> a_k + delta_jk a_i (0-based, i != j)."""
    if i == j:
        raise ValueError("elementary matrix needs i != j")
    m = [list(r) for r in linalg.identity(genus)]
    m[i][j] = 1
    return linalg.as_matrix(m)


def sign_flip(genus: int, index: int = 0) -> Matrix:
    m = [list(r) for r in linalg.identity(genus)]
    m[index][index] = -1
    return linalg.as_matrix(m)


def gl_generators(genus: int) -> Iterable[Matrix]:
    """Elementary matrices E_ij (i != j) and diag(-1, 1, ..., 1); they generate GL_g(Z)."""
    for i in range(genus):
        for j in range(genus):
            if i != j:
                yield elementary(i, j, genus)
    yield sign_flip(genus)


def decompose_spB(M: SymplecticMatrix) -> BlockPair:
    """Split a B-preserving matrix (G 0; M' tG^-1) into (G, tG M')."""
    G, upper, lower, _ = M.blocks()
    if not linalg.is_zero(upper):
        raise BlockFormError("matrix does not preserve the Lagrangian B")
    S = linalg.matmul(linalg.transpose(G), lower)
    assert S == linalg.transpose(S), "tG M' must be symmetric for a symplectic matrix"
    return BlockPair(G, S)


def compose_spB(p: BlockPair) -> SymplecticMatrix:
    """Inverse of decompose_spB."""
    g = len(p.G)
    Gi_t = linalg.transpose(linalg.inverse_unimodular(p.G))
    lower = linalg.matmul(Gi_t, p.S)
    return SymplecticMatrix(g, linalg.from_blocks(p.G, linalg.zeros(g), lower, Gi_t))


def coset_block_analysis(Ma: SymplecticMatrix, Mb: SymplecticMatrix) -> Matrix:
    """Check the block algebra of Ma @ Mb = Id for Ma upper and Mb lower block-triangular.

    Returns G, the GL_g(Z) witness, after confirming both off-diagonal blocks
    vanish and G = H^-1.
    """
    _check_genus(Ma.genus, Mb.genus)
    if not (Ma @ Mb).is_identity():
        raise BlockFormError("Ma @ Mb is not the identity")
    H, _, lower_a, _ = Ma.blocks()
    G, upper_b, _, _ = Mb.blocks()
    if not linalg.is_zero(lower_a):
        raise BlockFormError("Ma is not upper block-triangular")
    if not linalg.is_zero(upper_b):
        raise BlockFormError("Mb is not lower block-triangular")
    N = Ma.blocks()[1]
    Mlow = Mb.blocks()[2]
    if not (linalg.is_zero(N) and linalg.is_zero(Mlow)):
        raise BlockFormError("off-diagonal blocks do not vanish")
    if linalg.matmul(H, G) != linalg.identity(Ma.genus):
        raise BlockFormError("G is not the inverse of H")
    return G
