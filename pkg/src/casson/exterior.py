"""The free Z-module of exterior cubes of H, stored sparsely.

Monomials are strictly increasing index triples (i, j, k) in the global order
a_1 < ... < a_g < b_1 < ... < b_g (indices 0..2g-1).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, Iterator, List, Mapping, NamedTuple, Tuple

from .errors import GenusMismatchError
from .linalg import Matrix
from .symplectic import HomologyVector, SymplecticMatrix

Triple = Tuple[int, int, int]


def basis_triples(genus: int) -> List[Triple]:
    return list(combinations(range(2 * genus), 3))


def sort_triple(i: int, j: int, k: int) -> Tuple[int, Triple | None]:
    """Sign and increasing order of (i, j, k); sign 0 when an index repeats."""
    if i == j or j == k or i == k:
        return 0, None
    sign = 1
    t = [i, j, k]
    for a in range(3):
        for b in range(2 - a):
            if t[b] > t[b + 1]:
                t[b], t[b + 1] = t[b + 1], t[b]
                sign = -sign
    return sign, (t[0], t[1], t[2])


def component(triple: Triple, genus: int) -> str:
    """'A', 'B' or 'AB' according to which Lagrangians the indices live in."""
    na = sum(1 for x in triple if x < genus)
    if na == 3:
        return "A"
    if na == 0:
        return "B"
    return "AB"


@dataclass(frozen=True, eq=False)
class ExteriorCubeVector:
    genus: int
    coeffs: Mapping[Triple, int] = field(default_factory=dict)

    def __post_init__(self):
        n = 2 * self.genus
        clean: Dict[Triple, int] = {}
        for t, c in self.coeffs.items():
            t = tuple(t)
            if not (len(t) == 3 and 0 <= t[0] < t[1] < t[2] < n):
                raise ValueError(f"invalid monomial {t} for genus {self.genus}")
            if c:
                clean[t] = int(c)
        object.__setattr__(self, "coeffs", dict(sorted(clean.items())))

    @classmethod
    def zero(cls, genus: int) -> "ExteriorCubeVector":
        return cls(genus, {})

    @classmethod
    def monomial(cls, triple: Triple, genus: int, coeff: int = 1) -> "ExteriorCubeVector":
        return cls(genus, {tuple(triple): coeff})

    def __eq__(self, other):
        if not isinstance(other, ExteriorCubeVector):
            return NotImplemented
        return self.genus == other.genus and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.genus, tuple(self.coeffs.items())))

    def __repr__(self):
        return f"ExteriorCubeVector(genus={self.genus}, coeffs={self.coeffs})"

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __iter__(self) -> Iterator[Tuple[Triple, int]]:
        return iter(self.coeffs.items())

    def __getitem__(self, triple: Triple) -> int:
        return self.coeffs.get(tuple(triple), 0)

    def _check(self, other: "ExteriorCubeVector") -> None:
        if self.genus != other.genus:
            raise GenusMismatchError(f"genus mismatch: {self.genus} != {other.genus}")

    def __add__(self, other: "ExteriorCubeVector") -> "ExteriorCubeVector":
        self._check(other)
        out = dict(self.coeffs)
        for t, c in other.coeffs.items():
            out[t] = out.get(t, 0) + c
        return ExteriorCubeVector(self.genus, out)

    def __neg__(self) -> "ExteriorCubeVector":
        return ExteriorCubeVector(self.genus, {t: -c for t, c in self.coeffs.items()})

    def __sub__(self, other: "ExteriorCubeVector") -> "ExteriorCubeVector":
        return self + (-other)

    def __rmul__(self, k: int) -> "ExteriorCubeVector":
        return ExteriorCubeVector(self.genus, {t: k * c for t, c in self.coeffs.items()})

    def embed(self, new_genus: int, offset: int = 0) -> "ExteriorCubeVector":
        """Reindex onto handles offset+1..offset+genus of a larger surface."""
        g, h = self.genus, new_genus
        if offset < 0 or offset + g > h:
            raise ValueError("handles do not fit in the target genus")

        def move(x: int) -> int:
            return offset + x if x < g else h + offset + (x - g)

        return ExteriorCubeVector(h, {tuple(move(x) for x in t): c for t, c in self.coeffs.items()})

    def to_json(self) -> list:
        return [{"triple": list(t), "coeff": c} for t, c in self.coeffs.items()]

    @classmethod
    def from_json(cls, genus: int, data: list) -> "ExteriorCubeVector":
        out: Dict[Triple, int] = {}
        for item in data:
            t = tuple(item["triple"])
            if len(t) != 3 or not t[0] < t[1] < t[2]:
                raise ValueError(f"triple {list(t)} is not strictly increasing")
            out[t] = out.get(t, 0) + int(item["coeff"])
        return cls(genus, out)


def wedge3(x: HomologyVector, y: HomologyVector, z: HomologyVector) -> ExteriorCubeVector:
    """x ^ y ^ z expanded in the monomial basis."""
    if not x.genus == y.genus == z.genus:
        raise GenusMismatchError("genus mismatch in wedge3")
    return _wedge_coords(x.genus, x.coords, y.coords, z.coords)


def _wedge_coords(genus, xc, yc, zc) -> ExteriorCubeVector:
    # coefficient of e_i ^ e_j ^ e_k (i < j < k) is the 3x3 minor, expanded
    # along z using the 2x2 minors of (x, y)
    idx = [n for n in range(len(xc)) if xc[n] or yc[n] or zc[n]]
    m2: Dict[Tuple[int, int], int] = {}
    for u, i in enumerate(idx):
        for j in idx[u + 1:]:
            d = xc[i] * yc[j] - xc[j] * yc[i]
            if d:
                m2[i, j] = d
    out: Dict[Triple, int] = {}
    if not m2:
        return ExteriorCubeVector(genus, out)
    for i, j, k in combinations(idx, 3):
        c = m2.get((i, j), 0) * zc[k] - m2.get((i, k), 0) * zc[j] + m2.get((j, k), 0) * zc[i]
        if c:
            out[i, j, k] = c
    return ExteriorCubeVector(genus, out)


class WSplit(NamedTuple):
    wA: ExteriorCubeVector
    wAB: ExteriorCubeVector
    wB: ExteriorCubeVector


def w_split(v: ExteriorCubeVector) -> WSplit:
    parts: Dict[str, Dict[Triple, int]] = {"A": {}, "AB": {}, "B": {}}
    for t, c in v.coeffs.items():
        parts[component(t, v.genus)][t] = c
    g = v.genus
    return WSplit(ExteriorCubeVector(g, parts["A"]), ExteriorCubeVector(g, parts["AB"]),
                  ExteriorCubeVector(g, parts["B"]))


def induced_action(M: SymplecticMatrix, v: ExteriorCubeVector) -> ExteriorCubeVector:
    """Apply the matrix functorially: x ^ y ^ z -> Mx ^ My ^ Mz."""
    if M.genus != v.genus:
        raise GenusMismatchError(f"genus mismatch: {M.genus} != {v.genus}")
    cols = [tuple(row[j] for row in M.entries) for j in range(2 * M.genus)]
    out: Dict[Triple, int] = {}
    for (i, j, k), c in v.coeffs.items():
        for t, d in _wedge_coords(v.genus, cols[i], cols[j], cols[k]):
            out[t] = out.get(t, 0) + c * d
    return ExteriorCubeVector(v.genus, out)


def induced_matrix(M: SymplecticMatrix) -> Matrix:
    """Matrix of induced_action in the monomial basis (column = image of a monomial)."""
    basis = basis_triples(M.genus)
    index = {t: n for n, t in enumerate(basis)}
    cols = []
    for t in basis:
        img = induced_action(M, ExteriorCubeVector.monomial(t, M.genus))
        col = [0] * len(basis)
        for s, c in img:
            col[index[s]] = c
        cols.append(tuple(col))
    return tuple(zip(*cols))
