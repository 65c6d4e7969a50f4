"""The pairing J_g between the A-cube and B-cube parts of the exterior cube of H.

J(x1^x2^x3, y1^y2^y3) = det[omega(y_j, x_i)] on W_A x W_B monomials and zero
elsewhere; its transpose Jt pairs W_B with W_A.  With this normalization the
standard worked example (tau values a1^(b1-a3)^a2 and (a1+b3)^b1^b2) has
-2J = 2.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

from . import linalg
from .errors import GenusMismatchError
from .exterior import (ExteriorCubeVector, Triple, basis_triples, component,
                       induced_action, induced_matrix)
from .linalg import Matrix
from .symplectic import HomologyVector, gl_embed, gl_generators, omega


def _check(u: ExteriorCubeVector, v: ExteriorCubeVector) -> None:
    if u.genus != v.genus:
        raise GenusMismatchError(f"genus mismatch: {u.genus} != {v.genus}")


@lru_cache(maxsize=None)
def monomial_pairing(s: Triple, t: Triple, genus: int) -> int:
    """det[omega(y_j, x_i)] for x = basis vectors of s, y = basis vectors of t."""
    xs = [HomologyVector.basis(i, genus) for i in s]
    ys = [HomologyVector.basis(j, genus) for j in t]
    return linalg.det(tuple(tuple(omega(y, x) for y in ys) for x in xs))


def eval_J(u: ExteriorCubeVector, v: ExteriorCubeVector) -> int:
    _check(u, v)
    g = u.genus
    va = [(t, c) for t, c in v if component(t, g) == "B"]
    total = 0
    for s, c in u:
        if component(s, g) != "A":
            continue
        for t, d in va:
            total += c * d * monomial_pairing(s, t, g)
    return total


def eval_Jt(u: ExteriorCubeVector, v: ExteriorCubeVector) -> int:
    """The dual pairing: u's W_B part against v's W_A part."""
    return eval_J(v, u)


def cocycle_value(u: ExteriorCubeVector, v: ExteriorCubeVector) -> int:
    """2 J(u, v), the cocycle whose pullback along tau is trivialized by F."""
    return 2 * eval_J(u, v)


@dataclass(frozen=True)
class BilinearForm:
    genus: int
    matrix: Matrix

    def __call__(self, u: ExteriorCubeVector, v: ExteriorCubeVector) -> int:
        _check(u, v)
        if u.genus != self.genus:
            raise GenusMismatchError("form and vectors have different genus")
        index = {t: n for n, t in enumerate(basis_triples(self.genus))}
        return sum(c * self.matrix[index[s]][index[t]] * d for s, c in u for t, d in v)

    def __neg__(self) -> "BilinearForm":
        return BilinearForm(self.genus, linalg.neg(self.matrix))

    def flat(self) -> Tuple[int, ...]:
        return tuple(x for row in self.matrix for x in row)

    def transpose(self) -> "BilinearForm":
        return BilinearForm(self.genus, linalg.transpose(self.matrix))


def j_form(genus: int) -> BilinearForm:
    basis = basis_triples(genus)
    rows = []
    for s in basis:
        rows.append(tuple(
            monomial_pairing(s, t, genus)
            if component(s, genus) == "A" and component(t, genus) == "B" else 0
            for t in basis))
    return BilinearForm(genus, tuple(rows))


def jt_form(genus: int) -> BilinearForm:
    return j_form(genus).transpose()


@dataclass
class UniquenessReport:
    genus: int
    relaxed: bool
    dimension: int
    basis: List[BilinearForm]
    matches_J: bool
    contains_J: bool
    contains_Jt: bool

    @property
    def generator(self) -> BilinearForm | None:
        return self.basis[0] if self.dimension == 1 else None

    def to_json(self) -> dict:
        gen = self.generator
        return {
            "genus": self.genus,
            "relaxed": self.relaxed,
            "dimension": self.dimension,
            "generator": _sparse_form(gen) if gen is not None else None,
            "matches_J": self.matches_J,
            "contains_J": self.contains_J,
            "contains_Jt": self.contains_Jt,
        }


def _sparse_form(f: BilinearForm) -> list:
    basis = basis_triples(f.genus)
    return [{"left": list(basis[i]), "right": list(basis[j]), "value": x}
            for i, row in enumerate(f.matrix) for j, x in enumerate(row) if x]


def invariance_equations(genus: int, support: Sequence[Tuple[int, int]],
                         generators: Sequence[Matrix]) -> List[Dict[int, int]]:
    """Linear equations tP B P - B = 0 on forms B supported on ``support``.

    Unknown k is the entry B[support[k]].  Rows are produced in a fixed order
    (generator, then equation index) so the downstream elimination is
    deterministic.
    """
    rows: List[Dict[int, int]] = []
    for G in generators:
        P = induced_matrix(gl_embed(G))
        prow = [[(u, x) for u, x in enumerate(r) if x] for r in P]
        eqs: Dict[Tuple[int, int], Dict[int, int]] = {}
        for k, (s, t) in enumerate(support):
            for u, x in prow[s]:
                for v, y in prow[t]:
                    e = eqs.setdefault((u, v), {})
                    e[k] = e.get(k, 0) + x * y
            e = eqs.setdefault((s, t), {})
            e[k] = e.get(k, 0) - 1
        for key in sorted(eqs):
            row = {k: c for k, c in eqs[key].items() if c}
            if row:
                rows.append(row)
    return rows


def uniqueness_certificate(genus: int, relaxed: bool = False) -> UniquenessReport:
    """Solve for all GL_g(Z)-invariant bilinear forms of the admissible shape.

    Strict mode: forms vanishing unless the left slot is in W_A and the right
    slot in W_B.  Relaxed mode: forms supported on W_A x W_B and W_B x W_A.
    """
    basis = basis_triples(genus)
    n = len(basis)
    kinds = [component(t, genus) for t in basis]
    allowed = {("A", "B")} if not relaxed else {("A", "B"), ("B", "A")}
    support = [(s, t) for s in range(n) for t in range(n) if (kinds[s], kinds[t]) in allowed]
    rows = invariance_equations(genus, support, list(gl_generators(genus)))
    null = linalg.nullspace(rows, len(support))

    forms = []
    for vec in null:
        m = [[0] * n for _ in range(n)]
        for (s, t), x in zip(support, vec):
            m[s][t] = x
        forms.append(BilinearForm(genus, linalg.as_matrix(m)))

    J, Jt = j_form(genus), jt_form(genus)
    dim = len(forms)
    flats = [f.flat() for f in forms]

    def in_span(f: BilinearForm) -> bool:
        return dim > 0 and linalg.rank(flats + [f.flat()]) == linalg.rank(flats)

    matches = dim == 1 and forms[0].flat() in (J.flat(), (-J).flat())
    return UniquenessReport(genus, relaxed, dim, forms, matches, in_span(J), in_span(Jt))


@dataclass
class MinusIdReport:
    genus: int
    checked: int
    failures: List[Triple]

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {"genus": self.genus, "checked": self.checked,
                "failures": [list(t) for t in self.failures], "passed": self.passed}


def minus_id_homomorphism_obstruction(genus: int) -> MinusIdReport:
    """Check that gl_embed(-I) acts as -Id on every monomial of the exterior cube."""
    minus = gl_embed(tuple(tuple(-int(i == j) for j in range(genus)) for i in range(genus)))
    basis = basis_triples(genus)
    failures = []
    for t in basis:
        m = ExteriorCubeVector.monomial(t, genus)
        if induced_action(minus, m) != -m:
            failures.append(t)
    return MinusIdReport(genus, len(basis), failures)
