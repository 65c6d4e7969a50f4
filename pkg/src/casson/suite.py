"""Randomized and exhaustive self-checks behind ``casson verify suite``.

Every check is seeded, so a given (genus, seed) always produces the same
report.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import permutations
from typing import Callable, List, Tuple

from . import linalg, sampling
from .cocycle import (cocycle_value, eval_J, eval_Jt, minus_id_homomorphism_obstruction,
                      uniqueness_certificate)
from .engine import (AnnotatedWord, Block, alexander_from_seifert, casson_surgery,
                     conjugate_word, connected_sum, eval_F, eval_lambda, fold,
                     half_second_derivative, second_difference, stabilize_word,
                     surgery_increment_series)
from .errors import CassonError
from .exterior import (ExteriorCubeVector, basis_triples, component, induced_action,
                       sort_triple, w_split, wedge3)
from .freegroup import (Endo, FreeWord, apply, compose, magnus_identity_check,
                        suzuki_check, suzuki_generators)
from .johnson import (BoundingPair, Conjugated, TwistWord, bp_as_general_twists, h1_action,
                      is_torelli, lantern_check, stabilize, tau)
from .symplectic import (HomologyVector, SymplecticMatrix, coset_block_analysis, decompose_spB,
                         gl_embed, gl_generators, omega, transvection)

N = 100


@dataclass
class CheckResult:
    name: str
    module: str
    cases: int = 0
    failures: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, msg: str) -> None:
        # keep the report short; five witnesses are enough to debug
        if len(self.failures) < 5:
            self.failures.append(msg)
        elif self.failures[-1] != "...":
            self.failures.append("...")

    def to_json(self) -> dict:
        return {"name": self.name, "module": self.module, "cases": self.cases,
                "passed": self.passed, "failures": self.failures}


Check = Callable[[random.Random, int, CheckResult], None]
CHECKS: List[Tuple[str, str, Check]] = []


def check(module: str, name: str):
    def deco(fn: Check) -> Check:
        CHECKS.append((module, name, fn))
        return fn
    return deco


def naive_wedge(x: HomologyVector, y: HomologyVector, z: HomologyVector) -> dict:
    """Coefficient of each increasing triple as a signed sum over all 3! orderings."""
    out = {}
    for t in basis_triples(x.genus):
        total = 0
        for perm in permutations(range(3)):
            idx = [t[p] for p in perm]
            s, _ = sort_triple(*idx)
            total += s * x.coords[idx[0]] * y.coords[idx[1]] * z.coords[idx[2]]
        if total:
            out[t] = total
    return out


# -- symplectic_core -------------------------------------------------------------

@check("symplectic_core", "omega antisymmetric and bilinear")
def _omega(rng, g, r):
    n = 2 * g
    for i in range(n):
        for j in range(n):
            e, f = HomologyVector.basis(i, g), HomologyVector.basis(j, g)
            r.cases += 1
            if omega(e, f) != -omega(f, e):
                r.fail(f"basis {i},{j}")
    for _ in range(N):
        x, y, z = (sampling.vector(rng, g) for _ in range(3))
        k = rng.randint(-3, 3)
        r.cases += 1
        if omega(x, y) != -omega(y, x) or omega(x + k * z, y) != omega(x, y) + k * omega(z, y):
            r.fail(f"{x.coords} {y.coords}")


@check("symplectic_core", "transvection powers add")
def _tpow(rng, g, r):
    for _ in range(N):
        c = sampling.vector(rng, g)
        p, q = rng.randint(-3, 3), rng.randint(-3, 3)
        r.cases += 1
        if transvection(c, p) @ transvection(c, q) != transvection(c, p + q):
            r.fail(f"c={c.coords} p={p} q={q}")


@check("symplectic_core", "constructed matrices are symplectic")
def _symp(rng, g, r):
    from .symplectic import omega_matrix
    om = omega_matrix(g)
    for _ in range(N):
        Ms = [transvection(sampling.vector(rng, g), rng.randint(-2, 2)),
              gl_embed(sampling.unimodular(rng, g))]
        for M in Ms:
            r.cases += 1
            e = M.entries
            if linalg.matmul(linalg.transpose(e), linalg.matmul(om, e)) != om:
                r.fail(str(e))


@check("symplectic_core", "Sp_B semidirect composition law")
def _spb(rng, g, r):
    for gg in sorted({3, 4, 5, g}):
        for _ in range(N):
            A, B = sampling.spb_matrix(rng, gg), sampling.spb_matrix(rng, gg)
            r.cases += 1
            if decompose_spB(A @ B) != decompose_spB(A) * decompose_spB(B):
                r.fail(f"g={gg}")


@check("symplectic_core", "coset block witness")
def _coset(rng, g, r):
    for _ in range(N // 4):
        G = sampling.unimodular(rng, g)
        M = gl_embed(G)
        r.cases += 1
        if coset_block_analysis(M.inverse(), M) != G:
            r.fail(str(G))
    r.cases += 1
    try:
        coset_block_analysis(SymplecticMatrix.identity(g),
                             transvection(HomologyVector.b(1, g)))
        r.fail("non-identity product accepted")
    except CassonError:
        pass


# -- exterior_cube ---------------------------------------------------------------

@check("exterior_cube", "-Id acts as -Id")
def _minus_id(rng, g, r):
    for gg in sorted({3, g}):
        rep = minus_id_homomorphism_obstruction(gg)
        r.cases += rep.checked
        for t in rep.failures:
            r.fail(f"g={gg} {t}")
    for gg in (4, 5):
        minus = gl_embed(tuple(tuple(-int(i == j) for j in range(gg)) for i in range(gg)))
        for _ in range(N):
            v = sampling.cube_vector(rng, gg)
            r.cases += 1
            if induced_action(minus, v) != -v:
                r.fail(f"g={gg} {v}")


@check("exterior_cube", "induced action is functorial")
def _functorial(rng, g, r):
    for _ in range(max(50, N // 2)):
        M, K = sampling.symplectic(rng, g, 2), sampling.symplectic(rng, g, 2)
        v = sampling.cube_vector(rng, g, 3)
        r.cases += 1
        if induced_action(M @ K, v) != induced_action(M, induced_action(K, v)):
            r.fail(str(v))


@check("exterior_cube", "W-split partitions and reconstructs")
def _wsplit(rng, g, r):
    vectors = [ExteriorCubeVector.monomial(t, g) for t in basis_triples(g)]
    vectors += [sampling.cube_vector(rng, g, 6) for _ in range(N)]
    for v in vectors:
        sp = w_split(v)
        r.cases += 1
        ok = (sp.wA + sp.wAB + sp.wB == v
              and all(component(t, g) == "A" for t, _ in sp.wA)
              and all(component(t, g) == "AB" for t, _ in sp.wAB)
              and all(component(t, g) == "B" for t, _ in sp.wB))
        if not ok:
            r.fail(str(v))


@check("exterior_cube", "wedge3 agrees with permutation expansion")
def _wedge(rng, g, r):
    for _ in range(2 * N):
        x, y, z = (sampling.vector(rng, g) for _ in range(3))
        r.cases += 1
        if wedge3(x, y, z).coeffs != naive_wedge(x, y, z):
            r.fail(f"{x.coords} {y.coords} {z.coords}")


# -- cocycle_j -------------------------------------------------------------------

@check("cocycle_j", "J is bilinear")
def _bilinear(rng, g, r):
    for _ in range(N):
        u, u2, v, v2 = (sampling.cube_vector(rng, g, 8) for _ in range(4))
        r.cases += 1
        if (eval_J(u + u2, v) != eval_J(u, v) + eval_J(u2, v)
                or eval_J(u, v + v2) != eval_J(u, v) + eval_J(u, v2)):
            r.fail(str(u))


@check("cocycle_j", "2J satisfies the cocycle identity")
def _cocycle(rng, g, r):
    for _ in range(N):
        u, v, w = (sampling.cube_vector(rng, g, 8) for _ in range(3))
        r.cases += 1
        C = cocycle_value
        if C(u, v) + C(u + v, w) != C(u, v + w) + C(v, w):
            r.fail(str(u))


@check("cocycle_j", "J vanishes off W_A x W_B")
def _vanish(rng, g, r):
    basis = basis_triples(3)
    for s in basis:
        for t in basis:
            u, v = ExteriorCubeVector.monomial(s, 3), ExteriorCubeVector.monomial(t, 3)
            r.cases += 1
            val = eval_J(u, v)
            if (component(s, 3) != "A" or component(t, 3) != "B") and val:
                r.fail(f"{s} {t}")
            if eval_Jt(u, v) != eval_J(v, u):
                r.fail(f"transpose {s} {t}")
    for _ in range(N):
        sp_u, sp_v = w_split(sampling.cube_vector(rng, g, 8)), w_split(sampling.cube_vector(rng, g, 8))
        r.cases += 1
        if eval_J(sp_u.wAB + sp_u.wB, sp_v.wA + sp_v.wAB + sp_v.wB) or eval_J(
                sp_u.wA + sp_u.wAB, sp_v.wA + sp_v.wAB):
            r.fail("random vanishing")


@check("cocycle_j", "J is GL_g(Z)-invariant")
def _gl_inv(rng, g, r):
    gens = [gl_embed(G) for G in gl_generators(g)]
    for _ in range(N):
        M = rng.choice(gens) if rng.random() < 0.5 else gl_embed(sampling.unimodular(rng, g))
        u, v = sampling.cube_vector(rng, g, 8), sampling.cube_vector(rng, g, 8)
        r.cases += 1
        if eval_J(induced_action(M, u), induced_action(M, v)) != eval_J(u, v):
            r.fail(str(M.entries))


@check("cocycle_j", "J is stable under genus inclusion")
def _stab_j(rng, g, r):
    for _ in range(N):
        u, v = sampling.cube_vector(rng, g, 8), sampling.cube_vector(rng, g, 8)
        r.cases += 1
        if eval_J(u.embed(g + 1), v.embed(g + 1)) != eval_J(u, v):
            r.fail(str(u))


@check("cocycle_j", "uniqueness certificate")
def _unique(rng, g, r):
    rep = uniqueness_certificate(g)
    r.cases += 1
    if not (rep.dimension == 1 and rep.matches_J):
        r.fail(f"strict dimension {rep.dimension}, matches_J={rep.matches_J}")
    rel = uniqueness_certificate(g, relaxed=True)
    r.cases += 1
    if not (rel.dimension == 2 and rel.contains_J and rel.contains_Jt):
        r.fail(f"relaxed dimension {rel.dimension}")


# -- johnson ---------------------------------------------------------------------

@check("johnson", "tau is additive on concatenation")
def _tau_add(rng, g, r):
    for _ in range(N):
        u, v = sampling.bp_word(rng, g), sampling.bp_word(rng, g)
        r.cases += 1
        if tau(u * v) != tau(u) + tau(v):
            r.fail("additivity")


@check("johnson", "tau is equivariant under conjugation")
def _equiv(rng, g, r):
    for _ in range(N):
        M = sampling.symplectic(rng, g, 3)
        f = sampling.bounding_pair(rng, g)
        r.cases += 1
        if tau(TwistWord(g, (Conjugated(M, f),))) != induced_action(M, tau(TwistWord(g, (f,)))):
            r.fail(str(M.entries))


@check("johnson", "h1_action is a homomorphism, inverse words invert")
def _h1(rng, g, r):
    from .johnson import General
    for _ in range(N):
        gens = [General(sampling.vector(rng, g, -1, 1), rng.choice((-1, 1))) for _ in range(3)]
        gens.append(sampling.bounding_pair(rng, g))
        rng.shuffle(gens)
        u, v = TwistWord(g, tuple(gens[:2])), TwistWord(g, tuple(gens[2:]))
        r.cases += 1
        if h1_action(u * v) != h1_action(u) @ h1_action(v):
            r.fail("homomorphism")
        if h1_action(u.inverse()) != h1_action(u).inverse():
            r.fail("inverse action")
        w = sampling.bp_word(rng, g)
        if tau(w.inverse()) != -tau(w) or not is_torelli(w):
            r.fail("inverse tau")


@check("johnson", "bounding pair constructor accepts exactly the valid data")
def _bp_reject(rng, g, r):
    for _ in range(N):
        f = sampling.bounding_pair(rng, g)
        e = HomologyVector.basis(rng.randrange(2 * g), g)
        k = rng.choice((-2, -1, 1, 2))
        x, y = f.spine[0]
        variants = [
            (((x + k * e, y),) + f.spine[1:], f.c),
            (((x, y + k * e),) + f.spine[1:], f.c),
            (f.spine, f.c + k * e),
            (f.spine, rng.choice((2, 3)) * f.c),
        ]
        for spine, c in variants:
            r.cases += 1
            try:
                BoundingPair(spine, c, 1)
                accepted = True
            except CassonError:
                accepted = False
            if accepted != _bp_valid(spine, c):
                r.fail(f"spine={[(a.coords, b.coords) for a, b in spine]} c={c.coords}")


def _bp_valid(spine, c) -> bool:
    from functools import reduce
    from math import gcd
    for i, (xi, yi) in enumerate(spine):
        for j, (xj, yj) in enumerate(spine):
            if omega(xi, yj) != int(i == j) or omega(xi, xj) or omega(yi, yj):
                return False
        if omega(xi, c) or omega(yi, c):
            return False
    return reduce(gcd, (abs(x) for x in c.coords), 0) == 1


@check("johnson", "lantern relation on homology")
def _lantern(rng, g, r):
    if g >= 3:
        rep = lantern_check(HomologyVector.b(1, g), HomologyVector.b(2, g), HomologyVector.b(3, g))
        r.cases += 1
        if not rep.passed:
            r.fail("b1 b2 b3")
    for _ in range(N):
        c = sampling.lagrangian_triple(rng, g)
        r.cases += 1
        if not lantern_check(*c).passed:
            r.fail(str([x.coords for x in c]))


@check("johnson", "atomic BP matches the two-twist model on homology")
def _bp_model(rng, g, r):
    for _ in range(N):
        f = sampling.bounding_pair(rng, g)
        r.cases += 1
        if h1_action(TwistWord(g, (f,))) != h1_action(bp_as_general_twists(f)):
            r.fail(str(f.c.coords))


@check("johnson", "stabilization commutes with tau and h1_action")
def _stab_word(rng, g, r):
    for _ in range(N):
        w = sampling.bp_word(rng, g)
        s = stabilize(w, g + 1)
        r.cases += 1
        if tau(s) != tau(w).embed(g + 1) or not h1_action(s).is_identity():
            r.fail("stabilize")


# -- casson_engine ---------------------------------------------------------------

def _random_annotated(rng, g, blocks: int) -> AnnotatedWord:
    out = []
    for _ in range(blocks):
        out.append(Block(sampling.bp_word(rng, g, rng.randint(1, 2)), rng.randint(-5, 5)))
    return AnnotatedWord(g, tuple(out))


@check("casson_engine", "F is independent of bracketing")
def _assoc(rng, g, r):
    for _ in range(N):
        w = _random_annotated(rng, g, rng.randint(3, 5))
        pairs = list(zip(w.taus, w.f_values))
        k = rng.randint(1, len(pairs) - 1)
        # evaluate (first k blocks) and (the rest) separately, then combine
        t1, f1 = fold(pairs[:k], g)
        t2, f2 = fold(pairs[k:], g)
        r.cases += 1
        if fold([(t1, f1), (t2, f2)], g)[1] != eval_F(w):
            r.fail(f"split at {k}")


@check("casson_engine", "F of a word times its inverse is zero")
def _inverse(rng, g, r):
    for _ in range(N):
        w = sampling.bp_word(rng, g)
        f = rng.randint(-5, 5)
        t = tau(w)
        inv_f = -f - 2 * eval_J(t, t)
        aw = AnnotatedWord(g, (Block(w, f), Block(w.inverse(), inv_f)))
        r.cases += 1
        if eval_F(aw) != 0:
            r.fail("inverse")


def _side_block(rng, g, side: str) -> Block:
    return Block(TwistWord(g, (sampling.side_bounding_pair(rng, g, side),)), None, side)


@check("casson_engine", "TA prefix and TB suffix leave F unchanged")
def _sides(rng, g, r):
    for _ in range(N):
        w = _random_annotated(rng, g, rng.randint(1, 3))
        ta, tb = _side_block(rng, g, "TA"), _side_block(rng, g, "TB")
        r.cases += 1
        if eval_F(AnnotatedWord(g, (ta,) + w.blocks + (tb,))) != eval_F(w):
            r.fail("double coset")


@check("casson_engine", "F is invariant under GL conjugation")
def _conj_inv(rng, g, r):
    for _ in range(N):
        w = _random_annotated(rng, g, rng.randint(1, 3))
        M = gl_embed(sampling.unimodular(rng, g))
        r.cases += 1
        if eval_F(conjugate_word(w, M)) != eval_F(w):
            r.fail("conjugation")


@check("casson_engine", "F is invariant under stabilization, lambda = sign * F")
def _stab_f(rng, g, r):
    for _ in range(N):
        w = _random_annotated(rng, g, rng.randint(1, 3))
        r.cases += 1
        F = eval_F(w)
        if eval_F(stabilize_word(w, g + 1)) != F:
            r.fail("stabilization")
        if eval_lambda(w, -1) != -F or eval_lambda(w, 1) != F:
            r.fail("sign")


@check("casson_engine", "connected sum is additive")
def _csum(rng, g, r):
    for _ in range(N):
        h = rng.randint(3, 4)
        w1, w2 = _random_annotated(rng, g, 2), _random_annotated(rng, h, 2)
        s = connected_sum(w1, w2)
        r.cases += 1
        if eval_F(s) != eval_F(w1) + eval_F(w2):
            r.fail("additivity")
        t1 = tau(TwistWord(g + h, tuple(f for b in s.blocks[:2] for f in b.word.factors)))
        t2 = tau(TwistWord(g + h, tuple(f for b in s.blocks[2:] for f in b.word.factors)))
        if eval_J(t1, t2) or eval_J(t2, t1):
            r.fail("cross term")


@check("casson_engine", "surgery increments constant, boundary links give F'' = 0")
def _surgery(rng, g, r):
    for _ in range(N):
        w = _random_annotated(rng, g, rng.randint(1, 3))
        K, L = sampling.separating(rng, g), sampling.separating(rng, g)
        series = surgery_increment_series(w, K, 10)
        diffs = {b - a for a, b in zip(series, series[1:])}
        r.cases += 1
        if diffs != {K.f_value}:
            r.fail(f"series {series}")
        if second_difference(w, K, L, rng.randint(0, 3), rng.randint(0, 3)) != 0:
            r.fail("second difference")


@check("casson_engine", "Alexander polynomial and surgery values")
def _alexander(rng, g, r):
    cases = [([[-1, 1], [0, -1]], {-1: 1, 0: -1, 1: 1}, 1),
             ([[1, 1], [0, -1]], {-1: -1, 0: 3, 1: -1}, -1),
             ([], {0: 1}, 0)]
    for V, poly, half in cases:
        d = alexander_from_seifert(V)
        r.cases += 1
        if d.coeffs != poly or half_second_derivative(d) != half:
            r.fail(f"{V}")
        if casson_surgery(V, 1) != half or casson_surgery(V, 0) != 0:
            r.fail(f"surgery {V}")


# -- freegroup_verify ------------------------------------------------------------

def _random_free(rng, rank: int, length: int) -> FreeWord:
    return FreeWord(rank, tuple((rng.randrange(rank), rng.choice((1, -1))) for _ in range(length)))


@check("freegroup_verify", "reduction is idempotent, apply is a homomorphism")
def _free(rng, g, r):
    rank = 2 * g
    gens = list(suzuki_generators(g).values())
    for _ in range(N):
        u, v = _random_free(rng, rank, 8), _random_free(rng, rank, 8)
        e = rng.choice(gens)
        r.cases += 1
        if FreeWord(rank, u.letters) != u:
            r.fail("reduction")
        if apply(e, u * v) != apply(e, u) * apply(e, v):
            r.fail("distributivity")
        if apply(Endo.identity(rank), u) != u:
            r.fail("identity")


@check("freegroup_verify", "abelianization is functorial")
def _abel(rng, g, r):
    gens = list(suzuki_generators(g).values())
    for _ in range(N):
        e1, e2 = rng.choice(gens), rng.choice(gens)
        r.cases += 1
        if compose(e1, e2).abelianization() != linalg.matmul(e1.abelianization(),
                                                              e2.abelianization()):
            r.fail("functoriality")


@check("freegroup_verify", "Suzuki generators: Q^g = id, abelianizations in Sp_B")
def _suzuki(rng, g, r):
    for gg in sorted({3, 4, 5, g}):
        rep = suzuki_check(gg)
        r.cases += 1
        if not rep.passed:
            r.fail(f"g={gg}")


@check("freegroup_verify", "Magnus identity")
def _magnus(rng, g, r):
    rep = magnus_identity_check(g)
    r.cases += 1
    if not rep.passed:
        r.fail(str(rep.to_json()["witnesses"]))


def run_suite(genus: int, seed: int = 0) -> List[CheckResult]:
    results = []
    for module, name, fn in CHECKS:
        res = CheckResult(name, module)
        rng = random.Random(f"{seed}:{module}:{name}")
        fn(rng, genus, res)
        results.append(res)
    return results
