"""Evaluate F and the Casson invariant on annotated gluing words.

A gluing word is a sequence of Torelli blocks.  F is computed by folding the
blocks left to right with the cocycle relation

    F(phi psi) = F(phi) + F(psi) - 2 J(tau(phi), tau(psi)),

so every block needs a known F value.  Blocks tagged TA or TB are assigned
F = 0 (F vanishes on the handlebody Torelli subgroups); separating twists may
carry F of a single twist; anything else must declare F explicitly.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from . import linalg
from .cocycle import eval_J
from .errors import AnnotationError, CassonError, SeifertError
from .exterior import ExteriorCubeVector
from .johnson import (Conjugated, Separating, TwistWord, classify_tau, is_torelli_factor,
                      shift, stabilize, tau)

# lambda = SIGN * F; -1 reproduces lambda = -2 on the standard worked example
CONVENTIONS = {"lambda": -1, "f": 1}


def default_sign() -> int:
    name = os.environ.get("CASSON_CONVENTION", "lambda").strip().lower()
    if name not in CONVENTIONS:
        raise CassonError(f"CASSON_CONVENTION must be one of {sorted(CONVENTIONS)}, got {name!r}")
    return CONVENTIONS[name]


@dataclass(frozen=True)
class Block:
    word: TwistWord
    declared_F: Optional[int] = None
    side: Optional[str] = None


def _separating_f(word: TwistWord) -> Optional[int]:
    """F of a product of separating twists with known single-twist values.

    F restricted to the kernel of tau is a homomorphism, so the values add.
    """
    total = 0
    for f in word.factors:
        while isinstance(f, Conjugated):
            f = f.inner
        if not isinstance(f, Separating) or f.f_value is None:
            return None
        total += f.power * f.f_value
    return total


@dataclass(frozen=True)
class AnnotatedWord:
    genus: int
    blocks: Tuple[Block, ...] = ()
    taus: Tuple[ExteriorCubeVector, ...] = field(init=False, repr=False, compare=False)
    f_values: Tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        blocks = tuple(self.blocks)
        object.__setattr__(self, "blocks", blocks)
        taus, fs = [], []
        for i, b in enumerate(blocks):
            if b.word.genus != self.genus:
                raise AnnotationError(f"genus {b.word.genus} differs from word genus {self.genus}", i)
            for j, f in enumerate(b.word.factors):
                if not is_torelli_factor(f):
                    raise AnnotationError(f"factor {j} is not a Torelli generator", i)
            t = tau(b.word)
            if b.side is not None:
                if b.side not in ("TA", "TB"):
                    raise AnnotationError(f"unknown side tag {b.side!r}", i)
                labels = classify_tau(t)
                if b.side not in labels:
                    raise AnnotationError(
                        f"tagged {b.side} but tau is only compatible with {list(labels)}", i)
                if b.declared_F not in (None, 0):
                    raise AnnotationError(f"tagged {b.side} so F must be 0, got {b.declared_F}", i)
                fv = 0
            elif b.declared_F is not None:
                fv = int(b.declared_F)
            else:
                fv = _separating_f(b.word)
                if fv is None:
                    raise AnnotationError("untagged block has no declared F", i)
            taus.append(t)
            fs.append(fv)
        object.__setattr__(self, "taus", tuple(taus))
        object.__setattr__(self, "f_values", tuple(fs))

    def __add__(self, other: "AnnotatedWord") -> "AnnotatedWord":
        if other.genus != self.genus:
            raise CassonError("cannot concatenate words of different genus")
        return AnnotatedWord(self.genus, self.blocks + other.blocks)

    def tau(self) -> ExteriorCubeVector:
        out = ExteriorCubeVector.zero(self.genus)
        for t in self.taus:
            out = out + t
        return out


def fold(pairs: Sequence[Tuple[ExteriorCubeVector, int]], genus: int) -> Tuple[ExteriorCubeVector, int]:
    """Left fold of (tau, F) pairs under the cocycle relation."""
    acc_t, acc_f = ExteriorCubeVector.zero(genus), 0
    for t, f in pairs:
        acc_f = acc_f + f - 2 * eval_J(acc_t, t)
        acc_t = acc_t + t
    return acc_t, acc_f


def eval_F(w: AnnotatedWord) -> int:
    return fold(list(zip(w.taus, w.f_values)), w.genus)[1]


def eval_lambda(w: AnnotatedWord, sign: Optional[int] = None) -> int:
    """Casson invariant lambda = sign * F (default sign from CASSON_CONVENTION, else -1)."""
    sign = default_sign() if sign is None else sign
    if sign not in (1, -1):
        raise CassonError("sign must be +1 or -1")
    return sign * eval_F(w)


def stabilize_word(w: AnnotatedWord, new_genus: int) -> AnnotatedWord:
    blocks = tuple(Block(stabilize(b.word, new_genus), b.declared_F, b.side) for b in w.blocks)
    return AnnotatedWord(new_genus, blocks)


def connected_sum(w1: AnnotatedWord, w2: AnnotatedWord) -> AnnotatedWord:
    """Splice w1 on the first handles and w2 on the last handles."""
    g, h = w1.genus, w2.genus
    first = tuple(Block(shift(b.word, g + h, 0), b.declared_F, b.side) for b in w1.blocks)
    second = tuple(Block(shift(b.word, g + h, g), b.declared_F, b.side) for b in w2.blocks)
    return AnnotatedWord(g + h, first + second)


def conjugate_word(w: AnnotatedWord, M) -> AnnotatedWord:
    """Wrap every factor of every block in a conjugation by M."""
    blocks = []
    for b in w.blocks:
        word = TwistWord(w.genus, tuple(Conjugated(M, f) for f in b.word.factors))
        blocks.append(Block(word, b.declared_F, b.side))
    return AnnotatedWord(w.genus, tuple(blocks))


def _knot_block(K: Separating) -> Block:
    if not isinstance(K, Separating):
        raise CassonError("surgery curve must be a separating twist")
    if K.f_value is None:
        raise CassonError("separating twist needs a declared F value")
    return Block(TwistWord(K.genus, (Separating(K.genus, 1, K.f_value),)), K.f_value)


def surgery_increment_series(w: AnnotatedWord, K: Separating, n_max: int) -> List[int]:
    """F(T_K^n w) for n = 1..n_max."""
    kb = _knot_block(K)
    return [eval_F(AnnotatedWord(w.genus, (kb,) * n + w.blocks)) for n in range(1, n_max + 1)]


def second_difference(w: AnnotatedWord, K: Separating, L: Separating, k: int, l: int) -> int:
    """F(K_{k+1} L_{l+1}) - F(K_k L_{l+1}) - F(K_{k+1} L_l) + F(K_k L_l)."""
    kb, lb = _knot_block(K), _knot_block(L)

    def F(i, j):
        return eval_F(AnnotatedWord(w.genus, (lb,) * j + (kb,) * i + w.blocks))

    return F(k + 1, l + 1) - F(k, l + 1) - F(k + 1, l) + F(k, l)


@dataclass(frozen=True)
class LaurentPolynomial:
    coeffs: Dict[int, int]

    def __post_init__(self):
        object.__setattr__(self, "coeffs",
                           {int(k): int(v) for k, v in sorted(self.coeffs.items()) if v})

    def __call__(self, t):
        t = Fraction(t)
        return sum(c * t ** k for k, c in self.coeffs.items())

    def is_symmetric(self) -> bool:
        return all(self.coeffs.get(-k) == c for k, c in self.coeffs.items())

    def second_derivative_at_one(self) -> int:
        return sum(c * k * (k - 1) for k, c in self.coeffs.items())

    def to_json(self) -> dict:
        return {str(k): c for k, c in self.coeffs.items()}

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        out = ""
        for k, c in sorted(self.coeffs.items(), reverse=True):
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            mag = "" if mono and abs(c) == 1 else str(abs(c))
            if not out:
                out = ("-" if c < 0 else "") + mag + mono
            else:
                out += (" - " if c < 0 else " + ") + mag + mono
        return out


def _check_seifert(V) -> linalg.Matrix:
    try:
        V = linalg.as_matrix(V)
    except (TypeError, ValueError) as exc:
        raise SeifertError(f"bad Seifert matrix: {exc}") from None
    n = len(V)
    if any(len(r) != n for r in V):
        raise SeifertError("Seifert matrix must be square")
    if n % 2:
        raise SeifertError("Seifert matrix of a knot has even size")
    d = linalg.det(linalg.add(V, linalg.neg(linalg.transpose(V))))
    if abs(d) != 1:
        raise SeifertError(f"det(V - tV) = {d}, expected +-1")
    return V


def alexander_from_seifert(V) -> LaurentPolynomial:
    """Symmetrized Alexander polynomial det(V - t tV) with Delta(1) = 1."""
    V = _check_seifert(V)
    n = len(V)
    if n == 0:
        return LaurentPolynomial({0: 1})
    Vt = linalg.transpose(V)
    # det(V - t tV) has degree <= n; recover it by exact interpolation
    xs = list(range(n + 1))
    ys = [linalg.det(tuple(tuple(V[i][j] - x * Vt[i][j] for j in range(n)) for i in range(n)))
          for x in xs]
    coeffs = [Fraction(0)] * (n + 1)
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for k in range(len(basis) - 1):
                basis[k] -= xj * basis[k + 1]
            denom *= xi - xj
        for k, b in enumerate(basis):
            coeffs[k] += yi * b / denom
    if any(c.denominator != 1 for c in coeffs):
        raise ArithmeticError("interpolation produced non-integer coefficients")
    poly = {k: int(c) for k, c in enumerate(coeffs) if c}
    lo, hi = min(poly), max(poly)
    if (lo + hi) % 2:
        raise SeifertError("Alexander polynomial cannot be symmetrized")
    mid = (lo + hi) // 2
    sign = 1 if sum(poly.values()) > 0 else -1
    delta = LaurentPolynomial({k - mid: sign * c for k, c in poly.items()})
    if not delta.is_symmetric():
        raise SeifertError("Alexander polynomial is not symmetric")
    return delta


def half_second_derivative(delta: LaurentPolynomial) -> int:
    d2 = delta.second_derivative_at_one()
    if d2 % 2:
        raise ArithmeticError("second derivative at 1 is odd")
    return d2 // 2


def casson_surgery(V, n: int, sign: int = 1) -> int:
    """Casson invariant of 1/n surgery on a knot with Seifert matrix V.

    sign = +1 makes 1-surgery on the trefoil (the Poincare sphere) equal to 1.
    """
    if sign not in (1, -1):
        raise CassonError("sign must be +1 or -1")
    return sign * n * half_second_derivative(alexander_from_seifert(V))
