"""Twist words, their homology action and the first Johnson homomorphism.

A word is read left to right and its homology action is the matrix product of
its factors in that order.  Bounding-pair twists are atomic tokens that carry
the symplectic spine of the subsurface they cut off; on such a token tau is
power * (sum_i x_i ^ y_i) ^ c.  Spines with more than one pair (genus-h
subsurfaces) extend the genus-one formula additively.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from functools import reduce
from typing import Optional, Sequence, Tuple, Union

from .errors import GenusMismatchError, NotTorelliError, CassonError
from .exterior import ExteriorCubeVector, induced_action, w_split, wedge3
from .symplectic import HomologyVector, SymplecticMatrix, omega, transvection


@dataclass(frozen=True)
class General:
    c: HomologyVector
    power: int = 1

    @property
    def genus(self) -> int:
        return self.c.genus


@dataclass(frozen=True)
class Separating:
    """Twist along a separating curve; f_value is F of a single twist, if known."""

    genus: int
    power: int = 1
    f_value: Optional[int] = None


@dataclass(frozen=True)
class BoundingPair:
    spine: Tuple[Tuple[HomologyVector, HomologyVector], ...]
    c: HomologyVector
    power: int = 1

    def __post_init__(self):
        spine = tuple((x, y) for x, y in self.spine)
        object.__setattr__(self, "spine", spine)
        if not spine:
            raise CassonError("bounding pair needs a nonempty spine")
        g = self.c.genus
        for x, y in spine:
            if x.genus != g or y.genus != g:
                raise GenusMismatchError("spine and curve class have different genus")
        for i, (xi, yi) in enumerate(spine):
            for j, (xj, yj) in enumerate(spine):
                if omega(xi, yj) != int(i == j):
                    raise CassonError(f"spine pairs {i},{j}: omega(x, y) != delta")
                if omega(xi, xj) or omega(yi, yj):
                    raise CassonError(f"spine pairs {i},{j}: not isotropic")
            if omega(xi, self.c) or omega(yi, self.c):
                raise CassonError(f"spine pair {i} is not orthogonal to the curve class")
        if reduce(gcd, (abs(x) for x in self.c.coords), 0) != 1:
            raise CassonError("curve class must be nonzero and primitive")

    @property
    def genus(self) -> int:
        return self.c.genus


@dataclass(frozen=True)
class Conjugated:
    by: SymplecticMatrix
    inner: "TwistGenerator"

    def __post_init__(self):
        if self.by.genus != self.inner.genus:
            raise GenusMismatchError("conjugating matrix and inner factor have different genus")

    @property
    def genus(self) -> int:
        return self.by.genus

    @property
    def power(self) -> int:
        return self.inner.power


TwistGenerator = Union[General, Separating, BoundingPair, Conjugated]


def factor_action(f: TwistGenerator) -> SymplecticMatrix:
    if isinstance(f, General):
        return transvection(f.c, f.power)
    if isinstance(f, (Separating, BoundingPair)):
        return SymplecticMatrix.identity(f.genus)
    if isinstance(f, Conjugated):
        return f.by @ factor_action(f.inner) @ f.by.inverse()
    raise TypeError(f"unknown factor {f!r}")


def factor_inverse(f: TwistGenerator) -> TwistGenerator:
    if isinstance(f, General):
        return General(f.c, -f.power)
    if isinstance(f, Separating):
        return Separating(f.genus, -f.power, f.f_value)
    if isinstance(f, BoundingPair):
        return BoundingPair(f.spine, f.c, -f.power)
    return Conjugated(f.by, factor_inverse(f.inner))


def is_torelli_factor(f: TwistGenerator) -> bool:
    if isinstance(f, Conjugated):
        return is_torelli_factor(f.inner)
    return isinstance(f, (Separating, BoundingPair))


def factor_tau(f: TwistGenerator) -> ExteriorCubeVector:
    if isinstance(f, Separating):
        return ExteriorCubeVector.zero(f.genus)
    if isinstance(f, BoundingPair):
        out = ExteriorCubeVector.zero(f.genus)
        for x, y in f.spine:
            out = out + wedge3(x, y, f.c)
        return f.power * out
    if isinstance(f, Conjugated):
        return induced_action(f.by, factor_tau(f.inner))
    raise NotTorelliError(f"tau is not defined on factor {f!r}")


def stabilize_factor(f: TwistGenerator, new_genus: int, offset: int = 0) -> TwistGenerator:
    if isinstance(f, General):
        return General(f.c.embed(new_genus, offset), f.power)
    if isinstance(f, Separating):
        return Separating(new_genus, f.power, f.f_value)
    if isinstance(f, BoundingPair):
        spine = tuple((x.embed(new_genus, offset), y.embed(new_genus, offset)) for x, y in f.spine)
        return BoundingPair(spine, f.c.embed(new_genus, offset), f.power)
    return Conjugated(f.by.embed(new_genus, offset), stabilize_factor(f.inner, new_genus, offset))


@dataclass(frozen=True)
class TwistWord:
    genus: int
    factors: Tuple[TwistGenerator, ...] = ()

    def __post_init__(self):
        factors = tuple(self.factors)
        object.__setattr__(self, "factors", factors)
        for i, f in enumerate(factors):
            if f.genus != self.genus:
                raise GenusMismatchError(f"factor {i} has genus {f.genus}, word has {self.genus}")

    def __mul__(self, other: "TwistWord") -> "TwistWord":
        if self.genus != other.genus:
            raise GenusMismatchError("cannot concatenate words of different genus")
        return TwistWord(self.genus, self.factors + other.factors)

    def __pow__(self, n: int) -> "TwistWord":
        base = self if n >= 0 else self.inverse()
        return TwistWord(self.genus, base.factors * abs(n))

    def inverse(self) -> "TwistWord":
        return TwistWord(self.genus, tuple(factor_inverse(f) for f in reversed(self.factors)))

    def __len__(self) -> int:
        return len(self.factors)


def h1_action(w: TwistWord) -> SymplecticMatrix:
    out = SymplecticMatrix.identity(w.genus)
    for f in w.factors:
        out = out @ factor_action(f)
    return out


def is_torelli(w: TwistWord) -> bool:
    return h1_action(w).is_identity()


def tau(w: TwistWord) -> ExteriorCubeVector:
    """First Johnson homomorphism of a word made of Torelli factors.

    Since every factor acts trivially on H the value is the plain sum of the
    factor values.
    """
    out = ExteriorCubeVector.zero(w.genus)
    for i, f in enumerate(w.factors):
        if not is_torelli_factor(f):
            raise NotTorelliError(f"factor {i} is not a Torelli generator")
        out = out + factor_tau(f)
    return out


SIDES = ("TA", "TB", "AB")


def classify_tau(t: ExteriorCubeVector) -> Tuple[str, ...]:
    """Sides compatible with a tau value.

    Only a necessary condition: tau of the B-handlebody Torelli subgroup lies
    in W_A + W_AB and tau of the A-handlebody one in W_AB + W_B.
    """
    sp = w_split(t)
    labels = []
    if not sp.wA:
        labels.append("TA")
    if not sp.wB:
        labels.append("TB")
    if not sp.wA and not sp.wB:
        labels.append("AB")
    return tuple(labels) or ("neither",)


def classify_side(w: TwistWord) -> Tuple[str, ...]:
    if not is_torelli(w):
        raise NotTorelliError("word does not act trivially on homology")
    return classify_tau(tau(w))


def stabilize(w: TwistWord, new_genus: int) -> TwistWord:
    if new_genus < w.genus:
        raise CassonError(f"cannot stabilize genus {w.genus} word to genus {new_genus}")
    if new_genus == w.genus:
        return w
    return TwistWord(new_genus, tuple(stabilize_factor(f, new_genus) for f in w.factors))


def shift(w: TwistWord, new_genus: int, offset: int) -> TwistWord:
    """Move a word onto handles offset+1..offset+genus of a genus new_genus surface."""
    return TwistWord(new_genus, tuple(stabilize_factor(f, new_genus, offset) for f in w.factors))


@dataclass
class LanternReport:
    classes: Tuple[HomologyVector, HomologyVector, HomologyVector]
    orthogonal: bool
    discrepancy: SymplecticMatrix

    @property
    def passed(self) -> bool:
        return self.discrepancy.is_identity()

    def to_json(self) -> dict:
        return {"classes": [c.to_json() for c in self.classes], "orthogonal": self.orthogonal,
                "passed": self.passed, "lhs_rhs_inverse": self.discrepancy.to_json()}


def lantern_check(c1: HomologyVector, c2: HomologyVector, c3: HomologyVector) -> LanternReport:
    """Compare T_c0 T_c1 T_c2 T_c3 with T_c12 T_c13 T_c23 on homology."""
    c0 = c1 + c2 + c3
    lhs = transvection(c0) @ transvection(c1) @ transvection(c2) @ transvection(c3)
    rhs = transvection(c1 + c2) @ transvection(c1 + c3) @ transvection(c2 + c3)
    orth = not (omega(c1, c2) or omega(c1, c3) or omega(c2, c3))
    return LanternReport((c1, c2, c3), orth, lhs @ rhs.inverse())


def bp_as_general_twists(f: BoundingPair) -> TwistWord:
    """The two-twist model T_beta T_beta'^-1 of a bounding pair on homology.

    Both curves have class c, so only the homology action is meaningful here.
    """
    return TwistWord(f.genus, (General(f.c, f.power), General(f.c, -f.power)))
