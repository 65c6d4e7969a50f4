"""Free groups, their endomorphisms, and the handlebody automorphisms we check.

Letters are (generator index, +-1) with 0-based indices.  On the surface group
the alphabet is alpha_1..alpha_g, beta_1..beta_g, matching the homology basis
a_1..a_g, b_1..b_g.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, List, Sequence, Tuple

from . import linalg
from .linalg import Matrix

Letter = Tuple[int, int]


def reduce_letters(letters: Iterable[Letter]) -> Tuple[Letter, ...]:
    stack: List[Letter] = []
    for gen, e in letters:
        if e not in (1, -1):
            raise ValueError(f"exponent must be +-1, got {e}")
        if stack and stack[-1][0] == gen and stack[-1][1] == -e:
            stack.pop()
        else:
            stack.append((gen, e))
    return tuple(stack)


@dataclass(frozen=True)
class FreeWord:
    rank: int
    letters: Tuple[Letter, ...] = ()

    def __post_init__(self):
        for gen, _ in self.letters:
            if not 0 <= gen < self.rank:
                raise ValueError(f"generator {gen} out of range for rank {self.rank}")
        object.__setattr__(self, "letters", reduce_letters(self.letters))

    @classmethod
    def gen(cls, i: int, rank: int, e: int = 1) -> "FreeWord":
        return cls(rank, ((i, e),))

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        if self.rank != other.rank:
            raise ValueError("rank mismatch")
        return FreeWord(self.rank, self.letters + other.letters)

    def inverse(self) -> "FreeWord":
        return FreeWord(self.rank, tuple((g, -e) for g, e in reversed(self.letters)))

    def __len__(self) -> int:
        return len(self.letters)

    def exponent_sums(self) -> Tuple[int, ...]:
        out = [0] * self.rank
        for g, e in self.letters:
            out[g] += e
        return tuple(out)

    def to_str(self, names: Sequence[str] | None = None) -> str:
        if not self.letters:
            return "1"
        names = names or [f"x{i + 1}" for i in range(self.rank)]
        return " ".join(names[g] + ("^-1" if e < 0 else "") for g, e in self.letters)


def word(rank: int, *letters: Letter) -> FreeWord:
    return FreeWord(rank, letters)


@dataclass(frozen=True)
class Endo:
    rank: int
    images: Tuple[FreeWord, ...]

    def __post_init__(self):
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        if len(images) != self.rank or any(w.rank != self.rank for w in images):
            raise ValueError("an endomorphism needs one image of matching rank per generator")

    @classmethod
    def identity(cls, rank: int) -> "Endo":
        return cls(rank, tuple(FreeWord.gen(i, rank) for i in range(rank)))

    @classmethod
    def from_map(cls, rank: int, mapping: Dict[int, FreeWord]) -> "Endo":
        """Generators missing from ``mapping`` are fixed."""
        return cls(rank, tuple(mapping.get(i, FreeWord.gen(i, rank)) for i in range(rank)))

    def __call__(self, w: FreeWord) -> FreeWord:
        return apply(self, w)

    def abelianization(self) -> Matrix:
        """Integer matrix whose column j is the exponent-sum vector of the image of x_j."""
        return linalg.transpose(tuple(w.exponent_sums() for w in self.images))


def apply(e: Endo, w: FreeWord) -> FreeWord:
    if e.rank != w.rank:
        raise ValueError(f"rank mismatch: {e.rank} != {w.rank}")
    out: List[Letter] = []
    for g, s in w.letters:
        img = e.images[g] if s > 0 else e.images[g].inverse()
        out.extend(img.letters)
    return FreeWord(e.rank, tuple(out))


def compose(e1: Endo, e2: Endo) -> Endo:
    """e1 after e2."""
    if e1.rank != e2.rank:
        raise ValueError(f"rank mismatch: {e1.rank} != {e2.rank}")
    return Endo(e1.rank, tuple(apply(e1, w) for w in e2.images))


def power(e: Endo, n: int) -> Endo:
    out = Endo.identity(e.rank)
    for _ in range(n):
        out = compose(e, out)
    return out


# -- handlebody group automorphisms ---------------------------------------------

def magnus_K12(rank: int) -> Endo:
    """alpha_1 -> alpha_2 alpha_1 alpha_2^-1, other generators fixed."""
    return Endo.from_map(rank, {0: word(rank, (1, 1), (0, 1), (1, -1))})


def magnus_K12_inverse(rank: int) -> Endo:
    return Endo.from_map(rank, {0: word(rank, (1, -1), (0, 1), (1, 1))})


def sigma2(rank: int) -> Endo:
    """alpha_2 -> alpha_2^-1, other generators fixed."""
    return Endo.from_map(rank, {1: word(rank, (1, -1))})


@dataclass
class EndoMismatch:
    generator: int
    expected: FreeWord
    got: FreeWord

    def to_json(self) -> dict:
        return {"generator": self.generator, "expected": self.expected.to_str(),
                "got": self.got.to_str()}


def mismatches(e1: Endo, e2: Endo) -> List[EndoMismatch]:
    return [EndoMismatch(i, a, b) for i, (a, b) in enumerate(zip(e1.images, e2.images)) if a != b]


@dataclass
class MagnusReport:
    genus: int
    conjugation: List[EndoMismatch]
    sigma_involution: List[EndoMismatch]
    k12_inverse: List[EndoMismatch]

    @property
    def passed(self) -> bool:
        return not (self.conjugation or self.sigma_involution or self.k12_inverse)

    def to_json(self) -> dict:
        return {
            "genus": self.genus,
            "passed": self.passed,
            "sigma2_K12_sigma2_inverse_equals_K12_inverse": not self.conjugation,
            "sigma2_involution": not self.sigma_involution,
            "K12_times_inverse_is_identity": not self.k12_inverse,
            "witnesses": [m.to_json() for m in
                          self.conjugation + self.sigma_involution + self.k12_inverse],
        }


def magnus_identity_check(g: int) -> MagnusReport:
    """sigma_2 K_12 sigma_2^-1 = K_12^-1 on the free group of rank g."""
    if g < 2:
        raise ValueError("need rank at least 2")
    K, Ki, s = magnus_K12(g), magnus_K12_inverse(g), sigma2(g)
    ident = Endo.identity(g)
    # sigma_2 is an involution, so sigma_2^-1 = sigma_2 once that is checked
    inv_check = mismatches(compose(s, s), ident)
    conj = mismatches(compose(s, compose(K, s)), Ki)
    kk = mismatches(compose(K, Ki), ident) + mismatches(compose(Ki, K), ident)
    return MagnusReport(g, conj, inv_check, kk)


# -- Suzuki generators on the surface group --------------------------------------

def _alpha(i: int, g: int, e: int = 1) -> Letter:
    return (i - 1, e)


def _beta(i: int, g: int, e: int = 1) -> Letter:
    return (g + i - 1, e)


def knob_commutator(i: int, g: int) -> FreeWord:
    """sigma_i = alpha_i^-1 beta_i^-1 alpha_i beta_i."""
    return word(2 * g, _alpha(i, g, -1), _beta(i, g, -1), _alpha(i, g), _beta(i, g))


def suzuki_generators(g: int) -> Dict[str, Endo]:
    """The cyclic translation Q, knob twist sigma, knob interchange P and Luft map U.

    Transcribed from their action tables on alpha_i, beta_i; unlisted
    generators are fixed.
    """
    if g < 3:
        raise ValueError("need genus at least 3")
    r = 2 * g
    a = lambda i, e=1: _alpha(i, g, e)  # noqa: E731
    b = lambda i, e=1: _beta(i, g, e)  # noqa: E731
    s1 = knob_commutator(1, g)
    s1i = s1.inverse()

    Q = Endo.from_map(r, {**{i - 1: word(r, a(i % g + 1)) for i in range(1, g + 1)},
                          **{g + i - 1: word(r, b(i % g + 1)) for i in range(1, g + 1)}})
    sigma = Endo.from_map(r, {
        0: word(r, a(1, -1)) * s1i,
        g: s1 * word(r, b(1, -1)),
    })
    P = Endo.from_map(r, {
        0: s1i * word(r, a(2)) * s1,
        1: word(r, a(1)),
        g: s1i * word(r, b(2)) * s1,
        g + 1: word(r, b(1)),
    })
    U = Endo.from_map(r, {
        0: word(r, a(1), a(2)),
        g: word(r, b(1)),
        1: word(r, a(2, -1), b(2, -1), a(2, -1), b(2), a(2)),
        g + 1: word(r, a(2, -1), b(2, -1), a(1, -1), b(1), a(1), a(2)),
    })
    return {"Q": Q, "sigma": sigma, "P": P, "U": U}


@dataclass
class SuzukiReport:
    genus: int
    abelianizations: Dict[str, Matrix]
    q_power_identity: List[EndoMismatch]
    symplectic: Dict[str, bool]
    preserves_B: Dict[str, bool]
    abelian_functorial: bool

    @property
    def passed(self) -> bool:
        return (not self.q_power_identity and all(self.symplectic.values())
                and all(self.preserves_B.values()) and self.abelian_functorial)

    def to_json(self) -> dict:
        return {
            "genus": self.genus,
            "passed": self.passed,
            "Q_power_genus_is_identity": not self.q_power_identity,
            "symplectic": self.symplectic,
            "preserves_B": self.preserves_B,
            "abelianization_functorial": self.abelian_functorial,
            "abelianizations": {k: [list(r) for r in m] for k, m in self.abelianizations.items()},
            "witnesses": [m.to_json() for m in self.q_power_identity],
        }


def suzuki_check(g: int) -> SuzukiReport:
    from .errors import BlockFormError, NotSymplecticError
    from .symplectic import SymplecticMatrix, decompose_spB

    gens = suzuki_generators(g)
    ab = {k: e.abelianization() for k, e in gens.items()}
    symp, spb = {}, {}
    for k, m in ab.items():
        try:
            M = SymplecticMatrix(g, m)
            symp[k] = True
        except NotSymplecticError:
            symp[k], spb[k] = False, False
            continue
        try:
            decompose_spB(M)
            spb[k] = True
        except BlockFormError:
            spb[k] = False
    functorial = all(
        compose(e1, e2).abelianization() == linalg.matmul(e1.abelianization(), e2.abelianization())
        for e1 in gens.values() for e2 in gens.values())
    qg = mismatches(power(gens["Q"], g), Endo.identity(2 * g))
    return SuzukiReport(g, ab, qg, symp, spb, functorial)
