import random

import pytest
from hypothesis import given, strategies as st

from casson.freegroup import (Endo, FreeWord, apply, compose, knob_commutator, magnus_K12,
                              magnus_K12_inverse, magnus_identity_check, power, reduce_letters,
                              sigma2, suzuki_check, suzuki_generators, word)

UP = ((1, 1), (0, 1))
DOWN = ((1, 0), (1, 1))


def mul(x, y):
    return tuple(tuple(sum(x[i][k] * y[k][j] for k in range(2)) for j in range(2)) for i in range(2))


def inv(x):
    (p, q), (r, s) = x
    return ((s, -q), (-r, p))


def sl2_images(rank, rng):
    """Random SL2(Z) matrices: a homomorphism from the free group detecting most relations."""
    out = []
    for _ in range(rank):
        m = ((1, 0), (0, 1))
        for _ in range(6):
            m = mul(m, rng.choice((UP, DOWN, inv(UP), inv(DOWN))))
        out.append(m)
    return out


def evaluate(w, images):
    m = ((1, 0), (0, 1))
    for g, e in w.letters:
        m = mul(m, images[g] if e > 0 else inv(images[g]))
    return m


letters = st.lists(st.tuples(st.integers(0, 3), st.sampled_from((1, -1))), max_size=20)


@given(letters)
def test_reduction_preserves_value(ls):
    images = sl2_images(4, random.Random(0))
    raw = ((1, 0), (0, 1))
    for g, e in ls:
        raw = mul(raw, images[g] if e > 0 else inv(images[g]))
    w = FreeWord(4, tuple(ls))
    assert evaluate(w, images) == raw
    assert all(not (x[0] == y[0] and x[1] == -y[1]) for x, y in zip(w.letters, w.letters[1:]))
    assert reduce_letters(w.letters) == w.letters


@given(letters, letters)
def test_word_group_laws(x, y):
    u, v = FreeWord(4, tuple(x)), FreeWord(4, tuple(y))
    assert len(u * u.inverse()) == 0
    assert (u * v).inverse() == v.inverse() * u.inverse()
    assert (u * v).exponent_sums() == tuple(p + q for p, q in zip(u.exponent_sums(), v.exponent_sums()))


def test_word_validation():
    with pytest.raises(ValueError):
        FreeWord(2, ((2, 1),))
    with pytest.raises(ValueError):
        FreeWord(2, ((0, 2),))
    assert FreeWord(2).to_str() == "1"
    assert word(2, (0, 1), (1, -1)).to_str(["a", "b"]) == "a b^-1"


def test_K12_action():
    K = magnus_K12(3)
    assert K(FreeWord.gen(0, 3)) == word(3, (1, 1), (0, 1), (1, -1))
    assert K(FreeWord.gen(2, 3)) == FreeWord.gen(2, 3)


@pytest.mark.parametrize("g", [2, 3, 4])
def test_magnus_identity(g):
    rep = magnus_identity_check(g)
    assert rep.passed
    assert rep.to_json()["witnesses"] == []


def test_magnus_identity_in_sl2():
    rng = random.Random(1)
    K, Ki, s = magnus_K12(3), magnus_K12_inverse(3), sigma2(3)
    lhs = compose(s, compose(K, s))
    for _ in range(20):
        images = sl2_images(3, rng)
        for i in range(3):
            x = FreeWord.gen(i, 3)
            assert evaluate(lhs(x), images) == evaluate(Ki(x), images)


def test_magnus_detects_wrong_relation():
    K, s = magnus_K12(3), sigma2(3)
    assert compose(s, compose(K, s)) != K


@pytest.mark.parametrize("g", [3, 4, 5])
def test_Q_order(g):
    Q = suzuki_generators(g)["Q"]
    assert power(Q, g) == Endo.identity(2 * g)
    for k in range(1, g):
        assert power(Q, k) != Endo.identity(2 * g)


@pytest.mark.parametrize("g", [3, 4, 5])
def test_suzuki_report(g):
    assert suzuki_check(g).passed


def test_suzuki_abelianizations_g3():
    ab = {k: e.abelianization() for k, e in suzuki_generators(3).items()}
    assert ab["U"] == ((1, 0, 0, 0, 0, 0),
                       (1, -1, 0, 0, 0, 0),
                       (0, 0, 1, 0, 0, 0),
                       (0, 0, 0, 1, 1, 0),
                       (0, 0, 0, 0, -1, 0),
                       (0, 0, 0, 0, 0, 1))
    assert ab["sigma"] == ((-1, 0, 0, 0, 0, 0), (0, 1, 0, 0, 0, 0), (0, 0, 1, 0, 0, 0),
                           (0, 0, 0, -1, 0, 0), (0, 0, 0, 0, 1, 0), (0, 0, 0, 0, 0, 1))
    assert ab["P"] == ((0, 1, 0, 0, 0, 0), (1, 0, 0, 0, 0, 0), (0, 0, 1, 0, 0, 0),
                       (0, 0, 0, 0, 1, 0), (0, 0, 0, 1, 0, 0), (0, 0, 0, 0, 0, 1))


def test_sigma_is_involution_only_on_homology():
    s = suzuki_generators(3)["sigma"]
    ss = compose(s, s)
    assert ss != Endo.identity(6)
    assert ss.abelianization() == Endo.identity(6).abelianization()


def test_knob_commutator_abelianizes_to_zero():
    assert knob_commutator(2, 3).exponent_sums() == (0,) * 6


def test_abelianization_functorial_random():
    rng = random.Random(2)
    gens = list(suzuki_generators(4).values())
    for _ in range(100):
        e1, e2 = rng.choice(gens), rng.choice(gens)
        w = FreeWord(8, tuple((rng.randrange(8), rng.choice((1, -1))) for _ in range(6)))
        assert apply(compose(e1, e2), w) == apply(e1, apply(e2, w))


def test_genus_guards():
    with pytest.raises(ValueError):
        suzuki_generators(2)
    with pytest.raises(ValueError):
        magnus_identity_check(1)
    with pytest.raises(ValueError):
        apply(Endo.identity(2), FreeWord(3))
