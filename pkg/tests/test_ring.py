import random

import pytest

from macweyl.ring import (
    BiPolynomial,
    DenominatorVanishesAtZero,
    DivergesAtInfinity,
    NotPolynomial,
    QPolynomial,
    RationalFunction,
    XPolynomial,
    rf_eval_v0,
    rf_limit_v_infinity,
    substitute_q_inverse,
)


def qp(d):
    return QPolynomial(d)


def bp(d):
    return BiPolynomial(d)


def rand_qpoly(rng, allow_zero=True):
    n = rng.randint(0 if allow_zero else 1, 5)
    return QPolynomial({rng.randint(-4, 4): rng.randint(-9, 9) for _ in range(n)})


def rand_bipoly(rng, allow_zero=True):
    n = rng.randint(0 if allow_zero else 1, 5)
    p = BiPolynomial(
        {(rng.randint(-3, 3), rng.randint(-3, 3)): rng.randint(-9, 9) for _ in range(n)}
    )
    if not allow_zero and p.is_zero():
        return BiPolynomial.one()
    return p


def test_canonical_form_drops_zeros():
    assert qp({2: 0, 1: 3}).terms == {1: 3}
    assert bp({(1, 1): 0}).is_zero()
    assert XPolynomial({1: qp({})}).is_zero()


def test_substitute_q_inverse_examples():
    assert substitute_q_inverse(qp({0: 1, 1: 1})) == qp({0: 1, -1: 1})
    assert substitute_q_inverse(qp({0: 1})) == qp({0: 1})
    assert substitute_q_inverse(qp({2: 1, -1: 1})) == qp({-2: 1, 1: 1})


def test_substitute_q_inverse_involution_and_homomorphism():
    rng = random.Random(7)
    for _ in range(200):
        a, b = rand_qpoly(rng), rand_qpoly(rng)
        assert substitute_q_inverse(substitute_q_inverse(a)) == a
        assert substitute_q_inverse(a + b) == substitute_q_inverse(a) + substitute_q_inverse(b)
        assert substitute_q_inverse(a * b) == substitute_q_inverse(a) * substitute_q_inverse(b)


def test_ring_axioms_random_triples():
    rng = random.Random(11)
    for _ in range(150):
        a, b, c = (rand_qpoly(rng) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
    for _ in range(100):
        a, b, c = (rand_bipoly(rng) for _ in range(3))
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a


def test_rf_equality_is_equivalence():
    rng = random.Random(13)
    for _ in range(100):
        num = rand_bipoly(rng)
        den = rand_bipoly(rng, allow_zero=False)
        r = RationalFunction(num, den)
        m1 = rand_bipoly(rng, allow_zero=False)
        m2 = rand_bipoly(rng, allow_zero=False)
        a = RationalFunction(num * m1, den * m1)
        b = RationalFunction(num * m2, den * m2)
        assert r == a and a == b and r == b


def test_rf_eval_v0_examples():
    one = bp({(0, 0): 1})
    # (1 + q v^2) / (1 - q^2 v^2) -> 1
    r = RationalFunction(bp({(0, 0): 1, (1, 2): 1}), bp({(0, 0): 1, (2, 2): -1}))
    assert rf_eval_v0(r) == qp({0: 1})
    # v^2 / (1 - v^2) -> 0
    r = RationalFunction(bp({(0, 2): 1}), bp({(0, 0): 1, (0, 2): -1}))
    assert rf_eval_v0(r) == qp({})
    # (q + q v^2) / 1 -> q
    r = RationalFunction(bp({(1, 0): 1, (1, 2): 1}), one)
    assert rf_eval_v0(r) == qp({1: 1})


def test_rf_eval_v0_denominator_vanishes():
    r = RationalFunction(bp({(0, 0): 1}), bp({(0, 2): 1}))
    with pytest.raises(DenominatorVanishesAtZero):
        rf_eval_v0(r)


def rand_bipoly_positive_v(rng):
    n = rng.randint(0, 4)
    return BiPolynomial(
        {(rng.randint(-3, 3), rng.randint(1, 4)): rng.randint(-9, 9) for _ in range(n)}
    )


def test_rf_eval_v0_multiplicative():
    rng = random.Random(17)
    one = bp({(0, 0): 1})
    for _ in range(120):
        # denominators with constant term 1 at v=0 keep the division exact
        d1 = one + rand_bipoly_positive_v(rng)
        d2 = one + rand_bipoly_positive_v(rng)
        n1 = rand_bipoly_positive_v(rng) + BiPolynomial.from_q(rand_qpoly(rng))
        n2 = rand_bipoly_positive_v(rng) + BiPolynomial.from_q(rand_qpoly(rng))
        a = RationalFunction(n1, d1)
        b = RationalFunction(n2, d2)
        assert rf_eval_v0(a * b) == rf_eval_v0(a) * rf_eval_v0(b)


def test_rf_limit_v_infinity_examples():
    # (q v^2) / (1 - v^2) -> -q
    r = RationalFunction(bp({(1, 2): 1}), bp({(0, 0): 1, (0, 2): -1}))
    assert rf_limit_v_infinity(r) == qp({1: -1})
    # 1 / (1 - v^2) -> 0
    r = RationalFunction(bp({(0, 0): 1}), bp({(0, 0): 1, (0, 2): -1}))
    assert rf_limit_v_infinity(r) == qp({})
    # v^4 / (1 - v^2) diverges
    r = RationalFunction(bp({(0, 4): 1}), bp({(0, 0): 1, (0, 2): -1}))
    with pytest.raises(DivergesAtInfinity):
        rf_limit_v_infinity(r)


def test_division_remainder_detected():
    with pytest.raises(NotPolynomial):
        qp({0: 1, 1: 1}).divide_exact(qp({0: 2}))
    with pytest.raises(NotPolynomial):
        qp({2: 1, 0: 1}).divide_exact(qp({1: 1, 0: 1}))
    assert qp({2: 1, 0: -1}).divide_exact(qp({1: 1, 0: -1})) == qp({1: 1, 0: 1})


def test_binomial_division():
    p = bp({(0, 0): 1, (2, 2): -1})  # 1 - q^2 v^2
    prod = p * bp({(5, 3): 2, (0, 0): 1})
    assert prod.divide_exact_binomial(2, 2) == bp({(5, 3): 2, (0, 0): 1})
    with pytest.raises(NotPolynomial):
        bp({(0, 1): 1}).divide_exact_binomial(1, 2)


def test_render_canonical():
    poly = XPolynomial(
        {
            -1: qp({3: 1}),
            0: qp({2: 1, 4: 1}),
            1: qp({1: 1, 3: 1}),
            2: qp({0: 1}),
        }
    )
    assert poly.render() == "q^3*x^-1 + (q^2+q^4) + (q+q^3)*x + x^2"
    assert XPolynomial({}).render() == "0"
    assert XPolynomial({1: qp({0: -1})}).render() == "-x"
    assert qp({0: 1, 2: -1}).render() == "1-q^2"


def test_xpolynomial_mirror_and_mass():
    poly = XPolynomial({-1: qp({0: 1}), 0: qp({1: 1}), 1: qp({0: 2})})
    assert poly.mirror_x() == XPolynomial({1: qp({0: 1}), 0: qp({1: 1}), -1: qp({0: 2})})
    assert poly.eval_at_ones() == 4
