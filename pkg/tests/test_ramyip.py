import pytest

from macweyl.cform import E_spec
from macweyl.qcomb import q_multinomial
from macweyl.ramyip import (
    BoundExceeded,
    ramyip_sum,
    ramyip_terms,
    specialize,
)
from macweyl.ring import QPolynomial, XPolynomial
from macweyl.walks import enumerate_walks, qb_filter
from macweyl.weylchar import ch_W_sigma


def qp(d):
    return QPolynomial(d)


def test_term_structure_n_minus_1():
    terms = ramyip_terms("A2", -1)
    assert sorted(t.x_exponent for t in terms) == [-1, 0, 0, 1]
    # one rational factor per folded step
    for t in terms:
        assert len(t.factors) == sum(1 for b in t.walk.mask if b == 0)


def test_term_structure_n_plus_1():
    terms = ramyip_terms("A2", 1)
    assert sorted(t.x_exponent for t in terms) == [0, 1]


def test_route_mismatch_raised_on_disagreement(monkeypatch):
    import macweyl.ramyip as mod

    broken = dict(mod._STAT_SETS)
    broken[("A2", "t0")] = ("J0_pos", "J_neg")
    monkeypatch.setattr(mod, "_STAT_SETS", broken)
    with pytest.raises(mod.RouteMismatch) as exc:
        specialize("A2", -1, "t0")
    assert not exc.value.exact_route.is_zero()
    assert not exc.value.stat_route.is_zero()


def test_normalized_all_crossing_coefficient():
    full = ramyip_sum("A2", -1)
    assert full.terms[-1] == 1
    full = ramyip_sum("A2dagger", -1)
    assert full.terms[-1] == 1


def test_unnormalized_sum_keeps_literal_prefactor():
    full = ramyip_sum("A2", -1, normalize=False)
    # the all-crossing walk carries v^-1 under the printed prefactor
    rf = full.terms[-1]
    assert rf.v_valuation() == -1


def test_specialize_examples():
    assert specialize("A2", -1, "t0") == XPolynomial(
        {-1: qp({0: 1}), 0: qp({1: 1}), 1: qp({0: 1})}
    )
    assert specialize("A2dagger", -1, "t0") == XPolynomial(
        {-1: qp({0: 1}), 0: qp({0: 1}), 1: qp({0: 1})}
    )
    assert specialize("A2", 1, "t0") == XPolynomial({0: qp({1: 1}), 1: qp({0: 1})})
    assert specialize("A2", 0, "t0") == XPolynomial({0: qp({0: 1})})


def test_both_routes_agree_everywhere():
    # specialize() raises RouteMismatch internally if the exact-arithmetic
    # and statistic routes ever diverge
    for family in ("A2", "A2dagger"):
        for n in [m for m in range(-3, 4) if m != 0]:
            for spec in ("t0", "tinf"):
                specialize(family, n, spec)


def test_mass_and_symmetry_negative_n():
    for family in ("A2", "A2dagger"):
        for n in range(1, 5):
            p = specialize(family, -n, "t0")
            assert p.eval_at_ones() == 3**n
            assert p == p.mirror_x()


def test_survivor_count_matches_multinomial_count():
    for n in range(1, 5):
        survivors = qb_filter(enumerate_walks(-n), "A2", "t0")
        total = 0
        for k22 in range(n + 1):
            for k12 in range(n - k22 + 1):
                k11 = n - k22 - k12
                total += q_multinomial(k22, k12, k11, 2).eval_at_one()
        assert len(survivors) == total == 3**n


def test_agreement_with_cform_t0():
    for family in ("A2", "A2dagger"):
        for n in [m for m in range(-4, 5) if m != 0]:
            assert specialize(family, n, "t0") == E_spec(family, n, "t0")


def test_agreement_with_cform_tinf_up_to_mirror():
    for family in ("A2", "A2dagger"):
        for n in range(1, 5):
            assert specialize(family, -n, "tinf") == E_spec(family, -n, "tinf").mirror_x()
    for n in range(1, 5):
        assert specialize("A2", n, "tinf") == E_spec("A2", n, "tinf")


def test_character_agreement_positive_n():
    for n in range(1, 5):
        assert specialize("A2", n, "t0") == ch_W_sigma(n)
        assert specialize("A2", -n, "t0") == ch_W_sigma(-n)


def test_bound_exceeded():
    with pytest.raises(BoundExceeded):
        specialize("A2", -7, "t0")
    with pytest.raises(BoundExceeded):
        ramyip_sum("A2", 9, bound=6)
