"""Characters and bases of the Weyl modules for the osp(1|2) current
superalgebra, twisted and untwisted, for negative and positive weights;
PBW-graded characters; truncated limit characters; and the comparison
harness that checks the character formulas against the specialized
E-polynomials.

Basis monomials apply e-generators (weight +2 each) and odd g-generators
(weight +1 each) to a lowest- or highest-weight vector; the inequalities on
the generator t-degrees depend on the module family ("kind").
"""

from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement

from macweyl import cform
from macweyl.qcomb import euler_product_truncated, q_binomial
from macweyl.ring import QPolynomial, XPolynomial

KINDS = (
    "untwisted_neg",
    "twisted_neg",
    "untwisted_pos",
    "twisted_pos",
    "twisted_pos_1",
    "twisted_pos_2",
    "classical",
    "limit",
)


@dataclass(frozen=True)
class BasisMonomial:
    kind: str
    e_degrees: tuple
    g_degrees: tuple
    weight: int
    t_degree: int
    pbw_degree: int


def enumerate_basis(kind, n):
    """All basis monomials of the given kind for parameter n."""
    if kind == "twisted_pos":
        return enumerate_basis("twisted_pos_1", n) + enumerate_basis("twisted_pos_2", n)
    if kind not in KINDS:
        raise ValueError("unknown basis kind %r" % (kind,))
    positive_kind = kind in ("untwisted_pos", "twisted_pos_1", "twisted_pos_2")
    if n < 0 or (positive_kind and n < 1):
        raise ValueError("n out of range for kind %s" % kind)

    out = []

    def emit(e_degs, g_degs, weight, t_degree, pbw):
        out.append(BasisMonomial(kind, tuple(e_degs), tuple(g_degs), weight, t_degree, pbw))

    if kind == "untwisted_neg":
        for k in range(n + 1):
            for bs in combinations(range(n), k):
                for s in range(n - k + 1):
                    for a in combinations_with_replacement(range(n - k - s + 1), s):
                        emit(a, bs, -n + k + 2 * s, sum(a) + sum(bs), k + s)
    elif kind == "twisted_neg":
        for k in range(n + 1):
            for bs in combinations(range(1, 2 * n, 2), k):
                for s in range(n - k + 1):
                    vals = range(0, 2 * (n - k - s) + 1, 2)
                    for a in combinations_with_replacement(vals, s):
                        emit(a, bs, -n + k + 2 * s, sum(a) + sum(bs), s)
    elif kind == "untwisted_pos":
        for k in range(n):
            for bs in combinations(range(1, n), k):
                for s in range(n - k):
                    for a in combinations_with_replacement(range(1, n - k - s + 1), s):
                        emit(a, bs, n - k - 2 * s, sum(a) + sum(bs), k + s)
    elif kind == "twisted_pos_1":
        for k in range(n):
            for bs in combinations(range(1, 2 * n - 2, 2), k):
                for s in range(n - k):
                    vals = range(2, 2 * (n - s - k) + 1, 2)
                    for a in combinations_with_replacement(vals, s):
                        emit(a, bs, n - k - 2 * s, sum(a) + sum(bs), s)
    elif kind == "twisted_pos_2":
        for k in range(1, n + 1):
            for bs in combinations(range(1, 2 * n - 2, 2), k - 1):
                full = bs + (2 * n - 1,)
                for s in range(n - k + 1):
                    vals = range(0, 2 * (n - s - k) + 1, 2)
                    for a in combinations_with_replacement(vals, s):
                        emit(a, full, n - k - 2 * s, sum(a) + sum(full), s)
    elif kind == "classical":
        for k in range(n + 1):
            for a in combinations_with_replacement(range(n - k + 1), k):
                emit(a, (), -n + 2 * k, sum(a), k)
    else:  # limit: odd generators truncated below t-degree n, renormalized grading
        for k in range(n + 1):
            for cs in combinations(range(n), k):
                for s in range(k + 1):
                    for a in combinations_with_replacement(range(k - s + 1), s):
                        emit(a, cs, -k + 2 * s, sum(cs) - sum(a), 0)
    return out


def character_from_basis(kind, n):
    """sum over basis monomials of q^(t-degree) x^(weight)."""
    terms = {}
    for m in enumerate_basis(kind, n):
        c = QPolynomial.q_power(m.t_degree)
        terms[m.weight] = terms[m.weight] + c if m.weight in terms else c
    return XPolynomial(terms)


def ch_D(n):
    """Character of the classical module of lowest weight -n (dimension 2^n)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    terms = {}
    for k in range(n + 1):
        _add(terms, -n + 2 * k, q_binomial(n, k))
    return XPolynomial(terms)


def _add(terms, x, coeff):
    if coeff.is_zero():
        return
    terms[x] = terms[x] + coeff if x in terms else coeff


def ch_W(n):
    """Closed-form character of the untwisted module, any integer weight."""
    terms = {}
    if n <= 0:
        m = -n
        for k in range(m + 1):
            outer = QPolynomial.q_power(k * (k - 1) // 2) * q_binomial(m, k)
            for s in range(m - k + 1):
                _add(terms, -m + k + 2 * s, outer * q_binomial(m - k, s))
    else:
        for k in range(n):
            outer = QPolynomial.q_power(k * (k + 1) // 2) * q_binomial(n - 1, k)
            for s in range(n - k):
                inner = QPolynomial.q_power(s) * q_binomial(n - k - 1, s)
                _add(terms, n - k - 2 * s, outer * inner)
    return XPolynomial(terms)


def ch_W_sigma(n):
    """Closed-form character of the twisted module, any integer weight."""
    terms = {}
    if n <= 0:
        m = -n
        for k in range(m + 1):
            outer = QPolynomial.q_power(k * k) * q_binomial(m, k, 2)
            for s in range(m - k + 1):
                _add(terms, -m + k + 2 * s, outer * q_binomial(m - k, s, 2))
    else:
        for k in range(n):
            outer = QPolynomial.q_power(k * k) * q_binomial(n - 1, k, 2)
            for s in range(n - k):
                x = n - k - 2 * s
                inner = q_binomial(n - k - 1, s, 2)
                _add(terms, x, outer * QPolynomial.q_power(2 * s) * inner)
                _add(terms, x - 1, outer * QPolynomial.q_power(2 * n - 1) * inner)
    return XPolynomial(terms)


def pbw_character(n, twisted=False):
    """Triple-graded data for the associated graded of the weight -n module.

    Returns a list of (x_weight, t_degree, pbw_degree) triples, one per
    basis monomial.  The filtration counts applications of the raising half
    (e and g+ in the untwisted case, e alone in the twisted case).
    """
    kind = "twisted_neg" if twisted else "untwisted_neg"
    return [(m.weight, m.t_degree, m.pbw_degree) for m in enumerate_basis(kind, n)]


def pbw_character_specialized(n, twisted=False):
    """PBW character specialized for comparison with the t=infinity limits.

    Untwisted: substitute q -> q^2 in both gradings; twisted: leave both at
    q.  Either way the filtration variable is identified with q.
    """
    scale = 1 if twisted else 2
    terms = {}
    for w, t, p in pbw_character(n, twisted):
        _add(terms, w, QPolynomial.q_power(scale * (t + p)))
    return XPolynomial(terms)


LIMIT_KINDS = ("untwisted", "twisted", "classical_even", "classical_odd")

_LIMIT_FACTOR = {
    "untwisted": "untwisted_pair",
    "twisted": "twisted_pair",
    "classical_even": "classical_theta_even",
    "classical_odd": "classical_theta_odd",
}


def limit_char(kind, q_bound, x_bound):
    """Truncated product/theta form of the stable limit character."""
    if kind not in LIMIT_KINDS:
        raise ValueError("unknown limit kind %r" % (kind,))
    return euler_product_truncated(_LIMIT_FACTOR[kind], q_bound, x_bound)


def approximant(kind, n, q_bound, x_bound):
    """Renormalized finite character approximating the limit.

    The finite character is evaluated at q -> q^-1 and shifted by the
    q-power that pins its top-degree stratum at zero; coefficients of
    q-degree at most floor((n-1)/2) are trusted.
    """
    if kind == "untwisted":
        poly, shift = ch_W(-n), n * (n - 1) // 2
    elif kind == "twisted":
        poly, shift = ch_W_sigma(-n), n * n
    elif kind in ("classical_even", "classical_odd"):
        if kind == "classical_even" and n % 2 or kind == "classical_odd" and n % 2 == 0:
            raise ValueError("parity of n does not match the classical kind")
        poly, shift = ch_D(n), (n // 2) * ((n + 1) // 2)
    else:
        raise ValueError("unknown limit kind %r" % (kind,))
    out = {}
    for x, c in poly.terms.items():
        if abs(x) > x_bound:
            continue
        c2 = c.scale_exponents(-1)
        c2 = QPolynomial({e + shift: v for e, v in c2.terms.items()})
        c2 = c2.truncate_above(q_bound).truncate_below(0)
        if not c2.is_zero():
            out[x] = c2
    return XPolynomial(out)


def scale_q(poly, k):
    """Substitute q -> q^k in every coefficient of an XPolynomial."""
    return poly.map_coeffs(lambda c: c.scale_exponents(k))


def verify_section4(n_values, errata=None):
    """Compare character formulas with the specialized E-polynomials.

    For each n: (a) untwisted character at q^2 against the dagger t=0
    polynomial; (b) twisted character against the plain t=0 polynomial;
    (c) the PBW specializations against the t=infinity polynomials of the
    opposite family.  Mismatches become report entries, never exceptions.
    """
    from macweyl import verify as _verify

    if errata is None:
        errata = _verify.load_errata()
    entries = []
    for n in n_values:
        if n == 0:
            continue
        entries.append(
            _verify.classify(
                "ch_W_vs_E_A2dagger_t0",
                n,
                scale_q(ch_W(n), 2),
                cform.E_spec("A2dagger", n, "t0"),
                errata,
            )
        )
        entries.append(
            _verify.classify(
                "ch_Wsigma_vs_E_A2_t0",
                n,
                ch_W_sigma(n),
                cform.E_spec("A2", n, "t0"),
                errata,
            )
        )
        if n > 0:
            entries.append(
                _verify.classify(
                    "pbw_untwisted_vs_E_A2dagger_tinf",
                    n,
                    pbw_character_specialized(n, twisted=False),
                    cform.E_spec("A2dagger", -n, "tinf"),
                    errata,
                )
            )
            entries.append(
                _verify.classify(
                    "pbw_twisted_vs_E_A2_tinf",
                    n,
                    pbw_character_specialized(n, twisted=True),
                    cform.E_spec("A2", -n, "tinf"),
                    errata,
                )
            )
    return entries
