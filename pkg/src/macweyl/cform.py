"""Coefficient tables c_r / c_r-dagger and the eight specialized
E-polynomial closed forms built from them.

Each table exists twice: once by unrolling its defining recurrence (with
memoization) and once in closed form as a q-power times a base-q^2
trinomial.  The two must agree; the test suite checks this exhaustively.
"""

from functools import lru_cache

from macweyl.qcomb import q_multinomial
from macweyl.ring import QPolynomial, XPolynomial
from macweyl.walks import FAMILIES, normalize_spec


@lru_cache(maxsize=None)
def c_rec(r, k22, k12, k11):
    if k22 < 0 or k12 < 0 or k11 < 0:
        return QPolynomial.zero()
    if (k22, k12, k11) == (0, 0, 0):
        return QPolynomial.one()
    n = k22 + k12 + k11
    mid = QPolynomial.q_power(2 * n - 1) * c_rec(2, k22, k12 - 1, k11)
    last = c_rec(1, k22, k12, k11 - 1)
    if r == 1:
        return QPolynomial.q_power(2 * n) * c_rec(2, k22 - 1, k12, k11) + mid + last
    return c_rec(2, k22 - 1, k12, k11) + mid + last


def c_closed(r, k22, k12, k11):
    if k22 < 0 or k12 < 0 or k11 < 0:
        return QPolynomial.zero()
    shift = k12 * k12 + (2 * k22 if r == 1 else 0)
    return QPolynomial.q_power(shift) * q_multinomial(k22, k12, k11, 2)


@lru_cache(maxsize=None)
def cdag_rec(r, k22, k21, k11):
    if k22 < 0 or k21 < 0 or k11 < 0:
        return QPolynomial.zero()
    if (k22, k21, k11) == (0, 0, 0):
        return QPolynomial.one()
    n = k22 + k21 + k11
    last = cdag_rec(1, k22, k21, k11 - 1)
    if r == 1:
        q2n = QPolynomial.q_power(2 * n)
        return q2n * cdag_rec(2, k22 - 1, k21, k11) + q2n * cdag_rec(1, k22, k21 - 1, k11) + last
    return cdag_rec(2, k22 - 1, k21, k11) + cdag_rec(1, k22, k21 - 1, k11) + last


def cdag_closed(r, k22, k21, k11):
    if k22 < 0 or k21 < 0 or k11 < 0:
        return QPolynomial.zero()
    shift = k21 * (k21 - 1) + (2 * k22 + 2 * k21 if r == 1 else 0)
    return QPolynomial.q_power(shift) * q_multinomial(k22, k21, k11, 2)


def _triples(total):
    for k22 in range(total + 1):
        for k12 in range(total - k22 + 1):
            yield k22, k12, total - k22 - k12


def E_spec(family, n, spec):
    """Closed-form specialized E-polynomial, exactly as the tables dictate.

    spec is "t0" or "tinf" (the latter meaning the q -> q^-1 substituted
    t = infinity limit).  n may be any integer; n = 0 gives 1.
    """
    if family not in FAMILIES:
        raise ValueError("unknown family %r" % (family,))
    spec = normalize_spec(spec)
    if n == 0:
        return XPolynomial.constant(QPolynomial.one())

    terms = {}

    def put(x_exp, coeff):
        if coeff.is_zero():
            return
        terms[x_exp] = terms[x_exp] + coeff if x_exp in terms else coeff

    if family == "A2":
        if n < 0 and spec == "t0":
            for k22, k12, k11 in _triples(-n):
                put(k22 - k11, c_closed(2, k22, k12, k11))
        elif n > 0 and spec == "t0":
            for k22, k12, k11 in _triples(n):
                c = QPolynomial.q_power(2 * n - 1) * c_closed(2, k22 - 1, k12, k11)
                c = c + c_closed(1, k22, k12 - 1, k11)
                put(k11 - k22 + 1, c)
        elif n < 0 and spec == "tinf":
            for k22, k12, k11 in _triples(-n):
                put(k11 - k22, c_closed(1, k22, k12, k11))
        else:  # n > 0, tinf: sums over triples totalling n-1
            for k22, k12, k11 in _triples(n - 1):
                put(k11 - k22 + 1, c_closed(2, k22, k12, k11))
    else:
        if n < 0 and spec == "t0":
            for k22, k21, k11 in _triples(-n):
                put(k11 - k22, cdag_closed(2, k22, k21, k11))
        elif n > 0 and spec == "t0":
            for k22, k21, k11 in _triples(n - 1):
                put(k11 - k22 + 1, cdag_closed(1, k22, k21, k11))
        elif n < 0 and spec == "tinf":
            for k22, k21, k11 in _triples(-n):
                put(k11 - k22, cdag_closed(1, k22, k21, k11))
        else:  # n > 0, tinf
            for k22, k21, k11 in _triples(n - 1):
                c = cdag_closed(2, k22, k21, k11) + cdag_closed(1, k22, k21, k11)
                put(k11 - k22 + 1, c)

    return XPolynomial(terms)


def ctable(family, r, max_n):
    """All table values with index sum <= max_n, as (key, value) pairs."""
    closed = c_closed if family == "A2" else cdag_closed
    out = []
    for total in range(max_n + 1):
        for key in _triples(total):
            out.append((key, closed(r, *key)))
    return out
