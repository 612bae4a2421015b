"""Exact Laurent-polynomial and rational-function arithmetic.

Coefficients are Python integers throughout (arbitrary precision, no floats);
exponents may be negative in every variable.  Values are never mutated after
construction, so they can be shared freely between threads.

Three coefficient rings are provided:

* ``QPolynomial``   -- Z[q, q^-1], sparse dict from exponent to coefficient.
* ``BiPolynomial``  -- Z[q^±1, v^±1], keys are (q-exponent, v-exponent).
* ``RationalFunction`` -- quotient num/den of two BiPolynomials.  No gcd
  reduction is performed; equality is decided by cross-multiplication.

``XPolynomial`` is a Laurent polynomial in x whose coefficients live in any
of the rings above (anything with ``is_zero``, ``+``, ``*`` works).
"""

from __future__ import annotations


class RingError(ArithmeticError):
    pass


class DenominatorVanishesAtZero(RingError):
    pass


class NotPolynomial(RingError):
    pass


class DivergesAtInfinity(RingError):
    pass


def _strip_zeros(terms):
    return {e: c for e, c in terms.items() if c != 0}


class QPolynomial:
    """Integer-coefficient Laurent polynomial in one variable q."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = _strip_zeros(terms or {})

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({0: 1})

    @classmethod
    def monomial(cls, coeff, exp=0):
        return cls({exp: coeff})

    @classmethod
    def q_power(cls, exp):
        return cls({exp: 1})

    def is_zero(self):
        return not self.terms

    def is_one(self):
        return self.terms == {0: 1}

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = QPolynomial.monomial(other)
        if not isinstance(other, QPolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items())))

    def __add__(self, other):
        if isinstance(other, int):
            other = QPolynomial.monomial(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return QPolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return QPolynomial({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = QPolynomial.monomial(other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return QPolynomial({e: c * other for e, c in self.terms.items()})
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return QPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out = QPolynomial.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def min_exp(self):
        return min(self.terms) if self.terms else None

    def max_exp(self):
        return max(self.terms) if self.terms else None

    def coefficient(self, exp):
        return self.terms.get(exp, 0)

    def scale_exponents(self, k):
        """Substitute q -> q^k (k nonzero; k = -1 is the inversion)."""
        if k == 0:
            raise ValueError("exponent scale must be nonzero")
        return QPolynomial({e * k: c for e, c in self.terms.items()})

    def truncate_above(self, bound):
        return QPolynomial({e: c for e, c in self.terms.items() if e <= bound})

    def truncate_below(self, bound):
        return QPolynomial({e: c for e, c in self.terms.items() if e >= bound})

    def eval_at_one(self):
        return sum(self.terms.values())

    def divide_exact(self, other):
        """Exact Laurent division; raises NotPolynomial on remainder."""
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return QPolynomial.zero()
        # Shift both operands so they are honest polynomials, divide, shift back.
        s_shift = self.min_exp()
        o_shift = other.min_exp()
        num = {e - s_shift: c for e, c in self.terms.items()}
        den = {e - o_shift: c for e, c in other.terms.items()}
        ddeg = max(den)
        dlead = den[ddeg]
        quot = {}
        rem = dict(num)
        while rem:
            rdeg = max(rem)
            if rdeg < ddeg:
                raise NotPolynomial("division leaves a remainder")
            c, r = divmod(rem[rdeg], dlead)
            if r != 0:
                raise NotPolynomial("division leaves a remainder")
            shift = rdeg - ddeg
            quot[shift] = c
            for e, dc in den.items():
                e2 = e + shift
                rem[e2] = rem.get(e2, 0) - c * dc
                if rem[e2] == 0:
                    del rem[e2]
        return QPolynomial({e + s_shift - o_shift: c for e, c in quot.items()})

    def sorted_terms(self):
        return sorted(self.terms.items())

    def render(self):
        """Compact canonical text, terms in ascending q-exponent."""
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            body = _q_term_str(abs(c), e)
            sign = "-" if c < 0 else "+"
            if not parts:
                parts.append(body if sign == "+" else "-" + body)
            else:
                parts.append(sign + body)
        return "".join(parts)

    def __repr__(self):
        return "QPolynomial(%s)" % self.render()


def _q_term_str(c, e, var="q"):
    if e == 0:
        return str(c)
    vs = var if e == 1 else "%s^%d" % (var, e)
    if c == 1:
        return vs
    return "%d*%s" % (c, vs)


def substitute_q_inverse(p):
    """q -> q^-1: negate every exponent (an involution)."""
    return QPolynomial({-e: c for e, c in p.terms.items()})


class BiPolynomial:
    """Integer-coefficient Laurent polynomial in q and v; keys (qe, ve)."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = _strip_zeros(terms or {})

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({(0, 0): 1})

    @classmethod
    def monomial(cls, coeff, q_exp=0, v_exp=0):
        return cls({(q_exp, v_exp): coeff})

    @classmethod
    def from_q(cls, p, v_exp=0):
        return cls({(e, v_exp): c for e, c in p.terms.items()})

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = BiPolynomial.monomial(other)
        if not isinstance(other, BiPolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items())))

    def __add__(self, other):
        if isinstance(other, int):
            other = BiPolynomial.monomial(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return BiPolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return BiPolynomial({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = BiPolynomial.monomial(other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return BiPolynomial({k: c * other for k, c in self.terms.items()})
        out = {}
        for (q1, v1), c1 in self.terms.items():
            for (q2, v2), c2 in other.terms.items():
                k = (q1 + q2, v1 + v2)
                out[k] = out.get(k, 0) + c1 * c2
        return BiPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out = BiPolynomial.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def substitute_q_inverse(self):
        return BiPolynomial({(-qe, ve): c for (qe, ve), c in self.terms.items()})

    def shift(self, q_exp=0, v_exp=0):
        return BiPolynomial(
            {(qe + q_exp, ve + v_exp): c for (qe, ve), c in self.terms.items()}
        )

    def v_min(self):
        return min(ve for (_, ve) in self.terms) if self.terms else None

    def v_max(self):
        return max(ve for (_, ve) in self.terms) if self.terms else None

    def coeff_of_v(self, v_exp):
        """The coefficient of v^v_exp, as a QPolynomial in q."""
        return QPolynomial(
            {qe: c for (qe, ve), c in self.terms.items() if ve == v_exp}
        )

    def divide_exact_binomial(self, q_exp, v_exp):
        """Exact division by (1 - q^q_exp * v^v_exp), v_exp > 0.

        Uses the recurrence r[v] = p[v] + q^q_exp * r[v - v_exp] on slices of
        fixed v-exponent; raises NotPolynomial if the division is not exact.
        """
        if v_exp <= 0:
            raise ValueError("divisor must have positive v-degree")
        if self.is_zero():
            return BiPolynomial.zero()
        by_v = {}
        for (qe, ve), c in self.terms.items():
            by_v.setdefault(ve, {})[qe] = c
        vmin, vmax = self.v_min(), self.v_max()
        slices = {}
        out = {}
        for v in range(vmin, vmax + 1):
            cur = dict(by_v.get(v, {}))
            prev = slices.get(v - v_exp)
            if prev:
                for qe, c in prev.items():
                    qe2 = qe + q_exp
                    cur[qe2] = cur.get(qe2, 0) + c
            cur = {qe: c for qe, c in cur.items() if c != 0}
            if v > vmax - v_exp:
                if cur:
                    raise NotPolynomial("binomial division leaves a remainder")
                continue
            slices[v] = cur
            for qe, c in cur.items():
                out[(qe, v)] = c
        return BiPolynomial(out)

    def sorted_terms(self):
        return sorted(self.terms.items())

    def render(self):
        if not self.terms:
            return "0"
        parts = []
        for (qe, ve), c in self.sorted_terms():
            body = _qv_term_str(abs(c), qe, ve)
            sign = "-" if c < 0 else "+"
            if not parts:
                parts.append(body if sign == "+" else "-" + body)
            else:
                parts.append(sign + body)
        return "".join(parts)

    def __repr__(self):
        return "BiPolynomial(%s)" % self.render()


def _qv_term_str(c, qe, ve):
    pieces = []
    if qe != 0:
        pieces.append("q" if qe == 1 else "q^%d" % qe)
    if ve != 0:
        pieces.append("v" if ve == 1 else "v^%d" % ve)
    if not pieces:
        return str(c)
    if c == 1:
        return "*".join(pieces)
    return "*".join([str(c)] + pieces)


class RationalFunction:
    """Quotient of two BiPolynomials; equality by cross-multiplication."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if isinstance(num, int):
            num = BiPolynomial.monomial(num)
        if den is None:
            den = BiPolynomial.one()
        elif isinstance(den, int):
            den = BiPolynomial.monomial(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        self.num = num
        self.den = den

    @classmethod
    def zero(cls):
        return cls(BiPolynomial.zero())

    @classmethod
    def one(cls):
        return cls(BiPolynomial.one())

    def is_zero(self):
        return self.num.is_zero()

    def __eq__(self, other):
        if isinstance(other, int):
            other = RationalFunction(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __add__(self, other):
        if isinstance(other, int):
            other = RationalFunction(other)
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        if isinstance(other, int):
            other = RationalFunction(other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, BiPolynomial)):
            return RationalFunction(self.num * other, self.den)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def substitute_q_inverse(self):
        return RationalFunction(
            self.num.substitute_q_inverse(), self.den.substitute_q_inverse()
        )

    def v_valuation(self):
        """Order at v = 0 (None for the zero function)."""
        if self.num.is_zero():
            return None
        return self.num.v_min() - self.den.v_min()

    def v_degree(self):
        """Degree in v (None for the zero function)."""
        if self.num.is_zero():
            return None
        return self.num.v_max() - self.den.v_max()

    def render(self):
        if self.den == BiPolynomial.one():
            return self.num.render()
        return "(%s)/(%s)" % (self.num.render(), self.den.render())

    def __repr__(self):
        return "RationalFunction(%s)" % self.render()


def rf_eval_v0(r):
    """Evaluate a rational function at v = 0, exactly.

    Requires the denominator to be regular and nonvanishing at v = 0 after
    clearing a common v-power; the quotient num(q,0)/den(q,0) must be an
    honest Laurent polynomial in q.
    """
    if r.num.is_zero():
        return QPolynomial.zero()
    # Clear a common v-power only when the denominator has negative
    # v-exponents; a denominator vanishing at v=0 stays an error.
    shift = max(0, -r.den.v_min())
    num = r.num.shift(v_exp=shift)
    den = r.den.shift(v_exp=shift)
    den0 = den.coeff_of_v(0)
    if den0.is_zero():
        raise DenominatorVanishesAtZero(
            "denominator vanishes at v=0: %s" % r.den.render()
        )
    if num.v_min() < 0:
        raise NotPolynomial("value diverges at v=0")
    num0 = num.coeff_of_v(0)
    return num0.divide_exact(den0)


def rf_limit_v_infinity(r):
    """Limit as v -> infinity, exactly.

    Zero when deg_v(num) < deg_v(den); the exact quotient of leading-v
    coefficients when the degrees agree; DivergesAtInfinity otherwise.
    """
    if r.num.is_zero():
        return QPolynomial.zero()
    dn = r.num.v_max()
    dd = r.den.v_max()
    if dn > dd:
        raise DivergesAtInfinity("numerator v-degree exceeds denominator")
    if dn < dd:
        return QPolynomial.zero()
    return r.num.coeff_of_v(dn).divide_exact(r.den.coeff_of_v(dd))


class XPolynomial:
    """Laurent polynomial in x over an arbitrary coefficient ring."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {e: c for e, c in (terms or {}).items() if not c.is_zero()}

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def constant(cls, coeff):
        return cls({0: coeff})

    @classmethod
    def from_q_terms(cls, xq_terms):
        """Build from {x_exp: {q_exp: coeff}} nested dicts."""
        return cls({e: QPolynomial(t) for e, t in xq_terms.items()})

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, XPolynomial):
            return NotImplemented
        if set(self.terms) != set(other.terms):
            return False
        return all(self.terms[e] == other.terms[e] for e in self.terms)

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out[e] + c if e in out else c
        return XPolynomial(out)

    def __neg__(self):
        return XPolynomial({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                p = c1 * c2
                out[e] = out[e] + p if e in out else p
        return XPolynomial(out)

    def scale(self, coeff):
        """Multiply every coefficient by a fixed ring element."""
        return XPolynomial({e: c * coeff for e, c in self.terms.items()})

    def x_shift(self, k):
        return XPolynomial({e + k: c for e, c in self.terms.items()})

    def mirror_x(self):
        """The involution x -> x^-1."""
        return XPolynomial({-e: c for e, c in self.terms.items()})

    def map_coeffs(self, fn):
        return XPolynomial({e: fn(c) for e, c in self.terms.items()})

    def truncate_x(self, bound):
        return XPolynomial({e: c for e, c in self.terms.items() if abs(e) <= bound})

    def coefficient(self, e):
        return self.terms.get(e)

    def x_support(self):
        return sorted(self.terms)

    def eval_at_ones(self):
        """Total coefficient mass: x = 1 and q = 1 (QPolynomial coefficients)."""
        return sum(c.eval_at_one() for c in self.terms.values())

    def sorted_terms(self):
        return sorted(self.terms.items())

    def render(self):
        """Canonical text: x-terms ascending, QPolynomial coeffs ascending in q."""
        if not self.terms:
            return "0"
        chunks = []
        for e, c in self.sorted_terms():
            cs = c.render()
            multi = len(getattr(c, "terms", {})) > 1
            if isinstance(c, RationalFunction) and c.den != BiPolynomial.one():
                cs = "(%s)/(%s)" % (c.num.render(), c.den.render())
                multi = False
                wrapped = cs
            else:
                wrapped = "(%s)" % cs if multi else cs
            if e == 0:
                chunks.append(wrapped)
                continue
            xs = "x" if e == 1 else "x^%d" % e
            if wrapped == "1":
                chunks.append(xs)
            elif wrapped == "-1":
                chunks.append("-" + xs)
            else:
                chunks.append(wrapped + "*" + xs)
        text = chunks[0]
        for chunk in chunks[1:]:
            if chunk.startswith("-"):
                text += " - " + chunk[1:]
            else:
                text += " + " + chunk
        return text

    def __repr__(self):
        return "XPolynomial(%s)" % self.render()


def x_monomial(coeff, x_exp):
    if isinstance(coeff, int):
        coeff = QPolynomial.monomial(coeff)
    return XPolynomial({x_exp: coeff})
