"""Full alcove-walk sums for the rank-one E-polynomials and their exact
t = 0 / t = infinity specializations.

Every walk contributes one term: a power of v = t^(1/2), a factor (1-v^2)
per folding, and per-folding rational factors in xi_j = q^(deg beta_j) v^2.
Under the raw prefactor convention the surviving terms carry a spurious
overall v-power (+1 for positive weights, -1 for negative ones); the
`normalize` flag shifts the whole sum by the power of v that puts the
minimum v-valuation over the t=0 surviving walks at zero, after which both
limits exist term by term.

specialize() computes each limit twice -- once through exact rational
arithmetic, once through the folding statistics -- and refuses to return a
value if the two routes disagree.
"""

from dataclasses import dataclass
from functools import lru_cache

from macweyl.ring import (
    BiPolynomial,
    QPolynomial,
    RationalFunction,
    XPolynomial,
    rf_eval_v0,
    rf_limit_v_infinity,
)
from macweyl.walks import (
    FAMILIES,
    beta_degree,
    enumerate_walks,
    normalize_spec,
    surviving,
    traverse,
)


class BoundExceeded(ValueError):
    pass


class RouteMismatch(ArithmeticError):
    """The exact-arithmetic and combinatorial specializations disagree."""

    def __init__(self, family, n, spec, exact_route, stat_route):
        self.family = family
        self.n = n
        self.spec = spec
        self.exact_route = exact_route
        self.stat_route = stat_route
        super().__init__(
            "specialization routes disagree for (%s, n=%d, %s): %s vs %s"
            % (family, n, spec, exact_route.render(), stat_route.render())
        )


DEFAULT_BOUND = 6


def _xi(deg):
    return BiPolynomial.monomial(1, deg, 2)


def _one_minus_xi(deg):
    return BiPolynomial({(0, 0): 1, (deg, 2): -1})


def _one_minus_xi_sq(deg):
    return BiPolynomial({(0, 0): 1, (2 * deg, 4): -1})


ONE_MINUS_V2 = BiPolynomial({(0, 0): 1, (0, 2): -1})


class _Term:
    """One walk's contribution, kept factored for exact assembly."""

    __slots__ = ("walk", "stats", "x_exp", "v_exp", "num_parts", "den_factors", "valuation")

    def __init__(self, walk, stats, family, n):
        l = walk.length
        self.walk = walk
        self.stats = stats
        self.x_exp = stats.final.wt
        self.v_exp = _literal_prefactor(n, stats)
        num_parts = []
        den_factors = []
        val = self.v_exp
        for j in stats.folds:
            deg = beta_degree(j, l)
            if j in stats.J_pos:
                den_factors.append(("lin", deg))
            elif j in stats.J_neg:
                num_parts.append(_xi(deg))
                den_factors.append(("lin", deg))
                val += 2
            elif family == "A2":
                num_parts.append(_xi(deg))
                den_factors.append(("sq", deg))
                val += 2
            elif j in stats.J0_pos:
                den_factors.append(("sq", deg))
            else:
                num_parts.append(_xi(deg) * _xi(deg))
                den_factors.append(("sq", deg))
                val += 4
        self.num_parts = num_parts
        self.den_factors = frozenset(den_factors)
        self.valuation = val

    def numerator(self, extra_v):
        num = BiPolynomial.monomial(1, 0, self.v_exp + extra_v)
        num = num * ONE_MINUS_V2 ** len(self.stats.J)
        for part in self.num_parts:
            num = num * part
        return num


def _literal_prefactor(n, stats):
    sign = 1 if n > 0 else -1
    return (sign - 1) // 2 + stats.final.d - len(stats.J)


def _factor_poly(kind, deg):
    return _one_minus_xi(deg) if kind == "lin" else _one_minus_xi_sq(deg)


@lru_cache(maxsize=None)
def _assembled_sum(family, n, normalize, bound):
    if family not in FAMILIES:
        raise ValueError("unknown family %r" % (family,))
    if n == 0:
        return XPolynomial.constant(RationalFunction.one())
    if abs(n) > bound:
        raise BoundExceeded("|n| exceeds the configured bound %d" % bound)

    terms = [_Term(walk, traverse(walk), family, n) for walk in enumerate_walks(n)]

    shift = 0
    if normalize:
        shift = -min(
            t.valuation for t in terms if surviving(t.stats, family, "t0")
        )

    groups = {}
    for t in terms:
        groups.setdefault(t.x_exp, []).append(t)

    coeffs = {}
    for x_exp, group in groups.items():
        union = sorted(set().union(*(t.den_factors for t in group)))
        den = BiPolynomial.one()
        for kind, deg in union:
            den = den * _factor_poly(kind, deg)
        total = BiPolynomial.zero()
        for t in group:
            num = t.numerator(shift) * den
            for kind, deg in t.den_factors:
                # divide by (1 - q^a v^b): both factor shapes are binomials
                a, b = (deg, 2) if kind == "lin" else (2 * deg, 4)
                num = num.divide_exact_binomial(a, b)
            total = total + num
        coeffs[x_exp] = RationalFunction(total, den)
    return XPolynomial(coeffs)


def ramyip_sum(family, n, normalize=True, bound=DEFAULT_BOUND):
    """The full E-polynomial as an XPolynomial over RationalFunction."""
    return _assembled_sum(family, n, bool(normalize), bound)


# Per (family, spec): which folding sets feed the q-statistic of a
# surviving walk (the affine degree of each listed folding is summed).
_STAT_SETS = {
    ("A2", "t0"): ("J0_neg", "J_neg"),
    ("A2", "tinf"): ("J0_pos", "J_pos"),
    ("A2dagger", "t0"): ("J_neg",),
    ("A2dagger", "tinf"): ("J_pos",),
}


def _statistic_route(family, n, spec):
    terms = {}
    for walk in enumerate_walks(n):
        stats = traverse(walk)
        if not surviving(stats, family, spec):
            continue
        l = walk.length
        qe = 0
        for name in _STAT_SETS[(family, spec)]:
            qe += sum(beta_degree(j, l) for j in getattr(stats, name))
        x = stats.final.wt
        c = QPolynomial.q_power(qe)
        terms[x] = terms[x] + c if x in terms else c
    return XPolynomial(terms)


def _exact_route(family, n, spec, bound):
    full = ramyip_sum(family, n, normalize=True, bound=bound)
    out = {}
    for x, rf in full.terms.items():
        if spec == "t0":
            val = rf_eval_v0(rf)
        else:
            val = rf_limit_v_infinity(rf.substitute_q_inverse())
        if not val.is_zero():
            out[x] = val
    return XPolynomial(out)


def specialize(family, n, spec, bound=DEFAULT_BOUND):
    """Exact t=0 or t=infinity specialization of the walk sum.

    Raises RouteMismatch when the rational-arithmetic limit and the
    folding-statistic sum disagree (this doubles as the errata detector).
    """
    spec = normalize_spec(spec)
    if n == 0:
        return XPolynomial.constant(QPolynomial.one())
    if abs(n) > bound:
        raise BoundExceeded("|n| exceeds the configured bound %d" % bound)
    stat = _statistic_route(family, n, spec)
    exact = _exact_route(family, n, spec, bound)
    if stat != exact:
        raise RouteMismatch(family, n, spec, exact, stat)
    return stat


@dataclass(frozen=True)
class RamYipTerm:
    walk: object
    v_exponent: int
    factors: tuple
    x_exponent: int


def _fold_factor(family, stats, j, l):
    deg = beta_degree(j, l)
    if j in stats.J_pos:
        return RationalFunction(BiPolynomial.one(), _one_minus_xi(deg))
    if j in stats.J_neg:
        return RationalFunction(_xi(deg), _one_minus_xi(deg))
    if family == "A2":
        return RationalFunction(_xi(deg), _one_minus_xi_sq(deg))
    if j in stats.J0_pos:
        return RationalFunction(BiPolynomial.one(), _one_minus_xi_sq(deg))
    return RationalFunction(_xi(deg) * _xi(deg), _one_minus_xi_sq(deg))


def ramyip_terms(family, n):
    """One RamYipTerm per walk, with the raw (unnormalized) prefactor."""
    if n == 0:
        return []
    out = []
    for walk in enumerate_walks(n):
        stats = traverse(walk)
        factors = tuple(_fold_factor(family, stats, j, walk.length) for j in stats.folds)
        out.append(RamYipTerm(walk, _literal_prefactor(n, stats), factors, stats.final.wt))
    return out
