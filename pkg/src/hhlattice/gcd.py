"""Exact multivariate polynomial GCD over the integers.

The public entry point :func:`poly_gcd` returns a greatest common divisor of
the *residuals* of its inputs: monomial factors are units of the Laurent ring
and integer content is normalized away, so the result is monomial-free,
primitive, and has a positive leading coefficient (the unique representative
up to units).

Algorithm: recursive primitive polynomial-remainder sequences over a chosen
main variable, with contents handled by recursion into fewer variables.
Because full multivariate GCDs are the cost center, a cheap specialization
certificate runs first: it can *prove* coprimality (the common case) from a
handful of bivariate GCDs, and never asserts a nontrivial factor on its own.
"""

from __future__ import annotations

import random
from typing import Optional

from .algebra import (ExponentVector, LaurentPolynomial, Variable,
                      exact_divide, scalar_div_exact)

_SPECIALIZE_SPAN = 10 ** 6
_PRECHECK_TRIALS = 3


# ---------------------------------------------------------------------------
# views of a polynomial as univariate in one variable
# ---------------------------------------------------------------------------


def degree_in(p: LaurentPolynomial, v: Variable) -> int:
    """Largest exponent of v (0 when v does not occur); p must be nonzero."""
    return max(ev.exponent(v) for ev in p.terms)


def coefficient_in(p: LaurentPolynomial, v: Variable, k: int) -> LaurentPolynomial:
    """Coefficient of v**k, as a polynomial in the remaining variables."""
    terms = {}
    for ev, c in p.terms.items():
        if ev.exponent(v) == k:
            terms[ev.without(v)] = c
    return LaurentPolynomial(terms, _trusted=True)


def _leading_coefficient_in(p, v):
    return coefficient_in(p, v, degree_in(p, v))


def _mul_var_power(p: LaurentPolynomial, v: Variable, k: int) -> LaurentPolynomial:
    if k == 0:
        return p
    shift = ExponentVector([(v, k)])
    return LaurentPolynomial({ev.mul(shift): c for ev, c in p.terms.items()},
                             _trusted=True)


def pseudo_remainder(a: LaurentPolynomial, b: LaurentPolynomial,
                     v: Variable) -> LaurentPolynomial:
    """prem(a, b) in v: the remainder of lc(b)^(da-db+1) * a divided by b."""
    da, db = degree_in(a, v), degree_in(b, v)
    if da < db:
        return a
    lc_b = _leading_coefficient_in(b, v)
    reducible = b - _mul_var_power(lc_b, v, db)
    r = a
    steps = da - db + 1
    while not r.is_zero():
        dr = degree_in(r, v)
        if dr < db:
            break
        lc_r = _leading_coefficient_in(r, v)
        r = lc_b * (r - _mul_var_power(lc_r, v, dr)) \
            - _mul_var_power(lc_r * reducible, v, dr - db)
        steps -= 1
    # keep the classical normalization lc(b)^(da-db+1) * a mod b
    for _ in range(steps):
        r = lc_b * r
    return r


def content_in(p: LaurentPolynomial, v: Variable) -> LaurentPolynomial:
    """GCD of the v-coefficients of p (a polynomial without v)."""
    result = LaurentPolynomial.zero()
    for k in sorted({ev.exponent(v) for ev in p.terms}):
        result = poly_gcd(result, coefficient_in(p, v, k))
        if result.is_one():
            return result
    return result


# ---------------------------------------------------------------------------
# the GCD proper
# ---------------------------------------------------------------------------


def _residual(p: LaurentPolynomial) -> LaurentPolynomial:
    return p.split_monomial_content().residual


def poly_gcd(p: LaurentPolynomial, q: LaurentPolynomial,
             precheck: bool = True) -> LaurentPolynomial:
    """GCD of the residuals of p and q, unique up to units.

    gcd(p, 0) is the residual of p.  The result never has a monomial factor
    or integer content; its leading coefficient is positive.
    """
    if p.is_zero() and q.is_zero():
        return LaurentPolynomial.zero()
    if p.is_zero():
        return _residual(q)
    if q.is_zero():
        return _residual(p)
    a, b = _residual(p), _residual(q)
    return _gcd_residuals(a, b, precheck)


def _gcd_residuals(a, b, precheck=True):
    if a.is_one() or b.is_one():
        return LaurentPolynomial.one()
    if a == b:
        return a
    common = [v for v in a.variables() if v in set(b.variables())]
    if not common:
        return LaurentPolynomial.one()
    if precheck and len(set(a.variables()) | set(b.variables())) > 2:
        if coprime_certificate(a, b):
            return LaurentPolynomial.one()
    v = common[0]
    cont_a = content_in(a, v)
    cont_b = content_in(b, v)
    g_cont = _gcd_residuals(cont_a, cont_b, precheck)
    pa = exact_divide(a, cont_a)
    pb = exact_divide(b, cont_b)
    if degree_in(pa, v) < degree_in(pb, v):
        pa, pb = pb, pa
    while True:
        r = pseudo_remainder(pa, pb, v)
        if r.is_zero():
            g = exact_divide(pb, content_in(pb, v))
            break
        if degree_in(r, v) == 0:
            g = LaurentPolynomial.one()
            break
        pa, pb = pb, _primitive_in(r, v)
    return _normalize_unit(g_cont * g)


def _primitive_in(p, v):
    c = content_in(p, v)
    p = exact_divide(p, c)
    return _residual(p)


def _normalize_unit(g: LaurentPolynomial) -> LaurentPolynomial:
    if g.is_zero():
        return g
    return _residual(g)


# ---------------------------------------------------------------------------
# specialization pre-check
# ---------------------------------------------------------------------------


def specialize(p: LaurentPolynomial, assignment) -> LaurentPolynomial:
    """Substitute integers for some variables (their exponents must be >= 0)."""
    terms: dict = {}
    for ev, c in p.terms.items():
        factor = c
        kept = []
        for v, e in ev.pairs:
            if v in assignment:
                if e < 0:
                    raise ValueError("cannot specialize a negative exponent")
                factor *= assignment[v] ** e
            else:
                kept.append((v, e))
        key = ExponentVector(kept)
        s = terms.get(key, 0) + factor
        if s:
            terms[key] = s
        elif key in terms:
            del terms[key]
    return LaurentPolynomial(terms, _trusted=True)


def random_nonzero_int(rng):
    x = 0
    while x == 0:
        x = rng.randint(-_SPECIALIZE_SPAN, _SPECIALIZE_SPAN)
    return x


def coprime_certificate(a: LaurentPolynomial, b: LaurentPolynomial,
                        rng: Optional[random.Random] = None,
                        trials: int = _PRECHECK_TRIALS) -> bool:
    """Try to prove gcd(a, b) = 1 for monomial-free primitive a, b.

    For each common variable v we specialize all but two variables at random
    integers, keeping v and one partner symbolic.  If the specialization
    preserves the v-degrees of both inputs and the exact bivariate GCD has
    v-degree 0, then no common factor involves v: the v-leading coefficient
    of any such factor would survive the specialization.  Certifying every
    common variable proves coprimality outright (the inputs are primitive,
    so a common factor must involve some variable).  A False return means
    "unknown", never "not coprime".
    """
    if rng is None:
        rng = random.Random(0x5EED)
    avars, bvars = set(a.variables()), set(b.variables())
    common = sorted(avars & bvars, key=lambda v: v.sort_key())
    if not common:
        return True
    allvars = sorted(avars | bvars, key=lambda v: v.sort_key())
    for v in common:
        partners = [w for w in allvars if w != v]
        certified = False
        for trial in range(trials):
            w = partners[trial % len(partners)]
            assignment = {u: random_nonzero_int(rng)
                          for u in allvars if u not in (v, w)}
            sa = specialize(a, assignment)
            sb = specialize(b, assignment)
            if sa.is_zero() or sb.is_zero():
                continue
            if degree_in(sa, v) != degree_in(a, v):
                continue
            if degree_in(sb, v) != degree_in(b, v):
                continue
            g = poly_gcd(sa, sb, precheck=False)
            if g.is_zero() or degree_in(g, v) == 0:
                certified = True
                break
        if not certified:
            return False
    return True
