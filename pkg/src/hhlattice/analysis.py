"""Certification of the structural properties of the lattice iterates.

* Laurent property: every symbolic iterate is a Laurent polynomial whose
  monomial denominator q[n,t] equals the explicit product
  (prod_{0<=m<=n-2} x[m,0]) (prod_{1<=s<=t-1} x[0,s] x[1,s]),
  of degree 2t+n-3 with numerator degree one higher.
* Coprimeness: distinct iterates share no non-unit factor; checked by a
  seeded probabilistic specialization phase with a quantified failure
  bound, escalating to the exact multivariate GCD for confirmation.
* Irreducibility: certified through the inductive certificate x = A X + B
  with X the top row seed, A = x[n-2,t] / x[n-2,0], and A, B nonzero and
  coprime (a first-degree polynomial with coprime coefficients that do not
  involve X is irreducible).
* Extended Laurent property: the reduced fourth-order map loses the
  Laurent property, but denominators stay inside the two seed
  discriminants; exact division extracts the powers.
* Degree growth: monomial-denominator degrees along rays classify the
  growth (linear here) and hence the algebraic entropy (zero).
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .algebra import (ExponentVector, LaurentPolynomial, RationalFunction,
                      exact_divide, value_is_zero)
from .errors import (InsufficientDataError, NotLinearInXError,
                     ZeroPolynomialError)
from .gcd import poly_gcd, random_nonzero_int, specialize

# ---------------------------------------------------------------------------
# Laurent property and explicit denominators
# ---------------------------------------------------------------------------


def paper_style_split(value: LaurentPolynomial) -> Tuple[int, int, ExponentVector]:
    """(numerator degree, denominator degree, denominator exponent vector)
    of the decomposition x = p / q with monomial q: negative exponents form
    the denominator, everything else stays with p."""
    split = value.split_monomial_content()
    neg = split.exponents.negative_part()
    pos = split.exponents.positive_part()
    residual_degree = max(ev.degree() for ev in split.residual.terms)
    p_degree = residual_degree + pos.degree()
    q_degree = -neg.degree()
    return p_degree, q_degree, neg.invert()


def predicted_denominator(grid, site) -> Optional[ExponentVector]:
    """The explicit monomial denominator of the hh2d iterate at ``site``
    (None when the grid has no generator bookkeeping for the frame)."""
    n, t = site
    if n < 2 or t < 1:
        return ExponentVector()
    pairs = []
    for m in range(n - 1):
        var = grid.generators.get((m, 0))
        if var is None:
            return None
        pairs.append((var, 1))
    for s in range(1, t):
        for c in (0, 1):
            var = grid.generators.get((c, s))
            if var is None:
                return None
            pairs.append((var, 1))
    return ExponentVector(pairs)


@dataclass
class SiteReport:
    site: Tuple[int, int]
    is_laurent: bool
    denominator: Optional[ExponentVector] = None
    predicted: Optional[ExponentVector] = None
    matches_prediction: Optional[bool] = None
    p_degree: Optional[int] = None
    q_degree: Optional[int] = None
    predicted_q_degree: Optional[int] = None
    degree_relation_holds: Optional[bool] = None

    def to_json_dict(self):
        return {
            "site": list(self.site),
            "is_laurent": self.is_laurent,
            "denominator": str(self.denominator) if self.denominator else "1",
            "predicted": str(self.predicted) if self.predicted else "1",
            "matches_prediction": self.matches_prediction,
            "p_degree": self.p_degree,
            "q_degree": self.q_degree,
            "predicted_q_degree": self.predicted_q_degree,
            "degree_relation_holds": self.degree_relation_holds,
        }


@dataclass
class LaurentReport:
    sites: Dict[Tuple[int, int], SiteReport] = field(default_factory=dict)

    @property
    def all_laurent(self) -> bool:
        return all(r.is_laurent for r in self.sites.values())

    @property
    def all_match(self) -> bool:
        return all(r.is_laurent and r.matches_prediction is not False
                   and r.degree_relation_holds is not False
                   for r in self.sites.values())

    def to_json_dict(self):
        return {"all_laurent": self.all_laurent, "all_match": self.all_match,
                "sites": [r.to_json_dict()
                          for _, r in sorted(self.sites.items(),
                                             key=lambda kv: (kv[0][1], kv[0][0]))]}


def laurent_report(grid, region) -> LaurentReport:
    """Per-site Laurent status over [0..n_max] x [0..t_max], with the
    denominator compared against the explicit product prediction (hh2d)."""
    n_max, t_max = region
    report = LaurentReport()
    predict = grid.spec.law == "hh2d"
    for t in range(t_max + 1):
        for n in range(n_max + 1):
            value = grid.get((n, t))
            if value is None:
                continue
            site = (n, t)
            if isinstance(value, RationalFunction):
                report.sites[site] = SiteReport(site, is_laurent=False)
                continue
            p_deg, q_deg, denominator = paper_style_split(value)
            entry = SiteReport(site, True, denominator=denominator,
                               p_degree=p_deg, q_degree=q_deg)
            if predict:
                predicted = predicted_denominator(grid, site)
                if predicted is not None:
                    entry.predicted = predicted
                    entry.matches_prediction = (denominator == predicted)
                    entry.predicted_q_degree = \
                        2 * t + n - 3 if (n >= 2 and t >= 1) else 0
                    entry.degree_relation_holds = (
                        q_deg == entry.predicted_q_degree
                        and p_deg == q_deg + 1)
            report.sites[site] = entry
    return report


# ---------------------------------------------------------------------------
# coprimeness
# ---------------------------------------------------------------------------

_SPECIALIZE_SPAN = 10 ** 6


@dataclass
class CoprimenessResult:
    coprime: bool
    exact: bool
    witness: Optional[LaurentPolynomial] = None
    trials: int = 0
    failure_bound: float = 0.0

    def to_json_dict(self):
        return {"coprime": self.coprime, "exact": self.exact,
                "witness": str(self.witness) if self.witness is not None else None,
                "trials": self.trials, "failure_bound": self.failure_bound}


def _as_laurent(value) -> LaurentPolynomial:
    if isinstance(value, RationalFunction):
        return value.as_laurent()
    if isinstance(value, LaurentPolynomial):
        return value
    raise TypeError("coprimeness applies to Laurent values")


def coprimeness_check(p, q, trials: int = 3,
                      rng: Optional[random.Random] = None,
                      require_exact: bool = True) -> CoprimenessResult:
    """Decide whether p and q share a non-unit polynomial factor.

    The probabilistic phase specializes all but two variables at random
    integers in [-10^6, 10^6] and takes exact bivariate GCDs; a nontrivial
    GCD always escalates to the exact multivariate GCD.  When every trial
    is trivial the pair is coprime up to the reported Schwartz-Zippel
    failure bound; ``require_exact`` (default) escalates anyway so the
    verdict is unconditional.
    """
    if rng is None:
        rng = random.Random(0xC0FFEE)
    rp = _as_laurent(p).split_monomial_content().residual
    rq = _as_laurent(q).split_monomial_content().residual
    if rp.is_zero() or rq.is_zero():
        raise ZeroPolynomialError("coprimeness needs nonzero residuals")
    if rp.is_one() or rq.is_one():
        return CoprimenessResult(True, True, trials=0)

    pvars = set(rp.variables())
    qvars = set(rq.variables())
    allvars = sorted(pvars | qvars, key=lambda v: v.sort_key())
    common = sorted(pvars & qvars, key=lambda v: v.sort_key())
    deg_bound = max(ev.abs_degree() for ev in rp.terms) \
        + max(ev.abs_degree() for ev in rq.terms)
    per_trial = min(1.0, deg_bound / (2.0 * _SPECIALIZE_SPAN))

    suspicious = False
    performed = 0
    if common and len(allvars) > 2:
        for trial in range(trials):
            keep = (common[trial % len(common)],
                    allvars[(trial + 1) % len(allvars)])
            assignment = {u: random_nonzero_int(rng)
                          for u in allvars if u not in keep}
            sp = specialize(rp, assignment)
            sq = specialize(rq, assignment)
            performed += 1
            if sp.is_zero() or sq.is_zero():
                suspicious = True
                break
            g = poly_gcd(sp, sq, precheck=False)
            if not g.is_one():
                suspicious = True
                break
    elif common:
        suspicious = True          # few variables: go straight to exact
    if not common:
        return CoprimenessResult(True, True, trials=performed)

    if suspicious or require_exact:
        g = poly_gcd(rp, rq)
        if g.is_one():
            return CoprimenessResult(True, True, trials=performed)
        return CoprimenessResult(False, True, witness=g, trials=performed)
    return CoprimenessResult(True, False, trials=performed,
                             failure_bound=per_trial ** max(performed, 1))


# ---------------------------------------------------------------------------
# irreducibility certificate
# ---------------------------------------------------------------------------


@dataclass
class IrreducibilityReport:
    site: Tuple[int, int]
    status: str                      # "certificate_holds" | "seed_variable" | reason
    linear_coefficient: Optional[object] = None
    constant_coefficient: Optional[object] = None

    @property
    def holds(self) -> bool:
        return self.status in ("certificate_holds", "seed_variable")

    def to_json_dict(self):
        return {"site": list(self.site), "status": self.status,
                "A": str(self.linear_coefficient)
                     if self.linear_coefficient is not None else None,
                "B": str(self.constant_coefficient)
                     if self.constant_coefficient is not None else None}


def irreducibility_evidence(grid, site) -> IrreducibilityReport:
    """Check the inductive irreducibility certificate at a symbolic site.

    Writing X for the row seed x[n,0], the iterate must be A X + B with
    A = x[n-2,t] / x[n-2,0] exactly, A and B nonzero, and A coprime to B;
    a first-degree polynomial in X with such coefficients is irreducible.
    """
    n, t = site
    if site in grid.generators:
        return IrreducibilityReport(site, "seed_variable")
    if n < 2 or t < 1:
        return IrreducibilityReport(site, "outside_certified_region")
    value = grid.value(site)
    if isinstance(value, RationalFunction):
        return IrreducibilityReport(site, "value_not_laurent")
    top = grid.generators.get((n, 0))
    if top is None:
        return IrreducibilityReport(site, "missing_row_generator")
    parts: Dict[int, dict] = {}
    for ev, c in value.terms.items():
        e = ev.exponent(top)
        parts.setdefault(e, {})[ev.without(top)] = c
    if not set(parts) <= {0, 1}:
        raise NotLinearInXError(
            "iterate at %r has exponents %s in its row seed"
            % (site, sorted(parts)))
    a_part = LaurentPolynomial(parts.get(1, {}))
    b_part = LaurentPolynomial(parts.get(0, {}))
    if a_part.is_zero():
        return IrreducibilityReport(site, "linear_coefficient_zero",
                                    a_part, b_part)
    if b_part.is_zero():
        return IrreducibilityReport(site, "constant_coefficient_zero",
                                    a_part, b_part)
    expected = grid.value((n - 2, t)) \
        * LaurentPolynomial.variable(grid.generators[(n - 2, 0)], -1)
    if a_part != expected:
        return IrreducibilityReport(site, "linear_coefficient_mismatch",
                                    a_part, b_part)
    if not coprimeness_check(a_part, b_part).coprime:
        return IrreducibilityReport(site, "coefficients_not_coprime",
                                    a_part, b_part)
    return IrreducibilityReport(site, "certificate_holds", a_part, b_part)


# ---------------------------------------------------------------------------
# extended Laurent property of the reduced fourth-order map
# ---------------------------------------------------------------------------


@dataclass
class ExtendedLaurentEntry:
    index: int
    is_laurent: bool
    power_first: int = 0
    power_second: int = 0
    ok: bool = True

    def to_json_dict(self):
        return {"index": self.index, "is_laurent": self.is_laurent,
                "powers": [self.power_first, self.power_second],
                "ok": self.ok}


@dataclass
class ExtendedLaurentReport:
    first_discriminant: LaurentPolynomial
    second_discriminant: LaurentPolynomial
    entries: List[ExtendedLaurentEntry] = field(default_factory=list)

    @property
    def all_ok(self) -> bool:
        return all(e.ok for e in self.entries)

    def to_json_dict(self):
        return {"first_discriminant": str(self.first_discriminant),
                "second_discriminant": str(self.second_discriminant),
                "all_ok": self.all_ok,
                "entries": [e.to_json_dict() for e in self.entries]}


def extended_laurent_check(seq) -> ExtendedLaurentReport:
    """Verify each symbolic iterate's denominator divides a product of
    powers of the two seed discriminants s2^2 - s1 s3 and s3^2 - s2 s4
    (s1..s4 the four seeds), up to a unit."""
    s1, s2, s3, s4 = (seq.term(seq.start + i) for i in range(4))
    for s in (s1, s2, s3, s4):
        if not isinstance(s, LaurentPolynomial) or not s.is_monomial():
            raise ValueError("extended Laurent check needs symbolic seeds")
    d1 = s2 * s2 - s1 * s3
    d2 = s3 * s3 - s2 * s4
    report = ExtendedLaurentReport(d1, d2)
    for j in seq.indices():
        if j < seq.start + 4:
            continue
        value = seq.term(j)
        if not isinstance(value, RationalFunction):
            report.entries.append(ExtendedLaurentEntry(j, True))
            continue
        den = value.den
        u = v = 0
        while True:
            q = exact_divide(den, d1)
            if q is None:
                break
            den, u = q, u + 1
        while True:
            q = exact_divide(den, d2)
            if q is None:
                break
            den, v = q, v + 1
        ok = den.is_unit()
        report.entries.append(ExtendedLaurentEntry(j, False, u, v, ok))
    return report


# ---------------------------------------------------------------------------
# degree growth and algebraic entropy
# ---------------------------------------------------------------------------

_EXPONENTIAL_THRESHOLD = 0.05


@dataclass
class EntropyEstimate:
    axis: str
    line: int
    degrees: List[int]
    p_degrees: List[int]
    growth_class: str               # constant | linear | polynomial | exponential
    order: Optional[int] = None
    slope: Optional[int] = None
    entropy: float = 0.0

    def to_json_dict(self):
        return {"axis": self.axis, "line": self.line,
                "degrees": self.degrees, "p_degrees": self.p_degrees,
                "growth_class": self.growth_class, "order": self.order,
                "slope": self.slope, "entropy": self.entropy}


def degree_growth(grid, axis: str, line: int, start: Optional[int] = None,
                  minimum_points: int = 8) -> EntropyEstimate:
    """Monomial-denominator degrees along a ray, classified by exact finite
    differences; the entropy estimate is the limit of log-degree steps
    (0 for any sub-exponential class).

    Rays along n start at n = 3 by default: the denominators of the n = 2
    column follow a smaller boundary pattern that would spoil the exact
    finite differences of the generic product formula."""
    degrees: List[int] = []
    p_degrees: List[int] = []
    if axis == "n":
        coords = ((n, line) for n in range(3 if start is None else start,
                                           10 ** 6))
    elif axis == "t":
        coords = ((line, t) for t in range(1 if start is None else start,
                                           10 ** 6))
    else:
        raise ValueError("axis must be 'n' or 't'")
    for site in coords:
        value = grid.get(site)
        if value is None:
            break
        if isinstance(value, RationalFunction):
            raise ValueError("degree growth needs Laurent iterates")
        p_deg, q_deg, _ = paper_style_split(value)
        degrees.append(q_deg)
        p_degrees.append(p_deg)
    if len(degrees) < minimum_points:
        raise InsufficientDataError(
            "ray has %d evolved sites; need %d" % (len(degrees), minimum_points))
    growth_class, order, slope, entropy = _classify(degrees)
    return EntropyEstimate(axis, line, degrees, p_degrees, growth_class,
                           order, slope, entropy)


def _classify(degrees: List[int]):
    # Exact finite differencing first: a genuinely polynomial degree
    # sequence reaches a constant difference with windows to spare.  The
    # log-difference threshold test only decides the leftover cases.
    diffs = list(degrees)
    order = 0
    while order <= len(degrees) - 4:
        if all(d == diffs[0] for d in diffs):
            if order == 0:
                return "constant", 0, 0, 0.0
            if order == 1:
                return "linear", 1, diffs[0], 0.0
            return "polynomial", order, None, 0.0
        diffs = [b - a for a, b in zip(diffs, diffs[1:])]
        order += 1
    positive = [d for d in degrees if d > 0]
    if len(positive) >= 4:
        logdiffs = [math.log(b) - math.log(a)
                    for a, b in zip(positive, positive[1:])]
        tail = logdiffs[-3:]
        if all(step > _EXPONENTIAL_THRESHOLD for step in tail):
            rate = sum(tail) / len(tail)
            return "exponential", None, None, rate
    return "polynomial", None, None, 0.0
