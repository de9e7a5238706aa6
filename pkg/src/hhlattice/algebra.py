"""Exact sparse multivariate Laurent polynomials and rational functions.

Coefficients are arbitrary-precision Python integers.  Every value is kept in
a canonical form, so structural equality coincides with mathematical equality
and values hash consistently.  All values are immutable after construction
and safe to share across threads; the variable registry is append-only under
a lock.

A Laurent polynomial may carry negative exponents directly (monomials are
units of the ring), so the iterates of a Laurent-property lattice equation
stay in this class.  When an exact division fails, arithmetic falls back to
:class:`RationalFunction`, a reduced quotient with a canonically normalized
denominator.
"""

from __future__ import annotations

import heapq
import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple, Optional, Union

from .errors import PoleError, ZeroPolynomialError

# ---------------------------------------------------------------------------
# variables
# ---------------------------------------------------------------------------

KIND_ROW = "row"        # initial row x_{m,0}
KIND_COL0 = "col0"      # initial column x_{0,s}
KIND_COL1 = "col1"      # initial column x_{1,s}
KIND_FREE = "free"      # free sequence seed a_j
KIND_ANON = "anon"      # anything else, identified by display name

_KIND_RANK = {KIND_ROW: 0, KIND_COL0: 1, KIND_COL1: 2, KIND_FREE: 3, KIND_ANON: 4}


@dataclass(frozen=True)
class Variable:
    """A generator symbol, totally ordered by (kind, index, name)."""

    kind: str
    index: int
    name: str

    def __post_init__(self):
        # comparisons are the hot path of every polynomial operation
        object.__setattr__(self, "_key",
                           (_KIND_RANK[self.kind], self.index, self.name))

    def sort_key(self):
        return self._key

    def __lt__(self, other):
        return self._key < other._key

    def __le__(self, other):
        return self._key <= other._key

    def __repr__(self):
        return "Variable(%s)" % self.name


def row_seed(m: int) -> Variable:
    return Variable(KIND_ROW, m, "x%d_0" % m)


def col_seed(column: int, s: int) -> Variable:
    if column == 0:
        return Variable(KIND_COL0, s, "x0_%d" % s)
    if column == 1:
        return Variable(KIND_COL1, s, "x1_%d" % s)
    raise ValueError("column seeds exist only for columns 0 and 1")


def free_var(j: int) -> Variable:
    return Variable(KIND_FREE, j, "a%d" % j)


def anon_var(name: str) -> Variable:
    return Variable(KIND_ANON, 0, name)


def variable_from_name(name: str) -> Variable:
    """Reconstruct a variable from its canonical display name.

    Seed names follow the site pattern ``x{n}_{t}``: row seeds have t = 0,
    column seeds n = 0 or 1 (with t >= 1); any other identifier is anonymous.
    """
    if name.startswith("a") and name[1:].isdigit():
        return free_var(int(name[1:]))
    if name.startswith("x") and "_" in name:
        head, _, tail = name[1:].partition("_")
        if head.isdigit() and tail.isdigit():
            n, t = int(head), int(tail)
            if t == 0:
                return row_seed(n)
            if n in (0, 1):
                return col_seed(n, t)
    return anon_var(name)


class VariableRegistry:
    """Append-only interning table; registration is atomic."""

    def __init__(self):
        self._by_name: dict[str, Variable] = {}
        self._lock = threading.Lock()

    def register(self, var: Variable) -> Variable:
        with self._lock:
            existing = self._by_name.get(var.name)
            if existing is None:
                self._by_name[var.name] = var
                return var
            if existing != var:
                raise ValueError(
                    "name %r already registered with a different identity" % var.name
                )
            return existing

    def names(self):
        with self._lock:
            return sorted(self._by_name)


def variables(names: str) -> list:
    """Anonymous variables from a space-separated name list (test helper)."""
    return [LaurentPolynomial.variable(anon_var(n)) for n in names.split()]


# ---------------------------------------------------------------------------
# exponent vectors
# ---------------------------------------------------------------------------


class ExponentVector:
    """Immutable map Variable -> nonzero integer exponent.

    Total order: walk the merged variable set in variable order and compare
    exponents (absent = 0); the first difference decides.  This is the term
    order used for leading terms, display, and sign normalization.
    """

    __slots__ = ("_pairs", "_keypairs", "_hash")

    def __init__(self, pairs: Iterable = ()):
        cleaned = tuple(sorted(((v, e) for v, e in pairs if e != 0),
                               key=lambda p: p[0]._key))
        object.__setattr__(self, "_pairs", cleaned)
        keypairs = tuple((v._key, e) for v, e in cleaned)
        object.__setattr__(self, "_keypairs", keypairs)
        object.__setattr__(self, "_hash", hash(keypairs))

    @classmethod
    def _from_sorted(cls, pairs: tuple) -> "ExponentVector":
        """Trusted constructor: pairs already sorted, no zero exponents."""
        self = object.__new__(cls)
        object.__setattr__(self, "_pairs", pairs)
        keypairs = tuple((v._key, e) for v, e in pairs)
        object.__setattr__(self, "_keypairs", keypairs)
        object.__setattr__(self, "_hash", hash(keypairs))
        return self

    @classmethod
    def from_dict(cls, mapping: Mapping) -> "ExponentVector":
        return cls(mapping.items())

    @property
    def pairs(self):
        return self._pairs

    def exponent(self, var: Variable) -> int:
        for v, e in self._pairs:
            if v == var:
                return e
        return 0

    def variables(self):
        return tuple(v for v, _ in self._pairs)

    def is_empty(self) -> bool:
        return not self._pairs

    def __bool__(self):
        return bool(self._pairs)

    def mul(self, other: "ExponentVector") -> "ExponentVector":
        a, b = self._pairs, other._pairs
        if not a:
            return other
        if not b:
            return self
        out = []
        i = j = 0
        la, lb = len(a), len(b)
        while i < la and j < lb:
            va, ea = a[i]
            vb, eb = b[j]
            ka, kb = va._key, vb._key
            if ka == kb:
                e = ea + eb
                if e:
                    out.append((va, e))
                i += 1
                j += 1
            elif ka < kb:
                out.append((va, ea))
                i += 1
            else:
                out.append((vb, eb))
                j += 1
        out.extend(a[i:])
        out.extend(b[j:])
        return ExponentVector._from_sorted(tuple(out))

    def invert(self) -> "ExponentVector":
        return ExponentVector._from_sorted(
            tuple((v, -e) for v, e in self._pairs))

    def pow(self, n: int) -> "ExponentVector":
        if n == 0:
            return _EMPTY_EV
        return ExponentVector._from_sorted(
            tuple((v, e * n) for v, e in self._pairs))

    def without(self, var: Variable) -> "ExponentVector":
        return ExponentVector._from_sorted(
            tuple(p for p in self._pairs if p[0] != var))

    def negative_part(self) -> "ExponentVector":
        return ExponentVector._from_sorted(
            tuple(p for p in self._pairs if p[1] < 0))

    def positive_part(self) -> "ExponentVector":
        return ExponentVector._from_sorted(
            tuple(p for p in self._pairs if p[1] > 0))

    def degree(self) -> int:
        return sum(e for _, e in self._pairs)

    def abs_degree(self) -> int:
        return sum(abs(e) for _, e in self._pairs)

    def __eq__(self, other):
        return isinstance(other, ExponentVector) and \
            self._keypairs == other._keypairs

    def __hash__(self):
        return self._hash

    def _cmp(self, other: "ExponentVector") -> int:
        a, b = self._keypairs, other._keypairs
        if a == b:
            return 0
        i = j = 0
        while i < len(a) or j < len(b):
            if j >= len(b):
                ka, ea, eb = a[i][0], a[i][1], 0
            elif i >= len(a):
                ka, ea, eb = b[j][0], 0, b[j][1]
            elif a[i][0] == b[j][0]:
                ka, ea, eb = a[i][0], a[i][1], b[j][1]
            elif a[i][0] < b[j][0]:
                ka, ea, eb = a[i][0], a[i][1], 0
            else:
                ka, ea, eb = b[j][0], 0, b[j][1]
            if ea != eb:
                return -1 if ea < eb else 1
            if i < len(a) and a[i][0] == ka:
                i += 1
            if j < len(b) and b[j][0] == ka:
                j += 1
        return 0

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __str__(self):
        if not self._pairs:
            return "1"
        return "*".join(v.name if e == 1 else "%s^%d" % (v.name, e)
                        for v, e in self._pairs)

    def __repr__(self):
        return "ExponentVector(%s)" % str(self)


_EMPTY_EV = ExponentVector()


# ---------------------------------------------------------------------------
# Laurent polynomials
# ---------------------------------------------------------------------------


class LaurentPolynomial:
    """Sparse Laurent polynomial with integer coefficients, canonical form.

    The zero polynomial has an empty term map; no zero coefficient or zero
    exponent is ever stored, so ``==`` is mathematical equality.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Mapping] = None, _trusted: bool = False):
        if terms is None:
            object.__setattr__(self, "_terms", {})
        elif _trusted:
            object.__setattr__(self, "_terms", dict(terms))
        else:
            cleaned = {}
            for ev, c in terms.items():
                if c:
                    cleaned[ev] = cleaned.get(ev, 0) + c
                    if not cleaned[ev]:
                        del cleaned[ev]
            object.__setattr__(self, "_terms", cleaned)

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentPolynomial":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPolynomial":
        return cls({_EMPTY_EV: 1}, _trusted=True)

    @classmethod
    def constant(cls, c: int) -> "LaurentPolynomial":
        if c == 0:
            return cls()
        return cls({_EMPTY_EV: int(c)}, _trusted=True)

    @classmethod
    def variable(cls, var: Variable, exp: int = 1) -> "LaurentPolynomial":
        if exp == 0:
            return cls.one()
        return cls({ExponentVector([(var, exp)]): 1}, _trusted=True)

    @classmethod
    def monomial(cls, coeff: int, ev: ExponentVector) -> "LaurentPolynomial":
        if coeff == 0:
            return cls()
        return cls({ev: int(coeff)}, _trusted=True)

    # -- inspection ---------------------------------------------------------

    @property
    def terms(self):
        return self._terms

    def is_zero(self) -> bool:
        return not self._terms

    def is_one(self) -> bool:
        return self._terms == {_EMPTY_EV: 1}

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and _EMPTY_EV in self._terms)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_unit(self) -> bool:
        """Units of the Laurent ring: monomials with coefficient +-1."""
        if len(self._terms) != 1:
            return False
        (coeff,) = self._terms.values()
        return coeff in (1, -1)

    def constant_value(self) -> int:
        if self.is_zero():
            return 0
        if not self.is_constant():
            raise ValueError("not a constant polynomial")
        return self._terms[_EMPTY_EV]

    def leading_term(self):
        """(exponent vector, coefficient) of the term-order-greatest term."""
        if not self._terms:
            raise ZeroPolynomialError("zero polynomial has no leading term")
        ev = max(self._terms)
        return ev, self._terms[ev]

    def variables(self):
        seen = set()
        for ev in self._terms:
            seen.update(ev.variables())
        return sorted(seen, key=lambda v: v.sort_key())

    def integer_content(self) -> int:
        """gcd of all coefficients (0 for the zero polynomial)."""
        g = 0
        for c in self._terms.values():
            g = math.gcd(g, c)
            if g == 1:
                return 1
        return g

    def sorted_terms(self):
        """Terms in descending term order (the canonical iteration order)."""
        return [(ev, self._terms[ev]) for ev in sorted(self._terms, reverse=True)]

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        other = _coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        if isinstance(other, RationalFunction):
            return other + self
        res = dict(self._terms)
        for ev, c in other._terms.items():
            s = res.get(ev, 0) + c
            if s:
                res[ev] = s
            elif ev in res:
                del res[ev]
        return LaurentPolynomial(res, _trusted=True)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial({ev: -c for ev, c in self._terms.items()},
                                 _trusted=True)

    def __sub__(self, other):
        other = _coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        if isinstance(other, RationalFunction):
            return (-other) + self
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        if isinstance(other, RationalFunction):
            return other * self
        res: dict = {}
        for ev1, c1 in self._terms.items():
            for ev2, c2 in other._terms.items():
                ev = ev1.mul(ev2)
                s = res.get(ev, 0) + c1 * c2
                if s:
                    res[ev] = s
                elif ev in res:
                    del res[ev]
        return LaurentPolynomial(res, _trusted=True)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if not self.is_unit():
                raise ValueError("negative powers exist only for unit monomials")
            ((ev, c),) = self._terms.items()
            return LaurentPolynomial.monomial(c if n % 2 else 1, ev.pow(n))
        result = LaurentPolynomial.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __truediv__(self, other):
        """Exact Laurent division when possible, else a reduced quotient."""
        other = _coerce_value(other)
        if isinstance(other, RationalFunction):
            return RationalFunction.make(self, LaurentPolynomial.one()) / other
        q = exact_divide(self, other)
        if q is not None:
            return q
        return RationalFunction.make(self, other)

    def __rtruediv__(self, other):
        other = _coerce_value(other)
        if isinstance(other, RationalFunction):
            return other / self
        return other.__truediv__(self)

    def __eq__(self, other):
        if isinstance(other, LaurentPolynomial):
            return self._terms == other._terms
        if isinstance(other, int):
            return self._terms == LaurentPolynomial.constant(other)._terms
        if isinstance(other, RationalFunction):
            return other == self
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __bool__(self):
        return bool(self._terms)

    # -- evaluation and degrees --------------------------------------------

    def evaluate(self, assignment: Mapping) -> Fraction:
        """Exact value at a point; negative powers require nonzero values."""
        total = Fraction(0)
        for ev, c in self._terms.items():
            factor = Fraction(c)
            for v, e in ev.pairs:
                if v not in assignment:
                    raise KeyError("no value assigned to variable %s" % v.name)
                val = Fraction(assignment[v])
                if val == 0:
                    if e < 0:
                        raise PoleError(
                            "variable %s appears with negative exponent but is 0"
                            % v.name)
                    factor = Fraction(0)
                    break
                factor *= val ** e
            total += factor
        return total

    def split_monomial_content(self) -> "MonomialSplit":
        """Factor out the extreme monomial: p = content * x^m * residual.

        The residual has all exponents >= 0, hits exponent 0 in every
        occurring variable, and has integer content 1 with its term-order
        leading coefficient positive; signs and integer content live in the
        monomial side.
        """
        if self.is_zero():
            raise ZeroPolynomialError("cannot split the zero polynomial")
        # min exponent over all terms; a variable absent from some term has
        # exponent 0 there, so its min is capped at 0
        mins: dict = {}
        occurrences: dict = {}
        for ev in self._terms:
            for v, e in ev.pairs:
                occurrences.setdefault(v, []).append(e)
        nterms = len(self._terms)
        for v, exps in occurrences.items():
            m = min(exps) if len(exps) == nterms else min(min(exps), 0)
            if m:
                mins[v] = m
        shift = ExponentVector(mins.items())
        residual_terms = {ev.mul(shift.invert()): c for ev, c in self._terms.items()}
        residual = LaurentPolynomial(residual_terms, _trusted=True)
        content = residual.integer_content()
        lead_ev, lead_c = residual.leading_term()
        if lead_c < 0:
            content = -content
        residual = scalar_div_exact(residual, content)
        return MonomialSplit(content, shift, residual)

    def total_degree(self) -> "Degrees":
        """(residual total degree, monomial degree as sum of |exponents|)."""
        if self.is_zero():
            raise ZeroPolynomialError("zero polynomial has no degree")
        split = self.split_monomial_content()
        res_deg = max(ev.degree() for ev in split.residual.terms)
        return Degrees(res_deg, split.exponents.abs_degree())

    # -- rendering ----------------------------------------------------------

    def __str__(self):
        if not self._terms:
            return "0"
        pieces = []
        for i, (ev, c) in enumerate(self.sorted_terms()):
            if ev.is_empty():
                body = str(abs(c))
            elif abs(c) == 1:
                body = str(ev)
            else:
                body = "%d*%s" % (abs(c), ev)
            if i == 0:
                pieces.append(body if c > 0 else "-" + body)
            else:
                pieces.append((" + " if c > 0 else " - ") + body)
        return "".join(pieces)

    def __repr__(self):
        return "LaurentPolynomial(%s)" % str(self)


class Degrees(NamedTuple):
    residual: int
    monomial: int


@dataclass(frozen=True)
class MonomialSplit:
    """p = content * x^exponents * residual, with a canonical residual."""

    content: int
    exponents: ExponentVector
    residual: LaurentPolynomial

    def monomial(self) -> LaurentPolynomial:
        return LaurentPolynomial.monomial(self.content, self.exponents)

    def recompose(self) -> LaurentPolynomial:
        return self.monomial() * self.residual


def scalar_div_exact(p: LaurentPolynomial, c: int) -> LaurentPolynomial:
    if c in (1, -1):
        return p if c == 1 else -p
    terms = {}
    for ev, coeff in p.terms.items():
        q, r = divmod(coeff, c)
        if r:
            raise ValueError("coefficient %d not divisible by %d" % (coeff, c))
        terms[ev] = q
    return LaurentPolynomial(terms, _trusted=True)


def exact_divide(p: LaurentPolynomial,
                 d: LaurentPolynomial) -> Optional[LaurentPolynomial]:
    """Return q with p = d*q exactly, or None when no such q exists."""
    if d.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if p.is_zero():
        return LaurentPolynomial.zero()
    sp = p.split_monomial_content()
    sd = d.split_monomial_content()
    if sp.content % sd.content:
        return None
    coeff = sp.content // sd.content
    shift = sp.exponents.mul(sd.exponents.invert())
    quotient = _divide_residuals(sp.residual, sd.residual)
    if quotient is None:
        return None
    return LaurentPolynomial.monomial(coeff, shift) * quotient


class _MaxHeapEntry:
    """Reverses the exponent-vector order so heapq acts as a max-heap."""

    __slots__ = ("ev",)

    def __init__(self, ev):
        self.ev = ev

    def __lt__(self, other):
        return other.ev < self.ev


def _divide_residuals(p: LaurentPolynomial,
                      d: LaurentPolynomial) -> Optional[LaurentPolynomial]:
    """Multivariate division of monomial-free polynomials (exponents >= 0).

    The remainder's live leading term is tracked with a lazy max-heap:
    every key ever inserted into the remainder has a heap entry, and stale
    entries (keys that have since cancelled) are skipped on pop.
    """
    lead_ev, lead_c = d.leading_term()
    inv_lead = lead_ev.invert()
    d_rest = [(ev, c) for ev, c in d.terms.items() if ev != lead_ev]
    quotient: dict = {}
    rem = dict(p.terms)
    heap = [_MaxHeapEntry(ev) for ev in rem]
    heapq.heapify(heap)
    while heap:
        top = heapq.heappop(heap).ev
        r_c = rem.pop(top, 0)
        if r_c == 0:
            continue
        q_ev = top.mul(inv_lead)
        if any(e < 0 for _, e in q_ev.pairs):
            return None
        q_c, leftover = divmod(r_c, lead_c)
        if leftover:
            return None
        quotient[q_ev] = q_c
        for ev, c in d_rest:
            key = ev.mul(q_ev)
            old = rem.get(key)
            value = (old or 0) - c * q_c
            if value:
                rem[key] = value
                if old is None:
                    heapq.heappush(heap, _MaxHeapEntry(key))
            elif old is not None:
                del rem[key]
    if rem:
        return None
    return LaurentPolynomial(quotient, _trusted=True)


# ---------------------------------------------------------------------------
# rational functions
# ---------------------------------------------------------------------------


class RationalFunction:
    """Reduced quotient of Laurent polynomials.

    Canonical form: numerator and denominator share no non-unit factor and
    no common integer content, the denominator is monomial-free (monomial
    units migrate to the numerator), and the denominator's leading term has
    a positive coefficient.  A unit denominator reduces to the constant 1.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPolynomial, den: LaurentPolynomial,
                 _reduced: bool = False):
        if not _reduced:
            raise TypeError("use RationalFunction.make() to build reduced values")
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @classmethod
    def make(cls, num, den) -> "RationalFunction":
        num = _coerce_poly_strict(num)
        den = _coerce_poly_strict(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            return cls(LaurentPolynomial.zero(), LaurentPolynomial.one(),
                       _reduced=True)
        from .gcd import poly_gcd  # deferred: gcd builds on this module

        g = poly_gcd(num, den)
        if not g.is_one():
            num = exact_divide(num, g)
            den = exact_divide(den, g)
        ci = math.gcd(num.integer_content(), den.integer_content())
        if ci > 1:
            num = scalar_div_exact(num, ci)
            den = scalar_div_exact(den, ci)
        sden = den.split_monomial_content()
        if sden.exponents:
            inv = LaurentPolynomial.monomial(1, sden.exponents.invert())
            num = num * inv
            den = den * inv
        lead_ev, lead_c = den.leading_term()
        if lead_c < 0:
            num, den = -num, -den
        return cls(num, den, _reduced=True)

    # -- inspection ---------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_laurent(self) -> bool:
        return self.den.is_one()

    def as_laurent(self) -> LaurentPolynomial:
        if not self.is_laurent():
            raise ValueError("denominator %s is not a unit" % self.den)
        return self.num

    # -- field operations ---------------------------------------------------

    def __add__(self, other):
        other = _coerce_value(other)
        if isinstance(other, LaurentPolynomial):
            other = RationalFunction.make(other, LaurentPolynomial.one())
        if not isinstance(other, RationalFunction):
            return NotImplemented
        from .gcd import poly_gcd

        g = poly_gcd(self.den, other.den)
        if g.is_one():
            db, dd = self.den, other.den
        else:
            db, dd = exact_divide(self.den, g), exact_divide(other.den, g)
        num = self.num * dd + other.num * db
        den = self.den * dd
        return RationalFunction.make(num, den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den, _reduced=True)

    def __sub__(self, other):
        other = _coerce_value(other)
        if isinstance(other, LaurentPolynomial):
            other = RationalFunction.make(other, LaurentPolynomial.one())
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce_value(other)
        if isinstance(other, LaurentPolynomial):
            other = RationalFunction.make(other, LaurentPolynomial.one())
        if not isinstance(other, RationalFunction):
            return NotImplemented
        from .gcd import poly_gcd

        g1 = poly_gcd(self.num, other.den)
        g2 = poly_gcd(other.num, self.den)
        n1 = self.num if g1.is_one() else exact_divide(self.num, g1)
        d2 = other.den if g1.is_one() else exact_divide(other.den, g1)
        n2 = other.num if g2.is_one() else exact_divide(other.num, g2)
        d1 = self.den if g2.is_one() else exact_divide(self.den, g2)
        return RationalFunction.make(n1 * n2, d1 * d2)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce_value(other)
        if isinstance(other, LaurentPolynomial):
            other = RationalFunction.make(other, LaurentPolynomial.one())
        if not isinstance(other, RationalFunction):
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return self * RationalFunction.make(other.den, other.num)

    def __rtruediv__(self, other):
        other = _coerce_value(other)
        if isinstance(other, LaurentPolynomial):
            other = RationalFunction.make(other, LaurentPolynomial.one())
        return other / self

    def __pow__(self, n: int):
        if n < 0:
            return (RationalFunction.make(self.den, self.num)) ** (-n)
        return RationalFunction.make(self.num ** n, self.den ** n)

    def __eq__(self, other):
        if isinstance(other, RationalFunction):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (LaurentPolynomial, int)):
            return self.den.is_one() and self.num == other
        return NotImplemented

    def __hash__(self):
        if self.den.is_one():
            return hash(self.num)
        return hash((self.num, self.den))

    def evaluate(self, assignment: Mapping) -> Fraction:
        den = self.den.evaluate(assignment)
        if den == 0:
            raise PoleError("denominator vanishes at the given point")
        return self.num.evaluate(assignment) / den

    def __str__(self):
        if self.den.is_one():
            return str(self.num)
        return "(%s) / (%s)" % (self.num, self.den)

    def __repr__(self):
        return "RationalFunction(%s)" % str(self)


# ---------------------------------------------------------------------------
# coercion between value domains
# ---------------------------------------------------------------------------

Value = Union[LaurentPolynomial, RationalFunction]


def _coerce_poly(x):
    """int -> constant polynomial; pass polynomials and RFs through."""
    if isinstance(x, (LaurentPolynomial, RationalFunction)):
        return x
    if isinstance(x, int):
        return LaurentPolynomial.constant(x)
    return NotImplemented


def _coerce_poly_strict(x) -> LaurentPolynomial:
    if isinstance(x, LaurentPolynomial):
        return x
    if isinstance(x, int):
        return LaurentPolynomial.constant(x)
    raise TypeError("expected a Laurent polynomial or int, got %r" % type(x))


def _coerce_value(x):
    if isinstance(x, (LaurentPolynomial, RationalFunction)):
        return x
    if isinstance(x, int):
        return LaurentPolynomial.constant(x)
    if isinstance(x, Fraction):
        return RationalFunction.make(
            LaurentPolynomial.constant(x.numerator),
            LaurentPolynomial.constant(x.denominator))
    return NotImplemented


def simplify_value(v):
    """Collapse a rational function with unit denominator to a polynomial."""
    if isinstance(v, RationalFunction) and v.is_laurent():
        return v.num
    return v


def is_symbolic(v) -> bool:
    return isinstance(v, (LaurentPolynomial, RationalFunction))


def value_is_zero(v) -> bool:
    """Exact zero test in any value domain."""
    if isinstance(v, (LaurentPolynomial, RationalFunction)):
        return v.is_zero()
    return v == 0


def divide_values(numerator, divisor):
    """Division in whichever domain the operands live in.

    Symbolic operands attempt exact Laurent division first and fall back to
    a reduced rational function; numeric operands divide as exact rationals.
    """
    if is_symbolic(numerator) or is_symbolic(divisor):
        numerator = _coerce_value(numerator)
        divisor = _coerce_value(divisor)
        if isinstance(numerator, LaurentPolynomial) and \
                isinstance(divisor, LaurentPolynomial):
            return numerator / divisor
        return simplify_value(
            (numerator if isinstance(numerator, RationalFunction)
             else RationalFunction.make(numerator, LaurentPolynomial.one()))
            / divisor)
    if divisor == 0:
        raise ZeroDivisionError("numeric division by zero")
    return Fraction(numerator) / Fraction(divisor)


def evaluate(value, assignment: Mapping) -> Fraction:
    """Numeric specialization of a polynomial, rational function, or number."""
    if isinstance(value, (LaurentPolynomial, RationalFunction)):
        return value.evaluate(assignment)
    return Fraction(value)


def total_degree(p: LaurentPolynomial) -> Degrees:
    return p.total_degree()


def split_monomial_content(p: LaurentPolynomial) -> MonomialSplit:
    return p.split_monomial_content()
