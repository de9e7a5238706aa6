"""Exact linear solves over a field of values.

Entries may be :class:`fractions.Fraction` (numeric mode) or Laurent
polynomials / rational functions (symbolic mode); polynomials are promoted
to rational functions so every entry supports exact division.  Pivots are
exact-zero-testable because all values have canonical forms.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import LaurentPolynomial, RationalFunction
from .errors import SingularSystemError


def to_field(value):
    """Promote a value to a field element (Fraction or RationalFunction)."""
    if isinstance(value, LaurentPolynomial):
        return RationalFunction.make(value, LaurentPolynomial.one())
    if isinstance(value, RationalFunction):
        return value
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError("unsupported matrix entry type %r" % type(value))


def _is_zero(value) -> bool:
    if isinstance(value, RationalFunction):
        return value.is_zero()
    return value == 0


def rref(rows, rhs):
    """Reduced row echelon form of the augmented system (destructive copy).

    Returns (matrix, vector, pivot_columns).
    """
    m = [[to_field(x) for x in row] for row in rows]
    b = [to_field(x) for x in rhs]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, nrows):
            if not _is_zero(m[i][c]):
                pivot = i
                break
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        b[r], b[pivot] = b[pivot], b[r]
        inv = m[r][c]
        m[r] = [x / inv for x in m[r]]
        b[r] = b[r] / inv
        for i in range(nrows):
            if i != r and not _is_zero(m[i][c]):
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
                b[i] = b[i] - f * b[r]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m, b, pivots


def solve_unique(rows, rhs):
    """Solve A x = b requiring a unique solution; SingularSystemError else.

    Overdetermined systems are accepted when consistent.
    """
    ncols = len(rows[0])
    m, b, pivots = rref(rows, rhs)
    if len(pivots) < ncols:
        raise SingularSystemError(
            "coefficient matrix has rank %d < %d unknowns" % (len(pivots), ncols))
    for i in range(len(pivots), len(m)):
        if not _is_zero(b[i]):
            raise SingularSystemError("inconsistent overdetermined system")
    x = [None] * ncols
    for i, c in enumerate(pivots):
        x[c] = b[i]
    return x


def try_solve(rows, rhs):
    """Attempt to solve A x = b; return (solution-or-None, unique flag).

    None means the system is inconsistent.  When the solution space has
    free variables they are set to zero and unique is False.
    """
    ncols = len(rows[0])
    m, b, pivots = rref(rows, rhs)
    for i in range(len(pivots), len(m)):
        if not _is_zero(b[i]):
            return None, False
    zero = Fraction(0)
    x = [zero] * ncols
    for i, c in enumerate(pivots):
        x[c] = b[i]
    return x, len(pivots) == ncols
