"""Exact determinants, minors, and the Desnanot-Jacobi condensation check.

Works over any of the value domains used in the package: integers, exact
rationals, Laurent polynomials, and rational functions.  Small matrices use
cofactor expansion; larger ones use fraction-free (Bareiss) elimination whose
interior divisions are exact in the coefficient domain.

Windowed matrices are cut from a lattice grid in two orientations:

* kind "X": entry (i, j) is the grid value at (n + 2j, t + i) -- columns
  stride 2 in n, rows stride 1 in t.
* kind "F": entry (i, j) is the grid value at (n + 2i, t + 2j) -- stride 2
  in both directions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

from .algebra import LaurentPolynomial, exact_divide
from .errors import MissingSiteError

_COFACTOR_LIMIT = 4


def _is_zero(v) -> bool:
    if isinstance(v, LaurentPolynomial):
        return v.is_zero()
    return v == 0


def _exact_quotient(a, b):
    """a / b when the division is known to be exact in the entry domain."""
    if isinstance(a, int) and isinstance(b, int):
        q, r = divmod(a, b)
        if r:
            raise ArithmeticError("inexact integer division in elimination")
        return q
    if isinstance(a, LaurentPolynomial) and isinstance(b, LaurentPolynomial):
        q = exact_divide(a, b)
        if q is None:
            raise ArithmeticError("inexact polynomial division in elimination")
        return q
    return a / b


def det_cofactor(rows):
    """Determinant by first-row cofactor expansion (k = 0 gives 1)."""
    k = len(rows)
    if k == 0:
        return 1
    if k == 1:
        return rows[0][0]
    if k == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = 0
    for j in range(k):
        entry = rows[0][j]
        if _is_zero(entry):
            continue
        sub = [[row[c] for c in range(k) if c != j] for row in rows[1:]]
        term = entry * det_cofactor(sub)
        total = total + term if j % 2 == 0 else total - term
    return total


def det_bareiss(rows):
    """Fraction-free elimination; pivots are the first structurally nonzero
    entries in row order (structural zero = empty term set for polynomials)."""
    k = len(rows)
    if k == 0:
        return 1
    m = [list(row) for row in rows]
    sign = 1
    prev = 1
    for col in range(k - 1):
        pivot = None
        for i in range(col, k):
            if not _is_zero(m[i][col]):
                pivot = i
                break
        if pivot is None:
            return m[0][0] * 0
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            sign = -sign
        for i in range(col + 1, k):
            for j in range(col + 1, k):
                numer = m[i][j] * m[col][col] - m[i][col] * m[col][j]
                m[i][j] = _exact_quotient(numer, prev)
            m[i][col] = m[i][col] * 0
        prev = m[col][col]
    result = m[k - 1][k - 1]
    return result if sign == 1 else -result


def det(rows):
    if len(rows) <= _COFACTOR_LIMIT:
        return det_cofactor(rows)
    return det_bareiss(rows)


def minor(rows, deleted_rows, deleted_cols):
    """Determinant of the submatrix after deleting 0-based rows/columns."""
    k = len(rows)
    dr = set(deleted_rows)
    dc = set(deleted_cols)
    if any(i < 0 or i >= k for i in dr) or any(j < 0 or j >= k for j in dc):
        raise IndexError("minor deletion index out of range")
    if len(dr) != len(dc):
        raise ValueError("minor submatrix is not square")
    sub = [[rows[i][j] for j in range(k) if j not in dc]
           for i in range(k) if i not in dr]
    return det(sub)


@dataclass(frozen=True)
class DodgsonReport:
    lhs: object
    rhs: object
    holds: bool


def dodgson_check(rows) -> DodgsonReport:
    """Check |A_{1k;1k}| |A| = |A_11| |A_kk| - |A_1k| |A_k1| exactly."""
    k = len(rows)
    if k < 2:
        raise ValueError("condensation needs a matrix of size >= 2")
    last = k - 1
    inner = minor(rows, (0, last), (0, last))
    lhs = inner * det(rows)
    rhs = minor(rows, (0,), (0,)) * minor(rows, (last,), (last,)) \
        - minor(rows, (0,), (last,)) * minor(rows, (last,), (0,))
    return DodgsonReport(lhs, rhs, lhs == rhs)


# ---------------------------------------------------------------------------
# windows over a lattice grid
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class WindowMatrix:
    origin: Tuple[int, int]
    kind: str                      # "X" or "F"
    rows: tuple                    # tuple of tuples of values

    @property
    def size(self) -> int:
        return len(self.rows)

    def entry_site(self, i: int, j: int) -> Tuple[int, int]:
        n, t = self.origin
        if self.kind == "X":
            return (n + 2 * j, t + i)
        return (n + 2 * i, t + 2 * j)

    def det(self):
        return det(self.rows)

    def minor(self, deleted_rows, deleted_cols):
        return minor(self.rows, deleted_rows, deleted_cols)

    def dodgson_check(self) -> DodgsonReport:
        return dodgson_check(self.rows)

    def transposed(self) -> "WindowMatrix":
        k = self.size
        rows = tuple(tuple(self.rows[i][j] for i in range(k)) for j in range(k))
        return WindowMatrix(self.origin, self.kind, rows)


def window(grid, origin, k: int, kind: str = "X") -> WindowMatrix:
    """Cut a k x k window at origin; k = 0 is the empty matrix (det 1)."""
    if kind not in ("X", "F"):
        raise ValueError("window kind must be 'X' or 'F'")
    n, t = origin
    rows = []
    for i in range(k):
        row = []
        for j in range(k):
            site = (n + 2 * j, t + i) if kind == "X" else (n + 2 * i, t + 2 * j)
            value = grid.get(site)
            if value is None:
                raise MissingSiteError(site)
            row.append(value)
        rows.append(tuple(row))
    return WindowMatrix((n, t), kind, tuple(rows))


def x_window_det(grid, origin, k: int):
    """Determinant of the k x k stride-(2,1) window (1 when k = 0)."""
    if k == 0:
        return 1
    return window(grid, origin, k, "X").det()


def f_window_det(grid, origin, k: int):
    """Determinant of the k x k stride-(2,2) window (1 when k = 0)."""
    if k == 0:
        return 1
    return window(grid, origin, k, "F").det()
