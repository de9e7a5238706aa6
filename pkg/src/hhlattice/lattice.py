"""Seeding and evolution of the two-dimensional lattice equations.

Four evolution laws share one engine.  Writing x[n,t] for the site value:

* ``hh2d``        x[n+2,t+1] x[n,t] = x[n,t+1] x[n+2,t] + x[n+1,t+1] + x[n+1,t]
* ``two_frieze``  x[n,t] x[n+2,t+2] = x[n+2,t] x[n,t+2] + x[n+1,t+1]
* ``det1`` (k)    F_{k+1}(n,t) = F_k(n+1,t+1)
* ``det2`` (k)    F_{k+2}(n,t) = F_k(n+2,t+2)

where F_k(n,t) is the determinant of the k x k matrix with entries
x[n+2i, t+2j].  The frieze and determinant laws live on the sublattice of
sites with n + t even (or odd -- the two classes are independent copies);
``parity`` selects the active class.

Sites are filled in lexicographic (t, n) order; each law declares its
stencil, so the engine checks availability instead of hard-coding sweeps.
In symbolic mode each site value is an exact Laurent polynomial when the
defining division is exact, and a reduced rational function otherwise (the
grid records such sites in ``non_laurent_sites``).
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Tuple

from .algebra import (LaurentPolynomial, RationalFunction, VariableRegistry,
                      anon_var, col_seed, divide_values, is_symbolic,
                      row_seed, simplify_value, value_is_zero)
from .determinants import f_window_det
from .errors import (DependencyError, FrameMismatchError, MissingSiteError,
                     PoleError, SingularStepError)
from .parsing import parse_value

SitePos = Tuple[int, int]

LAWS = ("hh2d", "two_frieze", "det1", "det2")


@dataclass(frozen=True)
class EquationSpec:
    """Which evolution law governs the lattice (k applies to det laws)."""

    law: str
    k: int = 1
    parity: int = 0

    def __post_init__(self):
        if self.law not in LAWS:
            raise ValueError("unknown law %r" % (self.law,))
        if self.law in ("det1", "det2") and self.k < 1:
            raise ValueError("determinant laws require k >= 1")
        if self.parity not in (0, 1):
            raise ValueError("parity must be 0 or 1")

    @property
    def is_parity_law(self) -> bool:
        return self.law != "hh2d"

    def window_size(self) -> int:
        if self.law == "det1":
            return self.k + 1
        if self.law == "det2":
            return self.k + 2
        if self.law == "two_frieze":
            return 2
        raise ValueError("no determinant window for law %r" % self.law)

    def border_width(self) -> int:
        """Rows/columns of initial data needed by the law."""
        if self.law == "hh2d":
            return 2
        return 2 * (self.window_size() - 1)

    def on_lattice(self, site: SitePos) -> bool:
        if not self.is_parity_law:
            return True
        n, t = site
        return (n + t) % 2 == self.parity

    def is_interior(self, site: SitePos) -> bool:
        """True when the law determines this site from earlier ones."""
        n, t = site
        if self.law == "hh2d":
            return n >= 2 and t >= 1
        if not self.on_lattice(site):
            return False
        w = self.border_width()
        return n >= w and t >= w

    def dependencies(self, site: SitePos) -> List[SitePos]:
        n, t = site
        if self.law == "hh2d":
            return [(n - 2, t - 1), (n - 2, t), (n - 1, t), (n - 1, t - 1),
                    (n, t - 1)]
        if self.law == "two_frieze":
            return [(n - 2, t - 2), (n - 2, t), (n, t - 2), (n - 1, t - 1)]
        m = self.window_size()
        n0, t0 = n - 2 * (m - 1), t - 2 * (m - 1)
        deps = [(n0 + 2 * i, t0 + 2 * j)
                for i in range(m) for j in range(m) if (i, j) != (m - 1, m - 1)]
        shift = 1 if self.law == "det1" else 2
        deps += [(n0 + shift + 2 * i, t0 + shift + 2 * j)
                 for i in range(self.k) for j in range(self.k)]
        return deps


@dataclass(frozen=True)
class InitialFrame:
    """Initial-data region: an L (one row, two columns), a strip of rows,
    or a border of ``depth`` rows and columns."""

    shape: str                    # "L" | "strip" | "border"
    n_max: int
    t_max: int
    depth: int = 1

    def __post_init__(self):
        if self.shape not in ("L", "strip", "border"):
            raise ValueError("unknown frame shape %r" % (self.shape,))

    def sites(self, spec: Optional[EquationSpec] = None) -> List[SitePos]:
        """Frame sites in (t, n) order, restricted to the active sublattice."""
        out = []
        if self.shape == "L":
            out = [(n, 0) for n in range(self.n_max + 1)]
            out += [(c, t) for t in range(1, self.t_max + 1) for c in (0, 1)]
        elif self.shape == "strip":
            out = [(n, t) for t in range(self.depth)
                   for n in range(self.n_max + 1)]
        else:
            seen = set()
            for t in range(self.depth):
                for n in range(self.n_max + 1):
                    seen.add((n, t))
            for n in range(self.depth):
                for t in range(self.t_max + 1):
                    seen.add((n, t))
            out = sorted(seen, key=lambda s: (s[1], s[0]))
        if spec is not None and spec.is_parity_law:
            out = [s for s in out if spec.on_lattice(s)]
        return sorted(out, key=lambda s: (s[1], s[0]))


def default_frame(spec: EquationSpec, n_max: int, t_max: int) -> InitialFrame:
    if spec.law == "hh2d":
        return InitialFrame("L", n_max, t_max)
    return InitialFrame("border", n_max, t_max, depth=spec.border_width())


def _seed_variable(site: SitePos):
    n, t = site
    if t == 0:
        return row_seed(n)
    if n == 0:
        return col_seed(0, t)
    if n == 1:
        return col_seed(1, t)
    return anon_var("x%d_%d" % (n, t))


class LatticeGrid:
    """Sparse map from sites to exact values plus the frame description."""

    def __init__(self, spec: EquationSpec, frame: InitialFrame, mode: str):
        if mode not in ("symbolic", "numeric"):
            raise ValueError("mode must be 'symbolic' or 'numeric'")
        self.spec = spec
        self.frame = frame
        self.mode = mode
        self.values: Dict[SitePos, object] = {}
        self.generators: Dict[SitePos, object] = {}
        self.non_laurent_sites: set = set()
        self.registry = VariableRegistry()

    # -- access -------------------------------------------------------------

    def get(self, site: SitePos):
        return self.values.get(tuple(site))

    def value(self, site: SitePos):
        v = self.values.get(tuple(site))
        if v is None:
            raise MissingSiteError(tuple(site))
        return v

    def sites(self) -> List[SitePos]:
        return sorted(self.values, key=lambda s: (s[1], s[0]))

    @property
    def is_laurent(self) -> bool:
        return not self.non_laurent_sites

    def _store(self, site: SitePos, value):
        if isinstance(value, RationalFunction):
            value = simplify_value(value)
            if isinstance(value, RationalFunction):
                self.non_laurent_sites.add(site)
        self.values[site] = value

    # -- structural equality (used by determinism tests) --------------------

    def __eq__(self, other):
        if not isinstance(other, LatticeGrid):
            return NotImplemented
        return (self.spec == other.spec and self.frame == other.frame
                and self.mode == other.mode and self.values == other.values)


def seed(frame: InitialFrame, spec: EquationSpec, mode: str = "symbolic",
         values=None) -> LatticeGrid:
    """Populate a grid on the frame.

    ``values`` is ignored in symbolic mode (one fresh generator per site).
    In numeric mode it is a mapping site -> value, a scalar applied to every
    site, or a callable site -> value.  Values are coerced to Fraction.
    """
    grid = LatticeGrid(spec, frame, mode)
    sites = frame.sites(spec)
    if mode == "symbolic":
        for site in sites:
            var = _seed_variable(site)
            grid.registry.register(var)
            grid.generators[site] = var
            grid.values[site] = LaurentPolynomial.variable(var)
        return grid
    if values is None:
        raise FrameMismatchError("numeric seeding requires values")
    for site in sites:
        if callable(values):
            v = values(site)
        elif isinstance(values, (int, Fraction)):
            v = values
        else:
            if site not in values:
                raise FrameMismatchError("no value provided for site %r" % (site,))
            v = values[site]
        grid.values[site] = Fraction(v)
    return grid


def seed_ones(frame, spec) -> LatticeGrid:
    return seed(frame, spec, mode="numeric", values=1)


def seed_random(frame, spec, rng, numerator_range=(1, 9),
                denominator_range=(1, 9)) -> LatticeGrid:
    """Random positive rational seeds (reproducible from the rng)."""
    def draw(_site):
        return Fraction(rng.randint(*numerator_range),
                        rng.randint(*denominator_range))
    return seed(frame, spec, mode="numeric", values=draw)


# ---------------------------------------------------------------------------
# evolution
# ---------------------------------------------------------------------------


def _compute_plain(grid: LatticeGrid, site: SitePos):
    """One step of the hh2d or two_frieze law at its corner site."""
    n, t = site
    if grid.spec.law == "hh2d":
        num = grid.value((n - 2, t)) * grid.value((n, t - 1)) \
            + grid.value((n - 1, t)) + grid.value((n - 1, t - 1))
        den = grid.value((n - 2, t - 1))
    else:
        num = grid.value((n - 2, t)) * grid.value((n, t - 2)) \
            + grid.value((n - 1, t - 1))
        den = grid.value((n - 2, t - 2))
    if not is_symbolic(den) and den == 0:
        raise PoleError("zero divisor while computing site %r" % (site,),
                        site=site)
    return divide_values(num, den)


def evolve_det_corner(grid: LatticeGrid, spec: EquationSpec, site: SitePos):
    """Solve the determinant relation for the top corner value at ``site``.

    The corner appears linearly with the leading principal minor as its
    cofactor, so the unknown is (target determinant - determinant with the
    corner zeroed) / cofactor.
    """
    if spec.law not in ("det1", "det2"):
        raise ValueError("evolve_det_corner applies to determinant laws only")
    m = spec.window_size()
    n, t = site
    n0, t0 = n - 2 * (m - 1), t - 2 * (m - 1)
    rows = []
    for i in range(m):
        row = []
        for j in range(m):
            if (i, j) == (m - 1, m - 1):
                row.append(0)
            else:
                row.append(grid.value((n0 + 2 * i, t0 + 2 * j)))
        rows.append(row)
    from .determinants import det, minor

    cofactor = minor(rows, (m - 1,), (m - 1,))
    if value_is_zero(cofactor):
        raise SingularStepError("vanishing cofactor at site %r" % (site,),
                                site=site)
    zeroed = det(rows)
    shift = 1 if spec.law == "det1" else 2
    target = f_window_det(grid, (n0 + shift, t0 + shift), spec.k)
    return divide_values(target - zeroed, cofactor)


def _compute_site(grid: LatticeGrid, site: SitePos):
    if grid.spec.law in ("det1", "det2"):
        return evolve_det_corner(grid, grid.spec, site)
    return _compute_plain(grid, site)


def evolve(grid: LatticeGrid, region: SitePos) -> LatticeGrid:
    """Fill every active site of the rectangle [0..n_max] x [0..t_max].

    Sites are computed in lexicographic (t, n) order.  Raises
    DependencyError when a required site is neither seeded nor computable.
    """
    n_max, t_max = region
    spec = grid.spec
    for t in range(t_max + 1):
        for n in range(n_max + 1):
            site = (n, t)
            if site in grid.values:
                continue
            if not spec.on_lattice(site):
                continue
            if not spec.is_interior(site):
                raise DependencyError(
                    "site %r is not seeded and not determined by the law"
                    % (site,), site=site)
            for dep in spec.dependencies(site):
                if dep not in grid.values:
                    raise DependencyError(
                        "site %r needs %r, which is unavailable"
                        % (site, dep), site=site)
            grid._store(site, _compute_site(grid, site))
    return grid


def wavefront_schedule(grid: LatticeGrid, region: SitePos) -> List[List[SitePos]]:
    """Group computable sites into waves of mutually independent cells.

    Sites in one wave depend only on seeds and earlier waves, so a wave may
    be computed concurrently; the sequential (t, n) sweep is a valid
    linearization of this schedule.
    """
    n_max, t_max = region
    spec = grid.spec
    level: Dict[SitePos, int] = {s: 0 for s in grid.frame.sites(spec)}
    waves: Dict[int, List[SitePos]] = {}
    for t in range(t_max + 1):
        for n in range(n_max + 1):
            site = (n, t)
            if site in level or not spec.on_lattice(site):
                continue
            if not spec.is_interior(site):
                raise DependencyError(
                    "site %r is not seeded and not determined by the law"
                    % (site,), site=site)
            deps = spec.dependencies(site)
            if any(d not in level for d in deps):
                raise DependencyError(
                    "site %r has unsatisfiable dependencies" % (site,),
                    site=site)
            lev = 1 + max(level[d] for d in deps)
            level[site] = lev
            waves.setdefault(lev, []).append(site)
    return [waves[k] for k in sorted(waves)]


def law_residual(grid: LatticeGrid, site: SitePos):
    """lhs - rhs of the defining law whose corner is ``site`` (exactly 0
    on a correctly evolved grid)."""
    n, t = site
    spec = grid.spec
    if spec.law == "hh2d":
        return grid.value(site) * grid.value((n - 2, t - 1)) \
            - (grid.value((n - 2, t)) * grid.value((n, t - 1))
               + grid.value((n - 1, t)) + grid.value((n - 1, t - 1)))
    if spec.law == "two_frieze":
        return grid.value(site) * grid.value((n - 2, t - 2)) \
            - (grid.value((n - 2, t)) * grid.value((n, t - 2))
               + grid.value((n - 1, t - 1)))
    m = spec.window_size()
    n0, t0 = n - 2 * (m - 1), t - 2 * (m - 1)
    shift = 1 if spec.law == "det1" else 2
    return f_window_det(grid, (n0, t0), m) \
        - f_window_det(grid, (n0 + shift, t0 + shift), spec.k)


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------

SCHEMA_VERSION = 1

_RATIONAL_RE = re.compile(r"^-?\d+(?:/\d+)?$")


def _value_to_str(v) -> str:
    return str(v)


def _value_from_str(s: str):
    s = s.strip()
    if _RATIONAL_RE.match(s):
        return Fraction(s)
    return parse_value(s)


def grid_to_text(grid: LatticeGrid) -> str:
    lines = ["%d %d %s" % (n, t, _value_to_str(grid.values[(n, t)]))
             for (n, t) in grid.sites()]
    return "\n".join(lines) + "\n"


def grid_values_from_text(text: str) -> Dict[SitePos, object]:
    values: Dict[SitePos, object] = {}
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        n_str, t_str, value_str = line.split(None, 2)
        values[(int(n_str), int(t_str))] = _value_from_str(value_str)
    return values


def grid_to_json_dict(grid: LatticeGrid) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "law": grid.spec.law,
        "k": grid.spec.k,
        "parity": grid.spec.parity,
        "frame": {"shape": grid.frame.shape, "n_max": grid.frame.n_max,
                  "t_max": grid.frame.t_max, "depth": grid.frame.depth},
        "mode": grid.mode,
        "sites": [{"n": n, "t": t, "value": _value_to_str(grid.values[(n, t)])}
                  for (n, t) in grid.sites()],
        "non_laurent_sites": sorted(list(s) for s in grid.non_laurent_sites),
    }


def grid_from_json_dict(data: dict) -> LatticeGrid:
    spec = EquationSpec(data["law"], data.get("k", 1), data.get("parity", 0))
    f = data["frame"]
    frame = InitialFrame(f["shape"], f["n_max"], f["t_max"], f.get("depth", 1))
    grid = LatticeGrid(spec, frame, data["mode"])
    for entry in data["sites"]:
        site = (entry["n"], entry["t"])
        grid.values[site] = _value_from_str(entry["value"])
    grid.non_laurent_sites = {tuple(s) for s in data.get("non_laurent_sites", [])}
    if grid.mode == "symbolic":
        for site in frame.sites(spec):
            v = grid.values.get(site)
            if isinstance(v, LaurentPolynomial) and v.is_monomial():
                ((ev, c),) = v.terms.items()
                if c == 1 and len(ev.pairs) == 1 and ev.pairs[0][1] == 1:
                    grid.generators[site] = ev.pairs[0][0]
    return grid


def grid_to_json(grid: LatticeGrid, indent: Optional[int] = None) -> str:
    return json.dumps(grid_to_json_dict(grid), indent=indent)


def grid_from_json(text: str) -> LatticeGrid:
    return grid_from_json_dict(json.loads(text))
