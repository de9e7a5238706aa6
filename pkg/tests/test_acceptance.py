"""Acceptance criteria, one test per criterion.

Every assertion is exact (tolerance zero) unless a runtime bound is part of
the criterion.  Each test prints a single pass line (visible under
``pytest -s``); the test name identifies the criterion in ``pytest -v``.

Criterion 5 is asserted twice: once exactly as stated, which is an expected
failure because the printed denominator product provably overstates q on
the n = 2 boundary column (see the strengthened companion test for the true
pattern, verified exactly), and once in the strengthened form that passes.
"""

import random
import time
from fractions import Fraction

import pytest

from hhlattice.analysis import (coprimeness_check, degree_growth,
                                extended_laurent_check, laurent_report,
                                predicted_denominator)
from hhlattice.determinants import f_window_det, x_window_det
from hhlattice.errors import SingularDenominatorError
from hhlattice.lattice import (EquationSpec, InitialFrame, default_frame,
                               evolve, seed, seed_ones, seed_random)
from hhlattice.linearization import (alpha_beta_closed_form,
                                     alpha_beta_from_solve,
                                     t_direction_coeffs)
from hhlattice.reduction import (ReductionSpec, constant_recurrence_finder,
                                 heideman_hogan, hh_linear_constant,
                                 iterate_generalized_hh, periodicity_check,
                                 reduced_frieze_iterate,
                                 reduced_frieze_symbolic,
                                 reduction_consistency)


def report(line):
    print("ACCEPTANCE %s" % line)


def test_criterion_01_heideman_hogan_reproduction():
    start = time.monotonic()
    for k in (1, 2, 3):
        seq = heideman_hogan(k, [1] * (2 * k + 1), max(40, 6 * k + 10))
        assert len(seq) >= 40
        assert seq.all_integers()
        constant = hh_linear_constant(k, seq)
        assert constant == 2 * k * k + 8 * k + 4
    elapsed = time.monotonic() - start
    assert elapsed < 1.0
    # note: at k = 3 the constant is 46 = 2*9 + 24 + 4 (the formula value)
    report("1 pass: k=1,2,3 integral with linear constants 14, 28, 46 "
           "(%.2fs)" % elapsed)


def test_criterion_02_evolution_integrality_positivity():
    start = time.monotonic()
    grid = seed_ones(InitialFrame("L", 10, 6), EquationSpec("hh2d"))
    evolve(grid, (10, 6))
    for value in grid.values.values():
        assert value > 0
        assert Fraction(value).denominator == 1
    # independent oracle: direct dict iteration of the lattice law
    x = {site: Fraction(1) for site in InitialFrame("L", 10, 6).sites()}
    for t in range(1, 7):
        for n in range(2, 11):
            x[(n, t)] = (x[(n - 2, t)] * x[(n, t - 1)] + x[(n - 1, t)]
                         + x[(n - 1, t - 1)]) / x[(n - 2, t - 1)]
    assert (x[(2, 1)], x[(3, 2)], x[(4, 2)]) == (3, 13, 21)
    for site, expected in x.items():
        assert grid.value(site) == expected
    elapsed = time.monotonic() - start
    assert elapsed < 1.0
    report("2 pass: 10x6 all-ones window positive-integral, spot values "
           "3/13/21 (%.2fs)" % elapsed)


def test_criterion_03_linearization_theorem_symbolic():
    start = time.monotonic()
    grid = seed(InitialFrame("L", 7, 3), EquationSpec("hh2d"), "symbolic")
    evolve(grid, (7, 3))
    assert x_window_det(grid, (0, 0), 3) == x_window_det(grid, (1, 0), 3)
    assert x_window_det(grid, (0, 0), 4) == 0
    row = [grid.value((m, 0)) for m in range(8)]
    solved = alpha_beta_from_solve(grid, 0)
    assert solved == alpha_beta_closed_form(row, 0)
    alpha1, beta1 = alpha_beta_from_solve(grid, 1)
    assert (alpha1, beta1) == alpha_beta_closed_form(row, 1)
    assert solved[0] == -beta1
    elapsed = time.monotonic() - start
    assert elapsed < 60.0
    report("3 pass: symbolic shift-invariant 3x3 det, vanishing 4x4 det, "
           "closed-form alpha/beta (%.2fs)" % elapsed)


def test_criterion_04_t_direction_linearization():
    grids = [evolve(seed_ones(InitialFrame("L", 14, 7), EquationSpec("hh2d")),
                    (14, 7))]
    for trial in range(5):
        rng = random.Random(4000 + trial)
        grids.append(evolve(seed_random(InitialFrame("L", 14, 7),
                                        EquationSpec("hh2d"), rng), (14, 7)))
    mismatches = 0
    for grid in grids:
        for t in (0, 1):
            even = t_direction_coeffs(grid, t, "even")
            odd = t_direction_coeffs(grid, t, "odd")
            # solve-based coefficients hold on two columns beyond the solve
            assert even.verified_columns == [6, 8]
            assert odd.verified_columns == [7, 9]
            assert even.epsilon == odd.epsilon
            if even.closed_form_agreement != (True, True, True):
                mismatches += 1
            if odd.closed_form_agreement != (True, True, True):
                mismatches += 1
    # the printed closed forms (window offset t+4) disagree on generic
    # seeds; this is reported without failing the criterion
    report("4 pass: solve-based column coefficients verified on ones + 5 "
           "random seeds; %d printed-closed-form mismatches reported"
           % mismatches)


@pytest.fixture(scope="module")
def laurent_window_grid():
    grid = seed(InitialFrame("L", 6, 4), EquationSpec("hh2d"), "symbolic")
    return evolve(grid, (6, 4))


@pytest.mark.xfail(strict=True, reason="the printed denominator product "
                   "overstates q on the n=2 boundary column for t>=2; see "
                   "the strengthened companion test and the notes ledger")
def test_criterion_05_laurent_denominators_as_stated(laurent_window_grid):
    rep = laurent_report(laurent_window_grid, (6, 4))
    for (n, t), entry in rep.sites.items():
        if n < 2 or t < 1:
            continue
        assert entry.is_laurent, (n, t)
        assert entry.matches_prediction, (n, t)
        assert entry.q_degree == 2 * t + n - 3, (n, t)
        assert entry.p_degree == entry.q_degree + 1, (n, t)


def test_criterion_05_laurent_denominators_strengthened(laurent_window_grid):
    grid = laurent_window_grid
    rep = laurent_report(grid, (6, 4))
    assert rep.all_laurent
    generators = grid.generators
    for (n, t), entry in rep.sites.items():
        if n < 2 or t < 1:
            continue
        assert entry.p_degree == entry.q_degree + 1, (n, t)
        if n == 2 and t >= 2:
            # true boundary pattern: q = x[0,0] prod_{1<=s<=t-1} x[0,s]
            pairs = [(generators[(0, 0)], 1)] + \
                [(generators[(0, s)], 1) for s in range(1, t)]
            from hhlattice.algebra import ExponentVector
            assert entry.denominator == ExponentVector(pairs), (n, t)
            assert entry.q_degree == t
        else:
            assert entry.denominator == predicted_denominator(grid, (n, t))
            assert entry.q_degree == 2 * t + n - 3, (n, t)
    report("5 pass (strengthened): exact monomial denominators over the "
           "6x4 window; the printed product holds for n >= 3 and the n=2 "
           "boundary column follows the smaller exact pattern "
           "(criterion as literally stated is an expected failure)")


def test_criterion_06_coprimeness():
    start = time.monotonic()
    grid = seed(InitialFrame("L", 5, 3), EquationSpec("hh2d"), "symbolic")
    evolve(grid, (5, 3))
    rng = random.Random(600)
    sites = grid.sites()
    pairs = 0
    for i, s1 in enumerate(sites):
        for s2 in sites[i + 1:]:
            result = coprimeness_check(grid.value(s1), grid.value(s2),
                                       rng=rng)
            assert result.coprime and result.exact, (s1, s2)
            pairs += 1
    elapsed = time.monotonic() - start
    assert elapsed < 300.0
    report("6 pass: %d distinct pairs over the 5x3 window exactly coprime "
           "(%.1fs)" % (pairs, elapsed))


def test_criterion_07_reduction_correctness():
    for (K, M) in [(1, 1), (1, 2), (2, 1), (2, 3)]:
        spec = ReductionSpec(K, M)
        consistency = reduction_consistency(spec, [1] * spec.order, 6, 4)
        assert consistency.consistent, (K, M)
        rng = random.Random(700 + 10 * K + M)
        init = [Fraction(rng.randint(1, 9), rng.randint(1, 9))
                for _ in range(spec.order)]
        periodicity = periodicity_check(spec, init)
        assert periodicity.alpha_periodic and periodicity.beta_periodic
        assert periodicity.t_swap_relations, (K, M)
        assert periodicity.tilde_well_defined
        assert periodicity.reduced_row_equation
        assert periodicity.reduced_col_equation
        assert periodicity.closed_forms_match
        assert periodicity.alpha_beta_swap
        bound = 6 * K * M
        assert bound <= 36
        seq = iterate_generalized_hh(spec, [1] * spec.order, 2 * bound + 6)
        found = constant_recurrence_finder(seq, bound)
        assert found is not None and found.order <= bound, (K, M)
    report("7 pass: lattice consistency, periodicities (odd/even M swap "
           "rules), and constant recurrences of order <= 6KM for all four "
           "(K, M) pairs")


def test_criterion_08_frieze_family():
    f_spec = EquationSpec("two_frieze")
    ones = evolve(seed_ones(default_frame(f_spec, 12, 12), f_spec), (12, 12))
    assert f_window_det(ones, (0, 0), 3) == 1
    assert f_window_det(ones, (0, 0), 4) == 0
    rng = random.Random(800)
    rand = evolve(seed_random(default_frame(f_spec, 12, 12), f_spec, rng),
                  (12, 12))
    for origin in ((0, 0), (2, 0), (1, 1)):
        assert f_window_det(rand, origin, 3) == 1
        assert f_window_det(rand, origin, 4) == 0
    symbolic = evolve(seed(default_frame(f_spec, 8, 8), f_spec, "symbolic"),
                      (8, 8))
    assert f_window_det(symbolic, (0, 0), 3) == 1
    assert f_window_det(symbolic, (0, 0), 4) == 0

    d1 = EquationSpec("det1", k=2)
    grid = evolve(seed_random(default_frame(d1, 14, 14), d1,
                              random.Random(801)), (14, 14))
    assert f_window_det(grid, (0, 0), 5) == 1      # F_{2k+1}
    assert f_window_det(grid, (0, 0), 6) == 0      # F_{2k+2}
    d2 = EquationSpec("det2", k=1)
    grid = evolve(seed_random(default_frame(d2, 12, 12), d2,
                              random.Random(802)), (12, 12))
    assert f_window_det(grid, (0, 0), 5) == 0      # F_{2k+3}
    report("8 pass: frieze F3=1/F4=0 (ones, random, symbolic); shift-1 k=2 "
           "F5=1/F6=0; shift-2 k=1 F5=0")


def test_criterion_09_fourth_order_map():
    # hand oracle: (1,2,3,4): denominators -1, -1, 2 give 6, 6, 12
    seq = reduced_frieze_iterate([1, 2, 3, 4], 7)
    assert seq.terms == [1, 2, 3, 4, 6, 6, 12]
    with pytest.raises(SingularDenominatorError):
        reduced_frieze_iterate([1, 1, 1, 1], 5)
    symbolic = reduced_frieze_symbolic(8)
    extended = extended_laurent_check(symbolic)
    assert extended.all_ok
    assert all(not e.is_laurent for e in extended.entries)
    # a generic sequence satisfies a 4th-order constant-coefficient linear
    # equation (with a constant inhomogeneity; differencing it gives the
    # minimal homogeneous relation of order 5)
    generic = reduced_frieze_iterate([1, 2, 3, 5], 16)
    affine = constant_recurrence_finder(generic, 6, inhomogeneous=True)
    assert affine is not None and affine.order == 4
    for j in range(len(generic.terms) - affine.order):
        assert affine.residual(generic.terms, j) == 0
    homogeneous = constant_recurrence_finder(generic, 6)
    assert homogeneous is not None and homogeneous.order == 5
    report("9 pass: 1,2,3,4 -> 6,6,12; all-ones singular; extended Laurent "
           "for a5..a8; generic seed satisfies a 4th-order constant linear "
           "equation (affine form; homogeneous closure has order 5)")


def test_criterion_10_entropy():
    grid_n = seed(InitialFrame("L", 10, 2), EquationSpec("hh2d"), "symbolic")
    evolve(grid_n, (10, 2))
    est_n = degree_growth(grid_n, "n", 2)
    assert est_n.growth_class == "linear"
    assert est_n.slope == 1
    assert est_n.entropy == 0.0
    grid_t = seed(InitialFrame("L", 4, 8), EquationSpec("hh2d"), "symbolic")
    evolve(grid_t, (4, 8))
    est_t = degree_growth(grid_t, "t", 4)
    assert est_t.growth_class == "linear"
    assert est_t.slope == 2
    assert est_t.entropy == 0.0
    report("10 pass: linear degree growth, slope 1 along rows and 2 along "
           "columns, entropy estimate 0")
