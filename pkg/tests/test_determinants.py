"""Exact determinants, minors, and the condensation identity."""

import random
from fractions import Fraction

import pytest

from hhlattice.determinants import (det, det_bareiss, det_cofactor,
                                    dodgson_check, f_window_det, minor,
                                    window, x_window_det)
from hhlattice.errors import MissingSiteError
from hhlattice.lattice import (EquationSpec, InitialFrame, default_frame,
                               evolve, seed, seed_ones, seed_random)

M3 = [[1, 2, 3], [4, 5, 6], [7, 8, 10]]


class TestDet:
    def test_2x2(self):
        assert det([[1, 2], [3, 4]]) == -2

    def test_3x3_hand_expanded(self):
        # 1(50-48) - 2(40-42) + 3(32-35) = 2 + 4 - 9 = -3
        assert det(M3) == -3

    def test_empty_is_one(self):
        assert det([]) == 1

    def test_bareiss_matches_cofactor_randomized(self):
        rng = random.Random(11)
        for k in range(1, 7):
            for _ in range(4):
                m = [[rng.randint(-9, 9) for _ in range(k)] for _ in range(k)]
                assert det_bareiss(m) == det_cofactor(m)

    def test_bareiss_on_rationals(self):
        rng = random.Random(12)
        m = [[Fraction(rng.randint(-9, 9), rng.randint(1, 9))
              for _ in range(5)] for _ in range(5)]
        assert det_bareiss(m) == det_cofactor(m)

    def test_singular_matrix(self):
        assert det_bareiss([[1, 2], [2, 4]]) == 0
        assert det_bareiss([[0, 0], [0, 0]]) == 0


class TestMinor:
    def test_first_minor(self):
        assert minor(M3, (0,), (0,)) == 5 * 10 - 6 * 8

    def test_corner_minor(self):
        assert minor(M3, (0,), (2,)) == 4 * 8 - 5 * 7

    def test_full_deletion_of_1x1(self):
        assert minor([[7]], (0,), (0,)) == 1

    def test_out_of_range(self):
        with pytest.raises(IndexError):
            minor(M3, (3,), (0,))


class TestDodgson:
    def test_hand_example(self):
        report = dodgson_check(M3)
        assert report.lhs == 5 * (-3)
        assert report.rhs == 2 * (-3) - (-3) * (-3)
        assert report.holds

    def test_2x2_is_definition(self):
        report = dodgson_check([[1, 2], [3, 4]])
        assert report.holds and report.lhs == -2

    def test_randomized_up_to_6x6(self):
        rng = random.Random(13)
        for k in range(2, 7):
            for _ in range(5):
                m = [[rng.randint(-9, 9) for _ in range(k)] for _ in range(k)]
                assert dodgson_check(m).holds

    def test_symbolic_windows(self, hh_symbolic_grid):
        for k in (2, 3, 4):
            win = window(hh_symbolic_grid, (0, 0), k, "X")
            assert win.dodgson_check().holds


class TestWindows:
    def test_x_window_entries(self, hh_symbolic_grid):
        win = window(hh_symbolic_grid, (1, 1), 2, "X")
        for i in range(2):
            for j in range(2):
                site = win.entry_site(i, j)
                assert site == (1 + 2 * j, 1 + i)
                assert win.rows[i][j] == hh_symbolic_grid.value(site)

    def test_size_one_window(self, hh_symbolic_grid):
        win = window(hh_symbolic_grid, (2, 1), 1, "F")
        assert win.det() == hh_symbolic_grid.value((2, 1))

    def test_size_zero_window(self, hh_symbolic_grid):
        assert x_window_det(hh_symbolic_grid, (0, 0), 0) == 1

    def test_missing_site(self, hh_symbolic_grid):
        with pytest.raises(MissingSiteError):
            window(hh_symbolic_grid, (20, 20), 2, "X")


class TestLatticeDeterminants:
    def test_2x2_equals_neighbor_sum_symbolically(self, hh_symbolic_grid):
        g = hh_symbolic_grid
        for origin in ((0, 0), (1, 0), (2, 1)):
            n, t = origin
            expected = g.value((n + 1, t)) + g.value((n + 1, t + 1))
            assert x_window_det(g, origin, 2) == expected

    def test_3x3_shift_invariance_symbolic(self, hh_symbolic_grid):
        assert x_window_det(hh_symbolic_grid, (0, 0), 3) == \
            x_window_det(hh_symbolic_grid, (1, 0), 3)

    def test_3x3_all_ones_value(self, hh_ones_grid):
        # det[[1,1,1],[1,3,9],[1,5,21]] = 8, and the shifted window agrees
        assert x_window_det(hh_ones_grid, (0, 0), 3) == 8
        assert x_window_det(hh_ones_grid, (1, 0), 3) == 8

    def test_3x3_shift_invariance_random(self):
        rng = random.Random(14)
        grid = seed_random(InitialFrame("L", 14, 6), EquationSpec("hh2d"), rng)
        evolve(grid, (14, 6))
        for n in range(4):
            for t in range(3):
                assert x_window_det(grid, (n, t), 3) == \
                    x_window_det(grid, (n + 1, t), 3)

    def test_4x4_vanishes_symbolically(self, hh_symbolic_grid):
        assert x_window_det(hh_symbolic_grid, (0, 0), 4) == 0

    def test_4x4_vanishes_random(self):
        rng = random.Random(15)
        grid = seed_random(InitialFrame("L", 12, 5), EquationSpec("hh2d"), rng)
        evolve(grid, (12, 5))
        for origin in ((0, 0), (1, 1), (2, 0)):
            assert x_window_det(grid, origin, 4) == 0


class TestFriezeDeterminants:
    def test_f3_one_f4_zero_ones(self):
        spec = EquationSpec("two_frieze")
        grid = seed_ones(default_frame(spec, 12, 12), spec)
        evolve(grid, (12, 12))
        assert f_window_det(grid, (0, 0), 3) == 1
        assert f_window_det(grid, (0, 0), 4) == 0

    def test_f3_one_f4_zero_random(self):
        spec = EquationSpec("two_frieze")
        rng = random.Random(16)
        grid = seed_random(default_frame(spec, 14, 14), spec, rng)
        evolve(grid, (14, 14))
        for origin in ((0, 0), (1, 1), (2, 2)):
            assert f_window_det(grid, origin, 3) == 1
            assert f_window_det(grid, origin, 4) == 0

    def test_f3_one_symbolic_minimal_window(self):
        spec = EquationSpec("two_frieze")
        grid = seed(default_frame(spec, 8, 8), spec, "symbolic")
        evolve(grid, (8, 8))
        assert f_window_det(grid, (0, 0), 3) == 1
        assert f_window_det(grid, (0, 0), 4) == 0

    @pytest.mark.parametrize("k", [1, 2])
    def test_shift1_family(self, k):
        spec = EquationSpec("det1", k=k)
        rng = random.Random(170 + k)
        size = 4 * k + 6
        grid = seed_random(default_frame(spec, size, size), spec, rng)
        evolve(grid, (size, size))
        assert f_window_det(grid, (0, 0), 2 * k + 1) == 1
        assert f_window_det(grid, (0, 0), 2 * k + 2) == 0

    @pytest.mark.parametrize("k", [1, 2])
    def test_shift2_family(self, k):
        spec = EquationSpec("det2", k=k)
        rng = random.Random(19 + k)
        size = 4 * k + 8
        grid = seed_random(default_frame(spec, size, size), spec, rng)
        evolve(grid, (size, size))
        assert f_window_det(grid, (0, 0), 2 * k + 3) == 0
