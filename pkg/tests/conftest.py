import pytest

from hhlattice.lattice import EquationSpec, InitialFrame, evolve, seed, seed_ones


@pytest.fixture(scope="session")
def hh_symbolic_grid():
    """Symbolic hh2d grid evolved over an 8 x 4 window (shared, read-only)."""
    grid = seed(InitialFrame("L", 8, 4), EquationSpec("hh2d"), "symbolic")
    return evolve(grid, (8, 4))


@pytest.fixture(scope="session")
def hh_ones_grid():
    """All-ones hh2d grid over a 14 x 7 window (shared, read-only)."""
    grid = seed_ones(InitialFrame("L", 14, 7), EquationSpec("hh2d"))
    return evolve(grid, (14, 7))
