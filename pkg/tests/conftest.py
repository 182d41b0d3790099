"""Shared corpus: the worked examples every module is checked against."""

from fractions import Fraction as F

import pytest

from polyspec import FracPoly, HPolytope, Simplex, random_reduced_simplices

# Standard reflexive triangle; weights (1, 1, 1).
STD_TRIANGLE = ((1, 0), (0, 1), (-1, -1))

# Triangle with weight multiset {1, 1, 2}; spectrum exponents 0, 1, 1, 2.
SKEW_TRIANGLE = ((1, 0), (0, 1), (-1, -2))

# Twice the standard triangle: weights (4, 4, 4), not reduced.
BIG_TRIANGLE = ((2, 0), (0, 2), (-2, -2))

# 3-dimensional simplex with weight multiset {2, 2, 3, 4}.
SIMPLEX_3D = ((1, 0, 0), (0, 2, 0), (1, 1, 1), (-3, -5, -2))

# 4-dimensional simplex with weight multiset {1, 1, 1, 1, 5}.
SIMPLEX_4D = ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1), (-1, -1, -1, -5))

# 9-dimensional reflexive simplex with weight multiset {1 x9, 3}; its
# spectrum is integral but not unimodal.
SIMPLEX_9D = tuple(
    tuple(1 if j == i else 0 for j in range(9)) for i in range(9)
) + (tuple([-1] * 8 + [-3]),)

# Cross-polytope in the plane, supplied in H-form.
CROSS_VERTICES = ((1, 0), (0, 1), (-1, 0), (0, -1))
CROSS_FACETS = ((F(1), F(1)), (F(-1), F(1)), (F(-1), F(-1)), (F(1), F(-1)))

# Frozen expected spectra.
SPEC_SKEW = FracPoly({0: 1, 1: 2, 2: 1})
SPEC_3D = FracPoly.from_exponents(
    [0, 1, 2, 3, F(5, 4), F(4, 3), F(1, 2), F(3, 2), F(5, 2), F(5, 3), F(7, 4)]
)
SPEC_4D = FracPoly.from_exponents(
    [0, 1, 2, 3, 4, F(16, 5), F(12, 5), F(8, 5), F(4, 5)]
)
SPEC_9D = FracPoly({0: 1, 1: 1, 2: 1, 3: 2, 4: 1, 5: 1, 6: 2, 7: 1, 8: 1, 9: 1})
SPEC_BIG = FracPoly({0: 1, F(1, 2): 3, 1: 4, F(3, 2): 3, 2: 1})

RANDOM_SEED = 20260810


@pytest.fixture(scope="session")
def simplex_std():
    return Simplex(STD_TRIANGLE)


@pytest.fixture(scope="session")
def simplex_skew():
    return Simplex(SKEW_TRIANGLE)


@pytest.fixture(scope="session")
def simplex_big():
    return Simplex(BIG_TRIANGLE)


@pytest.fixture(scope="session")
def simplex_3d():
    return Simplex(SIMPLEX_3D)


@pytest.fixture(scope="session")
def simplex_4d():
    return Simplex(SIMPLEX_4D)


@pytest.fixture(scope="session")
def simplex_9d():
    return Simplex(SIMPLEX_9D)


@pytest.fixture(scope="session")
def cross_polytope():
    return HPolytope(CROSS_FACETS, CROSS_VERTICES)


@pytest.fixture(scope="session")
def random_suite():
    """100 seeded reduced simplices in dimensions 2 and 3, coordinates
    bounded by 6; shared by the property-based acceptance criteria."""
    return random_reduced_simplices(seed=RANDOM_SEED, count=100, dims=(2, 3), max_coord=6)
