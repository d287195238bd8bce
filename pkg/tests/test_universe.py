"""Tests for finite universes and lattice geometry."""

import logging
import math
from fractions import Fraction

import numpy as np
import pytest

from latticeq.core.universe import (
    ContinuumRef,
    FiniteUniverse,
    Interval,
    divisibility_bound,
    embed_point,
    highly_divisible,
    lattice_distance,
    make_universe,
    max_local_window,
    window_diameter_bound,
)
from latticeq.errors import PreconditionError


class TestMakeUniverse:
    def test_points_of_small_universe(self):
        u = make_universe(4)
        assert list(u.points()) == [-2, -1, 0, 1]
        assert u.spacing == pytest.approx(math.sqrt(math.pi / 2))
        assert (u.lo, u.hi) == (-2, 1)

    def test_odd_n_rejected(self):
        with pytest.raises(PreconditionError, match="even"):
            make_universe(3)

    def test_nonpositive_n_rejected(self):
        with pytest.raises(PreconditionError):
            make_universe(0)

    def test_non_coprime_planck_integer_rejected(self):
        with pytest.raises(PreconditionError, match="orthonormal"):
            make_universe(8, 2)

    def test_direct_construction_validates(self):
        with pytest.raises(ValueError):
            FiniteUniverse(n=5)

    def test_highly_divisible_universe_with_large_planck_integer(self):
        n = 720720 * 2
        u = make_universe(n, 7 * n + 1)
        assert u.h_n == 7 * n + 1
        assert all(n % d == 0 for d in range(1, 17))

    @pytest.mark.parametrize("n", [2, 1000, 10**6, 1441440])
    def test_spacing_squared_times_n_is_two_pi(self, n):
        u = make_universe(n)
        assert u.spacing**2 * n == pytest.approx(2 * math.pi, abs=1e-12)

    def test_nu_in_units_of_pi(self):
        assert make_universe(10).nu == Fraction(1, 5)

    def test_contains_and_wrap(self):
        u = make_universe(4)
        assert u.contains(1)
        assert not u.contains(2)
        assert u.wrap(2) == -2
        assert u.wrap(-3) == 1
        assert u.wrap(0) == 0

    def test_universe_is_frozen(self):
        u = make_universe(4)
        with pytest.raises(ValueError):
            u.n = 6


class TestEmbedding:
    def test_embed_point(self):
        assert embed_point(make_universe(8), 2) == pytest.approx(math.sqrt(math.pi))

    def test_origin_embeds_to_zero(self):
        assert embed_point(make_universe(1000), 0) == 0.0

    def test_large_universe(self):
        assert embed_point(make_universe(2 * 10**6), 1000) == pytest.approx(1.77245, abs=1e-5)

    def test_out_of_range_rejected(self):
        with pytest.raises(PreconditionError, match="outside"):
            embed_point(make_universe(8), 4)


class TestLatticeDistance:
    def test_cyclic_wrap(self):
        u = make_universe(8)
        assert lattice_distance(u, -4, 3) == pytest.approx(u.spacing)

    def test_identity(self):
        assert lattice_distance(make_universe(8), 2, 2) == 0.0

    def test_direct(self):
        u = make_universe(8)
        assert lattice_distance(u, -2, 2) == pytest.approx(4 * u.spacing)

    def test_out_of_range_rejected(self):
        with pytest.raises(PreconditionError):
            lattice_distance(make_universe(8), 0, 9)

    @pytest.mark.parametrize("n", range(2, 65, 2))
    def test_triangle_inequality_exhaustive(self, n):
        u = make_universe(n)
        points = list(u.points())
        d = np.array([[lattice_distance(u, a, b) for b in points] for a in points])
        assert np.allclose(d, d.T)
        # d[i, k] <= d[i, j] + d[j, k] for every triple
        assert np.all(d[:, None, :] <= d[:, :, None] + d[None, :, :] + 1e-12)


class TestLocalWindow:
    @pytest.mark.parametrize(
        "n, expected", [(1000, 6), (10**6, 199), (10**8, 1994), (8, 0)]
    )
    def test_max_local_window(self, n, expected):
        assert max_local_window(make_universe(n)) == expected

    def test_degenerate_universe_warns(self, caplog):
        with caplog.at_level(logging.WARNING, logger="latticeq.core.universe"):
            assert max_local_window(make_universe(8)) == 0
        assert "degenerate" in caplog.text

    def test_maximal_window_is_admissible(self):
        for n in (1000, 10**6, 40_000):
            u = make_universe(n)
            m = max_local_window(u)
            assert 2 * m <= window_diameter_bound(u)
            assert 2 * (m + 1) > window_diameter_bound(u)


class TestDivisibility:
    def test_highly_divisible(self):
        assert highly_divisible(16) == 720720
        assert highly_divisible(16, 2) == 1441440

    def test_highly_divisible_rejects_zero(self):
        with pytest.raises(PreconditionError):
            highly_divisible(0)

    def test_divisibility_bound(self):
        assert divisibility_bound(1441440) == 16
        assert divisibility_bound(10) == 2
        assert divisibility_bound(7) == 1


class TestIntervalAndContinuum:
    def test_interval(self):
        iv = Interval(lo=-1.0, hi=3.0)
        assert iv.diameter == 4.0
        assert iv.contains(3.0)
        assert not iv.contains(3.5)

    def test_empty_interval_rejected(self):
        with pytest.raises(ValueError):
            Interval(lo=1.0, hi=1.0)

    def test_continuum_needs_positive_hbar(self):
        assert ContinuumRef().hbar == 1.0
        with pytest.raises(ValueError):
            ContinuumRef(hbar=0.0)
