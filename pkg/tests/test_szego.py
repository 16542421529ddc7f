"""Arc-symbol Toeplitz determinants and the continuum cross-check."""

import math

import numpy as np
import pytest

from helpers import arc_coefficient_quadrature
from scatter1d.core import NotPositiveDefinite, PreconditionViolated
from scatter1d.szego import (
    ArcSymbol,
    SzegoCrossCheck,
    _logdet_extended,
    arc_coefficient,
    szego_limit_check,
    toeplitz_logdet,
)


class TestArcCoefficient:
    @pytest.mark.parametrize("alpha", [0.3, 1.1, math.pi / 2, 2.9])
    @pytest.mark.parametrize("m", [0, 1, 2, 5, 16, 64])
    def test_matches_quadrature_oracle(self, alpha, m):
        closed = arc_coefficient(alpha, m)
        quad = arc_coefficient_quadrature(alpha, m)
        assert abs(closed - quad) < 1e-12

    def test_coefficients_are_even_in_m(self):
        for m in (1, 3, 7):
            assert arc_coefficient(1.1, m) == arc_coefficient(1.1, -m)

    def test_symbol_guard(self):
        with pytest.raises(PreconditionViolated):
            ArcSymbol(alpha=-0.1)
        with pytest.raises(PreconditionViolated):
            ArcSymbol(alpha=math.pi)
        ArcSymbol(alpha=0.0)


class TestToeplitzLogDet:
    def test_one_by_one_is_exact(self):
        for alpha in (0.3, 0.7, 2.0):
            r = toeplitz_logdet(ArcSymbol(alpha), 1)
            assert abs(r.log_det - math.log(1.0 - alpha / math.pi)) < 1e-14

    def test_identity_symbol_is_exact(self):
        r = toeplitz_logdet(ArcSymbol(0.0), 50)
        assert r.log_det == 0.0
        assert r.asymptotic == 0.0
        assert r.residual == 0.0

    def test_near_identity_symbol_stays_tiny(self):
        r = toeplitz_logdet(ArcSymbol(1e-8), 64)
        assert abs(r.log_det) < 1e-5

    def test_log_det_decreases_with_n(self):
        vals = [toeplitz_logdet(ArcSymbol(math.pi / 2), n).log_det for n in (1, 2, 4, 8, 16)]
        for a, b in zip(vals, vals[1:]):
            assert b < a

    def test_frozen_residuals_at_right_angle(self):
        # residual = log_det - asymptotic at alpha = pi/2, pinned from runs
        # whose extended-precision determinants match a 150-digit
        # recomputation exactly.
        frozen = {
            8: 2.578822e-4,
            16: 5.825468e-5,
            32: 1.530747e-5,
            64: 3.817728e-6,
        }
        for n, ref in frozen.items():
            r = toeplitz_logdet(ArcSymbol(math.pi / 2), n)
            assert abs(r.residual - ref) < 1e-9

    def test_residual_shrinks_from_32_to_64(self):
        r32 = toeplitz_logdet(ArcSymbol(math.pi / 2), 32)
        r64 = toeplitz_logdet(ArcSymbol(math.pi / 2), 64)
        assert abs(r64.residual) < abs(r32.residual)
        assert abs(r64.residual) <= 0.1

    def test_double_and_extended_paths_agree(self):
        # (alpha, n) in the comfortably-double regime, recomputed in
        # extended precision: both routes must land on the same value.
        alpha, n = 1.2, 16
        via_public = toeplitz_logdet(ArcSymbol(alpha), n).log_det
        via_extended = _logdet_extended(alpha, n, 40)
        assert abs(via_public - via_extended) < 1e-8

    def test_precision_wall_raises(self):
        with pytest.raises(NotPositiveDefinite):
            toeplitz_logdet(ArcSymbol(3.1), 512)

    def test_n_guards(self):
        with pytest.raises(PreconditionViolated):
            toeplitz_logdet(ArcSymbol(1.0), 0)
        with pytest.raises(PreconditionViolated):
            toeplitz_logdet(ArcSymbol(1.0), 513)


class TestSzegoLimitCheck:
    def test_coupling_guard(self):
        with pytest.raises(PreconditionViolated):
            szego_limit_check(alpha=0.5, n=16, t=2.0, quad_order=96)

    def test_t_range_guard(self):
        n, t = 16, 0.25
        with pytest.raises(PreconditionViolated):
            szego_limit_check(alpha=2.0 * math.pi * t / n, n=n, t=t, quad_order=96)

    def test_gap_fields_are_consistent(self):
        t, n = 1.0, 16
        chk = szego_limit_check(alpha=2.0 * math.pi * t / n, n=n, t=t, quad_order=150)
        assert isinstance(chk, SzegoCrossCheck)
        assert chk.gap_fredholm == chk.log_det - chk.fredholm_total
        assert chk.gap_continuum == chk.log_det - chk.continuum_asymptotic

    def test_refining_alpha_quarters_the_gap(self):
        # At fixed t the discrete-to-continuum gap scales like alpha^2, so
        # doubling n (halving alpha) divides it by about four.
        t = 2.0
        coarse = szego_limit_check(2.0 * math.pi * t / 64, 64, t, quad_order=200)
        fine = szego_limit_check(2.0 * math.pi * t / 128, 128, t, quad_order=200)
        ratio = abs(coarse.gap_fredholm) / abs(fine.gap_fredholm)
        assert 3.3 <= ratio <= 4.7, f"gap ratio {ratio}"

    def test_gap_grows_with_t_at_fixed_alpha(self):
        # Walking up the coupling at fixed alpha = pi/8 makes the gap
        # larger, not smaller: refinement happens in alpha, not in t.
        low = szego_limit_check(2.0 * math.pi * 1.0 / 16, 16, 1.0, quad_order=200)
        high = szego_limit_check(2.0 * math.pi * 2.0 / 32, 32, 2.0, quad_order=200)
        assert abs(high.gap_fredholm) > abs(low.gap_fredholm)
        assert abs(low.gap_fredholm + 0.030595) < 1e-3
        assert abs(high.gap_fredholm + 0.126583) < 1e-3

    def test_fredholm_total_tracks_continuum_asymptotic(self):
        t, n = 3.0, 48
        chk = szego_limit_check(alpha=2.0 * math.pi * t / n, n=n, t=t, quad_order=300)
        assert abs(chk.fredholm_total - chk.continuum_asymptotic) < 0.02
