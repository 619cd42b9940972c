# tests for the series engine


# ruff and mypy per file settings
#
# empty lines
# ruff: noqa: E302, E303
# others
# ruff: noqa: S101, PLR2004

# fmt: off



import cmath
import logging
import math

import numpy
import pytest

from faddeyeva_voigt.engine import (
    TINY_MAX,
    AccuracyControl,
    ComplexPoint,
    ContractViolation,
    FaddeyevaValue,
    InvalidInput,
    LoopCapExceeded,
    OverflowDomain,
    accuracy_from_tiny,
    assemble_first_quadrant,
    bracket_series,
    compute_sums,
    evaluate,
    faddeyeva,
    imaginary_bracket,
    n_cut_sigma1,
    n_cut_sigma24,
    reflection_term,
    salzer_error,
    salzer_parameter,
    tiny_min,
)
from faddeyeva_voigt.golden_values import GOLDEN_POINTS
from faddeyeva_voigt.oracle import oracle_sums_naive, oracle_w
from faddeyeva_voigt.scalar_kernels import erfcx_real



def _rel(value: float, ref: float) -> float:
    return abs(value - ref) / abs(ref)



# accuracy control

def test_tiny_min_value():
    assert tiny_min() == pytest.approx(1.4314e-17, rel=1e-4)
    assert tiny_min() == salzer_error(0.5)

def test_accuracy_at_tiny_min(ctl_min, eps):
    assert not ctl_min.clamped
    assert ctl_min.a == pytest.approx(0.5, rel=1e-14)
    assert ctl_min.conv_tol == eps

def test_accuracy_at_tiny_max():
    ctl = accuracy_from_tiny(1.0e-4)
    assert not ctl.clamped
    assert ctl.a == pytest.approx(0.99828, abs=1e-5)
    assert ctl.conv_tol == 1.0e-4

@pytest.mark.parametrize(
    ("tiny", "expected"),
    [
        (1.0e-2, "max"),
        (math.inf, "max"),
        (0.0, "min"),
        (-1.0, "min"),
        (math.nan, "min"),
        (1.43e-17, "min"),
        (1.0e-30, "min"),
    ],
)
def test_accuracy_clamping(tiny, expected, caplog):
    with caplog.at_level(logging.WARNING, logger="faddeyeva_voigt.engine"):
        ctl = accuracy_from_tiny(tiny)
    assert ctl.clamped
    assert ctl.tiny_effective == (TINY_MAX if expected == "max" else tiny_min())
    assert "outside" in caplog.text

def test_accuracy_in_range_not_logged(caplog):
    with caplog.at_level(logging.WARNING, logger="faddeyeva_voigt.engine"):
        ctl = accuracy_from_tiny(1.0e-10)
    assert not ctl.clamped
    assert ctl.tiny_effective == 1.0e-10
    assert caplog.text == ""

@pytest.mark.parametrize("tiny", [1.0e-4, 1.0e-8, 1.0e-12, 1.0e-16])
def test_salzer_parameter_inverts_error(tiny):
    assert salzer_error(salzer_parameter(tiny)) == pytest.approx(tiny, rel=1e-12)

def test_salzer_error_table():
    assert salzer_error(1.0) == pytest.approx(2.0 * math.exp(-math.pi ** 2), rel=1e-15)
    assert salzer_error(0.5) < 1.5e-17
    assert salzer_error(1.0) > salzer_error(0.8) > salzer_error(0.6) > salzer_error(0.5)



# truncation indices

def test_n_cut_values(limits):
    assert n_cut_sigma1(0.5, 0.0) == 54
    assert n_cut_sigma1(1.0, 0.0) == 27
    assert n_cut_sigma24(0.5, 26.0) == 2
    assert n_cut_sigma24(0.5, 0.0) == math.ceil(limits.x_big / 0.5)

@pytest.mark.parametrize("func", [n_cut_sigma1, n_cut_sigma24])
def test_n_cut_contract(func, limits):
    with pytest.raises(ContractViolation):
        func(0.5, limits.x_big)
    with pytest.raises(ContractViolation):
        func(0.5, 30.0)



# sums

def test_sums_symmetric_at_zero(ctl_min):
    sums = compute_sums(0.0, 1.0, ctl_min)
    assert sums.s2 == sums.s3
    assert sums.s4 == sums.s5

def test_sums_truncated_beyond_x_big(ctl_min):
    sums = compute_sums(30.0, 0.5, ctl_min)
    assert sums.s1 == sums.s2 == sums.s4 == 0.0
    assert sums.s3 > 0.0
    assert sums.s5 > 0.0

def test_sums_small_x_odd_part(ctl_min, eps):
    x = 1.0e-4
    sums = compute_sums(x, 0.5, ctl_min)
    assert sums.odd_part is not None
    assert sums.odd_part > 0.0
    naive = oracle_sums_naive(x, 0.5, ctl_min.a, 80)
    assert sums.odd_part == pytest.approx(0.5 * (naive.s5 - naive.s4), rel=1e-9)
    assert compute_sums(0.1, 0.5, ctl_min).odd_part is None

@pytest.mark.parametrize("x", [0.0, 0.1, 1.0, 6.3, 26.0, 30.0, 100.0])
@pytest.mark.parametrize("y", [1.0e-20, 1.0e-6, 0.5, 5.0, 100.0])
def test_sums_match_literal_sums(x, y, ctl_min, eps):
    n_max = math.ceil((x + 30.0) / ctl_min.a)
    sums = compute_sums(x, y, ctl_min)
    naive = oracle_sums_naive(x, y, ctl_min.a, n_max)
    for name in ("s1", "s2", "s3", "s4", "s5"):
        value = getattr(sums, name)
        ref = getattr(naive, name)
        assert value == pytest.approx(ref, rel=4 * eps, abs=1.0e-290), name
        assert value >= 0.0

def test_sums_fewer_cycles_at_lower_accuracy(ctl_min):
    coarse = accuracy_from_tiny(1.0e-4)
    for x, y in [(0.063, 1.0e-20), (6.3, 1.0e-2), (1.0, 1.0), (630.0, 10.0)]:
        assert compute_sums(x, y, coarse).n_used <= compute_sums(x, y, ctl_min).n_used

def test_sums_loop_cap(ctl_min, mocker):
    mocker.patch("faddeyeva_voigt.engine.loop_cap", return_value=1)
    with pytest.raises(LoopCapExceeded):
        compute_sums(1.0, 1.0, ctl_min)



# assembly

def test_bracket_zero_from_five(ctl_min, eps):
    assert imaginary_bracket(5.0, ctl_min.a, ctl_min.conv_tol) == 0.0
    assert imaginary_bracket(100.0, ctl_min.a, ctl_min.conv_tol) == 0.0
    assert abs(bracket_series(5.0, ctl_min.a, ctl_min.conv_tol)) <= 16 * eps * erfcx_real(5.0)

def test_bracket_below_five_is_series(ctl_min):
    value = imaginary_bracket(1.0, ctl_min.a, ctl_min.conv_tol)
    assert value == bracket_series(1.0, ctl_min.a, ctl_min.conv_tol)

def test_assemble_matches_public_entry(ctl_min):
    x, y = 2.0, 0.5
    sums = compute_sums(x, y, ctl_min)
    assert assemble_first_quadrant(x, y, ctl_min, sums) == faddeyeva(ComplexPoint(x, y), ctl_min)



# golden values

@pytest.mark.parametrize("golden", GOLDEN_POINTS, ids=lambda g: f"{g.x:g}+{g.y:g}i")
def test_golden_values(golden, ctl_min):
    value = faddeyeva(ComplexPoint(golden.x, golden.y), ctl_min)
    assert _rel(value.v, golden.v_ref) <= golden.tol_v
    if golden.l_ref is not None:
        assert _rel(value.l, golden.l_ref) <= golden.tol_l

@pytest.mark.parametrize(
    "golden",
    [g for g in GOLDEN_POINTS if g.published_err_v is not None],
    ids=lambda g: f"{g.x:g}+{g.y:g}i",
)
def test_golden_values_within_published_accuracy(golden, ctl_min):
    value = faddeyeva(ComplexPoint(golden.x, golden.y), ctl_min)
    assert _rel(value.v, golden.v_ref) <= 7e-15
    assert _rel(value.l, golden.l_ref) <= 4e-15

def test_hard_point_near_real_axis(ctl_min):
    value = faddeyeva(ComplexPoint(6.3, 1.0e-20), ctl_min)
    assert _rel(value.v, 5.792460778844102e-18) <= 7e-15
    assert _rel(value.l, 9.072765968412736e-2) <= 1e-14

def test_spot_value_near_real_axis(ctl_min):
    value = faddeyeva(ComplexPoint(5.76, 1.0e-20), ctl_min)
    assert _rel(value.v, 3.900779639194697e-15) <= 1e-14

def test_parity_mirrored_point(ctl_min):
    value = faddeyeva(ComplexPoint(-6.3, 1.0e-2), ctl_min)
    assert _rel(value.v, 1.478930389133942e-4) <= 1e-13
    assert _rel(value.l, -9.072741516349275e-2) <= 1e-14



# symmetries and special points

def test_origin(ctl_min):
    assert faddeyeva(ComplexPoint(0.0, 0.0), ctl_min) == FaddeyevaValue(1.0, 0.0)

@pytest.mark.parametrize("y", [0.0, 1.0e-20, 0.3, 5.9, 6.0, 1.0e3, 1.0e20])
def test_pure_imaginary(y, ctl_min):
    assert faddeyeva(ComplexPoint(0.0, y), ctl_min) == FaddeyevaValue(erfcx_real(y), 0.0)

def test_parity(first_quadrant_points, ctl_min):
    for x, y in first_quadrant_points[:500]:
        right = faddeyeva(ComplexPoint(x, y), ctl_min)
        left = faddeyeva(ComplexPoint(-x, y), ctl_min)
        assert left.v == right.v
        assert left.l == -right.l

@pytest.mark.parametrize("tiny", [None, 1.0e-4])
def test_positive_in_first_quadrant(first_quadrant_points, tiny):
    ctl = accuracy_from_tiny(tiny_min() if tiny is None else tiny)
    for x, y in first_quadrant_points:
        value = faddeyeva(ComplexPoint(x, y), ctl)
        assert value.v > 0.0, (x, y)
        assert value.l > 0.0, (x, y)

def test_real_axis_real_part_is_gaussian(ctl_min, eps):
    # x = k / 8 keeps x^2 exact; the reference carries only the libm rounding
    for k in range(1, 201):
        x = k / 8.0
        value = faddeyeva(ComplexPoint(x, 0.0), ctl_min)
        assert _rel(value.v, math.exp(-x * x)) <= 8 * eps, x

def test_large_modulus_asymptote(rng, ctl_min):
    checked = 0
    for x, y in zip(10.0 ** rng.uniform(-2.0, 14.0, 3000), 10.0 ** rng.uniform(0.0, 14.0, 3000), strict=True):
        x, y = float(x), float(y)
        modulus_sq = x * x + y * y
        if modulus_sq < 1.0e8:
            continue
        value = faddeyeva(ComplexPoint(x, y), ctl_min)
        assert abs(value.v - y / (math.sqrt(math.pi) * modulus_sq)) <= 1e-6 * value.v, (x, y)
        assert abs(value.l - x / (math.sqrt(math.pi) * modulus_sq)) <= 1e-6 * value.l, (x, y)
        checked += 1
    assert checked > 2000

def test_large_modulus_guard(ctl_min):
    value = faddeyeva(ComplexPoint(1.0e16, 1.0), ctl_min)
    assert _rel(value.l, 1.0 / (math.sqrt(math.pi) * 1.0e16)) <= 1e-15
    assert _rel(value.v, 1.0 / (math.sqrt(math.pi) * 1.0e32)) <= 1e-15
    value = faddeyeva(ComplexPoint(0.0, 1.0e300), ctl_min)
    assert _rel(value.v, 1.0 / (math.sqrt(math.pi) * 1.0e300)) <= 1e-15

@pytest.mark.parametrize("x", [0.5, 1.0, 3.0, 8.0])
def test_real_axis_imaginary_part_is_dawson(x, ctl_min):
    # L(x, 0) = 2/sqrt(pi) * F(x), the oracle integrates the Dawson integral
    value = faddeyeva(ComplexPoint(x, 0.0), ctl_min)
    reference = oracle_w(ComplexPoint(x, 0.0))
    assert value.l == pytest.approx(reference.l, rel=1e-13, abs=2.0 * reference.est_abs_err)



# lower half-plane

def test_reflection_term():
    re2, im2 = reflection_term(1.0, -2.0)
    expected = 2.0 * cmath.exp(-complex(1.0, -2.0) ** 2)
    assert re2 == pytest.approx(expected.real, rel=1e-14)
    assert im2 == pytest.approx(expected.imag, rel=1e-14)

def test_lower_half_plane(rng, ctl_min):
    for x, y in zip(rng.uniform(-5.0, 5.0, 200), rng.uniform(-3.0, -0.1, 200), strict=True):
        z = complex(float(x), float(y))
        value = faddeyeva(ComplexPoint(z.real, z.imag), ctl_min)
        mirrored = faddeyeva(-z, ctl_min)
        twice_gauss = 2.0 * cmath.exp(-z * z)
        expected = twice_gauss - mirrored
        scale = max(abs(twice_gauss), abs(mirrored))
        assert abs(complex(value) - expected) <= 1e-12 * scale

def test_continuity_across_real_axis(ctl_min):
    above = faddeyeva(ComplexPoint(1.5, 1.0e-12), ctl_min)
    below = faddeyeva(ComplexPoint(1.5, -1.0e-12), ctl_min)
    assert below.v == pytest.approx(above.v, rel=1e-10)
    assert below.l == pytest.approx(above.l, rel=1e-10)

def test_lower_half_plane_overflow(ctl_min):
    with pytest.raises(OverflowDomain):
        faddeyeva(ComplexPoint(1.0, -40.0), ctl_min)
    # y^2 - x^2 = 0, no overflow
    faddeyeva(ComplexPoint(40.0, -40.0), ctl_min)

@pytest.mark.parametrize(("x", "y"), [(1.0e200, -1.0), (2.0e154, -0.5), (-3.0e160, -2.0)])
def test_lower_half_plane_far_out(x, y, ctl_min):
    # exp(y^2 - x^2) underflows, w(z) = -w(-z)
    value = faddeyeva(ComplexPoint(x, y), ctl_min)
    mirrored = faddeyeva(ComplexPoint(-x, -y), ctl_min)
    assert math.isfinite(value.v)
    assert math.isfinite(value.l)
    assert value == FaddeyevaValue(-mirrored.v, -mirrored.l)
    assert _rel(value.l, 1.0 / (math.sqrt(math.pi) * x)) <= 1e-15
    assert reflection_term(x, y) == (0.0, 0.0)

def test_lower_half_plane_overflow_boundary(ctl_min, limits):
    # 2 exp(y^2) exceeds r_max although exp(y^2) does not
    with pytest.raises(OverflowDomain):
        faddeyeva(ComplexPoint(0.0, -math.sqrt(limits.log_r_max - 0.3)), ctl_min)
    with pytest.raises(OverflowDomain):
        faddeyeva(ComplexPoint(0.0, -math.sqrt(limits.log_r_max)), ctl_min)
    value = faddeyeva(ComplexPoint(0.0, -math.sqrt(limits.log_r_max - 1.0)), ctl_min)
    assert math.isfinite(value.v)
    assert value.v > 1.0e307
    assert value.l == 0.0
    assert math.copysign(1.0, value.l) == 1.0

def test_reflection_term_on_imaginary_axis():
    re2, im2 = reflection_term(0.0, -3.0)
    assert re2 == pytest.approx(2.0 * math.exp(9.0), rel=1e-15)
    assert im2 == 0.0
    assert math.copysign(1.0, im2) == 1.0

def test_reflection_term_phase_overflow():
    with pytest.raises(OverflowDomain):
        reflection_term(1.0e200, -1.0e200)

@pytest.mark.parametrize(("x", "y"), [(math.nan, 1.0), (1.0, math.inf), (-math.inf, 0.0)])
def test_invalid_input(x, y, ctl_min):
    with pytest.raises(InvalidInput):
        faddeyeva(ComplexPoint(x, y), ctl_min)
    with pytest.raises(ValueError):
        faddeyeva(complex(x, y), ctl_min)



# dispatch and accuracy levels

def test_complex_dispatch(ctl_min):
    result = faddeyeva(complex(1.0, 1.0), ctl_min)
    assert isinstance(result, complex)
    assert result.real == pytest.approx(0.30474420525691259, rel=1e-14)
    assert result.imag == pytest.approx(0.20821893820283162, rel=1e-14)

@pytest.mark.parametrize("z", [2.0, 2, numpy.float64(2.0), -0.5])
def test_real_dispatch(z, ctl_min):
    result = faddeyeva(z, ctl_min)
    assert isinstance(result, complex)
    assert result == faddeyeva(complex(float(z), 0.0), ctl_min)

def test_array_dispatch_keeps_shape(ctl_min):
    z = numpy.array([[0.0, 1.0 + 1.0j], [6.3 + 1.0e-20j, -1.0 + 0.5j]])
    result = faddeyeva(z, ctl_min)
    assert result.shape == (2, 2)
    assert result.dtype == numpy.complex128
    assert result[0, 0] == 1.0
    assert result[0, 1] == faddeyeva(complex(1.0, 1.0), ctl_min)

def test_evaluate_front_end(ctl_min):
    assert evaluate(1.0 + 1.0j) == faddeyeva(complex(1.0, 1.0), ctl_min)
    values = evaluate([0.0, 1.0j, 2.0])
    assert isinstance(values, numpy.ndarray)
    assert values.shape == (3,)
    assert evaluate(2.0, tiny=1.0e-4) == faddeyeva(complex(2.0, 0.0), accuracy_from_tiny(1.0e-4))

@pytest.mark.parametrize("tiny", [1.0e-12, 1.0e-8, 1.0e-4])
def test_accuracy_follows_tiny(tiny, ctl_min):
    ctl = accuracy_from_tiny(tiny)
    assert isinstance(ctl, AccuracyControl)
    for x, y in [(1.0, 1.0), (6.3, 1.0e-2), (0.063, 10.0), (20.0, 3.0)]:
        reference = faddeyeva(ComplexPoint(x, y), ctl_min)
        value = faddeyeva(ComplexPoint(x, y), ctl)
        assert _rel(value.v, reference.v) <= 1000 * tiny
        assert _rel(value.l, reference.l) <= 1000 * tiny

def test_truncation_error_grows_with_tiny(first_quadrant_points, ctl_min):
    points = first_quadrant_points[:100]
    references = [faddeyeva(ComplexPoint(x, y), ctl_min) for x, y in points]
    previous = 0.0
    for tiny in (1.0e-15, 1.0e-12, 1.0e-10, 1.0e-8, 1.0e-6, 1.0e-4):
        ctl = accuracy_from_tiny(tiny)
        worst = 0.0
        for (x, y), reference in zip(points, references, strict=True):
            value = faddeyeva(ComplexPoint(x, y), ctl)
            worst = max(worst, _rel(value.v, reference.v), _rel(value.l, reference.l))
        assert worst >= previous, tiny
        previous = worst
