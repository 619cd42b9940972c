# Faddeyeva function and Voigt functions by truncated exponential series
# core engine

"""
Module provides the evaluation of the Faddeyeva function

    w(z) = exp(-z^2) * erfc(-i z) = V(x, y) + i L(x, y),    z = x + i y

by the Salzer-type exponential series. The representation of exp(t^2) with
parameter a turns w into erfcx(y) and sinc terms plus five exponential sums
(s1 ... s5) that are truncated at machine level. The accuracy knob `tiny` is the
relative error of that representation, E = 2 exp(-pi^2 / a^2), and doubles as
the convergence threshold of the sums.

Evaluation order:

- accuracy control (`accuracy_from_tiny`) derives a and the loop threshold
- `compute_sums` runs the single loop for x < x_big (one fresh exponential per
  cycle, running products otherwise) or the two-wing peak-centered loop for
  x >= x_big where only s3 and s5 survive
- `assemble_first_quadrant` combines the sums into V and L with the small-x
  sinh form and the y-only bracket as cancellation guards
- `faddeyeva` maps every point of the plane onto the first quadrant by parity
  in x and the reflection w(z) = 2 exp(-z^2) - w(-z) for y < 0

Example / doctest:
```
>>> import faddeyeva_voigt.engine as Engine
>>> ctl = Engine.accuracy_from_tiny(Engine.tiny_min())
>>> Engine.faddeyeva(Engine.ComplexPoint(0.0, 0.0), ctl)
FaddeyevaValue(v=1.0, l=0.0)
>>> round(Engine.faddeyeva(1.0 + 1.0j, ctl).real, 12)
0.304744205257
```
"""


# ruff and mypy per file settings
#
# empty lines
# ruff: noqa: E302, E303
# naming conventions
# ruff: noqa: N802, N806
# others
# ruff: noqa: PLR0914, PLR0915, PLR0917
#
# disable mypy errors
# - mypy error "Name 'faddeyeva' already defined" for multimethod overloads
# mypy: disable-error-code = "no-redef"

# fmt: off



from dataclasses import dataclass

import functools
import logging
import math

import multimethod
import numpy

from faddeyeva_voigt.scalar_kernels import (
    ErrorFaddeyeva,
    PlatformLimits,
    erfcx_real,
    exp_neg_product,
    exp_neg_square,
    platform_limits,
    sinc_safe,
    two_product,
)



logger = logging.getLogger(__name__)



# exception classes
class InvalidInput(ErrorFaddeyeva, ValueError):
    """Non-finite coordinate at the API boundary."""
    pass

class OverflowDomain(ErrorFaddeyeva, ArithmeticError):
    """Lower half-plane point where exp(y^2 - x^2) exceeds the largest float."""
    pass

class LoopCapExceeded(ErrorFaddeyeva, RuntimeError):
    """The sum loop ran into its hard cycle cap; never a silent wrong answer."""
    pass

class ContractViolation(ErrorFaddeyeva, ValueError):
    """Truncation index requested outside the range x < x_big."""
    pass



# constants
TINY_MAX = 1.0e-4

# small-x path of the odd sum difference and validity bound of its 3-term sinh
SINH_X_MAX = 5.0e-4
SINH_ARG_MAX = 1.0e-2

# the y-only bracket of the imaginary part is zero to machine accuracy from here on
BRACKET_ZERO_Y = 5.0

# beyond this modulus the index spacing of the sums and y^2 are not representable
LARGE_MODULUS = 1.0e15

BRACKET_MAX_TERMS = 1000



# data classes

@dataclass(frozen=True)
class ComplexPoint:
    """
    ComplexPoint - evaluation point z = x + i y
    """
    x: float
    y: float

    @classmethod
    def from_complex(cls, z: complex) -> "ComplexPoint":
        return cls(float(z.real), float(z.imag))

    def __complex__(self) -> complex:
        return complex(self.x, self.y)


@dataclass(frozen=True)
class FaddeyevaValue:
    """
    FaddeyevaValue - w(z) split into V = Re w and L = Im w
    """
    v: float
    l: float  # noqa: E741

    def __complex__(self) -> complex:
        return complex(self.v, self.l)


@dataclass(frozen=True)
class AccuracyControl:
    """
    AccuracyControl - accuracy settings derived from the user parameter tiny

    Attributes:
        tiny_requested: value passed by the caller
        tiny_effective: tiny clamped to [tiny_min, TINY_MAX]
        a: series parameter, a = pi / sqrt(ln(2 / tiny_effective))
        conv_tol: max(tiny_effective, eps), relative increment that ends a sum
        clamped: True if tiny_requested was outside the admissible range
    """
    tiny_requested: float
    tiny_effective: float
    a: float
    conv_tol: float
    clamped: bool


@dataclass(frozen=True)
class SumSet:
    """
    SumSet - the five truncated exponential sums at one point, k = a * n

    - s1 = sum exp(-(k^2 + x^2)) / (k^2 + y^2)
    - s2 = sum exp(-(k + x)^2) / (k^2 + y^2)
    - s3 = sum exp(-(k - x)^2) / (k^2 + y^2)
    - s4 = sum k * exp(-(k + x)^2) / (k^2 + y^2)
    - s5 = sum k * exp(-(k - x)^2) / (k^2 + y^2)

    odd_part holds (s5 - s4) / 2 evaluated through sinh(2 k x) on the small-x
    path, None otherwise.
    """
    s1: float
    s2: float
    s3: float
    s4: float
    s5: float
    n_used: int
    odd_part: float | None = None



# accuracy control

def salzer_error(a: float) -> float:
    """
    salzer_error - relative error E = 2 exp(-pi^2 / a^2) of the exp(t^2) series with parameter a

    Args:
        a (float): series parameter, 0 < a <= 1

    Returns:
        float: error magnitude E
    """
    return 2.0 * math.exp(-(math.pi * math.pi) / (a * a))


def salzer_parameter(tiny: float) -> float:
    """Series parameter a for the error target tiny, inverse of salzer_error."""
    return math.pi / math.sqrt(math.log(2.0 / tiny))


def tiny_min(limits: PlatformLimits | None = None) -> float:
    """
    tiny_min - smallest useful tiny of the working precision

    2 exp(-pi^2 / 0.25) (a = 1/2) for 16-digit floats, 2 exp(-pi^2 / 0.36^2) for
    precisions beyond 30 digits and 0.06447 * eps in between.

    Args:
        limits (PlatformLimits | None, optional): platform limits. Defaults to the running platform.

    Returns:
        float: lower clamp bound of tiny
    """
    limits = limits or platform_limits()
    if limits.eps >= 1.0e-17:
        return salzer_error(0.5)
    if limits.eps < 1.0e-30:
        return salzer_error(0.36)
    return 0.06447 * limits.eps


def accuracy_from_tiny(tiny: float, limits: PlatformLimits | None = None) -> AccuracyControl:
    """
    accuracy_from_tiny - derive the accuracy control from the user parameter tiny

    Values outside [tiny_min, TINY_MAX] (including non-finite and non-positive ones)
    are clamped; the clamp is reported through the `clamped` flag and a logged warning.

    Args:
        tiny (float): requested relative accuracy
        limits (PlatformLimits | None, optional): platform limits. Defaults to the running platform.

    Returns:
        AccuracyControl: effective accuracy settings
    """
    limits = limits or platform_limits()
    lower = tiny_min(limits)
    if math.isnan(tiny) or tiny < lower:
        tiny_effective = lower
    elif tiny > TINY_MAX:
        tiny_effective = TINY_MAX
    else:
        tiny_effective = tiny
    clamped = tiny_effective != tiny
    if clamped:
        logger.warning("tiny=%r outside [%r, %r], reset to %r", tiny, lower, TINY_MAX, tiny_effective)
    return AccuracyControl(
        tiny_requested=tiny,
        tiny_effective=tiny_effective,
        a=salzer_parameter(tiny_effective),
        conv_tol=max(tiny_effective, limits.eps),
        clamped=clamped,
    )



# truncation indices

def n_cut_sigma1(a: float, x: float, limits: PlatformLimits | None = None) -> int:
    """
    n_cut_sigma1 - last index whose s1 exponential exp(-(k^2 + x^2)) can reach r_min

    Args:
        a (float): series parameter
        x (float): non-negative real part, x < x_big
        limits (PlatformLimits | None, optional): platform limits. Defaults to the running platform.

    Raises:
        ContractViolation: x >= x_big

    Returns:
        int: ceil(sqrt(-ln(r_min) - x^2) / a)
    """
    limits = limits or platform_limits()
    if x >= limits.x_big:
        err_msg = f"n_cut_sigma1 requires x < x_big={limits.x_big!r}, got {x!r}"
        raise ContractViolation(err_msg)
    return math.ceil(math.sqrt(max(0.0, -limits.log_r_min - x * x)) / a)


def n_cut_sigma24(a: float, x: float, limits: PlatformLimits | None = None) -> int:
    """
    n_cut_sigma24 - last index whose s2/s4 exponential exp(-(k + x)^2) can reach r_min

    Args:
        a (float): series parameter
        x (float): non-negative real part, x < x_big
        limits (PlatformLimits | None, optional): platform limits. Defaults to the running platform.

    Raises:
        ContractViolation: x >= x_big

    Returns:
        int: ceil((sqrt(-ln(r_min)) - x) / a)
    """
    limits = limits or platform_limits()
    if x >= limits.x_big:
        err_msg = f"n_cut_sigma24 requires x < x_big={limits.x_big!r}, got {x!r}"
        raise ContractViolation(err_msg)
    return math.ceil((limits.x_big - x) / a)


def loop_cap(a: float, x: float, limits: PlatformLimits | None = None) -> int:
    """Hard cycle cap of the sum loop."""
    limits = limits or platform_limits()
    two_wing_cap = math.ceil(4.0 * limits.x_big / a) + 64
    if x < limits.x_big:
        return max(2 * (n_cut_sigma1(a, x, limits) + 1), two_wing_cap)
    return two_wing_cap


def _peak_offset(a: float, x: float) -> tuple[int, float]:
    # peak index n0 = ceil(x / a) (at least 1) and d0 = a * n0 - x without
    # the cancellation of the rounded product
    n0 = max(1, math.ceil(x / a))
    p, err = two_product(a, float(n0))
    return n0, (p - x) + err


def _sinh_small(u: float) -> float:
    if u <= SINH_ARG_MAX:
        u2 = u * u
        return u * (1.0 + u2 / 6.0 * (1.0 + u2 / 20.0))
    return math.sinh(u)



# sums

def _sums_single_loop(x: float, y: float, ctl: AccuracyControl, limits: PlatformLimits) -> SumSet:
    # x < x_big: one loop over n; s1, s2, s4 from exp(-k^2) times hoisted
    # exp(-x^2) and running powers of exp(-2 a x); s3, s5 either at the same
    # index (peak at n0 = 1) or two-wing around n0
    a = ctl.a
    tol = ctl.conv_tol
    y2 = y * y
    n_cut1 = n_cut_sigma1(a, x, limits)
    n_cut24 = n_cut_sigma24(a, x, limits)
    cap = loop_cap(a, x, limits)

    ex2 = exp_neg_square(x)
    em2ax = exp_neg_product(2.0 * a, x)
    n0, d0 = _peak_offset(a, x)
    two_wing = n0 > 1
    sinh_path = x <= SINH_X_MAX

    if two_wing:
        right = exp_neg_square(d0)
        right_ratio = math.exp(-a * (2.0 * d0 + a))
        ratio_step = exp_neg_product(2.0 * a, a)
        c = a * (2.0 * d0 - a)
        left_mult = math.exp(c)
        left_step = math.exp(2.0 * c)
    else:
        ep2ax = exp_neg_product(-2.0 * a, x)
        pp = 1.0

    s1 = s2 = s3 = s4 = s5 = 0.0
    odd = 0.0
    pm = 1.0
    active1 = active24 = active35 = True
    n = 0
    while active1 or active24 or active35:
        n += 1
        if n > cap:
            err_msg = f"sum loop exceeded {cap} cycles at x={x!r}, y={y!r}, a={a!r}"
            raise LoopCapExceeded(err_msg)
        k = a * n
        den = k * k + y2
        # the one exponential of the cycle
        gx = exp_neg_square(k) * ex2
        pm *= em2ax

        if active1:
            t1 = gx / den
            s1 += t1
            if n >= n_cut1 or t1 <= tol * s1:
                active1 = False

        if active24:
            t2 = gx * pm / den
            t4 = k * t2
            s2 += t2
            s4 += t4
            if n >= n_cut24 or (t2 <= tol * s2 and t4 <= tol * s4):
                active24 = False

        if active35:
            if two_wing:
                k_r = a * (n0 + n - 1)
                den_r = k_r * k_r + y2
                t3 = right / den_r
                t5 = k_r * t3
                m_l = n0 - n
                if m_l >= 1:
                    left = right * left_mult
                    k_l = a * m_l
                    t3_l = left / (k_l * k_l + y2)
                    t3 += t3_l
                    t5 += k_l * t3_l
                    left_mult *= left_step
                right *= right_ratio
                right_ratio *= ratio_step
            else:
                pp *= ep2ax
                t3 = gx * pp / den
                t5 = k * t3
            s3 += t3
            s5 += t5
            converged = t3 <= tol * s3 and t5 <= tol * s5
            if sinh_path:
                t_odd = k * gx * _sinh_small(2.0 * k * x) / den
                odd += t_odd
                converged = converged and t_odd <= tol * odd
            if converged:
                active35 = False

    return SumSet(s1, s2, s3, s4, s5, n, odd if sinh_path else None)


def _sums_two_wing(x: float, y: float, ctl: AccuracyControl, limits: PlatformLimits) -> SumSet:
    # x >= x_big: s1, s2, s4 are machine-truncated; s3 and s5 march outward from
    # the peak, one exponential per wing with the exponent formed from the
    # exactly split offset d0
    a = ctl.a
    tol = ctl.conv_tol
    y2 = y * y
    cap = loop_cap(a, x, limits)
    n0, d0 = _peak_offset(a, x)
    floor = limits.log_r_min

    s3 = s5 = 0.0
    right_alive = True
    n = 0
    while True:
        n += 1
        if n > cap:
            err_msg = f"two-wing loop exceeded {cap} cycles at x={x!r}, y={y!r}, a={a!r}"
            raise LoopCapExceeded(err_msg)
        t3 = t5 = 0.0
        if right_alive:
            d_r = d0 + a * (n - 1)
            expo = -(d_r * d_r)
            if expo >= floor:
                k_r = a * (n0 + n - 1)
                t = math.exp(expo) / (k_r * k_r + y2)
                t3 += t
                t5 += k_r * t
            else:
                right_alive = False
        m_l = n0 - n
        left_alive = m_l >= 1
        if left_alive:
            d_l = d0 - a * n
            expo = -(d_l * d_l)
            if expo >= floor:
                k_l = a * m_l
                t = math.exp(expo) / (k_l * k_l + y2)
                t3 += t
                t5 += k_l * t
            else:
                left_alive = False
        s3 += t3
        s5 += t5
        if not (right_alive or left_alive):
            break
        if t3 <= tol * s3 and t5 <= tol * s5:
            break

    return SumSet(0.0, 0.0, s3, 0.0, s5, n)


def compute_sums(x: float, y: float, ctl: AccuracyControl, limits: PlatformLimits | None = None) -> SumSet:
    """
    compute_sums - truncated sums s1 ... s5 at a first-quadrant point

    Args:
        x (float): real part, x >= 0
        y (float): imaginary part, y >= 0
        ctl (AccuracyControl): accuracy control
        limits (PlatformLimits | None, optional): platform limits. Defaults to the running platform.

    Returns:
        SumSet: the sums and the number of loop cycles used
    """
    limits = limits or platform_limits()
    if x < limits.x_big:
        return _sums_single_loop(x, y, ctl, limits)
    return _sums_two_wing(x, y, ctl, limits)



# assembly

def bracket_series(y: float, a: float, conv_tol: float) -> float:
    """
    bracket_series - y-only factor of the first three imaginary-part terms

        -erfcx(y) + a / (y pi) * (1 + 2 * sum exp(-a^2 n^2) / (1 + a^2 n^2 / y^2))

    Args:
        y (float): imaginary part, y >= r_min
        a (float): series parameter
        conv_tol (float): relative increment that ends the sum

    Returns:
        float: bracket value
    """
    total = 0.0
    for n in range(1, BRACKET_MAX_TERMS + 1):
        k = a * n
        ratio = k / y
        term = exp_neg_square(k) / (1.0 + ratio * ratio)
        total += term
        if term <= conv_tol * total:
            break
    return -erfcx_real(y) + a / (y * math.pi) * (1.0 + 2.0 * total)


@functools.lru_cache(maxsize=512)
def imaginary_bracket(y: float, a: float, conv_tol: float) -> float:
    """bracket_series, taken as exactly zero for y >= BRACKET_ZERO_Y; cached per (y, a, conv_tol)."""
    if y >= BRACKET_ZERO_Y:
        return 0.0
    return bracket_series(y, a, conv_tol)


def assemble_first_quadrant(
    x: float, y: float, ctl: AccuracyControl, sums: SumSet, limits: PlatformLimits | None = None
) -> FaddeyevaValue:
    """
    assemble_first_quadrant - combine erfcx, sinc terms and the sums into V and L

    Args:
        x (float): real part, x > 0
        y (float): imaginary part, y >= 0
        ctl (AccuracyControl): accuracy control used for the sums
        sums (SumSet): sums from compute_sums at (x, y)
        limits (PlatformLimits | None, optional): platform limits. Defaults to the running platform.

    Returns:
        FaddeyevaValue: w(x + i y)
    """
    limits = limits or platform_limits()
    a = ctl.a
    two_a_pi = 2.0 * a / math.pi
    xy = x * y
    cos2 = math.cos(2.0 * xy)
    sin2 = math.sin(2.0 * xy)

    # exp(-x^2) only ever enters as a factor of companion terms
    ex2 = exp_neg_square(x) if x < limits.x_big else 0.0
    exy = erfcx_real(y)

    v = (
        ex2 * exy * cos2
        + two_a_pi * x * ex2 * math.sin(xy) * sinc_safe(xy)
        + two_a_pi * (-y * cos2 * sums.s1 + 0.5 * y * sums.s2 + 0.5 * y * sums.s3)
    )

    odd = sums.odd_part if sums.odd_part is not None else 0.5 * (sums.s5 - sums.s4)
    if ex2 == 0.0:
        head = 0.0
    elif y >= limits.r_min:
        head = imaginary_bracket(y, a, ctl.conv_tol) * sin2 * ex2
    else:
        head = -ex2 * exy * sin2 + two_a_pi * x * ex2 * sinc_safe(2.0 * xy) + two_a_pi * y * sin2 * sums.s1
    l = head + two_a_pi * odd  # noqa: E741

    return FaddeyevaValue(v, l)



# symmetry layer

def reflection_term(x: float, y: float, limits: PlatformLimits | None = None) -> tuple[float, float]:
    """
    reflection_term - 2 exp(-z^2) split into real and imaginary part

    Returns exact zeros where exp(y^2 - x^2) drops below r_min; the imaginary part is
    exactly 0 on the imaginary axis.

    Args:
        x (float): real part
        y (float): imaginary part
        limits (PlatformLimits | None, optional): floating-point limits. Defaults to platform_limits().

    Raises:
        OverflowDomain: a component exceeds r_max or the phase 2xy is not representable

    Returns:
        tuple[float, float]: (2 exp(y^2 - x^2) cos(2xy), -2 exp(y^2 - x^2) sin(2xy))
    """
    limits = limits or platform_limits()
    ax = abs(x)
    ay = abs(y)
    # x^2 - y^2, may be inf for huge |x|
    if (ax - ay) * (ax + ay) >= -limits.log_r_min:
        return 0.0, 0.0
    phase = 2.0 * x * y
    if not math.isfinite(phase):
        err_msg = f"phase 2xy of exp(-z^2) overflows at x={x!r}, y={y!r}"
        raise OverflowDomain(err_msg)
    try:
        gauss = exp_neg_product(ax - ay, ax + ay)
    except OverflowError as e:
        err_msg = f"exp(y^2 - x^2) overflows at x={x!r}, y={y!r}"
        raise OverflowDomain(err_msg) from e
    re2 = gauss * (2.0 * math.cos(phase))
    im2 = 0.0 if x == 0.0 else -(gauss * (2.0 * math.sin(phase)))
    if not (math.isfinite(re2) and math.isfinite(im2)):
        err_msg = f"2 exp(-z^2) overflows at x={x!r}, y={y!r}"
        raise OverflowDomain(err_msg)
    return re2, im2


def _large_modulus(x: float, y: float) -> FaddeyevaValue:
    # w = i / (sqrt(pi) z), scaled against overflow of |z|^2
    s = max(x, y)
    xs = x / s
    ys = y / s
    d = xs * xs + ys * ys
    scale = 1.0 / (math.sqrt(math.pi) * s)
    return FaddeyevaValue(ys / d * scale, xs / d * scale)


def _upper_half_plane(x: float, y: float, ctl: AccuracyControl, limits: PlatformLimits) -> FaddeyevaValue:
    ax = abs(x)
    if ax < limits.r_min:
        value = FaddeyevaValue(erfcx_real(y), 0.0)
    elif max(ax, y) >= LARGE_MODULUS:
        value = _large_modulus(ax, y)
    else:
        sums = compute_sums(ax, y, ctl, limits)
        value = assemble_first_quadrant(ax, y, ctl, sums, limits)
    if x < 0.0:
        return FaddeyevaValue(value.v, -value.l)
    return value


def _faddeyeva_point(x: float, y: float, ctl: AccuracyControl, limits: PlatformLimits) -> FaddeyevaValue:
    if not (math.isfinite(x) and math.isfinite(y)):
        err_msg = f"non-finite evaluation point x={x!r}, y={y!r}"
        raise InvalidInput(err_msg)
    if y >= 0.0:
        return _upper_half_plane(x, y, ctl, limits)
    ax = abs(x)
    if (-y - ax) * (-y + ax) > limits.log_r_max:
        err_msg = f"exp(y^2 - x^2) overflows at x={x!r}, y={y!r}"
        raise OverflowDomain(err_msg)
    mirrored = _upper_half_plane(-x, -y, ctl, limits)
    re2, im2 = reflection_term(x, y, limits)
    return FaddeyevaValue(re2 - mirrored.v, im2 - mirrored.l)



# public entry, dispatched on the type of z

@multimethod.multimethod
def faddeyeva(z: ComplexPoint, ctl: AccuracyControl) -> FaddeyevaValue:
    """
    faddeyeva - w(z) anywhere in the complex plane

    Overloads:
        faddeyeva(ComplexPoint, AccuracyControl) -> FaddeyevaValue
        faddeyeva(complex, AccuracyControl) -> complex
        faddeyeva(float | int, AccuracyControl) -> complex, real axis
        faddeyeva(numpy.ndarray, AccuracyControl) -> numpy.ndarray of complex, same shape

    Raises:
        InvalidInput: non-finite x or y
        OverflowDomain: y < 0 and 2 exp(y^2 - x^2) cos or sin part exceeds r_max
    """
    return _faddeyeva_point(float(z.x), float(z.y), ctl, platform_limits())

@multimethod.multimethod
def faddeyeva(z: complex, ctl: AccuracyControl) -> complex:  # noqa: F811
    value = _faddeyeva_point(float(z.real), float(z.imag), ctl, platform_limits())
    return complex(value.v, value.l)

@multimethod.multimethod
def faddeyeva(z: float, ctl: AccuracyControl) -> complex:  # noqa: F811
    return faddeyeva(complex(z, 0.0), ctl)

@multimethod.multimethod
def faddeyeva(z: int, ctl: AccuracyControl) -> complex:  # noqa: F811
    return faddeyeva(complex(float(z), 0.0), ctl)

@multimethod.multimethod
def faddeyeva(z: numpy.ndarray, ctl: AccuracyControl) -> numpy.ndarray:  # noqa: F811
    points = numpy.asarray(z, dtype=complex)
    limits = platform_limits()
    result = numpy.empty(points.shape, dtype=complex)
    for idx, zi in numpy.ndenumerate(points):
        value = _faddeyeva_point(float(zi.real), float(zi.imag), ctl, limits)
        result[idx] = complex(value.v, value.l)
    return result


def evaluate(z: complex | numpy.ndarray | list | tuple, tiny: float | None = None) -> complex | numpy.ndarray:
    """
    evaluate - convenience front end taking tiny instead of an AccuracyControl

    Args:
        z (complex | numpy.ndarray | list | tuple): scalar or array of evaluation points
        tiny (float | None, optional): accuracy parameter. Defaults to tiny_min.

    Returns:
        complex | numpy.ndarray: w(z), an array of the input shape for array input
    """
    ctl = accuracy_from_tiny(tiny_min() if tiny is None else tiny)
    if isinstance(z, (numpy.ndarray, list, tuple)):
        return faddeyeva(numpy.asarray(z, dtype=complex), ctl)
    return faddeyeva(complex(z), ctl)
