# Faddeyeva function and Voigt functions by truncated exponential series
# slow reference evaluator

"""
Module provides a slow reference evaluation of w(z) that shares no code path with
the series engine. It is meant as referee for tests and the `verify` command.

Methods:

- segment_quadrature - erfc(-i z) along the path y -> y - i x; the segment integrals
  are taken in the form exp(-t (2x - t)) * (trig) with t = x - s, bounded by 1 on [0, x], and the
  real-axis part erfcx(y) by direct quadrature of exp(-s^2 - 2 y s)
- scaled_linear_path - w = exp(-z^2) + (2 i z / sqrt(pi)) * integral_0^1 exp(-z^2 (1 - t^2)) dt,
  used as self-check of the segment quadrature for moderate |z|
- asymptotic - w ~ i / (sqrt(pi) z) * sum (2k - 1)!! / (2 z^2)^k for |z|^2 >= 1e4

All quadratures use a fixed 20-point Gauss-Legendre rule with adaptive bisection and
compensated (`math.fsum`) accumulation. The reported error estimate is the sum of
the bisection differences plus a rounding floor proportional to the rounding mass, the
integral of a bound of the integrand's evaluation error. Exponents and trig arguments of
large magnitude make that bound much larger than |f|, so acceptance follows the
conditioning of each integrand instead of a fixed relative level.

`oracle_sums_naive` evaluates the five exponential sums literally, with the
exponents formed exactly in rational arithmetic and a fresh exponential per term.
"""


# ruff and mypy per file settings
#
# empty lines
# ruff: noqa: E302, E303
# naming conventions
# ruff: noqa: N802, N806
# others
# ruff: noqa: PLR0913, PLR0914

# fmt: off



from collections.abc import Callable
from dataclasses import dataclass
from fractions import Fraction

import enum
import functools
import logging
import math

import numpy

from faddeyeva_voigt.engine import ComplexPoint, InvalidInput, SumSet
from faddeyeva_voigt.scalar_kernels import ErrorFaddeyeva, platform_limits



logger = logging.getLogger(__name__)



# exception classes
class ConvergenceFailure(ErrorFaddeyeva, ArithmeticError):
    """The quadrature cannot meet the requested error target."""
    pass



# constants
GL_ORDER = 20
MAX_PANELS = 4096

# panels are accepted once the bisection difference is at this multiple of eps * rounding mass
ROUNDING_ACCEPT = 8.0
# eps multiple of the rounding mass added to every error estimate
ROUNDING_FLOOR = 2.0

# exp(-40) is below eps / 50
ERFCX_TAIL_EXPONENT = 40.0

ASYMPTOTIC_MODULUS_SQ = 1.0e4
OSCILLATION_LIMIT = 200.0
ASYMPTOTIC_MAX_TERMS = 60

REL_TARGET = 1.0e-14

_TWO_OVER_SQRT_PI = 2.0 / math.sqrt(math.pi)



class OracleMethod(str, enum.Enum):
    """Reference evaluation methods."""
    SEGMENT_QUADRATURE = "segment_quadrature"
    ASYMPTOTIC = "asymptotic"
    SCALED_LINEAR_PATH = "scaled_linear_path"


@dataclass(frozen=True)
class OracleResult:
    """
    OracleResult - reference value of w(z) with its absolute error estimate
    """
    v: float
    l: float  # noqa: E741
    est_abs_err: float
    method: OracleMethod


@dataclass(frozen=True)
class _Integral:
    value: float
    err: float
    mass: float



# quadrature

@functools.cache
def _gauss_legendre(order: int) -> tuple[tuple[float, ...], tuple[float, ...]]:
    nodes, weights = numpy.polynomial.legendre.leggauss(order)
    return tuple(float(t) for t in nodes), tuple(float(w) for w in weights)


def _panel(
    f: Callable[[float], float], lo: float, hi: float, noise: Callable[[float], float] | None
) -> tuple[float, float]:
    nodes, weights = _gauss_legendre(GL_ORDER)
    half = 0.5 * (hi - lo)
    mid = 0.5 * (hi + lo)
    points = [mid + half * t for t in nodes]
    values = [w * f(s) for s, w in zip(points, weights, strict=True)]
    if noise is None:
        masses = [abs(v) for v in values]
    else:
        masses = [w * noise(s) for s, w in zip(points, weights, strict=True)]
    return half * math.fsum(values), half * math.fsum(masses)


def adaptive_gauss_legendre(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    abs_tol: float = 0.0,
    max_panels: int = MAX_PANELS,
    noise: Callable[[float], float] | None = None,
) -> tuple[float, float, float]:
    """
    adaptive_gauss_legendre - integral of f over [lo, hi] by bisection of Gauss-Legendre panels

    A panel is accepted when its two halves agree with the whole within its share of
    abs_tol or within a few eps of the panel's rounding mass, whichever is larger. The
    rounding mass is the integral of noise(s), a bound of the absolute rounding error of
    f(s) in units of eps; without noise it is the integral of |f|, which only suits
    well-conditioned integrands. With abs_tol = 0 the integration runs to rounding level.

    Args:
        f (Callable[[float], float]): integrand
        lo (float): lower bound
        hi (float): upper bound, hi >= lo
        abs_tol (float, optional): absolute error target. Defaults to 0.0.
        max_panels (int, optional): limit of evaluated panels. Defaults to MAX_PANELS.
        noise (Callable[[float], float] | None, optional): rounding error bound of f. Defaults to |f|.

    Raises:
        ConvergenceFailure: panel limit reached

    Returns:
        tuple[float, float, float]: integral, error estimate, rounding mass
    """
    if hi <= lo:
        return 0.0, 0.0, 0.0
    eps = platform_limits().eps
    width = hi - lo
    whole, _ = _panel(f, lo, hi, noise)
    stack = [(lo, hi, whole)]
    values: list[float] = []
    diffs: list[float] = []
    masses: list[float] = []
    evaluated = 1
    while stack:
        a, b, whole = stack.pop()
        m = 0.5 * (a + b)
        left, left_mass = _panel(f, a, m, noise)
        right, right_mass = _panel(f, m, b, noise)
        evaluated += 2
        diff = abs(whole - (left + right))
        share = abs_tol * (b - a) / width
        if diff <= max(share, ROUNDING_ACCEPT * eps * (left_mass + right_mass)) or not (a < m < b):
            values.extend((left, right))
            diffs.append(diff)
            masses.extend((left_mass, right_mass))
            continue
        if evaluated >= max_panels:
            err_msg = f"quadrature over [{lo!r}, {hi!r}] did not converge within {max_panels} panels"
            raise ConvergenceFailure(err_msg)
        stack.append((m, b, right))
        stack.append((a, m, left))
    total_mass = math.fsum(masses)
    return math.fsum(values), math.fsum(diffs) + ROUNDING_FLOOR * eps * total_mass, total_mass


def _integrate(
    f: Callable[[float], float], lo: float, hi: float, abs_tol: float, noise: Callable[[float], float]
) -> _Integral:
    value, err, mass = adaptive_gauss_legendre(f, lo, hi, abs_tol, noise=noise)
    return _Integral(value, err, mass)


def _erfcx_integral(y: float, abs_tol: float) -> _Integral:
    # int_0^U exp(-u) ds with u = s (s + 2y); node rounding shifts u by eps * s * (2s + 2y)
    upper = ERFCX_TAIL_EXPONENT / (math.sqrt(y * y + ERFCX_TAIL_EXPONENT) + y)

    def noise(s: float) -> float:
        u = s * (s + 2.0 * y)
        return math.exp(-u) * (2.0 + 2.0 * u + 4.0 * s * (s + y))

    part = _integrate(lambda s: math.exp(-s * (s + 2.0 * y)), 0.0, upper, abs_tol, noise)
    # neglected tail int_U^inf exp(-u) ds <= exp(-T) / (2 (U + y))
    tail = math.exp(-ERFCX_TAIL_EXPONENT) / (2.0 * (upper + y))
    return _Integral(part.value, part.err + tail, part.mass)


def erfcx_quadrature(y: float, abs_tol: float = 0.0) -> tuple[float, float]:
    """
    erfcx_quadrature - erfcx(y) = (2 / sqrt(pi)) * integral_0^inf exp(-s^2 - 2 y s) ds for y >= 0

    The integral is cut where s^2 + 2 y s reaches ERFCX_TAIL_EXPONENT, so the neglected tail
    stays below exp(-ERFCX_TAIL_EXPONENT) relative to the integral; its bound is part of the
    error estimate.

    Returns:
        tuple[float, float]: erfcx(y) and its absolute error estimate
    """
    part = _erfcx_integral(y, abs_tol / _TWO_OVER_SQRT_PI)
    return _TWO_OVER_SQRT_PI * part.value, _TWO_OVER_SQRT_PI * part.err



# reference methods

def _segment_quadrature(x: float, y: float, abs_tol: float) -> tuple[float, float, float, float]:
    # w = exp(-2ixy) * [exp(-x^2) erfcx(y) + (2/sqrt(pi)) int_0^x exp(s^2 - x^2) (-sin(2ys) + i cos(2ys)) ds]
    # segment integrals in t = x - s; the exponent -t (2x - t) has no cancellation near t = 0
    tol = abs_tol / 4.0
    head = _erfcx_integral(y, tol / _TWO_OVER_SQRT_PI)
    damp = math.exp(-x * x)

    def noise(t: float) -> float:
        u = t * (2.0 * x - t)
        return math.exp(-u) * (2.0 + 2.0 * u + 4.0 * t * x + 4.0 * x * y)

    i_sin = _integrate(lambda t: math.exp(-t * (2.0 * x - t)) * math.sin(2.0 * y * (x - t)), 0.0, x, tol, noise)
    i_cos = _integrate(lambda t: math.exp(-t * (2.0 * x - t)) * math.cos(2.0 * y * (x - t)), 0.0, x, tol, noise)

    b_re = damp * _TWO_OVER_SQRT_PI * head.value - _TWO_OVER_SQRT_PI * i_sin.value
    b_im = _TWO_OVER_SQRT_PI * i_cos.value
    err_re = _TWO_OVER_SQRT_PI * (damp * head.err + i_sin.err)
    err_im = _TWO_OVER_SQRT_PI * i_cos.err
    mass = _TWO_OVER_SQRT_PI * (damp * head.mass + i_sin.mass + i_cos.mass)

    c = math.cos(2.0 * x * y)
    s = math.sin(2.0 * x * y)
    v = c * b_re + s * b_im
    l = c * b_im - s * b_re  # noqa: E741
    err = max(abs(c) * err_re + abs(s) * err_im, abs(c) * err_im + abs(s) * err_re)
    # trig arguments carry an absolute rounding error of eps * 2xy
    scale = 1.0 + 2.0 * x * y
    err += ROUNDING_FLOOR * platform_limits().eps * (scale - 1.0) * mass
    return v, l, err, scale * mass


def _scaled_linear_path(x: float, y: float, abs_tol: float) -> tuple[float, float, float, float]:
    # w = exp(-z^2) + (2 i z / sqrt(pi)) * int_0^1 exp(-z^2 (1 - t^2)) dt
    q = (x - y) * (x + y)
    r = 2.0 * x * y
    scale = _TWO_OVER_SQRT_PI * max(abs(x), abs(y), 1.0)
    tol = abs_tol / (2.0 * scale)

    def noise(t: float) -> float:
        return math.exp(-q * (1.0 - t * t)) * (2.0 + 4.0 * (abs(q) + abs(r)))

    p_re = _integrate(lambda t: math.exp(-q * (1.0 - t * t)) * math.cos(r * (1.0 - t * t)), 0.0, 1.0, tol, noise)
    p_im = _integrate(lambda t: -math.exp(-q * (1.0 - t * t)) * math.sin(r * (1.0 - t * t)), 0.0, 1.0, tol, noise)

    e = math.exp(-q)
    v = e * math.cos(r) + _TWO_OVER_SQRT_PI * (-y * p_re.value - x * p_im.value)
    l = -e * math.sin(r) + _TWO_OVER_SQRT_PI * (x * p_re.value - y * p_im.value)  # noqa: E741
    mass = e + _TWO_OVER_SQRT_PI * (abs(x) + abs(y)) * (p_re.mass + p_im.mass)
    # exponent and trig arguments carry absolute rounding errors of eps * |q| and eps * |r|
    scale = 1.0 + abs(q) + abs(r)
    err = _TWO_OVER_SQRT_PI * (abs(x) + abs(y)) * (p_re.err + p_im.err)
    err += ROUNDING_FLOOR * platform_limits().eps * (e + (scale - 1.0) * mass)
    return v, l, err, scale * mass


def _asymptotic(x: float, y: float) -> tuple[float, float, float, float]:
    # w ~ i / (sqrt(pi) z) * sum_k (2k - 1)!! / (2 z^2)^k, summed until the terms stop shrinking
    eps = platform_limits().eps
    z = complex(x, y)
    step = 1.0 / (2.0 * z * z)
    term = complex(1.0, 0.0)
    total = term
    last = abs(term)
    for k in range(1, ASYMPTOTIC_MAX_TERMS + 1):
        nxt = term * (2 * k - 1) * step
        if abs(nxt) >= last:
            break
        term = nxt
        total += term
        last = abs(term)
        if last <= eps * abs(total):
            break
    w = 1j / (math.sqrt(math.pi) * z) * total
    prefactor = 1.0 / (math.sqrt(math.pi) * abs(z))
    err = prefactor * last + eps * abs(w)
    return w.real, w.imag, err, abs(w)


def oracle_method(z: ComplexPoint) -> OracleMethod | None:
    """
    oracle_method - automatic method of oracle_w at z, None in the oscillatory region

    Args:
        z (ComplexPoint): evaluation point, y >= 0

    Returns:
        OracleMethod | None: asymptotic expansion for |z|^2 >= 1e4, segment quadrature for |x| * y <= 200
    """
    x = float(z.x)
    y = float(z.y)
    if x * x + y * y >= ASYMPTOTIC_MODULUS_SQ:
        return OracleMethod.ASYMPTOTIC
    if abs(x) * y <= OSCILLATION_LIMIT:
        return OracleMethod.SEGMENT_QUADRATURE
    return None


def _target(v: float, l: float, mass: float, target_abs_err: float | None) -> float:  # noqa: E741
    if target_abs_err is not None:
        return target_abs_err
    limits = platform_limits()
    floor = (ROUNDING_ACCEPT + ROUNDING_FLOOR) * limits.eps * mass
    return REL_TARGET * max(abs(v), abs(l), limits.r_min * 1.0e3) + floor


def oracle_w(
    z: ComplexPoint, target_abs_err: float | None = None, method: OracleMethod | None = None
) -> OracleResult:
    """
    oracle_w - reference value of w(z) in the closed upper half-plane

    Without an explicit method the asymptotic expansion is used for |z|^2 >= 1e4 and the
    segment quadrature for |x| * y <= 200; other points raise ConvergenceFailure.

    Args:
        z (ComplexPoint): evaluation point, y >= 0
        target_abs_err (float | None, optional): absolute error target. Defaults to
            1e-14 * max(|V|, |L|, 1e3 * r_min) plus the rounding floor of the quadrature.
        method (OracleMethod | None, optional): force an evaluation method. Defaults to automatic choice.

    Raises:
        InvalidInput: y < 0 or non-finite coordinates
        ConvergenceFailure: error estimate above target or point outside every method's region

    Returns:
        OracleResult: V, L, error estimate and the method used
    """
    x = float(z.x)
    y = float(z.y)
    if not (math.isfinite(x) and math.isfinite(y)):
        err_msg = f"oracle_w requires finite coordinates, got x={x!r}, y={y!r}"
        raise InvalidInput(err_msg)
    if y < 0.0:
        err_msg = f"oracle_w covers y >= 0 only, got y={y!r}"
        raise InvalidInput(err_msg)

    if method is None:
        method = oracle_method(z)
        if method is None:
            err_msg = f"no oracle method converges at x={x!r}, y={y!r} (oscillatory region |x| * y > {OSCILLATION_LIMIT})"
            raise ConvergenceFailure(err_msg)

    abs_tol = 0.0 if target_abs_err is None else target_abs_err
    ax = abs(x)
    if method is OracleMethod.SEGMENT_QUADRATURE:
        v, l, err, mass = _segment_quadrature(ax, y, abs_tol)  # noqa: E741
    elif method is OracleMethod.SCALED_LINEAR_PATH:
        v, l, err, mass = _scaled_linear_path(ax, y, abs_tol)  # noqa: E741
    else:
        v, l, err, mass = _asymptotic(ax, y)  # noqa: E741
    if x < 0.0:
        l = -l  # noqa: E741

    target = _target(v, l, mass, target_abs_err)
    if err > target:
        err_msg = f"{method.value} estimate {err:.3e} above target {target:.3e} at x={x!r}, y={y!r}"
        raise ConvergenceFailure(err_msg)
    logger.debug("oracle %s at (%r, %r): err=%.3e", method.value, x, y, err)
    return OracleResult(v=v, l=l, est_abs_err=err, method=method)



# literal sums

def _exp_neg_exact(q: Fraction) -> float:
    # exp(-q) for an exact rational q: the rounding remainder of q enters as first-order factor
    hi = float(q)
    return math.exp(-hi) * (1.0 - float(q - Fraction(hi)))


def oracle_sums_naive(x: float, y: float, a: float, n_max: int) -> SumSet:
    """
    oracle_sums_naive - the five exponential sums term by term over n = 1 .. n_max

    Every exponent is formed exactly from the float inputs and every term gets its own
    exponential; terms are added in index order.

    Args:
        x (float): real part, x >= 0
        y (float): imaginary part, y >= 0
        a (float): series parameter
        n_max (int): number of terms, n_max >= 1

    Raises:
        InvalidInput: n_max < 1

    Returns:
        SumSet: s1 ... s5 with n_used = n_max
    """
    if n_max < 1:
        err_msg = f"oracle_sums_naive requires n_max >= 1, got {n_max!r}"
        raise InvalidInput(err_msg)
    fx = Fraction(x)
    fa = Fraction(a)
    fy2 = Fraction(y) ** 2
    s1 = s2 = s3 = s4 = s5 = 0.0
    for n in range(1, n_max + 1):
        k = fa * n
        kf = float(k)
        den = float(k * k + fy2)
        t1 = _exp_neg_exact(k * k + fx * fx) / den
        t2 = _exp_neg_exact((k + fx) ** 2) / den
        t3 = _exp_neg_exact((k - fx) ** 2) / den
        s1 += t1
        s2 += t2
        s3 += t3
        s4 += kf * t2
        s5 += kf * t3
    return SumSet(s1, s2, s3, s4, s5, n_max)
