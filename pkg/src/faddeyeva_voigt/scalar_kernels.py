# Faddeyeva function and Voigt functions by truncated exponential series
# scalar building blocks

"""
Module provides the scalar building blocks of the Faddeyeva engine:

- the floating-point limits of the working precision (`PlatformLimits`)
- the real scaled complementary error function erfcx(y) = exp(y^2) * erfc(y)
- the singularity-safe ratio sin(u) / u
- error-free products and exponentials of exactly split squares

Example / doctest:
```
>>> from faddeyeva_voigt.scalar_kernels import erfcx_real, sinc_safe, platform_limits
>>> erfcx_real(0.0)
1.0
>>> sinc_safe(0.0)
1.0
>>> round(platform_limits().x_big, 3)
26.616
```
"""


# ruff and mypy per file settings
#
# empty lines
# ruff: noqa: E302, E303
# naming conventions
# ruff: noqa: N802, N806

# fmt: off



from dataclasses import dataclass

import functools
import logging
import math
import sys



logger = logging.getLogger(__name__)



# exception classes
class ErrorFaddeyeva(Exception):
    """Base class of all errors raised by the package."""
    pass

class ErfcxDomainError(ErrorFaddeyeva, ValueError):
    """erfcx_real called with a negative or non-finite argument."""
    pass



# constants
SQRT_PI = math.sqrt(math.pi)
TWO_OVER_SQRT_PI = 2.0 / SQRT_PI

# Veltkamp splitting constant 2^27 + 1 for 53 bit mantissas
SPLITTER = 134217729.0
SPLIT_LIMIT = 2.0 ** 996
SPLIT_DOWN = 2.0 ** -28
SPLIT_UP = 2.0 ** 28

# seam between the erfc based branch and the continued fraction
ERFCX_Y_SWITCH = 6.0
ERFCX_CF_MAX_TERMS = 500



@dataclass(frozen=True)
class PlatformLimits:
    """
    PlatformLimits - floating-point limits of the working precision

    Attributes:
        eps: relative accuracy of the working precision
        r_min: smallest positive normal number
        r_max: largest finite number
        x_big: sqrt(-ln(r_min)), beyond it exp(-x^2) underflows
        log_r_max: ln(r_max), bound of the lower half-plane reflection
        log_r_min: ln(r_min)
    """
    eps: float
    r_min: float
    r_max: float
    x_big: float
    log_r_max: float
    log_r_min: float


@functools.cache
def platform_limits() -> PlatformLimits:
    """
    platform_limits - limits of the running interpreter's float type, captured once

    Returns:
        PlatformLimits: immutable limits record
    """
    info = sys.float_info
    log_r_min = math.log(info.min)
    limits = PlatformLimits(
        eps=info.epsilon,
        r_min=info.min,
        r_max=info.max,
        x_big=math.sqrt(-log_r_min),
        log_r_max=math.log(info.max),
        log_r_min=log_r_min,
    )
    logger.debug("platform limits: %s", limits)
    return limits



# error-free transformations

def split(a: float) -> tuple[float, float]:
    """Veltkamp split of a into two halves with at most 26 significant bits each."""
    if not math.isfinite(a):
        return a, 0.0
    if abs(a) > SPLIT_LIMIT:
        # SPLITTER * a would overflow; power of two scaling is exact
        hi, lo = split(a * SPLIT_DOWN)
        return hi * SPLIT_UP, lo * SPLIT_UP
    c = SPLITTER * a
    hi = c - (c - a)
    return hi, a - hi


def two_product(a: float, b: float) -> tuple[float, float]:
    """
    two_product - Dekker product, a * b = p + err exactly

    Exact as long as the partial products neither overflow nor underflow; an overflowing
    product is returned with error 0.

    Args:
        a (float): first factor
        b (float): second factor

    Returns:
        tuple[float, float]: rounded product and its rounding error
    """
    p = a * b
    if not math.isfinite(p):
        return p, 0.0
    a_hi, a_lo = split(a)
    b_hi, b_lo = split(b)
    err = ((a_hi * b_hi - p) + a_hi * b_lo + a_lo * b_hi) + a_lo * b_lo
    return p, err


def exp_neg_product(a: float, b: float) -> float:
    """
    exp_neg_product - exp(-a * b) with the product split exactly before exponentiation

    The rounding error of a * b would otherwise enter the result as a relative
    error of |a * b| * eps.

    Args:
        a (float): first factor
        b (float): second factor

    Returns:
        float: exp(-a * b)
    """
    p, err = two_product(a, b)
    return math.exp(-p) * (1.0 - err)


def exp_neg_square(u: float) -> float:
    """exp(-u^2) with the square split exactly."""
    return exp_neg_product(u, u)



# scalar kernels

def sinc_safe(u: float) -> float:
    """
    sinc_safe - sin(u) / u with the removable singularity filled in

    Args:
        u (float): finite argument

    Returns:
        float: sin(u) / u, exactly 1.0 for u == 0
    """
    if u == 0.0:
        return 1.0
    return math.sin(u) / u


def _erfcx_continued_fraction(y: float) -> float:
    # Laplace continued fraction of erfc, modified Lentz evaluation:
    # erfcx(y) = 1 / (sqrt(pi) * (y + (1/2) / (y + 1 / (y + (3/2) / (y + ...)))))
    floor = 1.0e-300
    eps = platform_limits().eps
    f = y
    C = f
    D = 0.0
    for k in range(1, ERFCX_CF_MAX_TERMS + 1):
        a_k = 0.5 * k
        D = y + a_k * D
        if D == 0.0:
            D = floor
        D = 1.0 / D
        C = y + a_k / C
        if C == 0.0:
            C = floor
        delta = C * D
        f *= delta
        if abs(delta - 1.0) < eps:
            return 1.0 / (SQRT_PI * f)
    err_msg = f"erfcx continued fraction did not converge for y={y!r}"
    raise ErrorFaddeyeva(err_msg)


def erfcx_real(y: float) -> float:
    """
    erfcx_real - scaled complementary error function exp(y^2) * erfc(y) for y >= 0

    Below ERFCX_Y_SWITCH the value is erfc(y) * exp(y^2) with y^2 split exactly
    into p + e, so exp(y^2) = exp(p) * (1 + e) to working precision. From the seam
    on the Laplace continued fraction is used, which cannot overflow and decays
    like 1 / (y * sqrt(pi)).

    Args:
        y (float): finite non-negative argument

    Raises:
        ErfcxDomainError: y negative or not finite

    Returns:
        float: erfcx(y) in (0, 1]
    """
    if not math.isfinite(y) or y < 0.0:
        err_msg = f"erfcx_real requires a finite non-negative argument, got {y!r}"
        raise ErfcxDomainError(err_msg)
    if y < ERFCX_Y_SWITCH:
        p, e = two_product(y, y)
        return math.erfc(y) * math.exp(p) * (1.0 + e)
    return _erfcx_continued_fraction(y)
