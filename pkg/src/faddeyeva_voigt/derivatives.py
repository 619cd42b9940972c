# Faddeyeva function and Voigt functions by truncated exponential series
# partial derivatives

"""
Module provides the first partial derivatives of V and L from an already computed
value of w(z). With w' = -2 z w + 2i / sqrt(pi) the partials follow without another
sum evaluation; L partials are tied to the V partials by the Cauchy-Riemann relations.

Relative accuracy of dv_dx degrades where y L is close to x V; no special path is taken there.
"""


# ruff and mypy per file settings
#
# empty lines
# ruff: noqa: E302, E303

# fmt: off



from dataclasses import dataclass

from faddeyeva_voigt.engine import ComplexPoint, FaddeyevaValue
from faddeyeva_voigt.scalar_kernels import TWO_OVER_SQRT_PI



@dataclass(frozen=True)
class DerivativeSet:
    """
    DerivativeSet - the four first partials of V and L at one point
    """
    dv_dx: float
    dv_dy: float
    dl_dx: float
    dl_dy: float


def derivatives_at(z: ComplexPoint, w: FaddeyevaValue) -> DerivativeSet:
    """
    derivatives_at - partial derivatives of V and L at z

    The value w is taken as given; it has to be w(z) for the result to mean anything.

    Args:
        z (ComplexPoint): evaluation point
        w (FaddeyevaValue): w(z)

    Returns:
        DerivativeSet: dv_dx = 2 (y L - x V), dv_dy = 2 (x L + y V) - 2 / sqrt(pi), dl_dy = dv_dx, dl_dx = -dv_dy
    """
    dv_dx = 2.0 * (z.y * w.l - z.x * w.v)
    dv_dy = 2.0 * (z.x * w.l + z.y * w.v) - TWO_OVER_SQRT_PI
    return DerivativeSet(dv_dx=dv_dx, dv_dy=dv_dy, dl_dx=-dv_dy, dl_dy=dv_dx)
