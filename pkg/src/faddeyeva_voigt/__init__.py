# Faddeyeva function and Voigt functions by truncated exponential series

"""
Package for the Faddeyeva function w(z) = exp(-z^2) erfc(-i z) and the Voigt
functions V = Re w, L = Im w with a user-controlled accuracy parameter tiny

Set of submodules contains:

- submodule with scalar building blocks (platform limits, erfcx, error-free products)
- submodule with the series engine and the symmetry layer for the whole complex plane
- submodule with the analytic partial derivatives of V and L
- submodule with an independent quadrature reference for testing
- submodule with grid sweeps, error summaries, timing and golden value verification
- submodule with the command line interface
"""


# ruff and mypy per file settings
#
# empty lines
# ruff: noqa: E302, E303
# naming conventions
# ruff: noqa: N812
# others
# ruff: noqa: F401

# fmt: off



# version determination - latest import requirement for hatch-vcs-footgun-example
from faddeyeva_voigt.version import __version__

import faddeyeva_voigt.scalar_kernels as ScalarKernels
import faddeyeva_voigt.engine as Engine
import faddeyeva_voigt.derivatives as Derivatives
import faddeyeva_voigt.oracle as Oracle
import faddeyeva_voigt.harness as Harness
import faddeyeva_voigt.cli as CLI
from faddeyeva_voigt.engine import (
    AccuracyControl,
    ComplexPoint,
    FaddeyevaValue,
    accuracy_from_tiny,
    evaluate,
    faddeyeva,
    tiny_min,
)
from faddeyeva_voigt.derivatives import DerivativeSet, derivatives_at
from faddeyeva_voigt.oracle import oracle_w
