# Faddeyeva function and Voigt functions by truncated exponential series
# command line interface

"""
Module provides the command line interface

    faddeyeva-voigt eval X Y [--tiny T] [--derivatives]
    faddeyeva-voigt grid [--grid G | --full-paper-grid] [--tiny T] [--out FILE]
    faddeyeva-voigt compare [--grid G | --full-paper-grid] [--tiny T] [--reference {tiny_min,oracle}]
    faddeyeva-voigt bench [--grid G | --full-paper-grid] [--tiny T ...] [--repeats N] [--parallel W]
    faddeyeva-voigt verify [--no-oracle]

Every subcommand has a typed parameter class (TAP). A runner logs the raw call
arguments (utils_mystuff), parses them, logs the parameters and executes the injected
main routine.
Results are printed as `key=value` lines, tables additionally in readable form.
Negative coordinates in exponent notation need a `--` separator: `eval -- -1e-2 1`.

Exit codes: 0 success, 1 verification failure or other evaluation error, 2 usage error
or invalid input, 3 lower half-plane overflow, 4 file I/O error.
"""


# ruff and mypy per file settings
#
# empty lines
# ruff: noqa: E302, E303
# naming conventions
# ruff: noqa: N802, N806
# boolean-type arguments
# ruff: noqa: FBT001, FBT002
# print is the output channel of the command line interface
# ruff: noqa: T201

# fmt: off



from collections.abc import Callable
from typing import Literal

import logging
import sys

from tap import Tap as TypedArgParse

import utils_mystuff as Utils

from faddeyeva_voigt.derivatives import derivatives_at
from faddeyeva_voigt.engine import (
    ComplexPoint,
    InvalidInput,
    OverflowDomain,
    accuracy_from_tiny,
    faddeyeva,
    tiny_min,
)
from faddeyeva_voigt.harness import (
    DESK_GRID,
    REFERENCE_TINY_MIN,
    ErrorHarness,
    GridSpec,
    bench,
    compare,
    evaluate_grid,
    verify,
    write_grid_csv,
)
from faddeyeva_voigt.scalar_kernels import ErfcxDomainError, ErrorFaddeyeva
from faddeyeva_voigt.version import __version__



# exit codes
EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_OVERFLOW = 3
EXIT_IO = 4

BENCH_TINY_DEFAULTS = (1.0e-8, 1.0e-4)



# TAP parameter classes

# ... base class with flag for verbose logging
class ParamsClassBase(TypedArgParse):
    """
    ParamsClassBase - argument parser base class of all subcommands
    """
    verbose: bool = False  # log call arguments, parameters and progress

# ... with grid selection
class ParamsClassGrid(ParamsClassBase):
    """
    ParamsClassGrid - extended ParamsClassBase with grid definition
    """
    grid: str = DESK_GRID  # xstart:xstop:xcount,yexpstart:yexpstop:ycount
    full_paper_grid: bool = False  # use the 40001 x 71 point grid of the published experiment instead of --grid

    def grid_spec(self) -> GridSpec:
        if self.full_paper_grid:
            return GridSpec.full_paper()
        return GridSpec.parse(self.grid)

class ParamsClassEval(ParamsClassBase):
    """
    ParamsClassEval - single point evaluation
    """
    x: float  # real part of z
    y: float  # imaginary part of z
    tiny: float | None = None  # accuracy parameter, default tiny_min
    derivatives: bool = False  # print the four first partial derivatives as well

    def configure(self):  # docsig: disable=SIG101
        self.add_argument("x")
        self.add_argument("y")

class ParamsClassGridSweep(ParamsClassGrid):
    """
    ParamsClassGridSweep - grid sweep written as comma-separated text
    """
    tiny: float | None = None  # accuracy parameter, default tiny_min
    out: str | None = None  # output file, default standard output

class ParamsClassCompare(ParamsClassGrid):
    """
    ParamsClassCompare - error summary of a tiny setting against a reference
    """
    tiny: float | None = None  # accuracy parameter under test, default tiny_min
    reference: Literal["tiny_min", "oracle"] = REFERENCE_TINY_MIN  # reference values

class ParamsClassBench(ParamsClassGrid):
    """
    ParamsClassBench - timing of grid sweeps per tiny setting
    """
    tiny: list[float] | None = None  # accuracy parameters to time, default tiny_min 1e-8 1e-4
    repeats: int = 5  # timed sweeps per tiny value
    parallel: int | None = None  # worker processes for additional parallel timing rows

class ParamsClassVerify(ParamsClassBase):
    """
    ParamsClassVerify - check of the embedded reference values
    """
    no_oracle: bool = False  # skip the quadrature cross-check



# main routines

def _print_lines(lines: list[str]) -> None:
    for line in lines:
        print(line)


def _fmt(value: float) -> str:
    return f"{value:.16e}"


def execute_eval(params: ParamsClassEval) -> int:
    """Single point evaluation."""
    ctl = accuracy_from_tiny(tiny_min() if params.tiny is None else params.tiny)
    point = ComplexPoint(params.x, params.y)
    value = faddeyeva(point, ctl)
    lines = [f"x={_fmt(point.x)}", f"y={_fmt(point.y)}", f"V={_fmt(value.v)}", f"L={_fmt(value.l)}"]
    if params.derivatives:
        partials = derivatives_at(point, value)
        lines += [
            f"dV_dx={_fmt(partials.dv_dx)}",
            f"dV_dy={_fmt(partials.dv_dy)}",
            f"dL_dx={_fmt(partials.dl_dx)}",
            f"dL_dy={_fmt(partials.dl_dy)}",
        ]
    if ctl.clamped:
        lines.append(f"warning=tiny clamped from {ctl.tiny_requested!r} to {ctl.tiny_effective!r}")
    _print_lines(lines)
    return EXIT_OK


def execute_grid(params: ParamsClassGridSweep) -> int:
    """Grid sweep into comma-separated text."""
    grid = params.grid_spec()
    frame = evaluate_grid(grid, params.tiny)
    if params.out is None:
        write_grid_csv(frame, sys.stdout)
    else:
        write_grid_csv(frame, params.out)
        _print_lines([f"out={params.out}", f"records={len(frame)}"])
    return EXIT_OK


def execute_compare(params: ParamsClassCompare) -> int:
    """Error summary against tiny_min or the oracle."""
    grid = params.grid_spec()
    tiny_test = tiny_min() if params.tiny is None else params.tiny
    summary = compare(grid, tiny_test, params.reference)
    _print_lines([f"tiny={tiny_test!r}", f"reference={params.reference}", *summary.to_lines()])
    return EXIT_OK


def execute_bench(params: ParamsClassBench) -> int:
    """Median sweep times per tiny value."""
    grid = params.grid_spec()
    tiny_list = [tiny_min(), *BENCH_TINY_DEFAULTS] if params.tiny is None else params.tiny
    frame = bench(grid, tiny_list, params.repeats, params.parallel)
    print(frame.to_string(index=False))
    for row in frame.itertuples(index=False):
        print(
            f"tiny={row.tiny_effective!r} mode={row.mode} median_s={row.median_s:.6e} "
            f"ratio={row.ratio:.4f} repeats={row.repeats} confidence={row.confidence}"
        )
    if params.repeats <= 1:
        print("warning=low confidence, single measurement per tiny value")
    return EXIT_OK


def execute_verify(params: ParamsClassVerify) -> int:
    """Golden value check."""
    frame = verify(with_oracle=not params.no_oracle)
    print(frame.to_string(index=False))
    failed = int((~frame["passed"]).sum())
    _print_lines([
        f"points_checked={len(frame)}",
        f"points_failed={failed}",
        f"verify={'PASS' if failed == 0 else 'FAIL'}",
    ])
    return EXIT_OK if failed == 0 else EXIT_VERIFY_FAILED



# runner

class RunnerCLI:
    """
    RunnerCLI - runner object for one subcommand

    The main routine is injected together with its parameter class. With log set the
    runner logs the call arguments, parses them into the parameter class, logs the
    parameters and executes the main routine, whose return value is the exit code.
    """

    def __init__(self, execmain: Callable, params_class: type[ParamsClassBase], log: bool = True) -> None:
        self._execmain = execmain
        self._params_class = params_class
        self._log = log

    def __call__(self, params_list: list[str]) -> int:
        return self.execute(params_list)

    def parse(self, params_list: list[str]) -> ParamsClassBase:
        if self._log:
            Utils.log_cli_args()
        params = self._params_class(underscores_to_dashes=True).parse_args(params_list)
        if self._log:
            Utils.log_cli_params(params)
        return params

    def execute(self, params_list: list[str]) -> int:
        params = self.parse(params_list)
        if not isinstance(params, self._params_class):
            err_msg = "Param object class does not match."
            raise ValueError(err_msg)
        return self._execmain(params)


COMMANDS: dict[str, tuple[Callable, type[ParamsClassBase]]] = {
    "eval": (execute_eval, ParamsClassEval),
    "grid": (execute_grid, ParamsClassGridSweep),
    "compare": (execute_compare, ParamsClassCompare),
    "bench": (execute_bench, ParamsClassBench),
    "verify": (execute_verify, ParamsClassVerify),
}


def _usage() -> str:
    return f"usage: faddeyeva-voigt {{{','.join(COMMANDS)}}} [options]   (version {__version__})"


def main(argv: list[str] | None = None) -> int:
    """
    main - command line entry

    Args:
        argv (list[str] | None, optional): arguments without program name. Defaults to sys.argv[1:].

    Returns:
        int: exit code
    """
    argv = sys.argv[1:] if argv is None else list(argv)
    if not argv or argv[0] in {"-h", "--help"}:
        print(_usage())
        return EXIT_OK if argv else EXIT_USAGE
    command, params_list = argv[0], argv[1:]
    if command not in COMMANDS:
        print(f"error=unknown command '{command}'", file=sys.stderr)
        print(_usage(), file=sys.stderr)
        return EXIT_USAGE

    verbose = "--verbose" in params_list
    logging.basicConfig(
        level=logging.INFO if verbose else logging.WARNING,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    runner = RunnerCLI(*COMMANDS[command], log=verbose)
    try:
        return runner(params_list)
    except SystemExit as e:
        # argparse: 0 after --help, 2 on usage errors
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    except OverflowDomain as e:
        print(f"error=overflow: {e}", file=sys.stderr)
        return EXIT_OVERFLOW
    except (InvalidInput, ErfcxDomainError, ErrorHarness) as e:
        print(f"error=invalid input: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ErrorFaddeyeva as e:
        print(f"error={type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_VERIFY_FAILED
    except OSError as e:
        print(f"error=I/O: {e}", file=sys.stderr)
        return EXIT_IO
