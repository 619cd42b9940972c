# Faddeyeva function and Voigt functions by truncated exponential series
# grid sweeps, error summaries, timing and verification

"""
Module provides the experiment harness behind the command line interface:

- `GridSpec` - linear x by logarithmic y grid, e.g. "-200:200:40001,-20:4:71"
- `evaluate_grid` / `write_grid_csv` - sweep a grid (y outer, x inner) into a table
  with columns x, y, V, L, status, optionally split across worker processes
- `compare` - maximum relative deviation of a tiny setting against tiny_min or the
  quadrature oracle (`ErrorSummary`)
- `bench` - median wall time per tiny setting after one warm-up sweep, single process
  and optionally across a pool of worker processes
- `verify` - check of the embedded reference values
"""


# ruff and mypy per file settings
#
# empty lines
# ruff: noqa: E302, E303
# naming conventions
# ruff: noqa: N802, N806
# others
# ruff: noqa: E741, PLR0914

# fmt: off



from collections.abc import Callable, Iterator
from dataclasses import dataclass
from pathlib import Path
from typing import TextIO

import functools
import logging
import math
import multiprocessing
import multiprocessing.pool
import time

import numpy
import pandas

from faddeyeva_voigt.engine import (
    AccuracyControl,
    ComplexPoint,
    FaddeyevaValue,
    OverflowDomain,
    accuracy_from_tiny,
    faddeyeva,
    tiny_min,
)
from faddeyeva_voigt.golden_values import GOLDEN_POINTS
from faddeyeva_voigt.oracle import ConvergenceFailure, oracle_method, oracle_w
from faddeyeva_voigt.scalar_kernels import ErrorFaddeyeva



logger = logging.getLogger(__name__)



# exception classes
class ErrorHarness(ErrorFaddeyeva):
    """Malformed grid definitions or benchmark settings."""
    pass



# constants
STATUS_OK = "ok"
STATUS_OVERFLOW = "overflow"

GRID_COLUMNS = ["x", "y", "V", "L", "status"]
CSV_FLOAT_FORMAT = "%.16e"

DESK_GRID = "-200:200:4001,-20:4:71"
FULL_PAPER_GRID = "-200:200:40001,-20:4:71"

REFERENCE_TINY_MIN = "tiny_min"
REFERENCE_ORACLE = "oracle"
REFERENCES = (REFERENCE_TINY_MIN, REFERENCE_ORACLE)

# engine against quadrature oracle in verify
ORACLE_REL_TOL = 1.0e-12

LOW_CONFIDENCE_REPEATS = 1

MODE_SINGLE = "single"
MODE_PARALLEL = "parallel"



@dataclass(frozen=True)
class GridSpec:
    """
    GridSpec - linear x axis times logarithmic y axis

    Points are x_start + k * (x_stop - x_start) / (x_count - 1) and
    10 ** (y_exp_start + j * (y_exp_stop - y_exp_start) / (y_count - 1)), both
    endpoint-inclusive; a count of 1 yields the start value only.
    """
    x_start: float
    x_stop: float
    x_count: int
    y_exp_start: float
    y_exp_stop: float
    y_count: int

    def __post_init__(self) -> None:
        if self.x_count < 1 or self.y_count < 1:
            err_msg = f"grid counts must be positive, got x_count={self.x_count}, y_count={self.y_count}"
            raise ErrorHarness(err_msg)
        values = (self.x_start, self.x_stop, self.y_exp_start, self.y_exp_stop)
        if not all(math.isfinite(value) for value in values):
            err_msg = f"grid bounds must be finite, got {values}"
            raise ErrorHarness(err_msg)

    @classmethod
    def parse(cls, text: str) -> "GridSpec":
        """
        parse - grid from "xstart:xstop:xcount,yexpstart:yexpstop:ycount"

        Args:
            text (str): grid definition

        Raises:
            ErrorHarness: malformed definition

        Returns:
            GridSpec: parsed grid
        """
        try:
            x_part, y_part = text.split(",")
            x_start, x_stop, x_count = x_part.split(":")
            y_exp_start, y_exp_stop, y_count = y_part.split(":")
            return cls(
                float(x_start), float(x_stop), int(x_count),
                float(y_exp_start), float(y_exp_stop), int(y_count),
            )
        except ValueError as e:
            err_msg = f"malformed grid definition '{text}', expected xstart:xstop:xcount,yexpstart:yexpstop:ycount"
            raise ErrorHarness(err_msg) from e

    @classmethod
    def desk(cls) -> "GridSpec":
        """Reduced grid (4001 x points) for routine runs."""
        return cls.parse(DESK_GRID)

    @classmethod
    def full_paper(cls) -> "GridSpec":
        """Full accuracy/timing grid of the published experiment, 40001 x 71 points."""
        return cls.parse(FULL_PAPER_GRID)

    @property
    def size(self) -> int:
        return self.x_count * self.y_count

    @staticmethod
    def _axis(start: float, stop: float, count: int) -> numpy.ndarray:
        if count == 1:
            return numpy.array([start])
        return start + numpy.arange(count) * ((stop - start) / (count - 1))

    def xs(self) -> numpy.ndarray:
        return self._axis(self.x_start, self.x_stop, self.x_count)

    def ys(self) -> numpy.ndarray:
        return 10.0 ** self._axis(self.y_exp_start, self.y_exp_stop, self.y_count)

    def points(self) -> Iterator[ComplexPoint]:
        """Grid points in row-major order, y outer and x inner."""
        xs = self.xs()
        for y in self.ys():
            for x in xs:
                yield ComplexPoint(float(x), float(y))


@dataclass(frozen=True)
class ErrorSummary:
    """
    ErrorSummary - maximum relative deviations over a grid

    Components with a zero reference are left out; a point without any usable
    component (or without reference value at all) counts as skipped.
    """
    max_rel_v: float
    max_rel_l: float
    argmax_v: ComplexPoint | None
    argmax_l: ComplexPoint | None
    points_evaluated: int
    points_skipped: int

    def to_lines(self) -> list[str]:
        """key=value records."""
        def fmt_point(point: ComplexPoint | None) -> str:
            return "none" if point is None else f"{point.x!r}:{point.y!r}"
        return [
            f"max_rel_v={self.max_rel_v:.6e}",
            f"max_rel_l={self.max_rel_l:.6e}",
            f"argmax_v={fmt_point(self.argmax_v)}",
            f"argmax_l={fmt_point(self.argmax_l)}",
            f"points_evaluated={self.points_evaluated}",
            f"points_skipped={self.points_skipped}",
        ]



# sweeps

def _evaluate_point(point: ComplexPoint, ctl: AccuracyControl) -> FaddeyevaValue | None:
    try:
        return faddeyeva(point, ctl)
    except OverflowDomain:
        return None


def _evaluate_records(points: list[ComplexPoint], ctl: AccuracyControl) -> list[tuple[float, float, float, float, str]]:
    records = []
    for point in points:
        value = _evaluate_point(point, ctl)
        if value is None:
            records.append((point.x, point.y, math.nan, math.nan, STATUS_OVERFLOW))
        else:
            records.append((point.x, point.y, value.v, value.l, STATUS_OK))
    return records


def _chunks(grid: GridSpec, workers: int) -> list[list[ComplexPoint]]:
    # contiguous slices of the row-major point sequence, one per worker
    points = list(grid.points())
    bounds = numpy.linspace(0, len(points), workers + 1).astype(int)
    return [points[begin:end] for begin, end in zip(bounds[:-1], bounds[1:], strict=True)]


def _sweep_records(
    grid: GridSpec, ctl: AccuracyControl, pool: multiprocessing.pool.Pool | None = None, workers: int = 1
) -> list[tuple[float, float, float, float, str]]:
    if pool is None:
        return _evaluate_records(list(grid.points()), ctl)
    # map keeps the chunk order, so records come back in grid order
    parts = pool.map(functools.partial(_evaluate_records, ctl=ctl), _chunks(grid, workers))
    return [record for part in parts for record in part]


def _check_workers(workers: int | None) -> None:
    if workers is not None and workers < 1:
        err_msg = f"number of workers must be positive, got {workers}"
        raise ErrorHarness(err_msg)


def evaluate_grid(grid: GridSpec, tiny: float | None = None, workers: int | None = None) -> pandas.DataFrame:
    """
    evaluate_grid - w(z) on every grid point

    Overflowing lower half-plane points do not abort the sweep; they are recorded with
    status "overflow" and NaN values. With several workers the points are split into
    contiguous slices evaluated in separate processes; the table is identical to the
    single process sweep.

    Args:
        grid (GridSpec): grid definition
        tiny (float | None, optional): accuracy parameter. Defaults to tiny_min.
        workers (int | None, optional): worker processes. Defaults to None (single process).

    Raises:
        ErrorHarness: workers < 1

    Returns:
        pandas.DataFrame: columns x, y, V, L, status in row-major order (y outer, x inner)
    """
    _check_workers(workers)
    ctl = accuracy_from_tiny(tiny_min() if tiny is None else tiny)
    logger.info("grid sweep over %d points, tiny=%r, workers=%s", grid.size, ctl.tiny_effective, workers or 1)
    if workers is None or workers == 1:
        records = _sweep_records(grid, ctl)
    else:
        with multiprocessing.Pool(workers) as pool:
            records = _sweep_records(grid, ctl, pool, workers)
    return pandas.DataFrame.from_records(records, columns=GRID_COLUMNS)


def write_grid_csv(frame: pandas.DataFrame, out_path: str | Path | TextIO) -> None:
    """
    write_grid_csv - grid table as comma-separated text with 17 significant digits

    Args:
        frame (pandas.DataFrame): result of evaluate_grid
        out_path (str | Path | TextIO): target file or open text stream
    """
    frame.to_csv(out_path, index=False, float_format=CSV_FLOAT_FORMAT, na_rep="nan", lineterminator="\n")
    logger.info("grid written to %s (%d records)", out_path, len(frame))



# comparison

def _relative(value: float, ref: float) -> float | None:
    if ref == 0.0 or not math.isfinite(ref):
        return None
    return abs(value - ref) / abs(ref)


def _reference_value(point: ComplexPoint, reference: str, ref_ctl: AccuracyControl) -> FaddeyevaValue | None:
    if reference == REFERENCE_ORACLE:
        try:
            result = oracle_w(point)
        except ConvergenceFailure:
            return None
        return FaddeyevaValue(result.v, result.l)
    return _evaluate_point(point, ref_ctl)


def compare(grid: GridSpec, tiny_test: float, reference: str = REFERENCE_TINY_MIN) -> ErrorSummary:
    """
    compare - maximum relative deviation of the engine at tiny_test from a reference

    Args:
        grid (GridSpec): grid definition
        tiny_test (float): accuracy parameter under test
        reference (str, optional): "tiny_min" (engine at tiny_min) or "oracle" (quadrature
            reference; points outside its convergence region are skipped). Defaults to "tiny_min".

    Raises:
        ErrorHarness: unknown reference

    Returns:
        ErrorSummary: maxima, their locations and point counts
    """
    if reference not in REFERENCES:
        err_msg = f"unknown reference '{reference}', expected one of {REFERENCES}"
        raise ErrorHarness(err_msg)
    test_ctl = accuracy_from_tiny(tiny_test)
    ref_ctl = accuracy_from_tiny(tiny_min())
    logger.info("compare tiny=%r against %s on %d points", test_ctl.tiny_effective, reference, grid.size)

    max_v = max_l = 0.0
    arg_v: ComplexPoint | None = None
    arg_l: ComplexPoint | None = None
    evaluated = skipped = 0
    for point in grid.points():
        ref = _reference_value(point, reference, ref_ctl)
        value = _evaluate_point(point, test_ctl)
        if ref is None or value is None:
            skipped += 1
            continue
        rel_v = _relative(value.v, ref.v)
        rel_l = _relative(value.l, ref.l)
        if rel_v is None and rel_l is None:
            skipped += 1
            continue
        evaluated += 1
        if rel_v is not None and (arg_v is None or rel_v > max_v):
            max_v, arg_v = rel_v, point
        if rel_l is not None and (arg_l is None or rel_l > max_l):
            max_l, arg_l = rel_l, point
    return ErrorSummary(max_v, max_l, arg_v, arg_l, evaluated, skipped)



# timing

def _median_time(sweep: Callable[[], object], repeats: int) -> float:
    timings = []
    for _ in range(repeats):
        start = time.perf_counter()
        sweep()
        timings.append(time.perf_counter() - start)
    return float(numpy.median(timings))


def bench(grid: GridSpec, tiny_list: list[float], repeats: int = 5, workers: int | None = None) -> pandas.DataFrame:
    """
    bench - median wall time of a whole-grid sweep per tiny value

    One untimed sweep warms up the engine first. tiny_min is always timed and serves
    as reference of the ratio column. Sweeps run in a single process (mode "single");
    with workers, every tiny value is timed a second time with the points split across
    a pool of worker processes (mode "parallel"). The pool is started and warmed up
    outside the timed region, its ratios refer to the parallel tiny_min row.

    Args:
        grid (GridSpec): grid definition
        tiny_list (list[float]): accuracy parameters to time
        repeats (int, optional): timed sweeps per tiny value. Defaults to 5.
        workers (int | None, optional): worker processes of the parallel rows. Defaults to None (no parallel rows).

    Raises:
        ErrorHarness: empty tiny_list, repeats < 1 or workers < 1

    Returns:
        pandas.DataFrame: columns tiny, tiny_effective, mode, median_s, ratio, repeats, confidence
    """
    if not tiny_list:
        err_msg = "bench requires at least one tiny value"
        raise ErrorHarness(err_msg)
    if repeats < 1:
        err_msg = f"bench requires repeats >= 1, got {repeats}"
        raise ErrorHarness(err_msg)
    _check_workers(workers)

    lower = tiny_min()
    controls = [accuracy_from_tiny(tiny) for tiny in tiny_list]
    if not any(ctl.tiny_effective == lower for ctl in controls):
        controls.insert(0, accuracy_from_tiny(lower))
    confidence = "low" if repeats <= LOW_CONFIDENCE_REPEATS else "normal"

    def row(ctl: AccuracyControl, mode: str, median: float) -> dict:
        logger.info("bench %s tiny=%r: median %.6f s over %d repeats", mode, ctl.tiny_effective, median, repeats)
        return {
            "tiny": ctl.tiny_requested,
            "tiny_effective": ctl.tiny_effective,
            "mode": mode,
            "median_s": median,
            "repeats": repeats,
            "confidence": confidence,
        }

    _sweep_records(grid, controls[0])
    rows = [row(ctl, MODE_SINGLE, _median_time(functools.partial(_sweep_records, grid, ctl), repeats)) for ctl in controls]
    if workers is not None:
        with multiprocessing.Pool(workers) as pool:
            _sweep_records(grid, controls[0], pool, workers)
            for ctl in controls:
                sweep = functools.partial(_sweep_records, grid, ctl, pool, workers)
                rows.append(row(ctl, MODE_PARALLEL, _median_time(sweep, repeats)))

    frame = pandas.DataFrame(rows)
    reference = frame.loc[frame["tiny_effective"] == lower].groupby("mode")["median_s"].first()
    reference = reference.where(reference > 0.0)
    frame.insert(4, "ratio", frame["median_s"] / frame["mode"].map(reference))
    return frame



# verification

def _oracle_check(point: ComplexPoint, value: FaddeyevaValue) -> bool | None:
    if oracle_method(point) is None:
        return None
    try:
        result = oracle_w(point)
    except ConvergenceFailure as e:
        logger.warning("oracle failed inside its region: %s", e)
        return False
    ok_v = abs(value.v - result.v) <= max(ORACLE_REL_TOL * abs(result.v), 2.0 * result.est_abs_err)
    ok_l = abs(value.l - result.l) <= max(ORACLE_REL_TOL * abs(result.l), 2.0 * result.est_abs_err)
    return ok_v and ok_l


def verify(with_oracle: bool = True) -> pandas.DataFrame:
    """
    verify - evaluate all golden points at tiny_min and check them against their tolerances

    Args:
        with_oracle (bool, optional): cross-check against the quadrature oracle where it converges. Defaults to True.

    Returns:
        pandas.DataFrame: one row per golden point with values, relative errors, tolerances,
            oracle result (None where not run) and the column passed
    """
    ctl = accuracy_from_tiny(tiny_min())
    rows = []
    for golden in GOLDEN_POINTS:
        point = ComplexPoint(golden.x, golden.y)
        value = faddeyeva(point, ctl)
        rel_v = abs(value.v - golden.v_ref) / abs(golden.v_ref)
        rel_l = math.nan if golden.l_ref is None else abs(value.l - golden.l_ref) / abs(golden.l_ref)
        oracle_ok = _oracle_check(point, value) if with_oracle else None
        passed = rel_v <= golden.tol_v and (golden.l_ref is None or rel_l <= golden.tol_l) and oracle_ok is not False
        rows.append({
            "x": golden.x,
            "y": golden.y,
            "V": value.v,
            "L": value.l,
            "rel_v": rel_v,
            "rel_l": rel_l,
            "tol_v": golden.tol_v,
            "tol_l": golden.tol_l,
            "oracle": oracle_ok,
            "passed": passed,
        })
    frame = pandas.DataFrame(rows)
    logger.info("verify: %d of %d golden points passed", int(frame["passed"].sum()), len(frame))
    return frame
