# Faddeyeva function and Voigt functions by truncated exponential series
# embedded reference values


# ruff and mypy per file settings
#
# empty lines
# ruff: noqa: E302, E303
# line length of the data table
# ruff: noqa: E501, E741

# fmt: off



from dataclasses import asdict, dataclass

import pandas



# relative tolerance = max(HEADROOM * published error of the series algorithm, TOL_FLOOR)
HEADROOM = 10.0
TOL_FLOOR = 1.0e-14



@dataclass(frozen=True)
class GoldenPoint:
    """
    GoldenPoint - reference value of w(x + i y) with per-component relative tolerances

    l_ref is None where only V was published; published_err_v / published_err_l are the
    relative errors reported for the series algorithm itself, None where none were given.
    """
    x: float
    y: float
    v_ref: float
    l_ref: float | None
    tol_v: float
    tol_l: float
    source: str
    published_err_v: float | None = None
    published_err_l: float | None = None


# x, y, V, L, published relative error of V, of L (None: not published), source column
# L at x=0.063, y=10 is given to 16 digits; the published print drops the seventh digit
_REFERENCE_TABLE = (
    (6.3e-2, 1.0e-20, 9.960388660702479e-001, 7.090008726353683e-002, 0.0,     2.0e-15, "arbitrary precision"),
    (6.3e-2, 1.0e-14, 9.960388660702367e-001, 7.090008726353558e-002, 1.1e-16, 2.1e-15, "arbitrary precision"),
    (6.3e-2, 1.0e-12, 9.960388660691284e-001, 7.090008726341133e-002, 0.0,     2.1e-15, "arbitrary precision"),
    (6.3e-2, 1.0e-10, 9.960388659583033e-001, 7.090008725098674e-002, 0.0,     2.1e-15, "arbitrary precision"),
    (6.3e-2, 1.0e-06, 9.960377466254799e-001, 7.089996176278113e-002, 1.1e-16, 3.7e-15, "arbitrary precision"),
    (6.3e-2, 1.0e-02, 9.849424862549036e-001, 6.965909657459020e-002, 3.4e-16, 2.2e-15, "arbitrary precision"),
    (6.3e-2, 1.0e+01, 5.613881832823887e-002, 3.502232333332985e-004, 1.2e-16, 3.6e-15, "arbitrary precision"),
    (6.3e-2, 1.2e+01, 4.685295149211636e-002, 2.442987772965768e-004, 3.0e-16, 8.9e-16, "arbitrary precision"),
    (6.3e-2, 1.5e+01, 3.752895161491573e-002, 1.569287266610685e-004, 5.5e-16, 2.6e-15, "arbitrary precision"),
    (6.3e-2, 2.0e+02, 2.820912377324508e-003, 8.885651855627418e-007, 0.0,     2.4e-15, "arbitrary precision"),
    (6.3e-2, 1.0e+05, 5.641895835193228e-006, 3.554394375816285e-012, None,    None,    "series"),
    (6.3e+0, 1.0e-20, 5.792460778844102e-018, 9.072765968412736e-002, 2.4e-15, 1.2e-16, "arbitrary precision"),
    (6.3e+0, 1.0e-14, 1.536857621303171e-016, 9.072765968412736e-002, 5.3e-15, 1.2e-16, "arbitrary precision"),
    (6.3e+0, 1.0e-12, 1.479513723737762e-014, 9.072765968412736e-002, 6.2e-15, 1.2e-16, "arbitrary precision"),
    (6.3e+0, 1.0e-10, 1.478940284762108e-012, 9.072765968412736e-002, 6.1e-15, 1.2e-16, "arbitrary precision"),
    (6.3e+0, 1.0e-06, 1.478934493028413e-008, 9.072765968412492e-002, 6.0e-15, 1.2e-16, "arbitrary precision"),
    (6.3e+0, 1.0e-02, 1.478930389133942e-004, 9.072741516349275e-002, 5.3e-15, 2.4e-16, "arbitrary precision"),
    (6.3e+0, 1.0e+01, 4.040671157393860e-002, 2.527577277549421e-002, 6.2e-15, 2.4e-16, "arbitrary precision"),
    (6.3e+0, 1.2e+01, 3.684277239564821e-002, 1.923808857910893e-002, 6.2e-15, 0.0,     "arbitrary precision"),
    (6.3e+0, 1.5e+01, 3.194834330452624e-002, 1.336797114261604e-002, 6.1e-15, 1.2e-16, "arbitrary precision"),
    (6.3e+0, 2.0e+02, 2.818116555672224e-003, 8.876845457496914e-005, 6.3e-15, 0.0,     "arbitrary precision"),
    (6.3e+0, 1.0e+05, 5.641895812802746e-006, 3.554394361710292e-010, None,    None,    "series"),
    (6.3e+2, 1.0e-20, 1.421495882582394e-026, 8.955401496757104e-004, 6.1e-16, 1.2e-16, "arbitrary precision"),
    (6.3e+2, 1.0e-14, 1.421495882582394e-020, 8.955401496757104e-004, 8.5e-16, 1.2e-16, "arbitrary precision"),
    (6.3e+2, 1.0e-12, 1.421495882582394e-018, 8.955401496757104e-004, 6.8e-16, 1.2e-16, "arbitrary precision"),
    (6.3e+2, 1.0e-10, 1.421495882582394e-016, 8.955401496757104e-004, 6.9e-16, 1.2e-16, "arbitrary precision"),
    (6.3e+2, 1.0e-06, 1.421495882582394e-012, 8.955401496757104e-004, 5.7e-16, 1.2e-16, "arbitrary precision"),
    (6.3e+2, 1.0e-02, 1.421495882224241e-008, 8.955401494500753e-004, 7.0e-16, 2.4e-16, "arbitrary precision"),
    (6.3e+2, 1.0e+01, 1.421137820009847e-005, 8.953145713915760e-004, 0.0,     2.4e-16, "arbitrary precision"),
    (6.3e+2, 1.2e+01, 1.705176395541706e-005, 8.952153529445874e-004, 6.0e-16, 0.0,     "arbitrary precision"),
    (6.3e+2, 1.5e+01, 2.131035743074597e-005, 8.950327582962093e-004, 4.8e-16, 1.2e-16, "arbitrary precision"),
    (6.3e+2, 2.0e+02, 2.582702147491469e-004, 8.135493143556982e-004, 0.0,     0.0,     "arbitrary precision"),
    (6.3e+2, 1.0e+05, 5.641671917237128e-006, 3.554253307503980e-008, None,    None,    "series"),
    (1.0e+0, 1.0e-20, 3.678794411714423e-001, 6.071577058413937e-001, 0.0,     1.8e-16, "arbitrary precision"),
    (5.5e+0, 1.0e-14, 7.307386729528773e-014, 1.043674364367812e-001, 0.0,     0.0,     "arbitrary precision"),
    (3.9e+4, 1.0e+00, 3.709333226385423e-010, 1.446639957339204e-005, None,    None,    "series"),
    (1.0e+0, 2.8e+04, 2.014962794529686e-005, 7.196295685569929e-010, None,    None,    "series"),
    (5.76,   1.0e-20, 3.900779639194697e-015, None,                   None,    None,    "arbitrary precision"),
)


def _tolerance(published: float | None) -> float:
    if published is None:
        return TOL_FLOOR
    return max(HEADROOM * published, TOL_FLOOR)


GOLDEN_POINTS: tuple[GoldenPoint, ...] = tuple(
    GoldenPoint(
        x=x, y=y, v_ref=v, l_ref=l, tol_v=_tolerance(err_v), tol_l=_tolerance(err_l), source=source,
        published_err_v=err_v, published_err_l=err_l,
    )
    for x, y, v, l, err_v, err_l, source in _REFERENCE_TABLE
)


def golden_frame() -> pandas.DataFrame:
    """
    golden_frame - reference points as table

    Returns:
        pandas.DataFrame: one row per golden point, columns as in GoldenPoint
    """
    return pandas.DataFrame([asdict(point) for point in GOLDEN_POINTS])
