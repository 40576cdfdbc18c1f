"""Pearson correlation, sample correlation matrices, sample standard deviation.

All moments are two-pass (means first, then centered sums) with exact
summation via math.fsum; n is small in this domain and robustness beats
speed. Constant columns are a hard error: a correlation is undefined for
them and failing loudly beats emitting a misleading number.
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass
from math import fsum

from .errors import (
    BadArguments,
    LengthMismatch,
    NonFiniteEntry,
    NumericInconsistency,
    TooFewRows,
    TooFewValues,
    ZeroVariance,
)
from .linalg import SymmetricMatrix, make_symmetric


@dataclass(frozen=True)
class DataMatrix:
    """n observations by d variables of finite real measurements."""

    n_obs: int
    n_vars: int
    values: tuple[tuple[float, ...], ...]
    var_names: tuple[str, ...]

    def column(self, j: int) -> list[float]:
        return [row[j] for row in self.values]


def make_data_matrix(
    rows: Sequence[Sequence[float]],
    var_names: Sequence[str] | None = None,
) -> DataMatrix:
    """Validate raw rows into a DataMatrix (n >= 2, rectangular, finite)."""
    n = len(rows)
    if n < 2:
        raise TooFewRows(f"need at least 2 observations, got {n}")
    d = len(rows[0])
    if d < 1:
        raise BadArguments("rows must have at least one column")
    frozen = []
    for i, row in enumerate(rows):
        if len(row) != d:
            raise LengthMismatch(f"row {i + 1} has {len(row)} cells, expected {d}")
        for j, v in enumerate(row):
            if not math.isfinite(v):
                raise NonFiniteEntry(f"row {i + 1}, column {j + 1} is not finite")
        frozen.append(tuple(float(v) for v in row))
    if var_names is None:
        names = tuple(f"v{j + 1}" for j in range(d))
    else:
        if len(var_names) != d:
            raise LengthMismatch(
                f"got {len(var_names)} variable names for {d} columns"
            )
        names = tuple(str(name) for name in var_names)
    return DataMatrix(n_obs=n, n_vars=d, values=tuple(frozen), var_names=names)


def _centered(xs: Sequence[float]) -> list[float]:
    mean = fsum(xs) / len(xs)
    return [x - mean for x in xs]


def _corr_from_centered(cx, cy, sxx: float, syy: float) -> float:
    # One sqrt of the product loses less than a product of two sqrts and
    # keeps exactly-linear integer data at exactly +-1; fall back when the
    # product leaves double range.
    denom_sq = sxx * syy
    if math.isfinite(denom_sq) and denom_sq > 0.0:
        denom = math.sqrt(denom_sq)
    else:
        denom = math.sqrt(sxx) * math.sqrt(syy)
    r = fsum(a * b for a, b in zip(cx, cy)) / denom
    if not math.isfinite(r):
        raise NumericInconsistency(f"correlation evaluated to {r!r}")
    if r > 1.0:
        if r - 1.0 > 1e-12:
            raise NumericInconsistency(f"correlation {r!r} above 1 beyond roundoff")
        return 1.0
    if r < -1.0:
        if -1.0 - r > 1e-12:
            raise NumericInconsistency(f"correlation {r!r} below -1 beyond roundoff")
        return -1.0
    return r


def pearson_r(x: Sequence[float], y: Sequence[float]) -> float:
    """Pearson correlation of two equal-length series.

    Computed as the centered cross sum over the product of centered root
    sums of squares; values that land within 1e-12 outside [-1, 1] are
    clamped (roundoff guard), anything further out is an internal error.
    """
    if len(x) != len(y):
        raise LengthMismatch(f"series lengths differ: {len(x)} vs {len(y)}")
    n = len(x)
    if n < 2:
        raise TooFewValues(f"need at least 2 paired observations, got {n}")
    for name, series in (("x", x), ("y", y)):
        for v in series:
            if not math.isfinite(v):
                raise NonFiniteEntry(f"series {name} contains a non-finite value")
        if all(v == series[0] for v in series):
            raise ZeroVariance(f"series {name}")
    cx = _centered(x)
    cy = _centered(y)
    sxx = fsum(v * v for v in cx)
    syy = fsum(v * v for v in cy)
    if sxx == 0.0:
        raise ZeroVariance("series x")
    if syy == 0.0:
        raise ZeroVariance("series y")
    return _corr_from_centered(cx, cy, sxx, syy)


def correlation_matrix(data: DataMatrix) -> SymmetricMatrix:
    """d x d sample correlation matrix with an exactly-unit diagonal.

    One triangle is computed and mirrored; raises ZeroVariance naming the
    first constant column found.
    """
    d = data.n_vars
    centered = []
    sums_sq = []
    for j in range(d):
        col = data.column(j)
        if all(v == col[0] for v in col):
            raise ZeroVariance(f"column {data.var_names[j]}")
        c = _centered(col)
        s = fsum(v * v for v in c)
        if s == 0.0:
            raise ZeroVariance(f"column {data.var_names[j]}")
        centered.append(c)
        sums_sq.append(s)
    tri = []
    for i in range(d):
        for j in range(i):
            tri.append(
                _corr_from_centered(centered[i], centered[j], sums_sq[i], sums_sq[j])
            )
        tri.append(1.0)
    return make_symmetric(d, tri)


def sample_sd(xs: Sequence[float]) -> float:
    """Sample standard deviation with the m-1 denominator."""
    m = len(xs)
    if m < 2:
        raise TooFewValues(f"standard deviation needs at least 2 values, got {m}")
    for v in xs:
        if not math.isfinite(v):
            raise NonFiniteEntry("value list contains a non-finite entry")
    mean = fsum(xs) / m
    return math.sqrt(fsum((v - mean) ** 2 for v in xs) / (m - 1))
