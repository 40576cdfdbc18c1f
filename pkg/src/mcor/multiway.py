"""The multi-way correlation coefficient and its companion quantities.

For d >= 2 variables, the coefficient is the sample standard deviation of
the eigenvalues of the empirical correlation matrix, divided by sqrt(d).
A correlation spectrum sums to d, so its mean is 1: the statistic measures
eigenvalue dispersion. It is 0 exactly when all eigenvalues are 1 (the
identity matrix, mutually uncorrelated variables), 1 exactly when a single
eigenvalue is d and the rest vanish (rank one, perfect linear dependence),
and for d == 2 it equals |Pearson r| of the two columns.

John's sphericity ratio sum(l_i^2)/(sum l_i)^2 ranges over [1/d, 1] on
correlation spectra; its rescaling (sum(l_i^2) - d)/(d(d-1)) onto [0, 1]
is algebraically identical to the squared coefficient.
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass
from math import fsum

from .corestats import DataMatrix, correlation_matrix, sample_sd
from .errors import (
    BadArguments,
    DegenerateSpectrum,
    DimensionTooSmall,
    NonFiniteEntry,
    NotACorrelationMatrix,
    NotACorrelationSpectrum,
    NumericInconsistency,
)
from .linalg import DEFAULT_MAX_SWEEPS, EigenSpectrum, SymmetricMatrix, eigenvalues_symmetric

# Eigenvalue sums may drift from d by solver roundoff; anything past this
# relative slack is not a correlation spectrum at all.
TRACE_RTOL = 1e-6
# Results may poke past [0, 1] by roundoff only; larger overshoot means a
# solver bug and must not be masked by clamping.
CLAMP_EPS = 1e-12
NEAR_SINGULAR_EIG = 1e-10
PSD_EIG_FLOOR = -1e-8
MATRIX_ENTRY_TOL = 1e-9

WARN_NEAR_SINGULAR = "near-singular correlation matrix"
WARN_NOT_PSD = "not PSD within tolerance"


@dataclass(frozen=True)
class McorReport:
    """Coefficient value with its full provenance."""

    d: int
    mcor: float
    eigenvalues: tuple[float, ...]
    sphericity: float
    rescaled_sphericity: float
    min_eigenvalue: float
    warnings: tuple[str, ...]


def _validated_spectrum(values: Sequence[float]) -> int:
    d = len(values)
    if d < 2:
        raise DimensionTooSmall(f"need at least 2 eigenvalues, got {d}")
    for v in values:
        if not math.isfinite(v):
            raise NonFiniteEntry("eigenvalue list contains a non-finite value")
    total = fsum(values)
    if abs(total - d) > TRACE_RTOL * d:
        raise NotACorrelationSpectrum(
            f"eigenvalues sum to {total!r}, expected {d} for a correlation spectrum",
            total=total,
        )
    return d


def _clamp01(value: float, what: str) -> float:
    if value < 0.0:
        if value >= -CLAMP_EPS:
            return 0.0
        raise NumericInconsistency(f"{what} = {value!r} fell below 0 beyond roundoff")
    if value > 1.0:
        if value - 1.0 <= CLAMP_EPS:
            return 1.0
        raise NumericInconsistency(f"{what} = {value!r} rose above 1 beyond roundoff")
    return value


def mcor_from_spectrum(values: Sequence[float]) -> float:
    """Coefficient from a correlation spectrum: sample sd of the
    eigenvalues over sqrt(d)."""
    d = _validated_spectrum(values)
    return _clamp01(sample_sd(values) / math.sqrt(d), "mcor")


def john_sphericity(values: Sequence[float]) -> float:
    """Dispersion ratio sum(l^2) / (sum l)^2 of any eigenvalue list."""
    d = len(values)
    if d < 2:
        raise DimensionTooSmall(f"need at least 2 eigenvalues, got {d}")
    for v in values:
        if not math.isfinite(v):
            raise NonFiniteEntry("eigenvalue list contains a non-finite value")
    total = fsum(values)
    if total == 0.0:
        raise DegenerateSpectrum("eigenvalues sum to zero")
    return fsum(v * v for v in values) / (total * total)


def rescaled_sphericity(values: Sequence[float]) -> float:
    """Sphericity mapped onto [0, 1]: (sum(l^2) - d) / (d(d-1)).

    Equals the squared coefficient for the same spectrum.
    """
    d = _validated_spectrum(values)
    s2 = fsum(v * v for v in values)
    return _clamp01((s2 - d) / (d * (d - 1)), "rescaled sphericity")


def independence_bound(d: int, k: int) -> float:
    """Upper bound on the coefficient when k of the d variables are
    independent of each other and of the rest.

    sqrt((d-k)(d-k-1) / (d(d-1))); zero once fewer than two coupled
    variables remain.
    """
    if d < 2:
        raise BadArguments(f"d must be >= 2, got {d}")
    if k < 0 or k > d:
        raise BadArguments(f"k must lie in [0, {d}], got {k}")
    rest = d - k
    if rest <= 1:
        return 0.0
    return math.sqrt(rest * (rest - 1) / (d * (d - 1)))


def _report(spectrum: EigenSpectrum, extra_warnings: Sequence[str] = ()) -> McorReport:
    values = spectrum.values
    min_eig = values[-1]
    warnings = list(extra_warnings)
    if min_eig < NEAR_SINGULAR_EIG:
        warnings.append(WARN_NEAR_SINGULAR)
    if min_eig < PSD_EIG_FLOOR:
        warnings.append(WARN_NOT_PSD)
    return McorReport(
        d=len(values),
        mcor=mcor_from_spectrum(values),
        eigenvalues=values,
        sphericity=john_sphericity(values),
        rescaled_sphericity=rescaled_sphericity(values),
        min_eigenvalue=min_eig,
        warnings=tuple(warnings),
    )


def mcor(data: DataMatrix, max_sweeps: int = DEFAULT_MAX_SWEEPS) -> McorReport:
    """Coefficient of a raw data matrix: correlation matrix, then its
    spectrum, then the dispersion statistic."""
    if data.n_vars < 2:
        raise DimensionTooSmall(f"need at least 2 variables, got {data.n_vars}")
    matrix = correlation_matrix(data)
    spectrum = eigenvalues_symmetric(matrix, max_sweeps=max_sweeps)
    return _report(spectrum)


def mcor_from_matrix(
    matrix: SymmetricMatrix, max_sweeps: int = DEFAULT_MAX_SWEEPS
) -> McorReport:
    """Coefficient of a precomputed correlation matrix.

    The diagonal must be 1 and off-diagonals within [-1, 1], both up to
    1e-9; deviations inside that tolerance are reported as warnings
    (hand-rounded matrices are common), beyond it they are errors.
    """
    d = matrix.dim
    if d < 2:
        raise DimensionTooSmall(f"need at least a 2x2 matrix, got {d}x{d}")
    warnings = []
    for i in range(d):
        dev = abs(matrix.rows[i][i] - 1.0)
        if dev > MATRIX_ENTRY_TOL:
            raise NotACorrelationMatrix(
                f"diagonal entry ({i + 1},{i + 1}) = {matrix.rows[i][i]!r}, expected 1"
            )
        if dev > 0.0:
            warnings.append(f"diagonal entry ({i + 1},{i + 1}) off unit by {dev:.3e}")
    for i in range(d):
        for j in range(i + 1, d):
            over = abs(matrix.rows[i][j]) - 1.0
            if over > MATRIX_ENTRY_TOL:
                raise NotACorrelationMatrix(
                    f"off-diagonal entry ({i + 1},{j + 1}) = {matrix.rows[i][j]!r} "
                    "is outside [-1, 1]"
                )
            if over > 0.0:
                warnings.append(
                    f"off-diagonal entry ({i + 1},{j + 1}) exceeds unit magnitude "
                    f"by {over:.3e}"
                )
    spectrum = eigenvalues_symmetric(matrix, max_sweeps=max_sweeps)
    return _report(spectrum, warnings)
