"""Multi-way correlation: one number for the linear inter-dependence of
d >= 2 variables, built on sample correlation matrices and an in-repo
symmetric eigensolver."""

from . import errors
from .corestats import (
    DataMatrix,
    correlation_matrix,
    make_data_matrix,
    pearson_r,
    sample_sd,
)
from .linalg import (
    EigenSpectrum,
    SymmetricMatrix,
    eigenvalues_symmetric,
    frobenius_norm_sq,
    make_symmetric,
)
from .multiway import (
    McorReport,
    independence_bound,
    john_sphericity,
    mcor,
    mcor_from_matrix,
    mcor_from_spectrum,
    rescaled_sphericity,
)
from .rng import SplitMix64, derive_seed
from .simulate import (
    MonteCarloSummary,
    Scenario,
    generate,
    monte_carlo,
    population_mcor,
)

__version__ = "0.1.0"

__all__ = [
    "DataMatrix",
    "EigenSpectrum",
    "McorReport",
    "MonteCarloSummary",
    "Scenario",
    "SplitMix64",
    "SymmetricMatrix",
    "correlation_matrix",
    "derive_seed",
    "eigenvalues_symmetric",
    "errors",
    "frobenius_norm_sq",
    "generate",
    "independence_bound",
    "john_sphericity",
    "make_data_matrix",
    "make_symmetric",
    "mcor",
    "mcor_from_matrix",
    "mcor_from_spectrum",
    "monte_carlo",
    "pearson_r",
    "population_mcor",
    "rescaled_sphericity",
    "sample_sd",
]
