"""Seeded generators for five three-variable scenarios and a Monte Carlo
harness characterising the sampling behaviour of the coefficient.

Scenario recipes (columns x, y, z):

    ALL_LINEAR    x ~ U(0,1); y = 2x;           z = x
    LINEAR_COMBO  x ~ U(0,1); y ~ U(0,1);       z = x + 2y
    INDEPENDENT   x ~ U(0,1); y ~ U(0,1);       z ~ U(0,1)
    NOISY_COMBO   x ~ U(0,1); y ~ U(0,1);       z = x + 2y + N(0,1)
    CHAINED       x ~ U(0,1); y = 5x + N(0,1);  z = x + 2y + N(0,1)

Rows are generated in order and, within a row, variates are drawn in
recipe order, so a (scenario, n_obs, seed) triple pins the data bit for
bit. Replicates of the Monte Carlo harness draw fresh data from substream
seeds derived with rng.derive_seed, so the summary does not depend on
evaluation order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from math import fsum

from .corestats import DataMatrix, make_data_matrix, sample_sd
from .errors import BadArguments
from .multiway import mcor
from .rng import SplitMix64, derive_seed


class Scenario(Enum):
    """The five bundled generative recipes; values are the CLI names."""

    ALL_LINEAR = "all-linear"
    LINEAR_COMBO = "linear-combo"
    INDEPENDENT = "independent"
    NOISY_COMBO = "noisy-combo"
    CHAINED = "chained"

    @property
    def description(self) -> str:
        return _DESCRIPTIONS[self]

    @classmethod
    def from_cli_name(cls, name: str) -> "Scenario":
        for member in cls:
            if member.value == name:
                return member
        known = ", ".join(m.value for m in cls)
        raise BadArguments(f"unknown scenario {name!r} (known: {known})")


_DESCRIPTIONS = {
    Scenario.ALL_LINEAR: "two variables are exact linear functions of the third",
    Scenario.LINEAR_COMBO: "one variable is an exact linear combination of the other two",
    Scenario.INDEPENDENT: "three mutually independent uniforms",
    Scenario.NOISY_COMBO: "one variable is a noisy linear combination of the other two",
    Scenario.CHAINED: "a noisy chain: y follows x, z follows x and y",
}


@dataclass(frozen=True)
class MonteCarloSummary:
    """Replicate-level summary of the coefficient for one scenario."""

    scenario: Scenario
    n_obs: int
    replicates: int
    seed: int
    mcor_mean: float
    mcor_sd: float
    mcor_min: float
    mcor_max: float


def generate(scenario: Scenario, n_obs: int, seed: int) -> DataMatrix:
    """Draw one dataset (columns x, y, z) for ``scenario``; deterministic
    in (scenario, n_obs, seed)."""
    if n_obs < 2:
        raise BadArguments(f"n_obs must be >= 2, got {n_obs}")
    rng = SplitMix64(seed)
    if scenario is Scenario.ALL_LINEAR:
        rows = [(u, 2.0 * u, u) for u in rng.uniforms(n_obs)]
    elif scenario is Scenario.LINEAR_COMBO:
        us = rng.uniforms(2 * n_obs)
        rows = [
            (us[2 * i], us[2 * i + 1], us[2 * i] + 2.0 * us[2 * i + 1])
            for i in range(n_obs)
        ]
    elif scenario is Scenario.INDEPENDENT:
        us = rng.uniforms(3 * n_obs)
        rows = [(us[3 * i], us[3 * i + 1], us[3 * i + 2]) for i in range(n_obs)]
    elif scenario is Scenario.NOISY_COMBO:
        rows = []
        for _ in range(n_obs):
            x = rng.uniform()
            y = rng.uniform()
            rows.append((x, y, x + 2.0 * y + rng.normal()))
    else:
        rows = []
        for _ in range(n_obs):
            x = rng.uniform()
            y = 5.0 * x + rng.normal()
            rows.append((x, y, x + 2.0 * y + rng.normal()))
    return make_data_matrix(rows, ("x", "y", "z"))


def population_mcor(scenario: Scenario) -> float:
    """Infinite-n value of the coefficient for ``scenario``.

    For a 3x3 correlation matrix the coefficient equals the root mean
    square of the three pairwise correlations, so each value below follows
    from the population correlations of the recipe (var of U(0,1) = 1/12).
    """
    if scenario is Scenario.ALL_LINEAR:
        return 1.0
    if scenario is Scenario.LINEAR_COMBO:
        # cor(x,z) = 1/sqrt(5), cor(y,z) = 2/sqrt(5); spectrum {2, 1, 0}
        return math.sqrt(1.0 / 3.0)
    if scenario is Scenario.INDEPENDENT:
        return 0.0
    if scenario is Scenario.NOISY_COMBO:
        # var z = 17/12; cor(x,z) = 1/sqrt(17), cor(y,z) = 2/sqrt(17)
        return math.sqrt(5.0 / 51.0)
    # CHAINED: var y = 37/12, var z = 181/12; cov(x,y) = 5/12,
    # cov(x,z) = 11/12, cov(y,z) = 79/12, hence squared correlations
    # 25/37, 121/181 and 6241/6697.
    return math.sqrt((25.0 / 37.0 + 121.0 / 181.0 + 6241.0 / 6697.0) / 3.0)


def monte_carlo(
    scenario: Scenario, n_obs: int, replicates: int, seed: int
) -> MonteCarloSummary:
    """Coefficient summary over ``replicates`` fresh datasets.

    Replicate i uses the substream seed derive_seed(seed, i); the summary
    is a pure function of the four arguments.
    """
    if replicates < 1:
        raise BadArguments(f"replicates must be >= 1, got {replicates}")
    values = []
    for i in range(replicates):
        data = generate(scenario, n_obs, derive_seed(seed, i))
        values.append(mcor(data).mcor)
    return MonteCarloSummary(
        scenario=scenario,
        n_obs=n_obs,
        replicates=replicates,
        seed=seed,
        mcor_mean=fsum(values) / replicates,
        mcor_sd=sample_sd(values) if replicates > 1 else 0.0,
        mcor_min=min(values),
        mcor_max=max(values),
    )
