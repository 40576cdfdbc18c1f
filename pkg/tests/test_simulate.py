"""Scenario generators, population values, Monte Carlo harness."""

import math

import pytest

from mcor import (
    Scenario,
    correlation_matrix,
    generate,
    mcor,
    monte_carlo,
    population_mcor,
)
from mcor.errors import BadArguments
from mcor.linalg import eigenvalues_symmetric


class TestScenario:
    def test_cli_names_in_order(self):
        assert [s.value for s in Scenario] == [
            "all-linear",
            "linear-combo",
            "independent",
            "noisy-combo",
            "chained",
        ]

    def test_from_cli_name(self):
        assert Scenario.from_cli_name("noisy-combo") is Scenario.NOISY_COMBO
        with pytest.raises(BadArguments):
            Scenario.from_cli_name("nope")


class TestGenerate:
    def test_shape_and_names(self):
        data = generate(Scenario.CHAINED, 50, 9)
        assert (data.n_obs, data.n_vars) == (50, 3)
        assert data.var_names == ("x", "y", "z")

    def test_all_linear_correlation_is_all_ones(self):
        data = generate(Scenario.ALL_LINEAR, 1000, 4711)
        m = correlation_matrix(data)
        for i in range(3):
            for j in range(3):
                assert abs(m.rows[i][j] - 1.0) <= 1e-12

    def test_linear_combo_is_rank_deficient(self):
        for seed in (0, 1, 99, 2**63):
            m = correlation_matrix(generate(Scenario.LINEAR_COMBO, 500, seed))
            assert eigenvalues_symmetric(m).values[-1] <= 1e-10

    def test_reproducible_bit_for_bit(self):
        a = generate(Scenario.INDEPENDENT, 2, 42)
        b = generate(Scenario.INDEPENDENT, 2, 42)
        assert a == b
        # frozen stream snapshot for seed 42
        assert a.values == (
            (0.7415648787718234, 0.15991039287692016, 0.2786011302551387),
            (0.3441907165236376, 0.03803016854024627, 0.8682280765465324),
        )

    def test_recipes_tie_columns_together(self):
        lin = generate(Scenario.ALL_LINEAR, 20, 3)
        for x, y, z in lin.values:
            assert y == 2.0 * x and z == x
        combo = generate(Scenario.LINEAR_COMBO, 20, 3)
        for x, y, z in combo.values:
            assert z == x + 2.0 * y

    def test_too_few_observations(self):
        with pytest.raises(BadArguments):
            generate(Scenario.INDEPENDENT, 1, 0)


class TestPopulationMcor:
    def test_all_linear(self):
        assert population_mcor(Scenario.ALL_LINEAR) == 1.0

    def test_linear_combo(self):
        assert population_mcor(Scenario.LINEAR_COMBO) == math.sqrt(1.0 / 3.0)

    def test_independent(self):
        assert population_mcor(Scenario.INDEPENDENT) == 0.0

    def test_noisy_combo(self):
        value = population_mcor(Scenario.NOISY_COMBO)
        assert value == math.sqrt(5.0 / 51.0)
        assert value == pytest.approx(0.3131, abs=1e-4)

    def test_chained(self):
        # Closed form; a Monte Carlo run at n = 10^7 landed within 7e-5.
        value = population_mcor(Scenario.CHAINED)
        assert value == pytest.approx(0.8710326770241061, abs=1e-12)

    def test_population_matches_large_sample(self):
        # in-suite cross-check at a desk-scale n
        for scenario in (Scenario.LINEAR_COMBO, Scenario.NOISY_COMBO, Scenario.CHAINED):
            summary = monte_carlo(scenario, 20000, 5, 31337)
            assert summary.mcor_mean == pytest.approx(
                population_mcor(scenario), abs=0.01
            )


class TestMonteCarlo:
    def test_all_linear_degenerates_to_one(self):
        summary = monte_carlo(Scenario.ALL_LINEAR, 1000, 50, 8)
        assert abs(summary.mcor_mean - 1.0) <= 1e-10
        assert summary.mcor_sd <= 1e-10

    def test_deterministic_summary(self):
        a = monte_carlo(Scenario.NOISY_COMBO, 200, 10, 77)
        b = monte_carlo(Scenario.NOISY_COMBO, 200, 10, 77)
        assert a == b

    def test_summary_ordering_and_range(self):
        for scenario in Scenario:
            s = monte_carlo(scenario, 150, 8, 5150)
            assert 0.0 <= s.mcor_min <= s.mcor_mean <= s.mcor_max <= 1.0

    def test_single_replicate(self):
        s = monte_carlo(Scenario.INDEPENDENT, 100, 1, 3)
        assert s.mcor_sd == 0.0
        assert s.mcor_min == s.mcor_mean == s.mcor_max

    def test_replicates_must_be_positive(self):
        with pytest.raises(BadArguments):
            monte_carlo(Scenario.INDEPENDENT, 100, 0, 3)

    def test_replicates_use_distinct_substreams(self):
        s = monte_carlo(Scenario.INDEPENDENT, 100, 30, 12)
        assert s.mcor_sd > 0.0

    def test_mean_gap_shrinks_with_n(self):
        # fixed seed set; 20 replicates at each n
        for scenario in (
            Scenario.INDEPENDENT,
            Scenario.LINEAR_COMBO,
            Scenario.NOISY_COMBO,
        ):
            pop = population_mcor(scenario)
            gaps = [
                abs(monte_carlo(scenario, n, 20, 1).mcor_mean - pop)
                for n in (100, 1000, 10000)
            ]
            assert gaps[0] >= gaps[1] >= gaps[2]

    def test_all_linear_exact_for_any_n_and_seed(self):
        for n in (3, 10, 250):
            for seed in (0, 7, 123456789):
                report = mcor(generate(Scenario.ALL_LINEAR, n, seed))
                assert abs(report.mcor - 1.0) <= 1e-10
