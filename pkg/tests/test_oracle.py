"""Tests for the brute-force oracle and the goodness-of-fit check."""

import numpy as np
import pytest

from core import (
    CapExceededError,
    DimensionMismatchError,
    Difference,
    Inclusion,
    InsufficientSamplesError,
    SampleOutsideCompletionsError,
    SCPInstance,
    UnknownSetError
)
from core.generators import all_uncertain_instance, instance_with_uncertainty, random_instance
from oracle import (
    distribution_check,
    enumerate_completions,
    observed_counts,
    project_completions,
    satisfies,
    sweep_satisfying
)
from quantum import lift
from sampler import Assignment, prepare, sample_assignments
from solver import build_matrix, enumerate_variants
from tests.conftest import WORKED_UNCERTAIN


def small_corpus():
    """Instances with at most six uncertain cells."""
    corpus = [instance_with_uncertainty(u) for u in range(7)]
    corpus.append(all_uncertain_instance(2, 3))
    corpus.append(SCPInstance(('a', 'b'), ('X', 'Y'), (Inclusion('a', 'X'),)))
    rng = np.random.default_rng(99)
    while len(corpus) < 20:
        instance = random_instance(rng, 3, 3, int(rng.integers(3, 10)))
        if build_matrix(instance).uncertain_count <= 6:
            corpus.append(instance)
    return corpus


class TestEnumerateCompletions:

    def test_count_and_order(self, worked_matrix):
        """2^8 completions, lexicographic over the uncertain cells, member first."""
        completions = enumerate_completions(worked_matrix)
        assert len(completions) == 256
        assert list(completions.uncertain) == WORKED_UNCERTAIN
        first, second, last = completions.completions[0], completions.completions[1], completions.completions[-1]
        assert all(first[cell].value == 0 for cell in WORKED_UNCERTAIN)
        assert [second[cell].value for cell in WORKED_UNCERTAIN] == [0] * 7 + [1]
        assert all(last[cell].value == 1 for cell in WORKED_UNCERTAIN)
        assert len(set(completions)) == 256

    def test_completions_satisfy_instance(self, worked_instance, worked_matrix):
        for completion in enumerate_completions(worked_matrix):
            assert satisfies(completion, worked_instance)
            assert completion.conflicts_with(worked_matrix) == []

    def test_membership_lookup(self, worked_matrix):
        completions = enumerate_completions(worked_matrix)
        assert completions.completions[17] in completions
        assert completions.index_of[completions.completions[17]] == 17
        assert completions.completions[0].flipped('a', 'X') not in completions

    def test_cap(self, worked_matrix):
        with pytest.raises(CapExceededError) as excinfo:
            enumerate_completions(worked_matrix, cap=2)
        assert (excinfo.value.requested, excinfo.value.cap) == (8, 2)

    def test_to_dict_and_frame(self, worked_matrix):
        completions = enumerate_completions(worked_matrix)
        document = completions.to_dict()
        assert len(document['completions']) == 256
        assert document['completions'][0][0] == [0, 1, 0]
        assert document['uncertain_cells'][0] == ['c', 'Y']
        frame = completions.to_frame()
        assert frame.shape == (256, 21)
        assert frame.columns[0] == 'a:X'


class TestSatisfies:

    def test_flipping_a_constrained_cell(self, worked_instance, worked_matrix):
        """Turning e out of Z violates 'e in Z'."""
        completion = enumerate_completions(worked_matrix).completions[0]
        assert satisfies(completion, worked_instance)
        assert not satisfies(completion.flipped('e', 'Z'), worked_instance)

    def test_flipping_an_uncertain_cell(self, worked_instance, worked_matrix):
        completion = enumerate_completions(worked_matrix).completions[0]
        assert satisfies(completion.flipped('g', 'Y'), worked_instance)

    def test_difference_needs_both_halves(self):
        instance = SCPInstance(('a',), ('X', 'Y'), (Difference('a', 'X', 'Y'),))
        assert satisfies(Assignment(('a',), ('X', 'Y'), (0, 1)), instance)
        assert not satisfies(Assignment(('a',), ('X', 'Y'), (0, 0)), instance)
        assert not satisfies(Assignment(('a',), ('X', 'Y'), (1, 1)), instance)

    def test_grid_mismatch(self, worked_instance):
        with pytest.raises(DimensionMismatchError):
            satisfies(Assignment(('a',), ('X',), (0,)), worked_instance)


class TestSweep:

    def test_sweep_matches_completions(self):
        """Exhaustive sweep and completion enumeration agree on small grids."""
        rng = np.random.default_rng(5)
        for _ in range(10):
            instance = random_instance(rng, 4, 3, int(rng.integers(0, 8)))
            completions = enumerate_completions(build_matrix(instance))
            assert set(sweep_satisfying(instance)) == set(completions)

    def test_sweep_cap(self, worked_instance):
        with pytest.raises(CapExceededError):
            sweep_satisfying(worked_instance)


class TestProjection:

    @pytest.mark.parametrize("set_name", ['X', 'Y', 'Z'])
    def test_projection_matches_variants(self, worked_matrix, set_name):
        completions = enumerate_completions(worked_matrix)
        variants = {v.members for v in enumerate_variants(worked_matrix, set_name)}
        assert project_completions(completions, set_name) == variants

    def test_unknown_set(self, worked_matrix):
        with pytest.raises(UnknownSetError):
            project_completions(enumerate_completions(worked_matrix), 'W')


class TestDistributionCheck:

    @pytest.mark.slow
    def test_uniform_over_completions(self, worked_register, worked_matrix):
        """100,000 rounds pass chi-square against uniform over 256 completions."""
        completions = enumerate_completions(worked_matrix)
        samples = sample_assignments(worked_register, 2024, 100000)
        report = distribution_check(samples, completions)
        assert report.passed
        assert report.degrees_of_freedom == 255
        assert report.sample_count == 100000
        assert report.category_count == 256
        assert report.to_dict()['test'] == 'chi-square'

    def test_degenerate_samples_fail(self, worked_matrix):
        completions = enumerate_completions(worked_matrix)
        samples = [completions.completions[0]] * 2560
        report = distribution_check(samples, completions)
        assert not report.passed
        assert report.p_value < report.significance

    def test_sample_outside_completions(self, worked_matrix):
        completions = enumerate_completions(worked_matrix)
        samples = list(completions) * 10
        samples[5] = samples[5].flipped('a', 'X')
        with pytest.raises(SampleOutsideCompletionsError) as excinfo:
            distribution_check(samples, completions)
        assert excinfo.value.sample_index == 5

    def test_insufficient_samples(self, worked_matrix):
        completions = enumerate_completions(worked_matrix)
        with pytest.raises(InsufficientSamplesError) as excinfo:
            distribution_check(list(completions), completions)
        assert excinfo.value.required == 2560

    def test_single_completion(self):
        """No uncertain cells: zero degrees of freedom and an exact fit."""
        matrix = build_matrix(SCPInstance(('a',), ('X',), (Inclusion('a', 'X'),)))
        completions = enumerate_completions(matrix)
        report = distribution_check(list(completions) * 10, completions)
        assert (report.statistic, report.p_value, report.passed) == (0.0, 1.0, True)

    def test_observed_counts(self, worked_matrix):
        completions = enumerate_completions(worked_matrix)
        counts = observed_counts(list(completions) + [completions.completions[3]], completions)
        assert counts.sum() == 257
        assert counts[3] == 2


class TestSamplerOracleEquivalence:

    @pytest.mark.slow
    def test_sampled_support_equals_completions(self):
        """Over 100 x 2^u rounds the distinct samples are exactly the completions."""
        for instance in small_corpus():
            matrix = build_matrix(instance)
            completions = enumerate_completions(matrix)
            rounds = 100 * 2 ** matrix.uncertain_count
            samples = sample_assignments(prepare(lift(matrix)), 17, rounds)
            assert set(samples) == set(completions)
            assert all(satisfies(c, instance) for c in completions)
