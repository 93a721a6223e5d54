"""Tests for the ternary matrix, set descriptions and variants."""

import itertools

import numpy as np
import pytest

from core import (
    CapExceededError,
    ContradictionError,
    Exclusion,
    Inclusion,
    InvalidInstanceError,
    SCPInstance,
    UnknownSetError,
    parse_scp
)
from core.generators import random_instance
from solver import (
    TernaryMatrix,
    TernaryValue,
    binary_table,
    build_matrix,
    describe_set,
    enumerate_variants,
    iter_variants,
    uncertain_cells
)
from tests.conftest import WORKED_MATRIX, WORKED_UNCERTAIN


class TestBuildMatrix:

    def test_worked_example_matrix(self, worked_matrix):
        """All 21 entries match the published table exactly."""
        assert worked_matrix.elements == ('a', 'b', 'c', 'd', 'e', 'f', 'g')
        assert worked_matrix.sets == ('X', 'Y', 'Z')
        np.testing.assert_array_equal(worked_matrix.entries, WORKED_MATRIX)

    def test_value_lookup(self, worked_matrix):
        assert worked_matrix.value('a', 'X') is TernaryValue.IN
        assert worked_matrix.value('c', 'X') is TernaryValue.OUT
        assert worked_matrix.value('g', 'Z') is TernaryValue.UNCERTAIN

    def test_provenance_records_first_writer(self, worked_matrix):
        assert worked_matrix.provenance[('a', 'X')] == 0
        assert worked_matrix.provenance[('e', 'Z')] == 8
        assert ('g', 'X') not in worked_matrix.provenance

    def test_entries_are_read_only(self, worked_matrix):
        with pytest.raises(ValueError):
            worked_matrix.entries[0, 0] = 0

    def test_no_constraints_is_all_uncertain(self):
        matrix = build_matrix(SCPInstance(('a', 'b'), ('X',), ()))
        assert matrix == TernaryMatrix.uncertain(('a', 'b'), ('X',))
        assert matrix.uncertain_count == 2

    def test_contradiction(self):
        """Opposite assertions name the cell and both constraint indices."""
        instance = SCPInstance(('c',), ('X',), (Inclusion('c', 'X'), Exclusion('c', 'X')))
        with pytest.raises(ContradictionError) as excinfo:
            build_matrix(instance)
        error = excinfo.value
        assert (error.element, error.set_name) == ('c', 'X')
        assert (error.first_index, error.conflicting_index) == (0, 1)
        assert error.first_value is TernaryValue.IN
        assert error.conflicting_value is TernaryValue.OUT
        assert "c in X" in str(error) and "c !in X" in str(error)

    def test_contradiction_through_difference(self):
        instance = parse_scp("universe: a\nsets: X Y\nX \\ Y = {a}\na in Y\n")
        with pytest.raises(ContradictionError) as excinfo:
            build_matrix(instance)
        assert (excinfo.value.element, excinfo.value.set_name) == ('a', 'Y')
        assert (excinfo.value.first_index, excinfo.value.conflicting_index) == (0, 1)

    def test_invalid_instance_is_rejected(self):
        with pytest.raises(InvalidInstanceError) as excinfo:
            build_matrix(SCPInstance(('a',), ('X',), (Inclusion('a', 'Q'),)))
        assert not excinfo.value.result.is_valid

    def test_idempotent_constraints(self, worked_instance, worked_matrix):
        """Applying every constraint twice changes nothing."""
        doubled = worked_instance.with_constraints(worked_instance.constraints * 2)
        assert build_matrix(doubled) == worked_matrix

    def test_order_independence(self):
        """Permuting the constraints of 100 random instances never changes the matrix."""
        rng = np.random.default_rng(2024)
        for _ in range(100):
            instance = random_instance(rng, int(rng.integers(1, 7)), int(rng.integers(1, 5)),
                                       int(rng.integers(0, 12)))
            expected = build_matrix(instance)
            for _ in range(5):
                order = rng.permutation(len(instance.constraints))
                shuffled = instance.with_constraints([instance.constraints[i] for i in order])
                assert build_matrix(shuffled) == expected

    def test_contradiction_survives_every_order(self):
        """A contradictory constraint list stays contradictory under any permutation."""
        rng = np.random.default_rng(77)
        for _ in range(200):
            instance = random_instance(rng, int(rng.integers(1, 7)), int(rng.integers(1, 5)),
                                       int(rng.integers(1, 12)))
            picked = instance.constraints[int(rng.integers(len(instance.constraints)))]
            element, set_name, member = picked.assertions()[0]
            opposite = Exclusion(element, set_name) if member else Inclusion(element, set_name)
            constraints = list(instance.constraints) + [opposite]
            for _ in range(30):
                order = rng.permutation(len(constraints))
                with pytest.raises(ContradictionError):
                    build_matrix(instance.with_constraints([constraints[i] for i in order]))

    def test_equality_ignores_provenance(self):
        reordered = SCPInstance(('a', 'b'), ('X',), (Inclusion('b', 'X'), Inclusion('a', 'X')))
        original = SCPInstance(('a', 'b'), ('X',), (Inclusion('a', 'X'), Inclusion('b', 'X')))
        assert build_matrix(reordered) == build_matrix(original)
        assert build_matrix(reordered).provenance != build_matrix(original).provenance


class TestMatrixViews:

    def test_uncertain_cells_row_major(self, worked_matrix):
        assert uncertain_cells(worked_matrix) == WORKED_UNCERTAIN

    def test_binary_table(self, worked_matrix):
        """Determinate cells map to 1/0 and uncertain cells have no binary value."""
        table = binary_table(worked_matrix)
        assert table[0] == [1, 0, 1]
        assert table[2] == [0, None, None]
        assert table[6] == [None, None, None]
        for row, codes in zip(table, WORKED_MATRIX):
            for value, code in zip(row, codes):
                if code != 0:
                    assert value == (1 if code == 1 else 0)

    def test_to_frame(self, worked_matrix):
        frame = worked_matrix.to_frame()
        assert list(frame.index) == list('abcdefg')
        assert list(frame.columns) == ['X', 'Y', 'Z']
        assert frame.loc['b', 'Y'] == 1

    def test_dict_round_trip(self, worked_matrix):
        document = worked_matrix.to_dict()
        assert document['entries'][0] == [1, -1, 1]
        assert TernaryMatrix.from_dict(document) == worked_matrix

    def test_rejects_bad_codes(self):
        with pytest.raises(ValueError):
            TernaryMatrix(('a',), ('X',), np.array([[2]]))

    @pytest.mark.parametrize("entries", [np.array([[0.7]]), np.array([[1.0]]), np.array([[True]]),
                                         np.array([['1']])])
    def test_rejects_non_integer_codes(self, entries):
        """Codes are checked as given; nothing is truncated into a valid code."""
        with pytest.raises(ValueError):
            TernaryMatrix(('a',), ('X',), entries)

    def test_from_dict_rejects_fractional_entries(self, worked_matrix):
        document = worked_matrix.to_dict()
        document['entries'][6] = [0.4, 0, -0.2]
        with pytest.raises(ValueError):
            TernaryMatrix.from_dict(document)

    def test_empty_grid(self):
        matrix = TernaryMatrix.from_dict({'elements': [], 'sets': ['X'], 'entries': []})
        assert matrix.shape == (0, 1)


class TestDescribeSet:

    @pytest.mark.parametrize("set_name, members, non_members, uncertain", [
        ('X', ('a', 'd'), ('b', 'c', 'f'), ('e', 'g')),
        ('Y', ('b', 'f'), ('a', 'd'), ('c', 'e', 'g')),
        ('Z', ('a', 'b', 'e'), ('d',), ('c', 'f', 'g')),
    ])
    def test_partition(self, worked_matrix, set_name, members, non_members, uncertain):
        description = describe_set(worked_matrix, set_name)
        assert description.members == members
        assert description.non_members == non_members
        assert description.uncertain == uncertain

    def test_partition_covers_universe(self, worked_matrix):
        for set_name in worked_matrix.sets:
            d = describe_set(worked_matrix, set_name)
            assert sorted(d.members + d.non_members + d.uncertain) == sorted(worked_matrix.elements)

    def test_str(self, worked_matrix):
        assert str(describe_set(worked_matrix, 'X')) == "X: in {a, d}; out {b, c, f}; uncertain {e, g}"

    def test_unknown_set(self, worked_matrix):
        with pytest.raises(UnknownSetError) as excinfo:
            describe_set(worked_matrix, 'W')
        assert "known sets: X, Y, Z" in str(excinfo.value)


class TestVariants:

    def test_variants_of_x(self, worked_matrix):
        """First uncertain element (e) is the most significant bit."""
        variants = enumerate_variants(worked_matrix, 'X')
        assert [v.name for v in variants] == ['X-0', 'X-1', 'X-2', 'X-3']
        assert [v.members for v in variants] == [
            ('a', 'd'),
            ('a', 'd', 'g'),
            ('a', 'd', 'e'),
            ('a', 'd', 'e', 'g'),
        ]
        assert str(variants[3]) == "X-3 = {a, d, e, g}"

    def test_variants_of_z(self, worked_matrix):
        variants = enumerate_variants(worked_matrix, 'Z')
        assert len(variants) == 8
        assert len({v.members for v in variants}) == 8
        assert variants[0].members == ('a', 'b', 'e')
        assert variants[7].members == ('a', 'b', 'c', 'e', 'f', 'g')

    def test_variant_count_law(self):
        """Every set yields exactly 2^u distinct variants."""
        rng = np.random.default_rng(7)
        for _ in range(20):
            matrix = build_matrix(random_instance(rng, 5, 3, int(rng.integers(0, 8))))
            for set_name in matrix.sets:
                u = len(describe_set(matrix, set_name).uncertain)
                variants = enumerate_variants(matrix, set_name)
                assert len(variants) == 2 ** u
                assert len({v.members for v in variants}) == 2 ** u

    def test_determinate_set_has_one_variant(self):
        matrix = build_matrix(SCPInstance(('a', 'b'), ('X',), (Inclusion('a', 'X'), Exclusion('b', 'X'))))
        assert [v.members for v in enumerate_variants(matrix, 'X')] == [('a',)]

    def test_cap_is_checked_before_generation(self, worked_matrix):
        with pytest.raises(CapExceededError) as excinfo:
            iter_variants(worked_matrix, 'Z', cap=2)
        assert (excinfo.value.requested, excinfo.value.cap) == (3, 2)

    def test_iter_variants_is_lazy(self, worked_matrix):
        first_two = list(itertools.islice(iter_variants(worked_matrix, 'Z'), 2))
        assert [v.index for v in first_two] == [0, 1]
