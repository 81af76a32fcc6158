"""Sumset distinctness, greedy dimension, and the code search."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cosetqec import (
    ErrorSet,
    PauliOperator,
    check_correctable,
    check_syndrome_orthogonality,
    max_dimension,
    parse_pauli,
    search_code,
    sumset_distinct,
)
from cosetqec.golden import (
    diagonal_group,
    single_qubit_errors,
    x_flips,
)

labels_strategy = st.lists(
    st.integers(0, 31), min_size=1, max_size=6, unique=True
)


class TestSumset:
    def test_examples(self):
        assert sumset_distinct([0b000, 0b001, 0b010, 0b100], [0b000, 0b111])
        assert not sumset_distinct([0, 1], [0, 1])
        assert sumset_distinct([0, 1, 5], [0])

    @settings(max_examples=150, deadline=None)
    @given(labels_strategy, labels_strategy)
    def test_symmetric(self, e, c):
        assert sumset_distinct(e, c) == sumset_distinct(c, e)

    @settings(max_examples=150, deadline=None)
    @given(labels_strategy, labels_strategy, st.integers(0, 31))
    def test_translation_invariant(self, e, c, t):
        assert sumset_distinct(e, c) == sumset_distinct([x ^ t for x in e], c)


class TestMaxDimension:
    def test_diagonal_x_flips(self):
        """Greedy scan over the diagonal group: 001..110 all collide with
        the error-label differences, 111 is the first survivor after 000."""
        result = max_dimension(diagonal_group(3), x_flips(3))
        assert result.dimension == 2
        assert result.labels == (0b000, 0b111)
        assert result.degenerate_pair is None

    def test_identity_only_keeps_everything(self):
        errs = ErrorSet((PauliOperator.identity(3),))
        result = max_dimension(diagonal_group(3), errs)
        assert result.dimension == 8
        assert result.labels == tuple(range(8))

    def test_degenerate_pair_reported(self):
        errs = ErrorSet(
            (PauliOperator.identity(3), parse_pauli("ZII"), parse_pauli("ZZZ"))
        )
        # both ZII and ZZZ are in the diagonal group: labels 000 collide
        # with the identity's
        result = max_dimension(diagonal_group(3), errs)
        assert result.degenerate_pair == (0, 1)

    def test_pigeonhole_bound(self):
        for k in range(5):
            from cosetqec import random_group

            g = random_group(4, seed=k)
            errs = single_qubit_errors(4)
            result = max_dimension(g, errs)
            if result.degenerate_pair is None:
                assert result.dimension * len(errs) <= 16 * 16


class TestSearch:
    def test_exhaustive_p3_x_flips(self):
        errs = x_flips(3)
        result = search_code(errs, 2, strategy="exhaustive")
        assert result.found
        verdict = check_correctable(result.code, errs)
        assert verdict.correctable
        assert check_syndrome_orthogonality(result.code, errs).ok

    def test_random_p5_single_qubit_errors(self):
        errs = single_qubit_errors(5)
        result = search_code(errs, 2, strategy="random", budget=100_000, seed=7)
        assert result.found
        assert check_correctable(result.code, errs).correctable
        assert check_syndrome_orthogonality(result.code, errs).ok

    def test_impossible_by_counting(self):
        errs = ErrorSet(
            (
                PauliOperator.identity(1),
                parse_pauli("X"),
                parse_pauli("Y"),
                parse_pauli("Z"),
            )
        )
        result = search_code(errs, 2, strategy="random", budget=10)
        assert not result.found
        assert "counting" in result.reason

    def test_not_found_message_hedges(self):
        # zero budget scans nothing; the message must say not-found is not
        # a nonexistence proof
        errs = single_qubit_errors(5)
        result = search_code(errs, 2, strategy="random", budget=0, seed=1)
        assert not result.found
        assert "not a proof" in result.reason

    def test_deterministic_in_seed(self):
        errs = single_qubit_errors(5)
        a = search_code(errs, 2, strategy="random", budget=50_000, seed=3)
        b = search_code(errs, 2, strategy="random", budget=50_000, seed=3)
        assert a.found
        assert a.hit_index == b.hit_index
        assert a.code.group.generators == b.code.group.generators

    def test_exhaustive_refused_beyond_width_3(self):
        errs = x_flips(4)  # 5 errors x K=2 fits in 2^4, so counting passes
        with pytest.raises(ValueError, match="width <= 3"):
            search_code(errs, 2, strategy="exhaustive")

    def test_workers_match_sequential(self):
        errs = single_qubit_errors(5)
        seq = search_code(errs, 2, strategy="random", budget=6000, seed=11, workers=1)
        par = search_code(errs, 2, strategy="random", budget=6000, seed=11, workers=2)
        assert seq.found and par.found
        assert seq.hit_index == par.hit_index
        assert seq.code.group.generators == par.code.group.generators
        assert seq.code.labels == par.code.labels
