"""Seed states, coset representatives, code assembly, and puncturing."""

import numpy as np
import pytest

from cosetqec import (
    GroupError,
    QuantumCode,
    SeedState,
    StabilizerGroup,
    build_code,
    coset_representative,
    format_pauli,
    parse_bits,
    parse_pauli,
    punctured_seed,
    random_group,
    seed_state,
)
from cosetqec.codes import SEED_PUNCTURED, SEED_STABILIZER
from cosetqec.golden import diagonal_group

from conftest import pauli_matrix


def group_of(*strings):
    width = len(strings[0])
    return StabilizerGroup(tuple(parse_pauli(s, width) for s in strings))


def seed_vector(seed: SeedState) -> np.ndarray:
    v = np.zeros(1 << seed.width, dtype=complex)
    for unit, string in seed.terms:
        v[string] = 1j ** unit
    return v


class TestSeedState:
    def test_diagonal_group_fixes_base(self):
        seed = seed_state(diagonal_group(3))
        assert seed.term_tokens() == [["+", "000"]]

    def test_bell_group(self):
        seed = seed_state(group_of("XX", "ZZ"))
        assert seed.term_tokens() == [["+", "00"], ["+", "11"]]

    def test_ghz_group(self):
        seed = seed_state(group_of("XXX", "ZZI", "IZZ"))
        assert seed.term_tokens() == [["+", "000"], ["+", "111"]]

    def test_y_group_has_imaginary_unit(self):
        # the closure {I, Y} seeds |0> + i|1>; no sign choice removes the i
        seed = seed_state(group_of("Y"))
        assert seed.term_tokens() == [["+", "0"], ["+i", "1"]]

    def test_unnormalized_signs_refused(self):
        g = group_of("XX", "YY")  # diagonal subgroup {II, -ZZ} kills the sum
        with pytest.raises(GroupError, match="not sign-normalized"):
            seed_state(g)
        seed = seed_state(g.normalized(0))
        assert seed.term_tokens() == [["+", "00"], ["+", "11"]]

    def test_string_count_is_power_of_two(self):
        for s in range(10):
            g = random_group(4, seed=s).normalized(0)
            n = len(seed_state(g).terms)
            assert n & (n - 1) == 0

    def test_strings_form_xor_subgroup(self):
        for s in range(10):
            g = random_group(4, seed=s).normalized(0)
            strings = seed_state(g).strings
            assert 0 in strings
            assert all(a ^ b in strings for a in strings for b in strings)

    def test_strings_are_x_image_of_closure(self):
        for s in range(10):
            g = random_group(4, seed=100 + s).normalized(0)
            assert seed_state(g).strings == {e.x for e in g.closure()}

    @pytest.mark.parametrize("seed_idx", range(6))
    def test_matches_dense_sum_of_closure(self, seed_idx):
        """The symbolic seed equals sum_S S|0> / |diagonal subgroup|,
        computed with the independent matrix oracle."""
        g = random_group(3, seed=seed_idx).normalized(0)
        total = np.zeros(8, dtype=complex)
        e0 = np.zeros(8, dtype=complex)
        e0[0] = 1
        for elem in g.closure():
            total += pauli_matrix(elem) @ e0
        sym = seed_vector(seed_state(g))
        d = len(g.closure()) // np.count_nonzero(sym)
        assert np.array_equal(total, d * sym)

    def test_nonzero_base(self):
        g = diagonal_group(2)
        base = parse_bits("10")
        seed = seed_state(g.normalized(base), base)
        assert seed.term_tokens() == [["+", "10"]]
        assert seed.base == base


class TestCosetRepresentative:
    def test_diagonal_all_ones(self):
        rep = coset_representative(diagonal_group(3), parse_bits("111"))
        assert format_pauli(rep) == "XXX"

    def test_zero_label_is_identity(self):
        rep = coset_representative(diagonal_group(3), 0)
        assert rep.is_identity

    def test_weight_tie_broken_by_letters(self):
        rep = coset_representative(group_of("Z"), 1)
        assert format_pauli(rep) == "X"  # X beats Y on the letter order

    def test_five_qubit_logical(self):
        # independently derived by enumerating all 32 coset members of
        # label 00001 and minimizing (weight, letters)
        g = group_of("XZZXI", "IXZZX", "XIXZZ", "ZXIXZ", "ZZZZZ")
        rep = coset_representative(g, parse_bits("00001"))
        assert format_pauli(rep) == "IIXYX"
        assert rep.weight == 3


class TestBuildCode:
    def test_repetition(self):
        code = build_code(diagonal_group(3), [0, 0b111])
        assert [format_pauli(op) for op in code.codeword_ops] == ["III", "XXX"]
        assert code.dimension == 2

    def test_five_qubit(self, five2):
        assert five2.dimension == 2
        assert len(five2.seed.terms) == 16

    def test_k1(self):
        code = build_code(diagonal_group(3), [0])
        assert code.dimension == 1

    def test_duplicate_labels_rejected(self):
        with pytest.raises(ValueError, match="duplicate"):
            build_code(diagonal_group(3), [0, 7, 7])

    def test_first_label_must_be_zero(self):
        with pytest.raises(ValueError, match="zero coset"):
            build_code(diagonal_group(3), [7, 0])

    def test_labels_checked_against_operators(self):
        good = build_code(diagonal_group(2), [0, 3])
        with pytest.raises(ValueError, match="not in coset"):
            QuantumCode(
                group=good.group,
                seed=good.seed,
                codeword_ops=good.codeword_ops,
                labels=(0, 1),
            )

    def test_json_round_trip(self, five2):
        again = QuantumCode.from_dict(five2.to_dict())
        assert again.codeword_ops == five2.codeword_ops
        assert again.labels == five2.labels
        assert again.seed.terms == five2.seed.terms
        assert again.seed.origin == SEED_STABILIZER


class TestPuncture:
    def make_full_seed(self):
        # all-X group: seed is the uniform superposition over all 8 strings
        return seed_state(group_of("XII", "IXI", "IIX").normalized(0))

    def test_removes_terms(self):
        seed = self.make_full_seed()
        cut = punctured_seed(seed, ["011", "101"])
        assert cut.origin == SEED_PUNCTURED
        assert len(cut.terms) == 6
        assert parse_bits("011") not in cut.strings

    def test_single_removal_rejected(self):
        with pytest.raises(ValueError, match="more than one"):
            punctured_seed(self.make_full_seed(), ["011"])

    def test_removing_everything_rejected(self):
        seed = seed_state(group_of("XXX", "ZZI", "IZZ").normalized(0))
        with pytest.raises(ValueError, match="every term"):
            punctured_seed(seed, ["000", "111"])

    def test_absent_string_rejected(self):
        seed = seed_state(group_of("XXX", "ZZI", "IZZ").normalized(0))
        with pytest.raises(ValueError, match="absent"):
            punctured_seed(seed, ["000", "010"])

    def test_code_with_punctured_seed(self):
        g = group_of("XII", "IXI", "IIX")
        cut = punctured_seed(seed_state(g.normalized(0)), ["011", "101"])
        code = build_code(g, [0, 1], seed=cut)
        assert code.seed.origin == SEED_PUNCTURED
        assert code.dimension == 2
