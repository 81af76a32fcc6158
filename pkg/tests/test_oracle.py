"""Dense-state engine: exact arithmetic and the structural sweeps."""

import random

import numpy as np
import pytest

from cosetqec import (
    DenseState,
    ErrorSet,
    OracleLimitError,
    PauliOperator,
    SeedState,
    build_code,
    check_correctable,
    check_eigenvectors,
    check_knill_laflamme,
    check_overlap_dichotomy,
    check_syndrome_orthogonality,
    codeword_states,
    parse_pauli,
    random_group,
    seed_state,
    syndrome_states,
)
from cosetqec.golden import (
    diagonal_group,
    single_qubit_errors,
    x_flips,
)
from cosetqec.stabilizer import StabilizerGroup

from conftest import pauli_matrix, state_vector


def group_of(*strings):
    width = len(strings[0])
    return StabilizerGroup(tuple(parse_pauli(s, width) for s in strings))


class TestDenseState:
    def test_materialize_single_term(self):
        s = DenseState.from_seed(SeedState(((0, 0),), 3))
        assert s.re[0] == 1 and s.norm2 == 1

    def test_materialize_bell(self):
        s = DenseState.from_seed(SeedState(((0, 0), (0, 3)), 2))
        assert s.re == (1, 0, 0, 1)

    def test_materialize_signed(self):
        s = DenseState.from_seed(SeedState(((0, 0), (2, 7)), 3))
        assert s.re[0] == 1 and s.re[7] == -1

    def test_apply_examples(self):
        zero = DenseState.from_basis(0, 1)
        one = DenseState.from_basis(1, 1)
        assert zero.apply(parse_pauli("X")).re == (0, 1)
        flipped = one.apply(parse_pauli("Z"))
        assert flipped.re == (0, -1)
        y = zero.apply(parse_pauli("Y"))
        assert y.re == (0, 0) and y.im == (0, 1)  # Y|0> = i|1>

    @pytest.mark.parametrize("p", [1, 2, 3])
    def test_apply_matches_matrix_action(self, p):
        rng = random.Random(7 * p)
        for _ in range(25):
            amps = [
                complex(rng.randint(-3, 3), rng.randint(-3, 3))
                for _ in range(1 << p)
            ]
            state = DenseState(
                tuple(int(a.real) for a in amps),
                tuple(int(a.imag) for a in amps),
                p,
            )
            op = PauliOperator(
                rng.randrange(4), rng.randrange(1 << p), rng.randrange(1 << p), p
            )
            expect = pauli_matrix(op) @ np.array(amps)
            assert np.array_equal(state_vector(state.apply(op)), expect)

    def test_apply_preserves_norm2(self):
        state = DenseState((2, -1, 0, 3), (1, 0, -2, 0), 2)
        op = parse_pauli("iXY")
        assert state.apply(op).norm2 == state.norm2

    def test_double_apply_matches_square(self):
        # s^2 = +I for Hermitian s, -I otherwise
        state = DenseState((1, 2, 3, 4), (0, -1, 1, 0), 2)
        for s in (parse_pauli("XY"), PauliOperator(0, 1, 1, 2)):
            twice = state.apply(s).apply(s)
            sq = s * s
            sign = 1 if sq.phase == 0 else -1
            assert twice.re == tuple(sign * r for r in state.re)
            assert twice.im == tuple(sign * i for i in state.im)

    @pytest.mark.parametrize("p", [2, 4, 6])
    def test_composition_matches_multiply(self, p):
        rng = random.Random(p)
        state = DenseState(
            tuple(rng.randint(-2, 2) for _ in range(1 << p)),
            tuple(rng.randint(-2, 2) for _ in range(1 << p)),
            p,
        )
        for _ in range(20):
            s1 = PauliOperator(
                rng.randrange(4), rng.randrange(1 << p), rng.randrange(1 << p), p
            )
            s2 = PauliOperator(
                rng.randrange(4), rng.randrange(1 << p), rng.randrange(1 << p), p
            )
            via_ops = state.apply(s2).apply(s1)
            via_product = state.apply(s1 * s2)
            assert via_ops == via_product

    def test_inner_product_examples(self):
        a = DenseState.from_basis(0, 3)
        b = DenseState.from_basis(7, 3)
        assert a.inner(b) == (0, 0)
        cat = DenseState.from_seed(SeedState(((0, 0), (0, 7)), 3))
        assert cat.inner(cat) == (2, 0)
        assert cat.norm2 == 2
        assert cat.inner(cat.apply(parse_pauli("ZII"))) == (0, 0)

    def test_inner_conjugates_left(self):
        u = DenseState((0, 0), (1, 0), 1)  # i|0>
        v = DenseState((1, 0), (0, 0), 1)  # |0>
        assert u.inner(v) == (0, -1)
        assert v.inner(u) == (0, 1)

    def test_eigencheck(self):
        zero = DenseState.from_basis(0, 3)
        seven = DenseState.from_basis(7, 3)
        assert zero.eigencheck(parse_pauli("ZII")) == 1
        assert seven.eigencheck(parse_pauli("ZII")) == -1
        assert zero.eigencheck(parse_pauli("XII")) is None

    def test_width_cap(self):
        with pytest.raises(OracleLimitError):
            DenseState.from_basis(0, 15)


class TestOverlapDichotomy:
    """<seed|S|seed> = 0 exactly when S is outside the group."""

    def test_diagonal_p2(self):
        report = check_overlap_dichotomy(diagonal_group(2))
        assert report.ok and report.cases == 16

    def test_bell_explicit_values(self):
        g = group_of("XX", "ZZ")
        seed = DenseState.from_seed(seed_state(g.normalized(0)))
        assert seed.inner(seed.apply(parse_pauli("XX"))) == (2, 0)  # +norm2
        assert seed.inner(seed.apply(parse_pauli("XI"))) == (0, 0)

    @pytest.mark.parametrize("p", [2, 3, 4])
    def test_random_groups(self, p):
        for k in range(5):
            assert check_overlap_dichotomy(random_group(p, seed=31 * p + k)).ok

    def test_y_group(self):
        assert check_overlap_dichotomy(group_of("Y")).ok


class TestEigenvectors:
    def test_golden_codes(self, golden_suite):
        for name, code, errs in golden_suite:
            report = check_eigenvectors(code, errs)
            assert report.ok, f"{name}: {report.violations[:2]}"

    def test_punctured_seed_can_fail(self):
        # a punctured seed is generally not stabilized by the full group
        g = group_of("XII", "IXI", "IIX")
        from cosetqec import punctured_seed

        cut = punctured_seed(seed_state(g.normalized(0)), ["011", "101"])
        code = build_code(g, [0], seed=cut)
        assert not check_eigenvectors(code).ok


class TestSyndromeOrthogonality:
    """Orthogonal exactly when the coset labels differ, both directions."""

    def test_repetition(self, rep3):
        report = check_syndrome_orthogonality(rep3, x_flips(3))
        assert report.ok and report.cases == 8 * 7 // 2

    def test_cat_negative_control(self, cat3):
        errs = ErrorSet(
            (PauliOperator.identity(3), parse_pauli("ZII"), parse_pauli("IZI"))
        )
        # same-coset errors give equal (hence non-orthogonal) states and
        # the biconditional still holds
        report = check_syndrome_orthogonality(cat3, errs)
        assert report.ok
        states = {(i, j): s for i, j, s in syndrome_states(cat3, errs)}
        assert not states[(1, 0)].is_orthogonal(states[(2, 0)])
        assert states[(1, 0)].inner(states[(2, 0)]) == (2, 0)

    def test_k1_identity_only(self):
        code = build_code(diagonal_group(2), [0])
        errs = ErrorSet((PauliOperator.identity(2),))
        report = check_syndrome_orthogonality(code, errs)
        assert report.ok and report.cases == 0

    def test_golden_suite(self, golden_suite):
        for name, code, errs in golden_suite:
            assert check_syndrome_orthogonality(code, errs).ok, name


class TestKnillLaflamme:
    def test_repetition_passes(self, rep3):
        assert check_knill_laflamme(rep3, x_flips(3)).passed

    def test_z_error_witness(self, rep3):
        # ZII acts as +1 on |000> but -1 on |111>: c_01 picked up from
        # codeword 0 is contradicted at codeword 1
        errs = ErrorSet((PauliOperator.identity(3), parse_pauli("ZII")))
        report = check_knill_laflamme(rep3, errs)
        assert not report.passed
        assert report.witness == (0, 1, 1, 1)

    def test_identity_only_passes(self, golden_suite):
        for name, code, errs in golden_suite:
            only_i = ErrorSet((PauliOperator.identity(code.width),))
            assert check_knill_laflamme(code, only_i).passed, name

    def test_five_qubit_passes(self, five2):
        assert check_knill_laflamme(five2, single_qubit_errors(5)).passed

    def test_degenerate_set_passes_kl_but_fails_labels(self, cat3):
        """An error that is itself a group element shares the identity's
        coset, so the label criterion rejects it as degenerate, yet it
        acts as +1 on the whole code space and the KL conditions hold.
        The discrepancy is a degeneracy instance, not a contradiction."""
        errs = ErrorSet((PauliOperator.identity(3), parse_pauli("ZZI")))
        verdict = check_correctable(cat3, errs)
        assert not verdict.correctable
        assert verdict.collision == (0, 0, 1, 0)
        assert check_knill_laflamme(cat3, errs).passed

    def test_correctable_implies_kl(self):
        # algebraic verdict => KL, for full-closure seeds
        from cosetqec import max_dimension

        for trial in range(8):
            p = 2 + (trial % 2)
            g = random_group(p, seed=100 + trial)
            # errors: representatives of the first three cosets reached
            errs = [PauliOperator.identity(p)]
            seen = {0}
            for x in range(1 << p):
                for z in range(1 << p):
                    op = PauliOperator.from_symplectic(x, z, p)
                    lab = g.syndrome(op)
                    if lab not in seen and len(errs) < 3:
                        seen.add(lab)
                        errs.append(op)
            errset = ErrorSet(tuple(errs))
            md = max_dimension(g, errset)
            code = build_code(g, list(md.labels[: min(md.dimension, 2)]))
            assert check_correctable(code, errset).correctable
            assert check_knill_laflamme(code, errset).passed


class TestCodewordStates:
    def test_repetition_materializes_basis(self, rep3):
        words = codeword_states(rep3)
        assert state_vector(words[0])[0] == 1
        assert state_vector(words[1])[7] == 1
        assert words[0].is_orthogonal(words[1])

    def test_codewords_orthogonal_across_golden(self, golden_suite):
        for name, code, _ in golden_suite:
            words = codeword_states(code)
            for a in range(len(words)):
                for b in range(a + 1, len(words)):
                    assert words[a].is_orthogonal(words[b]), name
