import itertools
import random

import pytest

from latnak.exceptions import PreconditionError
from latnak.lattice import (
    CompositionPair,
    GridPoint,
    LatticeSet,
    LatticeStep,
    apply_step,
    composition_pair,
    equivalent,
    intro_index_set,
    is_m_minus,
    is_m_plus,
    is_m_plus_t,
    is_young,
    m_gate,
    normalize,
    rho,
    sigma,
    step_gate,
    step_plan,
    translate,
    transpose,
    young_pq,
    young_pqr,
    young_shape,
)


def random_set(rng: random.Random, size: int = 8) -> LatticeSet:
    return LatticeSet.of((rng.randint(-3, 3), rng.randint(-3, 3)) for _ in range(size))


def rows_of(S: LatticeSet) -> dict[int, list[int]]:
    return {i: S.row(i) for i in S.rows()}


class TestLatticeSet:

    def test_points_are_ordered_lexicographically(self):
        S = LatticeSet.of([(2, 1), (1, 3), (1, 1)])

        assert S.ordered == (GridPoint(1, 1), GridPoint(1, 3), GridPoint(2, 1))
        assert list(S) == list(S.ordered)

    def test_rows_and_columns(self, y231):
        assert y231.row(1) == [1, 2, 3]
        assert y231.row(2) == [1, 2]
        assert y231.col(3) == [1]
        assert y231.rows() == [1, 2]
        assert y231.cols() == [1, 2, 3]

    def test_square(self, y231):
        assert y231.square(2, 2) == LatticeSet.of([(1, 1), (1, 2), (2, 1), (2, 2)])
        assert y231.square(2, 3) == LatticeSet.of([(1, 2), (1, 3), (2, 2)])
        assert y231.square(1, 1) == LatticeSet.of([(1, 1)])

    def test_dict_round_trip(self, y231):
        data = y231.to_dict()

        assert data["points"][0] == [1, 1]
        assert LatticeSet.from_dict(data) == y231

    def test_str(self, hook):
        assert str(hook) == "{(1,1), (1,2), (2,1)}"


class TestCompositionPair:

    def test_partial_sums(self):
        pair = CompositionPair((1, 2, 1), (1, 2, 2))

        assert pair.length == 3
        assert pair.p_bar(2) == 3
        assert pair.q_bar(3) == 5
        assert pair.n_p == 4
        assert pair.n_q == 5
        assert str(pair) == "(1,2,1;1,2,2)"

    def test_unequal_lengths_rejected(self):
        with pytest.raises(PreconditionError):
            CompositionPair((1,), (1, 2))

    def test_nonpositive_entries_rejected(self):
        with pytest.raises(PreconditionError):
            CompositionPair((1, 0), (1, 2))


class TestYoungDiagrams:

    def test_rectangle(self):
        S = young_pq(CompositionPair((3,), (4,)))

        assert len(S) == 12
        assert S == LatticeSet.of((i, j) for i in range(1, 4) for j in range(1, 5))

    def test_staircase_pair(self):
        S = young_pq(CompositionPair((1, 2, 1), (1, 2, 2)))

        assert [len(S.row(i)) for i in S.rows()] == [5, 3, 3, 1]
        assert all(S.row(i)[0] == 1 for i in S.rows())

    def test_single_point(self):
        assert young_pq(CompositionPair((1,), (1,))) == LatticeSet.of([(1, 1)])

    def test_young_pqr(self):
        assert rows_of(young_pqr(2, 8, 5)) == {1: list(range(1, 9)), 2: [1, 2, 3]}

        S = young_pqr(3, 10, 6)
        assert len(S) == 24
        assert S.row(2) == list(range(1, 11))
        assert S.row(3) == [1, 2, 3, 4]

    def test_young_pqr_zero_is_rectangle(self):
        assert young_pqr(2, 3, 0) == young_pq(CompositionPair((2,), (3,)))

    def test_young_pqr_full_removal(self):
        for p, q in [(2, 3), (3, 2), (4, 4)]:
            assert young_pqr(p, q, q) == young_pq(CompositionPair((p - 1,), (q,)))

    def test_young_pqr_out_of_range(self):
        with pytest.raises(PreconditionError):
            young_pqr(2, 3, 4)

        with pytest.raises(PreconditionError):
            young_pqr(0, 3, 0)

    def test_composition_pair_matches_young_pqr(self):
        for s, t, u in [(2, 3, 1), (3, 5, 2), (1, 4, 1), (3, 4, 0), (3, 4, 4)]:
            assert young_pq(composition_pair(s, t, u)) == young_pqr(s, t, u)

    def test_composition_pair_empty_diagram(self):
        with pytest.raises(PreconditionError):
            composition_pair(1, 3, 3)

    def test_intro_index_set(self):
        for s, t, u in [(2, 3, 1), (3, 4, 2), (2, 2, 0)]:
            assert intro_index_set(s, t, u) == young_pqr(s, t, u)

    def test_is_young(self, y231, hook):
        assert is_young(y231)
        assert is_young(hook)
        assert not is_young(LatticeSet.of([(1, 2)]))
        assert not is_young(LatticeSet.of([(1, 1), (2, 1), (2, 2)]))
        assert not is_young(LatticeSet())

    def test_young_shape(self, y231):
        assert young_shape(y231) == composition_pair(2, 3, 1)
        assert young_shape(young_pq(CompositionPair((1, 2, 1), (1, 2, 2)))) == CompositionPair((1, 2, 1), (1, 2, 2))

    def test_young_shape_rejects_skew(self):
        with pytest.raises(PreconditionError):
            young_shape(LatticeSet.of([(1, 2), (2, 1)]))


class TestPermutations:

    def test_sigma(self):
        S = LatticeSet.of([(0, 1), (0, 2), (1, 1), (1, 2)])

        assert sigma(S, 0) == LatticeSet.of([(0, 0), (0, 1), (1, 1), (1, 2)])

    def test_sigma_on_staircase_rows(self):
        S = sigma(young_pqr(2, 8, 5), 1)

        assert S.row(1) == list(range(0, 8))
        assert S.row(2) == [1, 2, 3]

    def test_sigma_ge_beyond_rows_is_identity(self, y231):
        assert sigma(y231, 5, "ge") == y231

    def test_rho(self):
        assert rho(LatticeSet.of([(1, 1), (1, 2)]), 1) == LatticeSet.of([(0, 1), (1, 2)])

    def test_rho_ge_below_columns_moves_everything(self, y231):
        assert rho(y231, 0, "ge") == translate(y231, (-1, 0))

    def test_inverse_round_trip(self, rng, sample_size):
        for _ in range(2 * sample_size):
            S = random_set(rng)
            k = rng.randint(-3, 3)
            side = rng.choice(["le", "ge"])

            assert sigma(sigma(S, k, side), k, side, inverse=True) == S
            assert rho(rho(S, k, side, inverse=True), k, side) == S
            assert len(sigma(S, k, side)) == len(S)

    def test_transpose_conjugates_sigma_into_rho(self, rng, sample_size):
        for _ in range(sample_size):
            S = random_set(rng)
            k = rng.randint(-3, 3)

            assert transpose(sigma(transpose(S), k)) == rho(S, k)

    def test_transpose_is_involution(self, y231):
        assert transpose(transpose(y231)) == y231

    def test_translate_and_normalize(self, y231):
        assert translate(y231, (0, 0)) == y231
        assert normalize(LatticeSet.of([(3, 5), (4, 5)])) == LatticeSet.of([(1, 1), (2, 1)])
        assert equivalent(y231, translate(y231, (2, -3)))
        assert not equivalent(y231, transpose(y231))

    def test_normalize_empty(self):
        with pytest.raises(PreconditionError):
            normalize(LatticeSet())


class TestMGates:

    def test_m_plus(self):
        S = LatticeSet.of([(0, j) for j in range(1, 9)] + [(1, j) for j in range(1, 4)])

        assert is_m_plus(S, 0)

    def test_m_plus_fails_when_next_row_sticks_out(self):
        S = LatticeSet.of([(0, j) for j in range(1, 9)] + [(1, j) for j in range(2, 10)])

        verdict = m_gate(S, 0)
        assert not verdict
        assert verdict.condition is not None
        assert verdict.condition.endswith("3")

    def test_sigma_turns_m_plus_into_m_minus(self):
        S = LatticeSet.of([(0, j) for j in range(1, 9)] + [(1, j) for j in range(1, 4)])

        assert is_m_minus(sigma(S, 0), 0)

    def test_m_plus_sets_map_to_m_minus_sets(self):
        # rows 0..3 are intervals of [0, 4] or empty; rows above k + 1 are never inspected
        intervals = [()] + [tuple(range(a, b + 1)) for a in range(5) for b in range(a, 5)]
        for rows in itertools.product(intervals, repeat=4):
            S = LatticeSet.of((i, j) for i, row in enumerate(rows) for j in row)
            for k in range(3):
                if is_m_plus(S, k):
                    assert is_m_minus(sigma(S, k), k), (rows, k)

    def test_gap_in_a_row(self):
        S = LatticeSet.of([(0, 1), (0, 3), (1, 1)])

        verdict = m_gate(S, 0)
        assert not verdict.passed
        assert "interval" in verdict.detail

    def test_empty_rows_are_flagged(self):
        S = LatticeSet.of([(0, 1), (0, 2)])

        verdict = m_gate(S, 0)
        assert verdict.passed
        assert verdict.empty_rows

    def test_transposed_gate(self):
        assert is_m_plus_t(transpose(LatticeSet.of([(0, 1), (0, 2), (1, 1)])), 0)

    def test_negative_k(self, y231):
        with pytest.raises(PreconditionError):
            m_gate(y231, -1)


class TestLatticeStep:

    def test_labels(self):
        assert LatticeStep("row", "le", 1).label == "σ≤1"
        assert LatticeStep("col", "ge", 2, inverse=True).label == "ρ⁻¹≥2"
        assert LatticeStep("row", "le", 0, length=3, width=2).label == "II[σ≤0, k=3, h=2]"

    def test_inverted_and_reflected(self):
        step = LatticeStep("row", "le", 1)

        assert step.inverted().inverse
        assert step.inverted().inverted() == step
        assert step.reflected() == LatticeStep("row", "ge", -1, inverse=True)
        assert step.transposed().axis == "col"

    def test_dict_round_trip(self):
        step = LatticeStep("col", "ge", 3, True, 3, 2)

        assert LatticeStep.from_dict(step.to_dict()) == step

    def test_block_shift(self):
        assert LatticeStep("row", "le", 0, length=3, width=2).shift == 1
        assert LatticeStep("row", "le", 0, length=4, width=3).shift == 2

    def test_block_shift_needs_multiple(self):
        with pytest.raises(PreconditionError):
            _ = LatticeStep("row", "le", 0, length=2, width=2).shift

    def test_single_step_plan(self, y231):
        plan = {m.source: m for m in step_plan(y231, LatticeStep("row", "le", 1))}

        assert plan[GridPoint(1, 2)].target == GridPoint(1, 1)
        assert plan[GridPoint(1, 2)].power == 1
        assert plan[GridPoint(2, 2)].target == GridPoint(2, 2)
        assert plan[GridPoint(2, 2)].power == 0

    def test_apply_step_matches_sigma_and_rho(self, y231):
        assert apply_step(y231, LatticeStep("row", "le", 1)) == sigma(y231, 1)
        assert apply_step(y231, LatticeStep("row", "ge", 2, inverse=True)) == sigma(y231, 2, "ge", inverse=True)
        assert apply_step(y231, LatticeStep("col", "le", 2)) == rho(y231, 2)

    def test_single_step_gate(self, y231):
        assert step_gate(y231, LatticeStep("row", "le", 1)).passed

    def test_block_step(self):
        S = LatticeSet.of([(i, j) for i in range(3) for j in (1, 2)] + [(3, 1)])
        step = LatticeStep("row", "le", 0, length=3, width=2)

        assert step_gate(S, step).passed

        T = apply_step(S, step)
        assert T.row(0) == [-2, -1]
        assert T.row(1) == [-1, 0]
        assert T.row(2) == [0, 1]
        assert T.row(3) == [1]

    def test_block_gate_failures(self):
        S = LatticeSet.of([(i, j) for i in range(3) for j in (1, 2)])

        assert step_gate(S, LatticeStep("row", "le", 0, length=4, width=3)).condition == "II.h"
        assert step_gate(S, LatticeStep("row", "le", 0, length=2, width=2)).condition == "II.k"

        uneven = LatticeSet.of([(0, 1), (0, 2), (1, 2), (1, 3), (2, 1), (2, 2)])
        assert step_gate(uneven, LatticeStep("row", "le", 0, length=3, width=2)).condition == "II.rows"
