import itertools

import pytest
from sympy.polys.domains import QQ

from latnak.algebra import (
    IntMatrix,
    Quiver,
    algebra_from_descriptor,
    arrows,
    cartan,
    cartan_lattice,
    intro_lattice_algebra,
    lattice_algebra,
    lattice_quiver,
    lattice_shriek,
    linear_quiver,
    nakayama,
    nakayama_lattice_parameters,
    nn,
    path_algebra_an,
)
from latnak.algebra.quiver import Arrow
from latnak.exceptions import PreconditionError, SerializationError
from latnak.lattice import CompositionPair, GridPoint, LatticeSet, young_pq, young_pqr
from latnak.linalg import make_field


def compositions(n: int, parts: int) -> list[tuple[int, ...]]:
    """Every composition of n into the given number of positive parts"""
    return [
        tuple(b - a for a, b in zip((0, *cuts), (*cuts, n)))
        for cuts in itertools.combinations(range(1, n), parts - 1)
    ]


class TestQuiver:

    def test_linear_quiver(self):
        quiver = linear_quiver(3)

        assert quiver.vertices == (1, 2, 3)
        assert [(a.source, a.target) for a in quiver.arrows] == [(1, 2), (2, 3)]
        assert quiver.is_acyclic()

    def test_reversed_linear_quiver(self):
        quiver = linear_quiver(3, reverse=True, start=4, prefix="c")

        assert quiver.vertices == (4, 5, 6)
        assert [(a.name, a.source, a.target) for a in quiver.arrows] == [("c4", 5, 4), ("c5", 6, 5)]

    def test_duplicate_arrow_names(self):
        with pytest.raises(PreconditionError):
            Quiver((1, 2), (Arrow("a", 1, 2), Arrow("a", 2, 1)))

    def test_cycle_needs_bound(self):
        quiver = Quiver((1, 2), (Arrow("a", 1, 2), Arrow("b", 2, 1)))

        assert not quiver.is_acyclic()
        with pytest.raises(PreconditionError):
            list(quiver.paths())

        assert len(list(quiver.paths(3))) == 2 + 2 + 2

    def test_lattice_quiver_on_square(self, square):
        names = sorted(a.name for a in lattice_quiver(square).arrows)

        assert names == ["u1,1", "u2,1", "v1,1", "v1,2"]

    def test_lattice_quiver_diagonal_arrow(self):
        quiver = lattice_quiver(LatticeSet.of([(1, 1), (2, 2)]))

        assert len(quiver.arrows) == 1
        assert quiver.arrows[0].source == GridPoint(2, 2)
        assert quiver.arrows[0].target == GridPoint(1, 1)


class TestNakayama:

    def test_dimensions(self):
        assert nakayama(4, 2).dim == 7
        assert nakayama(5, 3).dim == 12
        assert nakayama(3, 3).dim == path_algebra_an(3).dim == 6

    def test_large_loewy_length_is_path_algebra(self):
        assert cartan(nakayama(4, 7)).entries == cartan(path_algebra_an(4)).entries

    def test_cartan_of_ka2(self, ka2):
        assert cartan(ka2) == IntMatrix((1, 2), ((1, 0), (1, 1)))

    def test_cartan_counts_paths(self):
        C = cartan(nakayama(4, 2))

        assert C.entry(2, 1) == 1
        assert C.entry(3, 1) == 0
        assert C.entry(1, 2) == 0
        assert C.determinant() == 1

    def test_invalid_parameters(self):
        with pytest.raises(PreconditionError):
            nakayama(0, 2)

    def test_radical_square_zero(self):
        algebra = nn(range(2, 5))

        assert algebra.vertices == (2, 3, 4)
        assert algebra.dim == 5
        assert algebra.name == "N([2,4])"

    def test_nn_needs_interval(self):
        with pytest.raises(PreconditionError):
            nn([1, 3])

    def test_gabriel_quiver(self, ka3, n42):
        assert len(arrows(ka3)) == 2
        assert len(arrows(n42)) == 3

    def test_lattice_parameters(self):
        assert nakayama_lattice_parameters(7, 5) == (2, 4, 1)
        assert nakayama_lattice_parameters(6, 4) == (2, 3, 0)

    def test_composition(self, ka2):
        a = ka2.find(1, 2, ("a1",))
        assert a is not None

        assert ka2.compose(ka2.unit(2), {a: QQ.one}) == {a: QQ.one}
        assert ka2.compose({a: QQ.one}, ka2.unit(2)) == {}

    def test_prime_field(self):
        algebra = nakayama(4, 3, make_field("prime", 101))

        assert algebra.field.characteristic() == 101
        assert algebra.descriptor["field"] == "GF(101)"


class TestLatticeAlgebra:

    def test_square(self, square):
        algebra = lattice_algebra(square)

        assert algebra.dim == 9
        assert len(arrows(algebra)) == 4
        assert algebra.is_associative()

    def test_hook(self, hook):
        assert lattice_algebra(hook).dim == 5

    def test_diagonal_arrow_survives(self):
        algebra = lattice_algebra(LatticeSet.of([(1, 1), (2, 2)]))

        assert algebra.dim == 3
        assert len(algebra.paths(GridPoint(2, 2), GridPoint(1, 1))) == 1

    def test_cartan_matches_lattice_pattern(self):
        for n_p in range(1, 5):
            for n_q in range(1, 5):
                for r in range(1, min(n_p, n_q) + 1):
                    for p in compositions(n_p, r):
                        for q in compositions(n_q, r):
                            S = young_pq(CompositionPair(p, q))
                            assert cartan(lattice_algebra(S)) == cartan_lattice(S), (p, q)

    def test_cartan_matches_on_skew_sets(self):
        for S in [
            LatticeSet.of([(1, 2), (1, 3), (2, 1), (2, 2)]),
            LatticeSet.of([(1, 1), (2, 2), (3, 3)]),
            LatticeSet.of([(-1, 2), (0, 1), (0, 2), (1, 2)]),
        ]:
            assert cartan(lattice_algebra(S)) == cartan_lattice(S)

    def test_cartan_matches_on_random_sets(self, rng, sample_size):
        for _ in range(sample_size):
            S = LatticeSet.of((rng.randint(1, 5), rng.randint(1, 5)) for _ in range(rng.randint(1, 14)))

            assert cartan(lattice_algebra(S)) == cartan_lattice(S)

    def test_empty_support(self):
        with pytest.raises(PreconditionError):
            lattice_algebra(LatticeSet())

    def test_shriek_rectangle(self):
        algebra = lattice_shriek(CompositionPair((3,), (4,)))

        assert len(algebra.vertices) == 12
        assert algebra.dim == 60
        assert algebra.is_associative()

    def test_shriek_staircase(self):
        pair = CompositionPair((1, 2, 1), (1, 2, 2))
        algebra = lattice_shriek(pair)

        assert set(algebra.vertices) == set(young_pq(pair))

    @pytest.mark.parametrize("s", [1, 2, 3, 4])
    def test_intro_presentation(self, s):
        for t in range(1, 6):
            for u in range(t):
                algebra = intro_lattice_algebra(s, t, u)

                assert len(algebra.vertices) == len(young_pqr(s, t, u))
                assert cartan(algebra).entries == cartan_lattice(young_pqr(s, t, u)).entries, (s, t, u)

    def test_opposite(self, y231):
        algebra = lattice_algebra(y231)

        assert cartan(algebra.opposite) == cartan(algebra).transpose()
        assert algebra.opposite.opposite is algebra
        assert algebra.opposite.name.endswith("^op")


class TestDescriptors:

    def test_round_trip(self, y231):
        for algebra in [nakayama(4, 3), path_algebra_an(3), nn(range(1, 4)), lattice_algebra(y231)]:
            rebuilt = algebra_from_descriptor(algebra.descriptor)

            assert rebuilt.name == algebra.name
            assert rebuilt.dim == algebra.dim

    def test_opposite_descriptor(self, ka3):
        rebuilt = algebra_from_descriptor(ka3.opposite.descriptor)

        assert rebuilt.name == "KA_3^op"
        assert cartan(rebuilt) == cartan(ka3).transpose()

    def test_unknown_kind(self):
        with pytest.raises(SerializationError):
            algebra_from_descriptor({"kind": "bogus"})

    def test_missing_parameters(self):
        with pytest.raises(SerializationError):
            algebra_from_descriptor({"kind": "nakayama", "n": 3})


class TestIntMatrix:

    def test_shape_mismatch(self):
        with pytest.raises(PreconditionError):
            IntMatrix((1, 2), ((1, 0),))

    def test_duplicate_labels(self):
        with pytest.raises(PreconditionError):
            IntMatrix((1, 1), ((1, 0), (0, 1)))

    def test_permuted_and_restricted(self):
        C = IntMatrix((1, 2, 3), ((1, 0, 0), (1, 1, 0), (0, 1, 1)))

        assert C.permuted((3, 2, 1)).entries == ((1, 1, 0), (0, 1, 1), (0, 0, 1))
        assert C.restricted((1, 2)).entries == ((1, 0), (1, 1))
        assert C.total() == 5

    def test_dict_round_trip_with_grid_labels(self, y231):
        C = cartan_lattice(y231)

        assert IntMatrix.from_dict(C.to_dict()) == C

    def test_format(self, ka2):
        text = cartan(ka2).format()

        assert text.splitlines()[0].strip() == "1 2"
        assert "2: 1 1" in text
