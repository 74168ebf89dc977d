import random

import pytest

from latnak.algebra import BoundQuiverAlgebra, cartan, nakayama, path_algebra_an
from latnak.exceptions import ComplexError, IsoSearchError, NotAChainMap, PreconditionError, VerificationError
from latnak.homalg import (
    ChainMap,
    ProjComplex,
    check_exceptional_sequence,
    cone,
    direct_sum,
    dual,
    exceptional_decompose,
    fractional_cy,
    hom_dims,
    injective_resolution_as_proj,
    is_acyclic,
    is_in_thick,
    is_iso,
    is_iso_map,
    minimize,
    project_left,
    project_right,
    serre,
    serre_inverse,
    serre_power,
    shift,
    simple_resolution,
    stalk_projective,
    sub_serre,
    sub_serre_inverse,
    zero_complex,
)
from latnak.homalg.projections import Projection, check_projection
from latnak.invariants import class_vector, euler_form


def identity(X: ProjComplex) -> ChainMap:
    algebra = X.algebra
    return ChainMap(
        X,
        X,
        {k: {(i, i): algebra.unit(v) for i, v in enumerate(vertices)} for k, vertices in X.terms.items()},
    )


def random_nakayama(rng: random.Random) -> BoundQuiverAlgebra:
    n = rng.randint(3, 5)
    return nakayama(n, rng.randint(2, n))


def random_object(rng: random.Random, algebra: BoundQuiverAlgebra) -> ProjComplex:
    """A shifted projective, simple or injective, or the sum of two of them"""
    builders = [stalk_projective, simple_resolution, injective_resolution_as_proj]
    pieces = [
        shift(rng.choice(builders)(algebra, rng.choice(list(algebra.vertices))), rng.randint(-1, 1))
        for _ in range(rng.randint(1, 2))
    ]
    return direct_sum(pieces, algebra)


class TestComplexes:

    def test_shift_moves_degrees(self, ka2):
        P = stalk_projective(ka2, 1)

        assert shift(P, 1).terms == {-1: (1,)}
        assert shift(P, -2).terms == {2: (1,)}
        assert shift(P, 0) is P

    def test_unknown_vertex(self, ka2):
        with pytest.raises(ComplexError):
            stalk_projective(ka2, 5)

    def test_entry_between_wrong_vertices(self, ka2):
        with pytest.raises(ComplexError):
            ProjComplex(ka2, {0: (1,), 1: (2,)}, {0: {(0, 0): ka2.unit(1)}})

    def test_direct_sum(self, ka2):
        X = direct_sum([stalk_projective(ka2, 1), simple_resolution(ka2, 2)])

        assert X.terms == {-1: (1,), 0: (1, 2)}
        assert X.size == 3

    def test_cone_of_identity_is_contractible(self, ka2):
        f = identity(simple_resolution(ka2, 2))
        C = cone(f)

        assert is_acyclic(C)
        assert minimize(C).is_zero
        assert is_iso_map(f)

    def test_cone_rejects_non_chain_maps(self, ka2):
        X = simple_resolution(ka2, 2)
        P = stalk_projective(ka2, 1, degree=-1)
        f = ChainMap(P, X, {-1: {(0, 0): ka2.unit(1)}})

        assert not f.is_chain_map()
        with pytest.raises(NotAChainMap):
            cone(f)

    def test_simple_resolutions_are_minimal(self, ka3):
        for v in ka3.vertices:
            assert simple_resolution(ka3, v).is_minimal()

    def test_dual(self, ka2):
        X = stalk_projective(ka2, 1, degree=2)

        assert dual(X).terms == {-2: (1,)}
        assert dual(X).algebra is ka2.opposite
        assert dual(dual(X)).algebra is ka2


class TestHom:

    def test_hom_between_projectives(self, ka2):
        P1, P2 = stalk_projective(ka2, 1), stalk_projective(ka2, 2)

        assert hom_dims(P1, P2) == {0: 1}
        assert hom_dims(P2, P1) == {}
        assert hom_dims(P1, shift(P1, 1)) == {-1: 1}

    def test_is_iso(self, ka2):
        P1, P2 = stalk_projective(ka2, 1), stalk_projective(ka2, 2)

        assert is_iso(P1, P1)
        assert not is_iso(P1, P2)
        assert not is_iso(P1, shift(P1, 1))

    def test_iso_cap(self, ka2):
        P = stalk_projective(ka2, 1)

        with pytest.raises(IsoSearchError):
            is_iso(P, P, cap=0)

    def test_euler_form_matches_hom_dims(self, rng):
        for _ in range(20):
            algebra = random_nakayama(rng)
            X, Y = random_object(rng, algebra), random_object(rng, algebra)
            chi = sum((-1) ** n * d for n, d in hom_dims(X, Y).items())

            assert euler_form(cartan(algebra), class_vector(X), class_vector(Y)) == chi

    def test_minimize_keeps_hom_dims(self, rng, sample_size):
        for _ in range(sample_size // 5):
            algebra = random_nakayama(rng)
            X, Y = random_object(rng, algebra), random_object(rng, algebra)
            padded = direct_sum([X, cone(identity(random_object(rng, algebra)))])

            assert not padded.is_minimal()
            assert hom_dims(minimize(padded), Y) == hom_dims(padded, Y) == hom_dims(X, Y)
            assert is_iso(minimize(padded), X)


class TestResolutions:

    def test_simple_resolutions(self, ka2):
        assert simple_resolution(ka2, 1).terms == {0: (1,)}
        assert simple_resolution(ka2, 2).terms == {-1: (1,), 0: (2,)}

    def test_injectives(self, ka2):
        assert is_iso(injective_resolution_as_proj(ka2, 1), stalk_projective(ka2, 2))
        assert injective_resolution_as_proj(ka2, 2).terms == {-1: (1,), 0: (2,)}

    def test_resolution_is_not_acyclic(self, n42):
        assert not is_acyclic(simple_resolution(n42, 1))


class TestSerre:

    def test_serre_of_projective_is_injective(self, ka2):
        assert is_iso(serre(stalk_projective(ka2, 1)), stalk_projective(ka2, 2))

    def test_serre_inverse(self, n42):
        for v in n42.vertices:
            P = stalk_projective(n42, v)
            assert is_iso(serre_inverse(serre(P)), P)

    def test_serre_power_zero(self, ka3):
        P = stalk_projective(ka3, 2)

        assert serre_power(P, 0) is P

    @pytest.mark.parametrize("p", [1, 2, 3, 4, 5])
    def test_fractional_calabi_yau_path_algebras(self, p):
        assert fractional_cy(path_algebra_an(p), p + 1, p - 1)

    def test_not_fractional_calabi_yau(self):
        assert not fractional_cy(path_algebra_an(3), 4, 1)

    def test_nakayama_serre_round_trip(self):
        algebra = nakayama(5, 3)
        P = stalk_projective(algebra, 3)

        assert is_iso(serre_power(serre_power(P, 2), -2), P)

    def test_serre_duality(self, rng):
        for _ in range(30):
            algebra = random_nakayama(rng)
            X, Y = random_object(rng, algebra), random_object(rng, algebra)

            assert hom_dims(Y, serre(X)) == {-n: d for n, d in hom_dims(X, Y).items()}


class TestProjections:

    def test_exceptional_sequence(self, ka2):
        P1, P2 = stalk_projective(ka2, 1), stalk_projective(ka2, 2)

        assert check_exceptional_sequence([P2, P1]) == (True, "")

        passed, reason = check_exceptional_sequence([P1, P2])
        assert not passed
        assert "Hom(E_1, E_2[n])" in reason

    def test_thick_membership(self, ka2):
        P1, P2 = stalk_projective(ka2, 1), stalk_projective(ka2, 2)

        assert is_in_thick([P1], shift(P1, 2))
        assert not is_in_thick([P1], P2)
        assert is_in_thick([P2, P1], simple_resolution(ka2, 2))

    def test_right_projection(self, ka2):
        P1, P2 = stalk_projective(ka2, 1), stalk_projective(ka2, 2)

        assert is_iso(project_right([P1], P2), P1)

    def test_left_projection(self, ka2):
        P1, P2 = stalk_projective(ka2, 1), stalk_projective(ka2, 2)

        assert is_iso(project_left([P2], P1), P2)

    def test_decompose(self, ka2):
        P1 = stalk_projective(ka2, 1)
        X = direct_sum([P1, shift(P1, 1)])

        assert exceptional_decompose(P1, X) == [(0, 1), (1, 1)]

    def test_sub_serre_outside(self, ka2):
        with pytest.raises(PreconditionError):
            sub_serre([stalk_projective(ka2, 1)], stalk_projective(ka2, 2))

    def test_sub_serre_of_exceptional_object_is_identity(self, ka2):
        P1 = stalk_projective(ka2, 1)

        assert is_iso(sub_serre([P1], shift(P1, 1)), shift(P1, 1))

    def test_sub_serre_on_full_sequence(self, ka3):
        E = [stalk_projective(ka3, v) for v in (3, 2, 1)]

        for X in (stalk_projective(ka3, 1), simple_resolution(ka3, 2)):
            assert is_iso(sub_serre(E, X), serre(X))

    def test_sub_serre_inverse_round_trip(self, ka3):
        E = [stalk_projective(ka3, 2), stalk_projective(ka3, 1)]
        X = stalk_projective(ka3, 1)

        assert is_iso(sub_serre_inverse(E, sub_serre(E, X)), X)

    def test_projection_outside_the_subcategory_is_rejected(self, ka2):
        P1, P2 = stalk_projective(ka2, 1), stalk_projective(ka2, 2)

        with pytest.raises(VerificationError, match="not in the thick subcategory"):
            check_projection([P1], Projection(P2, zero_complex(ka2)), "right")
        with pytest.raises(VerificationError, match="not in the thick subcategory"):
            check_projection([P1], Projection(P2, zero_complex(ka2)), "left")

    def test_projection_with_non_orthogonal_complement_is_rejected(self, ka2):
        P1 = stalk_projective(ka2, 1)

        with pytest.raises(VerificationError, match="complement not orthogonal"):
            check_projection([P1], Projection(P1, P1), "right")

    def test_computed_projections_pass_their_checks(self, ka2):
        P1, P2 = stalk_projective(ka2, 1), stalk_projective(ka2, 2)

        check_projection([P1], Projection(project_right([P1], P2), zero_complex(ka2)), "right")
        check_projection([P2], Projection(project_left([P2], P1), zero_complex(ka2)), "left")
