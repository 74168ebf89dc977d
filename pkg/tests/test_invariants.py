from fractions import Fraction

import pytest

from latnak.algebra import IntMatrix, cartan, lattice_algebra, nakayama, path_algebra_an
from latnak.cli.pairs import enumerate_pairs, pair_row
from latnak.exceptions import NonUnimodularCartan, PreconditionError
from latnak.homalg import shift, stalk_projective
from latnak.invariants import (
    Certificate,
    IntPolynomial,
    certify_matrices,
    certify_pair,
    class_vector,
    coxeter_matrix,
    coxeter_polynomial,
    euler_form,
    is_self_reciprocal,
)
from latnak.lattice import young_pqr


class TestIntPolynomial:

    def test_strips_trailing_zeros(self):
        polynomial = IntPolynomial((1, 2, 0, 0))

        assert polynomial.coefficients == (1, 2)
        assert polynomial.degree == 1

    def test_str(self):
        assert str(IntPolynomial((1, 1, 1))) == "x^2 + x + 1"
        assert str(IntPolynomial((-1, 0, 2))) == "2x^2 - 1"
        assert str(IntPolynomial((0, -1))) == "-x"
        assert str(IntPolynomial()) == "0"

    def test_self_reciprocal(self):
        assert is_self_reciprocal(IntPolynomial((1, 1, 1)))
        assert is_self_reciprocal(IntPolynomial((1, 0, -1)))
        assert not is_self_reciprocal(IntPolynomial((1, 2)))


class TestCoxeter:

    def test_coxeter_matrix_of_ka2(self, ka2):
        Phi = coxeter_matrix(cartan(ka2))

        assert Phi.entries == ((0, 1), (-1, -1))

    def test_identity(self):
        C = IntMatrix((1, 2, 3), ((1, 0, 0), (0, 1, 0), (0, 0, 1)))

        assert coxeter_matrix(C).entries == ((-1, 0, 0), (0, -1, 0), (0, 0, -1))
        assert coxeter_polynomial(C).coefficients == (1, 3, 3, 1)

    def test_path_algebras(self):
        for n in range(1, 7):
            assert coxeter_polynomial(cartan(path_algebra_an(n))).coefficients == (1,) * (n + 1)

    def test_polynomials_are_self_reciprocal(self, y231):
        for algebra in [nakayama(5, 2), nakayama(6, 4), lattice_algebra(y231)]:
            assert is_self_reciprocal(coxeter_polynomial(cartan(algebra)))

    def test_non_unimodular(self):
        C = IntMatrix((1, 2), ((2, 0), (0, 1)))

        with pytest.raises(NonUnimodularCartan):
            coxeter_matrix(C)

    def test_euler_form_on_projectives(self, ka2):
        C = cartan(ka2)

        assert euler_form(C, (1, 0), (1, 1)) == 1
        assert euler_form(C, (1, 1), (1, 0)) == 0

    def test_euler_form_size_mismatch(self, ka2):
        with pytest.raises(PreconditionError):
            euler_form(cartan(ka2), (1,), (1, 0))

    def test_class_vector_changes_sign_under_shift(self, ka3):
        P = stalk_projective(ka3, 2)

        assert class_vector(shift(P, 1)) == tuple(-c for c in class_vector(P))
        assert class_vector(shift(P, 2)) == class_vector(P)


class TestCertificates:

    def test_adjacent_nakayama_pair(self):
        certificate = certify_pair(nakayama(6, 4), nakayama(6, 3))

        assert certificate.consistent
        assert certificate.det_left == certificate.det_right == 1
        assert certificate.coxeter_left == certificate.coxeter_right

    def test_refuted_pair(self):
        certificate = certify_pair(nakayama(6, 4), nakayama(6, 5))

        assert certificate.verdict == "refuted"

    def test_nakayama_against_lattice_algebra(self):
        certificate = certify_pair(nakayama(7, 5), lattice_algebra(young_pqr(2, 4, 1)))

        assert certificate.consistent
        assert certificate.dim_left == nakayama(7, 5).dim

    def test_non_unimodular_is_refuted(self):
        C = IntMatrix((1, 2), ((2, 0), (0, 1)))
        certificate = certify_matrices(C, C)

        assert certificate.verdict == "refuted"
        assert certificate.coxeter_left is None

    def test_dict_round_trip(self):
        certificate = certify_pair(nakayama(5, 3), nakayama(5, 2))

        assert Certificate.from_dict(certificate.to_dict()) == certificate


class TestPairs:

    def test_pair_formulas(self):
        row = pair_row(2, 1, Fraction(0))

        assert (row.case, row.n, row.l) == ("a", 6, 3)

    def test_half_integral_case(self):
        row = pair_row(2, 1, Fraction(1, 2))

        assert (row.case, row.n, row.l) == ("b", 7, 4)

    def test_half_integral_needs_two_rows(self):
        with pytest.raises(PreconditionError):
            pair_row(3, 1, Fraction(1, 2))

    def test_invalid_parameters(self):
        with pytest.raises(PreconditionError):
            pair_row(1, 1, Fraction(0))

    def test_enumerate_small(self):
        rows = enumerate_pairs(2, 1, 1, 20)

        assert [(row.n, row.l) for row in rows] == [(6, 3), (7, 4), (8, 5)]
        assert [row.case for row in rows] == ["a", "b", "a"]

    def test_enumerate_respects_nmax(self):
        rows = enumerate_pairs(3, 3, 2, 12)

        assert rows
        assert all(row.n <= 12 for row in rows)
        assert len({(row.n, row.l) for row in rows}) == len(rows)

    def test_enumeration_is_stable(self):
        rows = enumerate_pairs(3, 3, 2, 40)

        assert rows == enumerate_pairs(3, 3, 2, 40)
        assert rows == sorted(rows, key=lambda row: (row.n, row.l))
        assert [row for row in rows if row.n <= 20] == enumerate_pairs(3, 3, 2, 20)

    def test_enumerated_pairs_are_consistent(self):
        for row in enumerate_pairs(2, 1, 1, 20):
            assert certify_pair(nakayama(row.n, row.l + 1), nakayama(row.n, row.l)).consistent

    def test_values_follow_columns(self):
        assert pair_row(2, 1, Fraction(1, 2)).values() == (2, 1, "1/2", "b", 7, 4, 5)
