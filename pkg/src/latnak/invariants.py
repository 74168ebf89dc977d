"""
Derived invariants of algebras of finite global dimension: Coxeter matrix and polynomial, Euler
form, and certificates comparing two algebras.

Equal Coxeter polynomials are necessary for a derived equivalence, never sufficient; a
certificate therefore only reports "consistent" or "refuted".
"""

import logging
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Literal

from sympy.polys.domains import QQ

from latnak.algebra import BoundQuiverAlgebra, IntMatrix, cartan
from latnak.exceptions import NonUnimodularCartan, PreconditionError

if TYPE_CHECKING:
    from latnak.homalg.complexes import ProjComplex

logger = logging.getLogger(__name__)

Verdict = Literal["consistent", "refuted"]

CERTIFICATE_NOTE = (
    "Equal Coxeter polynomials and unimodular Cartan matrices are necessary conditions for a derived "
    "equivalence; a consistent certificate is evidence, not a proof."
)


@dataclass(frozen=True)
class IntPolynomial:
    """
    Integer polynomial with coefficients in ascending degree

    Attributes:
        coefficients (tuple[int, ...]): c_0, c_1, ..., trailing zeros stripped
    """

    coefficients: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        coefficients = [int(c) for c in self.coefficients]
        while coefficients and coefficients[-1] == 0:
            coefficients.pop()
        object.__setattr__(self, "coefficients", tuple(coefficients))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coefficients

    def __str__(self) -> str:
        if self.is_zero:
            return "0"

        terms = []
        for power in range(self.degree, -1, -1):
            c = self.coefficients[power]
            if c == 0:
                continue
            magnitude = abs(c)
            if power == 0:
                body = str(magnitude)
            else:
                monomial = "x" if power == 1 else f"x^{power}"
                body = monomial if magnitude == 1 else f"{magnitude}{monomial}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))

        first_sign, first_body = terms[0]
        text = f"-{first_body}" if first_sign == "-" else first_body
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text

    def to_list(self) -> list[int]:
        return list(self.coefficients)


@dataclass(frozen=True)
class Certificate:
    """
    Comparison of the derived invariants of two algebras

    Attributes:
        left (str): Name of the left algebra
        right (str): Name of the right algebra
        dim_left (int | None): Dimension of the left algebra when known
        dim_right (int | None): Dimension of the right algebra when known
        det_left (int): Determinant of the left Cartan matrix
        det_right (int): Determinant of the right Cartan matrix
        coxeter_left (IntPolynomial | None): Left Coxeter polynomial, None when not unimodular
        coxeter_right (IntPolynomial | None): Right Coxeter polynomial, None when not unimodular
        verdict (Literal["consistent", "refuted"]): Outcome
    """

    left: str
    right: str
    dim_left: int | None
    dim_right: int | None
    det_left: int
    det_right: int
    coxeter_left: IntPolynomial | None
    coxeter_right: IntPolynomial | None
    verdict: Verdict
    note: str = field(default=CERTIFICATE_NOTE, compare=False)

    @property
    def consistent(self) -> bool:
        return self.verdict == "consistent"

    def to_dict(self) -> dict:
        return {
            "left": self.left,
            "right": self.right,
            "dim_left": self.dim_left,
            "dim_right": self.dim_right,
            "det_left": self.det_left,
            "det_right": self.det_right,
            "coxeter_left": self.coxeter_left.to_list() if self.coxeter_left else None,
            "coxeter_right": self.coxeter_right.to_list() if self.coxeter_right else None,
            "verdict": self.verdict,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Certificate":
        left_poly = data.get("coxeter_left")
        right_poly = data.get("coxeter_right")
        return cls(
            data["left"],
            data["right"],
            data.get("dim_left"),
            data.get("dim_right"),
            int(data["det_left"]),
            int(data["det_right"]),
            IntPolynomial(tuple(left_poly)) if left_poly is not None else None,
            IntPolynomial(tuple(right_poly)) if right_poly is not None else None,
            data["verdict"],
        )


def cartan_determinant(C: IntMatrix) -> int:
    return C.determinant()


def _unimodular_inverse(C: IntMatrix) -> list[list[int]]:
    if not C.is_square:
        raise PreconditionError("coxeter_matrix", "Cartan matrix must be square", C.shape)

    det = C.determinant()
    if det not in (1, -1):
        raise NonUnimodularCartan(det)

    inverse = C.to_domain_matrix().convert_to(QQ).inv()
    return [[int(QQ.to_sympy(x)) for x in row] for row in inverse.to_list()]


def coxeter_matrix(C: IntMatrix) -> IntMatrix:
    """
    The Coxeter matrix -C^{-T} C

    Raises:
        NonUnimodularCartan: If det C is not +1 or -1
    """

    n = C.size
    inverse = _unimodular_inverse(C)
    entries = tuple(
        tuple(-sum(inverse[k][i] * C[k, j] for k in range(n)) for j in range(n)) for i in range(n)
    )
    return IntMatrix(C.labels, entries)


def coxeter_polynomial(C: IntMatrix) -> IntPolynomial:
    """
    Characteristic polynomial det(xI - Phi) of the Coxeter matrix
    """

    phi = coxeter_matrix(C)
    if phi.size == 0:
        return IntPolynomial((1,))

    # charpoly lists the leading coefficient first
    coefficients = phi.to_domain_matrix().charpoly()
    return IntPolynomial(tuple(int(c) for c in reversed(coefficients)))


def euler_form(C: IntMatrix, x: list[int] | tuple[int, ...], y: list[int] | tuple[int, ...]) -> int:
    """
    The Euler form on dimension vectors, x^T C^{-1} y

    With C[i][j] the number of paths j -> i, the class of P(i) is row i of C and
    <[P(i)], y> = y_i.
    """

    inverse = _unimodular_inverse(C)
    n = C.size
    if len(x) != n or len(y) != n:
        raise PreconditionError("euler_form", "vectors must match the Cartan matrix size", (len(x), len(y), n))

    return sum(x[i] * inverse[i][j] * y[j] for i in range(n) for j in range(n))


def is_self_reciprocal(polynomial: IntPolynomial) -> bool:
    """
    Whether the coefficient sequence is palindromic up to a global sign
    """

    coefficients = polynomial.coefficients
    mirrored = tuple(reversed(coefficients))
    return mirrored == coefficients or mirrored == tuple(-c for c in coefficients)


def class_vector(complex_: "ProjComplex") -> tuple[int, ...]:
    """
    Class of a complex of projectives in K_0 as the alternating sum of dimension vectors
    """

    algebra = complex_.algebra
    totals = [0] * len(algebra.vertices)
    for degree, summands in complex_.terms.items():
        sign = -1 if degree % 2 else 1
        for v in summands:
            for position, x in enumerate(algebra.vertices):
                totals[position] += sign * len(algebra.paths(x, v))
    return tuple(totals)


def certify_matrices(
    left: IntMatrix,
    right: IntMatrix,
    left_name: str = "A",
    right_name: str = "B",
    dims: tuple[int | None, int | None] = (None, None),
) -> Certificate:
    """
    Certificate from two Cartan matrices
    """

    det_left, det_right = left.determinant(), right.determinant()
    unimodular = abs(det_left) == 1 and abs(det_right) == 1

    poly_left = coxeter_polynomial(left) if abs(det_left) == 1 else None
    poly_right = coxeter_polynomial(right) if abs(det_right) == 1 else None

    verdict: Verdict = "consistent" if unimodular and poly_left == poly_right else "refuted"
    logger.debug("certificate %s vs %s: %s", left_name, right_name, verdict)
    return Certificate(left_name, right_name, dims[0], dims[1], det_left, det_right, poly_left, poly_right, verdict)


def certify_pair(left: BoundQuiverAlgebra, right: BoundQuiverAlgebra) -> Certificate:
    """
    Compare Cartan determinants and Coxeter polynomials of two algebras

    Args:
        left (BoundQuiverAlgebra): First algebra
        right (BoundQuiverAlgebra): Second algebra

    Returns:
        Certificate: "consistent" iff both Cartan matrices are unimodular and the Coxeter polynomials agree
    """

    return certify_matrices(cartan(left), cartan(right), left.name, right.name, (left.dim, right.dim))
