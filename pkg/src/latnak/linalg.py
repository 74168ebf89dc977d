"""
Exact linear algebra over the coefficient field.

Vectors are sparse dictionaries ``{coordinate: nonzero field element}``. Batch rank, kernel and
inverse computations go through sympy's ``DomainMatrix``; ``EchelonBasis`` is the incremental
counterpart used when a subspace grows one vector at a time (ideal closure, projective covers,
cohomology complements).
"""

import logging
from collections.abc import Iterable, Mapping, Sequence
from fractions import Fraction
from typing import Any

from sympy import isprime
from sympy.polys.domains import GF, QQ
from sympy.polys.domains.domain import Domain
from sympy.polys.matrices import DomainMatrix

from latnak.constants import DEFAULT_PRIME, PRIME_BOUND
from latnak.exceptions import ConfigError

logger = logging.getLogger(__name__)

Vector = dict[int, Any]


def make_field(kind: str = "rationals", prime: int = DEFAULT_PRIME) -> Domain:
    """
    Build the coefficient field

    Args:
        kind (str): "rationals" or "prime"
        prime (int): Characteristic used when kind is "prime"

    Returns:
        Domain: ``QQ`` or ``GF(prime)``

    Raises:
        ConfigError: If the kind is unknown or the prime is not an odd prime below 2^31
    """

    if kind == "rationals":
        return QQ

    if kind != "prime":
        raise ConfigError(f"Unknown field kind '{kind}'. Use 'rationals' or 'prime'.")

    if prime < 3 or prime >= PRIME_BOUND or not isprime(prime):
        raise ConfigError(f"Field characteristic must be an odd prime below 2^31, got {prime}")

    return GF(prime)


def field_descriptor(field: Domain) -> str:
    if field.is_QQ:
        return "QQ"
    return f"GF({field.characteristic()})"


def field_from_descriptor(text: str) -> Domain:
    if text == "QQ":
        return QQ

    if text.startswith("GF(") and text.endswith(")"):
        return make_field("prime", int(text[3:-1]))

    raise ConfigError(f"Unknown field descriptor '{text}'")


def scalar(value: int | str | Fraction, field: Domain) -> Any:
    """
    Convert an integer, a rational string ("-3/4") or a Fraction into a field element
    """

    fraction = Fraction(value)
    numerator = field.convert(fraction.numerator)
    if fraction.denominator == 1:
        return numerator
    return numerator / field.convert(fraction.denominator)


def format_scalar(value: Any, field: Domain) -> str:
    return str(field.to_sympy(value))


def scalar_to_int(value: Any, field: Domain) -> int:
    return int(field.to_sympy(value))


def sparse_matrix(entries: Mapping[tuple[int, int], Any], shape: tuple[int, int], field: Domain) -> DomainMatrix:
    """
    Build a sparse ``DomainMatrix`` from ``{(row, col): value}``
    """

    rows: dict[int, dict[int, Any]] = {}
    for (i, j), value in entries.items():
        if value:
            rows.setdefault(i, {})[j] = value

    return DomainMatrix(rows, shape, field)


def matrix_from_columns(columns: Sequence[Vector], nrows: int, field: Domain) -> DomainMatrix:
    entries = {(i, j): value for j, column in enumerate(columns) for i, value in column.items()}
    return sparse_matrix(entries, (nrows, len(columns)), field)


def rows_of(matrix: DomainMatrix) -> list[Vector]:
    """
    Split a ``DomainMatrix`` into sparse row vectors
    """

    grouped: list[Vector] = [{} for _ in range(matrix.shape[0])]
    for (i, j), value in matrix.to_dok().items():
        if value:
            grouped[i][j] = value
    return grouped


def rank(matrix: DomainMatrix) -> int:
    nrows, ncols = matrix.shape
    if nrows == 0 or ncols == 0:
        return 0
    return matrix.rank()


def kernel(matrix: DomainMatrix) -> list[Vector]:
    """
    Basis of the kernel ``{x : Mx = 0}`` as sparse vectors over the columns of ``matrix``
    """

    nrows, ncols = matrix.shape
    field = matrix.domain

    if ncols == 0:
        return []

    if nrows == 0 or not matrix.to_dok():
        return [{j: field.one} for j in range(ncols)]

    return [row for row in rows_of(matrix.nullspace()) if row]


def inverse(matrix: DomainMatrix) -> DomainMatrix:
    return matrix.inv()


class EchelonBasis:
    """
    Incrementally maintained reduced row echelon basis of a subspace

    Every stored row has coefficient one at its pivot and zero at the pivots of the other rows,
    so reducing a vector needs a single pass over the pivots it touches.
    """

    def __init__(self, field: Domain, vectors: Iterable[Vector] = ()):
        self.field = field
        self._rows: dict[int, Vector] = {}

        for vector in vectors:
            self.insert(vector)

    def __len__(self) -> int:
        return len(self._rows)

    def __contains__(self, vector: Vector) -> bool:
        return not self.reduce(vector)

    @property
    def pivots(self) -> list[int]:
        return sorted(self._rows)

    def reduce(self, vector: Vector) -> Vector:
        """
        Reduce a vector modulo the subspace

        Args:
            vector (Vector): Sparse vector

        Returns:
            Vector: Canonical remainder, empty when the vector lies in the subspace
        """

        remainder = {k: v for k, v in vector.items() if v}

        for pivot in [p for p in remainder if p in self._rows]:
            coefficient = remainder.get(pivot)
            if not coefficient:
                continue

            for k, v in self._rows[pivot].items():
                updated = remainder.get(k, self.field.zero) - coefficient * v
                if updated:
                    remainder[k] = updated
                else:
                    remainder.pop(k, None)

        return remainder

    def insert(self, vector: Vector) -> bool:
        """
        Add a vector to the subspace

        Returns:
            bool: True if the vector was independent of the current basis
        """

        remainder = self.reduce(vector)
        if not remainder:
            return False

        pivot = min(remainder)
        scale = self.field.one / remainder[pivot]
        row = {k: v * scale for k, v in remainder.items()}

        for other_pivot, other in self._rows.items():
            coefficient = other.get(pivot)
            if not coefficient:
                continue
            for k, v in row.items():
                updated = other.get(k, self.field.zero) - coefficient * v
                if updated:
                    other[k] = updated
                else:
                    other.pop(k, None)

        self._rows[pivot] = row
        return True

    def row(self, pivot: int) -> Vector:
        return dict(self._rows[pivot])


def complement_indices(base: Iterable[Vector], candidates: Sequence[Vector], field: Domain) -> list[int]:
    """
    Indices of candidates that extend the span of ``base``, chosen greedily in order
    """

    echelon = EchelonBasis(field, base)
    return [index for index, candidate in enumerate(candidates) if echelon.insert(candidate)]
