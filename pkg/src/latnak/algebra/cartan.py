"""
Cartan matrices of bound quiver algebras and the closed formula for lattice algebras L(S).
"""

from collections.abc import Sequence
from dataclasses import dataclass

from sympy.polys.domains import ZZ
from sympy.polys.matrices import DomainMatrix

from latnak.algebra.bound import BoundQuiverAlgebra
from latnak.algebra.quiver import Vertex, show_vertex
from latnak.exceptions import PreconditionError
from latnak.lattice import GridPoint, LatticeSet


@dataclass(frozen=True)
class IntMatrix:
    """
    Exact integer matrix with vertex labels on rows and columns

    Attributes:
        labels (tuple[Vertex, ...]): Row labels
        entries (tuple[tuple[int, ...], ...]): Row-major entries
        col_labels (tuple[Vertex, ...] | None): Column labels, the row labels when omitted
    """

    labels: tuple[Vertex, ...]
    entries: tuple[tuple[int, ...], ...]
    col_labels: tuple[Vertex, ...] | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "labels", tuple(self.labels))
        object.__setattr__(self, "entries", tuple(tuple(int(x) for x in row) for row in self.entries))
        if self.col_labels is None:
            object.__setattr__(self, "col_labels", self.labels)
        else:
            object.__setattr__(self, "col_labels", tuple(self.col_labels))

        if len(self.entries) != len(self.labels) or any(len(row) != len(self.columns) for row in self.entries):
            raise PreconditionError("IntMatrix", "entries do not match the label counts")

        if len(set(self.labels)) != len(self.labels) or len(set(self.columns)) != len(self.columns):
            raise PreconditionError("IntMatrix", "labels must be unique")

    @property
    def columns(self) -> tuple[Vertex, ...]:
        return self.col_labels if self.col_labels is not None else self.labels

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.labels), len(self.columns)

    @property
    def size(self) -> int:
        return len(self.labels)

    @property
    def is_square(self) -> bool:
        return len(self.labels) == len(self.columns)

    def __getitem__(self, index: tuple[int, int]) -> int:
        i, j = index
        return self.entries[i][j]

    def entry(self, row: Vertex, col: Vertex) -> int:
        return self.entries[self.labels.index(row)][self.columns.index(col)]

    def total(self) -> int:
        return sum(sum(row) for row in self.entries)

    def transpose(self) -> "IntMatrix":
        return IntMatrix(self.columns, tuple(zip(*self.entries)) if self.entries else (), self.labels)

    def permuted(self, order: Sequence[Vertex]) -> "IntMatrix":
        """
        Simultaneous row and column permutation of a square matrix
        """

        rows = [self.labels.index(v) for v in order]
        return IntMatrix(tuple(order), tuple(tuple(self.entries[i][j] for j in rows) for i in rows))

    def restricted(self, labels: Sequence[Vertex]) -> "IntMatrix":
        rows = [self.labels.index(v) for v in labels]
        cols = [self.columns.index(v) for v in labels]
        return IntMatrix(tuple(labels), tuple(tuple(self.entries[i][j] for j in cols) for i in rows))

    def to_domain_matrix(self) -> DomainMatrix:
        return DomainMatrix([[ZZ(x) for x in row] for row in self.entries], self.shape, ZZ)

    @classmethod
    def from_domain_matrix(cls, matrix: DomainMatrix, labels: Sequence[Vertex]) -> "IntMatrix":
        rows = matrix.to_Matrix().tolist()
        return cls(tuple(labels), tuple(tuple(int(x) for x in row) for row in rows))

    def determinant(self) -> int:
        if not self.is_square:
            raise PreconditionError("IntMatrix.determinant", "matrix is not square", self.shape)
        if self.size == 0:
            return 1
        return int(self.to_domain_matrix().det())

    def to_dict(self) -> dict:
        data: dict = {"labels": [_label_to_json(v) for v in self.labels], "entries": [list(row) for row in self.entries]}
        if self.columns != self.labels:
            data["col_labels"] = [_label_to_json(v) for v in self.columns]
        return data

    @classmethod
    def from_dict(cls, data: dict) -> "IntMatrix":
        labels = tuple(_label_from_json(v) for v in data["labels"])
        cols = data.get("col_labels")
        return cls(
            labels,
            tuple(tuple(row) for row in data["entries"]),
            tuple(_label_from_json(v) for v in cols) if cols is not None else None,
        )

    def format(self) -> str:
        width = max([len(str(x)) for row in self.entries for x in row] + [1])
        header = " ".join(show_vertex(v) for v in self.columns)
        lines = [f"    {header}"]
        for label, row in zip(self.labels, self.entries):
            lines.append(f"{show_vertex(label)}: " + " ".join(str(x).rjust(width) for x in row))
        return "\n".join(lines)


def _label_to_json(vertex: Vertex) -> object:
    if isinstance(vertex, tuple):
        return [_label_to_json(x) for x in vertex]
    return vertex


def _label_from_json(value: object) -> Vertex:
    if isinstance(value, list):
        items = tuple(_label_from_json(x) for x in value)
        if len(items) == 2 and all(isinstance(x, int) for x in items):
            return GridPoint(*items)
        return items
    return value


def cartan(algebra: BoundQuiverAlgebra) -> IntMatrix:
    """
    Cartan matrix with C[i][j] = dim e_i A e_j, the number of basis paths j -> i

    Under the labeling where a path a -> b is a map P(a) -> P(b), C[i][j] = dim Hom(P(j), P(i)).
    """

    vertices = algebra.vertices
    entries = tuple(tuple(len(algebra.paths(j, i)) for j in vertices) for i in vertices)
    return IntMatrix(vertices, entries)


def cartan_lattice(S: LatticeSet) -> IntMatrix:
    """
    The 0/1 matrix indexed by S with C[b][a] = 1 exactly when b lies in the square S_a
    """

    points = S.ordered
    squares = {a: S.square(a.i, a.j) for a in points}
    entries = tuple(tuple(1 if b in squares[a] else 0 for a in points) for b in points)
    return IntMatrix(points, entries)
