"""
Families of objects indexed by a finite subset of Z^2.
"""

from collections.abc import Callable, Iterable
from dataclasses import dataclass, field

from latnak.algebra import BoundQuiverAlgebra
from latnak.exceptions import AlgebraMismatch, PreconditionError
from latnak.homalg import ProjComplex
from latnak.lattice import GridPoint, LatticeSet, transpose


@dataclass(eq=False)
class SFamily:
    """
    A family (X_{i,j}) of complexes indexed by a finite support S

    Attributes:
        support (LatticeSet): The index set S
        algebra (BoundQuiverAlgebra): Algebra every member lives over
        members (dict[GridPoint, ProjComplex]): X_{i,j} for every (i, j) in S
        name (str): Printable name used in reports

    Raises:
        PreconditionError: If a support point has no member or a member has no support point
        AlgebraMismatch: If a member lives over another algebra
    """

    support: LatticeSet
    algebra: BoundQuiverAlgebra
    members: dict[GridPoint, ProjComplex] = field(default_factory=dict)
    name: str = ""

    def __post_init__(self) -> None:
        self.members = {GridPoint(*p): X for p, X in self.members.items()}

        missing = [p for p in self.support.ordered if p not in self.members]
        if missing:
            raise PreconditionError("SFamily", "support points without a member", missing[0])

        extra = [p for p in self.members if p not in self.support]
        if extra:
            raise PreconditionError("SFamily", "member outside the support", extra[0])

        for p, X in self.members.items():
            if X.algebra is not self.algebra:
                raise AlgebraMismatch(f"member {p} lives over {X.algebra.name}, not {self.algebra.name}")

        if not self.name:
            self.name = f"family over {self.algebra.name}"

    def __len__(self) -> int:
        return len(self.support)

    def __getitem__(self, point: tuple[int, int]) -> ProjComplex:
        return self.members[GridPoint(*point)]

    def __contains__(self, point: object) -> bool:
        return point in self.support

    @property
    def points(self) -> tuple[GridPoint, ...]:
        return self.support.ordered

    def sequence(self, points: Iterable[tuple[int, int]] | None = None) -> list[ProjComplex]:
        """
        Members in lexicographic order, the order in which they form an exceptional sequence

        Args:
            points (Iterable[tuple[int, int]] | None): Subset T of the support, all of S when None

        Returns:
            list[ProjComplex]: X_T as a sequence
        """

        chosen = self.support.ordered if points is None else sorted(GridPoint(*p) for p in points)
        return [self.members[p] for p in chosen]

    def row(self, i: int) -> list[ProjComplex]:
        """
        X_i = (X_{i,j})_{j in S_i}, ascending in j
        """

        return [self.members[GridPoint(i, j)] for j in self.support.row(i)]

    def col(self, j: int) -> list[ProjComplex]:
        """
        X^j = (X_{i,j})_{i in S^j}, ascending in i
        """

        return [self.members[GridPoint(i, j)] for i in self.support.col(j)]

    def square(self, i: int, j: int) -> list[ProjComplex]:
        return self.sequence(self.support.square(i, j).ordered)

    def describe(self) -> list[str]:
        return [f"X{p} = {self.members[p].describe()}" for p in self.points]


def subfamily(
    fam: SFamily,
    points: Iterable[tuple[int, int]] | None = None,
    rows: tuple[int | None, int | None] | None = None,
    cols: tuple[int | None, int | None] | None = None,
    predicate: Callable[[GridPoint], bool] | None = None,
) -> SFamily:
    """
    Restrict a family to a subset of its support

    Args:
        fam (SFamily): Family to restrict
        points (Iterable[tuple[int, int]] | None): Explicit subset T of the support
        rows (tuple[int | None, int | None] | None): Keep rows in [lo, hi], None for an open end
        cols (tuple[int | None, int | None] | None): Keep columns in [lo, hi], None for an open end
        predicate (Callable[[GridPoint], bool] | None): Arbitrary filter on the points

    Returns:
        SFamily: Family over the restricted support and the same algebra

    Raises:
        PreconditionError: If an explicit point lies outside the support
    """

    support = fam.support
    if points is not None:
        chosen = LatticeSet.of(points)
        outside = [p for p in chosen.ordered if p not in fam.support]
        if outside:
            raise PreconditionError("subfamily", "point outside the support", outside[0])
        support = chosen
    if rows is not None:
        support = support.restrict_rows(*rows)
    if cols is not None:
        support = support.restrict_cols(*cols)
    if predicate is not None:
        support = LatticeSet(frozenset(p for p in support.points if predicate(p)))

    members = {p: fam.members[p] for p in support.ordered}
    return SFamily(support, fam.algebra, members, fam.name)


def transpose_family(fam: SFamily) -> SFamily:
    """
    The family over the transposed support, X'_{j,i} = X_{i,j}
    """

    members = {GridPoint(p.j, p.i): X for p, X in fam.members.items()}
    return SFamily(transpose(fam.support), fam.algebra, members, f"ᵗ({fam.name})")


def translate_family(fam: SFamily, v: tuple[int, int]) -> SFamily:
    di, dj = v
    members = {GridPoint(p.i + di, p.j + dj): X for p, X in fam.members.items()}
    return SFamily(LatticeSet.of(members), fam.algebra, members, fam.name)
