"""
Finite subsets of Z^2: Young diagrams, the half-plane permutations sigma/rho and the M-gates.

Rows are indexed by ``i`` and columns by ``j``. ``sigma`` moves points horizontally (row-wise),
``rho`` moves them vertically (column-wise). Steps on the ``>=`` side are point reflections of
steps on the ``<=`` side, and ``rho`` steps are transposes of ``sigma`` steps; every gate and
every plan below is computed on the ``sigma_{<=}`` base case and conjugated back.
"""

from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Literal, NamedTuple

from latnak.exceptions import PreconditionError

Side = Literal["le", "ge"]
Axis = Literal["row", "col"]


class GridPoint(NamedTuple):
    i: int
    j: int

    def __str__(self) -> str:
        return f"({self.i},{self.j})"


@dataclass(frozen=True)
class LatticeSet:
    """
    Finite subset S of Z^2

    Attributes:
        points (frozenset[GridPoint]): The elements of S
    """

    points: frozenset[GridPoint] = field(default_factory=frozenset)

    @classmethod
    def of(cls, points: Iterable[tuple[int, int]]) -> "LatticeSet":
        return cls(frozenset(GridPoint(int(i), int(j)) for i, j in points))

    def __iter__(self) -> Iterator[GridPoint]:
        return iter(self.ordered)

    def __len__(self) -> int:
        return len(self.points)

    def __contains__(self, point: object) -> bool:
        return point in self.points

    def __str__(self) -> str:
        return "{" + ", ".join(str(p) for p in self.ordered) + "}"

    @property
    def ordered(self) -> tuple[GridPoint, ...]:
        """
        Points in the canonical lexicographic order on (i, j)
        """

        return tuple(sorted(self.points))

    def row(self, k: int) -> list[int]:
        """
        S_k = { j | (k, j) in S }, ascending
        """

        return sorted(p.j for p in self.points if p.i == k)

    def col(self, k: int) -> list[int]:
        """
        S^k = { i | (i, k) in S }, ascending
        """

        return sorted(p.i for p in self.points if p.j == k)

    def rows(self) -> list[int]:
        return sorted({p.i for p in self.points})

    def cols(self) -> list[int]:
        return sorted({p.j for p in self.points})

    def square(self, i: int, j: int) -> "LatticeSet":
        """
        S_{i,j} = S intersected with [i-1, i] x [j-1, j]
        """

        return LatticeSet(frozenset(p for p in self.points if i - 1 <= p.i <= i and j - 1 <= p.j <= j))

    def restrict_rows(self, lo: int | None = None, hi: int | None = None) -> "LatticeSet":
        return LatticeSet(
            frozenset(p for p in self.points if (lo is None or p.i >= lo) and (hi is None or p.i <= hi))
        )

    def restrict_cols(self, lo: int | None = None, hi: int | None = None) -> "LatticeSet":
        return LatticeSet(
            frozenset(p for p in self.points if (lo is None or p.j >= lo) and (hi is None or p.j <= hi))
        )

    def min_row(self) -> int:
        return min(p.i for p in self.points)

    def max_row(self) -> int:
        return max(p.i for p in self.points)

    def min_col(self) -> int:
        return min(p.j for p in self.points)

    def max_col(self) -> int:
        return max(p.j for p in self.points)

    def to_dict(self) -> dict[str, list[list[int]]]:
        return {"points": [[p.i, p.j] for p in self.ordered]}

    @classmethod
    def from_dict(cls, data: dict) -> "LatticeSet":
        return cls.of((i, j) for i, j in data["points"])


@dataclass(frozen=True)
class CompositionPair:
    """
    Two compositions (p_1..p_r) and (q_1..q_r) of equal length describing Y(p; q)

    Attributes:
        p (tuple[int, ...]): Row block heights
        q (tuple[int, ...]): Column block widths
    """

    p: tuple[int, ...]
    q: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "p", tuple(int(x) for x in self.p))
        object.__setattr__(self, "q", tuple(int(x) for x in self.q))

        if not self.p or len(self.p) != len(self.q):
            raise PreconditionError("CompositionPair", "p and q must be nonempty of equal length", (self.p, self.q))

        if any(x < 1 for x in self.p + self.q):
            raise PreconditionError("CompositionPair", "all entries must be positive", (self.p, self.q))

    @property
    def length(self) -> int:
        return len(self.p)

    def p_bar(self, s: int) -> int:
        return sum(self.p[:s])

    def q_bar(self, s: int) -> int:
        return sum(self.q[:s])

    @property
    def n_p(self) -> int:
        return self.p_bar(self.length)

    @property
    def n_q(self) -> int:
        return self.q_bar(self.length)

    def __str__(self) -> str:
        return f"({','.join(map(str, self.p))};{','.join(map(str, self.q))})"


def young_pq(pair: CompositionPair) -> LatticeSet:
    """
    Y(p; q): the union over k in [0, r-1] of [1 + p_bar(k), p_bar(k+1)] x [1, q_bar(r-k)]
    """

    r = pair.length
    points = [
        (i, j)
        for k in range(r)
        for i in range(1 + pair.p_bar(k), pair.p_bar(k + 1) + 1)
        for j in range(1, pair.q_bar(r - k) + 1)
    ]
    return LatticeSet.of(points)


def composition_pair(s: int, t: int, u: int) -> CompositionPair:
    """
    The composition pair whose Young diagram is Y(s, t, u)
    """

    _check_pqr(s, t, u)

    if u == 0:
        return CompositionPair((s,), (t,))

    if u == t:
        if s == 1:
            raise PreconditionError("composition_pair", "Y(1, t, t) is empty", (s, t, u))
        return CompositionPair((s - 1,), (t,))

    if s == 1:
        return CompositionPair((1,), (t - u,))

    return CompositionPair((s - 1, 1), (t - u, u))


def young_pqr(p: int, q: int, r: int) -> LatticeSet:
    """
    Y(p, q, r): p rows of width q with the last one shortened by r

    Args:
        p (int): Number of rows, at least 1
        q (int): Row width, at least 1
        r (int): Amount removed from the last row, 0 <= r <= q

    Returns:
        LatticeSet: [1, p-1] x [1, q] union {p} x [1, q - r]
    """

    _check_pqr(p, q, r)

    points = [(i, j) for i in range(1, p) for j in range(1, q + 1)]
    points += [(p, j) for j in range(1, q - r + 1)]
    return LatticeSet.of(points)


def intro_index_set(s: int, t: int, u: int) -> LatticeSet:
    """
    Vertices surviving in (N(s,2)^op (x) N(t,2)^op) / <e_s (x) e_{t-i}, i < u>
    """

    _check_pqr(s, t, u)
    deleted = {(s, t - i) for i in range(u)}
    return LatticeSet.of((i, j) for i in range(1, s + 1) for j in range(1, t + 1) if (i, j) not in deleted)


def _check_pqr(p: int, q: int, r: int) -> None:
    if p < 1 or q < 1:
        raise PreconditionError("young_pqr", "p and q must be positive", (p, q, r))
    if not 0 <= r <= q:
        raise PreconditionError("young_pqr", "r must satisfy 0 <= r <= q", (p, q, r))


def is_young(S: LatticeSet) -> bool:
    """
    True when S is a normalized Young diagram: rows 1..m, each row an interval [1, w_i],
    widths weakly decreasing
    """

    if not S:
        return False

    rows = S.rows()
    if rows != list(range(1, len(rows) + 1)):
        return False

    widths = []
    for i in rows:
        row = S.row(i)
        if row != list(range(1, len(row) + 1)):
            return False
        widths.append(len(row))

    return all(a >= b for a, b in zip(widths, widths[1:]))


def young_shape(S: LatticeSet) -> CompositionPair:
    """
    Recover the composition pair of a normalized Young diagram
    """

    if not is_young(S):
        raise PreconditionError("young_shape", "support is not a normalized Young diagram", S)

    widths = [len(S.row(i)) for i in S.rows()]
    heights: list[int] = []
    distinct: list[int] = []
    for w in widths:
        if distinct and distinct[-1] == w:
            heights[-1] += 1
        else:
            distinct.append(w)
            heights.append(1)

    # q_bar(r - k) is the width of block k, so widths are the reversed partial sums of q
    partial = list(reversed(distinct))
    q = [partial[0]] + [b - a for a, b in zip(partial, partial[1:])]
    return CompositionPair(tuple(heights), tuple(q))


def transpose(S: LatticeSet) -> LatticeSet:
    return LatticeSet(frozenset(GridPoint(p.j, p.i) for p in S.points))


def translate(S: LatticeSet, v: tuple[int, int]) -> LatticeSet:
    di, dj = v
    return LatticeSet(frozenset(GridPoint(p.i + di, p.j + dj) for p in S.points))


def negate(S: LatticeSet) -> LatticeSet:
    return LatticeSet(frozenset(GridPoint(-p.i, -p.j) for p in S.points))


def normalize(S: LatticeSet) -> LatticeSet:
    """
    Translate S so that its minimal row and minimal column are both 1
    """

    if not S:
        raise PreconditionError("normalize", "cannot normalize the empty set")

    return translate(S, (1 - S.min_row(), 1 - S.min_col()))


def equivalent(S: LatticeSet, T: LatticeSet) -> bool:
    """
    S is equivalent to T when T = S + v for some v in Z^2
    """

    if len(S) != len(T):
        return False
    if not S:
        return True
    return normalize(S) == normalize(T)


def sigma(S: LatticeSet, k: int, side: Side = "le", inverse: bool = False) -> LatticeSet:
    """
    Apply sigma_{<=k} (or sigma_{>=k}): points in the selected rows move one column left,
    one column right for the inverse
    """

    step = -1 if not inverse else 1
    return LatticeSet(
        frozenset(
            GridPoint(p.i, p.j + step) if (p.i <= k if side == "le" else p.i >= k) else p for p in S.points
        )
    )


def rho(S: LatticeSet, k: int, side: Side = "le", inverse: bool = False) -> LatticeSet:
    """
    Apply rho_{<=k} (or rho_{>=k}): points in the selected columns move one row up,
    one row down for the inverse
    """

    step = -1 if not inverse else 1
    return LatticeSet(
        frozenset(
            GridPoint(p.i + step, p.j) if (p.j <= k if side == "le" else p.j >= k) else p for p in S.points
        )
    )


@dataclass(frozen=True)
class GateVerdict:
    """
    Outcome of an M-gate or a mutation precondition

    Attributes:
        passed (bool): Whether the gate holds
        condition (str | None): Label of the first failing condition
        detail (str): Human readable explanation or witness
        empty_rows (bool): Whether the empty-row convention was exercised
    """

    passed: bool
    condition: str | None = None
    detail: str = ""
    empty_rows: bool = False

    def __bool__(self) -> bool:
        return self.passed

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "condition": self.condition,
            "detail": self.detail,
            "empty_rows": self.empty_rows,
        }


def _is_interval(values: list[int]) -> bool:
    return not values or values == list(range(values[0], values[-1] + 1))


def m_gate(S: LatticeSet, k: int, sign: Literal["+", "-"] = "+") -> GateVerdict:
    """
    Evaluate the M+_k (or M-_k) conditions on rows 0..k+1 of S

    Empty rows in the range count as intervals and compare equal only to other empty rows.
    """

    if k < 0:
        raise PreconditionError("m_gate", "k must be nonnegative", k)

    rows = {i: S.row(i) for i in range(0, k + 2)}
    empty = any(not rows[i] for i in rows)
    label = f"M{sign}_{k}"

    for i in range(0, k + 2):
        if not _is_interval(rows[i]):
            return GateVerdict(False, f"{label}1", f"row {i} = {rows[i]} is not an interval", empty)

    for i in range(1, k + 1):
        previous = rows[i - 1]
        if rows[i] != previous and rows[i] != [j + 1 for j in previous]:
            return GateVerdict(False, f"{label}2", f"row {i} = {rows[i]} vs row {i - 1} = {previous}", empty)

    bound = set(rows[k]) if sign == "+" else {j + 1 for j in rows[k]}
    if not set(rows[k + 1]) <= bound:
        return GateVerdict(False, f"{label}3", f"row {k + 1} = {rows[k + 1]} not inside {sorted(bound)}", empty)

    return GateVerdict(True, None, label, empty)


def is_m_plus(S: LatticeSet, k: int) -> bool:
    return m_gate(S, k, "+").passed


def is_m_minus(S: LatticeSet, k: int) -> bool:
    return m_gate(S, k, "-").passed


def is_m_plus_t(S: LatticeSet, k: int) -> bool:
    return m_gate(transpose(S), k, "+").passed


@dataclass(frozen=True)
class LatticeStep:
    """
    One mutation step on an index set

    A single step is sigma/rho on the given side with threshold ``k``. A block step
    (``length > 0``) is the Mutation II composite: for side "le" it is
    sigma_{<=k} sigma_{<=k+1} ... sigma_{<=k+length-1}, for side "ge" it is the point reflection
    sigma_{>=k} sigma_{>=k-1} ... sigma_{>=k-length+1}. Axis "col" uses rho instead of sigma.

    Attributes:
        axis (Literal["row", "col"]): "row" for sigma, "col" for rho
        side (Literal["le", "ge"]): Half plane selected by the threshold
        k (int): Threshold of a single step, origin of a block
        inverse (bool): Whether the inverse permutation is applied
        length (int): Block length of a Mutation II step, 0 for a single step
        width (int): Common size h of the rows (columns) inside the block
    """

    axis: Axis = "row"
    side: Side = "le"
    k: int = 0
    inverse: bool = False
    length: int = 0
    width: int = 0

    @property
    def is_block(self) -> bool:
        return self.length > 0

    @property
    def shift(self) -> int:
        """
        The shift s = (h - 1) k / (h + 1) applied outside a Mutation II block
        """

        value = Fraction((self.width - 1) * self.length, self.width + 1)
        if value.denominator != 1:
            raise PreconditionError("Mutation II", "block length must be a multiple of h + 1", self)
        return int(value)

    def transposed(self) -> "LatticeStep":
        return LatticeStep("col" if self.axis == "row" else "row", self.side, self.k, self.inverse, self.length, self.width)

    def reflected(self) -> "LatticeStep":
        return LatticeStep(
            self.axis, "ge" if self.side == "le" else "le", -self.k, not self.inverse, self.length, self.width
        )

    def inverted(self) -> "LatticeStep":
        return LatticeStep(self.axis, self.side, self.k, not self.inverse, self.length, self.width)

    @property
    def label(self) -> str:
        symbol = "σ" if self.axis == "row" else "ρ"
        power = "⁻¹" if self.inverse else ""
        relation = "≤" if self.side == "le" else "≥"
        if not self.is_block:
            return f"{symbol}{power}{relation}{self.k}"
        name = "II" if self.axis == "row" else "ᵗII"
        return f"{name}{power}[{symbol}{relation}{self.k}, k={self.length}, h={self.width}]"

    def __str__(self) -> str:
        return self.label

    def to_dict(self) -> dict:
        return {
            "axis": self.axis,
            "side": self.side,
            "k": self.k,
            "inverse": self.inverse,
            "length": self.length,
            "width": self.width,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "LatticeStep":
        return cls(
            data.get("axis", "row"),
            data.get("side", "le"),
            int(data["k"]),
            bool(data.get("inverse", False)),
            int(data.get("length", 0)),
            int(data.get("width", 0)),
        )


class Move(NamedTuple):
    """
    Where a family member goes under a step and how it is twisted

    The new member at ``target`` is Serre^power of the line through ``source`` applied to the old
    member at ``source``, then shifted by ``shift``. The line is the row of ``source`` for sigma
    steps and its column for rho steps.
    """

    source: GridPoint
    target: GridPoint
    power: int
    shift: int


def _base_plan(S: LatticeSet, step: LatticeStep) -> list[Move]:
    # sigma steps on the "le" side; everything else is conjugated onto this case
    moves: list[Move] = []
    direction = 1 if step.inverse else -1

    if not step.is_block:
        for p in S.ordered:
            if p.i <= step.k:
                moves.append(Move(p, GridPoint(p.i, p.j + direction), -direction, 0))
            else:
                moves.append(Move(p, p, 0, 0))
        return moves

    origin, length = step.k, step.length
    s = step.shift
    for p in S.ordered:
        if origin <= p.i <= origin + length - 1:
            d = length - (p.i - origin)
            moves.append(Move(p, GridPoint(p.i, p.j + direction * d), -direction * d, 0))
        elif p.i < origin:
            moves.append(Move(p, GridPoint(p.i, p.j + direction * length), 0, -direction * s))
        else:
            moves.append(Move(p, p, 0, 0))
    return moves


def step_plan(S: LatticeSet, step: LatticeStep) -> list[Move]:
    """
    The point map of a step together with the Serre power and shift each member receives

    Point reflection corresponds to the opposite category, so powers and shifts change sign;
    transposition swaps rows and columns.
    """

    if step.axis == "col":
        plan = step_plan(transpose(S), step.transposed())
        return [
            Move(GridPoint(m.source.j, m.source.i), GridPoint(m.target.j, m.target.i), m.power, m.shift) for m in plan
        ]

    if step.side == "ge":
        plan = _base_plan(negate(S), step.reflected())
        return [
            Move(GridPoint(-m.source.i, -m.source.j), GridPoint(-m.target.i, -m.target.j), -m.power, -m.shift)
            for m in plan
        ]

    return _base_plan(S, step)


def apply_step(S: LatticeSet, step: LatticeStep) -> LatticeSet:
    return LatticeSet(frozenset(m.target for m in step_plan(S, step)))


def _base_gate(S: LatticeSet, step: LatticeStep) -> GateVerdict:
    if not S:
        return GateVerdict(True, None, "empty support")

    if not step.is_block:
        origin = S.min_row()
        k = step.k - origin
        if k < 0:
            return GateVerdict(True, None, "no row moves")
        framed = translate(S, (-origin, 0))
        return m_gate(framed, k, "-" if step.inverse else "+")

    if step.inverse:
        return _base_gate(apply_step(S, step), step.inverted())

    length, width = step.length, step.width
    if width < 1 or length < 1 or length % (width + 1) != 0:
        return GateVerdict(False, "II.k", f"k = {length} is not a positive multiple of h + 1 = {width + 1}")

    framed = translate(S, (-step.k, 0))
    if len(framed.row(0)) != width:
        return GateVerdict(False, "II.h", f"|S_0| = {len(framed.row(0))}, expected h = {width}")

    for i in range(1, length):
        if framed.row(i) != framed.row(0):
            return GateVerdict(False, "II.rows", f"row {i} = {framed.row(i)} differs from row 0 = {framed.row(0)}")

    return m_gate(framed, length - 1, "+")


def step_gate(S: LatticeSet, step: LatticeStep) -> GateVerdict:
    """
    Evaluate the precondition of a step in its translated frame

    Single "le" steps are framed at the minimal row so that rows below the frame are empty;
    blocks are framed at their origin. "ge" steps are evaluated on the point reflection and
    rho steps on the transpose.
    """

    if step.axis == "col":
        return step_gate(transpose(S), step.transposed())

    if step.side == "ge":
        return _base_gate(negate(S), step.reflected())

    return _base_gate(S, step)
