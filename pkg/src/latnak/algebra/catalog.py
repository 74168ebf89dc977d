"""
Constructors for the concrete algebras: KA_n, the Nakayama algebras N(n, l), the radical square
zero algebras N(I), the lattice algebras L(S), L!(p; q) and the quotient presentation of L(s, t, u).
"""

import math
from collections.abc import Sequence

from sympy.polys.domains import QQ
from sympy.polys.domains.domain import Domain

from latnak.algebra.bound import BoundQuiverAlgebra, corner, kill_vertices, path_algebra, quotient, tensor
from latnak.algebra.quiver import Arrow, Quiver, linear_quiver
from latnak.exceptions import PreconditionError, SerializationError
from latnak.lattice import CompositionPair, GridPoint, LatticeSet, young_pq
from latnak.linalg import field_descriptor, field_from_descriptor


def path_algebra_an(n: int, field: Domain = QQ) -> BoundQuiverAlgebra:
    """
    KA_n for the linear quiver 1 -> 2 -> ... -> n
    """

    algebra = path_algebra(linear_quiver(n), None, field, f"KA_{n}")
    algebra.descriptor = _descriptor("an", field, n=n)
    return algebra


def nakayama(n: int, l: int, field: Domain = QQ) -> BoundQuiverAlgebra:  # noqa: E741
    """
    N(n, l) = KA_n / (rad KA_n)^l

    Args:
        n (int): Number of vertices
        l (int): Loewy length, paths of length >= l vanish
        field (Domain): Coefficient field

    Returns:
        BoundQuiverAlgebra: Algebra with basis the paths of length < l
    """

    if n < 1 or l < 1:
        raise PreconditionError("nakayama", "n and l must be positive", (n, l))

    algebra = path_algebra(linear_quiver(n), l, field, f"N({n},{l})")
    if l <= n - 1:
        algebra.relations = (f"paths of length {l} vanish",)
    algebra.descriptor = _descriptor("nakayama", field, n=n, l=l)
    return algebra


def nn(interval: Sequence[int] | range, field: Domain = QQ) -> BoundQuiverAlgebra:
    """
    N(I): the opposite linear quiver on the interval I with radical square zero

    Arrows go j+1 -> j, matching the u-arrows of a row of L(S).
    """

    points = sorted(set(interval))
    if not points or points != list(range(points[0], points[-1] + 1)):
        raise PreconditionError("nn", "I must be a nonempty interval", points)

    quiver = linear_quiver(len(points), reverse=True, start=points[0], prefix="c")
    algebra = path_algebra(quiver, 2, field, f"N([{points[0]},{points[-1]}])")
    algebra.descriptor = _descriptor("nn", field, lo=points[0], hi=points[-1])
    return algebra


def lattice_quiver(S: LatticeSet) -> Quiver:
    """
    Quiver of L(S): u (i,j+1) -> (i,j), v (i+1,j) -> (i,j), and a diagonal arrow (i,j) -> (i-1,j-1)
    when that corner lies in S but neither middle vertex does
    """

    arrows: list[Arrow] = []
    for p in S.ordered:
        i, j = p
        if GridPoint(i, j + 1) in S:
            arrows.append(Arrow(f"u{i},{j}", GridPoint(i, j + 1), p))
        if GridPoint(i + 1, j) in S:
            arrows.append(Arrow(f"v{i},{j}", GridPoint(i + 1, j), p))

    for p in S.ordered:
        i, j = p
        corner_point = GridPoint(i - 1, j - 1)
        if corner_point in S and GridPoint(i, j - 1) not in S and GridPoint(i - 1, j) not in S:
            arrows.append(Arrow(f"w{i},{j}", p, corner_point))

    return Quiver(S.ordered, tuple(arrows))


def lattice_algebra(S: LatticeSet, field: Domain = QQ) -> BoundQuiverAlgebra:
    """
    L(S): the lattice quiver modulo uu = 0, vv = 0, paths through a diagonal arrow = 0 and
    commutativity uv = vu on every full square

    Paths of length three are already zero, so the path algebra is truncated there first.
    All structure constants are normalized to one.
    """

    if not S:
        raise PreconditionError("lattice_algebra", "S must be nonempty")

    quiver = lattice_quiver(S)
    free = path_algebra(quiver, 3, field, "KQ_S")
    one, minus = field.one, -field.one

    generators = []
    relations = []
    squares: dict[tuple[GridPoint, GridPoint], list[int]] = {}
    for k, b in enumerate(free.basis):
        if b.length != 2:
            continue
        if (b.source.i - b.target.i, b.source.j - b.target.j) != (1, 1) or any(a.startswith("w") for a in b.word):
            generators.append({k: one})
            relations.append(f"{b.label}=0")
        else:
            squares.setdefault((b.source, b.target), []).append(k)

    for paths in squares.values():
        if len(paths) == 2:
            first, second = paths
            generators.append({first: one, second: minus})
            relations.append(f"{free.basis[first].label}={free.basis[second].label}")

    algebra = quotient(free, generators, f"L({_support_name(S)})", relations)
    algebra.descriptor = _descriptor("lattice", field, points=[[p.i, p.j] for p in S.ordered])
    return algebra


def lattice_shriek(pair: CompositionPair, field: Domain = QQ) -> BoundQuiverAlgebra:
    """
    L!(p; q) = e (KA_{n_p} ⊗ KA_{n_q}) e for the idempotent of the Young diagram Y(p; q)

    Arrows u!: (i,j) -> (i,j+1) and v!: (i,j) -> (i+1,j); squares commute.
    """

    rows = path_algebra(linear_quiver(pair.n_p, prefix="v"), None, field, f"KA_{pair.n_p}")
    cols = path_algebra(linear_quiver(pair.n_q, prefix="u"), None, field, f"KA_{pair.n_q}")
    grid = tensor(rows, cols)

    vertices = [GridPoint(i, j) for i, j in young_pq(pair).ordered]
    algebra = corner(grid, vertices, f"L!{pair}")
    algebra.relations = ("v!u! = u!v! on every square",)
    algebra.descriptor = _descriptor("shriek", field, p=list(pair.p), q=list(pair.q))
    return algebra


def intro_lattice_algebra(s: int, t: int, u: int, field: Domain = QQ) -> BoundQuiverAlgebra:
    """
    L(s, t, u) = (N(s,2)^op ⊗ N(t,2)^op) / <e_s ⊗ e_{t-i} : 0 <= i < u>
    """

    if s < 1 or t < 1 or not 0 <= u <= t:
        raise PreconditionError("intro_lattice_algebra", "need s, t >= 1 and 0 <= u <= t", (s, t, u))

    rows = nakayama(s, 2, field).opposite
    cols = nakayama(t, 2, field).opposite
    grid = tensor(rows, cols, f"N({s},2)^op⊗N({t},2)^op")

    algebra = kill_vertices(grid, [(s, t - i) for i in range(u)], f"L({s},{t},{u})")
    algebra.descriptor = _descriptor("intro", field, s=s, t=t, u=u)
    return algebra


def nakayama_lattice_parameters(n: int, l: int) -> tuple[int, int, int]:  # noqa: E741
    """
    (p, q, r) with q = l - 1, p = ceil(n / q) and r = pq - n, so that N(n, l) = N(pq - r, q + 1)
    """

    if l < 2 or n < 1:
        raise PreconditionError("nakayama_lattice_parameters", "need n >= 1 and l >= 2", (n, l))

    q = l - 1
    p = math.ceil(n / q)
    return p, q, p * q - n


def algebra_from_descriptor(descriptor: dict) -> BoundQuiverAlgebra:
    """
    Rebuild an algebra from its JSON descriptor

    Raises:
        SerializationError: If the descriptor kind or its parameters are not recognized
    """

    try:
        field = field_from_descriptor(descriptor.get("field", "QQ"))
        kind = descriptor["kind"]

        match kind:
            case "an":
                return path_algebra_an(int(descriptor["n"]), field)
            case "nakayama":
                return nakayama(int(descriptor["n"]), int(descriptor["l"]), field)
            case "nn":
                return nn(range(int(descriptor["lo"]), int(descriptor["hi"]) + 1), field)
            case "lattice":
                return lattice_algebra(LatticeSet.of(tuple(p) for p in descriptor["points"]), field)
            case "shriek":
                return lattice_shriek(CompositionPair(tuple(descriptor["p"]), tuple(descriptor["q"])), field)
            case "intro":
                return intro_lattice_algebra(int(descriptor["s"]), int(descriptor["t"]), int(descriptor["u"]), field)
            case "opposite":
                return algebra_from_descriptor(descriptor["of"]).opposite
            case _:
                raise SerializationError(f"Unknown algebra kind '{kind}'")

    except (KeyError, TypeError, ValueError) as e:
        raise SerializationError(f"Malformed algebra descriptor: {descriptor}") from e


def _descriptor(kind: str, field: Domain, **params: object) -> dict:
    return {"kind": kind, "field": field_descriptor(field), **params}


def _support_name(S: LatticeSet) -> str:
    points = S.ordered
    if len(points) <= 4:
        return ",".join(str(p) for p in points)
    return f"|S|={len(points)}"
