from collections.abc import Hashable, Iterator
from dataclasses import dataclass, field
from functools import cached_property

from latnak.exceptions import PreconditionError

Vertex = Hashable


@dataclass(frozen=True)
class Arrow:
    """
    Schema representing an arrow of a quiver

    Attributes:
        name (str): Unique arrow name (e.g. "u1,2")
        source (Vertex): Source vertex
        target (Vertex): Target vertex
    """

    name: str
    source: Vertex
    target: Vertex

    def __str__(self) -> str:
        return f"{self.name}: {show_vertex(self.source)} -> {show_vertex(self.target)}"


@dataclass(frozen=True)
class BasisPath:
    """
    Basis element of a bound quiver algebra, the residue of a path

    Attributes:
        source (Vertex): Start of the path
        target (Vertex): End of the path
        word (tuple[str, ...]): Arrow names in traversal order, empty for an idempotent
        label (str): Printable name, written right to left as a composition
    """

    source: Vertex
    target: Vertex
    word: tuple[str, ...] = ()
    label: str = ""

    @property
    def is_idempotent(self) -> bool:
        return not self.word and self.source == self.target

    @property
    def length(self) -> int:
        return len(self.word)

    def __str__(self) -> str:
        return self.label or f"e{show_vertex(self.source)}"


@dataclass(eq=False)
class Quiver:
    """
    Finite quiver with named arrows

    Attributes:
        vertices (tuple[Vertex, ...]): Vertices in their fixed order
        arrows (tuple[Arrow, ...]): Arrows, names unique
    """

    vertices: tuple[Vertex, ...]
    arrows: tuple[Arrow, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        self.vertices = tuple(self.vertices)
        self.arrows = tuple(self.arrows)
        known = set(self.vertices)

        if len(known) != len(self.vertices):
            raise PreconditionError("Quiver", "duplicate vertex labels")

        names = [arrow.name for arrow in self.arrows]
        if len(set(names)) != len(names):
            raise PreconditionError("Quiver", "arrow names must be unique")

        for arrow in self.arrows:
            if arrow.source not in known or arrow.target not in known:
                raise PreconditionError("Quiver", "arrow endpoints must be vertices", arrow)

    @cached_property
    def outgoing(self) -> dict[Vertex, list[Arrow]]:
        table: dict[Vertex, list[Arrow]] = {v: [] for v in self.vertices}
        for arrow in self.arrows:
            table[arrow.source].append(arrow)
        return table

    def is_acyclic(self) -> bool:
        return self.topological_order() is not None

    def topological_order(self) -> list[Vertex] | None:
        """
        Vertices ordered so that every arrow goes forward, or None if the quiver has a cycle
        """

        indegree = {v: 0 for v in self.vertices}
        for arrow in self.arrows:
            indegree[arrow.target] += 1

        ready = [v for v in self.vertices if indegree[v] == 0]
        order: list[Vertex] = []
        while ready:
            vertex = ready.pop(0)
            order.append(vertex)
            for arrow in self.outgoing[vertex]:
                indegree[arrow.target] -= 1
                if indegree[arrow.target] == 0:
                    ready.append(arrow.target)

        return order if len(order) == len(self.vertices) else None

    def paths(self, max_length: int | None = None) -> Iterator[tuple[Vertex, Vertex, tuple[Arrow, ...]]]:
        """
        Enumerate paths (source, target, arrows) of length < max_length, trivial paths first

        Raises:
            PreconditionError: If the quiver has a cycle and no length bound is given
        """

        if max_length is None and not self.is_acyclic():
            raise PreconditionError("Quiver.paths", "path enumeration needs a bound on cyclic quivers")

        frontier: list[tuple[Vertex, Vertex, tuple[Arrow, ...]]] = [(v, v, ()) for v in self.vertices]
        length = 0
        while frontier and (max_length is None or length < max_length):
            yield from frontier
            extended = []
            for source, target, arrows in frontier:
                for arrow in self.outgoing[target]:
                    extended.append((source, arrow.target, arrows + (arrow,)))
            frontier = extended
            length += 1

    def describe(self) -> list[str]:
        return [str(arrow) for arrow in self.arrows]


def linear_quiver(n: int, reverse: bool = False, start: int = 1, prefix: str = "a") -> Quiver:
    """
    The linear quiver on start..start+n-1 with arrows i -> i+1 (i+1 -> i when reversed)
    """

    if n < 1:
        raise PreconditionError("linear_quiver", "need at least one vertex", n)

    vertices = tuple(range(start, start + n))
    arrows = tuple(
        Arrow(f"{prefix}{i}", i + 1, i) if reverse else Arrow(f"{prefix}{i}", i, i + 1) for i in vertices[:-1]
    )
    return Quiver(vertices, arrows)


def path_label(source: Vertex, word: tuple[str, ...]) -> str:
    if not word:
        return f"e{show_vertex(source)}"
    return "·".join(reversed(word))


def show_vertex(vertex: Vertex) -> str:
    if isinstance(vertex, tuple):
        return "(" + ",".join(str(x) for x in vertex) + ")"
    return str(vertex)
