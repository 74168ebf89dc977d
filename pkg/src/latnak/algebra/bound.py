"""
Bound quiver algebras with an explicit path basis and multiplication table.

A basis path ``a -> b`` is read as a morphism ``P(a) -> P(b)`` between indecomposable
projectives. ``compose(g, f)`` is ``g ∘ f`` (first ``f`` then ``g``); on words this is
``f.word + g.word``.
"""

import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any

from sympy.polys.domains import QQ
from sympy.polys.domains.domain import Domain

from latnak.algebra.quiver import Arrow, BasisPath, Quiver, Vertex, path_label, show_vertex
from latnak.exceptions import AlgebraMismatch, PreconditionError
from latnak.linalg import EchelonBasis, Vector

logger = logging.getLogger(__name__)


@dataclass(eq=False)
class BoundQuiverAlgebra:
    """
    Finite-dimensional algebra given by a path basis and its structure constants

    Attributes:
        name (str): Printable name (e.g. "N(6,4)")
        vertices (tuple[Vertex, ...]): Vertices in the fixed order used by every matrix
        basis (tuple[BasisPath, ...]): Basis paths, idempotents included
        table (dict[tuple[int, int], Vector]): ``table[(g, f)]`` is ``g ∘ f`` when nonzero
        field (Domain): Coefficient field
        quiver (Quiver | None): Presenting quiver when known
        relations (tuple[str, ...]): Textual relations for dumps
        descriptor (dict | None): JSON descriptor that rebuilds the algebra
    """

    name: str
    vertices: tuple[Vertex, ...]
    basis: tuple[BasisPath, ...]
    table: dict[tuple[int, int], Vector]
    field: Domain = QQ
    quiver: Quiver | None = None
    relations: tuple[str, ...] = ()
    descriptor: dict | None = None

    def __str__(self) -> str:
        return self.name

    @property
    def dim(self) -> int:
        return len(self.basis)

    @cached_property
    def position(self) -> dict[Vertex, int]:
        return {v: k for k, v in enumerate(self.vertices)}

    @cached_property
    def idempotents(self) -> dict[Vertex, int]:
        return {b.source: k for k, b in enumerate(self.basis) if b.is_idempotent}

    @cached_property
    def hom_index(self) -> dict[tuple[Vertex, Vertex], list[int]]:
        index: dict[tuple[Vertex, Vertex], list[int]] = {}
        for k, b in enumerate(self.basis):
            index.setdefault((b.source, b.target), []).append(k)
        return index

    @cached_property
    def incoming(self) -> dict[Vertex, list[int]]:
        index: dict[Vertex, list[int]] = {v: [] for v in self.vertices}
        for k, b in enumerate(self.basis):
            index[b.target].append(k)
        return index

    @cached_property
    def outgoing(self) -> dict[Vertex, list[int]]:
        index: dict[Vertex, list[int]] = {v: [] for v in self.vertices}
        for k, b in enumerate(self.basis):
            index[b.source].append(k)
        return index

    @cached_property
    def word_index(self) -> dict[tuple[Vertex, Vertex, tuple[str, ...]], int]:
        return {(b.source, b.target, b.word): k for k, b in enumerate(self.basis)}

    def paths(self, source: Vertex, target: Vertex) -> list[int]:
        """
        Basis indices of e_target A e_source, the paths source -> target
        """

        return self.hom_index.get((source, target), [])

    def find(self, source: Vertex, target: Vertex, word: Sequence[str]) -> int | None:
        return self.word_index.get((source, target, tuple(word)))

    def unit(self, vertex: Vertex) -> Vector:
        return {self.idempotents[vertex]: self.field.one}

    def basis_vector(self, index: int) -> Vector:
        return {index: self.field.one}

    def compose(self, g: Vector, f: Vector) -> Vector:
        """
        The product g ∘ f of two elements
        """

        result: dict[int, Any] = {}
        for gi, gc in g.items():
            for fi, fc in f.items():
                product = self.table.get((gi, fi))
                if not product:
                    continue
                scale = gc * fc
                for k, c in product.items():
                    value = result.get(k, self.field.zero) + scale * c
                    if value:
                        result[k] = value
                    else:
                        result.pop(k, None)
        return result

    def endpoints(self, element: Vector) -> tuple[Vertex, Vertex] | None:
        """
        Common (source, target) of a homogeneous element, None for zero

        Raises:
            AlgebraMismatch: If the element mixes Hom spaces
        """

        ends = {(self.basis[k].source, self.basis[k].target) for k in element}
        if not ends:
            return None
        if len(ends) > 1:
            raise AlgebraMismatch(f"element of {self.name} is not homogeneous: {sorted(map(str, ends))}")
        return ends.pop()

    def format_element(self, element: Vector) -> str:
        if not element:
            return "0"
        terms = []
        for k in sorted(element):
            coefficient = self.field.to_sympy(element[k])
            label = str(self.basis[k])
            terms.append(label if coefficient == 1 else f"{coefficient}*{label}")
        return " + ".join(terms)

    @cached_property
    def opposite(self) -> "BoundQuiverAlgebra":
        """
        A^op: the same basis with source and target swapped and products reversed

        The opposite of the opposite is this algebra itself.
        """

        basis = tuple(
            BasisPath(b.target, b.source, tuple(reversed(b.word)), b.label if b.is_idempotent else f"{b.label}ᵒᵖ")
            for b in self.basis
        )
        table = {(f, g): dict(product) for (g, f), product in self.table.items()}

        quiver = None
        if self.quiver is not None:
            quiver = Quiver(self.quiver.vertices, tuple(Arrow(a.name, a.target, a.source) for a in self.quiver.arrows))

        descriptor = {"kind": "opposite", "of": self.descriptor} if self.descriptor else None
        op = BoundQuiverAlgebra(
            _opposite_name(self.name), self.vertices, basis, table, self.field, quiver, self.relations, descriptor
        )
        op.__dict__["opposite"] = self
        return op

    def is_associative(self) -> bool:
        for h in range(self.dim):
            for g in self.incoming[self.basis[h].source]:
                hg = self.table.get((h, g), {})
                for f in self.incoming[self.basis[g].source]:
                    left = self.compose({h: self.field.one}, self.table.get((g, f), {}))
                    right = self.compose(hg, {f: self.field.one})
                    if left != right:
                        return False
        return True

    def is_directed(self) -> bool:
        """
        Whether the nonzero Hom spaces between distinct vertices admit a topological order and
        every vertex has a one-dimensional endomorphism space
        """

        for v in self.vertices:
            if len(self.paths(v, v)) != 1:
                return False

        links = {(b.source, b.target) for b in self.basis if b.source != b.target}
        quiver = Quiver(self.vertices, tuple(Arrow(f"h{k}", s, t) for k, (s, t) in enumerate(sorted(links, key=str))))
        return quiver.is_acyclic()


def _opposite_name(name: str) -> str:
    if name.endswith("^op"):
        return name[:-3]
    return f"{name}^op"


def path_algebra(
    quiver: Quiver, max_length: int | None = None, field: Domain = QQ, name: str = "KQ"
) -> BoundQuiverAlgebra:
    """
    The path algebra of a quiver, truncated so that paths of length >= max_length vanish

    Args:
        quiver (Quiver): Presenting quiver
        max_length (int | None): Truncation length, no truncation when None (acyclic quivers only)
        field (Domain): Coefficient field
        name (str): Printable name

    Returns:
        BoundQuiverAlgebra: KQ / (rad KQ)^max_length
    """

    basis = tuple(
        BasisPath(source, target, tuple(a.name for a in arrows), path_label(source, tuple(a.name for a in arrows)))
        for source, target, arrows in quiver.paths(max_length)
    )
    lookup = {(b.source, b.word): k for k, b in enumerate(basis)}

    by_target: dict[Vertex, list[int]] = {}
    for k, b in enumerate(basis):
        by_target.setdefault(b.target, []).append(k)

    one = field.one
    table: dict[tuple[int, int], Vector] = {}
    for gi, g in enumerate(basis):
        for fi in by_target.get(g.source, []):
            f = basis[fi]
            if f.is_idempotent:
                table[(gi, fi)] = {gi: one}
            elif g.is_idempotent:
                table[(gi, fi)] = {fi: one}
            else:
                k = lookup.get((f.source, f.word + g.word))
                if k is not None:
                    table[(gi, fi)] = {k: one}

    logger.debug("path algebra %s: %d basis paths, %d products", name, len(basis), len(table))
    return BoundQuiverAlgebra(name, quiver.vertices, basis, table, field, quiver)


def quotient(
    algebra: BoundQuiverAlgebra,
    generators: Iterable[Vector],
    name: str | None = None,
    relations: Sequence[str] = (),
) -> BoundQuiverAlgebra:
    """
    A / I for the two-sided ideal I generated by the given elements

    The ideal is spanned by all ``a ∘ r ∘ b`` with ``a, b`` basis paths. Each Hom space is put in
    reduced echelon form; pivot paths are eliminated and the remaining paths form the new basis.
    """

    one = algebra.field.one
    ideal = EchelonBasis(algebra.field)

    for generator in generators:
        components: dict[tuple[Vertex, Vertex], Vector] = {}
        for k, c in generator.items():
            b = algebra.basis[k]
            components.setdefault((b.source, b.target), {})[k] = c

        for (source, target), component in components.items():
            for b in algebra.incoming[source]:
                right = algebra.compose(component, {b: one})
                if not right:
                    continue
                for a in algebra.outgoing[target]:
                    ideal.insert(algebra.compose({a: one}, right))

    eliminated = set(ideal.pivots)
    survivors = [k for k in range(algebra.dim) if k not in eliminated]
    renumber = {old: new for new, old in enumerate(survivors)}

    table: dict[tuple[int, int], Vector] = {}
    for (g, f), product in algebra.table.items():
        if g in renumber and f in renumber:
            reduced = ideal.reduce(product)
            if reduced:
                table[(renumber[g], renumber[f])] = {renumber[k]: c for k, c in reduced.items()}

    basis = tuple(algebra.basis[k] for k in survivors)
    alive = {b.source for b in basis if b.is_idempotent}
    vertices = tuple(v for v in algebra.vertices if v in alive)

    quiver = None
    if algebra.quiver is not None:
        quiver = Quiver(
            vertices, tuple(a for a in algebra.quiver.arrows if a.source in alive and a.target in alive)
        )

    logger.debug("quotient of %s: ideal of dimension %d, %d paths left", algebra.name, len(ideal), len(basis))
    return BoundQuiverAlgebra(
        name or f"{algebra.name}/I",
        vertices,
        basis,
        table,
        algebra.field,
        quiver,
        tuple(algebra.relations) + tuple(relations),
    )


def tensor(left: BoundQuiverAlgebra, right: BoundQuiverAlgebra, name: str | None = None) -> BoundQuiverAlgebra:
    """
    The tensor product over the field, with vertices the pairs (a, b)
    """

    if left.field != right.field:
        raise AlgebraMismatch(f"cannot tensor {left.name} and {right.name} over different fields")

    width = right.dim
    basis = []
    for x in left.basis:
        for y in right.basis:
            if x.is_idempotent and y.is_idempotent:
                word: tuple[str, ...] = ()
            else:
                word = x.word + ("⊗",) + y.word
            basis.append(BasisPath((x.source, y.source), (x.target, y.target), word, f"{x}⊗{y}"))

    table: dict[tuple[int, int], Vector] = {}
    for (g1, f1), p1 in left.table.items():
        for (g2, f2), p2 in right.table.items():
            table[(g1 * width + g2, f1 * width + f2)] = {
                k1 * width + k2: c1 * c2 for k1, c1 in p1.items() for k2, c2 in p2.items()
            }

    vertices = tuple((a, b) for a in left.vertices for b in right.vertices)

    quiver = None
    if left.quiver is not None and right.quiver is not None:
        arrows = [
            Arrow(f"{a.name}⊗{show_vertex(w)}", (a.source, w), (a.target, w))
            for a in left.quiver.arrows
            for w in right.vertices
        ]
        arrows += [
            Arrow(f"{show_vertex(v)}⊗{b.name}", (v, b.source), (v, b.target))
            for v in left.vertices
            for b in right.quiver.arrows
        ]
        quiver = Quiver(vertices, tuple(arrows))

    return BoundQuiverAlgebra(name or f"{left.name}⊗{right.name}", vertices, tuple(basis), table, left.field, quiver)


def corner(algebra: BoundQuiverAlgebra, vertices: Sequence[Vertex], name: str | None = None) -> BoundQuiverAlgebra:
    """
    The corner algebra eAe for the idempotent e = sum of e_v over the given vertices
    """

    missing = [v for v in vertices if v not in algebra.idempotents]
    if missing:
        raise PreconditionError("corner", "vertices not in the algebra", missing)

    keep = set(vertices)
    survivors = [k for k, b in enumerate(algebra.basis) if b.source in keep and b.target in keep]
    renumber = {old: new for new, old in enumerate(survivors)}

    table = {
        (renumber[g], renumber[f]): {renumber[k]: c for k, c in product.items()}
        for (g, f), product in algebra.table.items()
        if g in renumber and f in renumber
    }
    basis = tuple(algebra.basis[k] for k in survivors)
    return BoundQuiverAlgebra(name or f"e{algebra.name}e", tuple(vertices), basis, table, algebra.field)


def kill_vertices(
    algebra: BoundQuiverAlgebra, vertices: Iterable[Vertex], name: str | None = None
) -> BoundQuiverAlgebra:
    """
    A / AeA for the idempotent e = sum of e_v over the given vertices
    """

    killed = list(vertices)
    generators = [algebra.unit(v) for v in killed]
    relations = [f"e{show_vertex(v)}=0" for v in killed]
    return quotient(algebra, generators, name, relations)


def arrows(algebra: BoundQuiverAlgebra) -> list[Arrow]:
    """
    Arrows of the Gabriel quiver, read off as basis paths completing rad^2 inside rad
    """

    one = algebra.field.one
    radical = [k for k, b in enumerate(algebra.basis) if not b.is_idempotent]

    span = EchelonBasis(algebra.field)
    for g in radical:
        for f in radical:
            product = algebra.table.get((g, f))
            if product:
                span.insert(product)

    result = []
    for k in radical:
        if span.insert({k: one}):
            b = algebra.basis[k]
            result.append(Arrow(str(b), b.source, b.target))
    return result
