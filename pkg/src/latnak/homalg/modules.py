"""
Finite-dimensional modules as representations, complexes of modules, and their projective
resolutions.

A module M assigns a vector space M(x) to every vertex; a basis path ``a: x -> y`` acts as a linear
map M(y) -> M(x), matching P(v)(x) = paths x -> v with action q ↦ q ∘ a. The injective I(v) has
I(v)(x) = D(paths v -> x). The Nakayama functor sends P(v) to I(v), and a complex of projectives to
a complex of injective modules, which ``resolve`` turns back into a complex of projectives.
"""

import logging
from collections.abc import Sequence
from dataclasses import dataclass, field
from typing import Any

from latnak.algebra import BoundQuiverAlgebra, Vertex
from latnak.exceptions import ResolutionError
from latnak.homalg.complexes import Differential, ProjComplex, minimize
from latnak.linalg import Vector, complement_indices, kernel, sparse_matrix

logger = logging.getLogger(__name__)

Matrix = dict[tuple[int, int], Any]


@dataclass(eq=False)
class Representation:
    """
    Module over a bound quiver algebra

    Attributes:
        algebra (BoundQuiverAlgebra): Ambient algebra
        dims (dict[Vertex, int]): dim M(x) per vertex
        action (dict[int, Matrix]): For a radical basis path a: x -> y, the matrix of M(y) -> M(x)
    """

    algebra: BoundQuiverAlgebra
    dims: dict[Vertex, int] = field(default_factory=dict)
    action: dict[int, Matrix] = field(default_factory=dict)

    def dim(self, vertex: Vertex) -> int:
        return self.dims.get(vertex, 0)

    @property
    def total_dim(self) -> int:
        return sum(self.dims.values())

    def act(self, path: int, vector: Vector) -> Vector:
        """
        Apply the basis path ``path`` (x -> y) to a vector of M(y), giving a vector of M(x)
        """

        if self.algebra.basis[path].is_idempotent:
            return dict(vector)

        zero = self.algebra.field.zero
        result: Vector = {}
        for (row, col), value in self.action.get(path, {}).items():
            coefficient = vector.get(col)
            if coefficient:
                updated = result.get(row, zero) + value * coefficient
                if updated:
                    result[row] = updated
                else:
                    result.pop(row, None)
        return result


@dataclass(eq=False)
class ModuleComplex:
    """
    Bounded complex of modules

    Attributes:
        algebra (BoundQuiverAlgebra): Ambient algebra
        terms (dict[int, Representation]): Module per degree
        maps (dict[int, dict[Vertex, Matrix]]): d^k at every vertex, M^k(x) -> M^{k+1}(x)
    """

    algebra: BoundQuiverAlgebra
    terms: dict[int, Representation] = field(default_factory=dict)
    maps: dict[int, dict[Vertex, Matrix]] = field(default_factory=dict)

    def module(self, k: int) -> Representation:
        return self.terms.get(k) or Representation(self.algebra)

    def map_at(self, k: int, vertex: Vertex) -> Matrix:
        return self.maps.get(k, {}).get(vertex, {})

    @property
    def support(self) -> list[int]:
        return sorted(k for k, rep in self.terms.items() if rep.total_dim)


def projective_module(algebra: BoundQuiverAlgebra, vertex: Vertex) -> Representation:
    """
    P(v) with P(v)(x) = paths x -> v
    """

    positions = {x: {q: i for i, q in enumerate(algebra.paths(x, vertex))} for x in algebra.vertices}
    action: dict[int, Matrix] = {}
    for a, b in enumerate(algebra.basis):
        if b.is_idempotent:
            continue
        matrix: Matrix = {}
        for q, col in positions[b.target].items():
            for p, value in algebra.compose({q: algebra.field.one}, {a: algebra.field.one}).items():
                matrix[(positions[b.source][p], col)] = value
        if matrix:
            action[a] = matrix

    dims = {x: len(pos) for x, pos in positions.items() if pos}
    return Representation(algebra, dims, action)


def injective_module(algebra: BoundQuiverAlgebra, vertex: Vertex) -> Representation:
    """
    I(v) with I(v)(x) = D(paths v -> x); the entry of a at (p, q) is the coefficient of q in a ∘ p
    """

    positions = {x: {q: i for i, q in enumerate(algebra.paths(vertex, x))} for x in algebra.vertices}
    action: dict[int, Matrix] = {}
    for a, b in enumerate(algebra.basis):
        if b.is_idempotent:
            continue
        matrix: Matrix = {}
        for p, row in positions[b.source].items():
            for q, value in algebra.compose({a: algebra.field.one}, {p: algebra.field.one}).items():
                matrix[(row, positions[b.target][q])] = value
        if matrix:
            action[a] = matrix

    dims = {x: len(pos) for x, pos in positions.items() if pos}
    return Representation(algebra, dims, action)


def simple_module(algebra: BoundQuiverAlgebra, vertex: Vertex) -> Representation:
    return Representation(algebra, {vertex: 1}, {})


def direct_sum_modules(algebra: BoundQuiverAlgebra, modules: Sequence[Representation]) -> Representation:
    dims: dict[Vertex, int] = {}
    action: dict[int, Matrix] = {}
    for module in modules:
        for a, matrix in module.action.items():
            b = algebra.basis[a]
            row_offset, col_offset = dims.get(b.source, 0), dims.get(b.target, 0)
            target = action.setdefault(a, {})
            for (row, col), value in matrix.items():
                target[(row + row_offset, col + col_offset)] = value
        for x, value in module.dims.items():
            dims[x] = dims.get(x, 0) + value
    return Representation(algebra, dims, action)


def module_stalk(module: Representation, degree: int = 0) -> ModuleComplex:
    return ModuleComplex(module.algebra, {degree: module}, {})


def nakayama_functor(X: ProjComplex) -> ModuleComplex:
    """
    ν X: the complex of injectives ν(X^k) = ⊕ I(v) with ν applied to every differential entry

    For an entry f: v_c -> v_r the map I(v_c)(x) -> I(v_r)(x) has entry (p, q) equal to the
    coefficient of q in p ∘ f.
    """

    algebra = X.algebra
    one = algebra.field.one
    injectives = {v: injective_module(algebra, v) for vertices in X.terms.values() for v in vertices}
    terms = {k: direct_sum_modules(algebra, [injectives[v] for v in vertices]) for k, vertices in X.terms.items()}

    def offsets(vertices: Sequence[Vertex], x: Vertex) -> list[int]:
        result, running = [], 0
        for v in vertices:
            result.append(running)
            running += len(algebra.paths(v, x))
        return result

    maps: dict[int, dict[Vertex, Matrix]] = {}
    for k, d in X.differentials.items():
        source, target = X.summands(k), X.summands(k + 1)
        per_vertex: dict[Vertex, Matrix] = {}
        for x in algebra.vertices:
            col_offsets, row_offsets = offsets(source, x), offsets(target, x)
            matrix: Matrix = {}
            for (r, c), element in d.items():
                positions = {q: i for i, q in enumerate(algebra.paths(source[c], x))}
                for p_position, p in enumerate(algebra.paths(target[r], x)):
                    for q, value in algebra.compose({p: one}, element).items():
                        key = (row_offsets[r] + p_position, col_offsets[c] + positions[q])
                        updated = matrix.get(key, algebra.field.zero) + value
                        if updated:
                            matrix[key] = updated
                        else:
                            matrix.pop(key, None)
            if matrix:
                per_vertex[x] = matrix
        maps[k] = per_vertex

    return ModuleComplex(algebra, terms, maps)


class _Coordinates:
    """
    Basis of a direct sum of projectives at one vertex: pairs (summand, path x -> v)
    """

    def __init__(self, algebra: BoundQuiverAlgebra, summands: Sequence[Vertex], vertex: Vertex, offset: int = 0):
        self.pairs = [(s, q) for s, v in enumerate(summands) for q in algebra.paths(vertex, v)]
        self.index = {pair: offset + i for i, pair in enumerate(self.pairs)}
        self.offset = offset

    def __len__(self) -> int:
        return len(self.pairs)


def resolve(M: ModuleComplex, bound: int | None = None, minimal: bool = True) -> ProjComplex:
    """
    A complex of projectives quasi-isomorphic to a bounded complex of modules

    Works from the top degree down. At degree k the cocycles of the cone of P -> M,
    Z^k = {(m, p) in M^k ⊕ P^{k+1} : d_M m + φ p = 0, d_P p = 0}, are computed at every vertex;
    a complement of rad Z^k + d_M(M^{k-1}) gives the new summands of P^k, each generator (m, p)
    contributing φ = m and d_P = -p. The process stops below the support once Z^k vanishes.

    Raises:
        ResolutionError: If the resolution does not stop within the global dimension bound
    """

    algebra = M.algebra
    field_ = algebra.field
    one = field_.one
    support = M.support
    if not support:
        return ProjComplex(algebra)

    lo, hi = support[0], support[-1]
    limit = lo - (bound if bound is not None else len(algebra.vertices) + 1)

    terms: dict[int, list[Vertex]] = {}
    differentials: dict[int, Differential] = {}
    images: dict[int, list[Vector]] = {}

    k = hi
    while True:
        if k < limit:
            raise ResolutionError(f"projective resolution over {algebra.name} did not stop above degree {limit}")

        upper = terms.get(k + 1, [])
        upper_images = images.get(k + 1, [])
        cocycles: dict[Vertex, list[Vector]] = {}
        layouts: dict[Vertex, tuple[int, _Coordinates]] = {}

        for x in algebra.vertices:
            m_dim = M.module(k).dim(x)
            coords = _Coordinates(algebra, upper, x, m_dim)
            layouts[x] = (m_dim, coords)
            columns = m_dim + len(coords)
            if columns == 0:
                cocycles[x] = []
                continue

            m_next = M.module(k + 1).dim(x)
            below = _Coordinates(algebra, terms.get(k + 2, []), x, m_next)
            entries: dict[tuple[int, int], Any] = dict(M.map_at(k, x))

            for (s, q), column in coords.index.items():
                for row, value in M.module(k + 1).act(q, upper_images[s]).items():
                    entries[(row, column)] = entries.get((row, column), field_.zero) + value
                for (t, s2), element in differentials.get(k + 1, {}).items():
                    if s2 != s:
                        continue
                    for p, value in algebra.compose(element, {q: one}).items():
                        key = (below.index[(t, p)], column)
                        entries[key] = entries.get(key, field_.zero) + value

            matrix = sparse_matrix(entries, (m_next + len(below), columns), field_)
            cocycles[x] = kernel(matrix)

        if k < lo and not any(cocycles.values()):
            break

        new_terms: list[Vertex] = []
        new_images: list[Vector] = []
        new_differential: Differential = {}

        for x in algebra.vertices:
            if not cocycles[x]:
                continue
            m_dim, coords = layouts[x]

            boundary_columns: dict[int, Vector] = {}
            for (row, col), value in M.map_at(k - 1, x).items():
                boundary_columns.setdefault(col, {})[row] = value
            base: list[Vector] = list(boundary_columns.values())

            for a in algebra.outgoing[x]:
                path = algebra.basis[a]
                if path.is_idempotent:
                    continue
                y = path.target
                y_dim, y_coords = layouts[y]
                for z in cocycles[y]:
                    base.append(_act_on_cocycle(algebra, M.module(k), a, z, y_dim, y_coords, coords))

            for chosen in complement_indices(base, cocycles[x], field_):
                z = cocycles[x][chosen]
                s_new = len(new_terms)
                new_terms.append(x)
                new_images.append({i: v for i, v in z.items() if i < m_dim})
                for i, value in z.items():
                    if i < m_dim:
                        continue
                    t, q = coords.pairs[i - m_dim]
                    element = new_differential.setdefault((t, s_new), {})
                    updated = element.get(q, field_.zero) - value
                    if updated:
                        element[q] = updated
                    else:
                        element.pop(q, None)

        if new_terms:
            terms[k] = new_terms
            images[k] = new_images
            if new_differential:
                differentials[k] = new_differential
        elif k < lo:
            break

        k -= 1

    resolution = ProjComplex(algebra, {d: tuple(v) for d, v in terms.items()}, differentials)
    logger.debug("resolve: %d summands over degrees %d..%d", resolution.size, resolution.lo, resolution.hi)
    return minimize(resolution) if minimal else resolution


def _act_on_cocycle(
    algebra: BoundQuiverAlgebra,
    module: Representation,
    path: int,
    z: Vector,
    y_dim: int,
    y_coords: _Coordinates,
    x_coords: _Coordinates,
) -> Vector:
    """
    The image of a cocycle at y under a path x -> y, as a vector at x
    """

    one = algebra.field.one
    m_part = {i: v for i, v in z.items() if i < y_dim}
    result = module.act(path, m_part)

    for i, value in z.items():
        if i < y_dim:
            continue
        s, q = y_coords.pairs[i - y_dim]
        for p, coefficient in algebra.compose({q: one}, {path: one}).items():
            key = x_coords.index[(s, p)]
            updated = result.get(key, algebra.field.zero) + value * coefficient
            if updated:
                result[key] = updated
            else:
                result.pop(key, None)
    return result


def simple_resolution(algebra: BoundQuiverAlgebra, vertex: Vertex) -> ProjComplex:
    """
    Minimal projective resolution of the simple module S(v), ending in degree 0
    """

    return resolve(module_stalk(simple_module(algebra, vertex)))


def injective_resolution_as_proj(algebra: BoundQuiverAlgebra, vertex: Vertex) -> ProjComplex:
    """
    A complex of projectives quasi-isomorphic to the injective module I(v)
    """

    return resolve(module_stalk(injective_module(algebra, vertex)))
