"""
Bounded complexes of finitely generated projectives.

A complex stores, per degree, the list of vertices of its indecomposable summands and, per degree
``k``, the differential ``d^k: X^k -> X^{k+1}`` as a sparse matrix ``{(row, col): element}``. Rows
index summands of ``X^{k+1}``, columns summands of ``X^k``; the entry at ``(r, c)`` is an element of
the algebra from vertex ``X^k[c]`` to vertex ``X^{k+1}[r]``.

Sign conventions: ``X[n]^k = X^{k+n}`` with differential ``(-1)^n d``; the cone of ``f: X -> Y``
has ``C^k = Y^k ⊕ X^{k+1}`` and differential ``[[d_Y, f], [0, -d_X]]``.
"""

import logging
from collections import Counter
from collections.abc import Sequence
from dataclasses import InitVar, dataclass, field

from latnak.algebra import BoundQuiverAlgebra, Vertex
from latnak.algebra.quiver import show_vertex
from latnak.exceptions import AlgebraMismatch, ComplexError, NotAChainMap, VerificationError
from latnak.linalg import Vector, rank, sparse_matrix

logger = logging.getLogger(__name__)

Differential = dict[tuple[int, int], Vector]


def _add_into(target: dict, key: object, element: Vector, zero: object) -> None:
    current = target.get(key)
    if current is None:
        if element:
            target[key] = dict(element)
        return

    for k, c in element.items():
        value = current.get(k, zero) + c
        if value:
            current[k] = value
        else:
            current.pop(k, None)

    if not current:
        del target[key]


def _scale(element: Vector, factor: object) -> Vector:
    return {k: c * factor for k, c in element.items() if c * factor}


def matmul(algebra: BoundQuiverAlgebra, g: Differential, f: Differential) -> Differential:
    """
    Product g ∘ f of two matrices of algebra elements
    """

    by_row: dict[int, list[tuple[int, Vector]]] = {}
    for (m, c), element in f.items():
        by_row.setdefault(m, []).append((c, element))

    result: Differential = {}
    for (r, m), outer in g.items():
        for c, inner in by_row.get(m, []):
            _add_into(result, (r, c), algebra.compose(outer, inner), algebra.field.zero)
    return result


def matadd(algebra: BoundQuiverAlgebra, *matrices: Differential) -> Differential:
    result: Differential = {}
    for matrix in matrices:
        for key, element in matrix.items():
            _add_into(result, key, element, algebra.field.zero)
    return result


def negate(algebra: BoundQuiverAlgebra, matrix: Differential) -> Differential:
    minus = -algebra.field.one
    return {key: _scale(element, minus) for key, element in matrix.items()}


@dataclass(eq=False)
class ProjComplex:
    """
    Bounded complex of projectives over a bound quiver algebra

    Attributes:
        algebra (BoundQuiverAlgebra): Ambient algebra
        terms (dict[int, tuple[Vertex, ...]]): Summand vertices per degree
        differentials (dict[int, Differential]): ``d^k`` per degree

    Raises:
        ComplexError: If an entry connects the wrong vertices or d ∘ d != 0
    """

    algebra: BoundQuiverAlgebra
    terms: dict[int, tuple[Vertex, ...]] = field(default_factory=dict)
    differentials: dict[int, Differential] = field(default_factory=dict)
    check: InitVar[bool] = True

    def __post_init__(self, check: bool) -> None:
        self.terms = {k: tuple(v) for k, v in sorted(self.terms.items()) if v}

        cleaned: dict[int, Differential] = {}
        for k, d in self.differentials.items():
            entries = {key: dict(e) for key, e in d.items() if e}
            if entries:
                cleaned[k] = entries
        self.differentials = cleaned

        if check:
            self.validate()

    def validate(self) -> None:
        for k, d in self.differentials.items():
            source, target = self.summands(k), self.summands(k + 1)
            for (r, c), element in d.items():
                if r >= len(target) or c >= len(source):
                    raise ComplexError(f"entry ({r},{c}) of d^{k} is outside the terms")
                ends = self.algebra.endpoints(element)
                if ends != (source[c], target[r]):
                    raise ComplexError(
                        f"entry ({r},{c}) of d^{k} is not a map P({show_vertex(source[c])}) -> "
                        f"P({show_vertex(target[r])})"
                    )

        for k in self.differentials:
            if k + 1 in self.differentials and matmul(self.algebra, self.d(k + 1), self.d(k)):
                raise ComplexError(f"d^{k + 1} ∘ d^{k} is not zero")

    @property
    def degrees(self) -> list[int]:
        return sorted(self.terms)

    @property
    def lo(self) -> int:
        return min(self.terms) if self.terms else 0

    @property
    def hi(self) -> int:
        return max(self.terms) if self.terms else -1

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def size(self) -> int:
        return sum(len(v) for v in self.terms.values())

    def summands(self, k: int) -> tuple[Vertex, ...]:
        return self.terms.get(k, ())

    def d(self, k: int) -> Differential:
        return self.differentials.get(k, {})

    def vertex_multiset(self) -> Counter:
        return Counter((k, v) for k, vertices in self.terms.items() for v in vertices)

    def is_minimal(self) -> bool:
        """
        Whether every differential entry lies in the radical
        """

        for d in self.differentials.values():
            for element in d.values():
                if any(self.algebra.basis[k].is_idempotent for k in element):
                    return False
        return True

    def same_as(self, other: "ProjComplex") -> bool:
        return self.algebra is other.algebra and self.terms == other.terms and self.differentials == other.differentials

    def describe(self) -> str:
        if self.is_zero:
            return "0"

        parts = []
        for k in self.degrees:
            summands = " ⊕ ".join(f"P({show_vertex(v)})" for v in self.summands(k))
            parts.append(f"[{k}] {summands}")
        return " -> ".join(parts)

    def __str__(self) -> str:
        return self.describe()


@dataclass(eq=False)
class ChainMap:
    """
    Degreewise map of complexes f^k: source^k -> target^k

    Attributes:
        source (ProjComplex): Domain
        target (ProjComplex): Codomain
        components (dict[int, Differential]): ``{(row in target^k, col in source^k): element}`` per degree
    """

    source: ProjComplex
    target: ProjComplex
    components: dict[int, Differential] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.source.algebra is not self.target.algebra:
            raise AlgebraMismatch("chain map between complexes over different algebras")

    @property
    def algebra(self) -> BoundQuiverAlgebra:
        return self.source.algebra

    def component(self, k: int) -> Differential:
        return self.components.get(k, {})

    def is_chain_map(self) -> bool:
        algebra = self.algebra
        degrees = set(self.source.terms) | set(self.target.terms)
        for k in degrees:
            left = matmul(algebra, self.target.d(k), self.component(k))
            right = matmul(algebra, self.component(k + 1), self.source.d(k))
            if matadd(algebra, left, negate(algebra, right)):
                return False
        return True

    def compose(self, first: "ChainMap") -> "ChainMap":
        """
        self ∘ first
        """

        degrees = set(self.components) & set(first.components)
        return ChainMap(
            first.source,
            self.target,
            {k: matmul(self.algebra, self.component(k), first.component(k)) for k in degrees},
        )


def zero_complex(algebra: BoundQuiverAlgebra) -> ProjComplex:
    return ProjComplex(algebra)


def stalk(algebra: BoundQuiverAlgebra, vertices: Sequence[Vertex], degree: int = 0) -> ProjComplex:
    return ProjComplex(algebra, {degree: tuple(vertices)})


def stalk_projective(algebra: BoundQuiverAlgebra, vertex: Vertex, degree: int = 0) -> ProjComplex:
    """
    The indecomposable projective P(vertex) concentrated in one degree
    """

    if vertex not in algebra.idempotents:
        raise ComplexError(f"{show_vertex(vertex)} is not a vertex of {algebra.name}")
    return stalk(algebra, (vertex,), degree)


def shift(X: ProjComplex, n: int) -> ProjComplex:
    """
    X[n] with X[n]^k = X^{k+n} and differential (-1)^n d
    """

    if n == 0:
        return X

    sign_flip = n % 2 == 1
    differentials = {k - n: negate(X.algebra, d) if sign_flip else d for k, d in X.differentials.items()}
    return ProjComplex(X.algebra, {k - n: v for k, v in X.terms.items()}, differentials, check=False)


def direct_sum(complexes: Sequence[ProjComplex], algebra: BoundQuiverAlgebra | None = None) -> ProjComplex:
    """
    Direct sum, summands of the earlier complexes first in every degree
    """

    if algebra is None:
        if not complexes:
            raise ComplexError("direct_sum of no complexes needs an algebra")
        algebra = complexes[0].algebra

    for X in complexes:
        if X.algebra is not algebra:
            raise AlgebraMismatch("direct_sum of complexes over different algebras")

    terms: dict[int, list[Vertex]] = {}
    differentials: dict[int, Differential] = {}
    for X in complexes:
        offsets = {k: len(terms.get(k, [])) for k in set(X.terms) | {k + 1 for k in X.terms}}
        for k, d in X.differentials.items():
            row_offset, col_offset = offsets.get(k + 1, 0), offsets.get(k, 0)
            target = differentials.setdefault(k, {})
            for (r, c), element in d.items():
                target[(r + row_offset, c + col_offset)] = element
        for k, vertices in X.terms.items():
            terms.setdefault(k, []).extend(vertices)

    return ProjComplex(algebra, {k: tuple(v) for k, v in terms.items()}, differentials, check=False)


def cone(f: ChainMap, check: bool = True) -> ProjComplex:
    """
    Mapping cone of a chain map, C^k = Y^k ⊕ X^{k+1}

    Raises:
        NotAChainMap: If f does not commute with the differentials
    """

    if check and not f.is_chain_map():
        raise NotAChainMap("cone requested for a map that does not commute with the differentials")

    X, Y = f.source, f.target
    algebra = f.algebra
    degrees = set(Y.terms) | {k - 1 for k in X.terms}

    terms = {k: Y.summands(k) + X.summands(k + 1) for k in degrees}
    differentials: dict[int, Differential] = {}
    for k in degrees:
        width_here = len(Y.summands(k))
        width_next = len(Y.summands(k + 1))
        d: Differential = {}
        for (r, c), element in Y.d(k).items():
            d[(r, c)] = element
        for (r, c), element in f.component(k + 1).items():
            d[(r, width_here + c)] = element
        for (r, c), element in negate(algebra, X.d(k + 1)).items():
            d[(width_next + r, width_here + c)] = element
        if d:
            differentials[k] = d

    return ProjComplex(algebra, terms, differentials, check=False)


def cocone(f: ChainMap, check: bool = True) -> ProjComplex:
    """
    cone(f)[-1]; the source of f is the trailing block in every degree
    """

    return shift(cone(f, check), -1)


def restrict_summands(X: ProjComplex, keep: dict[int, Sequence[int]]) -> ProjComplex:
    """
    The subquotient spanned by the chosen summands, differentials restricted blockwise

    The caller is responsible for choosing a subcomplex or a quotient complex.
    """

    renumber = {k: {old: new for new, old in enumerate(indices)} for k, indices in keep.items()}
    terms = {k: tuple(X.summands(k)[i] for i in indices) for k, indices in keep.items()}

    differentials: dict[int, Differential] = {}
    for k, d in X.differentials.items():
        rows, cols = renumber.get(k + 1, {}), renumber.get(k, {})
        restricted = {(rows[r], cols[c]): e for (r, c), e in d.items() if r in rows and c in cols}
        if restricted:
            differentials[k] = restricted

    return ProjComplex(X.algebra, terms, differentials, check=False)


def _find_unit(algebra: BoundQuiverAlgebra, differentials: dict[int, Differential]) -> tuple | None:
    for k in sorted(differentials):
        for (r, c), element in differentials[k].items():
            if len(element) == 1:
                index, value = next(iter(element.items()))
                if algebra.basis[index].is_idempotent:
                    return k, r, c, value
    return None


def _drop(d: Differential, row: int | None = None, col: int | None = None) -> Differential:
    result: Differential = {}
    for (r, c), element in d.items():
        if r == row or c == col:
            continue
        r2 = r - 1 if row is not None and r > row else r
        c2 = c - 1 if col is not None and c > col else c
        result[(r2, c2)] = element
    return result


def minimize(X: ProjComplex) -> ProjComplex:
    """
    Strip contractible summands P(v) -> P(v) by Gaussian elimination

    Each step removes an entry λ·e_v of d^k at (r, c) together with summand c of X^k and summand
    r of X^{k+1}, replacing the remaining block δ of d^k by δ - γ λ^{-1} β.
    """

    algebra = X.algebra
    terms = {k: list(v) for k, v in X.terms.items()}
    differentials = {k: {key: dict(e) for key, e in d.items()} for k, d in X.differentials.items()}
    eliminated = 0

    while (pivot := _find_unit(algebra, differentials)) is not None:
        k, r, c, value = pivot
        d = differentials[k]
        factor = algebra.field.one / value

        column = [(r2, e) for (r2, c2), e in d.items() if c2 == c and r2 != r]
        row = [(c2, e) for (r2, c2), e in d.items() if r2 == r and c2 != c]

        for r2, gamma in column:
            for c2, beta in row:
                correction = _scale(algebra.compose(gamma, beta), -factor)
                _add_into(d, (r2, c2), correction, algebra.field.zero)

        differentials[k] = _drop(d, row=r, col=c)
        if k - 1 in differentials:
            differentials[k - 1] = _drop(differentials[k - 1], row=c)
        if k + 1 in differentials:
            differentials[k + 1] = _drop(differentials[k + 1], col=r)

        terms[k].pop(c)
        terms[k + 1].pop(r)
        eliminated += 1

    if eliminated:
        logger.debug("minimize: removed %d contractible pairs, %d summands left", eliminated, X.size - 2 * eliminated)

    return ProjComplex(algebra, {k: tuple(v) for k, v in terms.items()}, differentials, check=False)


def evaluate(X: ProjComplex, vertex: Vertex) -> dict[int, tuple[int, dict[tuple[int, int], object]]]:
    """
    The complex of vector spaces X(vertex): per degree its dimension and the matrix of d^k

    X^k(x) has basis the pairs (summand c, path x -> X^k[c]); an entry a acts by q ↦ a ∘ q.
    """

    algebra = X.algebra
    coordinates: dict[int, dict[tuple[int, int], int]] = {}
    for k, vertices in X.terms.items():
        index: dict[tuple[int, int], int] = {}
        for c, v in enumerate(vertices):
            for q in algebra.paths(vertex, v):
                index[(c, q)] = len(index)
        coordinates[k] = index

    result = {}
    for k in X.terms:
        entries: dict[tuple[int, int], object] = {}
        target = coordinates.get(k + 1, {})
        for (r, c), element in X.d(k).items():
            for q in algebra.paths(vertex, X.summands(k)[c]):
                image = algebra.compose(element, {q: algebra.field.one})
                column = coordinates[k][(c, q)]
                for p, value in image.items():
                    entries[(target[(r, p)], column)] = value
        result[k] = (len(coordinates[k]), entries)
    return result


def homology_dims(X: ProjComplex) -> dict[Vertex, dict[int, int]]:
    """
    Dimensions of the cohomology of X(x) for every vertex x
    """

    algebra = X.algebra
    result: dict[Vertex, dict[int, int]] = {}
    for x in algebra.vertices:
        evaluated = evaluate(X, x)
        ranks = {}
        for k, (dim, entries) in evaluated.items():
            rows = evaluated.get(k + 1, (0, {}))[0]
            ranks[k] = rank(sparse_matrix(entries, (rows, dim), algebra.field)) if entries else 0

        dims = {}
        for k, (dim, _) in evaluated.items():
            value = dim - ranks[k] - ranks.get(k - 1, 0)
            if value:
                dims[k] = value
        if dims:
            result[x] = dims
    return result


def is_acyclic(X: ProjComplex) -> bool:
    """
    Whether X has no cohomology, tested vertex by vertex on the underlying vector spaces
    """

    return not homology_dims(X)


def dual(X: ProjComplex) -> ProjComplex:
    """
    X^∨ = Hom_A(X, A) as a complex over A^op

    (X^∨)^k has the summands of X^{-k}; the entry of d^k at (c, r) is the entry of d_X^{-k-1} at
    (r, c), read in the opposite algebra. dual(dual(X)) is X itself.
    """

    op = X.algebra.opposite
    terms = {-k: v for k, v in X.terms.items()}
    differentials = {-k - 1: {(c, r): e for (r, c), e in d.items()} for k, d in X.differentials.items()}
    return ProjComplex(op, terms, differentials, check=False)


def transport(X: ProjComplex, target: BoundQuiverAlgebra) -> ProjComplex:
    """
    Rewrite a complex over another algebra, matching vertices by label and basis paths by
    (source, target, word)

    Raises:
        VerificationError: If a vertex or a basis path has no counterpart
    """

    for v in set(v for vertices in X.terms.values() for v in vertices):
        if v not in target.idempotents:
            raise VerificationError(f"vertex {show_vertex(v)} does not exist in {target.name}")

    differentials: dict[int, Differential] = {}
    for k, d in X.differentials.items():
        moved: Differential = {}
        for key, element in d.items():
            image: Vector = {}
            for index, value in element.items():
                b = X.algebra.basis[index]
                found = target.find(b.source, b.target, b.word)
                if found is None:
                    raise VerificationError(f"basis path {b} of {X.algebra.name} has no counterpart in {target.name}")
                image[found] = target.field.convert(X.algebra.field.to_sympy(value))
            moved[key] = image
        differentials[k] = moved

    return ProjComplex(target, dict(X.terms), differentials)
