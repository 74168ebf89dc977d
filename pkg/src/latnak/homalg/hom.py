"""
The Hom complex Hom•(X, Y) between complexes of projectives and everything read off from it:
derived Hom dimensions, chain maps representing cohomology classes, and isomorphism tests.
"""

import logging
import random
from functools import cached_property

from sympy.polys.matrices import DomainMatrix

from latnak.constants import ISO_CAP
from latnak.exceptions import AlgebraMismatch, IsoSearchError
from latnak.homalg.complexes import ChainMap, Differential, ProjComplex, cone, is_acyclic, minimize, shift
from latnak.linalg import EchelonBasis, Vector, kernel, rank, rows_of, sparse_matrix

logger = logging.getLogger(__name__)

HomDims = dict[int, int]

HomKey = tuple[int, int, int, int]


class HomComplex:
    """
    Hom•(X, Y) with Hom^n = Π_k Hom(X^k, Y^{k+n}) and D φ = d_Y φ - (-1)^n φ d_X

    A basis element of Hom^n is ``(k, r, c, p)``: the path ``p`` from ``X^k[c]`` to ``Y^{k+n}[r]``.
    A degree-n cocycle is the same data as a chain map X[-n] -> Y (components X^{j-n} -> Y^j).
    """

    def __init__(self, source: ProjComplex, target: ProjComplex):
        if source.algebra is not target.algebra:
            raise AlgebraMismatch(f"Hom between complexes over {source.algebra.name} and {target.algebra.name}")

        self.source = source
        self.target = target
        self.algebra = source.algebra
        self._bases: dict[int, list[HomKey]] = {}
        self._indices: dict[int, dict[HomKey, int]] = {}
        self._differentials: dict[int, DomainMatrix] = {}
        self._ranks: dict[int, int] = {}

    @cached_property
    def degrees(self) -> range:
        if self.source.is_zero or self.target.is_zero:
            return range(0)
        return range(self.target.lo - self.source.hi, self.target.hi - self.source.lo + 1)

    def basis(self, n: int) -> list[HomKey]:
        if n not in self._bases:
            keys: list[HomKey] = []
            for k, sources in self.source.terms.items():
                targets = self.target.summands(k + n)
                for c, a in enumerate(sources):
                    for r, b in enumerate(targets):
                        keys.extend((k, r, c, p) for p in self.algebra.paths(a, b))
            self._bases[n] = keys
            self._indices[n] = {key: i for i, key in enumerate(keys)}
        return self._bases[n]

    def index(self, n: int) -> dict[HomKey, int]:
        self.basis(n)
        return self._indices[n]

    def differential(self, n: int) -> DomainMatrix:
        """
        Matrix of D: Hom^n -> Hom^{n+1}
        """

        if n in self._differentials:
            return self._differentials[n]

        algebra = self.algebra
        one = algebra.field.one
        sign = one if n % 2 else -one
        columns = self.basis(n)
        rows = self.index(n + 1)

        entries: dict[tuple[int, int], object] = {}

        def add(key: HomKey, column: int, element: Vector, scale: object) -> None:
            for p, value in element.items():
                row = rows[(key[0], key[1], key[2], p)]
                updated = entries.get((row, column), algebra.field.zero) + scale * value
                if updated:
                    entries[(row, column)] = updated
                else:
                    entries.pop((row, column), None)

        target_columns = _columns(self.target.differentials)
        source_rows = _rows(self.source.differentials)

        for column, (k, r, c, p) in enumerate(columns):
            path = {p: one}
            for r2, element in target_columns.get((k + n, r), []):
                add((k, r2, c, 0), column, algebra.compose(element, path), one)
            for c2, element in source_rows.get((k - 1, c), []):
                add((k - 1, r, c2, 0), column, algebra.compose(path, element), sign)

        matrix = sparse_matrix(entries, (len(rows), len(columns)), algebra.field)
        self._differentials[n] = matrix
        return matrix

    def rank(self, n: int) -> int:
        if n not in self._ranks:
            self._ranks[n] = rank(self.differential(n)) if self.basis(n) and self.basis(n + 1) else 0
        return self._ranks[n]

    def dim(self, n: int) -> int:
        return len(self.basis(n)) - self.rank(n) - self.rank(n - 1)

    def dims(self) -> HomDims:
        result = {}
        for n in self.degrees:
            value = self.dim(n)
            if value:
                result[n] = value
        return result

    def cocycles(self, n: int) -> list[Vector]:
        if not self.basis(n):
            return []
        return kernel(self.differential(n))

    def coboundaries(self, n: int) -> list[Vector]:
        if not self.basis(n - 1) or not self.basis(n):
            return []
        columns: list[Vector] = [{} for _ in range(len(self.basis(n - 1)))]
        for row, vector in enumerate(rows_of(self.differential(n - 1))):
            for column, value in vector.items():
                columns[column][row] = value
        return [c for c in columns if c]

    def cohomology_basis(self, n: int) -> list[Vector]:
        """
        Cocycles whose classes form a basis of H^n
        """

        echelon = EchelonBasis(self.algebra.field, self.coboundaries(n))
        return [z for z in self.cocycles(n) if echelon.insert(z)]

    def is_coboundary(self, n: int, vector: Vector) -> bool:
        return vector in EchelonBasis(self.algebra.field, self.coboundaries(n))

    def components(self, n: int, vector: Vector) -> dict[int, Differential]:
        """
        Chain map components X[-n]^j = X^{j-n} -> Y^j of a degree-n cochain
        """

        components: dict[int, Differential] = {}
        basis = self.basis(n)
        for index, value in vector.items():
            k, r, c, p = basis[index]
            block = components.setdefault(k + n, {})
            element = block.setdefault((r, c), {})
            updated = element.get(p, self.algebra.field.zero) + value
            if updated:
                element[p] = updated
            else:
                element.pop(p, None)
        return components

    def chain_map(self, n: int, vector: Vector) -> ChainMap:
        return ChainMap(shift(self.source, -n), self.target, self.components(n, vector))

    def vector_of(self, f: ChainMap) -> Vector:
        """
        Degree-0 cochain of a degreewise map X -> Y
        """

        index = self.index(0)
        vector: Vector = {}
        for k, component in f.components.items():
            for (r, c), element in component.items():
                for p, value in element.items():
                    vector[index[(k, r, c, p)]] = value
        return vector

    def is_null_homotopic(self, f: ChainMap) -> bool:
        return self.is_coboundary(0, self.vector_of(f))


def _columns(differentials: dict[int, Differential]) -> dict[tuple[int, int], list[tuple[int, Vector]]]:
    table: dict[tuple[int, int], list[tuple[int, Vector]]] = {}
    for k, d in differentials.items():
        for (r, c), element in d.items():
            table.setdefault((k, c), []).append((r, element))
    return table


def _rows(differentials: dict[int, Differential]) -> dict[tuple[int, int], list[tuple[int, Vector]]]:
    table: dict[tuple[int, int], list[tuple[int, Vector]]] = {}
    for k, d in differentials.items():
        for (r, c), element in d.items():
            table.setdefault((k, r), []).append((c, element))
    return table


def hom_dims(X: ProjComplex, Y: ProjComplex) -> HomDims:
    """
    dim Hom(X, Y[n]) for every n with a nonzero value

    Raises:
        AlgebraMismatch: If X and Y live over different algebras
    """

    return HomComplex(X, Y).dims()


def is_iso_map(f: ChainMap) -> bool:
    return is_acyclic(cone(f, check=False))


def is_iso(X: ProjComplex, Y: ProjComplex, cap: int = ISO_CAP, seed: int = 0) -> bool:
    """
    Whether X and Y are isomorphic in the homotopy category

    Minimal complexes of isomorphic objects have the same summands in every degree, which is
    checked first. Then the classes of degree-zero chain maps are searched for one with an acyclic
    cone: every basis class, then seeded random combinations.

    True is always correct. False can be wrong when the isomorphisms form a thin subset that
    neither a basis class nor a sampled combination hits; over a small prime field this is
    likelier than over the rationals. Changing ``seed`` draws other combinations.

    Raises:
        IsoSearchError: If the degree-zero Hom space is larger than ``cap``
    """

    if X.algebra is not Y.algebra:
        raise AlgebraMismatch("is_iso between complexes over different algebras")

    X, Y = minimize(X), minimize(Y)
    if X.vertex_multiset() != Y.vertex_multiset():
        return False
    if X.is_zero:
        return True

    hom = HomComplex(X, Y)
    classes = hom.cohomology_basis(0)
    if not classes:
        return False
    if len(classes) > cap:
        raise IsoSearchError(f"degree-zero Hom space has dimension {len(classes)} > {cap}")

    for vector in classes:
        if is_iso_map(hom.chain_map(0, vector)):
            return True

    if len(classes) == 1:
        return False

    field = X.algebra.field
    rng = random.Random(seed)
    for _ in range(2 * len(classes) + 4):
        combination: Vector = {}
        for vector in classes:
            scale = field.convert(rng.randint(1, 97))
            for index, value in vector.items():
                updated = combination.get(index, field.zero) + scale * value
                if updated:
                    combination[index] = updated
                else:
                    combination.pop(index, None)
        if is_iso_map(hom.chain_map(0, combination)):
            return True

    logger.debug("is_iso: no isomorphism among %d classes", len(classes))
    return False
