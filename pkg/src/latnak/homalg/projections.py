"""
Projection functors onto the thick subcategory generated by an exceptional sequence.

Sequences (E_1, ..., E_m) follow the direction Hom(E_a, E_b[n]) = 0 for a < b. The right
projection T_⟨E⟩ cones off evaluations E_a ⊗ Hom•(E_a, -) for a = 1..m; the left projection
F_⟨E⟩ takes cocones of coevaluations into Hom•(-, E_a)* ⊗ E_a for a = m..1. Each step keeps the
orthogonality reached by the previous ones, and every result is checked at runtime.
"""

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Literal

from latnak.algebra import BoundQuiverAlgebra
from latnak.exceptions import PreconditionError, VerificationError
from latnak.homalg.complexes import (
    ChainMap,
    Differential,
    ProjComplex,
    cocone,
    cone,
    direct_sum,
    is_acyclic,
    minimize,
    restrict_summands,
    shift,
    zero_complex,
)
from latnak.homalg.hom import HomComplex, hom_dims, is_iso
from latnak.homalg.serre import serre, serre_inverse

logger = logging.getLogger(__name__)

Side = Literal["right", "left"]


@dataclass(eq=False)
class Projection:
    """
    Result of projecting onto ⟨E⟩

    Attributes:
        part (ProjComplex): The projection, an object of ⟨E⟩ (minimized)
        complement (ProjComplex): Third term of the defining triangle, orthogonal to E
    """

    part: ProjComplex
    complement: ProjComplex


def _offsets(blocks: Sequence[ProjComplex]) -> list[dict[int, int]]:
    running: dict[int, int] = {}
    result = []
    for block in blocks:
        result.append(dict(running))
        for k, vertices in block.terms.items():
            running[k] = running.get(k, 0) + len(vertices)
    return result


def evaluation(E: ProjComplex, Y: ProjComplex) -> ChainMap | None:
    """
    ⊕_n E[-n]^{d_n} -> Y built from a basis of every H^n Hom•(E, Y), None when Hom vanishes
    """

    hom = HomComplex(E, Y)
    blocks: list[ProjComplex] = []
    parts: list[dict[int, Differential]] = []
    for n in hom.degrees:
        for vector in hom.cohomology_basis(n):
            blocks.append(shift(E, -n))
            parts.append(hom.components(n, vector))

    if not blocks:
        return None

    components: dict[int, Differential] = {}
    for offsets, part in zip(_offsets(blocks), parts):
        for j, block in part.items():
            target = components.setdefault(j, {})
            for (r, c), element in block.items():
                target[(r, c + offsets.get(j, 0))] = element

    return ChainMap(direct_sum(blocks), Y, components)


def coevaluation(Z: ProjComplex, E: ProjComplex) -> ChainMap | None:
    """
    Z -> ⊕_n E[n]^{d_n} built from a basis of every H^n Hom•(Z, E), None when Hom vanishes
    """

    hom = HomComplex(Z, E)
    blocks: list[ProjComplex] = []
    parts: list[dict[int, Differential]] = []
    for n in hom.degrees:
        for vector in hom.cohomology_basis(n):
            blocks.append(shift(E, n))
            # a cocycle lists components Z^k -> E^{k+n} under the key k + n
            parts.append({j - n: block for j, block in hom.components(n, vector).items()})

    if not blocks:
        return None

    components: dict[int, Differential] = {}
    for offsets, part in zip(_offsets(blocks), parts):
        for k, block in part.items():
            target = components.setdefault(k, {})
            for (r, c), element in block.items():
                target[(r + offsets.get(k, 0), c)] = element

    return ChainMap(Z, direct_sum(blocks), components)


def _require_same_algebra(E: Sequence[ProjComplex], X: ProjComplex) -> BoundQuiverAlgebra:
    for member in E:
        if member.algebra is not X.algebra:
            raise PreconditionError("projection", "sequence and object live over different algebras")
    return X.algebra


def check_projection(E: Sequence[ProjComplex], projection: Projection, side: Side) -> None:
    """
    Post-conditions of a projection: the part lies in ⟨E⟩ and the third term is orthogonal to E

    Args:
        E (Sequence[ProjComplex]): The exceptional sequence
        projection (Projection): Result of a right or left projection
        side (Side): "right" when the complement must satisfy Hom(E_a, C[n]) = 0, "left" for
            Hom(K, E_a[n]) = 0

    Raises:
        VerificationError: If either condition fails
    """

    for index, member in enumerate(E):
        dims = hom_dims(member, projection.complement) if side == "right" else hom_dims(projection.complement, member)
        if dims:
            term = "complement" if side == "right" else "kernel"
            raise VerificationError(f"{side} projection: {term} not orthogonal to member {index + 1}")

    if not is_in_thick(E, projection.part):
        raise VerificationError(f"{side} projection: result is not in the thick subcategory of the sequence")


def right_projection(E: Sequence[ProjComplex], X: ProjComplex, verify: bool = True) -> Projection:
    """
    The triangle T_⟨E⟩(X) -> X -> C -> with T in ⟨E⟩ and Hom(E_a, C[n]) = 0 for all a, n

    X is a subcomplex of every iterated cone, sitting in the leading summands; T is the quotient
    by X shifted by -1.

    Raises:
        VerificationError: If the complement is not right orthogonal to the sequence or T is not in ⟨E⟩
    """

    algebra = _require_same_algebra(E, X)
    if not E:
        return Projection(zero_complex(algebra), X)

    Y = X
    for member in E:
        f = evaluation(member, Y)
        if f is not None:
            Y = cone(f, check=False)

    keep = {k: list(range(len(X.summands(k)), len(vertices))) for k, vertices in Y.terms.items()}
    part = minimize(shift(restrict_summands(Y, keep), -1))

    projection = Projection(part, Y)
    if verify:
        check_projection(E, projection, "right")

    logger.debug("right projection onto %d objects: %d summands", len(E), part.size)
    return projection


def left_projection(E: Sequence[ProjComplex], X: ProjComplex, verify: bool = True) -> Projection:
    """
    The triangle K -> X -> F_⟨E⟩(X) -> with F in ⟨E⟩ and Hom(K, E_a[n]) = 0 for all a, n

    X is the trailing block of every iterated cocone; the leading blocks form a subcomplex whose
    shift by 1 is F.

    Raises:
        VerificationError: If the kernel term is not left orthogonal to the sequence or F is not in ⟨E⟩
    """

    algebra = _require_same_algebra(E, X)
    if not E:
        return Projection(zero_complex(algebra), X)

    Z = X
    for member in reversed(E):
        g = coevaluation(Z, member)
        if g is not None:
            Z = cocone(g, check=False)

    keep = {k: list(range(len(vertices) - len(X.summands(k)))) for k, vertices in Z.terms.items()}
    part = minimize(shift(restrict_summands(Z, keep), 1))

    projection = Projection(part, Z)
    if verify:
        check_projection(E, projection, "left")

    logger.debug("left projection onto %d objects: %d summands", len(E), part.size)
    return projection


def project_right(E: Sequence[ProjComplex], X: ProjComplex, verify: bool = True) -> ProjComplex:
    """
    T_⟨E⟩(X), the right adjoint of the inclusion of ⟨E⟩
    """

    return right_projection(E, X, verify).part


def project_left(E: Sequence[ProjComplex], X: ProjComplex, verify: bool = True) -> ProjComplex:
    """
    F_⟨E⟩(X), the left adjoint of the inclusion of ⟨E⟩
    """

    return left_projection(E, X, verify).part


def is_in_thick(E: Sequence[ProjComplex], X: ProjComplex) -> bool:
    """
    Whether X lies in ⟨E⟩, i.e. the complement of its right projection is acyclic
    """

    if X.is_zero:
        return True
    if not E:
        return is_acyclic(X)
    return is_acyclic(right_projection(E, X, verify=False).complement)


def sub_serre(E: Sequence[ProjComplex], X: ProjComplex, verify: bool = True) -> ProjComplex:
    """
    The Serre functor of ⟨E⟩, S_E = T_E ∘ S on ⟨E⟩

    Raises:
        PreconditionError: If X is not in ⟨E⟩
    """

    if verify and not is_in_thick(E, X):
        raise PreconditionError("sub_serre", "object is not in the thick subcategory of the sequence")
    return project_right(E, serre(X), verify)


def sub_serre_inverse(E: Sequence[ProjComplex], X: ProjComplex, verify: bool = True) -> ProjComplex:
    """
    The inverse Serre functor of ⟨E⟩, S_E^{-1} = F_E ∘ S^{-1} on ⟨E⟩

    Raises:
        PreconditionError: If X is not in ⟨E⟩
    """

    if verify and not is_in_thick(E, X):
        raise PreconditionError("sub_serre_inverse", "object is not in the thick subcategory of the sequence")
    return project_left(E, serre_inverse(X), verify)


def sub_serre_power(E: Sequence[ProjComplex], X: ProjComplex, m: int, verify: bool = True) -> ProjComplex:
    step = sub_serre if m >= 0 else sub_serre_inverse
    for _ in range(abs(m)):
        X = step(E, X, verify)
    return X


def check_exceptional_sequence(E: Sequence[ProjComplex]) -> tuple[bool, str]:
    """
    Whether every member is exceptional and Hom(E_a, E_b[n]) = 0 for a < b

    Returns:
        tuple[bool, str]: Verdict and a description of the first failure
    """

    for index, member in enumerate(E):
        dims = hom_dims(member, member)
        if dims != {0: 1}:
            return False, f"member {index + 1} is not exceptional: {dims}"

    for a in range(len(E)):
        for b in range(a + 1, len(E)):
            dims = hom_dims(E[a], E[b])
            if dims:
                return False, f"Hom(E_{a + 1}, E_{b + 1}[n]) = {dims}"

    return True, ""


def exceptional_decompose(E: ProjComplex, X: ProjComplex, verify: bool = True) -> list[tuple[int, int]]:
    """
    Write X in ⟨E⟩ as ⊕ E[n]^{d_n} with d_n = dim Hom(E, X[-n])

    Returns:
        list[tuple[int, int]]: Pairs (n, d_n) with d_n > 0, ascending in n

    Raises:
        PreconditionError: If X is not in ⟨E⟩
        VerificationError: If the rebuilt sum is not isomorphic to X
    """

    if verify and not is_in_thick([E], X):
        raise PreconditionError("exceptional_decompose", "object is not in the thick subcategory of E")

    dims = hom_dims(E, X)
    pieces = sorted((-m, d) for m, d in dims.items())

    if verify:
        rebuilt = direct_sum([shift(E, n) for n, d in pieces for _ in range(d)], X.algebra)
        if not is_iso(rebuilt, X):
            raise VerificationError("exceptional decomposition does not rebuild the object")

    return pieces
