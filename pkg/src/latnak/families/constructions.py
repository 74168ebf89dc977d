"""
The canonical S-families: projectives of L(S), shifted simples of L!(p; q), the ladder families
over N(pq, q + 1) and their restrictions to Nakayama algebras N(pq - r, q + 1).
"""

import logging
from collections.abc import Sequence

from sympy.polys.domains import QQ
from sympy.polys.domains.domain import Domain

from latnak.algebra import BoundQuiverAlgebra, lattice_algebra, lattice_shriek, nakayama
from latnak.exceptions import PreconditionError
from latnak.families.family import SFamily, subfamily
from latnak.homalg import (
    ProjComplex,
    minimize,
    project_left,
    serre,
    shift,
    simple_resolution,
    stalk_projective,
    transport,
)
from latnak.lattice import CompositionPair, GridPoint, LatticeSet, young_pq, young_pqr

logger = logging.getLogger(__name__)


def trivial_family(S: LatticeSet, field: Domain = QQ) -> SFamily:
    """
    The family of indecomposable projectives (P(i,j)) over L(S)
    """

    algebra = lattice_algebra(S, field)
    members = {p: stalk_projective(algebra, p) for p in S.ordered}
    return SFamily(S, algebra, members, f"trivial family over {algebra.name}")


def duality_family(pair: CompositionPair, field: Domain = QQ) -> SFamily:
    """
    The shifted simples X_{i,j} = S(i,j)[-i-j] over L!(p; q), a full Y(p; q)-family

    Args:
        pair (CompositionPair): The compositions (p; q)
        field (Domain): Coefficient field

    Returns:
        SFamily: Family supported on Y(p; q)
    """

    algebra = lattice_shriek(pair, field)
    S = young_pq(pair)
    members = {p: shift(simple_resolution(algebra, p), -(p.i + p.j)) for p in S.ordered}
    logger.debug("duality family over %s: %d members", algebra.name, len(members))
    return SFamily(S, algebra, members, f"duality family over {algebra.name}")


def ladder_family(E: Sequence[ProjComplex], p: int, name: str = "", verify: bool = True) -> SFamily:
    """
    Stack p rows on top of an exceptional sequence by iterated left projection

    Row p is E itself and X_{i,j} = F_{⟨ν^{p-i}E⟩}(X_{i+1,j}), so that row i is
    F_{⟨ν^{p-i}E⟩} ⋯ F_{⟨νE⟩}(E).

    Args:
        E (Sequence[ProjComplex]): Exceptional sequence (E_1, ..., E_q)
        p (int): Number of rows
        name (str): Name of the resulting family
        verify (bool): Check the post-conditions of every projection

    Returns:
        SFamily: Family supported on the rectangle [1, p] x [1, q]

    Raises:
        PreconditionError: If E is empty or p < 1
    """

    if not E or p < 1:
        raise PreconditionError("ladder_family", "need a nonempty sequence and p >= 1", (len(E), p))

    algebra = E[0].algebra
    q = len(E)
    members: dict[GridPoint, ProjComplex] = {GridPoint(p, j + 1): X for j, X in enumerate(E)}

    orbit = list(E)
    for i in range(p - 1, 0, -1):
        orbit = [minimize(serre(X)) for X in orbit]
        for j in range(1, q + 1):
            members[GridPoint(i, j)] = minimize(project_left(orbit, members[GridPoint(i + 1, j)], verify))
        logger.debug("ladder row %d: %s", i, [members[GridPoint(i, j)].size for j in range(1, q + 1)])

    support = young_pq(CompositionPair((p,), (q,)))
    return SFamily(support, algebra, members, name or f"ladder family over {algebra.name}")


def _ladder_algebra(p: int, q: int, field: Domain, operation: str) -> BoundQuiverAlgebra:
    if p < 1 or q < 1 or p * q <= q + 1:
        raise PreconditionError(operation, "need pq > q + 1", (p, q))
    return nakayama(p * q, q + 1, field)


def lad_family(p: int, q: int, field: Domain = QQ, verify: bool = True) -> SFamily:
    """
    The ladder family over N(pq, q + 1) built on the shifted simples S(j)[-j], j = 1..q

    Raises:
        PreconditionError: If pq <= q + 1
    """

    algebra = _ladder_algebra(p, q, field, "lad_family")
    E = [shift(simple_resolution(algebra, j), -j) for j in range(1, q + 1)]
    return ladder_family(E, p, f"Lad({p},{q})", verify)


def lad_family_prime(p: int, q: int, field: Domain = QQ, verify: bool = True) -> SFamily:
    """
    The ladder family over N(pq, q + 1) built on S((p-1)q + j)[-j], j = 1..q

    Raises:
        PreconditionError: If pq <= q + 1
    """

    algebra = _ladder_algebra(p, q, field, "lad_family_prime")
    E = [shift(simple_resolution(algebra, (p - 1) * q + j), -j) for j in range(1, q + 1)]
    return ladder_family(E, p, f"Lad'({p},{q})", verify)


def nak_family(p: int, q: int, r: int, field: Domain = QQ, verify: bool = True) -> SFamily:
    """
    A full Y(p, q, r)-family over N(pq - r, q + 1)

    The family Lad'(p, q) is restricted to Y(p, q, r). Its minimized members then only use
    the vertices 1..pq - r and are relabeled as complexes over the smaller Nakayama algebra.

    Args:
        p (int): Number of rows
        q (int): Row width, the Loewy length minus one
        r (int): Amount removed from the last row, 0 <= r <= q - 1
        field (Domain): Coefficient field
        verify (bool): Check the post-conditions of every projection

    Returns:
        SFamily: The family over N(pq - r, q + 1)

    Raises:
        PreconditionError: If pq <= q + 1 or r is out of range
        VerificationError: If a minimized member uses a vertex above pq - r
    """

    if not 0 <= r <= q - 1:
        raise PreconditionError("nak_family", "need 0 <= r <= q - 1", (p, q, r))

    ladder = lad_family_prime(p, q, field, verify)
    restricted = subfamily(ladder, points=young_pqr(p, q, r).ordered)
    name = f"Nak({p},{q},{r})"
    if r == 0:
        return SFamily(restricted.support, restricted.algebra, restricted.members, name)

    target = nakayama(p * q - r, q + 1, field)
    members = {point: transport(minimize(X), target) for point, X in restricted.members.items()}
    logger.debug("transported %d members to %s", len(members), target.name)
    return SFamily(restricted.support, target, members, name)
