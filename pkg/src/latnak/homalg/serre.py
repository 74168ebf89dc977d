"""
The Serre functor of per A, its inverse and powers, and the fractional Calabi-Yau test.
"""

import logging

from latnak.algebra import BoundQuiverAlgebra
from latnak.homalg.complexes import ProjComplex, dual, shift, stalk_projective
from latnak.homalg.hom import is_iso
from latnak.homalg.modules import nakayama_functor, resolve

logger = logging.getLogger(__name__)


def serre(X: ProjComplex) -> ProjComplex:
    """
    The Serre functor ν = - ⊗^L DA on per A

    ν is applied termwise, giving a complex of injective modules, which is then resolved by
    projectives and minimized.
    """

    if X.is_zero:
        return X
    return resolve(nakayama_functor(X))


def serre_inverse(X: ProjComplex) -> ProjComplex:
    """
    ν^{-1}, computed as the Serre functor of A^op conjugated by X ↦ Hom_A(X, A)
    """

    if X.is_zero:
        return X
    return dual(serre(dual(X)))


def serre_power(X: ProjComplex, m: int) -> ProjComplex:
    """
    ν^m for any integer m
    """

    step = serre if m >= 0 else serre_inverse
    for _ in range(abs(m)):
        X = step(X)
    return X


def fractional_cy(algebra: BoundQuiverAlgebra, a: int, b: int) -> bool:
    """
    Whether ν^a(P(v)) ≅ P(v)[b] for every vertex v
    """

    for v in algebra.vertices:
        P = stalk_projective(algebra, v)
        if not is_iso(serre_power(P, a), shift(P, b)):
            logger.debug("fractional_cy(%d, %d) fails at vertex %s of %s", a, b, v, algebra.name)
            return False
    return True
