"""
Mutations of S-families along the half-plane permutations of their supports.
"""

import logging

from latnak.exceptions import PreconditionError, VerificationError
from latnak.families.axioms import check_family
from latnak.families.family import SFamily
from latnak.homalg import ProjComplex, minimize, shift, sub_serre_power
from latnak.lattice import GridPoint, LatticeStep, Side, apply_step, step_gate, step_plan

logger = logging.getLogger(__name__)


def mutate(fam: SFamily, step: LatticeStep, verify: bool = True, check: bool = True) -> SFamily:
    """
    Apply one mutation step to a family

    Each member moves to its image under the step; members on moving lines are replaced by a
    power of the Serre functor of their line (row for sigma, column for rho) in the old family,
    and members outside a Mutation II block are shifted.

    Args:
        fam (SFamily): Family to mutate
        step (LatticeStep): The permutation applied to the support
        verify (bool): Check the post-conditions of every projection
        check (bool): Run the S-family axioms on the result

    Returns:
        SFamily: The mutated family over the same algebra

    Raises:
        PreconditionError: If the support fails the gate of the step
        VerificationError: If ``check`` is set and the result is not an S-family
    """

    verdict = step_gate(fam.support, step)
    if not verdict.passed:
        raise PreconditionError(f"mutation {step.label}", verdict.detail, verdict.condition)

    members: dict[GridPoint, ProjComplex] = {}
    for move in step_plan(fam.support, step):
        X = fam.members[move.source]
        if move.power:
            line = fam.row(move.source.i) if step.axis == "row" else fam.col(move.source.j)
            X = minimize(sub_serre_power(line, X, move.power, verify))
        if move.shift:
            X = shift(X, move.shift)
        members[move.target] = X

    result = SFamily(apply_step(fam.support, step), fam.algebra, members, f"{step.label} {fam.name}")
    logger.debug("mutated %s by %s", fam.name, step.label)

    if check:
        report = check_family(result)
        if not report.passed:
            failure = report.failures()[0] if report.failures() else report.results[-1]
            raise VerificationError(f"{result.name} is not an S-family: {failure}")

    return result


def mutate_I(fam: SFamily, k: int, side: Side = "le", verify: bool = True, check: bool = True) -> SFamily:
    """
    Mutation I: X'_{i,j} = S_{⟨X_i⟩}(X_{i,j+1}) on the rows i <= k, support sigma_{<=k}(S)
    """

    return mutate(fam, LatticeStep("row", side, k), verify, check)


def mutate_I_inv(fam: SFamily, k: int, side: Side = "le", verify: bool = True, check: bool = True) -> SFamily:
    """
    Inverse of Mutation I: Y'_{i,j} = S^{-1}_{⟨Y_i⟩}(Y_{i,j-1}) on the rows i <= k
    """

    return mutate(fam, LatticeStep("row", side, k, inverse=True), verify, check)


def mutate_II(
    fam: SFamily,
    k: int,
    h: int,
    origin: int = 0,
    inverse: bool = False,
    verify: bool = True,
    check: bool = True,
) -> SFamily:
    """
    Mutation II on a block of k rows of width h starting at ``origin``

    Rows origin + i of the block receive S^{k-i} of their row, rows above the block are
    shifted by s = (h - 1) k / (h + 1).
    """

    return mutate(fam, LatticeStep("row", "le", origin, inverse, length=k, width=h), verify, check)


def mutate_I_t(
    fam: SFamily, k: int, inverse: bool = False, side: Side = "le", verify: bool = True, check: bool = True
) -> SFamily:
    """
    Transposed Mutation I along columns, support rho_{<=k}(S)
    """

    return mutate(fam, LatticeStep("col", side, k, inverse), verify, check)


def mutate_II_t(
    fam: SFamily,
    k: int,
    h: int,
    origin: int = 0,
    inverse: bool = False,
    verify: bool = True,
    check: bool = True,
) -> SFamily:
    """
    Transposed Mutation II on a block of k columns of height h starting at ``origin``
    """

    return mutate(fam, LatticeStep("col", "le", origin, inverse, length=k, width=h), verify, check)
