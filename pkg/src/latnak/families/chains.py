"""
Chains of lattice steps connecting the index sets of Nakayama algebras, with the gate verdict of
every step, and their application to families.
"""

import logging
from collections.abc import Iterable
from dataclasses import dataclass, field

from latnak.algebra import cartan_lattice
from latnak.exceptions import PreconditionError
from latnak.families.family import SFamily
from latnak.families.mutations import mutate
from latnak.invariants import Certificate, certify_matrices
from latnak.lattice import (
    GateVerdict,
    LatticeSet,
    LatticeStep,
    apply_step,
    equivalent,
    sigma,
    step_gate,
    transpose,
    young_pqr,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ChainLink:
    """
    One step of a chain

    Attributes:
        step (LatticeStep): The permutation applied
        verdict (GateVerdict): Precondition of the step on the set before it
        support (LatticeSet): The set after the step
        stage (str): Name of the stage the step belongs to
    """

    step: LatticeStep
    verdict: GateVerdict
    support: LatticeSet
    stage: str = ""

    def to_dict(self) -> dict:
        return {
            "step": self.step.to_dict(),
            "verdict": self.verdict.to_dict(),
            "support": self.support.to_dict(),
            "stage": self.stage,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ChainLink":
        verdict = data["verdict"]
        return cls(
            LatticeStep.from_dict(data["step"]),
            GateVerdict(
                bool(verdict["passed"]),
                verdict.get("condition"),
                verdict.get("detail", ""),
                bool(verdict.get("empty_rows", False)),
            ),
            LatticeSet.from_dict(data["support"]),
            data.get("stage", ""),
        )


@dataclass
class LatticeChain:
    """
    A sequence of lattice steps from a start set, with the set it is expected to reach

    Attributes:
        name (str): Printable name of the chain
        start (LatticeSet): Initial index set
        links (list[ChainLink]): Steps in application order
        target (LatticeSet | None): Expected end set up to translation
    """

    name: str
    start: LatticeSet
    links: list[ChainLink] = field(default_factory=list)
    target: LatticeSet | None = None

    @property
    def end(self) -> LatticeSet:
        return self.links[-1].support if self.links else self.start

    @property
    def steps(self) -> list[LatticeStep]:
        return [link.step for link in self.links]

    @property
    def supports(self) -> list[LatticeSet]:
        return [self.start] + [link.support for link in self.links]

    @property
    def gates_passed(self) -> bool:
        return all(link.verdict.passed for link in self.links)

    @property
    def matches(self) -> bool:
        return self.target is None or equivalent(self.end, self.target)

    @property
    def passed(self) -> bool:
        return self.gates_passed and self.matches

    def first_failure(self) -> ChainLink | None:
        for link in self.links:
            if not link.verdict.passed:
                return link
        return None

    def push(self, step: LatticeStep, stage: str = "", times: int = 1) -> None:
        for _ in range(times):
            verdict = step_gate(self.end, step)
            self.links.append(ChainLink(step, verdict, apply_step(self.end, step), stage))

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "start": self.start.to_dict(),
            "links": [link.to_dict() for link in self.links],
            "target": self.target.to_dict() if self.target is not None else None,
            "gates_passed": self.gates_passed,
            "matches": self.matches,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "LatticeChain":
        target = data.get("target")
        return cls(
            data["name"],
            LatticeSet.from_dict(data["start"]),
            [ChainLink.from_dict(link) for link in data.get("links", [])],
            LatticeSet.from_dict(target) if target is not None else None,
        )


def _align_rows(chain: LatticeChain, stage: str) -> None:
    # Left-justify every row against a pivot row: below the pivot with sigma_{>=r},
    # above it with sigma^{-1}_{<=r}. Each step moves all rows on its side.
    S = chain.end
    rows = S.rows()
    widths = {i: len(S.row(i)) for i in rows}
    pivot = next((r for r, prev in zip(rows[1:], rows) if widths[r] < widths[prev]), rows[-1])

    def left(r: int) -> int:
        return chain.end.row(r)[0]

    for r in (r for r in rows if r > pivot):
        offset = left(r) - left(r - 1)
        step = LatticeStep("row", "ge", r)
        chain.push(step if offset > 0 else step.inverted(), stage, abs(offset))

    for r in (r for r in reversed(rows) if r < pivot):
        offset = left(r + 1) - left(r)
        step = LatticeStep("row", "le", r, inverse=True)
        chain.push(step if offset > 0 else step.inverted(), stage, abs(offset))


def main1_transform(s: int, t: int, u: int) -> LatticeChain:
    """
    The chain of permutations relating Y(s, t, u) to the transpose of Y(s, t - 1, u - s)

    Three stages: sigma_{<=1} ... sigma_{<=s-1} turns the rows into a staircase, the transposed
    blocks (or single rho^{-1}_{>=m} steps when s = 2) rearrange the columns, and a final row
    alignment produces a left-justified diagram.

    Args:
        s (int): Number of rows, at least 2
        t (int): Row width
        u (int): Amount removed from the last row, s <= u <= t

    Returns:
        LatticeChain: The chain with a gate verdict for every step

    Raises:
        PreconditionError: If neither u ∈ sZ with t - u ∈ (s+1)Z, nor s = 2 with t - u ∈ 3Z,
            or if u < s
    """

    case_a = u % s == 0 and (t - u) % (s + 1) == 0
    case_b = s == 2 and (t - u) % 3 == 0
    if s < 2 or not (case_a or case_b):
        raise PreconditionError("main1_transform", "need u ∈ sZ and t - u ∈ (s+1)Z, or s = 2 and t - u ∈ 3Z", (s, t, u))
    if not s <= u <= t:
        raise PreconditionError("main1_transform", "need s <= u <= t for Y(s, t - 1, u - s)", (s, t, u))

    chain = LatticeChain(f"main1({s},{t},{u})", young_pqr(s, t, u), target=transpose(young_pqr(s, t - 1, u - s)))

    for k in range(s - 1, 0, -1):
        chain.push(LatticeStep("row", "le", k), "staircase")

    if case_a:
        if u > s:
            chain.push(LatticeStep("col", "ge", t - s + 1, inverse=True, length=u - s, width=s - 1), "columns")
    else:
        for m in range(t - u + 2, t - s + 2):
            chain.push(LatticeStep("col", "ge", m, inverse=True), "columns")
    if t > u:
        chain.push(LatticeStep("col", "le", 1, length=t - u, width=s), "columns")

    _align_rows(chain, "alignment")
    logger.info("%s: gates %s, end matches %s", chain.name, chain.gates_passed, chain.matches)
    return chain


def main3_transform(p: int, q: int) -> LatticeChain:
    """
    sigma_{<=p}^q followed by rho_{<=0}^{-p}, taking Y(p+1, q, q-1) to the transpose of Y(q+1, p, p-1)

    Raises:
        PreconditionError: If p < 2 or q < 2
    """

    if p < 2 or q < 2:
        raise PreconditionError("main3_transform", "need p, q >= 2", (p, q))

    chain = LatticeChain(f"main3({p},{q})", young_pqr(p + 1, q, q - 1), target=transpose(young_pqr(q + 1, p, p - 1)))
    chain.push(LatticeStep("row", "le", p), "I", q)
    chain.push(LatticeStep("col", "le", 0, inverse=True), "ᵗI", p)
    logger.info("%s: gates %s, end matches %s", chain.name, chain.gates_passed, chain.matches)
    return chain


def chain_certificates(chain: LatticeChain) -> list[Certificate]:
    """
    Certificates between consecutive supports of a chain, then between its start and end
    """

    supports = chain.supports
    certificates = [
        certify_matrices(cartan_lattice(a), cartan_lattice(b), f"L(S{n})", f"L(S{n + 1})")
        for n, (a, b) in enumerate(zip(supports, supports[1:]))
    ]
    certificates.append(
        certify_matrices(cartan_lattice(chain.start), cartan_lattice(chain.end), "L(start)", "L(end)")
    )
    return certificates


def apply_chain(
    fam: SFamily, chain: LatticeChain | Iterable[LatticeStep], verify: bool = True, check: bool = True
) -> SFamily:
    """
    Mutate a family along every step of a chain

    Args:
        fam (SFamily): Family supported on the start of the chain
        chain (LatticeChain | Iterable[LatticeStep]): Steps to apply in order
        verify (bool): Check the post-conditions of every projection
        check (bool): Run the S-family axioms after every step

    Returns:
        SFamily: The family supported on the end of the chain
    """

    steps = chain.steps if isinstance(chain, LatticeChain) else list(chain)
    for step in steps:
        fam = mutate(fam, step, verify, check)
    return fam


def nonexample_a4_d4() -> tuple[LatticeSet, LatticeSet]:
    """
    A set with a nonempty row below 0 whose image under sigma_{<=0} changes the derived class

    The Coxeter polynomials of L(S) and L(sigma_{<=0}(S)) differ, so Mutation I needs S_{<=-1} empty.
    """

    S = LatticeSet.of([(-1, 2), (0, 1), (0, 2), (1, 2)])
    return S, sigma(S, 0)
