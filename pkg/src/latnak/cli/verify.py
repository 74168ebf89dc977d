import csv
import json
import logging
import sys
from dataclasses import dataclass, field
from pathlib import Path

import typer

from latnak.algebra import cartan_lattice, lattice_algebra, nakayama
from latnak.cli.session import Session, guarded, resolve_lattice, resolve_pair
from latnak.constants import EXIT_AXIOM_FAILURE, EXIT_OK, EXIT_REFUTED
from latnak.exceptions import PreconditionError
from latnak.families import (
    AxiomReport,
    AxiomResult,
    FamilyHoms,
    LatticeChain,
    SFamily,
    apply_chain,
    chain_certificates,
    check_end_lattice,
    check_family,
    check_Y,
    duality_family,
    is_full,
    main1_transform,
    main3_transform,
    mutate,
    nak_family,
    trivial_family,
)
from latnak.homalg import is_iso
from latnak.invariants import Certificate, certify_matrices, certify_pair
from latnak.lattice import LatticeSet, LatticeStep, step_gate, young_pqr

logger = logging.getLogger(__name__)

VERIFY_KINDS = ("duality", "nak", "main1", "main3", "mutation")

MUTATION_KINDS = ("I", "tI", "II", "tII")


@dataclass
class Outcome:
    """
    Everything one verification run produced

    Attributes:
        kind (str): Verification kind
        params (dict): Parameters of the instance
        reports (list[AxiomReport]): Axiom reports of the constructed families
        certificates (list[Certificate]): Derived-invariant certificates
        chains (list[LatticeChain]): Lattice chains with their gate verdicts
        notes (list[str]): Skipped stages and similar remarks
    """

    kind: str
    params: dict
    reports: list[AxiomReport] = field(default_factory=list)
    certificates: list[Certificate] = field(default_factory=list)
    chains: list[LatticeChain] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def exit_code(self) -> int:
        if any(not r.passed for r in self.reports) or any(not c.passed for c in self.chains):
            return EXIT_AXIOM_FAILURE
        if any(not c.consistent for c in self.certificates):
            return EXIT_REFUTED
        return EXIT_OK

    @property
    def passed(self) -> bool:
        return self.exit_code == EXIT_OK

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "params": self.params,
            "passed": self.passed,
            "exit_code": self.exit_code,
            "reports": [r.to_dict() for r in self.reports],
            "certificates": [c.to_dict() for c in self.certificates],
            "chains": [c.to_dict() for c in self.chains],
            "notes": self.notes,
        }


def _family_reports(fam: SFamily, session: Session, young: bool = False) -> list[AxiomReport]:
    homs = FamilyHoms(fam, session.verify, session.config.limits.iso_cap, session.config.run.seed)
    reports = [check_family(fam, homs)]
    if young:
        reports.append(check_Y(fam, homs))
    reports.append(check_end_lattice(fam, homs))
    return reports


def verify_duality(session: Session, s: int | None, t: int | None, u: int | None, pair: str | None) -> Outcome:
    composition = resolve_pair(s, t, u, pair)
    outcome = Outcome("duality", {"pair": str(composition)})

    fam = duality_family(composition, session.field)
    target = lattice_algebra(fam.support, session.field)
    outcome.certificates.append(certify_pair(fam.algebra, target))

    if session.within_caps(fam.algebra):
        outcome.reports.extend(_family_reports(fam, session, young=True))
    else:
        outcome.notes.append(f"{fam.algebra.name} exceeds max_dim, only the certificate ran")
    return outcome


def verify_nak(session: Session, p: int | None, q: int | None, r: int | None) -> Outcome:
    if p is None or q is None:
        raise PreconditionError("verify nak", "needs --p and --q")
    r = r or 0
    outcome = Outcome("nak", {"p": p, "q": q, "r": r})

    small = nakayama(p * q - r, q + 1, session.field)
    outcome.certificates.append(certify_pair(small, lattice_algebra(young_pqr(p, q, r), session.field)))

    ambient = nakayama(p * q, q + 1, session.field)
    if not session.within_caps(ambient):
        outcome.notes.append(f"{ambient.name} exceeds max_dim, only the certificate ran")
        return outcome

    fam = nak_family(p, q, r, session.field, session.verify)
    reports = _family_reports(fam, session)
    full = is_full(fam)
    reports.append(
        AxiomReport(fam.name, [AxiomResult("full", full, 1, None if full else "a projective is not generated")])
    )
    outcome.reports.extend(reports)
    return outcome


def _verify_chain(session: Session, outcome: Outcome, chain: LatticeChain) -> None:
    outcome.chains.append(chain)
    outcome.certificates.extend(chain_certificates(chain))

    if not chain.gates_passed:
        outcome.notes.append("a gate failed, the family stage was not run")
        return

    fam = trivial_family(chain.start, session.field)
    if not session.within_caps(fam.algebra):
        outcome.notes.append(f"{fam.algebra.name} exceeds max_dim, only lattice chains and certificates ran")
        return

    mutated = apply_chain(fam, chain, session.verify, check=False)
    outcome.reports.extend(_family_reports(mutated, session))


def verify_main1(session: Session, s: int | None, t: int | None, u: int | None) -> Outcome:
    if s is None or t is None or u is None:
        raise PreconditionError("verify main1", "needs --s, --t and --u")
    outcome = Outcome("main1", {"s": s, "t": t, "u": u})

    chain = main1_transform(s, t, u)
    outcome.certificates.append(
        certify_pair(
            lattice_algebra(young_pqr(s, t, u), session.field),
            lattice_algebra(young_pqr(s, t - 1, u - s), session.field),
        )
    )
    _verify_chain(session, outcome, chain)
    return outcome


def verify_main3(session: Session, p: int | None, q: int | None) -> Outcome:
    if p is None or q is None:
        raise PreconditionError("verify main3", "needs --p and --q")
    outcome = Outcome("main3", {"p": p, "q": q})

    chain = main3_transform(p, q)
    n = p * q + 1
    outcome.certificates.append(certify_pair(nakayama(n, q + 1, session.field), nakayama(n, p + 1, session.field)))
    _verify_chain(session, outcome, chain)
    return outcome


def mutation_step(kind: str, k: int, h: int | None, origin: int, inverse: bool) -> LatticeStep:
    """
    The lattice step of a named mutation

    Raises:
        PreconditionError: If the kind is unknown or a block mutation has no --h
    """

    if kind not in MUTATION_KINDS:
        raise PreconditionError("verify mutation", f"unknown kind '{kind}'", " | ".join(MUTATION_KINDS))

    axis = "col" if kind.startswith("t") else "row"
    if kind.endswith("II"):
        if h is None:
            raise PreconditionError("verify mutation", f"Mutation {kind} needs --h")
        return LatticeStep(axis, "le", origin, inverse, length=k, width=h)
    return LatticeStep(axis, "le", k, inverse)


def verify_mutation(session: Session, S: LatticeSet, step: LatticeStep) -> Outcome:
    outcome = Outcome("mutation", {"support": S.to_dict()["points"], "step": step.to_dict()})

    fam = trivial_family(S, session.field)
    mutated = mutate(fam, step, session.verify, check=False)
    outcome.certificates.append(
        certify_matrices(cartan_lattice(fam.support), cartan_lattice(mutated.support), "L(S)", f"L({step.label}S)")
    )
    outcome.reports.extend(_family_reports(mutated, session))

    back_step = step.inverted()
    if not step_gate(mutated.support, back_step):
        outcome.notes.append(f"{back_step.label} is not defined on the mutated support")
        return outcome

    back = mutate(mutated, back_step, session.verify, check=False)
    mismatch = next((p for p in fam.points if p not in back or not is_iso(back[p], fam[p])), None)
    witness = None if mismatch is None else f"X{mismatch} differs"
    outcome.reports.append(AxiomReport(mutated.name, [AxiomResult("inverse", mismatch is None, len(fam), witness)]))
    return outcome


def _write_csv(outcome: Outcome) -> None:
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(("subject", "axiom", "status", "checked", "witness"))
    for report in outcome.reports:
        for result in report.results:
            status = "skipped" if result.skipped else ("pass" if result.passed else "fail")
            writer.writerow((report.subject, result.axiom, status, result.checked, result.witness or ""))
    for certificate in outcome.certificates:
        writer.writerow((f"{certificate.left} ~ {certificate.right}", "certificate", certificate.verdict, 1, ""))


def verify(
    ctx: typer.Context,
    kind: str = typer.Argument(..., help="duality, nak, main1, main3 or mutation."),
    p: int | None = typer.Option(None, "--p", help="p of nak and main3."),
    q: int | None = typer.Option(None, "--q", help="q of nak and main3."),
    r: int | None = typer.Option(None, "--r", help="r of nak (default 0)."),
    s: int | None = typer.Option(None, "--s", help="s of main1 and of the duality pair."),
    t: int | None = typer.Option(None, "--t", help="t of main1 and of the duality pair."),
    u: int | None = typer.Option(None, "--u", help="u of main1 and of the duality pair."),
    pair: str | None = typer.Option(None, "--pair", help="Composition pair 'p1,p2;q1,q2'."),
    mutation: str = typer.Option("I", "--kind", help="Mutation kind: I, tI, II or tII."),
    k: int = typer.Option(0, "--k", help="Threshold of Mutation I, block length of Mutation II."),
    h: int | None = typer.Option(None, "--h", help="Row width inside a Mutation II block."),
    origin: int = typer.Option(0, "--origin", help="First row of a Mutation II block."),
    inverse: bool = typer.Option(False, "--inverse", help="Apply the inverse mutation."),
    young: str | None = typer.Option(None, "--young", help="Support Y(s,t,u) given as 's,t,u'."),
    lattice_file: Path | None = typer.Option(None, "--lattice-file", help="Support read from a lattice JSON file."),
    output: Path | None = typer.Option(None, "--output", "-o", help="Also write the JSON report to this file."),
) -> None:
    """
    Construct families, check their axioms and compare derived invariants

    Exit code 0 when everything passes, 2 on an axiom or gate failure, 3 on a refuted certificate and 4 on bad input.

    Examples:

        # Shifted simples of L!(3;4) minus a corner
        latnak verify duality --s 3 --t 4 --u 1

        # Nakayama family Y(2,4,1) over N(7,5)
        latnak verify nak --p 2 --q 4 --r 1

        # Mutation I below row 2 of Y(3,2,1) and back
        latnak verify mutation --kind I --k 2 --young 3,2,1
    """

    session: Session = ctx.obj

    with guarded():
        match kind:
            case "duality":
                outcome = verify_duality(session, s, t, u, pair)
            case "nak":
                outcome = verify_nak(session, p, q, r)
            case "main1":
                outcome = verify_main1(session, s, t, u)
            case "main3":
                outcome = verify_main3(session, p, q)
            case "mutation":
                support = resolve_lattice(young, pair, lattice_file)
                step = mutation_step(mutation, k, h, origin, inverse)
                outcome = verify_mutation(session, support, step)
            case _:
                raise PreconditionError("verify", f"unknown kind '{kind}'", " | ".join(VERIFY_KINDS))

        logger.info("verify %s %s: exit code %d", kind, outcome.params, outcome.exit_code)

        if output is not None:
            output.write_text(json.dumps(outcome.to_dict(), indent=2), encoding="utf-8")

        reporter = session.reporter()
        if session.format == "json":
            reporter.emit(json.dumps(outcome.to_dict(), indent=2))
        elif session.format == "csv":
            _write_csv(outcome)
        else:
            for chain in outcome.chains:
                reporter.report_chain(chain)
            for report in outcome.reports:
                reporter.report(report)
            for certificate in outcome.certificates:
                reporter.report_certificate(certificate)
            for note in outcome.notes:
                reporter.warning(note)
            failures = sum(1 for r in outcome.reports if not r.passed) + sum(1 for c in outcome.chains if not c.passed)
            refuted = sum(1 for c in outcome.certificates if not c.consistent)
            reporter.report_summary(len(outcome.reports) + len(outcome.chains) + len(outcome.certificates), failures, refuted)

    if outcome.exit_code != EXIT_OK:
        raise typer.Exit(outcome.exit_code)
