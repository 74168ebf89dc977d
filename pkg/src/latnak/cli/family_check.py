import json
import logging
from pathlib import Path

import typer

from latnak.cli.session import Session, guarded
from latnak.constants import EXIT_AXIOM_FAILURE
from latnak.families import (
    FamilyHoms,
    check_end_lattice,
    check_family,
    check_prime_conditions,
    check_triangle_lemma,
    check_Y,
)
from latnak.serialize import family_from_dict, read_json

logger = logging.getLogger(__name__)


def family_check(
    ctx: typer.Context,
    input_path: Path = typer.Option(..., "--input", "-i", help="Family JSON written by 'latnak emit family'."),
    young: bool = typer.Option(False, "--young", help="Also check the Young axioms Y1-Y4."),
    prime_conditions: bool = typer.Option(False, "--prime-conditions", help="Also check S1' and S2'."),
    end: bool = typer.Option(False, "--end", help="Also check that the endomorphism algebra is L(S)."),
    triangle: bool = typer.Option(False, "--triangle", help="Also check the square triangles."),
) -> None:
    """
    Re-check the axioms of a serialized family

    Exit code 0 when every selected axiom holds, 2 when one fails and 4 when the file is malformed.

    Examples:

        # S-family axioms only
        latnak family-check --input family.json

        # Young axioms and the endomorphism algebra as well
        latnak family-check -i family.json --young --end
    """

    session: Session = ctx.obj

    with guarded():
        fam = family_from_dict(read_json(input_path))
        logger.info("checking %s with %d members", fam.name or input_path.name, len(fam))

        homs = FamilyHoms(fam, session.verify, session.config.limits.iso_cap, session.config.run.seed)
        reports = [check_family(fam, homs)]
        if young:
            reports.append(check_Y(fam, homs))
        if prime_conditions:
            reports.append(check_prime_conditions(fam, homs))
        if end:
            reports.append(check_end_lattice(fam, homs))
        if triangle:
            reports.append(check_triangle_lemma(fam, homs))

        reporter = session.reporter()
        if session.format == "json":
            reporter.emit(json.dumps([r.to_dict() for r in reports], indent=2, ensure_ascii=False))
        else:
            for report in reports:
                reporter.report(report)
            failures = sum(len(r.failures()) for r in reports)
            reporter.report_summary(sum(len(r.results) for r in reports), failures)

    if not all(r.passed for r in reports):
        raise typer.Exit(EXIT_AXIOM_FAILURE)
