import json
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import typer

from latnak.algebra import nakayama
from latnak.cli.session import Session, guarded
from latnak.constants import EXIT_REFUTED, PAIRS_COLUMNS
from latnak.exceptions import PreconditionError
from latnak.invariants import Certificate, certify_pair
from latnak.serialize import write_pairs_csv


@dataclass(frozen=True)
class PairRow:
    """
    One pair N(n, l + 1) ~ N(n, l) with n = p(p+1)q + p(p-1)r and l = (p+1)q + pr

    Attributes:
        p (int): Number of rows, at least 2
        q (int): At least 1
        r (Fraction): Nonnegative integer, or a half integer when p = 2
        case (str): "a" for integral r, "b" for half-integral r
        n (int): Number of vertices
        l (int): The smaller Loewy length
    """

    p: int
    q: int
    r: Fraction
    case: str
    n: int
    l: int  # noqa: E741

    def values(self) -> tuple[object, ...]:
        return (self.p, self.q, str(self.r), self.case, self.n, self.l, self.l + 1)

    def to_dict(self) -> dict:
        return dict(zip(PAIRS_COLUMNS, self.values()))


def pair_row(p: int, q: int, r: Fraction) -> PairRow:
    """
    Evaluate the pair formulas at (p, q, r)

    Raises:
        PreconditionError: If r is neither a nonnegative integer nor, for p = 2, a nonnegative half integer
    """

    r = Fraction(r)
    if p < 2 or q < 1 or r < 0:
        raise PreconditionError("pair_row", "need p >= 2, q >= 1 and r >= 0", (p, q, r))
    if r.denominator == 1:
        case = "a"
    elif p == 2 and r.denominator == 2:
        case = "b"
    else:
        raise PreconditionError("pair_row", "half-integral r needs p = 2", (p, q, r))

    n = p * (p + 1) * q + p * (p - 1) * r
    l = (p + 1) * q + p * r  # noqa: E741
    return PairRow(p, q, r, case, int(n), int(l))


def enumerate_pairs(pmax: int, qmax: int, rmax: int, nmax: int) -> list[PairRow]:
    """
    Every pair with p <= pmax, q <= qmax, r <= rmax and n <= nmax

    Rows are deduplicated on (n, l), keeping the smallest (p, q, r), and sorted by (n, l).

    Raises:
        PreconditionError: If a bound is out of range
    """

    if pmax < 1 or qmax < 1 or nmax < 1 or rmax < 0:
        raise PreconditionError("pairs", "need pmax, qmax, nmax >= 1 and rmax >= 0", (pmax, qmax, rmax, nmax))

    candidates: list[PairRow] = []
    for p in range(2, pmax + 1):
        for q in range(1, qmax + 1):
            radii = [Fraction(r) for r in range(rmax + 1)]
            if p == 2:
                radii += [Fraction(k, 2) for k in range(1, 2 * rmax, 2)]
            candidates.extend(pair_row(p, q, r) for r in sorted(radii))

    seen: dict[tuple[int, int], PairRow] = {}
    for row in sorted(candidates, key=lambda x: (x.p, x.q, x.r)):
        if row.n <= nmax:
            seen.setdefault((row.n, row.l), row)
    return sorted(seen.values(), key=lambda x: (x.n, x.l))


def certify_rows(rows: list[PairRow], session: Session) -> list[Certificate]:
    field = session.field

    def certify(row: PairRow) -> Certificate:
        return certify_pair(nakayama(row.n, row.l + 1, field), nakayama(row.n, row.l, field))

    with ThreadPoolExecutor(max_workers=session.config.run.workers) as pool:
        return list(pool.map(certify, rows))


def pairs(
    ctx: typer.Context,
    pmax: int = typer.Option(3, "--pmax", help="Largest p."),
    qmax: int = typer.Option(3, "--qmax", help="Largest q."),
    rmax: int = typer.Option(2, "--rmax", help="Largest r (half integers up to it are added for p = 2)."),
    nmax: int = typer.Option(30, "--nmax", help="Largest number of vertices n."),
    certify: bool = typer.Option(False, "--certify", help="Compare Coxeter polynomials of every pair."),
) -> None:
    """
    Enumerate pairs of Nakayama algebras N(n, l + 1) and N(n, l) with equivalent perfect derived categories

    Examples:

        # Pairs with at most 30 vertices
        latnak pairs

        # Pair table as CSV, certified
        latnak --format csv pairs --nmax 20 --certify
    """

    session: Session = ctx.obj

    with guarded():
        rows = enumerate_pairs(pmax, qmax, rmax, nmax)
        certificates = certify_rows(rows, session) if certify else []
        reporter = session.reporter()

        if session.format == "csv":
            write_pairs_csv((row.values() for row in rows), sys.stdout)
        elif session.format == "json":
            payload = {
                "columns": list(PAIRS_COLUMNS),
                "rows": [row.to_dict() for row in rows],
                "certificates": [c.to_dict() for c in certificates],
            }
            reporter.emit(json.dumps(payload, indent=2))
        else:
            columns = list(PAIRS_COLUMNS) + (["certificate"] if certify else [])
            table = [
                list(row.values()) + ([certificates[index].verdict] if certify else [])
                for index, row in enumerate(rows)
            ]
            reporter.report_pairs(columns, table)
            refuted = sum(1 for c in certificates if not c.consistent)
            if certify:
                reporter.report_summary(len(certificates), 0, refuted)

    if any(not c.consistent for c in certificates):
        raise typer.Exit(EXIT_REFUTED)
