import sys
from collections.abc import Sequence
from typing import TextIO

from rich.console import Console
from rich.table import Table
from rich.theme import Theme

from latnak.config import OutputConfig
from latnak.families import AxiomReport, AxiomResult, LatticeChain
from latnak.invariants import Certificate

LATNAK_THEME = Theme(
    {
        "error": "bold red",
        "warning": "bold yellow",
        "info": "bold blue",
        "success": "bold green",
        "hint": "dim cyan",
        "path": "bold magenta",
        "line_number": "dim",
    }
)


class Reporter:
    """
    Reporter for axiom reports, certificates, lattice chains and pair tables
    """

    def __init__(self, config: OutputConfig, output: TextIO = sys.stdout):
        self.config = config
        self.output = output

        force_terminal = None
        if config.color == "always":
            force_terminal = True
        elif config.color == "never":
            force_terminal = False

        self.console = Console(
            file=output,
            theme=LATNAK_THEME,
            force_terminal=force_terminal,
        )

    def emit(self, text: str) -> None:
        """
        Print machine-readable output (JSON or CSV) without markup or wrapping
        """

        self.console.print(text, markup=False, highlight=False, soft_wrap=True)

    def report(self, report: AxiomReport) -> None:
        """
        Report the per-axiom verdicts of one family

        Args:
            report (AxiomReport): Verdicts to report
        """

        self.console.print()
        self.console.print(f"[path]{report.subject}[/path]")

        for result in report.results:
            self._report_result(result)

    def _report_result(self, result: AxiomResult) -> None:
        if result.skipped:
            style, icon = "warning", "⚠"
        elif result.passed:
            style, icon = "success", "✓"
        else:
            style, icon = "error", "✗"

        if self.config.verbosity == "minimal":
            if not result.passed or result.skipped:
                self.console.print(f"  [{style}]{icon}[/{style}] {result.axiom}")
            return

        status = "skipped" if result.skipped else ("pass" if result.passed else "fail")
        self.console.print(
            f"  [{style}]{icon} {result.axiom}:[/{style}] {status} "
            f"[line_number]({result.checked} checked)[/line_number]"
        )

        if result.witness and (not result.passed or self.config.verbosity == "verbose"):
            self.console.print(f"    [hint]{result.witness}[/hint]")

    def report_certificate(self, certificate: Certificate) -> None:
        """
        Report a derived-invariant certificate

        Args:
            certificate (Certificate): Certificate to report
        """

        style, icon = ("success", "✓") if certificate.consistent else ("error", "✗")
        self.console.print(
            f"[{style}]{icon} {certificate.left} ~ {certificate.right}: {certificate.verdict}[/{style}]"
        )

        if self.config.verbosity == "minimal":
            return

        table = Table(show_header=False, box=None, padding=(0, 2))
        table.add_row("[dim]det:[/dim]", f"{certificate.det_left} | {certificate.det_right}")
        table.add_row("[dim]coxeter:[/dim]", f"{certificate.coxeter_left} | {certificate.coxeter_right}")
        if certificate.dim_left is not None:
            table.add_row("[dim]dim:[/dim]", f"{certificate.dim_left} | {certificate.dim_right}")
        self.console.print(table)

    def report_chain(self, chain: LatticeChain) -> None:
        """
        Report a lattice chain with its per-step gate verdicts

        Args:
            chain (LatticeChain): Chain to report
        """

        self.console.print()
        self.console.print(f"[path]{chain.name}[/path] [line_number]{len(chain.links)} steps[/line_number]")

        for index, link in enumerate(chain.links, start=1):
            if link.verdict.passed and self.config.verbosity != "verbose":
                continue
            style, icon = ("success", "✓") if link.verdict.passed else ("error", "✗")
            self.console.print(
                f"  [line_number]{index}[/line_number] [{style}]{icon}[/{style}] {link.step.label} "
                f"[hint]{link.stage}[/hint]"
            )
            if not link.verdict.passed:
                self.console.print(f"    [hint]{link.verdict.condition}: {link.verdict.detail}[/hint]")

        if chain.target is not None:
            if chain.matches:
                self.success("end set matches the target up to translation")
            else:
                self.error(f"end set {chain.end} does not match {chain.target}")

    def report_pairs(self, columns: Sequence[str], rows: Sequence[Sequence[object]]) -> None:
        """
        Report a pair table

        Args:
            columns (Sequence[str]): Column names
            rows (Sequence[Sequence[object]]): Table rows
        """

        table = Table(*columns)
        for row in rows:
            table.add_row(*(str(value) for value in row))
        self.console.print(table)

    def report_summary(self, total: int, failures: int, refuted: int = 0) -> None:
        """
        Report summary statistics

        Args:
            total (int): Number of checks run
            failures (int): Number of failed axiom checks
            refuted (int): Number of refuted certificates
        """

        self.console.print()

        if failures == 0 and refuted == 0:
            self.console.print(f"[success]✓ All {total} checks passed![/success]")
            return

        table = Table(show_header=False, box=None, padding=(0, 2))

        table.add_row("[dim]Checks run:[/dim]", str(total))

        if failures > 0:
            table.add_row("[error]Failures:[/error]", f"[error]{failures}[/error]")

        if refuted > 0:
            table.add_row("[warning]Refuted:[/warning]", f"[warning]{refuted}[/warning]")

        self.console.print(table)

    def success(self, message: str) -> None:
        self.console.print(f"[success]✓ {message}[/success]")

    def error(self, message: str) -> None:
        self.console.print(f"[error]✗ {message}[/error]")

    def warning(self, message: str) -> None:
        self.console.print(f"[warning]⚠ {message}[/warning]")

    def info(self, message: str) -> None:
        self.console.print(f"[info]ℹ {message}[/info]")
