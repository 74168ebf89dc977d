from io import StringIO

from latnak.algebra import nakayama
from latnak.config.schema import OutputConfig
from latnak.families import AxiomReport, AxiomResult, ChainLink, main1_transform, main3_transform
from latnak.invariants import certify_pair
from latnak.lattice import GateVerdict
from latnak.reporter import Reporter


def plain(verbosity: str = "normal") -> tuple[Reporter, StringIO]:
    output = StringIO()
    return Reporter(OutputConfig(verbosity=verbosity, color="never"), output=output), output


def failing_report() -> AxiomReport:
    return AxiomReport(
        "family over L(S)",
        [
            AxiomResult("L1", True, 4),
            AxiomResult("L2.1", False, 2, "Hom(X(1,1), X(2,1)[0]) = 1"),
            AxiomResult("S1", False, 0, "weak S-family axioms fail", skipped=True),
        ],
    )


class TestReporter:

    def test_create_reporter(self):
        config = OutputConfig()
        reporter = Reporter(config)

        assert reporter is not None
        assert reporter.config == config

    def test_create_reporter_with_output(self):
        output = StringIO()
        reporter = Reporter(OutputConfig(), output=output)

        assert reporter.output == output

    def test_report_axioms(self):
        reporter, output = plain()

        reporter.report(failing_report())

        result = output.getvalue()
        assert "family over L(S)" in result
        assert "L1: pass" in result
        assert "L2.1: fail" in result
        assert "Hom(X(1,1), X(2,1)[0]) = 1" in result
        assert "S1: skipped" in result

    def test_minimal_hides_passing_axioms(self):
        reporter, output = plain("minimal")

        reporter.report(failing_report())

        result = output.getvalue()
        assert "L1" not in result
        assert "L2.1" in result

    def test_report_certificate(self):
        reporter, output = plain()

        reporter.report_certificate(certify_pair(nakayama(6, 4), nakayama(6, 5)))

        result = output.getvalue()
        assert "N(6,4) ~ N(6,5): refuted" in result
        assert "coxeter" in result

    def test_report_chain_with_failure(self):
        reporter, output = plain()
        chain = main3_transform(2, 2)
        first = chain.links[0]
        chain.links[0] = ChainLink(first.step, GateVerdict(False, "M+_12", "row 1 differs"), first.support, first.stage)

        reporter.report_chain(chain)

        result = output.getvalue()
        assert "main3(2,2)" in result
        assert "M+_12: row 1 differs" in result

    def test_report_chain_quiet_when_passing(self):
        reporter, output = plain()

        reporter.report_chain(main1_transform(2, 8, 5))

        result = output.getvalue()
        assert "main1(2,8,5)" in result
        assert "matches the target" in result
        assert "✗" not in result

    def test_report_pairs(self):
        reporter, output = plain()

        reporter.report_pairs(("n", "l"), [(6, 3), (7, 4)])

        result = output.getvalue()
        assert "6" in result
        assert "7" in result

    def test_report_summary_all_passed(self):
        reporter, output = plain()

        reporter.report_summary(total=12, failures=0)

        assert "All 12 checks passed" in output.getvalue()

    def test_report_summary_with_failures(self):
        reporter, output = plain()

        reporter.report_summary(total=12, failures=2, refuted=1)

        result = output.getvalue()
        assert "Failures" in result
        assert "Refuted" in result

    def test_emit_keeps_text_verbatim(self):
        reporter, output = plain()

        reporter.emit('{"passed": [true]}')

        assert output.getvalue().strip() == '{"passed": [true]}'

    def test_messages(self):
        reporter, output = plain()

        reporter.success("done")
        reporter.error("broken")
        reporter.warning("careful")
        reporter.info("note")

        result = output.getvalue()
        for text in ("done", "broken", "careful", "note"):
            assert text in result
