import json

import pytest
from typer.testing import CliRunner

from latnak.algebra import lattice_algebra, nakayama
from latnak.cli.app import app
from latnak.cli.verify import Outcome, mutation_step
from latnak.exceptions import PreconditionError
from latnak.families import AxiomReport, AxiomResult, SFamily
from latnak.homalg import stalk_projective
from latnak.invariants import certify_pair
from latnak.lattice import GridPoint, LatticeSet
from latnak.serialize import family_to_dict

runner = CliRunner()


@pytest.fixture
def quiet_config(tmp_path):
    """Config that keeps log records off the output"""
    path = tmp_path / "quiet.toml"
    path.write_text('[output]\nverbosity = "minimal"\ncolor = "never"\n')
    return str(path)


def invoke_json(config: str, *args: str):
    result = runner.invoke(app, ["--config", config, "--format", "json", *args])
    return result, json.loads(result.stdout) if result.stdout.strip() else None


class TestCLIInitCommand:

    def test_init_creates_config(self, tmp_path):
        result = runner.invoke(app, ["init", "--root", str(tmp_path)])

        assert result.exit_code == 0
        assert (tmp_path / "latnak.toml").exists()
        assert "Created" in result.stdout

    def test_init_with_existing_config_no_force(self, tmp_path):
        config_file = tmp_path / "latnak.toml"
        config_file.write_text("[run]\nseed = 3\n")

        result = runner.invoke(app, ["init", "--root", str(tmp_path)], input="n\n")

        assert result.exit_code == 0
        assert "cancelled" in result.stdout.lower()
        assert config_file.read_text() == "[run]\nseed = 3\n"

    def test_init_with_existing_config_force(self, tmp_path):
        config_file = tmp_path / "latnak.toml"
        config_file.write_text("[run]\nseed = 3\n")

        result = runner.invoke(app, ["init", "--root", str(tmp_path), "--force"])

        assert result.exit_code == 0
        assert "seed = 3" not in config_file.read_text()

    def test_init_with_existing_config_overwrite_yes(self, tmp_path):
        config_file = tmp_path / "latnak.toml"
        config_file.write_text("[run]\nseed = 3\n")

        result = runner.invoke(app, ["init", "--root", str(tmp_path)], input="y\n")

        assert result.exit_code == 0
        assert "[limits]" in config_file.read_text()

    def test_init_creates_in_subdirectory(self, tmp_path):
        subdir = tmp_path / "subdir" / "nested"

        result = runner.invoke(app, ["init", "--root", str(subdir)])

        assert result.exit_code == 0
        assert (subdir / "latnak.toml").exists()

    def test_init_default_root(self, tmp_path, monkeypatch):
        monkeypatch.chdir(tmp_path)

        result = runner.invoke(app, ["init"])

        assert result.exit_code == 0
        assert (tmp_path / "latnak.toml").exists()


class TestCLIGlobalOptions:

    def test_version(self):
        result = runner.invoke(app, ["--version"])

        assert result.exit_code == 0
        assert "latnak version" in result.stdout

    def test_invalid_format(self, quiet_config):
        result = runner.invoke(app, ["--config", quiet_config, "--format", "yaml", "pairs"])

        assert result.exit_code == 4

    def test_invalid_prime(self, quiet_config):
        result = runner.invoke(app, ["--config", quiet_config, "--prime", "91", "pairs"])

        assert result.exit_code == 4

    def test_missing_config(self, tmp_path):
        result = runner.invoke(app, ["--config", str(tmp_path / "missing.toml"), "pairs"])

        assert result.exit_code == 4
        assert "not found" in result.stdout

    def test_invalid_config(self, configs_dir):
        result = runner.invoke(app, ["--config", str(configs_dir / "invalid_choice.toml"), "pairs"])

        assert result.exit_code == 4


class TestCLIPairsCommand:

    def test_pairs_text(self, quiet_config):
        result = runner.invoke(app, ["--config", quiet_config, "pairs", "--pmax", "2", "--qmax", "1", "--rmax", "1"])

        assert result.exit_code == 0
        assert "case" in result.stdout

    def test_pairs_csv(self, quiet_config):
        result = runner.invoke(
            app,
            ["--config", quiet_config, "--format", "csv", "pairs", "--pmax", "2", "--qmax", "1", "--rmax", "1"],
        )

        lines = result.stdout.splitlines()
        assert result.exit_code == 0
        assert lines[0] == "# latnak pairs v1"
        assert lines[1] == "p,q,r,case,n,l,l_plus_1"
        assert lines[2:] == ["2,1,0,a,6,3,4", "2,1,1/2,b,7,4,5", "2,1,1,a,8,5,6"]

    def test_pairs_csv_is_stable(self, quiet_config):
        args = ["--config", quiet_config, "--format", "csv", "pairs", "--pmax", "3", "--qmax", "3", "--rmax", "2"]
        first, second = runner.invoke(app, args), runner.invoke(app, args)

        assert first.exit_code == second.exit_code == 0
        assert first.stdout == second.stdout
        assert first.stdout.startswith("# latnak pairs v1\n")

    def test_pairs_json_certified(self, quiet_config):
        result, data = invoke_json(
            quiet_config, "pairs", "--pmax", "2", "--qmax", "1", "--rmax", "1", "--nmax", "20", "--certify"
        )

        assert result.exit_code == 0
        assert [(row["n"], row["l"]) for row in data["rows"]] == [(6, 3), (7, 4), (8, 5)]
        assert all(c["verdict"] == "consistent" for c in data["certificates"])

    def test_pairs_bad_bounds(self, quiet_config):
        result = runner.invoke(app, ["--config", quiet_config, "pairs", "--nmax", "0"])

        assert result.exit_code == 4


class TestCLIVerifyCommand:

    def test_verify_nak(self, quiet_config):
        result, data = invoke_json(quiet_config, "verify", "nak", "--p", "2", "--q", "3", "--r", "1")

        assert result.exit_code == 0
        assert data["passed"] is True
        assert data["certificates"][0]["verdict"] == "consistent"
        assert any(r["subject"] == "Nak(2,3,1)" for r in data["reports"])

    def test_verify_duality(self, quiet_config):
        result, data = invoke_json(quiet_config, "verify", "duality", "--pair", "1,1;1,1")

        assert result.exit_code == 0
        assert [r["axiom"] for r in data["reports"][1]["results"]] == ["L1", "Y1", "Y2", "Y3", "Y4"]

    def test_verify_main3(self, quiet_config, tmp_path):
        out = tmp_path / "main3.json"
        result = runner.invoke(app, ["--config", quiet_config, "verify", "main3", "--p", "2", "--q", "2", "-o", str(out)])

        assert result.exit_code == 0
        data = json.loads(out.read_text())
        assert data["kind"] == "main3"
        assert data["chains"][0]["gates_passed"] is True
        assert data["reports"]

    def test_verify_main1_chain_only(self, quiet_config):
        result, data = invoke_json(
            quiet_config, "--max-dim", "1", "verify", "main1", "--s", "2", "--t", "8", "--u", "5"
        )

        assert result.exit_code == 0
        assert data["reports"] == []
        assert "exceeds max_dim" in data["notes"][0]
        assert data["chains"][0]["matches"] is True

    def test_verify_mutation(self, quiet_config):
        result, data = invoke_json(quiet_config, "verify", "mutation", "--kind", "I", "--k", "2", "--young", "3,2,1")

        assert result.exit_code == 0
        assert data["reports"][-1]["results"][0]["axiom"] == "inverse"

    def test_verify_mutation_gate_failure(self, quiet_config, lattices_dir):
        result = runner.invoke(
            app,
            [
                "--config",
                quiet_config,
                "verify",
                "mutation",
                "--kind",
                "I",
                "--k",
                "0",
                "--lattice-file",
                str(lattices_dir / "nonexample.json"),
            ],
        )

        assert result.exit_code == 4
        assert "Error" in result.stdout

    def test_verify_block_needs_width(self, quiet_config):
        result = runner.invoke(
            app, ["--config", quiet_config, "verify", "mutation", "--kind", "II", "--k", "2", "--young", "2,3,1"]
        )

        assert result.exit_code == 4

    def test_verify_csv(self, quiet_config):
        result = runner.invoke(
            app, ["--config", quiet_config, "--format", "csv", "verify", "nak", "--p", "2", "--q", "3"]
        )

        assert result.exit_code == 0
        assert result.stdout.splitlines()[0] == "subject,axiom,status,checked,witness"
        assert "certificate,consistent" in result.stdout

    def test_verify_unknown_kind(self, quiet_config):
        result = runner.invoke(app, ["--config", quiet_config, "verify", "main2"])

        assert result.exit_code == 4


class TestOutcome:

    def test_refuted_certificate(self):
        outcome = Outcome("pairs", {}, certificates=[certify_pair(nakayama(6, 4), nakayama(6, 5))])

        assert outcome.exit_code == 3
        assert not outcome.passed

    def test_failing_report_wins(self):
        outcome = Outcome(
            "nak",
            {},
            reports=[AxiomReport("x", [AxiomResult("S1", False, 1, "w")])],
            certificates=[certify_pair(nakayama(6, 4), nakayama(6, 5))],
        )

        assert outcome.exit_code == 2

    def test_mutation_steps(self):
        assert mutation_step("tI", 2, None, 0, False).axis == "col"
        assert mutation_step("II", 3, 2, 1, True).label.startswith("II")

        with pytest.raises(PreconditionError):
            mutation_step("III", 1, None, 0, False)


class TestCLIEmitCommand:

    def test_emit_cartan_csv(self, quiet_config):
        result = runner.invoke(
            app, ["--config", quiet_config, "--format", "csv", "emit", "cartan", "--algebra", "nakayama", "--n", "3", "--l", "2"]
        )

        assert result.exit_code == 0
        assert result.stdout.splitlines() == [",1,2,3", "1,1,0,0", "2,1,1,0", "3,0,1,1"]

    def test_emit_coxeter(self, quiet_config):
        result, data = invoke_json(quiet_config, "emit", "coxeter", "--algebra", "an", "--n", "2")

        assert result.exit_code == 0
        assert data["polynomial"] == [1, 1, 1]

    def test_emit_lattice(self, quiet_config):
        result, data = invoke_json(quiet_config, "emit", "lattice", "--young", "2,3,1")

        assert result.exit_code == 0
        assert len(data["points"]) == 5

    def test_emit_complex(self, quiet_config):
        result, data = invoke_json(
            quiet_config, "emit", "complex", "--algebra", "an", "--n", "2", "--vertex", "2", "--complex", "simple"
        )

        assert result.exit_code == 0
        assert data["terms"] == {"-1": [1], "0": [2]}

    def test_emit_complex_unknown_vertex(self, quiet_config):
        result = runner.invoke(
            app, ["--config", quiet_config, "emit", "complex", "--algebra", "an", "--n", "2", "--vertex", "5"]
        )

        assert result.exit_code == 4

    def test_emit_quiver_has_no_csv(self, quiet_config):
        result = runner.invoke(
            app, ["--config", quiet_config, "--format", "csv", "emit", "quiver", "--algebra", "an", "--n", "2"]
        )

        assert result.exit_code == 4

    def test_emit_needs_algebra(self, quiet_config):
        result = runner.invoke(app, ["--config", quiet_config, "emit", "cartan"])

        assert result.exit_code == 4

    def test_emit_algebra_text(self, quiet_config):
        result = runner.invoke(app, ["--config", quiet_config, "emit", "algebra", "--algebra", "nakayama", "--n", "4", "--l", "2"])

        assert result.exit_code == 0
        assert "N(4,2)" in result.stdout
        assert "dim 7" in result.stdout


class TestCLIFamilyCheckCommand:

    def test_emitted_family_passes(self, quiet_config, tmp_path):
        out = tmp_path / "family.json"
        emitted = runner.invoke(
            app, ["--config", quiet_config, "emit", "family", "--family", "trivial", "--young", "2,2,0", "-o", str(out)]
        )
        assert emitted.exit_code == 0

        result = runner.invoke(app, ["--config", quiet_config, "family-check", "--input", str(out), "--end"])

        assert result.exit_code == 0
        assert "All" in result.stdout

    def test_failing_family(self, quiet_config, tmp_path, square):
        algebra = lattice_algebra(square)
        members = {p: stalk_projective(algebra, p) for p in square.ordered}
        members[GridPoint(1, 1)], members[GridPoint(2, 2)] = members[GridPoint(2, 2)], members[GridPoint(1, 1)]
        path = tmp_path / "swapped.json"
        path.write_text(json.dumps(family_to_dict(SFamily(square, algebra, members, "swapped"))))

        result, data = invoke_json(quiet_config, "family-check", "--input", str(path))

        assert result.exit_code == 2
        assert data[0]["passed"] is False

    def test_malformed_input(self, quiet_config, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{not json")

        result = runner.invoke(app, ["--config", quiet_config, "family-check", "--input", str(path)])

        assert result.exit_code == 4

    def test_non_young_support(self, quiet_config, tmp_path):
        lattice = tmp_path / "skew.lattice.json"
        lattice.write_text(json.dumps(LatticeSet.of([(1, 2), (1, 3), (2, 1), (2, 2)]).to_dict()))
        out = tmp_path / "skew.json"
        emitted = runner.invoke(
            app,
            ["--config", quiet_config, "emit", "family", "--family", "trivial", "--lattice-file", str(lattice), "-o", str(out)],
        )
        assert emitted.exit_code == 0

        result = runner.invoke(app, ["--config", quiet_config, "family-check", "--input", str(out), "--young"])

        assert result.exit_code == 4
