"""
CLI tests - commands, output structure and exit codes.
"""

import json
from fractions import Fraction

import pytest

from tropcalc.cli import main
from tropcalc.config import Config


PSI = {"kind": "psi"}
EXP2 = {"kind": "exp", "base": "2"}
TENT_PHI = {"kind": "phi", "profile": {"points": [["0", "0"], ["1/2", "1/4"]]}}


def _rows(output):
    return [line.split("\t") for line in output.splitlines() if line and not line.startswith("#")]


class TestCLIBasics:
    """Basic CLI functionality tests."""

    def test_help_command(self, cli_runner):
        result = cli_runner.invoke(main, ["--help"])
        assert result.exit_code == 0
        assert "tropcalc" in result.output.lower()

    @pytest.mark.parametrize("command", ["eval", "plot", "solve", "verify", "nevanlinna", "roots", "experiment"])
    def test_command_help(self, cli_runner, command):
        result = cli_runner.invoke(main, [command, "--help"])
        assert result.exit_code == 0

    def test_list_kinds(self, cli_runner):
        result = cli_runner.invoke(main, ["list-kinds"])
        assert result.exit_code == 0
        assert "finite_pl" in result.output
        assert "psi" in result.output

    def test_list_cases(self, cli_runner):
        result = cli_runner.invoke(main, ["list-cases"])
        assert result.exit_code == 0
        assert "ThmB(4)" in result.output
        assert "PartialKnown" in result.output

    def test_list_cases_by_status(self, cli_runner):
        result = cli_runner.invoke(main, ["list-cases", "--status", "open"])
        assert result.exit_code == 0
        assert "ThmB(5) irrational roots" in result.output
        assert "ThmB(4)" not in result.output
        assert "c=0" not in result.output

    def test_list_cases_unknown_status(self, cli_runner):
        result = cli_runner.invoke(main, ["list-cases", "--status", "maybe"])
        assert result.exit_code == 2

    def test_list_examples(self, cli_runner):
        result = cli_runner.invoke(main, ["list-examples"])
        assert result.exit_code == 0
        assert "min-pair" in result.output


class TestEvalCommand:
    """Tests for the 'eval' command."""

    @pytest.mark.parametrize("x,expected", [("3", "6"), ("-2", "1"), ("1/2", "1/2")])
    def test_psi(self, cli_runner, write_doc, x, expected):
        result = cli_runner.invoke(main, ["eval", write_doc(PSI), x])
        assert result.exit_code == 0
        assert result.output.strip() == expected

    def test_phi(self, cli_runner, write_doc):
        result = cli_runner.invoke(main, ["eval", write_doc(TENT_PHI), "5/2"])
        assert result.output.strip() == "1/2"

    def test_nested_document(self, cli_runner, write_doc):
        doc = {
            "kind": "max",
            "children": [
                {"kind": "const", "value": "1"},
                {"kind": "shift", "offset": "1", "child": {"kind": "linear", "slope": "2"}},
            ],
        }
        result = cli_runner.invoke(main, ["eval", write_doc(doc), "3"])
        assert result.output.strip() == "8"

    def test_bottom(self, cli_runner, write_doc):
        result = cli_runner.invoke(main, ["eval", write_doc({"kind": "const", "value": "-inf"}), "0"])
        assert result.exit_code == 0
        assert result.output.strip() == "-inf"


class TestPlotCommand:
    """Tests for the 'plot' command."""

    def test_psi_values(self, cli_runner, write_doc):
        result = cli_runner.invoke(main, ["plot", write_doc(PSI), "--window=-3:3", "--step", "1"])
        assert result.exit_code == 0
        assert [row[1] for row in _rows(result.output)] == ["3", "1", "0", "0", "1", "3", "6"]
        assert result.output.count("# event root") == 7

    def test_slopes(self, cli_runner, write_doc):
        result = cli_runner.invoke(main, ["plot", write_doc(PSI), "--window=0:1", "--step", "1/2"])
        rows = _rows(result.output)
        assert rows[1] == ["1/2", "1/2", "1", "1"]
        assert rows[0][2:] == ["0", "1"]

    def test_breakpoints_are_included(self, cli_runner, write_doc):
        doc = {"kind": "sawtooth", "a": "1", "b": "1"}
        result = cli_runner.invoke(main, ["plot", write_doc(doc), "--window=0:1", "--step", "1"])
        assert [row[0] for row in _rows(result.output)] == ["0", "1/2", "1"]
        assert "# event pole at 1/2" in result.output

    def test_bad_step(self, cli_runner, write_doc):
        result = cli_runner.invoke(main, ["plot", write_doc(PSI), "--step", "0"])
        assert result.exit_code == 2


class TestSolveCommand:
    """Tests for the 'solve' command."""

    def test_complete(self, cli_runner):
        result = cli_runner.invoke(main, ["solve", "1", "2", "--rhs", "1"])
        assert result.exit_code == 0
        data = json.loads(result.output)
        assert data["case_label"] == "Thm4.1(iii)"
        assert data["status"] == "Complete"

    def test_negative_coefficients(self, cli_runner):
        result = cli_runner.invoke(main, ["solve", "1", "-2", "1"])
        assert result.exit_code == 0
        assert json.loads(result.output)["case_label"] == "§5.1 n=p"

    def test_quoted_list(self, cli_runner):
        result = cli_runner.invoke(main, ["solve", "1 -1 1 -1"])
        assert json.loads(result.output)["case_label"] == "Thm6.2(1)"

    def test_open_exit_code(self, cli_runner):
        result = cli_runner.invoke(main, ["solve", "1", "1", "1"])
        assert result.exit_code == 4
        assert json.loads(result.output)["status"] == "Open"

    def test_partial_exit_code(self, cli_runner):
        result = cli_runner.invoke(main, ["solve", "4", "-4", "1"])
        assert result.exit_code == 5
        assert json.loads(result.output)["status"] == "PartialKnown"

    def test_degenerate(self, cli_runner):
        result = cli_runner.invoke(main, ["solve", "0", "0"])
        assert result.exit_code == 3
        assert "Error:" in result.output

    def test_parse_error(self, cli_runner):
        result = cli_runner.invoke(main, ["solve", "1", "abc"])
        assert result.exit_code == 2

    def test_instantiate_open(self, cli_runner):
        result = cli_runner.invoke(main, ["solve", "1", "1", "1", "--instantiate"])
        assert result.exit_code == 4


class TestVerifyCommand:
    """Round trip: solve --instantiate, then verify."""

    @pytest.mark.parametrize("coefficients", [["1", "-1", "1", "-1"], ["1", "2"], ["1", "-2", "1"], ["4", "4", "1"]])
    def test_instantiated_solution_verifies(self, cli_runner, tmp_path, coefficients):
        solved = cli_runner.invoke(main, ["solve", *coefficients, "--instantiate"])
        assert solved.exit_code == 0
        path = tmp_path / "y.json"
        path.write_text(solved.output)
        result = cli_runner.invoke(main, ["verify", str(path), *coefficients, "--grid", "64"])
        assert result.exit_code == 0
        data = json.loads(result.output)
        assert data["residual"] == "0"
        assert data["passed"] is True
        assert data["grid_size"] == 64

    def test_params_file(self, cli_runner, write_doc, tmp_path):
        params = write_doc({"P1": {"points": [["0", "1"], ["1/3", "-2"]]}}, name="params.json")
        solved = cli_runner.invoke(main, ["solve", "1", "-1", "--rhs", "2", "--instantiate", "--params", params])
        assert solved.exit_code == 0
        path = tmp_path / "y.json"
        path.write_text(solved.output)
        result = cli_runner.invoke(main, ["verify", str(path), "1", "-1", "--rhs", "2"])
        assert result.exit_code == 0

    def test_wrong_equation_fails(self, cli_runner, write_doc):
        result = cli_runner.invoke(main, ["verify", write_doc({"kind": "const", "value": "0"}), "1", "1"])
        assert result.exit_code == 1
        assert json.loads(result.output)["residual"] == "1"


class TestNevanlinnaCommand:
    """Tests for the 'nevanlinna' command."""

    def test_psi(self, cli_runner, write_doc):
        result = cli_runner.invoke(main, ["nevanlinna", write_doc(PSI)])
        assert result.exit_code == 0
        data = json.loads(result.output)
        assert len(data["radii"]) == 11
        assert abs(data["order_estimate"] - 2.0) < 0.05

    def test_too_few_radii(self, cli_runner, write_doc):
        result = cli_runner.invoke(main, ["nevanlinna", write_doc(PSI), "--exponents", "1:3"])
        assert result.exit_code == 2


class TestRootsCommand:
    """Tests for the 'roots' command."""

    def test_psi_roots(self, cli_runner, write_doc):
        result = cli_runner.invoke(main, ["roots", write_doc(PSI), "--window=-2:2"])
        data = json.loads(result.output)
        assert data["count"] == 5

    def test_tent_poles(self, cli_runner, write_doc):
        doc = {"kind": "sawtooth"}
        result = cli_runner.invoke(main, ["roots", write_doc(doc), "--window=0:2", "--poles"])
        data = json.loads(result.output)
        assert [r["location"] for r in data["roots"]] == ["1/2", "3/2"]


class TestExperimentCommand:
    """Tests for the 'experiment' subcommands."""

    def test_hayman_census(self, cli_runner, write_doc):
        result = cli_runner.invoke(main, [
            "experiment", "hayman", write_doc(EXP2), "--alpha", "1", "--shift", "1", "--window=-20:20",
        ])
        assert result.exit_code == 0
        assert json.loads(result.output)["count"] == 41

    def test_hayman_linearity(self, cli_runner, write_doc):
        result = cli_runner.invoke(main, [
            "experiment", "hayman", write_doc({"kind": "pi_a", "a": "1/2"}),
            "--alpha", "1", "--shift=-1/2", "--linearity",
        ])
        data = json.loads(result.output)
        assert data["verdict"] == "IsLinear"
        assert data["intercept"] == "-1/4"

    def test_bruck(self, cli_runner, write_doc):
        result = cli_runner.invoke(main, ["experiment", "bruck", write_doc(PSI), "--level=-100"])
        data = json.loads(result.output)
        assert data["alternative"] == "BothTails"
        assert (data["A"], data["B"]) == ("1", "1")

    def test_bruck_tails(self, cli_runner, write_doc):
        result = cli_runner.invoke(main, [
            "experiment", "bruck", write_doc(PSI), "--level=-100", "--tails=-80:-40,40:80",
        ])
        assert result.exit_code == 0
        data = json.loads(result.output)
        assert data["tails"] == [["-80", "-40"], ["40", "80"]]
        assert (data["A"], data["B"]) == ("1", "1")

    @pytest.mark.parametrize("tails", ["1:2", "-40:-20,30:20", "a:b,1:2"])
    def test_bruck_bad_tails(self, cli_runner, write_doc, tails):
        result = cli_runner.invoke(main, ["experiment", "bruck", write_doc(PSI), "--level=-100", f"--tails={tails}"])
        assert result.exit_code == 2

    def test_fermat(self, cli_runner, write_doc):
        f = write_doc({"kind": "finite_pl", "points": [["1", "1"]], "left_slope": "0", "right_slope": "-1"}, "f.json")
        g = write_doc({"kind": "finite_pl", "points": [["1", "1"]], "left_slope": "1", "right_slope": "0"}, "g.json")
        result = cli_runner.invoke(main, ["experiment", "fermat", f, g, "--alphas", "1,1"])
        assert json.loads(result.output)["verdict"] == "HoldsOnWindow"

    def test_fermat_witness(self, cli_runner, write_doc):
        f = write_doc({"kind": "max", "children": [{"kind": "const", "value": "0"}, {"kind": "linear", "slope": "1"}]})
        result = cli_runner.invoke(main, ["--seed", "3", "experiment", "fermat", f, "--alphas", "1"])
        data = json.loads(result.output)
        assert data["verdict"] == "Witness"
        assert data["value"] != "1"

    def test_example(self, cli_runner):
        result = cli_runner.invoke(main, ["experiment", "example", "pi-a"])
        assert result.exit_code == 0
        assert json.loads(result.output)["example"] == "pi-a"

    def test_unknown_example(self, cli_runner):
        result = cli_runner.invoke(main, ["experiment", "example", "nope"])
        assert result.exit_code == 2


class TestGlobalOptions:
    """Group options that change the configured defaults."""

    def test_grid_window_drives_roots(self, cli_runner, write_doc):
        result = cli_runner.invoke(main, ["--grid-window=-2:2", "roots", write_doc(PSI)])
        assert result.exit_code == 0
        data = json.loads(result.output)
        assert data["window"] == ["-2", "2"]
        assert data["count"] == 5

    def test_grid_size_drives_verify(self, cli_runner, write_doc):
        doc = {"kind": "const", "value": "1/2"}
        result = cli_runner.invoke(main, ["--grid-size", "16", "verify", write_doc(doc), "1", "1"])
        assert result.exit_code == 0
        assert json.loads(result.output)["grid_size"] == 16

    def test_radii(self, cli_runner, write_doc):
        result = cli_runner.invoke(main, ["--radii", "2:10", "nevanlinna", write_doc(PSI)])
        assert result.exit_code == 0
        assert len(json.loads(result.output)["radii"]) == 9

    def test_too_few_radii(self, cli_runner, write_doc):
        result = cli_runner.invoke(main, ["--radii", "1:3", "nevanlinna", write_doc(PSI)])
        assert result.exit_code == 2

    def test_doubling_cap(self, cli_runner, write_doc):
        doc = {"kind": "const", "value": "1/2"}
        result = cli_runner.invoke(main, ["--doubling-cap", "3", "experiment", "fermat", write_doc(doc), "--alphas", "2"])
        data = json.loads(result.output)
        assert data["verdict"] == "HoldsOnWindow"
        assert data["window"] == ["-64", "64"]

    def test_bracket_window(self, cli_runner, write_doc):
        result = cli_runner.invoke(main, ["--bracket-window=-8:8", "list-kinds"])
        assert result.exit_code == 0
        assert Config.get_bracket_window() == (Fraction(-8), Fraction(8))

    @pytest.mark.parametrize("args", [["--grid-window", "2:1"], ["--grid-size", "0"], ["--doubling-cap=-1"]])
    def test_invalid_values(self, cli_runner, args):
        result = cli_runner.invoke(main, [*args, "list-kinds"])
        assert result.exit_code == 2
