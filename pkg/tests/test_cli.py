"""
Tests for the clawfree command line
"""

import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

import clawfree
from clawfree.cli import create_argument_parser, create_command_config, run
from clawfree.constructions.families import pg
from clawfree.core.config import ExitCode, OutputFormat
from clawfree.graphs.graph import parse_graph
from clawfree.matroids.io import parse_matroid, write_matroid_file

SERIAL = ["--shards", "1"]


class TestArguments:
    """Test parsing into command configurations"""

    def test_defaults(self):
        args = create_argument_parser().parse_args(["analyze", "--in", "m.txt"])
        config = create_command_config(args)
        assert config.analyses == ("claws",)
        assert config.output_format == OutputFormat.JSON
        assert config.shards >= 1

    def test_campaign_options(self):
        argv = ["verify", "bound", "--class", "binary", "--r", "4", "--t", "2"]
        args = create_argument_parser().parse_args(argv + SERIAL)
        config = create_command_config(args)
        assert config.action == "bound"
        assert (config.r, config.t, config.shards) == (4, 2, 1)

    @pytest.mark.parametrize(
        "argv",
        [
            [],
            ["verify"],
            ["construct"],
            ["tables", "h"],
            ["analyze", "--in", "x", "--format", "xml"],
        ],
    )
    def test_usage_errors(self, argv):
        assert run(argv) == ExitCode.USAGE


class TestConstruct:
    """Test the construct command"""

    def test_matroid(self, capsys):
        assert run(["construct", "--family", "mrt:5,2"]) == ExitCode.OK
        captured = capsys.readouterr()
        M = parse_matroid(captured.out)
        assert (M.n, M.rank) == (10, 5)
        assert "rank 5 on 10 elements" in captured.err

    def test_graph(self, capsys):
        assert run(["construct", "--family", "gnt:9,2"]) == ExitCode.OK
        assert parse_graph(capsys.readouterr().out).edge_count() == 16

    def test_out_file(self, tmp_path, capsys):
        path = tmp_path / "out" / "pg3.txt"
        assert run(["construct", "--family", "pg:3", "--out", str(path)]) == ExitCode.OK
        assert capsys.readouterr().out == ""
        assert parse_matroid(path.read_text()) == pg(3)

    def test_unknown_family(self):
        assert run(["construct", "--family", "petersen:3"]) == ExitCode.USAGE

    def test_capacity(self):
        assert run(["construct", "--family", "pg:21"]) == ExitCode.INCOMPLETE


class TestAnalyze:
    """Test the analyze command"""

    def test_claws_json(self, tmp_path, capsys):
        path = tmp_path / "fano.txt"
        write_matroid_file(path, pg(3))
        assert run(["analyze", "--in", str(path)] + SERIAL) == ExitCode.OK
        data = json.loads(capsys.readouterr().out)
        assert data["claws"]["max_claw_size"] == 1
        assert data["lines"] is None

    def test_table_view(self, tmp_path, capsys):
        path = tmp_path / "fano.txt"
        write_matroid_file(path, pg(3))
        argv = ["analyze", "--in", str(path), "--claws", "--lines", "--validate"]
        assert run(argv + ["--format", "table"] + SERIAL) == ExitCode.OK
        out = capsys.readouterr().out
        assert "max claw size: 1" in out
        assert "triangle-free: no" in out
        assert "valid: yes" in out

    def test_constructed_file(self, tmp_path, capsys):
        path = tmp_path / "m.txt"
        argv = ["construct", "--family", "mrt:5,2", "--out", str(path)]
        assert run(argv) == ExitCode.OK
        assert run(["analyze", "--in", str(path), "--claws"] + SERIAL) == ExitCode.OK
        assert json.loads(capsys.readouterr().out)["claws"]["max_claw_size"] == 2

    def test_graph_file(self, tmp_path, capsys):
        path = tmp_path / "g.txt"
        argv = ["construct", "--family", "gnt:9,2", "--out", str(path)]
        assert run(argv) == ExitCode.OK
        capsys.readouterr()
        assert run(["analyze", "--in", str(path)]) == ExitCode.OK
        data = json.loads(capsys.readouterr().out)
        assert data["claws"] is None
        graph = data["graph"]
        assert (graph["n"], graph["edges"]) == (9, 16)
        assert graph["component_sizes"] == [5, 4]
        assert (graph["max_stable_set"], graph["max_clique"]) == (2, 5)
        assert graph["largest_induced_forest"] == len(graph["forest_witness"]) == 4

    def test_graph_table(self, tmp_path, capsys):
        path = tmp_path / "g.txt"
        path.write_text("GRAPH 3\n111\n")
        assert run(["analyze", "--in", str(path), "--format", "table"]) == ExitCode.OK
        lines = capsys.readouterr().out.splitlines()
        assert lines[0].split() == ["quantity", "value"]
        rows = [line.split() for line in lines]
        assert ["largest", "induced", "forest", "2"] in rows
        assert ["max", "clique", "3"] in rows

    def test_validate_reports_exchange_failure(self, tmp_path, capsys):
        path = tmp_path / "bad-bases.txt"
        path.write_text("BASES 4 2\n0 1\n2 3\n")
        argv = ["analyze", "--in", str(path), "--validate", "--claws"]
        assert run(argv) == ExitCode.OK
        data = json.loads(capsys.readouterr().out)
        assert data["validation"]["valid"] is False
        assert data["validation"]["violations"][0].startswith("exchange violated")
        assert data["claws"] is None

    def test_exchange_failure_without_validate(self, tmp_path):
        path = tmp_path / "bad-bases.txt"
        path.write_text("BASES 4 2\n0 1\n2 3\n")
        assert run(["analyze", "--in", str(path)]) == ExitCode.USAGE

    def test_missing_file(self, tmp_path):
        argv = ["analyze", "--in", str(tmp_path / "missing.txt")]
        assert run(argv) == ExitCode.USAGE

    def test_malformed_file(self, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_text("MATROID 3\n")
        assert run(["analyze", "--in", str(path)]) == ExitCode.USAGE


class TestTables:
    """Test the tables command"""

    def test_f_json(self, capsys):
        assert run(["tables", "f"]) == ExitCode.OK
        rows = json.loads(capsys.readouterr().out)
        assert rows[6]["t=3"] == 9
        assert rows[3]["t=2"] == 4

    def test_f_table(self, capsys):
        argv = ["tables", "f", "--r-max", "3", "--t-max", "2", "--format", "table"]
        assert run(argv) == ExitCode.OK
        lines = capsys.readouterr().out.splitlines()
        assert lines[0].split() == ["r", "t=1", "t=2"]
        assert lines[-1].split() == ["3", "7", "4"]

    def test_g_csv(self, capsys):
        argv = ["tables", "g", "--n-max", "4", "--t-max", "1", "--format", "csv"]
        assert run(argv) == ExitCode.OK
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "n,t,g,turan,differs"
        assert "2,1,0,1,yes" in lines

    def test_negative_bound(self):
        assert run(["tables", "f", "--r-max", "-1"]) == ExitCode.USAGE


class TestVerify:
    """Test the verify and property commands"""

    def test_graph_campaign(self, tmp_path, capsys):
        argv = ["verify", "graph", "--n", "6", "--t", "2"] + SERIAL
        assert run(argv + ["--artifacts-dir", str(tmp_path)]) == ExitCode.OK
        data = json.loads(capsys.readouterr().out)
        assert data["verdict"] == "matched"
        assert data["threshold"] == 6

    def test_table_format(self, tmp_path, capsys):
        argv = ["verify", "trianglefree", "--r", "3", "--t", "1", "--format", "table"]
        assert run(argv + SERIAL + ["--artifacts-dir", str(tmp_path)]) == ExitCode.OK
        out = capsys.readouterr().out
        assert "verdict         matched" in out
        assert "t*2^(r/t-1)" in out

    def test_graph_table(self, tmp_path, capsys):
        argv = ["verify", "graph", "--n", "7", "--t", "2", "--format", "table"]
        assert run(argv + SERIAL + ["--artifacts-dir", str(tmp_path)]) == ExitCode.OK
        out = capsys.readouterr().out
        assert "observed min    9" in out
        assert "components 4+3" in out

    def test_missing_parameter(self):
        assert run(["verify", "bound", "--r", "3", "--t", "2"]) == ExitCode.USAGE

    def test_suite_needs_plan(self):
        assert run(["verify", "suite"]) == ExitCode.USAGE

    def test_suite(self, tmp_path, capsys):
        plan = tmp_path / "plan.yaml"
        plan.write_text("name: tiny\ncampaigns:\n  - {campaign: graph, n: 5, t: 2}\n")
        argv = ["verify", "suite", "--plan", str(plan)] + SERIAL
        assert run(argv + ["--artifacts-dir", str(tmp_path)]) == ExitCode.OK
        data = json.loads(capsys.readouterr().out)
        assert data["plan"] == "tiny"
        assert len(data["reports"]) == 1

    def test_capacity_is_incomplete(self, tmp_path, capsys):
        argv = ["verify", "bound", "--class", "binary", "--r", "6", "--t", "1"]
        argv += SERIAL + ["--artifacts-dir", str(tmp_path)]
        assert run(argv) == ExitCode.INCOMPLETE
        assert json.loads(capsys.readouterr().out)["complete"] is False

    def test_property_budget(self, tmp_path):
        argv = ["property", "contract", "--trials", "50", "--budget-seconds", "1e-9"]
        argv += SERIAL + ["--artifacts-dir", str(tmp_path)]
        assert run(argv) == ExitCode.INCOMPLETE


class TestEnumerate:
    """Test the enumerate command"""

    def test_spool(self, tmp_path, capsys):
        argv = ["enumerate", "--class", "binary", "--r", "3", "--n-max", "7"]
        assert run(argv + ["--out", str(tmp_path)] + SERIAL) == ExitCode.OK
        manifest = json.loads(capsys.readouterr().out)
        assert manifest["count"] == 6
        assert (tmp_path / manifest["records_file"]).exists()

    def test_capacity(self, tmp_path):
        argv = ["enumerate", "--class", "binary", "--r", "7", "--n-max", "8"]
        assert run(argv + ["--out", str(tmp_path)]) == ExitCode.INCOMPLETE


class TestImports:
    """Test that modules import cleanly in a fresh interpreter"""

    @pytest.mark.parametrize(
        "module",
        [
            "clawfree",
            "clawfree.cli",
            "clawfree.reporting.render",
            "clawfree.matroids.operations",
        ],
    )
    def test_fresh_import(self, module):
        src = Path(clawfree.__file__).resolve().parents[1]
        env = dict(os.environ, PYTHONPATH=str(src))
        result = subprocess.run(
            [sys.executable, "-c", f"import {module}"],
            env=env,
            capture_output=True,
            text=True,
        )
        assert result.returncode == 0, result.stderr


if __name__ == "__main__":
    pytest.main([__file__])
