from __future__ import annotations

import json

from ftmd import decomposition_to_json, figure2_decomposition, format_edge_list
from ftmd import cycle_graph, complete_graph, path_graph
from ftmd.cli import main


def write_graph(tmp_path, g, name="g.edgelist"):
    path = tmp_path / name
    path.write_text(format_edge_list(g))
    return str(path)


def write_json(tmp_path, payload, name="spec.json"):
    path = tmp_path / name
    path.write_text(json.dumps(payload))
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


class TestCompute:
    def test_fdim_cycle(self, tmp_path, capsys):
        path = write_graph(tmp_path, cycle_graph(8))
        code, out = run(capsys, "compute", "--input", path, "--invariant", "fdim",
                        "--output", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["value"] == 3
        assert payload["witness"] == [0, 1, 2]
        assert payload["method"] == "oracle"

    def test_fdim_star_with_anchor(self, tmp_path, capsys):
        path = write_graph(tmp_path, path_graph(5))
        code, out = run(capsys, "compute", "--input", path, "--invariant", "fdim-star",
                        "--at", "2", "--output", "json")
        assert code == 0
        assert json.loads(out)["value"] == 2

    def test_mdim_complete(self, tmp_path, capsys):
        path = write_graph(tmp_path, complete_graph(4))
        code, out = run(capsys, "compute", "--input", path, "--invariant", "mdim",
                        "--output", "json")
        assert code == 0
        assert json.loads(out)["value"] == 3

    def test_theta(self, tmp_path, capsys):
        path = write_graph(tmp_path, cycle_graph(8))
        code, out = run(capsys, "compute", "--input", path, "--invariant", "theta",
                        "--at", "0,4", "--output", "json")
        assert code == 0
        assert json.loads(out)["value"] == 1

    def test_json_graph_input(self, tmp_path, capsys):
        path = write_json(tmp_path, {"n": 3, "edges": [[0, 1], [1, 2]]})
        code, out = run(capsys, "compute", "--input", path, "--format", "json",
                        "--invariant", "fdim", "--output", "json")
        assert code == 0
        assert json.loads(out)["value"] == 2

    def test_missing_anchor_flag(self, tmp_path, capsys):
        path = write_graph(tmp_path, path_graph(5))
        code, _ = run(capsys, "compute", "--input", path, "--invariant", "fdim-star")
        assert code == 1

    def test_cap_exceeded_exit_code(self, tmp_path, capsys):
        path = write_graph(tmp_path, cycle_graph(18))
        code, _ = run(capsys, "compute", "--input", path, "--invariant", "fdim")
        assert code == 2

    def test_env_cap_override(self, tmp_path, capsys, monkeypatch):
        monkeypatch.setenv("FTMD_ORACLE_CAP", "18")
        path = write_graph(tmp_path, cycle_graph(18))
        code, out = run(capsys, "compute", "--input", path, "--invariant", "fdim",
                        "--output", "json")
        assert code == 0
        assert json.loads(out)["value"] == 3

    def test_malformed_input(self, tmp_path, capsys):
        bad = tmp_path / "bad.edgelist"
        bad.write_text("3 5\n0 1\n")
        code, _ = run(capsys, "compute", "--input", str(bad), "--invariant", "fdim")
        assert code == 1

    def test_usage_error_is_exit_one(self, capsys):
        code, _ = run(capsys, "compute", "--invariant", "not-a-thing", "--input", "x")
        assert code == 1


class TestCompose:
    def test_figure2_relaxed_cor3(self, tmp_path, capsys):
        path = write_json(tmp_path, decomposition_to_json(figure2_decomposition()))
        code, out = run(capsys, "compose", "--input", path, "--theorem", "cor3",
                        "--relaxed-cor3", "--oracle-cap", "20", "--output", "json")
        assert code == 0
        assert json.loads(out)["value"] == 11

    def test_rooted_cor5(self, tmp_path, capsys):
        spec = {
            "base": {"n": 3, "edges": [[0, 1], [1, 2]]},
            "family": {"graph": {"n": 5, "edges": [[0, 1], [1, 2], [2, 3], [3, 4], [0, 4]]},
                       "root": 0, "copies": "per-base-vertex"},
        }
        path = write_json(tmp_path, spec)
        code, out = run(capsys, "compose", "--input", path, "--theorem", "cor5",
                        "--output", "json")
        assert code == 0
        assert json.loads(out)["value"] == 6

    def test_precondition_failure_exit_code(self, tmp_path, capsys):
        dec = {"pieces": [
            {"n": 3, "edges": [[0, 1], [1, 2], [0, 2]], "anchors": {"0": "x"}},
            {"n": 3, "edges": [[0, 1], [1, 2], [0, 2]], "anchors": {"0": "x"}},
        ]}
        path = write_json(tmp_path, dec)
        code, out = run(capsys, "compose", "--input", path, "--theorem", "thm2",
                        "--output", "json")
        assert code == 3
        payload = json.loads(out)
        assert payload["value"] is None
        assert "k >= 3" in payload["failed"]

    def test_malformed_spec(self, tmp_path, capsys):
        path = write_json(tmp_path, {"pieces": "nope"})
        code, _ = run(capsys, "compose", "--input", path, "--theorem", "thm2")
        assert code == 1


class TestVerify:
    def test_figure2(self, tmp_path, capsys):
        path = write_json(tmp_path, decomposition_to_json(figure2_decomposition()))
        code, out = run(capsys, "verify", "--input", path, "--theorem", "cor3",
                        "--relaxed-cor3", "--oracle-cap", "20", "--output", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["ok"] and payload["formula"] == payload["oracle"] == 11

    def test_batch_thm2(self, capsys):
        code, out = run(capsys, "verify", "--theorem", "thm2", "--count", "8",
                        "--seed", "3", "--output", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["passed"] == 8 and payload["failed"] == 0

    def test_batch_prop1(self, capsys):
        code, out = run(capsys, "verify", "--theorem", "prop1", "--count", "10",
                        "--seed", "5", "--output", "json")
        assert code == 0
        assert json.loads(out)["failed"] == 0

    def test_batch_deterministic_output(self, capsys):
        _, first = run(capsys, "verify", "--theorem", "thm2", "--count", "5",
                       "--seed", "9", "--output", "json")
        _, second = run(capsys, "verify", "--theorem", "thm2", "--count", "5",
                        "--seed", "9", "--output", "json")
        assert first == second

    def test_mismatch_exit_code(self, tmp_path, capsys, monkeypatch):
        # force a wrong oracle answer to exercise the finding path
        import ftmd.compose as compose_mod
        from ftmd.resolve import FtReport

        real = compose_mod.fdim

        def lying_fdim(g, cap=None):
            report = real(g, cap=cap)
            return FtReport(report.value + 1, report.witness, report.method)

        monkeypatch.setattr(compose_mod, "fdim", lying_fdim)
        path = write_json(tmp_path, decomposition_to_json(figure2_decomposition()))
        code, out = run(capsys, "verify", "--input", path, "--theorem", "thm2",
                        "--oracle-cap", "20", "--output", "json")
        assert code == 4
        assert json.loads(out)["ok"] is False

    def test_cap_exit_code(self, tmp_path, capsys):
        path = write_json(tmp_path, decomposition_to_json(figure2_decomposition()))
        code, _ = run(capsys, "verify", "--input", path, "--theorem", "thm2",
                      "--oracle-cap", "16")
        assert code == 2


class TestGenerate:
    def test_cycle_edgelist(self, capsys):
        code, out = run(capsys, "generate", "cycle", "8")
        assert code == 0
        assert out.splitlines()[0] == "8 8"

    def test_figure2_json(self, capsys):
        code, out = run(capsys, "generate", "figure2")
        assert code == 0
        assert len(json.loads(out)["pieces"]) == 5

    def test_round_trips_into_compute(self, tmp_path, capsys):
        code, out = run(capsys, "generate", "star", "4")
        path = tmp_path / "s4.edgelist"
        path.write_text(out)
        code, out = run(capsys, "compute", "--input", str(path), "--invariant", "fdim",
                        "--output", "json")
        assert code == 0
        assert json.loads(out)["value"] == 4

    def test_bad_parameter(self, capsys):
        code, _ = run(capsys, "generate", "cycle", "2")
        assert code == 1


class TestJsonRoundTrip:
    def test_reports_parse_back(self, tmp_path, capsys):
        path = write_graph(tmp_path, cycle_graph(8))
        _, out = run(capsys, "compute", "--input", path, "--invariant", "fdim",
                     "--output", "json")
        payload = json.loads(out)
        assert json.loads(json.dumps(payload)) == payload

    def test_same_config_byte_identical(self, tmp_path, capsys):
        path = write_graph(tmp_path, cycle_graph(8))
        _, first = run(capsys, "compute", "--input", path, "--invariant", "fdim",
                       "--output", "json")
        _, second = run(capsys, "compute", "--input", path, "--invariant", "fdim",
                        "--output", "json")
        assert first == second
