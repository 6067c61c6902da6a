import csv
import json

import pytest

from fthub import cli


def run_cli(args):
    return cli.main(args)


class TestTable2:
    def test_writes_and_passes(self, tmp_path):
        out = tmp_path / "table.csv"
        assert run_cli(["table2", "--out", str(out)]) == 0
        rows = list(csv.DictReader(out.open()))
        w_rows = [r for r in rows if r["quantity"] == "w_tile"]
        assert len(w_rows) == 16
        assert all(abs(int(r["diff"])) <= 1 for r in rows)
        gate_rows = [r for r in rows if r["quantity"] != "w_tile"]
        assert all(int(r["diff"]) == 0 for r in gate_rows)

    def test_spot_values(self, tmp_path):
        out = tmp_path / "table.csv"
        run_cli(["table2", "--out", str(out)])
        rows = list(csv.DictReader(out.open()))
        by_key = {(r["model"], r["quantity"], r["alpha"], r["N"]): r for r in rows}
        assert by_key[("hubbard", "n_rot", "N/4-1", "200")]["computed"] == "144"
        assert by_key[("hubbard", "n_t", "N/4-1", "200")]["computed"] == "6704"
        assert by_key[("extended_hubbard", "n_rot", "0", "288")]["computed"] == "3456"

    def test_json_format(self, tmp_path):
        out = tmp_path / "table.json"
        assert run_cli(["table2", "--out", str(out), "--format", "json"]) == 0
        rows = json.loads(out.read_text())
        assert any(r["quantity"] == "w_tile" for r in rows)

    def test_deterministic(self, tmp_path):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        run_cli(["table2", "--out", str(a)])
        run_cli(["table2", "--out", str(b)])
        assert a.read_bytes() == b.read_bytes()


class TestQpe:
    def test_sweep_columns(self, tmp_path):
        out = tmp_path / "qpe.csv"
        assert run_cli(["qpe", "--L", "6", "--out", str(out)]) == 0
        rows = list(csv.DictReader(out.open()))
        methods = {r["method"] for r in rows}
        assert methods == {"trotter", "qubitized"}
        assert {r["eps_rule"] for r in rows} == {"fixed", "extensive"}

    def test_empty_sweep_header_only(self, tmp_path):
        out = tmp_path / "qpe.csv"
        assert run_cli(["qpe", "--L", "2", "--out", str(out)]) == 0
        lines = out.read_text().splitlines()
        assert len(lines) == 1
        assert lines[0].startswith("method,")


class TestSmallCommands:
    def test_lattice_json(self, tmp_path):
        out = tmp_path / "lat.json"
        assert run_cli(["lattice", "--L", "4", "--out", str(out)]) == 0
        doc = json.loads(out.read_text())
        assert doc["kind"] == "periodic_hex"
        assert len(doc["sites"]) == 32

    def test_fragment_lattice(self, tmp_path):
        out = tmp_path / "frag.json"
        code = run_cli(["lattice", "--lattice", "hex_fragment",
                        "--cells", "[[0,0]]", "--out", str(out)])
        assert code == 0
        assert len(json.loads(out.read_text())["sites"]) == 6

    def test_cover_json(self, tmp_path):
        out = tmp_path / "cover.json"
        assert run_cli(["cover", "--L", "4", "--out", str(out)]) == 0
        doc = json.loads(out.read_text())
        assert [s["color"] for s in doc["sections"]] == ["blue", "red", "gold"]

    def test_bounds_json(self, tmp_path):
        out = tmp_path / "bounds.json"
        assert run_cli(["bounds", "--L", "4", "--model", "hubbard",
                        "--out", str(out)]) == 0
        doc = json.loads(out.read_text())
        assert doc["w_tile"] == pytest.approx(doc["w_so2"] + doc["w_h"])

    def test_gates_json(self, tmp_path):
        out = tmp_path / "gates.json"
        assert run_cli(["gates", "--L", "4", "--model", "extended_hubbard",
                        "--alpha", "N-1", "--out", str(out)]) == 0
        doc = json.loads(out.read_text())
        assert doc["n_rot"] == 72
        assert doc["n_t"] == 1808

    def test_config_file(self, tmp_path):
        cfg = tmp_path / "run.cfg"
        cfg.write_text("L=6\nmodel=extended_hubbard\n")
        out = tmp_path / "bounds.json"
        assert run_cli(["bounds", "--config", str(cfg), "--out", str(out)]) == 0
        doc = json.loads(out.read_text())
        # N = 72 extended run
        assert doc["w_tile"] == pytest.approx(2752.2, abs=0.1)

    def test_flags_override_config(self, tmp_path):
        cfg = tmp_path / "run.cfg"
        cfg.write_text("L=6\n")
        out = tmp_path / "lat.json"
        assert run_cli(["lattice", "--config", str(cfg), "--L", "8",
                        "--out", str(out)]) == 0
        assert len(json.loads(out.read_text())["sites"]) == 128

    def test_bad_config_exit_2(self, tmp_path):
        cfg = tmp_path / "broken.cfg"
        cfg.write_text("no equals sign here\n")
        assert run_cli(["bounds", "--config", str(cfg)]) == 2

    def test_invalid_model_lattice_combo_exit_2(self, tmp_path):
        out = tmp_path / "x.json"
        code = run_cli(["bounds", "--lattice", "hex_fragment",
                        "--cells", "[[0,0]]", "--model", "ppp",
                        "--out", str(out)])
        assert code == 2


class TestVerify:
    def test_fast_passes(self, tmp_path):
        out = tmp_path / "verify.json"
        assert run_cli(["verify", "--level", "fast", "--out", str(out)]) == 0
        doc = json.loads(out.read_text())
        assert doc["all_pass"] is True
        assert doc["n_checks"] > 10

    def test_fault_injection_fails(self, tmp_path, monkeypatch):
        # corrupting a bound constant must surface as a named failing check
        import fthub.oracle as oracle
        real = oracle.verify_ff_norm

        def corrupted(lattice, tau=1.0, tol=1e-8):
            report = real(lattice, tau, tol)
            report["bound"] = report["bound"] * 0.5
            report["pass"] = abs(report["exact"] - report["bound"]) <= 1e-8
            return report

        monkeypatch.setattr(oracle, "verify_ff_norm", corrupted)
        out = tmp_path / "verify.json"
        assert run_cli(["verify", "--level", "fast", "--out", str(out)]) == 1
        doc = json.loads(out.read_text())
        failing = [r["check"] for r in doc["reports"] if not r["pass"]]
        assert "ff_norm" in failing
