"""Command-line surface: exit codes, artifacts, reproducibility."""
import json
import os
import shutil
import subprocess
import sys

import pytest

from crosslab.cli import main
from crosslab.graphs import complete_graph, path_graph, to_graph6
from crosslab.harness import read_table_csv, table_from_json
from crosslab.solver import DrawingCertificate, verify_certificate

K4 = to_graph6(complete_graph(4))
K5 = to_graph6(complete_graph(5))
K6 = to_graph6(complete_graph(6))


def read_json(path):
    with open(path) as fh:
        return json.load(fh)


# -- cr -------------------------------------------------------------------


def test_cr_planar_graph(tmp_path, capsys):
    out = tmp_path / "cert.json"
    assert main(["cr", to_graph6(path_graph(5)), "--cert-out", str(out)]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "cr=0"
    doc = read_json(out)
    cert = DrawingCertificate.from_json(json.dumps(doc["certificate"]))
    assert verify_certificate(cert) and cert.crossing_count == 0
    assert doc["meta"]["command"] == "cr"


def test_cr_k5(tmp_path, capsys):
    out = tmp_path / "cert.json"
    assert main(["cr", K5, "--cert-out", str(out)]) == 0
    assert "cr=1" in capsys.readouterr().out
    cert = DrawingCertificate.from_json(
        json.dumps(read_json(out)["certificate"]))
    assert cert.crossing_count == 1 and verify_certificate(cert)


def test_cr_budget_exhausted_exits_2(tmp_path, capsys):
    out = tmp_path / "cert.json"
    assert main(["cr", K6, "--budget", "10", "--cert-out", str(out)]) == 2
    text = capsys.readouterr().out
    lb = int(text.split("cr>=")[1].splitlines()[0])
    ub = int(text.split("cr<=")[1].splitlines()[0])
    assert lb <= 3 <= ub
    cert = DrawingCertificate.from_json(
        json.dumps(read_json(out)["certificate"]))
    assert verify_certificate(cert) and cert.crossing_count == ub


def test_cr_rejects_garbage(capsys):
    assert main(["cr", "\x01not-graph6"]) == 1
    assert main(["cr"]) == 1   # missing positional
    assert main(["cr", K4, "--budget", "0"]) == 1


def test_usage_errors_exit_1(capsys):
    assert main([]) == 1
    assert main(["no-such-command"]) == 1
    assert main(["cr", K4, "--frobnicate"]) == 1


# -- kappa / audit ---------------------------------------------------------


def test_kappa_table_csv_and_json(tmp_path, capsys):
    csv = tmp_path / "t.csv"
    js = tmp_path / "t.json"
    assert main(["kappa", "--class", "all", "--n-max", "5",
                 "--out", str(csv), "--json-out", str(js)]) == 0
    assert "rows=25 exact=25" in capsys.readouterr().out
    rows = read_table_csv(csv)
    assert len(rows) == 25 and all(r.exact for r in rows)
    recs = table_from_json(js.read_text())
    assert [(r.n, r.e, r.kappa) for r in recs] == \
        [(r.n, r.e, r.kappa) for r in rows]
    assert all(verify_certificate(r.certificate) for r in recs)
    # clean tables audit clean, through both formats
    for table in (csv, js):
        assert main(["audit", "--table", str(table)]) == 0


def test_kappa_single_point(tmp_path, capsys):
    csv = tmp_path / "row.csv"
    assert main(["kappa", "--class", "bipartite", "--n", "6", "--e", "9",
                 "--out", str(csv)]) == 0
    rows = read_table_csv(csv)
    assert len(rows) == 1
    assert (rows[0].n, rows[0].e, rows[0].kappa, rows[0].exact) == (6, 9, 1, True)


def test_kappa_missing_options(tmp_path):
    assert main(["kappa", "--class", "all", "--n", "4"]) == 1          # no --out
    assert main(["kappa", "--class", "all", "--out", str(tmp_path / "x")]) == 1
    assert main(["kappa", "--class", "all", "--n", "4", "--workers", "0",
                 "--out", str(tmp_path / "x")]) == 1


def test_audit_flags_violations(tmp_path, capsys):
    bad = tmp_path / "bad.csv"
    bad.write_text("# generated-at: TEST\n"
                   "class,n,e,kappa,exact,witness_graph6\n"
                   "all,10,41,10,true,\n")
    report = tmp_path / "report.json"
    assert main(["audit", "--table", str(bad), "--out", str(report)]) == 3
    assert "violations=1" in capsys.readouterr().out
    doc = read_json(report)
    assert doc["crossing_lemma_violations"][0][:3] == [10, 41, 10]
    assert doc["subadditivity_violations"] == []


# -- gamma ------------------------------------------------------------------


def test_gamma_series_json(tmp_path, capsys):
    out = tmp_path / "g.json"
    assert main(["gamma", "--class", "all", "--a", "5/2", "--n-list", "6",
                 "--out", str(out)]) == 0
    doc = read_json(out)
    assert doc["a"] == "5/2"
    assert doc["points"] == [[6, "1/2"]]
    assert doc["exact"] == [True]


def test_gamma_range_form(tmp_path):
    out = tmp_path / "g.json"
    assert main(["gamma", "--class", "all", "--a", "1", "--n-min", "3",
                 "--n-max", "6", "--out", str(out)]) == 0
    doc = read_json(out)
    assert [v for _, v in doc["points"]] == ["0"] * 4


def test_gamma_empty_class_is_usage_error(tmp_path, capsys):
    # density 5/2 is unreachable on 5 vertices (needs 13 of max 10 edges)
    assert main(["gamma", "--class", "all", "--a", "5/2", "--n-list", "5",
                 "--out", str(tmp_path / "g.json")]) == 1
    assert main(["gamma", "--class", "all", "--a", "x",
                 "--out", str(tmp_path / "g.json")]) == 1


# -- sample -----------------------------------------------------------------


def test_sample_requires_seed(tmp_path):
    assert main(["sample", "--graph", K5, "--p", "1/2", "--trials", "100",
                 "--out", str(tmp_path / "s.json")]) == 1


def test_sample_stats_payload(tmp_path):
    out = tmp_path / "s.json"
    assert main(["sample", "--graph", K5, "--p", "1", "--trials", "50",
                 "--seed", "7", "--out", str(out)]) == 0
    doc = read_json(out)
    stats = doc["stats"]
    assert stats["nu_mean"] == 5.0
    assert stats["eta_mean"] == 10.0
    assert stats["xi_mean"] == 1.0 and stats["xi_var"] == 0.0
    assert doc["meta"]["seed"] == 7


def test_sample_analytic_mode(tmp_path):
    out = tmp_path / "s.json"
    assert main(["sample", "--graph", K6, "--p", "1/2", "--analytic",
                 "--out", str(out)]) == 0
    doc = read_json(out)
    assert doc["expected"] == {"nu": "3", "eta": "15/4", "xi": "3/16"}
    assert doc["crossings"] == 3
    assert doc["meta"]["seed"] is None


def test_sample_from_certificate_file(tmp_path):
    cert_path = tmp_path / "cert.json"
    assert main(["cr", K5, "--cert-out", str(cert_path)]) == 0
    out = tmp_path / "s.json"
    assert main(["sample", "--certificate", str(cert_path), "--p", "1/3",
                 "--analytic", "--out", str(out)]) == 0
    assert read_json(out)["expected"]["xi"] == "1/81"


# -- blowup -----------------------------------------------------------------


def test_blowup_artifact(tmp_path, capsys):
    out = tmp_path / "b.json"
    assert main(["blowup", "--graph", K5, "--clones", "2", "--copies", "3",
                 "--out", str(out)]) == 0
    assert "n=30 e=120" in capsys.readouterr().out
    doc = read_json(out)
    assert doc["input"] == {"n": 5, "e": 10, "crossings": 1}
    assert "split" not in doc
    result = doc["result"]
    assert (result["n"], result["e"]) == (30, 120)
    assert result["counted"] == 213 and result["bound"] == 1488
    assert result["verified"] is True
    cert = DrawingCertificate.from_json(json.dumps(doc["certificate"]))
    assert verify_certificate(cert) and cert.crossing_count == 213


def test_blowup_with_split_stage(tmp_path):
    out = tmp_path / "b.json"
    assert main(["blowup", "--graph", K5, "--t", "2", "--clones", "2",
                 "--out", str(out)]) == 0
    doc = read_json(out)
    assert doc["split"]["t"] == 2 and doc["split"]["n"] == 10
    result = doc["result"]
    assert result["verified"] and result["counted"] <= result["bound"]


# -- config files -------------------------------------------------------------


def test_config_file_and_override(tmp_path):
    csv = tmp_path / "row.csv"
    cfg = tmp_path / "run.cfg"
    cfg.write_text("# one kappa point\n"
                   "class = bipartite\n"
                   "n = 6\n"
                   "e = 9\n"
                   f"out = {csv}\n")
    assert main(["kappa", "--config", str(cfg)]) == 0
    assert read_table_csv(csv)[0].kappa == 1
    # flags beat the file: one edge fewer admits a planar witness
    assert main(["kappa", "--config", str(cfg), "--e", "8"]) == 0
    row = read_table_csv(csv)[0]
    assert row.e == 8 and row.kappa == 0


def test_config_rejects_unknown_keys(tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("frobnicate = yes\n")
    assert main(["kappa", "--config", str(cfg)]) == 1
    cfg.write_text("no equals sign here\n")
    assert main(["kappa", "--config", str(cfg)]) == 1


# -- reproducibility ------------------------------------------------------------


def _run_cli(args, hashseed):
    env = dict(os.environ, PYTHONHASHSEED=hashseed)
    proc = subprocess.run([sys.executable, "-m", "crosslab.cli", *args],
                          capture_output=True, text=True, env=env,
                          cwd=os.path.dirname(__file__))
    return proc


def test_sample_rerun_is_byte_identical(tmp_path):
    out = tmp_path / "s.json"
    args = ["sample", "--graph", K6, "--p", "0.3", "--trials", "2000",
            "--seed", "99", "--out", str(out)]
    first = _run_cli(args, "0")
    assert first.returncode == 0, first.stderr
    blob1 = out.read_bytes()
    second = _run_cli(args, "1")
    assert second.returncode == 0, second.stderr
    assert out.read_bytes() == blob1


def test_kappa_rerun_identical_below_timestamp(tmp_path):
    csv = tmp_path / "t.csv"
    args = ["kappa", "--class", "all", "--n-max", "4", "--out", str(csv)]
    assert _run_cli(args, "0").returncode == 0
    first = csv.read_text().splitlines()
    assert _run_cli(args, "42").returncode == 0
    second = csv.read_text().splitlines()
    assert first[0].startswith("# generated-at:")
    assert second[0].startswith("# generated-at:")
    assert first[1:] == second[1:]


@pytest.mark.skipif(shutil.which("crosslab") is None,
                    reason="console script not installed")
def test_console_script_entry_point(tmp_path):
    proc = subprocess.run(["crosslab", "cr", K4,
                           "--cert-out", str(tmp_path / "c.json")],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[0] == "cr=0"
