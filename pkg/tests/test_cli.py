"""Command line behavior: logs, manifests, exit codes, verification."""

import io
import json
import shutil
import subprocess
import sys

import pytest

from fcspread import cli, search
from fcspread.cli import EXIT_FINDINGS, EXIT_OK, EXIT_RUNTIME, EXIT_USAGE


def _run(tmp_path, argv, name="out.jsonl"):
    out = tmp_path / name
    code = cli.run(argv + ["--output", str(out)])
    lines = out.read_text().splitlines()
    header = json.loads(lines[0])
    records = [json.loads(line) for line in lines[1:]]
    manifest = json.loads((tmp_path / (name + ".manifest.json")).read_text())
    return code, header, records, manifest, out


def _verify(path):
    return cli.run(["verify-log", str(path)])


# ---------------------------------------------------------------------------
# search


def test_search_fc_log_manifest_and_verify(tmp_path):
    code, header, records, manifest, out = _run(
        tmp_path,
        ["search", "fc", "--max-bits", "14", "--threads", "1", "--chunks", "16"],
    )
    assert code == EXIT_OK
    assert header["format"] == "fcspread-result-log"
    assert header["version"] == 1
    assert header["subcommand"] == "search fc"
    assert header["config"]["mode"] == "fermat-catalan"
    assert header["config"]["max_bits"] == 14
    cfg = search.SearchConfig.from_dict(header["config"])
    assert header["config_digest"] == cfg.digest()
    assert [tuple(r["values"]) for r in records] == [
        (1, 8, 9), (32, 49, 81), (169, 343, 512),
        (128, 4913, 5041), (243, 14641, 14884),
    ]
    assert manifest["format"] == "fcspread-manifest"
    assert manifest["subcommand"] == "search fc"
    assert manifest["config_digest"] == header["config_digest"]
    assert manifest["totals"] == {
        "chunks": 16, "candidates": manifest["totals"]["candidates"],
        "records": 5, "errors": 0,
    }
    assert manifest["totals"]["candidates"] >= 5
    assert manifest["exit_code"] == EXIT_OK
    assert manifest["output"] == str(out)
    assert manifest["started"] <= manifest["finished"]
    assert _verify(out) == EXIT_OK


def test_search_log_byte_deterministic(tmp_path):
    _, _, _, _, a = _run(
        tmp_path,
        ["search", "fc", "--max-bits", "13", "--threads", "1", "--chunks", "16"],
        name="a.jsonl",
    )
    _, _, _, _, b = _run(
        tmp_path,
        ["search", "fc", "--max-bits", "13", "--threads", "2", "--chunks", "7"],
        name="b.jsonl",
    )
    assert a.read_bytes() == b.read_bytes()


def test_search_modes_with_expectations(tmp_path):
    code, _, records, _, out = _run(
        tmp_path,
        ["search", "nonmaxgcd3", "--max-bits", "24", "--threads", "1"],
        name="n3.jsonl",
    )
    assert code == EXIT_OK
    assert [r["witness"] for r in records] == [
        [16, 16, 17], [64, 64, 65], [112, 112, 113],
    ]
    assert _verify(out) == EXIT_OK

    code, _, records, _, out = _run(
        tmp_path,
        ["search", "gbtz", "--max-bits", "16", "--threads", "1"],
        name="gb.jsonl",
    )
    assert code == EXIT_OK and records == []
    assert _verify(out) == EXIT_OK

    code, _, records, _, out = _run(
        tmp_path,
        ["search", "pillai", "--difference", "1", "--max-bits", "10",
         "--f-bound", "9/10", "--threads", "1"],
        name="pi.jsonl",
    )
    assert code == EXIT_OK
    assert [(r["x"], r["z"]) for r in records] == [(8, 9)]
    assert _verify(out) == EXIT_OK

    code, _, records, _, out = _run(
        tmp_path,
        ["search", "survey", "--max-bits", "16", "--n-range", "3..5",
         "--m-range", "3..5", "--degree", "2..4", "--threads", "1"],
        name="sv.jsonl",
    )
    assert code == EXIT_OK
    nonzero = {tuple(r["cell"]): r["count"] for r in records if r["count"]}
    assert nonzero == {(3, 4, 3): 1, (4, 3, 3): 1, (5, 3, 3): 1}
    assert _verify(out) == EXIT_OK

    code, _, records, _, out = _run(
        tmp_path,
        ["search", "maxgcd-spread1", "--max-bits", "20", "--degree", "5..6",
         "--threads", "1"],
        name="mg.jsonl",
    )
    assert code == EXIT_OK
    assert records and all(r["standard"] for r in records)
    assert _verify(out) == EXIT_OK


def test_search_checkpoint_resume_reproduces_log(tmp_path):
    fresh = _run(
        tmp_path,
        ["search", "fc", "--max-bits", "14", "--threads", "1", "--chunks", "16"],
        name="fresh.jsonl",
    )[4]
    ckpt = tmp_path / "run.ckpt"
    cfg = search.make_config("fermat-catalan", max_bits=14)
    partial = search.run_chunked(
        cfg, n_chunks=16, checkpoint_path=str(ckpt), max_chunks=3
    )
    assert not partial.completed
    code, _, _, manifest, resumed = _run(
        tmp_path,
        ["search", "fc", "--max-bits", "14", "--threads", "1",
         "--checkpoint", str(ckpt), "--resume"],
        name="resumed.jsonl",
    )
    assert code == EXIT_OK
    assert manifest["checkpoint"] == str(ckpt)
    assert manifest["totals"]["chunks"] == 13  # 16 planned minus 3 done
    assert resumed.read_bytes() == fresh.read_bytes()


def test_search_checkpoint_digest_mismatch(tmp_path):
    ckpt = tmp_path / "run.ckpt"
    cfg = search.make_config("fermat-catalan", max_bits=13)
    search.run_chunked(cfg, n_chunks=4, checkpoint_path=str(ckpt), max_chunks=1)
    code = cli.run(
        ["search", "fc", "--max-bits", "14", "--threads", "1",
         "--checkpoint", str(ckpt), "--resume",
         "--output", str(tmp_path / "x.jsonl")]
    )
    assert code == EXIT_USAGE


def test_search_usage_errors(tmp_path):
    out = str(tmp_path / "x.jsonl")
    assert cli.run(["search", "fc", "--max-bits", "0", "--output", out]) == EXIT_USAGE
    assert cli.run(["search", "pillai", "--output", out]) == EXIT_USAGE
    assert cli.run(["search", "survey", "--max-bits", "12", "--output", out]) == EXIT_USAGE
    assert cli.run(["search", "warp-drive", "--output", out]) == EXIT_USAGE
    assert cli.run(["search", "fc", "--max-bits", "10", "--chunks", "-3",
                    "--output", out]) == EXIT_USAGE
    assert cli.run(["search", "gbtz", "--coeffs", "2,1,1", "--max-bits", "10",
                    "--output", out]) == EXIT_USAGE
    assert cli.run(["search", "fc", "--max-bits", "10", "--degree", "5..3",
                    "--output", out]) == EXIT_USAGE


def test_search_config_file_precedence(tmp_path):
    cfg_file = tmp_path / "cfg.json"
    cfg_file.write_text(json.dumps({"max_bits": 12}))
    _, header, _, _, _ = _run(
        tmp_path,
        ["search", "fc", "--threads", "1", "--config", str(cfg_file)],
        name="file.jsonl",
    )
    assert header["config"]["max_bits"] == 12
    _, header, _, _, _ = _run(
        tmp_path,
        ["search", "fc", "--threads", "1", "--config", str(cfg_file),
         "--max-bits", "14"],
        name="flag.jsonl",
    )
    assert header["config"]["max_bits"] == 14  # flags beat the file

    bad = tmp_path / "bad.json"
    bad.write_text("{nope")
    assert cli.run(["search", "fc", "--config", str(bad),
                    "--output", str(tmp_path / "x.jsonl")]) == EXIT_USAGE
    arr = tmp_path / "arr.json"
    arr.write_text("[1, 2]")
    assert cli.run(["search", "fc", "--config", str(arr),
                    "--output", str(tmp_path / "x.jsonl")]) == EXIT_USAGE


# ---------------------------------------------------------------------------
# decompose, gen, catalog


def test_decompose_cli(tmp_path):
    code, header, records, _, out = _run(
        tmp_path, ["decompose", "5041", "--degree", "2", "--max-spread", "1"]
    )
    assert code == EXIT_OK
    assert header["subcommand"] == "decompose"
    assert [r["factors"] for r in records] == [[71, 71]]
    assert records[0]["kind"] == "decomposition"
    assert _verify(out) == EXIT_OK

    code, _, records, _, out = _run(
        tmp_path,
        ["decompose", "1679616", "--degree", "2..8", "--max-spread", "2"],
        name="d2.jsonl",
    )
    assert code == EXIT_OK
    assert [r["degree"] for r in records] == [2, 4, 5, 8]
    assert _verify(out) == EXIT_OK

    assert cli.run(["decompose", "576", "--output", str(tmp_path / "x")]) == EXIT_USAGE
    assert cli.run(["decompose", "0", "--degree", "2",
                    "--output", str(tmp_path / "x")]) == EXIT_USAGE


def test_gen_standard_and_failure(tmp_path):
    code, header, records, _, out = _run(tmp_path, ["gen", "standard"])
    assert code == EXIT_OK
    rec = records[0]
    assert (rec["x"], rec["y"], rec["z"]) == (512, 64, 576)
    assert rec["z_factors"] == [8, 8, 9]
    assert header["subcommand"] == "gen standard"
    assert _verify(out) == EXIT_OK

    code, _, records, manifest, out = _run(
        tmp_path, ["gen", "standard", "--v", "2", "--w", "1", "--n", "3"],
        name="fail.jsonl",
    )
    assert code == EXIT_FINDINGS
    rec = records[0]
    assert rec["kind"] == "identity-failure"
    assert (rec["lhs"], rec["rhs"]) == (16, 12)
    assert manifest["exit_code"] == EXIT_FINDINGS
    assert _verify(out) == EXIT_OK  # the failure record itself is accurate

    assert cli.run(["gen", "standard", "--v", "0",
                    "--output", str(tmp_path / "x")]) == EXIT_USAGE


def test_gen_other_families(tmp_path):
    code, _, records, _, out = _run(
        tmp_path, ["gen", "maxgcd-trivial", "--x", "3", "--p", "6"]
    )
    assert code == EXIT_OK
    assert records[0]["z"] == 972
    assert records[0]["weight"] == "7/10"
    assert _verify(out) == EXIT_OK

    code, _, records, _, out = _run(tmp_path, ["gen", "pythagorean"], name="p.jsonl")
    assert code == EXIT_OK
    assert records[0]["weight"] == "47/60"  # 1/4 + 1/5 + 1/3
    assert _verify(out) == EXIT_OK
    assert cli.run(["gen", "pythagorean", "--n", "3",
                    "--output", str(tmp_path / "x")]) == EXIT_USAGE

    code, _, records, _, out = _run(
        tmp_path, ["gen", "counterexample", "--a", "2", "--alpha", "3"],
        name="c.jsonl",
    )
    assert code == EXIT_OK
    assert records[0]["z"] == 64
    assert records[0]["weight"] == "503/300"
    assert records[0]["checks"]["naive_admits"] is True
    assert _verify(out) == EXIT_OK


def test_catalog_cli(tmp_path):
    code, _, records, _, out = _run(tmp_path, ["catalog", "fc"])
    assert code == EXIT_OK and len(records) == 10
    assert _verify(out) == EXIT_OK

    code, _, records, _, _ = _run(
        tmp_path, ["catalog", "fc", "--max-bits", "14"], name="c14.jsonl"
    )
    assert len(records) == 5

    code, _, records, _, out = _run(tmp_path, ["catalog", "degree3"], name="d3.jsonl")
    assert code == EXIT_OK and len(records) == 4
    assert all(r["sign"] == "minus" for r in records)
    assert _verify(out) == EXIT_OK


# ---------------------------------------------------------------------------
# abc subcommands


def test_abc_check_cli(tmp_path):
    data = tmp_path / "triples.txt"
    data.write_text("1 8 9\n2 6436341\n2 4\n")
    code, header, records, manifest, out = _run(
        tmp_path, ["abc", "check", "--input", str(data), "--classic", "1/5,1"]
    )
    assert code == EXIT_USAGE  # parse errors, no explicit failures
    assert len(records) == 2
    assert records[0]["kind"] == "abc-check"
    assert records[1]["rad_bc"] == 7521
    assert records[0]["classic"] == [
        {"eps": "1/5", "C": "1", "verdict": "fail"},
    ]
    assert manifest["totals"] == {
        "chunks": 0, "candidates": 2, "records": 2, "errors": 1,
    }
    assert manifest["input"] == str(data)
    assert _verify(out) == EXIT_OK

    clean = tmp_path / "clean.txt"
    clean.write_text("1 8 9\n1 2\n")
    code, _, records, _, out = _run(
        tmp_path, ["abc", "check", "--input", str(clean)], name="ok.jsonl"
    )
    assert code == EXIT_OK and len(records) == 2
    assert _verify(out) == EXIT_OK


def test_abc_check_stdin(tmp_path, monkeypatch):
    monkeypatch.setattr(sys, "stdin", io.StringIO("3 125\n"))
    code, _, records, _, _ = _run(tmp_path, ["abc", "check", "--input", "-"])
    assert code == EXIT_OK
    assert [(r["a"], r["b"], r["c"]) for r in records] == [(3, 125, 128)]


def test_abc_scan_cli(tmp_path):
    code, header, records, _, out = _run(
        tmp_path, ["abc", "scan", "--limit", "100000"]
    )
    assert code == EXIT_OK and records == []
    assert header["config"] == {"limit": 100000}
    assert _verify(out) == EXIT_OK
    assert cli.run(["abc", "scan", "--limit", "2",
                    "--output", str(tmp_path / "x")]) == EXIT_USAGE
    assert cli.run(["abc", "scan", "--limit", "100000", "--memory-budget", "1000",
                    "--output", str(tmp_path / "x")]) == EXIT_RUNTIME


def test_abc_filter_cli(tmp_path):
    code, header, records, _, out = _run(
        tmp_path,
        ["abc", "filter", "--limit", "9", "--eps", "1/5", "--q-bound", "1"],
    )
    assert code == EXIT_OK
    assert [(r["a"], r["b"], r["c"]) for r in records] == [
        (2, 2, 4), (1, 8, 9), (3, 6, 9),
    ]
    assert all(r["kind"] == "abc-filter" for r in records)
    assert header["config"] == {"limit": 9, "eps": "1/5", "q_bound": "1"}
    assert _verify(out) == EXIT_OK
    assert cli.run(["abc", "filter", "--eps", "0",
                    "--output", str(tmp_path / "x")]) == EXIT_USAGE
    assert cli.run(["abc", "filter", "--eps", "bogus",
                    "--output", str(tmp_path / "x")]) == EXIT_USAGE


# ---------------------------------------------------------------------------
# factor / radical / verify-log


def test_factor_and_radical_cli(tmp_path):
    code, header, records, _, out = _run(tmp_path, ["factor", "5040"])
    assert code == EXIT_OK
    assert header["subcommand"] == "factor"
    assert records[0]["factors"] == [[2, 4], [3, 2], [5, 1], [7, 1]]
    assert _verify(out) == EXIT_OK

    code, _, records, _, out = _run(tmp_path, ["radical", "5040"], name="r.jsonl")
    assert code == EXIT_OK
    assert records[0]["radical"] == 210
    assert _verify(out) == EXIT_OK

    assert cli.run(["factor", "0", "--output", str(tmp_path / "x")]) == EXIT_USAGE


def test_verify_log_catches_tampering(tmp_path, capsys):
    _, _, _, _, out = _run(
        tmp_path,
        ["search", "fc", "--max-bits", "13", "--threads", "1"],
        name="t.jsonl",
    )
    lines = out.read_text().splitlines()
    rec = json.loads(lines[1])
    rec["values"] = [2, 8, 10]
    tampered = tmp_path / "tampered.jsonl"
    tampered.write_text("\n".join([lines[0], json.dumps(rec)] + lines[2:]) + "\n")
    capsys.readouterr()
    assert _verify(tampered) == EXIT_FINDINGS
    report = capsys.readouterr().out
    assert str(tampered) in report and "line 2" in report

    # a structurally broken record must be reported, not crash the verifier
    broken = json.loads(lines[1])
    del broken["reps"]
    hostile = tmp_path / "hostile.jsonl"
    hostile.write_text("\n".join([lines[0], json.dumps(broken)]) + "\n")
    assert _verify(hostile) == EXIT_FINDINGS
    assert "verification raised" in capsys.readouterr().out

    # header digest tamper
    header = json.loads(lines[0])
    header["config_digest"] = "0" * 64
    bad_header = tmp_path / "badheader.jsonl"
    bad_header.write_text("\n".join([json.dumps(header)] + lines[1:]) + "\n")
    assert _verify(bad_header) == EXIT_FINDINGS

    not_log = tmp_path / "notlog.jsonl"
    not_log.write_text('{"format": "something"}\n')
    assert _verify(not_log) == EXIT_FINDINGS
    empty = tmp_path / "empty.jsonl"
    empty.write_text("")
    assert _verify(empty) == EXIT_FINDINGS
    assert cli.run(["verify-log", str(tmp_path / "missing.jsonl")]) == EXIT_USAGE


def test_verify_log_emits_manifest_only(tmp_path, capsys):
    _, _, _, _, out = _run(tmp_path, ["factor", "12"], name="f.jsonl")
    capsys.readouterr()
    assert cli.run(["verify-log", str(out)]) == EXIT_OK
    captured = capsys.readouterr()
    assert captured.out == ""  # no problems, no log, manifest on stderr
    manifest = json.loads(captured.err.strip().splitlines()[-1])
    assert manifest["subcommand"] == "verify-log"
    assert manifest["totals"]["records"] == 1


# ---------------------------------------------------------------------------
# plumbing


def test_stdout_log_and_stderr_manifest(capsys):
    code = cli.run(["factor", "12"])
    assert code == EXIT_OK
    captured = capsys.readouterr()
    lines = captured.out.splitlines()
    assert json.loads(lines[0])["format"] == "fcspread-result-log"
    assert json.loads(lines[1])["factors"] == [[2, 2], [3, 1]]
    manifest = json.loads(captured.err.strip().splitlines()[-1])
    assert manifest["format"] == "fcspread-manifest"
    assert manifest["output"] is None


def test_no_subcommand_and_help(capsys):
    assert cli.run([]) == EXIT_USAGE
    assert cli.run(["--help"]) == EXIT_OK
    assert cli.run(["frobnicate"]) == EXIT_USAGE
    capsys.readouterr()


def test_console_script_installed(tmp_path):
    exe = shutil.which("fcspread")
    assert exe, "console script must be on PATH after installation"
    out = tmp_path / "cs.jsonl"
    proc = subprocess.run(
        [exe, "radical", "720", "--output", str(out)],
        capture_output=True, text=True, timeout=120,
    )
    assert proc.returncode == EXIT_OK
    rec = json.loads(out.read_text().splitlines()[1])
    assert rec["radical"] == 30
