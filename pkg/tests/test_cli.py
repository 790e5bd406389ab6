import csv
import json
from pathlib import Path

import pytest

from ogpbench.cli.config import ExperimentConfig, format_config, parse_config
from ogpbench.cli.main import main
from ogpbench.cli.runner import CSV_HEADER, experiment_id
from ogpbench.errors import ValidationError
from ogpbench.io import parse_graph, parse_tensor


def _write(tmp_path, text, name="exp.cfg"):
    p = tmp_path / name
    p.write_text(text)
    return p


def _csv_body(path: Path) -> list[list[str]]:
    rows = list(csv.reader(path.open()))
    assert rows[0] == CSV_HEADER
    return [r[:-1] for r in rows[1:]]  # drop timestamp


GREEDY = "kind = greedy_ratio\nd = 6\nn = 2000\ntrials = 4\nseed = 7\n"


def test_config_roundtrip_and_errors():
    cfg = parse_config(GREEDY)
    assert parse_config(format_config(cfg)) == cfg
    with pytest.raises(ValidationError, match="unknown key"):
        parse_config(GREEDY + "tirals = 3\n")
    with pytest.raises(ValidationError, match="parity"):
        parse_config("kind = greedy_ratio\nd = 3\nn = 5\n")
    with pytest.raises(ValidationError, match="kind"):
        parse_config("kind = nope\nn = 4\nd = 2\n")
    with pytest.raises(ValidationError):
        parse_config("kind = overlap_probe\nn = 10\nd = 3\ntheta = 0\n")
    rules = parse_config("kind = local_vs_greedy\nn = 10\nd = 3\nrules = threshold:0,1,-1; neighbor_min\n")
    assert rules.rules == (("threshold", (0.0, 1.0, -1.0)), ("neighbor_min", ()))
    assert parse_config(format_config(rules)) == rules
    with pytest.raises(ValidationError):
        parse_config("kind = local_vs_greedy\nn = 10\nd = 3\nrules = label_broadcast:1\n")


def test_experiment_id_ignores_runtime_keys():
    a = parse_config(GREEDY)
    b = parse_config(GREEDY, workers=3, out="elsewhere")
    assert experiment_id(a) == experiment_id(b)
    assert experiment_id(a) != experiment_id(parse_config(GREEDY, seed=8))


def test_run_twice_identical_bodies(tmp_path, capsys):
    cfg = _write(tmp_path, GREEDY)
    out1, out2 = tmp_path / "a", tmp_path / "b"
    assert main(["run", "--config", str(cfg), "--out", str(out1)]) == 0
    assert main(["run", "--config", str(cfg), "--out", str(out2)]) == 0
    (c1,), (c2,) = out1.glob("*.csv"), out2.glob("*.csv")
    assert _csv_body(c1) == _csv_body(c2)
    assert len(_csv_body(c1)) == 4
    rec = json.loads(next(out1.glob("*.summary.json")).read_text())
    assert rec["kind"] == "greedy_ratio" and rec["version"] and rec["duration_s"] >= 0
    assert parse_config(rec["config"]) == parse_config(GREEDY, out=str(out1))


def test_csv_appends(tmp_path):
    cfg = _write(tmp_path, GREEDY)
    out = tmp_path / "r"
    main(["run", "--config", str(cfg), "--out", str(out)])
    main(["run", "--config", str(cfg), "--out", str(out)])
    body = _csv_body(next(out.glob("*.csv")))
    assert len(body) == 8 and body[:4] == body[4:]


def test_replay_from_config_echo_and_workers(tmp_path):
    cfg = _write(tmp_path, "kind = maxcut_scaling\nK = 3\nn = 300\nd_list = 4, 8\ntrials = 3\n"
                           "algorithm = local_flip\nseed = 11\n")
    first = tmp_path / "first"
    assert main(["run", "--config", str(cfg), "--out", str(first)]) == 0
    echo = next(first.glob("*.config"))
    again = tmp_path / "again"
    assert main(["run", "--config", str(echo), "--out", str(again), "--workers", "2"]) == 0
    a, b = next(first.glob("*.csv")), next(again.glob("*.csv"))
    assert a.name == b.name
    assert _csv_body(a) == _csv_body(b)
    assert list(again.glob("*.svg"))


def test_parity_error_exit_2(tmp_path, capsys):
    cfg = _write(tmp_path, "kind = greedy_ratio\nd = 3\nn = 5\n")
    assert main(["run", "--config", str(cfg), "--out", str(tmp_path / "o")]) == 2
    assert "parity" in capsys.readouterr().err
    assert not list((tmp_path).glob("o/*.csv"))


def test_unknown_key_and_missing_config_exit_2(tmp_path, capsys):
    cfg = _write(tmp_path, GREEDY + "colour = red\n")
    assert main(["run", "--config", str(cfg)]) == 2
    assert "unknown key" in capsys.readouterr().err
    assert main(["run", "--config", str(tmp_path / "missing.cfg")]) == 2


def test_unwritable_output_exit_2(tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("x")
    cfg = _write(tmp_path, GREEDY)
    assert main(["run", "--config", str(cfg), "--out", str(blocker / "sub")]) == 2


def test_precondition_found_at_run_time_exit_2(tmp_path, capsys):
    # the radius-2 ball around node 0 covers the 4-cycle
    cfg = _write(tmp_path, "kind = locality\ngraph = regular\nn = 4\nd = 2\nR = 1\n"
                           "rule = identity\ntrials = 2\n")
    assert main(["run", "--config", str(cfg), "--out", str(tmp_path / "o")]) == 2
    assert "covers the graph" in capsys.readouterr().err


def test_runtime_error_exit_3(tmp_path, capsys, monkeypatch):
    import ogpbench.cli.runner as runner

    def boom(cfg):
        raise MemoryError("simulated")

    monkeypatch.setattr(runner, "run_experiment", boom)
    cfg = _write(tmp_path, GREEDY)
    assert main(["run", "--config", str(cfg), "--out", str(tmp_path / "o")]) == 3
    assert "simulated" in capsys.readouterr().err


def test_overlap_probe_writes_csv_and_svg(tmp_path):
    cfg = _write(tmp_path, "kind = overlap_probe\ngraph = regular\nn = 16\nd = 3\ntheta = 0.9\n"
                           "sampler = degree_greedy\nruns = 100\nseed = 2\n")
    out = tmp_path / "o"
    assert main(["run", "--config", str(cfg), "--out", str(out)]) == 0
    assert len(list(out.glob("*.csv"))) == 1
    (svg,) = out.glob("*.svg")
    assert svg.read_text().startswith("<svg") or "<svg" in svg.read_text()[:200]
    rec = json.loads(next(out.glob("*.summary.json")).read_text())
    h = rec["summary"]["histograms"][0]
    assert sum(h["counts"]) == h["samples"]


def test_ogp_scan_subcommand(tmp_path, capsys):
    cfg = _write(tmp_path, "kind = ogp_scan\nn = 12\nd = 3\nsampler = exhaustive\n")
    out = tmp_path / "o"
    assert main(["ogp-scan", "--config", str(cfg), "--thetas", "0.8,1.0", "--out", str(out)]) == 0
    rec = json.loads(next(out.glob("*.summary.json")).read_text())
    assert [h["theta"] for h in rec["summary"]["histograms"]] == [0.8, 1.0]
    assert len(list(out.glob("*.svg"))) == 2
    assert main(["report", str(out)]) == 0
    assert "theta=0.8" in capsys.readouterr().out


def test_all_kinds_run_and_report(tmp_path, capsys):
    configs = [
        "kind = local_vs_greedy\nn = 500\nd = 4\nR = 1\ntrials = 2\n",
        "kind = locality\nn = 100\nd = 3\nR = 1\nrule = neighbor_sum\ntrials = 3\n",
        "kind = maxcut_scaling\nK = 2\nn = 200\nd_list = 4, 8\ntrials = 2\n",
    ]
    out = tmp_path / "o"
    for i, text in enumerate(configs):
        assert main(["run", "--config", str(_write(tmp_path, text, f"{i}.cfg")), "--out", str(out)]) == 0
    capsys.readouterr()
    assert main(["report", str(out)]) == 0
    text = capsys.readouterr().out
    assert "best local rule" in text and "PASS" in text and "sqrt(d)" in text


def test_report_empty_single_and_corrupt(tmp_path, capsys):
    empty = tmp_path / "empty"
    empty.mkdir()
    assert main(["report", str(empty)]) == 0
    assert "no records" in capsys.readouterr().out

    out = tmp_path / "o"
    main(["run", "--config", str(_write(tmp_path, GREEDY)), "--out", str(out)])
    capsys.readouterr()
    assert main(["report", str(out)]) == 0
    lines = capsys.readouterr().out.splitlines()
    rows = [ln for ln in lines if "density" in ln]
    assert len(rows) == 1 and "+/-" in rows[0] and "ratio" in rows[0]

    (out / "broken.summary.json").write_text("{not json")
    (out / "wrongkind.summary.json").write_text(json.dumps({"kind": "x", "summary": {}}))
    assert main(["report", str(out)]) == 0
    text = capsys.readouterr().out
    assert "density" in text
    assert "malformed record broken.summary.json" in text
    assert "malformed record wrongkind.summary.json" in text


def test_gen_examples(tmp_path, capsys):
    f = tmp_path / "k4.txt"
    assert main(["gen", "regular", "--n", "4", "--d", "3", "--seed", "1", "--out", str(f)]) == 0
    g = parse_graph(f.read_text())
    assert g.m == 6 and g.n == 4
    assert main(["gen", "regular", "--n", "5", "--d", "3"]) == 2
    assert "parity" in capsys.readouterr().err
    t = tmp_path / "t.txt"
    assert main(["gen", "pspin", "--n", "4", "--p", "2", "--seed", "1", "--out", str(t)]) == 0
    assert len(t.read_text().splitlines()) == 1 + 10
    assert parse_tensor(t.read_text()).n == 4
    assert main(["gen", "hypergraph", "--n", "10", "--d", "2", "--K", "3"]) == 0
    assert main(["gen", "er", "--n", "10", "--d", "2"]) == 0


def test_rules_listing(capsys):
    assert main(["rules"]) == 0
    out = capsys.readouterr().out
    for name in ("identity", "label_broadcast", "neighbor_sum", "neighbor_min", "threshold"):
        assert name in out


def test_default_config_is_valid_dataclass():
    cfg = ExperimentConfig(kind="greedy_ratio", n=10, d=3)
    assert format_config(cfg).startswith("kind = greedy_ratio")
