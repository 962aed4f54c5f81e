import csv
import json
import math
import subprocess
import sys

import numpy as np
import pytest

from circlestates.cli import COLUMNS, ConfigError, SweepConfig, main, parse_complex


def read_csv(path):
    with open(path, newline="", encoding="utf-8") as fh:
        rows = list(csv.reader(fh))
    return rows[0], [[float(v) if v else None for v in r] for r in rows[1:]]


def sweep(tmp_path, quantity, *extra, name="out.csv"):
    out = tmp_path / name
    code = main(["sweep", "--quantity", quantity, "--out", str(out), *extra])
    return code, out


@pytest.mark.parametrize("quantity,extra", [
    ("circle-norm", ["--omega-min", "0", "--omega-max", "0.9", "--omega-count", "4", "--phi-count", "3"]),
    ("cylinder-norm", ["--omega-min", "0", "--omega-max", "0.9", "--omega-count", "4", "--phi-count", "3"]),
    ("coset-norm", ["--omega-min", "0", "--omega-max", "0.9", "--omega-count", "4", "--phi-count", "3",
                    "--alpha", "0.3+1i"]),
    ("sector-split", ["--omega-min", "0", "--omega-max", "0.9", "--omega-count", "4", "--phi-count", "3"]),
    ("wigner-mm", ["--omega-min", "0.05", "--omega-max", "1", "--omega-count", "5"]),
])
def test_sweep_each_quantity_csv_and_json(tmp_path, quantity, extra):
    code, out = sweep(tmp_path, quantity, *extra)
    assert code == 0
    header, rows = read_csv(out)
    assert header == COLUMNS[quantity]
    assert len(rows) == (5 if quantity == "wigner-mm" else 12)
    code, jout = sweep(tmp_path, quantity, *extra, "--format", "json", name="out.json")
    assert code == 0
    payload = json.loads(jout.read_text())
    assert payload["columns"] == header and len(payload["rows"]) == len(rows)


def test_circle_norm_sweep_profile(tmp_path):
    code, out = sweep(tmp_path, "circle-norm", "--omega-min", "0", "--omega-max", "0.99",
                      "--omega-count", "100", "--phi-count", "1")
    assert code == 0
    _, rows = read_csv(out)
    series = [r[2] for r in rows]
    closed = [r[3] for r in rows]
    assert series[0] == 1.0 and closed[0] == 1.0
    assert all(b < a for a, b in zip(series, series[1:]))
    assert series[-1] < 0.2


def test_sector_split_ordering(tmp_path):
    code, out = sweep(tmp_path, "sector-split", "--omega-min", "0.01", "--omega-max", "0.95",
                      "--omega-count", "60", "--phi-count", "8")
    assert code == 0
    _, rows = read_csv(out)
    assert all(r[2] >= r[3] for r in rows)


def test_sweep_is_byte_identical(tmp_path):
    args = ["--omega-min", "0", "--omega-max", "0.8", "--omega-count", "5", "--phi-count", "4"]
    _, a = sweep(tmp_path, "cylinder-norm", *args, name="a.csv")
    _, b = sweep(tmp_path, "cylinder-norm", *args, name="b.csv")
    assert a.read_bytes() == b.read_bytes()


@pytest.mark.parametrize("extra", [
    ["--quantity", "circle-norm", "--omega-min", "0", "--omega-max", "1.0", "--omega-count", "5"],
    ["--quantity", "circle-norm", "--omega-min", "0", "--omega-max", "0.5", "--omega-count", "1"],
    ["--quantity", "circle-norm", "--omega-min", "0.6", "--omega-max", "0.5", "--omega-count", "3"],
    ["--quantity", "coset-norm", "--omega-min", "0", "--omega-max", "0.5", "--omega-count", "3"],
    ["--quantity", "coset-norm", "--omega-min", "0", "--omega-max", "0.5", "--omega-count", "3", "--alpha", "1-1i"],
    ["--quantity", "coset-norm", "--omega-min", "0", "--omega-max", "0.5", "--omega-count", "3", "--alpha", "abc"],
    ["--quantity", "wigner-mm", "--omega-min", "0", "--omega-max", "1", "--omega-count", "3"],
    ["--quantity", "circle-norm", "--omega-min", "0", "--omega-max", "0.5", "--omega-count", "3", "--n-max", "2"],
])
def test_bad_config_exit_2(tmp_path, extra):
    assert main(["sweep", "--out", str(tmp_path / "x.csv"), *extra]) == 2


def test_argparse_errors_exit_2():
    with pytest.raises(SystemExit) as exc:
        main(["sweep", "--quantity", "nope", "--omega-min", "0", "--omega-max", "0.5",
              "--omega-count", "3", "--out", "-"])
    assert exc.value.code == 2


def test_unwritable_output_exit_3(tmp_path):
    bad = str(tmp_path / "missing" / "dir" / "x.csv")
    assert main(["sweep", "--quantity", "wigner-mm", "--omega-min", "0.1", "--omega-max", "1",
                 "--omega-count", "3", "--out", bad]) == 3
    assert main(["reconcile", "--out", bad]) == 3


def test_sweep_config_validation():
    with pytest.raises(ConfigError):
        SweepConfig("circle-norm", 0, 0.5, 3, format="xml")
    cfg = SweepConfig("circle-norm", 0.0, 0.5, 3, phi_count=4)
    assert np.allclose(cfg.phi_grid(), [0, math.pi / 2, math.pi, 3 * math.pi / 2])


def test_parse_complex():
    assert parse_complex("0.3+1i") == 0.3 + 1j
    assert parse_complex("1i") == 1j
    assert parse_complex("-0.2-0.3j") == -0.2 - 0.3j


@pytest.mark.parametrize("suite", ["algebra", "geometry", "overlaps", "identity", "all"])
def test_check_suites_pass(suite, capsys):
    assert main(["check", suite]) == 0
    out = capsys.readouterr().out
    assert "FAIL" not in out and "passed" in out


def test_check_algebra_mentions_casimir(capsys):
    main(["check", "algebra"])
    assert "casimir" in capsys.readouterr().out.lower()


def test_reconcile_writes_tables(tmp_path):
    out = tmp_path / "r.json"
    assert main(["reconcile", "--out", str(out)]) == 0
    report = json.loads(out.read_text())
    for key in ("cylinder_norm_prefactor", "london_overlap_sign", "fiducial_annihilation"):
        assert report[key]


def test_module_entry_point(tmp_path):
    out = tmp_path / "m.csv"
    proc = subprocess.run([sys.executable, "-m", "circlestates", "sweep", "--quantity", "wigner-mm",
                           "--omega-min", "0.5", "--omega-max", "1", "--omega-count", "2", "--out", str(out)],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert out.read_text().splitlines()[0] == ",".join(COLUMNS["wigner-mm"])
