import csv
import io
import json
import math
from fractions import Fraction

import numpy as np
import pytest

from fcctrig import cli
from fcctrig.indexsets import generate_Hn_star, lambda_nodes
from fcctrig.interpolation import dodeca_grid, from_node_values, node_set
from fcctrig.kernels import dirichlet


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def parse_csv(text):
    rows = list(csv.reader(io.StringIO(text)))
    return rows[0], rows[1:]


def test_nodes_default_table(capsys):
    code, out, _ = run(capsys, "nodes", "--n", "2")
    assert code == 0
    header, rows = parse_csv(out)
    assert header[:4] == ["j1", "j2", "j3", "j4"]
    assert header[-3:] == ["stratum", "weight", "weight_float"]
    assert len(rows) == 3**4 - 2**4
    total = sum(Fraction(r[-2]) for r in rows)
    assert total == 4 * 2**3
    for r in rows:
        k = np.array([int(v) for v in r[:4]])
        t = np.array([float(v) for v in r[4:8]])
        assert np.abs(t - k / 8.0).max() < 1e-15
        assert float(r[-1]) == pytest.approx(float(Fraction(r[-2])))


def test_nodes_lambda_table(capsys):
    code, out, _ = run(capsys, "nodes", "--set", "lambda", "--n", "3")
    assert code == 0
    header, rows = parse_csv(out)
    assert len(rows) == len(lambda_nodes(3))
    strata = {r[-3] for r in rows}
    assert strata <= {"interior", "face", "edge1", "edge2", "vertex"}
    assert sum(int(r[-2]) for r in rows) == 4 * 3**3


def test_nodes_json_is_canonical(capsys):
    code, out, _ = run(capsys, "nodes", "--n", "1", "--format", "json")
    assert code == 0
    obj = json.loads(out)
    assert out == json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"
    assert obj["n"] == 1
    assert len(obj["nodes"]) == 2**4 - 1


def test_nodes_deterministic(capsys):
    _, a, _ = run(capsys, "nodes", "--n", "2", "--set", "hn")
    _, b, _ = run(capsys, "nodes", "--n", "2", "--set", "hn")
    assert a == b


def test_kernel_values_match_library(capsys):
    code, out, _ = run(
        capsys, "kernel", "--f", "dirichlet", "--n", "2", "--grid", "3"
    )
    assert code == 0
    header, rows = parse_csv(out)
    assert len(rows) == 27
    grid = dodeca_grid(3)
    want = dirichlet(2, grid)
    got = np.array([float(r[4]) for r in rows])
    assert np.abs(got - np.real(want)).max() < 1e-12


def test_kernel_phi_needs_k(capsys):
    code, _, err = run(capsys, "kernel", "--f", "phi", "--n", "2")
    assert code == 1
    assert "error" in err


def test_cubature_phi_delta(capsys):
    code, out, _ = run(
        capsys, "cubature", "--f", "phi", "--k", "0,0,0,0", "--n", "2",
        "--format", "json",
    )
    assert code == 0
    assert json.loads(out)["value_re"] == pytest.approx(1.0, abs=1e-12)
    code, out, _ = run(
        capsys, "cubature", "--f", "phi", "--k", "4,0,0,-4", "--n", "2",
        "--format", "json",
    )
    assert code == 0
    assert json.loads(out)["value_re"] == pytest.approx(0.0, abs=1e-12)


def test_cubature_lambda_one(capsys):
    code, out, _ = run(
        capsys, "cubature", "--set", "lambda", "--f", "one", "--n", "3",
        "--format", "json",
    )
    assert code == 0
    assert json.loads(out)["value_re"] == pytest.approx(1.0, abs=1e-12)


def test_cubature_bad_k_usage(capsys):
    code, _, err = run(capsys, "cubature", "--f", "phi", "--k", "1,2,3")
    assert code == 1
    code, _, err = run(capsys, "cubature", "--f", "phi", "--k", "1,1,1,-1")
    assert code == 1
    code, _, err = run(capsys, "cubature", "--f", "nosuch")
    assert code == 1


def test_interpolate_builtin_reports_error(capsys):
    code, out, err = run(
        capsys, "interpolate", "--kind", "lnstar", "--f", "expsin", "--n", "2",
        "--grid", "4", "--format", "json",
    )
    assert code == 0
    obj = json.loads(out)
    assert "max_error" in obj
    assert obj["max_error"] < 1.0
    assert "max_error=" in err


def test_interpolate_polynomial_exact(capsys):
    # a cosine of tetrahedral degree <= n is reproduced exactly on the grid
    code, out, _ = run(
        capsys, "interpolate", "--kind", "lnstar", "--f", "tc", "--k",
        "3,-1,-1,-1", "--n", "2", "--grid", "5", "--format", "json",
    )
    assert code == 0
    assert json.loads(out)["max_error"] < 1e-10


def test_interpolate_needs_input(capsys):
    code, _, err = run(capsys, "interpolate", "--kind", "in", "--n", "2")
    assert code == 1
    assert "error" in err


def test_interpolate_samples_round_trip(tmp_path, capsys):
    n = 1
    nodes = node_set("instar", n)
    rng = np.random.default_rng(70)
    vals = rng.standard_normal(len(nodes))
    path = tmp_path / "samples.csv"
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["j1", "j2", "j3", "j4", "re", "im"])
        for k, v in zip(nodes, vals):
            w.writerow([int(k[0]), int(k[1]), int(k[2]), int(k[3]), repr(float(v)), "0.0"])
    code, out, _ = run(
        capsys, "interpolate", "--kind", "instar", "--n", "1", "--samples",
        str(path), "--grid", "4", "--format", "json",
    )
    assert code == 0
    obj = json.loads(out)
    data = {tuple(int(x) for x in k): complex(v) for k, v in zip(nodes, vals)}
    I = from_node_values("instar", n, data)
    want = I(dodeca_grid(4))
    got = np.array([row["re"] + 1j * row["im"] for row in obj["values"]])
    assert np.abs(got - want).max() < 1e-12


def test_interpolate_samples_mismatch(tmp_path, capsys):
    path = tmp_path / "bad.csv"
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["j1", "j2", "j3", "j4", "re", "im"])
        w.writerow([0, 0, 0, 0, "1.0", "0.0"])
    code, _, err = run(
        capsys, "interpolate", "--kind", "instar", "--n", "2", "--samples",
        str(path),
    )
    assert code == 1
    assert "node set" in err


def test_interpolate_samples_bad_header(tmp_path, capsys):
    path = tmp_path / "bad.csv"
    path.write_text("a,b\n1,2\n")
    code, _, err = run(
        capsys, "interpolate", "--kind", "instar", "--n", "1", "--samples",
        str(path),
    )
    assert code == 1
    assert "j1" in err


def test_lebesgue_json(capsys):
    code, out, _ = run(
        capsys, "lebesgue", "--kind", "sn", "--n", "2", "--grid", "5",
        "--quad", "8", "--format", "json",
    )
    assert code == 0
    obj = json.loads(out)
    assert obj["estimate"] > 1.0
    assert obj["quad"] == 8
    assert obj["ratio_log3"] == pytest.approx(obj["estimate"] / math.log(2) ** 3)


def test_lebesgue_ratio_null_at_degree_one(capsys):
    code, out, _ = run(
        capsys, "lebesgue", "--kind", "instar", "--n", "1", "--grid", "5",
        "--format", "json",
    )
    assert code == 0
    obj = json.loads(out)
    assert obj["ratio_log3"] is None
    assert obj["estimate"] > 0.0


def test_lebesgue_interp_kind(capsys):
    code, out, _ = run(
        capsys, "lebesgue", "--kind", "lnstar", "--n", "2", "--grid", "4",
    )
    assert code == 0
    header, rows = parse_csv(out)
    assert header == ["kind", "n", "grid", "quad", "estimate", "ratio_log3"]
    assert rows[0][0] == "lnstar"
    assert float(rows[0][4]) >= 1.0 - 1e-9


def test_out_file_matches_stdout(tmp_path, capsys):
    _, direct, _ = run(capsys, "nodes", "--n", "1")
    path = tmp_path / "nodes.csv"
    code, out, _ = run(capsys, "nodes", "--n", "1", "--out", str(path))
    assert code == 0
    assert out == ""
    assert path.read_text() == direct


def test_out_unwritable_is_io_error(tmp_path, capsys):
    path = tmp_path / "missing" / "deep" / "nodes.csv"
    code, _, err = run(capsys, "nodes", "--n", "1", "--out", str(path))
    assert code == 3
    assert "i/o error" in err


def test_verify_passes(capsys):
    code, out, _ = run(capsys, "verify", "--n", "2")
    assert code == 0
    lines = [l for l in out.splitlines() if l]
    assert lines[-1] == "all checks passed"
    assert all(l.startswith("PASS") for l in lines[:-1])
    assert any("compact vs direct" in l for l in lines)
    assert any("interpolation condition" in l for l in lines)


def test_bad_subcommand_usage(capsys):
    code, _, _ = run(capsys, "nosuch")
    assert code == 1
