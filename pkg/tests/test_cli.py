import json

import pytest

from paulicap.cli import main

FAST_OPT = ["--opt-grid", "51"]


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ----------------------------------------------------------------------- point

def test_point_noiseless(capsys):
    code, out, _ = run(capsys, "point", "--p0", "1", "--p3", "0", *FAST_OPT)
    assert code == 0
    assert "classical_capacity     1" in out
    assert "entanglement_assisted  2" in out
    assert "best_upper             1" in out
    assert "lower_single_shot      1" in out


def test_point_json_round_trip(capsys):
    code, out, _ = run(capsys, "point", "--p0", "0.5", "--p3", "0.5", "--json", *FAST_OPT)
    assert code == 0
    payload = json.loads(out)
    assert payload["A"] == 0.0
    assert payload["known_zero"] is True
    assert payload["eb"] is True
    assert payload["lower"] == 0.0
    assert payload["branch"] == "polar"


def test_point_eb_square(capsys):
    code, out, _ = run(capsys, "point", "--p0", "0.4", "--p3", "0.4", "--json", *FAST_OPT)
    payload = json.loads(out)
    assert code == 0
    assert payload["eb"] is True and payload["ad"] is True
    assert payload["lower"] == 0.0


def test_point_invalid_parameters(capsys):
    code, _, err = run(capsys, "point", "--p0", "0.7", "--p3", "0.5")
    assert code == 2
    assert "p0 + p3" in err


# ------------------------------------------------------------------------ scan

def test_scan_triangular_count_and_header(tmp_path, capsys):
    out_path = tmp_path / "scan.csv"
    code, _, _ = run(capsys, "scan", "--grid-n", "3", "--out", str(out_path), *FAST_OPT)
    assert code == 0
    lines = out_path.read_text().strip().split("\n")
    assert lines[0] == (
        "p0,p3,p1,C_cl,xi,branch,C_E,A,B,best_upper,best_upper_source,lower,eb,ad,known_zero"
    )
    assert len(lines) == 1 + 6
    # rows ordered lexicographically by (p0, p3)
    keys = [tuple(float(v) for v in line.split(",")[:2]) for line in lines[1:]]
    assert keys == sorted(keys)


def test_scan_deterministic_bytes(tmp_path, capsys):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    run(capsys, "scan", "--grid-n", "5", "--out", str(a), *FAST_OPT)
    run(capsys, "scan", "--grid-n", "5", "--out", str(b), *FAST_OPT)
    assert a.read_bytes() == b.read_bytes()


def test_scan_skip_lower_drops_column(tmp_path, capsys):
    out_path = tmp_path / "scan.csv"
    code, _, _ = run(capsys, "scan", "--grid-n", "4", "--out", str(out_path), "--skip-lower")
    assert code == 0
    header = out_path.read_text().split("\n", 1)[0]
    assert "lower" not in header.split(",")
    assert "known_zero" in header


def test_scan_json_format(tmp_path, capsys):
    out_path = tmp_path / "scan.json"
    code, _, _ = run(capsys, "scan", "--grid-n", "3", "--out", str(out_path),
                     "--format", "json", "--skip-lower")
    assert code == 0
    rows = json.loads(out_path.read_text())
    assert len(rows) == 6
    assert rows[0]["p0"] == 0.0 and rows[-1]["p0"] == 1.0


def test_scan_unwritable_path(capsys):
    code, _, err = run(capsys, "scan", "--grid-n", "3", "--skip-lower",
                       "--out", "/nonexistent-dir/scan.csv")
    assert code == 3
    assert "I/O error" in err


def test_scan_grid_too_small(capsys):
    code, _, _ = run(capsys, "scan", "--grid-n", "1", "--out", "/tmp/x.csv")
    assert code == 2


# ---------------------------------------------------------------------- figure

def test_figure_fig2(tmp_path, capsys):
    out_path = tmp_path / "fig2.csv"
    code, _, _ = run(capsys, "figure", "fig2", "--out", str(out_path), "--grid-n", "21")
    assert code == 0
    lines = out_path.read_text().strip().split("\n")
    assert lines[0] == "p0,p3,xi,branch,C_cl"
    branches = {line.split(",")[3] for line in lines[1:]}
    assert branches == {"equatorial", "polar"}


def test_figure_fig3_regions_and_boundary(tmp_path, capsys):
    out_path = tmp_path / "fig3.csv"
    code, _, _ = run(capsys, "figure", "fig3", "--out", str(out_path),
                     "--grid-n", "21", "--samples", "11")
    assert code == 0
    lines = out_path.read_text().strip().split("\n")
    assert lines[0] == "p0,p3,eb,ad,ad_margin"
    for line in lines[1:]:
        _, _, eb, ad, _ = line.split(",")
        if eb == "true":
            assert ad == "true"  # EB region sits inside the AD region
    boundary = (tmp_path / "fig3_boundary.csv").read_text().strip().split("\n")
    assert boundary[0] == "s,eps,p0,p3"
    assert len(boundary) > 1


def test_figure_fig4_boundary_solves_equation(tmp_path, capsys):
    out_path = tmp_path / "fig4.csv"
    code, _, _ = run(capsys, "figure", "fig4", "--out", str(out_path),
                     "--grid-n", "21", "--samples", "11")
    assert code == 0
    lines = out_path.read_text().strip().split("\n")
    assert lines[0] == "p0,p3,A,B,C_cl,best_upper,best_upper_source"
    assert all(line.split(",")[6] != "B" for line in lines[1:])
    boundary = (tmp_path / "fig4_boundary.csv").read_text().strip().split("\n")
    assert boundary[0] == "s,eps,p0,p3,A,C_cl"
    for line in boundary[1:]:
        fields = line.split(",")
        assert abs(float(fields[4]) - float(fields[5])) < 1e-9


def test_figure_fig5_lower_below_upper(tmp_path, capsys):
    out_path = tmp_path / "fig5.csv"
    code, _, _ = run(capsys, "figure", "fig5", "--out", str(out_path),
                     "--samples", "6", "--eps", "0.5", "1.0", *FAST_OPT)
    assert code == 0
    lines = out_path.read_text().strip().split("\n")
    assert lines[0] == "eps,s,upper,lower"
    assert len(lines) == 1 + 2 * 6
    for line in lines[1:]:
        _, _, upper, lower = (float(v) for v in line.split(","))
        assert lower <= upper + 1e-9


def test_figure_unknown_id_is_usage_error(capsys):
    with pytest.raises(SystemExit) as info:
        main(["figure", "fig9", "--out", "/tmp/x.csv"])
    assert info.value.code == 2
    capsys.readouterr()


# ---------------------------------------------------------------------- verify

def test_verify_passes_and_is_deterministic(capsys):
    code_a, out_a, _ = run(capsys, "verify", "--samples", "4", "--seed", "7")
    code_b, out_b, _ = run(capsys, "verify", "--samples", "4", "--seed", "7")
    assert code_a == code_b == 0
    assert out_a == out_b
    assert out_a.count("pass") == 5
