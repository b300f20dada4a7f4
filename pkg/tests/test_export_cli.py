"""File emitters and the command-line surface."""

import math

import pytest

from solstab import make_curve
from solstab.cli import main
from solstab.export import (
    CSV_HEADER,
    curve_csv_text,
    cylinder_mesh_obj_text,
    format_cell,
    parse_table_csv,
    profile_mesh_obj_text,
    render_table_csv,
    render_table_markdown,
    round_half_away,
)
from solstab.stability import instability_table


def _num(x):
    return format(float(x), ".17g")


# ---------------------------------------------------------------------------
# curve CSV
# ---------------------------------------------------------------------------

def test_curve_csv_golden_eq1():
    # lambda = 1 on [-1, 1], 3 samples: all values elementary
    text = curve_csv_text(make_curve(1.0), -1.0, 1.0, 3)
    x1 = math.pi / 2.0 - 1.0
    x3 = math.log(2.0)
    expected = "\n".join(
        [
            CSV_HEADER,
            f"-1,{_num(-x1)},{_num(x3)},0,-1,1,2",
            "0,0,0,1,0,2,1",
            f"1,{_num(x1)},{_num(x3)},0,1,1,2",
        ]
    ) + "\n"
    assert text == expected


def test_curve_csv_gt1_row():
    text = curve_csv_text(make_curve(3.0), -3.0, 3.0, 7)
    row = text.split("\n")[4]  # s = 0
    fields = row.split(",")
    assert fields[0] == "0"
    assert float(fields[2]) == pytest.approx(math.log(2.0), rel=1e-15)
    assert fields[6] == "2"


def test_curve_csv_validation():
    with pytest.raises(ValueError):
        curve_csv_text(make_curve(1.0), -1.0, 1.0, 1)
    with pytest.raises(ValueError):
        curve_csv_text(make_curve(1.0), 1.0, -1.0, 5)


def test_curve_csv_deterministic(tmp_path):
    first = curve_csv_text(make_curve(0.5), -4.0, 4.0, 33)
    second = curve_csv_text(make_curve(0.5), -4.0, 4.0, 33)
    assert first == second
    assert "\r" not in first


# ---------------------------------------------------------------------------
# OBJ meshes
# ---------------------------------------------------------------------------

def test_obj_minimal_quad():
    text = profile_mesh_obj_text(make_curve(1.0), (-1.0, 1.0), 2.0, 2, 2)
    lines = text.strip().split("\n")
    assert sum(1 for l in lines if l.startswith("v ")) == 4
    assert sum(1 for l in lines if l.startswith("f ")) == 2


def test_obj_counts_and_indices():
    ns, nt = 5, 4
    text = profile_mesh_obj_text(make_curve(0.5), (-2.0, 2.0), 3.0, ns, nt)
    lines = text.strip().split("\n")
    v_lines = [l for l in lines if l.startswith("v ")]
    f_lines = [l for l in lines if l.startswith("f ")]
    assert len(v_lines) == ns * nt
    assert len(f_lines) == 2 * (ns - 1) * (nt - 1)
    for line in f_lines:
        indices = [int(tok) for tok in line.split()[1:]]
        assert len(indices) == 3
        assert all(1 <= idx <= ns * nt for idx in indices)
        assert len(set(indices)) == 3


def test_obj_middle_vertex():
    # lambda = 1, s0 = 3, ns = 3: middle profile sample sits at the origin
    text = profile_mesh_obj_text(make_curve(1.0), (-3.0, 3.0), 5.0, 3, 2)
    v_lines = [l for l in text.strip().split("\n") if l.startswith("v ")]
    assert v_lines[2] == "v 0 0 0"
    assert v_lines[3] == "v 0 5 0"


def test_obj_cylinder():
    radius = 1.5
    text = cylinder_mesh_obj_text(radius, 4.0, 9, 3)
    v_lines = [l for l in text.strip().split("\n") if l.startswith("v ")]
    assert len(v_lines) == 27
    for line in v_lines:
        x, y, z = (float(tok) for tok in line.split()[1:])
        assert math.hypot(x, y) == pytest.approx(radius, rel=1e-12)
        assert 0.0 <= z <= 4.0


def test_obj_validation():
    with pytest.raises(ValueError):
        profile_mesh_obj_text(make_curve(1.0), (-1.0, 1.0), 2.0, 1, 2)
    with pytest.raises(ValueError):
        cylinder_mesh_obj_text(1.0, 2.0, 4, 1)


# ---------------------------------------------------------------------------
# table rendering
# ---------------------------------------------------------------------------

def test_rounding_half_away_from_zero():
    assert round_half_away(0.00005) == 0.0001
    assert round_half_away(-0.00005) == -0.0001
    assert round_half_away(0.12345) == 0.1235
    assert round_half_away(-0.12345) == -0.1235
    assert format_cell(0.832) == "0.8320"
    assert format_cell(-0.09625) == "-0.0963"
    assert format_cell(-1e-9) == "0.0000"


def test_markdown_rendering():
    table = instability_table(0.25, (3.0,), (15.0, 20.0, 25.0))
    text = render_table_markdown(table)
    lines = text.strip().split("\n")
    assert lines[0] == "| s0 \\ L | 15 | 20 | 25 |"
    assert "**-0.0963**" in lines[2]
    assert "0.2406" in lines[2]


def test_csv_render_parse_idempotent():
    table = instability_table(0.5, (2.0, 10.0), (10.0, 12.0, 14.0))
    text = render_table_csv(table)
    parsed = parse_table_csv(text)
    assert render_table_csv(parsed) == text
    assert parsed.first_negative == table.first_negative


def test_csv_marks_column():
    table = instability_table(0.25, (3.0, 7.0), (15.0, 25.0))
    text = render_table_csv(table)
    lines = text.strip().split("\n")
    assert lines[0].endswith("first_negative_L")
    assert lines[1].endswith(",25")
    assert lines[2].endswith(",")  # no negative in the s0 = 7 row


# ---------------------------------------------------------------------------
# CLI
# ---------------------------------------------------------------------------

def test_cli_curve(tmp_path, capsys):
    out = tmp_path / "curve.csv"
    assert main(["curve", "--lambda", "1", "--s-min", "-3", "--s-max", "3",
                 "--samples", "7", "--out", str(out)]) == 0
    lines = out.read_text().split("\n")
    assert lines[0] == CSV_HEADER
    assert lines[4] == "0,0,0,1,0,2,1"


def test_cli_curve_usage_error(tmp_path, capsys):
    out = tmp_path / "curve.csv"
    code = main(["curve", "--lambda", "1", "--samples", "1", "--out", str(out)])
    captured = capsys.readouterr()
    assert code == 1
    assert captured.err.startswith("error:")
    assert captured.err.count("\n") == 1


def test_cli_critical_length_gt1(capsys):
    assert main(["critical-length", "--lambda", "3", "--sigma", "0"]) == 0
    captured = capsys.readouterr()
    assert "L0 = 2.156983" in captured.out
    assert "method = closed-form" in captured.out
    assert "mode = volume-preserving" in captured.out


def test_cli_critical_length_eq1(capsys):
    assert main(["critical-length", "--lambda", "1", "--s0", "2"]) == 0
    assert "L0 = 6.012662" in capsys.readouterr().out


def test_cli_critical_length_below_threshold(capsys):
    code = main(["critical-length", "--lambda", "1", "--s0", "0.9"])
    captured = capsys.readouterr()
    assert code == 1
    assert "threshold" in captured.err


def test_cli_critical_length_lt1(capsys):
    assert main(["critical-length", "--lambda", "0.25", "--s0", "3"]) == 0
    captured = capsys.readouterr()
    assert "L0 = 20.357054" in captured.out
    assert "method = root-found" in captured.out


def test_cli_critical_length_cylinder(capsys):
    assert main(["critical-length", "--radius", "1"]) == 0
    assert "L0 = 8.885766" in capsys.readouterr().out
    assert main(["critical-length", "--radius", "1", "--strong"]) == 0
    assert "L0 = 4.442883" in capsys.readouterr().out


def test_cli_critical_length_flag_conflicts(capsys):
    assert main(["critical-length", "--lambda", "3", "--radius", "1"]) == 1
    capsys.readouterr()
    assert main(["critical-length"]) == 1


def test_cli_table_markdown(capsys):
    assert main(["table", "--lambda", "0.25"]) == 0
    out = capsys.readouterr().out
    assert "**-0.0963**" in out
    assert "**-0.0273**" in out  # first negative of the s0 = 6 row, at L = 35


def test_cli_table_csv(capsys):
    assert main(["table", "--lambda", "0.5", "--format", "csv"]) == 0
    out = capsys.readouterr().out
    parsed = parse_table_csv(out)
    assert parsed.cells[4][0] == pytest.approx(3.2460, abs=1e-3)


def test_cli_table_no_default_grid(capsys):
    assert main(["table", "--lambda", "0.3"]) == 1
    assert "error:" in capsys.readouterr().err


def test_cli_qform(capsys):
    assert main(["qform", "--lambda", "0.25", "--s0", "3", "--length", "15"]) == 0
    out = capsys.readouterr().out
    assert "reduced I" in out
    assert "0.24058" in out


def test_cli_cylinder(capsys):
    assert main(["cylinder", "--radius", "1", "--length", "10"]) == 0
    out = capsys.readouterr().out
    assert "cmc L0" in out and "6.283185" in out
    assert "soliton L0" in out and "8.885766" in out


def test_cli_mesh(tmp_path, capsys):
    out = tmp_path / "piece.obj"
    assert main(["mesh", "--lambda", "1", "--s0", "3", "--length", "5",
                 "--ns", "3", "--nt", "2", "--out", str(out)]) == 0
    text = out.read_text()
    assert text.count("\nf ") + text.startswith("f ") == 4  # 2(ns-1)(nt-1)


def test_cli_mesh_bad_path(tmp_path, capsys):
    missing = tmp_path / "no" / "such" / "dir" / "x.obj"
    code = main(["mesh", "--lambda", "1", "--s0", "3", "--length", "5",
                 "--out", str(missing)])
    assert code == 1
    assert capsys.readouterr().err.startswith("error:")


def test_cli_verify_suite(capsys):
    assert main(["verify", "--suite", "numerics"]) == 0
    out = capsys.readouterr().out
    assert "PASS numerics/polynomial-exactness" in out
    assert "FAIL" not in out


def test_cli_unknown_flag(capsys):
    code = main(["curve", "--nope", "1"])
    captured = capsys.readouterr()
    assert code == 1
    assert captured.err.startswith("error:")


def test_cli_help_flag_surface(capsys):
    # frozen flag surface per subcommand
    expected = {
        "curve": ["--lambda", "--s-min", "--s-max", "--samples", "--out"],
        "qform": ["--lambda", "--s0", "--sigma", "--length", "--strong"],
        "critical-length": ["--lambda", "--radius", "--s0", "--sigma",
                            "--uniform", "--strong", "--l-max"],
        "table": ["--lambda", "--s0", "--lengths", "--format", "--out"],
        "cylinder": ["--radius", "--length", "--strong"],
        "mesh": ["--lambda", "--radius", "--s0", "--sigma", "--length",
                 "--ns", "--nt", "--out"],
        "verify": ["--suite", "--lambda", "--abs-tol", "--rel-tol",
                   "--max-subdivisions"],
    }
    for command, flags in expected.items():
        assert main([command, "--help"]) == 0
        text = capsys.readouterr().out
        for flag in flags:
            assert flag in text, (command, flag)
