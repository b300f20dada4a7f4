"""File emitters: curve CSV, Wavefront OBJ meshes and table rendering.

All output is deterministic: fixed digit counts, ``\\n`` line endings and
no locale dependence, so identical inputs produce byte-identical files.
Curve CSV keeps full precision (17 significant digits); tables round to 4
decimals, ties away from zero.
"""

from __future__ import annotations

import math
from decimal import ROUND_HALF_UP, Decimal
from typing import Optional

from .curves import ProfileCurve, position, sample
from .stability import InstabilityTable

__all__ = [
    "CSV_HEADER",
    "round_half_away",
    "format_cell",
    "curve_csv_text",
    "write_curve_csv",
    "profile_mesh_obj_text",
    "cylinder_mesh_obj_text",
    "write_text",
    "render_table_markdown",
    "render_table_csv",
    "parse_table_csv",
]

CSV_HEADER = "s,x1,x3,dx1,dx3,kappa,weight"


def _num(x: float) -> str:
    """Full-precision number formatting (17 significant digits)."""
    return format(float(x), ".17g")


def round_half_away(x: float, decimals: int = 4) -> float:
    """Round to ``decimals`` places with ties going away from zero."""
    q = Decimal(1).scaleb(-decimals)
    return float(Decimal(repr(float(x))).quantize(q, rounding=ROUND_HALF_UP))


def format_cell(x: float) -> str:
    """4-decimal table cell; negative zero normalises to ``0.0000``."""
    q = Decimal(repr(float(x))).quantize(Decimal("0.0001"), rounding=ROUND_HALF_UP)
    if q.is_zero():
        return "0.0000"
    return str(q)


# ---------------------------------------------------------------------------
# curve CSV
# ---------------------------------------------------------------------------

def curve_csv_text(curve: ProfileCurve, s_min: float, s_max: float, samples: int) -> str:
    """CSV of uniformly sampled curve data, one row per sample."""
    if samples < 2:
        raise ValueError(f"need at least 2 samples, got {samples!r}")
    if not s_min < s_max:
        raise ValueError(f"need s_min < s_max, got {s_min!r}, {s_max!r}")
    lines = [CSV_HEADER]
    step = (s_max - s_min) / (samples - 1)
    for i in range(samples):
        s = s_min + i * step
        p = sample(curve, s)
        lines.append(
            ",".join(_num(v) for v in (p.s, p.x1, p.x3, p.dx1, p.dx3, p.kappa, p.weight))
        )
    return "\n".join(lines) + "\n"


def write_curve_csv(
    curve: ProfileCurve, s_min: float, s_max: float, samples: int, path: str
) -> None:
    write_text(path, curve_csv_text(curve, s_min, s_max, samples))


# ---------------------------------------------------------------------------
# Wavefront OBJ meshes
# ---------------------------------------------------------------------------

def _obj_from_grid(vertices: list[tuple[float, float, float]], ns: int, nt: int) -> str:
    lines = [f"v {_num(x)} {_num(y)} {_num(z)}" for x, y, z in vertices]
    for i in range(ns - 1):
        for j in range(nt - 1):
            v00 = i * nt + j + 1
            v10 = (i + 1) * nt + j + 1
            v11 = (i + 1) * nt + j + 2
            v01 = i * nt + j + 2
            lines.append(f"f {v00} {v10} {v11}")
            lines.append(f"f {v00} {v11} {v01}")
    return "\n".join(lines) + "\n"


def profile_mesh_obj_text(
    curve: ProfileCurve,
    s_interval: tuple[float, float],
    length: float,
    ns: int,
    nt: int,
) -> str:
    """Triangulated grid of the swept surface ``(x1(s), t, x3(s))``.

    Vertices are emitted row-major, s varying slowest; each grid quad
    splits into two triangles with consistent winding.  ``ns * nt``
    vertices, ``2 (ns-1)(nt-1)`` triangles.
    """
    if ns < 2 or nt < 2:
        raise ValueError(f"need ns, nt >= 2, got {ns!r}, {nt!r}")
    a, b = s_interval
    if not a < b:
        raise ValueError(f"need a < b, got {s_interval!r}")
    if not length > 0:
        raise ValueError(f"length must be positive, got {length!r}")
    vertices = []
    for i in range(ns):
        s = a + i * (b - a) / (ns - 1)
        x1, x3 = position(curve, s)
        for j in range(nt):
            t = j * length / (nt - 1)
            vertices.append((x1, t, x3))
    return _obj_from_grid(vertices, ns, nt)


def cylinder_mesh_obj_text(radius: float, length: float, ns: int, nt: int) -> str:
    """Triangulated circular cylinder of radius r, axis along z."""
    if ns < 2 or nt < 2:
        raise ValueError(f"need ns, nt >= 2, got {ns!r}, {nt!r}")
    if not (radius > 0 and length > 0):
        raise ValueError("radius and length must be positive")
    vertices = []
    for i in range(ns):
        angle = 2.0 * math.pi * i / (ns - 1)
        x = radius * math.cos(angle)
        y = radius * math.sin(angle)
        for j in range(nt):
            t = j * length / (nt - 1)
            vertices.append((x, y, t))
    return _obj_from_grid(vertices, ns, nt)


def write_text(path: str, text: str) -> None:
    """Write ``text`` with ``\\n`` endings regardless of platform."""
    with open(path, "w", encoding="utf-8", newline="") as handle:
        handle.write(text)


# ---------------------------------------------------------------------------
# table rendering
# ---------------------------------------------------------------------------

def render_table_markdown(table: InstabilityTable) -> str:
    """Markdown table; the first negative cell of each row is bolded."""
    header = "| s0 \\ L | " + " | ".join(_num(x) for x in table.length_values) + " |"
    rule = "| --- |" + " --- |" * len(table.length_values)
    lines = [header, rule]
    for i, s0 in enumerate(table.s0_values):
        cells = []
        for j, value in enumerate(table.cells[i]):
            text = format_cell(value)
            if table.first_negative[i] == j:
                text = f"**{text}**"
            cells.append(text)
        lines.append("| " + _num(s0) + " | " + " | ".join(cells) + " |")
    return "\n".join(lines) + "\n"


def render_table_csv(table: InstabilityTable) -> str:
    """CSV table; last column holds the first-negative L (empty if none)."""
    header = "s0," + ",".join(_num(x) for x in table.length_values) + ",first_negative_L"
    lines = [header]
    for i, s0 in enumerate(table.s0_values):
        mark = table.first_negative[i]
        mark_text = "" if mark is None else _num(table.length_values[mark])
        row = [_num(s0)] + [format_cell(v) for v in table.cells[i]] + [mark_text]
        lines.append(",".join(row))
    return "\n".join(lines) + "\n"


def parse_table_csv(text: str, lam: float = math.nan) -> InstabilityTable:
    """Parse :func:`render_table_csv` output back into a table."""
    lines = [line for line in text.split("\n") if line]
    header = lines[0].split(",")
    if header[0] != "s0" or header[-1] != "first_negative_L":
        raise ValueError("not a rendered instability-table CSV")
    lengths = tuple(float(x) for x in header[1:-1])
    s0s: list[float] = []
    cells: list[tuple[float, ...]] = []
    marks: list[Optional[int]] = []
    for line in lines[1:]:
        fields = line.split(",")
        s0s.append(float(fields[0]))
        cells.append(tuple(float(x) for x in fields[1:-1]))
        mark_text = fields[-1]
        if mark_text == "":
            marks.append(None)
        else:
            marks.append(lengths.index(float(mark_text)))
    return InstabilityTable(
        lam=lam,
        s0_values=tuple(s0s),
        length_values=lengths,
        cells=tuple(cells),
        first_negative=tuple(marks),
    )
