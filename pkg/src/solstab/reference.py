"""Golden reference values used by the verification suite and tests.

The tables hold the reduced instability integral I(u) of the lambda < 1
cosine family on fixed (s0, L) grids for the three sample values
lambda = 1/4, 1/2, 3/4, rounded as in the original tabulation (mostly 4
decimals, a few cells carry 5 or 3).  ``first_negative`` marks the first
negative column per row, the boxed-entry convention; None means the row
stays positive on the grid.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

__all__ = [
    "ReferenceTable",
    "REFERENCE_TABLES",
    "TABLE_ABS_TOL",
    "GRAPH_BOUNDS",
    "EQ1_THRESHOLD",
    "ROUTINE_CHECK",
]


@dataclass(frozen=True)
class ReferenceTable:
    lam: float
    s0_values: tuple[float, ...]
    length_values: tuple[float, ...]
    cells: tuple[tuple[float, ...], ...]
    first_negative: tuple[Optional[int], ...]


REFERENCE_TABLES: dict[float, ReferenceTable] = {
    0.25: ReferenceTable(
        lam=0.25,
        s0_values=(3.0, 4.0, 5.0, 6.0, 7.0),
        length_values=(15.0, 20.0, 25.0, 30.0, 35.0, 40.0),
        cells=(
            (0.2405, 0.0102, -0.0962, -0.1541, -0.1891, -0.2117),
            (0.3229, 0.0158, -0.1262, -0.2034, -0.2499, -0.2802),
            (0.5434, 0.1596, -0.0180, -0.1145, -0.1727, -0.2104),
            (0.8320, 0.3715, 0.1583, 0.0425, -0.0273, -0.0726),
            (1.1585, 0.6211, 0.3724, 0.2373, 0.1558, 0.1030),
        ),
        first_negative=(2, 2, 2, 4, None),
    ),
    0.5: ReferenceTable(
        lam=0.5,
        s0_values=(2.0, 4.0, 6.0, 8.0, 10.0),
        length_values=(10.0, 12.0, 14.0, 16.0, 18.0, 20.0),
        cells=(
            (0.2486, 0.0074, -0.1380, -0.2324, -0.2971, -0.3434),
            (0.3297, -0.1527, -0.4436, -0.6324, -0.7619, -0.8545),
            (1.1578, 0.4340, -0.0023, -0.2856, -0.4798, -0.61872),
            (2.1681, 1.2030, 0.6212, 0.2435, -0.0153, -0.2005),
            (3.2460, 2.0397, 1.3124, 0.8403, 0.51667, 0.2851),
        ),
        first_negative=(2, 1, 2, 4, None),
    ),
    0.75: ReferenceTable(
        lam=0.75,
        s0_values=(2.0, 4.0, 6.0, 8.0, 10.0),
        length_values=(2.0, 4.0, 6.0, 8.0, 10.0, 12.0),
        cells=(
            (18.3781, 3.5737, 0.832, -0.1273, -0.5715, -0.8127),
            (37.1420, 7.5332, 2.0501, 0.1310, -0.7572, -1.2397),
            (56.7298, 12.3166, 4.0918, 1.2132, -0.1191, -0.8429),
            (76.5192, 17.3016, 6.3353, 2.4972, 0.7206, -0.2443),
            (96.3834, 22.3613, 8.6535, 3.8558, 1.6351, 0.4288),
        ),
        first_negative=(3, 4, 4, 5, None),
    ),
}

# The lambda = 1/4 table is quoted to 4 decimals throughout; the other two
# mix rounding precision, so their tolerance is looser.
TABLE_ABS_TOL: dict[float, float] = {0.25: 5e-4, 0.5: 1e-3, 0.75: 1e-3}

# Graph half-widths s1 of the lambda < 1 profiles, 4-decimal golden values.
GRAPH_BOUNDS: dict[float, float] = {0.25: 2.1311, 0.5: 1.5206, 0.75: 1.2024}

# Amplitude threshold for the lambda = 1 family (root of the large-L limit).
EQ1_THRESHOLD = 1.0213

# Spot check of the reduced integral: (lam, s0, L, I) golden quadruple.
ROUTINE_CHECK = (0.25, 3.0, 4.0, 7.1166)
