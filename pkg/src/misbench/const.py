from __future__ import annotations

MAX_ORDER = 64
BRUTE_FORCE_MAX_ORDER = 20
CANONICAL_MAX_ORDER = 8
MATRIX_SCAN_MAX_ORDER = 6
CENSUS_MAX_SPACE = 1 << 22
MONTE_CARLO_SAMPLES = 200_000

GRAPH6_OFFSET = 63
GRAPH6_HEADER = ">>graph6<<"
GRAPH6_SHORT_MAX = 62

LOG_TOLERANCE = 1e-12
IDENTITY_TOLERANCE = 1e-10
BISECTION_TOLERANCE = 1e-12
FLOAT_DIGITS = 12

# 1 + 6 + 6·5: a cell and everything within two steps in a max-degree-6 cell graph
SQUARE_PACKING_RATIO = 37
MAX_CELL_DEGREE = 6

ENTROPY_EPS_MAX = 1 / 23
