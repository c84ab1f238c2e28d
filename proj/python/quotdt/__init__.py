"""Exact degree-zero DT invariants of Quot schemes on toric 3-folds."""

import json as _json

from ._core import (
    QuotDTError,
    builtin_space_names,
    c3_t_omega,
    c3_via_localization,
    count_fixed_points,
    dt_closed_formula,
    dt_series,
    euler_inverse,
    macmahon,
    partition_pairs,
    plane_partitions,
    vertex_character,
)
from ._core import run as _run


def run(config: str):
    """Run a CLI command given config text; returns (exit_code, report dict)."""
    code, text = _run(config)
    return code, _json.loads(text)


__all__ = [
    "QuotDTError",
    "builtin_space_names",
    "c3_t_omega",
    "c3_via_localization",
    "count_fixed_points",
    "dt_closed_formula",
    "dt_series",
    "euler_inverse",
    "macmahon",
    "partition_pairs",
    "plane_partitions",
    "run",
    "vertex_character",
]
