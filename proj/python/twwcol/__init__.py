"""Twin-width contraction sequences and the coloring reductions built on them."""

import json

from ._core import (
    BudgetExceeded,
    Error,
    Formula,
    MinColInstance,
    ThreeColInstance,
    Trigraph,
    build_3col,
    build_mincol,
    chromatic_number,
    exact_twinwidth,
    is_k_colorable,
    is_proper,
    max_red_degree,
    quotient,
    red_degree,
    redify,
    replay,
    run_cli,
    solve_nae,
    solve_sat,
    subdivision_positions,
    verify_d_sequence,
)


def cli(*args):
    """Run a CLI subcommand in-process; returns (exit_code, report dict or help text)."""
    code, out = run_cli([str(a) for a in args])
    try:
        return code, json.loads(out)
    except ValueError:
        return code, out


__all__ = [name for name in dir() if not name.startswith("_") and name != "json"]
