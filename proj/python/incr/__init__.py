"""Incremental computation graph with adaptive variables and a spreadsheet.

The heavy lifting lives in the compiled ``_core`` extension; this package
just re-exports its public surface.
"""

from ._core import (
    AVar,
    CycleError,
    Engine,
    Error,
    EvalError,
    FormulaGraph,
    NodeId,
    NodeKind,
    ParseError,
    Sheet,
    UsageError,
    format_number,
    memoize,
    memoize_in,
    memoize_to_node,
    random_trace,
    run_script,
)

__all__ = [
    "AVar",
    "CycleError",
    "Engine",
    "Error",
    "EvalError",
    "FormulaGraph",
    "NodeId",
    "NodeKind",
    "ParseError",
    "Sheet",
    "UsageError",
    "format_number",
    "memoize",
    "memoize_in",
    "memoize_to_node",
    "random_trace",
    "run_script",
]
