"""MITL verification over under/over-approximating interval queues.

Queues, intervals, formulas and rationals are passed as text, e.g.
``"{[0,1), (2,inf)}"``, ``"[1,2]"``, ``"F[0,2] g"`` and ``"7/2"``.
"""

from ._mitlq import (
    Error,
    EvaluationError,
    OracleError,
    ParseError,
    Trace,
    TraceError,
    atoms,
    complement,
    conjoin,
    construct,
    contains,
    desugar,
    difference,
    evaluate,
    load_trace,
    loads_trace,
    measure,
    normalize,
    oracle_holds,
    oracle_truth_set,
    parse_formula,
    render_svg,
    report_json,
    until_op,
    verdict,
)

__all__ = [
    "Error",
    "EvaluationError",
    "OracleError",
    "ParseError",
    "Trace",
    "TraceError",
    "atoms",
    "complement",
    "conjoin",
    "construct",
    "contains",
    "desugar",
    "difference",
    "evaluate",
    "load_trace",
    "loads_trace",
    "measure",
    "normalize",
    "oracle_holds",
    "oracle_truth_set",
    "parse_formula",
    "render_svg",
    "report_json",
    "until_op",
    "verdict",
]
