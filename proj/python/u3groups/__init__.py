import json

from ._core import (
    ContractViolation,
    Group,
    GroupNotClosed,
    IncompleteTable,
    NoSuchSeriesMember,
    ParseError,
    build_group,
    build_series,
    canonical_expression,
    default_tables_path,
    generator_matrix,
    series_expressions,
    solve_tn,
    tensor_multiplicities,
    theorem_center_predict,
    theorem_product_predict,
    theorem_series_predicate,
)
from . import _core


def report(expressions, tol=1e-7, max_order=20000, tables=None):
    group = build_group(list(expressions), tol, max_order)
    if tables is None:
        tables = default_tables_path()
    canonical = [canonical_expression(e) for e in expressions]
    return json.loads(_core.report_json(group, canonical, tables))


def character_table(group):
    return json.loads(_core.character_table_json(group))


def verify(tables="", extended=False):
    return json.loads(_core.verify_json(tables, extended))


__all__ = [
    "ContractViolation",
    "Group",
    "GroupNotClosed",
    "IncompleteTable",
    "NoSuchSeriesMember",
    "ParseError",
    "build_group",
    "build_series",
    "canonical_expression",
    "character_table",
    "default_tables_path",
    "generator_matrix",
    "report",
    "series_expressions",
    "solve_tn",
    "tensor_multiplicities",
    "theorem_center_predict",
    "theorem_product_predict",
    "theorem_series_predicate",
    "verify",
]
