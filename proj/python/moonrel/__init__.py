"""Exact decomposition of rational functions and rational relations between q-series."""

from ._moonrel import (
    MoonrelError,
    QSeries,
    RatFun,
    Relation,
    apply,
    build_graph,
    chains,
    decompose,
    equivalent,
    export_dot,
    find_relation,
    find_relations_all_r,
    inner_series_solve,
    load_catalog,
    modular_polynomial,
    parse,
    verify_relation,
)

__all__ = [
    "MoonrelError",
    "QSeries",
    "RatFun",
    "Relation",
    "apply",
    "build_graph",
    "chains",
    "decompose",
    "equivalent",
    "export_dot",
    "find_relation",
    "find_relations_all_r",
    "inner_series_solve",
    "load_catalog",
    "modular_polynomial",
    "parse",
    "verify_relation",
]
