"""Exact q-analogs of the hypercube: verification suites and exact operators.

Thin wrapper over the C++ core. The heavy lifting (exact arithmetic over
Q(q^{1/4}), finite-field linear algebra, scheme computations) happens in
the `_qlab` extension; this package re-exports it and adds a couple of
JSON conveniences.
"""

import json

from ._qlab import (
    QlabError,
    cube_matrix_json,
    dual_polar_labels,
    gaussian_binomial,
    lagrangian_count,
    lattice_operator_json,
    matrix_roundtrip,
    qbracket_gauss,
    run_suite,
    subspace_count,
    suite_names,
)

__all__ = [
    "QlabError",
    "cube_matrix_json",
    "dual_polar_labels",
    "gaussian_binomial",
    "lagrangian_count",
    "lattice_operator_json",
    "matrix_roundtrip",
    "qbracket_gauss",
    "run_suite",
    "run_suite_dict",
    "subspace_count",
    "suite_names",
]


def run_suite_dict(suite, **kwargs):
    """Like run_suite but parses the report JSON into a dict."""
    ok, text = run_suite(suite, **kwargs)
    report = json.loads(text)
    report["ok"] = ok
    return report
