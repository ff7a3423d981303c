"""Python bindings for the treepack C++ library."""

import json

from ._core import (
    Graph,
    InputError,
    __version__,
    build_B,
    complete,
    complete_bipartite,
    eigenvalues,
    fixture,
    fixture_H1,
    fixture_H2,
    format_edge_list,
    lambda_,
    nu_f_exact,
    parse_edge_list,
    petersen,
    run_cli,
    tau,
)
from ._core import check_p_json as _check_p_json


def check_p(g, k, d, budget=100_000_000):
    """Decide property P(k, d); returns the verdict as a dict."""
    return json.loads(_check_p_json(g, k, d, budget))


def report(*args):
    """Run a CLI command and return (exit_code, parsed JSON report)."""
    code, out, err = run_cli(list(args))
    if code not in (0, 1):
        raise RuntimeError(err.strip())
    return code, json.loads(out)


__all__ = [
    "Graph",
    "InputError",
    "__version__",
    "build_B",
    "check_p",
    "complete",
    "complete_bipartite",
    "eigenvalues",
    "fixture",
    "fixture_H1",
    "fixture_H2",
    "format_edge_list",
    "lambda_",
    "nu_f_exact",
    "parse_edge_list",
    "petersen",
    "report",
    "run_cli",
    "tau",
]
