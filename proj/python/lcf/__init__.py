"""Exact list color function computations for K_{2,n}."""

import json

from . import _lcf
from ._lcf import (
    BudgetExceeded,
    corollary_interval,
    counting_distribution,
    epsilon_solve,
    f_functions,
    lemma_interval,
    scan_first_bad_n,
    tau_upper_bound,
    threshold_condition,
    wqy_bound,
)

__version__ = _lcf.__version__


def chromatic_poly_k2n(n, m):
    return int(_lcf.chromatic_poly_k2n(n, m))


def chromatic_poly_reference(family, n, m):
    return int(_lcf.chromatic_poly_reference(family, n, m))


def evaluate(m, d, z):
    """P(K_{2,n}, L) of the canonical assignment (m, d, z)."""
    return int(_lcf.evaluate_pair_product(m, d, list(z)))


def evaluate_lists(x, y):
    return int(_lcf.evaluate_lists(x, y))


def brute_force_count(x, y):
    return int(_lcf.brute_force_count(x, y))


def canonicalize(x, y):
    return json.loads(_lcf.canonicalize(x, y))


def _verdict(raw):
    v = json.loads(raw)
    for key in ("chromatic", "min_value"):
        if v.get(key) is not None:
            v[key] = int(v[key])
    return v


def min_list_count(n, m, max_states=500_000, max_seconds=1800.0, parallel_width=1, symmetry=False):
    return _verdict(_lcf.min_list_count(n, m, max_states, max_seconds, parallel_width, symmetry))


def compare_with_chromatic(n, m, max_states=500_000):
    return _verdict(_lcf.compare_with_chromatic(n, m, max_states))


def construction_witness(n, m):
    raw = _lcf.construction_witness(n, m)
    if raw is None:
        return None
    w = json.loads(raw)
    w["count"] = int(w["count"])
    return w


def general_formula(n, m, t):
    return int(_lcf.general_formula(n, m, t))


def extension_formula(m, t, c):
    return int(_lcf.extension_formula(m, t, c))


def reproduce(target):
    """(exit_code, text report) for thm-casework, thm-upper, prop-two or tau-small."""
    return _lcf.reproduce(target)
