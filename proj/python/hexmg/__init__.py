"""Sectorized hexagonal network toolkit.

Exact quantities come back as ``fractions.Fraction``.
"""

from fractions import Fraction

from . import _hexmg
from ._hexmg import (
    ClusterPlan,
    Network,
    RankDeficientError,
    build_network,
    cell_distance,
    cluster_plan,
    interference_graph,
    partition_census,
    run_zf_trials,
    validate_schedule,
    verify_all,
)

__all__ = [
    "ClusterPlan",
    "Network",
    "RankDeficientError",
    "build_network",
    "cell_distance",
    "cluster_plan",
    "interference_graph",
    "inner_bound",
    "outer_bound",
    "partition_census",
    "required_prelogs",
    "run_zf_trials",
    "scheme_point",
    "validate_schedule",
    "verify_all",
]


def _q(x):
    return str(Fraction(x))


def _pair(p):
    return Fraction(p[0]), Fraction(p[1])


def required_prelogs(scheme, t, M):
    """(mu_tx, mu_rx) for scheme 'S1'..'S5'."""
    return _pair(_hexmg.required_prelogs(scheme, t, M))


def scheme_point(scheme, t, M, mu_tx, mu_rx, D):
    return _pair(_hexmg.scheme_point(scheme, t, M, _q(mu_tx), _q(mu_rx), D))


def inner_bound(M, mu_tx, mu_rx, D, t=None):
    return [_pair(v) for v in _hexmg.inner_bound(M, _q(mu_tx), _q(mu_rx), D, t)]


def outer_bound(M, mu_tx, mu_rx, D):
    return [_pair(v) for v in _hexmg.outer_bound(M, _q(mu_tx), _q(mu_rx), D)]
