"""Shared fixtures: the four worked examples and small comparison helpers."""

from __future__ import annotations

import pytest

import oracles
from heunconn import che_spec, he_spec, hyp_spec, rche_spec


def _f(s: str) -> float:
    return float(s)


@pytest.fixture(scope="session")
def hyp_example():
    d = oracles.RUN_HYP
    return hyp_spec(_f(d["theta0"]), _f(d["theta1"]), _f(d["theta_inf_hyp"]))


@pytest.fixture(scope="session")
def rche_example():
    d = oracles.RUN_RCHE
    return rche_spec(_f(d["theta0"]), _f(d["theta1"]), _f(d["omega"]), _f(d["lam"]))


@pytest.fixture(scope="session")
def che_example():
    d = oracles.RUN_CHE
    return che_spec(
        _f(d["theta0"]),
        _f(d["theta1"]),
        _f(d["omega"]),
        _f(d["theta_star"]),
        _f(d["lam"]),
    )


@pytest.fixture(scope="session")
def he_example():
    d = oracles.RUN_HE
    return he_spec(
        _f(d["theta0"]),
        _f(d["theta1"]),
        _f(d["theta_t"]),
        _f(d["theta_inf"]),
        _f(d["omega"]),
        _f(d["lam"]),
    )


def oracle_matrix(run: dict) -> dict:
    """Decode the frozen ``matrix`` block of a RUN_* table to complex values."""
    return {k: oracles.cplx(v) for k, v in run["matrix"].items()}


def rel_diff(a: complex, b: complex) -> float:
    """Relative difference scaled by the larger magnitude (floor 1e-300)."""
    scale = max(abs(a), abs(b), 1e-300)
    return abs(a - b) / scale


def matrix_rel_diff(m: dict, ref: dict) -> float:
    """Worst entrywise relative difference between two keyed 2x2 matrices."""
    return max(rel_diff(m[k], ref[k]) for k in ("++", "+-", "-+", "--"))
