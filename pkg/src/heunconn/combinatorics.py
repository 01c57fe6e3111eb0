"""Lattice-walk combinatorics behind the coupling series of ``ln a_inf``.

The infinite tridiagonal transition matrix ``A`` with ``A[k, k+1] = 1`` and
``A[k+1, k] = beta_k`` encodes the two-term structure of the rescaled
recurrence.  Powers of ``A`` count Dyck-like walks: ``Tr A^{2n}`` sums over
closed walks of ``2n`` steps, and grouping walks by the multiset of diagonals
on which their up-steps occur gives

``Tr A^{2n} = sum_k sum_mu N_mu beta_k^{mu_1} ... beta_{k+len-1}^{mu_len}``

where ``mu`` runs over compositions of ``n`` (the walk types) and ``N_mu``
counts walks of each type.  The series coefficients then follow from
``ln a_inf = -sum_n Tr A^{2n} lam^n / (2n)`` for the purely two-term
(RCHE-like) case.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from typing import Iterator, Sequence

from .equations import EquationSpec, alpha_beta, validate
from .errors import DomainError, FamilyFieldError, SizeError
from .richardson import extrapolate, geometric_ladder

__all__ = [
    "compositions",
    "walk_type",
    "n_mu",
    "enumerate_walk_types",
    "trace_power",
    "log_a_series_from_traces",
]

_MAX_N = 16


def compositions(n: int) -> Iterator[tuple[int, ...]]:
    """All ``2**(n-1)`` compositions (ordered partitions) of ``n`` in
    lexicographic order: ``compositions(3)`` yields
    ``(1, 1, 1), (1, 2), (2, 1), (3,)``.
    """
    if not isinstance(n, int) or n < 1:
        raise DomainError(f"compositions need a positive integer, got {n!r}")
    if n > _MAX_N:
        raise SizeError(f"composition order capped at {_MAX_N}, got {n}")

    def _gen(m: int) -> Iterator[tuple[int, ...]]:
        for first in range(1, m + 1):
            if first == m:
                yield (m,)
            else:
                for rest in _gen(m - first):
                    yield (first,) + rest

    return _gen(n)


def walk_type(steps: str) -> tuple[int, ...]:
    """Type of a staircase walk: how many vertical edges cross each occupied
    midpoint diagonal, in northwest (ascending ``y - x``) order.

    ``steps`` is a string over {"U", "R"} with equally many of each; a "U"
    taken after ``u`` ups and ``r`` rights crosses the diagonal through its
    midpoint, labelled ``d = u - r``.  For balanced walks the occupied
    diagonals are automatically consecutive; the type lists the crossing
    counts from the lowest occupied diagonal upward, so it depends only on
    the walk's shape, not its basepoint.  Unbalanced or malformed walks
    raise :class:`DomainError`.
    """
    if not isinstance(steps, str) or any(ch not in "UR" for ch in steps):
        raise DomainError("walk must be a string over {'U', 'R'}")
    counts: dict[int, int] = {}
    height = 0
    for ch in steps:
        if ch == "U":
            counts[height] = counts.get(height, 0) + 1
            height += 1
        else:
            height -= 1
    if height != 0:
        raise DomainError(
            f"walk is unbalanced: {steps.count('U')} ups vs {steps.count('R')} rights"
        )
    if not counts:
        raise DomainError("empty walk has no type")
    diags = sorted(counts)
    if diags != list(range(diags[0], diags[0] + len(diags))):
        raise DomainError("occupied diagonals are not consecutive")
    return tuple(counts[d] for d in diags)


def n_mu(mu: Sequence[int]) -> int:
    """Number of closed walks of type ``mu`` (a composition of ``n``):

    ``N_mu = (2n / mu_1) * prod_m binom(mu_m + mu_{m+1} - 1, mu_{m+1})``.

    Exact integer arithmetic throughout.
    """
    mu = tuple(mu)
    if not mu or any((not isinstance(p, int)) or p < 1 for p in mu):
        raise DomainError(f"walk type must be a nonempty tuple of positive integers, got {mu!r}")
    n = sum(mu)
    if n > _MAX_N:
        raise SizeError(f"walk-type weight capped at {_MAX_N}, got {n}")
    val = Fraction(2 * n, mu[0])
    for a, b in zip(mu, mu[1:]):
        val *= math.comb(a + b - 1, b)
    if val.denominator != 1:
        raise DomainError(f"walk count for {mu} is not an integer: {val}")
    return int(val)


def enumerate_walk_types(n: int) -> dict[tuple[int, ...], int]:
    """Brute-force census: walk counts by type over all balanced length-``2n``
    walks that stay nonnegative.  Exponential in ``n``; capped at ``n = 8``.
    """
    if not isinstance(n, int) or n < 1:
        raise DomainError(f"census needs a positive integer, got {n!r}")
    if n > 8:
        raise SizeError(f"brute-force census capped at n = 8, got {n}")
    out: dict[tuple[int, ...], int] = {}
    for up_positions in itertools.combinations(range(2 * n), n):
        steps = ["R"] * (2 * n)
        for p in up_positions:
            steps[p] = "U"
        t = walk_type("".join(steps))
        out[t] = out.get(t, 0) + 1
    return out


def trace_power(
    spec: EquationSpec,
    n: int,
    k_max: int = 20000,
    levels: int = 4,
) -> complex:
    """``Tr A^{2n}`` for the two-term transition matrix built from the
    family's ``beta_k``, via the walk-type expansion with ladder
    extrapolation of the ``k``-sum.  Only families with ``alpha == 0``
    (RCHE) expose the two-term structure; others raise
    :class:`FamilyFieldError`.
    """
    validate(spec)
    if spec.family != "RCHE":
        raise FamilyFieldError(
            f"trace expansion requires the two-term family RCHE, got {spec.family}"
        )
    if not isinstance(n, int) or n < 1:
        raise DomainError(f"trace power needs a positive integer, got {n!r}")
    if n > _MAX_N:
        raise SizeError(f"trace power capped at {_MAX_N}, got {n}")
    terms = [(mu, n_mu(mu)) for mu in compositions(n)]
    nodes = geometric_ladder(k_max, levels)
    betas = [alpha_beta(spec, k)[1] for k in range(1, k_max + n)]
    sums = []
    acc = 0.0 + 0.0j
    it = iter(nodes)
    nxt = next(it)
    for k in range(1, k_max + 1):
        local = 0.0 + 0.0j
        for mu, cnt in terms:
            prod = float(cnt) + 0.0j
            for off, power in enumerate(mu):
                b = betas[k - 1 + off]
                for _ in range(power):
                    prod *= b
            local += prod
        acc += local
        if k == nxt:
            sums.append(acc)
            nxt = next(it, None)
    inv_nodes = [1.0 / m for m in nodes]
    limit, _err = extrapolate(inv_nodes, sums)
    return complex(limit)


def log_a_series_from_traces(
    spec: EquationSpec,
    N: int,
    k_max: int = 20000,
    levels: int = 4,
) -> list[complex]:
    """Series coefficients ``c_1 .. c_N`` of ``ln a_inf`` from traces:
    ``c_n = -Tr A^{2n} / (2n)``.  Two-term families only."""
    if not isinstance(N, int) or N < 1 or N > _MAX_N:
        raise SizeError(f"series order must be in [1, {_MAX_N}], got {N!r}")
    return [
        -trace_power(spec, n, k_max=k_max, levels=levels) / (2 * n)
        for n in range(1, N + 1)
    ]
