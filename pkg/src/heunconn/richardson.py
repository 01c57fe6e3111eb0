"""Polynomial extrapolation of sequences with integer-power tails.

Several quantities in this library approach their limits with an asymptotic
expansion in pure integer powers of a small step (typically 1/K for a
truncation size K): partial sums of continued-fraction logarithms, rescaled
recurrence iterates, large-order coefficient ladders, truncated determinants
and truncated trace sums.  For all of them the limit is recovered by Neville
polynomial extrapolation to step zero over a geometric ladder of nodes.

The main entry point :func:`extrapolate` takes the nodes and values and
returns the extrapolated limit together with an error estimate (the magnitude
of the last Neville correction).
"""

from __future__ import annotations

from typing import Any, Sequence

from .errors import DomainError, SlowConvergence

__all__ = ["extrapolate", "geometric_ladder"]


def geometric_ladder(k_max: int, levels: int, ratio: int = 2) -> list[int]:
    """Truncation sizes ``[k_max/ratio**(levels-1), ..., k_max/ratio, k_max]``.

    All entries are exact integer divisions; ``k_max`` must be divisible by
    ``ratio**(levels-1)``.
    """
    if levels < 1:
        raise DomainError("ladder needs at least one level")
    if k_max < 1:
        raise DomainError(f"k_max={k_max} must be positive")
    if ratio < 2:
        raise DomainError(f"ratio={ratio} must be at least 2")
    step = ratio ** (levels - 1)
    if k_max % step != 0:
        raise DomainError(
            f"k_max={k_max} not divisible by ratio**(levels-1)={step}"
        )
    return [k_max // ratio**j for j in range(levels - 1, -1, -1)]


def extrapolate(
    steps: Sequence[Any],
    values: Sequence[Any],
    *,
    require_contraction: bool = False,
) -> tuple[Any, float]:
    """Neville extrapolation of ``values[j] = f(steps[j])`` to step zero.

    Builds the Neville table for the polynomial through the points
    ``(steps[j], values[j])`` and evaluates it at 0.  Returns ``(limit, err)``
    where ``err`` is the magnitude of the final correction (difference between
    the last two table stages) — a standard a-posteriori error estimate for a
    convergent ladder.

    With ``require_contraction=True`` a :class:`SlowConvergence` error is
    raised when the final correction is not smaller than the first-column
    spread, i.e. when the table shows no gain over the raw sequence.
    """
    n = len(steps)
    if n != len(values) or n == 0:
        raise DomainError("steps and values must be equal-length, non-empty")
    if n == 1:
        return values[0], float("inf")
    h = list(steps)
    stage = list(values)
    prev_last = stage[-1]
    for m in range(1, n):
        nxt = []
        for i in range(n - m):
            # Value at 0 of the polynomial through nodes i .. i+m.
            num = h[i] * stage[i + 1] - h[i + m] * stage[i]
            nxt.append(num / (h[i] - h[i + m]))
        prev_last = stage[-1]
        stage = nxt
    limit = stage[0]
    err = abs(limit - prev_last)
    if require_contraction:
        raw_spread = abs(values[-1] - values[0])
        if raw_spread > 0 and not (err < raw_spread):
            raise SlowConvergence(
                f"extrapolation ladder not contracting: final correction {err:.3e} "
                f"vs raw spread {raw_spread:.3e}"
            )
    return limit, err
