"""Working-precision control: binary64 by default, arbitrary precision on request.

Two backends are supported:

* ``"double"`` — plain Python ``complex``/``float`` arithmetic (binary64);
* ``"high"``   — ``mpmath`` arbitrary-precision arithmetic, used internally by
  routines whose raw iterates lose digits before extrapolation (e.g. the
  large-order coefficient route).

The default backend is read from the ``HEUN_PRECISION`` environment variable
(``double`` or ``high``); results that depend on the backend record which one
was active.  The elementary-function helpers here dispatch on the *type* of
their argument, so numeric kernels can be written once and run under either
backend.
"""

from __future__ import annotations

import cmath
import dataclasses
import os
from typing import Any

import mpmath as mp

from .errors import DomainError

__all__ = [
    "DOUBLE",
    "HIGH",
    "default_precision",
    "is_mp",
    "to_working",
    "to_complex",
    "spec_to_precision",
    "p_log",
    "p_exp",
    "p_sqrt",
    "p_power",
]

DOUBLE = "double"
HIGH = "high"

_VALID = (DOUBLE, HIGH)


def default_precision() -> str:
    """Backend selected by the ``HEUN_PRECISION`` environment variable.

    Unset or empty means ``"double"``; any other value than the two supported
    backend names raises :class:`DomainError`.
    """
    val = os.environ.get("HEUN_PRECISION", "").strip().lower()
    if not val:
        return DOUBLE
    if val not in _VALID:
        raise DomainError(
            f"HEUN_PRECISION must be one of {_VALID}, got {val!r}"
        )
    return val


def check_precision(precision: str | None) -> str:
    """Resolve ``None`` to the environment default and validate the name."""
    if precision is None:
        return default_precision()
    if precision not in _VALID:
        raise DomainError(f"precision must be one of {_VALID}, got {precision!r}")
    return precision


def is_mp(x: Any) -> bool:
    """True when ``x`` is an mpmath scalar (mpf or mpc)."""
    return isinstance(x, (mp.mpf, mp.mpc))


def to_working(x: Any, precision: str) -> Any:
    """Convert a scalar to the working type of the given backend.

    Conversion from binary64 to mpmath is exact (the double value is taken as
    the exact rational it represents).
    """
    if precision == HIGH:
        if is_mp(x):
            return x
        xc = complex(x)
        if xc.imag == 0.0:
            return mp.mpf(xc.real)
        return mp.mpc(xc.real, xc.imag)
    if is_mp(x):
        return complex(x)
    return complex(x)


def to_complex(x: Any) -> complex:
    """Round a scalar of either backend to a binary64 complex number."""
    return complex(x)


def spec_to_precision(spec: Any, precision: str) -> Any:
    """Return a copy of a frozen parameter dataclass with scalars coerced.

    String fields are preserved; ``None`` fields stay ``None``; every numeric
    field is converted with :func:`to_working`.
    """
    updates = {}
    for f in dataclasses.fields(spec):
        v = getattr(spec, f.name)
        if v is None or isinstance(v, str):
            continue
        updates[f.name] = to_working(v, precision)
    return dataclasses.replace(spec, **updates)


def p_log(x: Any) -> Any:
    """Principal logarithm under either backend."""
    if is_mp(x):
        return mp.log(x)
    return cmath.log(x)


def p_exp(x: Any) -> Any:
    """Exponential under either backend."""
    if is_mp(x):
        return mp.exp(x)
    return cmath.exp(x)


def p_sqrt(x: Any) -> Any:
    """Principal square root under either backend."""
    if is_mp(x):
        return mp.sqrt(x)
    return cmath.sqrt(x)


def p_power(base: Any, expo: Any) -> Any:
    """Principal power ``base**expo`` via exp(expo * log(base))."""
    if is_mp(base) or is_mp(expo):
        return mp.exp(expo * mp.log(base))
    return cmath.exp(expo * cmath.log(base))
