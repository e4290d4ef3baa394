"""Runtime configuration: degree caps and the numba switch.

Both knobs are read from the environment so that test runs and the CLI can
override them without code changes:

    SHIFTEDPR_CAP        default degree cap for enumerations over S_n (default 9)
    SHIFTEDPR_NO_NUMBA   if set to a truthy value, kernels run as plain Python
"""
from __future__ import annotations

import os

DEFAULT_CAP = 9


class CapExceeded(ValueError):
    """Raised when an enumeration is requested above the configured degree cap."""


def _truthy(value: str | None) -> bool:
    return value is not None and value.strip().lower() not in ("", "0", "false", "no", "off")


def degree_cap() -> int:
    raw = os.environ.get("SHIFTEDPR_CAP")
    if raw is None or not raw.strip():
        return DEFAULT_CAP
    cap = int(raw)
    if cap < 1:
        raise ValueError(f"SHIFTEDPR_CAP must be >= 1, got {cap}")
    return cap


def check_cap(n: int, cap: int | None = None) -> None:
    limit = degree_cap() if cap is None else cap
    if n > limit:
        raise CapExceeded(f"degree {n} exceeds cap {limit} (set SHIFTEDPR_CAP to raise it)")


def numba_enabled() -> bool:
    if _truthy(os.environ.get("SHIFTEDPR_NO_NUMBA")):
        return False
    try:
        import numba  # noqa: F401
    except ImportError:
        return False
    return True
