"""Size ceiling for operations that enumerate all of S_n^2."""
from __future__ import annotations

import os

DEFAULT_MAX_N = 10
ENV_VAR = "BORBITS_MAX_N"


class GuardError(ValueError):
    """Raised when an enumeration-based operation is asked for too large an n."""


def max_n() -> int:
    raw = os.environ.get(ENV_VAR)
    if raw is None:
        return DEFAULT_MAX_N
    try:
        value = int(raw)
    except ValueError as exc:
        raise GuardError(f"{ENV_VAR}={raw!r} is not an integer") from exc
    if value < 1:
        raise GuardError(f"{ENV_VAR} must be positive, got {value}")
    return value


def check_guard(n: int) -> None:
    limit = max_n()
    if n > limit:
        raise GuardError(f"n={n} exceeds the enumeration ceiling {limit} (set {ENV_VAR} to raise it)")
