"""Size caps for the exhaustive operations.

Every cap is a default that can be raised (never lowered) with the
PATHPAIR_CAP_OVERRIDE environment variable, which is read on each call so
tests and long-running sessions can toggle it.
"""

import os

from .errors import SizeCapExceeded

CAP_ENV_VAR = "PATHPAIR_CAP_OVERRIDE"

MINOR_VERTEX_CAP = 15
CUT_CONDITION_VERTEX_CAP = 24
GOOD_MATCHING_MULTIEDGE_CAP = 40


def effective_cap(default: int) -> int:
    raw = os.environ.get(CAP_ENV_VAR)
    if raw is None:
        return default
    try:
        override = int(raw)
    except ValueError:
        raise SizeCapExceeded(f"{CAP_ENV_VAR} must be an integer, got {raw!r}") from None
    return max(default, override)


def enforce_cap(size: int, default: int, what: str) -> None:
    cap = effective_cap(default)
    if size > cap:
        raise SizeCapExceeded(
            f"{what}: size {size} exceeds cap {cap} "
            f"(set {CAP_ENV_VAR} to raise it at your own risk)"
        )
