"""Desk-scale size limits.

The bounds guard exponential routines. ``FACEIDEAL_MAX_N`` raises every
overridable limit to the given value (at the user's risk); the word-size
bounds are structural and cannot be overridden.
"""

import os

WORD_BITS = 62


class SizeLimitError(ValueError):
    pass


def desk_limit(default: int) -> int:
    raw = os.environ.get("FACEIDEAL_MAX_N")
    if raw:
        try:
            return max(default, int(raw))
        except ValueError:
            raise SizeLimitError(f"FACEIDEAL_MAX_N must be an integer, got {raw!r}") from None
    return default


def require(value: int, default: int, what: str, *, hard: bool = False) -> None:
    limit = default if hard else desk_limit(default)
    if value > limit:
        hint = "" if hard else " (set FACEIDEAL_MAX_N to override)"
        raise SizeLimitError(f"{what} = {value} exceeds the limit {limit}{hint}")
