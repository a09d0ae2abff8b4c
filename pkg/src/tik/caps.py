"""Resource caps and the error types shared across the package.

Caps can be overridden through the ``TIK_CAPS`` environment variable, e.g.
``TIK_CAPS="gb_elements=5000,points=200000"``.
"""

from __future__ import annotations

import os

DEFAULT_CAPS: dict[str, int] = {
    # largest integer handled by the membership DP
    "member": 10**8,
    # Groebner basis size (elements ever inserted)
    "gb_elements": 10**5,
    # highest degree for Hilbert-function bookkeeping
    "hilbert_degree": 10**4,
    # product of the orders d_i allowed for point enumeration
    "points": 10**6,
    # |X|^2 allowed for the evaluation-rank oracle
    "rank_cells": 25 * 10**6,
    # q^dimension allowed for exhaustive minimum distance
    "distance": 2**20,
}


class ValidationError(ValueError):
    """Invalid user input (CLI exit code 2)."""


class ResourceError(RuntimeError):
    """A configured resource cap was exceeded (CLI exit code 3)."""

    def __init__(self, cap: str, limit: int, needed=None):
        self.cap = cap
        self.limit = limit
        self.needed = needed
        msg = f"resource cap '{cap}' exceeded (limit {limit}"
        msg += f", needed {needed})" if needed is not None else ")"
        super().__init__(msg)


class CrossCheckError(AssertionError):
    """Two independent routes disagreed. Always a bug (CLI exit code 4)."""


def parse_caps(text: str) -> dict[str, int]:
    caps = {}
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        name, sep, value = item.partition("=")
        name = name.strip()
        if not sep or name not in DEFAULT_CAPS:
            raise ValidationError(f"bad TIK_CAPS entry {item!r}")
        try:
            caps[name] = int(float(value)) if "e" in value.lower() else int(value)
        except ValueError:
            raise ValidationError(f"bad TIK_CAPS value {item!r}") from None
    return caps


def get_caps() -> dict[str, int]:
    caps = dict(DEFAULT_CAPS)
    caps.update(parse_caps(os.environ.get("TIK_CAPS", "")))
    return caps


def cap(name: str, override: int | None = None) -> int:
    if override is not None:
        return override
    return get_caps()[name]
