"""Enumeration budgets and their environment override."""

from __future__ import annotations

import os

DEFAULT_BUDGET = 10**8
DEFAULT_AUT_BOUND = 64
BUDGET_ENV = "CROSSEDCOH_BUDGET"


def resolve_budget(budget: int | None = None) -> int:
    """Explicit argument wins, then the environment variable, then the default."""
    if budget is not None:
        return int(budget)
    env = os.environ.get(BUDGET_ENV)
    if env:
        return int(env)
    return DEFAULT_BUDGET
