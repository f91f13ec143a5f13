"""Caps and search budgets, overridable through environment variables.

Every exact-but-expensive routine checks one of these caps instead of
running away; hitting a cap is an explicit error, never a wrong answer.
"""

import os

_DEFAULTS = {
    "GENPAIR_MAX_DEGREE": 10_000,     # largest coset-action / quotient degree
    "GENPAIR_MAX_ORDER": 200_000,     # largest group for element enumeration
    "GENPAIR_TRIALS": 1000,           # random-conjugate retry budget
    "GENPAIR_ASCENT_TRIALS": 64,      # restarts of the Sylow ascent seed
    "GENPAIR_SZ_RESTARTS": 200,       # Schur-Zassenhaus random-lift restarts
    "GENPAIR_STEP3_BUDGET": 200,      # conjugate trials per prime pair in step 3
    "GENPAIR_MAX_DEPTH": 32,          # recursion depth of the pair constructor
}


def _get(name: str) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return _DEFAULTS[name]
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {raw!r}") from None
    if value <= 0:
        raise ValueError(f"{name} must be positive, got {value}")
    return value


def max_degree() -> int:
    return _get("GENPAIR_MAX_DEGREE")


def max_order() -> int:
    return _get("GENPAIR_MAX_ORDER")


def default_trials() -> int:
    return _get("GENPAIR_TRIALS")


def ascent_trials() -> int:
    return _get("GENPAIR_ASCENT_TRIALS")


def sz_restarts() -> int:
    return _get("GENPAIR_SZ_RESTARTS")


def step3_budget() -> int:
    return _get("GENPAIR_STEP3_BUDGET")


def max_depth() -> int:
    return _get("GENPAIR_MAX_DEPTH")
