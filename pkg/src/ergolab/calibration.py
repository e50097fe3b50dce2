"""Frozen constants for the inequality checks.

Each constant is 1.05 times the maximum ratio measured over a seeded suite of
trial fields (see the calibration tests, which regenerate the measurements and
fail if a frozen value drifts below what the suite produces).  The checks
compare measured ratios against these numbers; they are tolerances of this
laboratory, not quantities with independent meaning.
"""

# dyadic weighted-boundedness growth ratios, keyed by (weight kind, exponent a)
DYADIC_CONSTANTS = {
    ("log", 1.0): 1.25,
    ("log", 2.0): 1.25,
    ("log", 3.0): 1.25,
    ("poly", 1.0): 1.25,
    ("poly", 2.0): 1.25,
}

_DYADIC_DEFAULT = 1.5


def dyadic_constant(weight: str, a: float) -> float:
    """Calibrated growth constant for the dyadic boundedness check."""
    key = (weight, float(a))
    if key in DYADIC_CONSTANTS:
        return DYADIC_CONSTANTS[key]
    same_kind = [v for (w, _), v in DYADIC_CONSTANTS.items() if w == weight]
    return max(same_kind) if same_kind else _DYADIC_DEFAULT
