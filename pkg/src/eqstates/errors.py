"""Shared exception types.

Exit-code mapping used by the CLI: InputError -> 2, BudgetError and
PrecisionError -> 3.
"""


class InputError(ValueError):
    """Malformed or out-of-domain input (bad symbol, inadmissible word, beta <= 1)."""


class BudgetError(RuntimeError):
    """An enumeration or sampling budget was exceeded; message names the bound."""


class PrecisionError(RuntimeError):
    """A comparison or floor could not be certified at the available precision."""
