"""Exception and warning types shared across the package."""


class InputError(ValueError):
    """Malformed or inconsistent input.

    Covers bad file syntax, unknown edge or vertex ids, group element
    length mismatches, and assignings that do not cover every cycle.
    """


class ContractError(InputError):
    """Raised when asked to contract a loop; only links can be contracted."""


class BudgetError(RuntimeError):
    """An exhaustive enumeration would exceed the configured budget."""


class AdmissibilityWarning(UserWarning):
    """Emitted when a theorem-backed method receives an assigning that is
    not known to be induced by any edge function.

    The expansion theorems assume an admissible assigning; results for
    arbitrary assignings are still computed but carry no guarantee.
    """
