"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument is outside the mathematical domain of the function
    (wrong sign, wrong congruence class, not squarefree, not coprime...)."""


class IntegralityError(ArithmeticError):
    """An internally computed quantity that must be an integer is not.

    Raised instead of silently flooring: every genus and fixed-point
    formula here is exact, so a fractional value means a bug or a bad
    input slipped through validation.
    """


class FixtureError(ValueError):
    """A fixture file is malformed or inconsistent."""


class PipelineError(RuntimeError):
    """A cross-check between a computed table and fixture data failed."""
