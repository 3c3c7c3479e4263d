"""Exception types shared across the solvers.

Solver outcomes that are not solutions are raised rather than returned.
``Infeasible`` is a proof that no solution exists; ``TooSmall`` and
``NotFound`` only say that a particular algorithm gave up.
"""


class USSPError(Exception):
    pass


class Infeasible(USSPError):
    """No non-negative solution exists.

    ``certificate`` is ``"gcd=<g>"`` when the gcd of the weights does not
    divide the target, or ``"exhaustive"`` when an exact search ruled it out.
    """

    def __init__(self, certificate, message=None):
        self.certificate = certificate
        super().__init__(message or f"infeasible ({certificate})")


class TooSmall(USSPError):
    """A two-term step could not keep its second coefficient non-negative."""

    def __init__(self, message, step=None, residual=None):
        self.step = step
        self.residual = residual
        super().__init__(message)


class NotFound(USSPError):
    pass


class CeilingExceeded(USSPError):
    def __init__(self, value, ceiling):
        self.value = value
        self.ceiling = ceiling
        super().__init__(f"{value} exceeds the oracle ceiling {ceiling}")


class NoInverse(ArithmeticError):
    pass


class NotCoprime(ValueError):
    pass


class EmptyInput(ValueError):
    pass


class ValidationError(ValueError):
    pass


class ParseError(ValueError):
    def __init__(self, message, line, column=1):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")
