"""Exception hierarchy shared by every cfx module."""


class CfxError(Exception):
    """Base class for all library errors."""


class NonDivisible(CfxError, ArithmeticError):
    def __init__(self, a, b):
        super().__init__(f"{b} does not divide {a}")
        self.a = a
        self.b = b


class ZeroDenominatorConvergent(CfxError, ArithmeticError):
    """A convergent denominator Q_k vanished where a finite value was required."""

    def __init__(self, index, message=None):
        super().__init__(message or f"convergent denominator Q_{index} is zero")
        self.index = index


class NotRegular(CfxError, ValueError):
    def __init__(self, index, reason):
        super().__init__(f"term {index} is not regular: {reason}")
        self.index = index
        self.reason = reason


class BudgetExceeded(CfxError):
    def __init__(self, index, bits, budget):
        super().__init__(
            f"x_{index} has {bits} bits, over the budget of {budget} bits"
        )
        self.index = index
        self.bits = bits
        self.budget = budget


class PreconditionViolated(CfxError, ValueError):
    pass


class PrefixTooShort(CfxError):
    pass
