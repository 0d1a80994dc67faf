"""Exceptions raised by the scalar kernel."""


class ScalarError(Exception):
    pass


class NotAUnit(ScalarError, ArithmeticError):
    """A value that is not invertible in the localized ring was inverted."""


class UnboundSymbol(ScalarError, KeyError):
    def __init__(self, symbol):
        super().__init__(symbol)
        self.symbol = symbol

    def __str__(self):
        return f"no value bound for {getattr(self.symbol, 'to_expr', lambda: self.symbol)()}"


class ZeroUnit(ScalarError, ValueError):
    """A unit symbol was evaluated at zero."""


class InconsistentConjugation(ScalarError, ValueError):
    """A binding gave conj(s) a value other than the conjugate of s."""


class ExpressionSyntaxError(ScalarError, SyntaxError):
    """Malformed expression text; ``column`` is 1-based."""

    def __init__(self, message: str, text: str, column: int):
        super().__init__(f"{message} at column {column}")
        self.message = message
        self.text = text
        self.column = column

    def __str__(self):
        return f"{self.message} at column {self.column}: {self.text!r}"
