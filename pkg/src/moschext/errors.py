"""Exception hierarchy shared by the evaluators, realizers and the CLI."""


class MoschError(Exception):
    """Base class for every error raised by this package."""


class Undefined(MoschError):
    """A partial function was applied outside its domain."""

    def __init__(self, z, reason: str = ""):
        self.z = z
        self.reason = reason
        msg = f"undefined at {z}"
        if reason:
            msg += f" ({reason})"
        super().__init__(msg)


class Diverges(Undefined):
    """An iteration provably never halts (a state repeated along a path)."""


class RegularityViolation(Undefined):
    """A node of a multi-valued iteration tree breaks the regularity condition."""


class FuelExhausted(MoschError):
    """A bounded search ran out of fuel before reaching a verdict.

    Distinct from :class:`Undefined`: the argument may still be in the domain.
    """

    def __init__(self, what="", steps: int = 0):
        self.what = what
        self.steps = steps
        super().__init__(f"fuel exhausted after {steps} steps{': ' + str(what) if what != '' else ''}")


class NotANatCode(MoschError, ValueError):
    pass


class MalformedName(MoschError, ValueError):
    pass


class QueryBudgetExceeded(MoschError):
    """A counted name was queried at more distinct indices than allowed."""


class UnknownSymbol(MoschError, KeyError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(name)

    def __str__(self):
        return f"unknown symbol {self.name!r}"


class TermSyntaxError(MoschError, SyntaxError):
    def __init__(self, text: str, pos: int, expected: str):
        self.text_src = text
        self.pos = pos
        self.expected = expected
        self.line = text.count("\n", 0, pos) + 1
        self.col = pos - (text.rfind("\n", 0, pos) + 1) + 1
        super().__init__(f"line {self.line}, col {self.col}: expected {expected}")


class DomainViolation(MoschError):
    """An interval evaluator was handed an argument outside its domain."""


class JoinMismatch(MoschError):
    """Two functions to be joined disagree at the junction point."""
