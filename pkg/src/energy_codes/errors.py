"""Exception hierarchy shared by every codec."""


class CodeError(Exception):
    """Base class for all errors raised by energy_codes."""


class InfeasibleParameters(CodeError, ValueError):
    """A codec cannot be built for the requested parameters.

    ``check`` names the feasibility condition that failed so callers (and the
    CLI) can report it.
    """

    def __init__(self, check: str, detail: str = ""):
        self.check = check
        self.detail = detail
        msg = check if not detail else f"{check}: {detail}"
        super().__init__(msg)


class NoIndexFound(CodeError):
    """No walk index balances the word; means parameter validation is broken."""


class MalformedCodeword(CodeError):
    """A codeword was not produced by the matching encoder."""


class UnknownSuffix(MalformedCodeword):
    """A subblock suffix is not a valid index representation."""


class Undecodable(CodeError):
    """The received word is outside the single-substitution error model."""


class BudgetExceeded(CodeError):
    """An exhaustive operation would exceed its configured budget."""
