"""Exception hierarchy shared by the plogic modules."""


class LogicError(Exception):
    """Base class for all plogic errors."""


class NoDual(LogicError):
    """Raised when asked for the dual of the one self-standing operator."""


class PathError(LogicError):
    """A path does not select a subformula of the given formula."""


class ParseError(LogicError):
    """Base class for parse failures; carries a character offset."""

    def __init__(self, message: str, position: int | None = None):
        super().__init__(message)
        self.position = position


class UnbalancedParens(ParseError):
    pass


class UnknownToken(ParseError):
    pass


class AmbiguousChain(ParseError):
    """An unparenthesized `a op b op c` chain; the grammar defines no grouping."""


class EmptyInput(ParseError):
    pass


class UnexpectedToken(ParseError):
    """A recognized token in a position the grammar does not allow."""


class MissingAtom(LogicError):
    """An assignment does not cover an atom needed for evaluation."""

    def __init__(self, name: str):
        super().__init__(f"assignment does not cover atom {name!r}")
        self.name = name


class TooManyAtoms(LogicError):
    """The exhaustive-enumeration guard tripped."""

    def __init__(self, count: int, limit: int):
        super().__init__(f"{count} atoms exceeds the limit of {limit}")
        self.count = count
        self.limit = limit


class NotXorRoot(LogicError):
    """The xor-root replacement was applied to a formula not rooted in xor."""


class NotUpdownRoot(LogicError):
    """The inverse replacement was applied to a formula not rooted in xiff."""


class MissingMetavariable(LogicError):
    """An axiom schema instantiation lacks one of its metavariables."""

    def __init__(self, var: str, schema: int):
        super().__init__(f"axiom schema {schema} needs metavariable {var}")
        self.var = var
        self.schema = schema


class NotATautology(LogicError):
    """Proof generation was asked for a non-tautology; carries a countermodel."""

    def __init__(self, witness: dict):
        pretty = ", ".join(f"{k}={v}" for k, v in witness.items())
        super().__init__(f"not a tautology; false under {{{pretty}}}")
        self.witness = witness


class ProofTooLarge(LogicError):
    """Generated proof would exceed the line-count guardrail."""
