"""Exception hierarchy shared by every kfgc module."""


class FgcError(Exception):
    """Base class for all kfgc errors."""


class InputError(FgcError, ValueError):
    """An argument violates an operation's preconditions."""


class Infeasible(FgcError):
    """No edge subset of the instance is feasible."""


class NoKArborescence(FgcError):
    """The digraph has no r-out k-arborescence."""


class CardinalityUnreachable(FgcError):
    """No common independent set of the requested size exists."""


class NotDecomposable(FgcError):
    """An arc set claimed to be a k-arborescence could not be split."""


class SolverBug(FgcError):
    """An internal certificate or invariant failed to verify."""


class RefusedScale(FgcError):
    """An exact oracle was asked to enumerate beyond its guard."""


class GenerationFailed(FgcError):
    """The random generator could not produce a feasible instance."""


class ParseError(FgcError):
    def __init__(self, line, reason):
        self.line = line
        self.reason = reason
        super().__init__(f"line {line}: {reason}")
