"""Exception hierarchy.

``SchemaError`` and ``ValidationError`` map onto distinct CLI exit codes
(2 and 3); everything else signals a violated precondition in library use.
"""


class MarkovCoeError(Exception):
    pass


class SchemaError(MarkovCoeError):
    """Input file is malformed or does not match its JSON schema."""


class ValidationError(MarkovCoeError):
    """Input is well-formed but violates a mathematical invariant."""


class ZeroRowOrColumn(ValidationError):
    pass


class NotIrreducible(ValidationError):
    pass


class PermutationMatrix(ValidationError):
    pass


class Inadmissible(ValidationError):
    pass


class UndefinedTransition(ValidationError):
    pass


class NullCycle(ValidationError):
    pass


class InadmissibleOutput(ValidationError):
    pass


class NotStochastic(ValidationError):
    pass


class IncompatibleSupport(ValidationError):
    pass


class SpaceMismatch(MarkovCoeError):
    pass


class WordTooShort(MarkovCoeError):
    pass


class NotEventuallyPeriodicAt(MarkovCoeError):
    def __init__(self, r, s, msg=None):
        self.r, self.s = r, s
        super().__init__(msg or f"point does not satisfy sigma^{r} x = sigma^{s} x with r > s")


class NotPeriodic(MarkovCoeError):
    pass


class PreconditionFailed(MarkovCoeError):
    pass


class AlternativeCocycleInvalid(MarkovCoeError):
    def __init__(self, msg, counterexample=None):
        self.counterexample = counterexample
        super().__init__(msg)


class NotOrderUnit(MarkovCoeError):
    def __init__(self, mean, cycle):
        self.mean = mean
        self.cycle = cycle
        super().__init__(f"class is not an order unit: cycle {cycle} has mean {mean}")


class NoConvergence(MarkovCoeError):
    def __init__(self, tol, max_iters):
        self.tol, self.max_iters = tol, max_iters
        super().__init__(f"power iteration did not reach residual {tol} in {max_iters} steps")
