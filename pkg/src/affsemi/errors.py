"""Exception hierarchy shared by all modules."""


class AffsemiError(Exception):
    """Base class for library errors."""


class InputError(AffsemiError, ValueError):
    """Malformed or degenerate input (maps to CLI exit code 2)."""


class DegenerateInput(InputError):
    """Zero, negative or duplicate generators."""


class AlgebraicPreconditionError(AffsemiError):
    """An algebraic precondition of an algorithm fails (CLI exit code 3)."""


class ContainmentViolation(AlgebraicPreconditionError):
    pass


class ConeMismatch(AlgebraicPreconditionError):
    pass


class NonHilbert(AlgebraicPreconditionError):
    pass


class NotSimplicial(AlgebraicPreconditionError):
    pass


class NotHomogeneous(AlgebraicPreconditionError):
    pass


class AmbiguousExtremalRay(AlgebraicPreconditionError):
    """Two generators span the same extremal ray of a non-homogeneous cone."""


class InfiniteDimension(AlgebraicPreconditionError):
    pass


class Infeasible(InputError):
    pass


class OracleMismatch(AffsemiError):
    """A brute-force cross-check disagreed with the main computation (exit code 4)."""
