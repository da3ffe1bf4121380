"""Exception types shared across the package."""


class PaleyfqError(Exception):
    """Base class for all package errors."""


# ring construction
class NotPrime(PaleyfqError):
    pass


class BadModulus(PaleyfqError):
    pass


class OrderTooLarge(PaleyfqError):
    pass


class NotAField(PaleyfqError):
    pass


class AllPowers(PaleyfqError):
    """Every element is a k-th power; no non-power exists."""


# polynomials
class ContextMismatch(PaleyfqError):
    pass


class EnumerationTooLarge(PaleyfqError):
    pass


# graphs
class ProductTooLarge(PaleyfqError):
    pass


class NotCoprime(PaleyfqError):
    pass


class DirectedUnsupported(PaleyfqError):
    pass


class VertexOutOfRange(PaleyfqError):
    pass


# solver
class SolverTimeout(PaleyfqError):
    """Budget exhausted. Carries the best independent set found so far."""

    def __init__(self, incumbent, budget_s):
        super().__init__(f"solver budget of {budget_s:g}s exhausted")
        self.incumbent = incumbent
        self.budget_s = budget_s


# theta
class NotEdgeTransitive(PaleyfqError):
    pass


class NotSquarefree(PaleyfqError):
    pass


class DirectedFactor(PaleyfqError):
    pass


# difference-free constructions
class BadDegree(PaleyfqError):
    pass


class BadN(PaleyfqError):
    pass


class NotMonomial(PaleyfqError):
    pass


class VerificationTooLarge(PaleyfqError):
    pass


# bounds
class NotUnimodal(PaleyfqError):
    pass


class NotApplicable(PaleyfqError):
    pass
