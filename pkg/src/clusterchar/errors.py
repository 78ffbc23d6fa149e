"""Exception hierarchy shared by all modules."""


class ClusterCharError(Exception):
    """Base class for all errors raised by this package."""


# ---------------------------------------------------------------- arithmetic

class VariableCountMismatch(ClusterCharError):
    pass


class DivisionByZero(ClusterCharError):
    pass


class NotDivisible(ClusterCharError):
    """Exact Laurent division failed.  During mutation this signals a
    Laurent-phenomenon violation (or a bug) and is therefore fatal."""


class InsufficientPoints(ClusterCharError):
    pass


class InconsistentExtraPoint(ClusterCharError):
    pass


class NonIntegerCoefficients(ClusterCharError):
    pass


# -------------------------------------------------------------------- quiver

class HasLoop(ClusterCharError):
    def __init__(self, vertex):
        super().__init__(f"quiver has a loop at vertex {vertex}")
        self.vertex = vertex


class HasTwoCycle(ClusterCharError):
    def __init__(self, i, j):
        super().__init__(f"quiver has a 2-cycle between vertices {i} and {j}")
        self.vertices = (i, j)


class VertexOutOfRange(ClusterCharError):
    pass


class NotAcyclic(ClusterCharError):
    pass


# ------------------------------------------------------------ representation

class NotPrime(ClusterCharError):
    pass


class QuiverMismatch(ClusterCharError):
    pass


class PathInvalid(ClusterCharError):
    pass


class NotTypeA(ClusterCharError):
    pass


class BadInterval(ClusterCharError):
    pass


class ShapeMismatch(ClusterCharError):
    pass


class NegativeSolution(ClusterCharError):
    """Injective copresentation produced a negative multiplicity.  This
    cannot happen for valid module input and signals a convention bug."""


# ------------------------------------------------------------- grassmannians

class BadDims(ClusterCharError):
    pass


class NotPolynomialCount(ClusterCharError):
    """Point counts over the sampled primes are not explained by a single
    integer polynomial in q; the variety is outside this method's scope."""


# ----------------------------------------------------------------- AR quiver

class IsProjective(ClusterCharError):
    pass


# ------------------------------------------------------------------ category

class CollisionDetected(ClusterCharError):
    """Two distinct objects were assigned the same cluster-character value."""


class NotInTable(ClusterCharError):
    """Exchange produced a value that matches no object in the table."""


class IdentityFailed(ClusterCharError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


# ------------------------------------------------------------------- algebra

class DepthExceeded(ClusterCharError):
    """Seed BFS hit the depth bound before closing.  Partial results are
    attached so callers can still inspect what was found."""

    def __init__(self, message, seeds=None, variables=None):
        super().__init__(message)
        self.seeds = seeds if seeds is not None else set()
        self.variables = variables if variables is not None else set()


# ----------------------------------------------------------------------- io

class InputError(ClusterCharError):
    """Malformed file or request payload."""
