"""Exception types shared across the library.

Two broad families matter for the CLI exit-code contract: InputError
(bad user data, exit code 2) and InternalError (a construction step
produced something the verifier rejects, exit code 3).
"""


class PlanePathsError(Exception):
    pass


class InputError(PlanePathsError):
    """Invalid input data or parameters."""


class InternalError(PlanePathsError):
    """A constructed object failed its own validity checks.

    Carries the offending coordinates when available so the instance can
    be dumped for analysis.
    """

    def __init__(self, message, points=None):
        super().__init__(message)
        self.points = points


class DuplicatePoint(InputError):
    def __init__(self, i, j):
        super().__init__(f"points {i} and {j} coincide")
        self.indices = (i, j)


class CollinearTriple(InputError):
    def __init__(self, i, j, k):
        super().__init__(f"points {i}, {j}, {k} are collinear")
        self.indices = (i, j, k)


class CoordinateRange(InputError):
    def __init__(self, i, limit):
        super().__init__(f"point {i} exceeds the coordinate bound |x|,|y| <= {limit}")
        self.index = i


class ParseError(InputError):
    def __init__(self, line, message):
        super().__init__(f"line {line}: {message}")
        self.line = line


class TooFew(InputError):
    def __init__(self, n, minimum):
        super().__init__(f"{n} points given, at least {minimum} required")
        self.n = n
        self.minimum = minimum


class NotOnHull(InputError):
    def __init__(self, index, hull):
        super().__init__(f"point {index} is not on the convex hull {list(hull)}")
        self.index = index
        self.hull = tuple(hull)


class OddCardinality(InputError):
    pass


class UnsupportedN(InputError):
    pass


class NotAWheel(InputError):
    pass


class Unbalanced(InputError):
    def __init__(self, n1, n2):
        super().__init__(f"sides have {n1} and {n2} points, difference exceeds 1")
        self.sizes = (n1, n2)


class PointOnLine(InputError):
    def __init__(self, i):
        super().__init__(f"point {i} lies on the splitting line")
        self.index = i


class InvalidStartSide(InputError):
    pass


class SharedVertex(InputError):
    pass


class PointNotOutsideHull(InputError):
    pass


class NoValidChoice(PlanePathsError):
    """No balancing line through the pivot puts the preferred point in the
    smaller side; the caller must fall back to the halving-line case."""


class PreconditionViolated(InternalError):
    """An operation was invoked outside its documented preconditions."""


class InternalPlanarityFailure(InternalError):
    """A rerouted path failed the planarity check it is expected to pass."""


class BudgetExceeded(PlanePathsError):
    """The search exhausted its node budget before reaching a definitive
    answer. Distinct from definitive absence."""

    def __init__(self, nodes):
        super().__init__(f"search budget exhausted after {nodes} nodes")
        self.nodes = nodes
