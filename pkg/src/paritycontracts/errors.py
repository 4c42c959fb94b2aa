"""Exception types shared across the solver."""


class ParityContractsError(Exception):
    """Base class for all library errors."""


class ParseError(ParityContractsError):
    """Malformed game file.  Carries the 1-based line number when known."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class NotClosed(ParityContractsError):
    """A vertex of the restriction set has no successor inside the set."""

    def __init__(self, vertex):
        self.vertex = vertex
        super().__init__(f"vertex {vertex} has no successor inside the restriction set")


class ConflictAt(ParityContractsError):
    """Every outgoing edge of an owned vertex is unsafe or co-live."""

    def __init__(self, vertex):
        self.vertex = vertex
        super().__init__(f"no admissible edge left at vertex {vertex}")


class UndefinedAt(ParityContractsError):
    """A strategy has no move at a vertex reached during simulation."""

    def __init__(self, vertex):
        self.vertex = vertex
        super().__init__(f"strategy undefined at vertex {vertex}")


class NonTermination(ParityContractsError):
    """A template expansion loop stopped making progress.

    Indicates a caller passed a graph that was not restricted to the
    relevant cooperative winning region first.
    """


class EmptyGame(ParityContractsError):
    """The safety core of a specification update is empty."""


class SizeCap(ParityContractsError):
    """A brute-force oracle was invoked on a game above its size bound."""

    def __init__(self, n, cap):
        super().__init__(f"oracle size cap exceeded: n={n} > {cap}")


class Exhausted(ParityContractsError):
    """Rejection sampling failed too many times in a row."""
