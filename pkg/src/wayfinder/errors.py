"""Exception types shared across the package.

Class names double as the machine-readable error codes reported by the CLI
and the HTTP API, so they are nouns rather than the usual ``FooError`` style.
"""


class WayfinderError(Exception):
    """Base class for every domain error raised by this package."""

    @property
    def code(self) -> str:
        return type(self).__name__


class GraphError(WayfinderError):
    """Invalid graph construction or a query against a missing element."""


class InvalidNodeId(GraphError):
    pass


class DuplicateNode(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class DanglingEndpoint(GraphError):
    pass


class NegativeCost(GraphError):
    """Edge cost is negative, NaN, or infinite."""


class SelfLoop(GraphError):
    pass


class UnknownNode(GraphError):
    pass


class ParseError(WayfinderError):
    """Unparseable input text (edge list, city map, grid)."""


class RaggedRows(ParseError):
    pass


class DuplicateMarker(ParseError):
    pass


class ValidationError(WayfinderError):
    """Structurally parseable input that violates a semantic rule."""


class Unreachable(WayfinderError):
    pass


class DisconnectedTerminals(WayfinderError):
    pass


class TooManyTerminals(WayfinderError):
    pass


class InvalidParams(WayfinderError):
    pass


class UnknownSession(WayfinderError):
    pass


class MalformedMove(WayfinderError):
    pass


class SessionDone(WayfinderError):
    """A non-finish move was submitted to a completed session."""
