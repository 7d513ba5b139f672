"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class NCGError(Exception):
    """Base class for all errors raised by ncgraph."""


class InvalidParameter(NCGError, ValueError):
    pass


class OutOfRange(NCGError, IndexError):
    pass


# Cayley-table ingestion ------------------------------------------------------


class TableError(NCGError, ValueError):
    """A raw multiplication table failed one of the group axioms."""


class NotClosed(TableError):
    pass


class NoIdentity(TableError):
    pass


class NoInverse(TableError):
    pass


class NotAssociative(TableError):
    pass


class AbelianGroup(NCGError, ValueError):
    pass


class CentralElement(NCGError, ValueError):
    pass


# graph queries ---------------------------------------------------------------


class GraphDisconnected(NCGError):
    pass


class ShapeMismatch(NCGError):
    """An induced subgraph does not have the claimed shape.

    ``pair`` holds the first offending vertex pair (as vertex indices).
    """

    def __init__(self, message: str, pair: tuple[int, int] | None = None):
        super().__init__(message)
        self.pair = pair


class SameVertex(NCGError, ValueError):
    pass


class UnreachableError(NCGError):
    pass


class TooLarge(NCGError):
    pass
