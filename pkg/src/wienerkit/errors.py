"""Exception hierarchy shared by every module in the package."""

from __future__ import annotations


class WienerKitError(Exception):
    """Base class for all package errors."""


class Disconnected(WienerKitError):
    """Raised when an operation needs a connected graph and gets one that is not."""


class EdgeAbsent(WienerKitError):
    pass


class IndexOutOfRange(WienerKitError):
    pass


class BadParameters(WienerKitError):
    """A family or calculator was given parameters outside its domain."""


class NonIntegerResult(WienerKitError):
    """A closed form that must be integral produced a fraction."""


class NoClosedForm(WienerKitError):
    pass


class NotATree(WienerKitError):
    pass


class TooLarge(WienerKitError):
    pass


class BadFilter(WienerKitError):
    pass


class TooLargeForGeneration(WienerKitError):
    pass


class MalformedRecord(WienerKitError):
    def __init__(self, line_number: int, message: str):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


class UnsupportedOrder(WienerKitError):
    pass


class NotALongestPath(WienerKitError):
    pass


class AlreadyCovered(WienerKitError):
    """improve_tree was called on a tree whose vertices all lie on diametral paths."""


class Unsupported(WienerKitError):
    pass


class NotInFamily(WienerKitError):
    pass


class EmptyFamily(WienerKitError):
    pass


class SourceUnavailable(WienerKitError):
    pass
