"""Exception hierarchy shared by all geomon modules."""


class GeomonError(Exception):
    pass


class InvalidEdge(GeomonError, ValueError):
    """Self-loop, out-of-range endpoint or duplicate edge."""


class DuplicateLabel(GeomonError, ValueError):
    pass


class Disconnected(GeomonError, ValueError):
    pass


class EnumerationCapExceeded(GeomonError, RuntimeError):
    """A geodesic enumeration needed by the strong solver hit its cap."""


class ChainViolation(GeomonError, AssertionError):
    """g <= eg <= seg <= meg failed. Always a solver bug."""


class InvalidParameters(GeomonError, ValueError):
    pass


class RangeTooLarge(GeomonError, ValueError):
    pass


class ParseError(GeomonError, ValueError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class HeaderMismatch(ParseError):
    pass


class InfeasibleQuadruple(GeomonError, ValueError):
    """Raised by ``realize`` for a quadruple that no graph realizes."""

    def __init__(self, quadruple, status):
        self.quadruple = tuple(quadruple)
        self.status = status
        super().__init__(f"{self.quadruple}: {status.reason}")
