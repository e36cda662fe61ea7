"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class V3Error(Exception):
    """Base class for every error raised by this package."""


class InvalidGraph(V3Error):
    """A graph violates a structural invariant."""


class NotCubic(InvalidGraph):
    def __init__(self, vertex: int, degree: int):
        super().__init__(f"vertex {vertex} has degree {degree}, expected 3")
        self.vertex = vertex
        self.degree = degree


class OddCycle(InvalidGraph):
    def __init__(self, cycle: list[int]):
        super().__init__(f"odd cycle of length {len(cycle)}: {cycle}")
        self.cycle = cycle


class GirthTooSmall(InvalidGraph):
    def __init__(self, found, required: int):
        super().__init__(f"girth {found} is below the required {required}")
        self.found = found
        self.required = required


class Disconnected(InvalidGraph):
    def __init__(self, n_components: int):
        super().__init__(f"graph has {n_components} connected components")
        self.n_components = n_components


class FormatError(V3Error):
    """Malformed serialized input (graph6, LCF, configuration text)."""


class LcfSyntaxError(FormatError):
    pass


class InconsistentCode(FormatError):
    """An LCF code whose chords do not form a simple cubic graph."""


class ConfigurationError(V3Error):
    """A point/line system violating the (v_3) axioms."""


class ParameterOutOfRange(V3Error, ValueError):
    pass


class InvalidMove(V3Error):
    """A reduction or augmentation move that does not fit the graph."""


class SharedEndpoint(InvalidMove):
    pass


class TheoremViolation(V3Error):
    """A connected non-terminal graph admits no connected reduction."""


class TooLarge(V3Error, ValueError):
    pass
