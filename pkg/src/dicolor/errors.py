"""Exception types shared across the package."""


class DigraphError(ValueError):
    """Malformed graph or vertex arguments."""


class SizeLimitError(ValueError):
    """An exact or exhaustive routine was asked to run above its size limit."""

    def __init__(self, what, p, limit):
        self.p = p
        self.limit = limit
        super().__init__(f"{what}: instance has p={p}, above the limit of {limit}")


class InvalidColoringError(ValueError):
    """A coloring has a monochromatic directed cycle."""

    def __init__(self, cycle, message=None):
        self.cycle = list(cycle)
        super().__init__(message or f"monochromatic directed cycle {self.cycle}")


class CyclicDigraphError(ValueError):
    def __init__(self, cycle):
        self.cycle = list(cycle)
        super().__init__(f"digraph has a directed cycle {self.cycle}")


class DirectedPathError(ValueError):
    def __init__(self, path):
        self.path = list(path)
        super().__init__(f"directed path {self.path} exists")


class NotApplicableError(ValueError):
    """A bound was requested on a digraph outside its hypothesis."""


class InvalidMatrixError(ValueError):
    def __init__(self, message, violations=()):
        self.violations = list(violations)
        super().__init__(message)


class ParseError(ValueError):
    def __init__(self, lineno, message):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {message}")
