"""Exception hierarchy. Each class carries the CLI exit code it maps to."""


class DiscSpdError(Exception):
    exit_code = 1


class ValidationError(DiscSpdError, ValueError):
    exit_code = 2


class DomainError(DiscSpdError, ValueError):
    exit_code = 3


class CapacityError(DiscSpdError):
    exit_code = 4


class ProgressionError(DiscSpdError, ValueError):
    """A progression product that was required to miss a set meets it."""

    exit_code = 5


class DuplicatePointsError(DiscSpdError, ValueError):
    exit_code = 6


class SymmetryError(DiscSpdError, ValueError):
    exit_code = 7


class DimensionError(DomainError):
    pass


class NonHermitianError(DiscSpdError, ValueError):
    exit_code = 3
