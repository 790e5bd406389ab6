"""Exception types raised across the package.

Every error derives from ``ValueError`` so callers validating user input can
catch one type; the CLI maps them to exit code 2.
"""


class OgpBenchError(ValueError):
    pass


class ParityError(OgpBenchError):
    """n * d is odd, so no d-regular graph exists."""


class InfeasibleError(OgpBenchError):
    """Requested structure cannot exist (e.g. degree >= node count)."""


class RangeError(OgpBenchError):
    pass


class ArityError(OgpBenchError):
    pass


class CapacityError(OgpBenchError):
    """Dense object would exceed the configured memory cap."""


class LengthMismatchError(OgpBenchError):
    pass


class CapExceededError(OgpBenchError):
    """Instance too large for an exact solver."""


class HostMismatchError(OgpBenchError):
    pass


class FitError(OgpBenchError):
    pass


class PreconditionError(OgpBenchError):
    pass


class ValidationError(OgpBenchError):
    pass
