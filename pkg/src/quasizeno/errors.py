"""Exception hierarchy shared by all quasizeno modules."""


class QuasiZenoError(ValueError):
    """Base class for every error raised by this package."""


class InvalidMatrix(QuasiZenoError):
    pass


class NotHermitian(QuasiZenoError):
    pass


class NotProjector(QuasiZenoError):
    pass


class EmptyBasis(QuasiZenoError):
    pass


class TooLarge(QuasiZenoError):
    pass


class Unsupported(QuasiZenoError):
    pass


class Mismatch(QuasiZenoError):
    pass


class StateOutsideSubspace(QuasiZenoError):
    pass


class DegenerateStep(QuasiZenoError, ArithmeticError):
    """All measurement outcomes have vanishing probability."""


class InvalidMoments(QuasiZenoError):
    pass


class ZeroVector(QuasiZenoError):
    pass


class ConfigError(QuasiZenoError):
    """Invalid experiment configuration; ``field`` names the offending key."""

    def __init__(self, field, message):
        self.field = field
        super().__init__(f"{field}: {message}")
