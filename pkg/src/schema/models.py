from enum import StrEnum, auto


class FeedbackMode(StrEnum):
    """How the amplified output is turned into the next seed."""

    FULL_COMPLEX = auto()
    INTENSITY_ONLY = auto()


class AttenuationPolicy(StrEnum):
    NORMALIZE = auto()
    DIVIDE_BY_COSH_G1 = auto()


class Beam(StrEnum):
    SIGNAL = auto()
    IDLER = auto()


class Quadrature(StrEnum):
    """Amplitude (X = a + a†) or phase (Y = (a - a†)/i) quadrature."""

    X = "X"
    Y = "Y"


class MeasurementMethod(StrEnum):
    ANALYTIC = auto()
    MONTE_CARLO = auto()


class Stage(StrEnum):
    """CLI subcommands."""

    DECOMPOSE = auto()
    ITERATE = auto()
    MEASURE = auto()
    ALL = auto()
