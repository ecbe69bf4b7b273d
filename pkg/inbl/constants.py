"""Noise-based logic constants."""


class GateKind:
    """Enumeration of gate kinds."""

    NOT = 'not'
    CLEAR = 'clear'
    XOR = 'xor'
    XNOR = 'xnor'


class XorVariant:
    """Enumeration of the wire pairs an XOR gate multiplies."""

    ONES = 'ones'
    ZEROS = 'zeros'


class XnorMode:
    """Enumeration of XNOR constructions."""

    DIRECT = 'direct'
    VIA_NOT = 'via_not'


class XnorVariant:
    """Enumeration of the wire pairs a direct XNOR gate multiplies."""

    STANDARD = 'standard'
    ALTERNATE = 'alternate'


class ExitCode:
    """Enumeration of process exit codes."""

    OK = 0
    VERIFICATION_FAILED = 1
    USAGE_ERROR = 2


# Statistical checks allow this many standard deviations.
SIGMA_BOUND = 5
STATISTICAL_RETRIES = 1

MAX_SEED = 2 ** 64 - 1
