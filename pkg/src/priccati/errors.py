"""Exception types shared across the package."""


class InputError(ValueError):
    """Malformed or mathematically invalid input (bad prime, reducible curve, ...)."""


class UnsupportedInstanceError(Exception):
    """Instance falls outside the supported range (wild ramification p | e)."""


class IncompleteSearchError(Exception):
    """The candidate-space ladder was exhausted on an instance that the
    irreducibility test declared reducible.  A solution exists but was not
    found within the degree cap; this is reported loudly instead of being
    confused with genuine irreducibility."""


class PrecisionError(Exception):
    """A series computation ran out of known coefficients.  Callers catch
    this and retry at higher working precision."""
