"""Exception types shared across the package."""


class SupercongError(Exception):
    """Base class for all errors raised by this package."""


class NotInvertible(SupercongError):
    """A residue has no inverse because the prime divides its value."""


class NotPAdicInteger(SupercongError):
    """A rational with p in its denominator has no residue mod p**k."""


class PreconditionViolated(SupercongError):
    """Arguments fall outside the stated range of validity of a statement."""


class IndexTooLarge(SupercongError):
    """A Bernoulli index beyond p-2, where p-integrality is no longer guaranteed."""


class PoleAtX(SupercongError):
    """A partial-fraction identity was evaluated at a pole of its right side."""


class ResidualPoleAtOne(SupercongError):
    """A factor (1-q) survived cancellation, so evaluation at q=1 is undefined."""


class ConfigError(SupercongError):
    """A sweep configuration is unusable (bad ranges, unparseable values)."""
