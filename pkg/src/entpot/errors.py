"""Exception types raised across the package."""


class EntPotError(Exception):
    """Base class for all package-specific errors."""


class WrongDimension(EntPotError):
    """Matrix does not have the expected shape."""


class NotHermitian(EntPotError):
    """Matrix violates the Hermiticity tolerance."""


class NotAState(EntPotError):
    """Matrix is not a valid density operator (trace or positivity)."""


class SupportViolation(EntPotError):
    """supp(rho) is not contained in supp(sigma); relative entropy is infinite."""


class SingularState(EntPotError):
    """State is too close to singular for the requested matrix function."""


class OutOfDomain(EntPotError):
    """Parameter outside its admissible range."""


class NonPhysicalSpectrum(EntPotError):
    """Spectrum of an operator product is negative beyond tolerance."""


class NotConverged(EntPotError):
    """Iterative solver failed to converge (best iterate is attached)."""

    def __init__(self, message, result=None):
        super().__init__(message)
        self.result = result


class NotTracePreserving(EntPotError):
    """Kraus set fails the completeness relation."""


class RootNotBracketed(EntPotError):
    """Bisection interval does not bracket a sign change."""


class UnsupportedPair(EntPotError):
    """Requested boundary family is not defined in the requested plane."""


class ContainmentViolation(EntPotError):
    """Scanned points escape a boundary envelope; offenders are attached."""

    def __init__(self, message, offenders=None):
        super().__init__(message)
        self.offenders = offenders if offenders is not None else []
