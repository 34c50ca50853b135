"""Exception types shared across the package."""


class CrookedError(Exception):
    """Base class for all package errors."""


class UnsupportedDegree(CrookedError):
    """Extension degree outside the supported range."""


class InvalidModulus(CrookedError):
    """Modulus polynomial is reducible or has the wrong degree."""


class UndefinedPower(CrookedError):
    """0^0 requested."""


class InvalidSubfield(CrookedError):
    """Subfield degree does not divide the extension degree."""


class NotAUnit(CrookedError):
    """Operation requires a nonzero field element."""


class UndefinedGcd(CrookedError):
    """gcd(0, 0) requested."""


class InvalidInput(CrookedError):
    """Malformed argument (zero polynomial, bad exponent set, ...)."""


class InvalidDirection(CrookedError):
    """Derivative direction a = 0 requested."""


class InfeasibleSize(CrookedError):
    """Computation refused: instance exceeds the documented feasibility cutoff."""


class DegreeMismatch(CrookedError):
    """Two objects live over different fields."""


class NotGold(CrookedError):
    """Gold exponent s violates gcd(s, n) = 1."""


class MalformedFile(CrookedError):
    """Function file fails schema validation."""
