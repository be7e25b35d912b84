"""Exception types shared across the package."""


class PrimeFourierError(Exception):
    """Base class for everything raised deliberately by this package."""


class NotPrime(PrimeFourierError):
    """Modulus failed the primality check."""


class PrimeMismatch(PrimeFourierError):
    """Operands were built over different primes."""


class NotDivisible(PrimeFourierError):
    """Element is not divisible by 1 - w."""


class ZeroInverse(PrimeFourierError):
    """Inverse of zero requested."""


class ZeroPolynomial(PrimeFourierError):
    """Operation undefined for the zero polynomial."""


class PreconditionViolated(PrimeFourierError):
    """A hypothesis of the checked statement fails for the given input."""


class SizeMismatch(PrimeFourierError):
    """Paired sets or aligned vectors differ in size."""


class EmptySet(PrimeFourierError):
    """An index set that must be non-empty is empty."""


class TooLarge(PrimeFourierError):
    """Instance exceeds the exhaustive-search guard."""


class OutOfRange(PrimeFourierError):
    """Numeric argument outside its documented range."""


class ZeroSignal(PrimeFourierError):
    """The support inequality is stated for non-zero signals only."""


class Inconsistent(PrimeFourierError):
    """No signal within the sparsity bound matches the measurements."""


class InsufficientSamples(PrimeFourierError):
    """Fewer spectral samples than the sparsity bound requires."""


class MalformedInput(PrimeFourierError):
    """Serialized value or user-supplied data failed validation."""


class SingularMatrixError(PrimeFourierError):
    """Square system has no unique solution."""


class TheoremViolation(PrimeFourierError):
    """A statement this package verifies reported false on concrete data.

    Raised instead of being returned as a negative result: any occurrence
    means a bug in the arithmetic, never new mathematics.
    """


class IntegralityViolation(TheoremViolation):
    """Determinant of a root-of-unity matrix came out non-integral."""
