"""Exception types shared across the package."""


class RingMismatchError(ValueError):
    """Operands belong to different coefficient rings (distinct moduli)."""


class InvalidModulusError(ValueError):
    """A modulus that must be prime failed the primality check."""


class NotDisjointError(ValueError):
    """Subfields were proved not linearly disjoint during construction."""


class RamifiedPrimeError(ValueError):
    """A polynomial was not square-free modulo the given prime."""


class CombinationError(ValueError):
    """First-degree primes cannot be combined (norm or field mismatch)."""


class InvalidIdealError(ValueError):
    """(e, d) is not a coprime pair."""


class UndefinedMapError(ValueError):
    """The affine residue map is undefined because p divides d."""


class FieldMismatchError(ValueError):
    """A prime ideal was paired with a generator from another field."""


class InvariantViolation(RuntimeError):
    """An internally guaranteed identity failed; indicates a bug."""
