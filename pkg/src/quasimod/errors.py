"""Exception types shared across the package."""


class QuasimodError(Exception):
    """Base class for all library errors."""


class Malformed(QuasimodError):
    """Input text or data does not follow the expected format."""


class NotLatin(QuasimodError):
    """A table is not a Latin square; carries a (kind, index, position) witness."""

    def __init__(self, kind, index, position):
        self.kind = kind
        self.index = index
        self.position = position
        super().__init__(f"not a Latin square: duplicate in {kind} {index} at position {position}")


class NotLoop(QuasimodError):
    """A quasigroup has no two-sided neutral element."""


class NotDiassociative(QuasimodError):
    """A bracketing discrepancy was detected where diassociativity was assumed."""


class NotNormal(QuasimodError):
    """A subloop/subquasigroup does not induce a well-defined quotient."""


class GroupTooLarge(QuasimodError):
    """Multiplication group closure exceeded the configured cap."""


class SearchTooLarge(QuasimodError):
    """Endomorphism search exceeded the configured node cap."""


class CarrierMismatch(QuasimodError):
    """Maps or tables defined over carriers of different sizes were combined."""


class NotNKLoop(QuasimodError):
    """A loop is not an NK-loop (nucleus + Moufang center do not cover it)."""


class ConditionFViolated(QuasimodError):
    """An endomorphism does not satisfy the nucleus/Moufang-center displacement condition."""


class ImagesNotCommuting(QuasimodError):
    """Generator images handed to a polynomial evaluation do not pairwise commute."""


class ImagesNotSpecial(QuasimodError):
    """Generator images handed to a polynomial evaluation are not special endomorphisms."""


class NotInClassM(QuasimodError):
    """A generalized module fails one of the three class-M conditions."""


class NotNuclearlyPointed(QuasimodError):
    """A pointed module's point is not in the nucleus of its loop."""


class InvalidForm(QuasimodError):
    """An arithmetic form violates one of its defining conditions."""


class NoneFound(QuasimodError):
    """A search guaranteed to succeed found no candidate (invariant breach)."""


class ConstructionInvalid(QuasimodError):
    """A built-in construction failed its self-verification."""


class DegreeCapExceeded(QuasimodError):
    """A polynomial operation produced a term above the supported degree."""


class InvariantViolation(QuasimodError):
    """A theorem-backed invariant failed computationally; indicates a bug or bad input."""
