"""Exception types shared across the package."""


class ExpGroupsError(Exception):
    pass


class NonPrime(ExpGroupsError, ValueError):
    pass


class NotCoprime(ExpGroupsError, ValueError):
    pass


class EvenInput(ExpGroupsError, ValueError):
    pass


class TooLarge(ExpGroupsError, ValueError):
    pass


class ZeroElement(ExpGroupsError, ZeroDivisionError):
    pass


class NoSuchRoot(ExpGroupsError, ValueError):
    pass


class BadResidue(ExpGroupsError, ValueError):
    pass


class CapExceeded(ExpGroupsError):
    """Enumeration hit its element budget before closing."""

    def __init__(self, cap, partial):
        super().__init__(f"element budget {cap} exceeded ({partial} elements found so far)")
        self.cap = cap
        self.partial = partial


class NotCentral(ExpGroupsError, ValueError):
    pass


class ActionNotHomomorphic(ExpGroupsError, ValueError):
    pass


class InvalidSpec(ExpGroupsError, ValueError):
    pass


class NotSimpleRange(UserWarning):
    """The group exists but lies outside the simple range the classifier covers."""


class DimensionMismatch(ExpGroupsError, ValueError):
    pass


class NotIsometry(ExpGroupsError, ValueError):
    pass


class PNotDividing(ExpGroupsError, ValueError):
    pass


class EvenCharacteristic(ExpGroupsError, ValueError):
    pass


class OutOfRange(ExpGroupsError, ValueError):
    pass


class FamilyNotCovered(ExpGroupsError, ValueError):
    pass


class NotSimple(ExpGroupsError, ValueError):
    pass


class EvenPrime(ExpGroupsError, ValueError):
    pass
