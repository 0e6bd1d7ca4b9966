"""Exceptions raised across the package."""


class MonopathError(Exception):
    """Base class for all errors raised by monopath."""


class CapExceeded(MonopathError):
    """An exhaustive computation was asked to run past its configured size cap."""


class NonGenericFunctional(MonopathError):
    """Two of the values a'_i + m coincide, so the functional lies on a hyperplane."""

    def __init__(self, first, second, value):
        self.first = first
        self.second = second
        self.value = value
        super().__init__(
            f"values for (letter, shift) {first} and {second} both equal {value}"
        )


class NestingWord(MonopathError):
    """An operation that needs a non-nesting word was given a nesting one."""


class NotSwappable(MonopathError):
    pass


class OutOfBox(MonopathError):
    pass


class NotPrime(MonopathError):
    pass


class TooLarge(MonopathError):
    pass


class UnsupportedDimension(MonopathError):
    pass
