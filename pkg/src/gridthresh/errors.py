"""Exceptions shared across the package."""


class CapacityError(Exception):
    """An input is beyond the configured size bound of an exhaustive method.

    Raised instead of silently truncating or overflowing: subset enumeration
    past 2^20 dichotomies, candidate-line enumeration past the configured
    grid cap, and integer work that would leave the checked int64 envelope
    of the vectorised fast paths.
    """
