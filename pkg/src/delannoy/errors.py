"""Exceptions shared across the package."""


class ConsistencyError(RuntimeError):
    """Two routes that must agree (formula vs formula, formula vs table) disagreed.

    This is never a user error: it means an internal cross-check failed and the
    computed numbers cannot be trusted.
    """
