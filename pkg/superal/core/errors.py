# superal/core/errors.py
from __future__ import annotations


class SuperalError(Exception):
    """Base class for every error raised by the toolkit."""


class ParityError(SuperalError, ValueError):
    """A parity-sensitive operation received a mixed or inconsistent element."""


class DimensionError(SuperalError, ValueError):
    pass


class ModulusMismatchError(SuperalError, ValueError):
    pass


class NotInSpanError(SuperalError, ValueError):
    """A matrix is not in the span of an algebra's basis."""


class WeylDegreeError(SuperalError, ValueError):
    pass


class VarianceError(SuperalError, TypeError):
    pass


class ArityError(SuperalError, ValueError):
    pass


class AlignmentError(SuperalError):
    """The Weyl realization and the form realization of osp(1,2n) disagree."""


class BoundViolationError(SuperalError):
    """Modular verification requested with a prime below the coefficient bound."""


class UnknownSuiteError(SuperalError, KeyError):
    pass
