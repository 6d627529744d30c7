"""Error hierarchy shared by every app.

Validation failures subclass Django's ``ValidationError`` and carry a ``code``
naming the violated invariant; everything else derives from
``PentaclusterError``.
"""
from django.core.exceptions import ValidationError


class InvalidGraphError(ValidationError):
    """A plane graph or fullerene invariant does not hold."""


class PlanarCodeError(ValidationError):
    """A planar_code stream is malformed or cannot be written."""


class SpiralError(ValidationError):
    """A face spiral does not wind up into a fullerene."""


class PatchError(ValidationError):
    """A patch is malformed or a patch operation is not applicable."""


class PartitionError(ValidationError):
    """A value is not a partition of 12 or is out of range."""


class PentaclusterError(Exception):
    pass


class EnumerationLimitError(PentaclusterError):
    """Requested n exceeds the configured enumeration limit."""


class ReplacementNotFoundError(PentaclusterError):
    """No replacement patch was found for an inflated cluster region."""


class SeedTableError(PentaclusterError):
    """The seed table is missing an entry or failed revalidation."""


class SymmetryError(PentaclusterError):
    """Automorphism data could not be mapped to a point group."""


def error_message(exc):
    """Flatten an exception into a single diagnostic line."""
    if isinstance(exc, ValidationError):
        code = getattr(exc, 'code', None)
        text = '; '.join(exc.messages)
        return f'{code}: {text}' if code else text
    return str(exc)
