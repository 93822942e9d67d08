"""Exception types raised by the dnfusion package."""


class DnfusionError(Exception):
    """Base class for all dnfusion errors."""


class UndefinedDegree(DnfusionError):
    """The non-exclusive degree has no defined value for the given pair."""


class TooFewGranules(DnfusionError):
    """The exclusive coefficient needs at least two granules."""


class IncompleteInput(DnfusionError):
    """The operation requires a complete D number (total mass 1)."""


class FrameMismatch(DnfusionError):
    """The operands are defined over different frames."""


class TotalConflict(DnfusionError):
    """Combination left no mass to normalize (conflict k = 1)."""


class EmptyInput(DnfusionError):
    """The operation needs at least one input."""


class ValidationError(DnfusionError):
    """A structured input file failed validation."""
