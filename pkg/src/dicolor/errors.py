"""Exception types shared across the package."""


class DigraphError(ValueError):
    """Base class for invalid-input errors."""


class EdgeListError(DigraphError):
    """Malformed edge-list text."""

    def __init__(self, lineno, message):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {message}")


class CapacityError(DigraphError):
    """An exponential routine was asked to exceed its configured limit."""

    def __init__(self, what, value, limit):
        self.what = what
        self.value = value
        self.limit = limit
        super().__init__(f"{what} = {value} exceeds limit {limit}")


class NotATournamentError(DigraphError):
    pass


class PreconditionError(DigraphError):
    """A caller-asserted hypothesis turned out to be false.

    ``witness`` carries whatever object demonstrates the violation
    (typically a vertex mask of a monochromatic cycle).
    """

    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(message)


class LocalSearchError(RuntimeError):
    """A local-search fixpoint violated its guaranteed property."""


class PartColoringError(RuntimeError):
    """A part of the local-search partition admitted no proper 2-coloring."""

    def __init__(self, part_mask, part_index):
        self.part_mask = part_mask
        self.part_index = part_index
        super().__init__(
            f"part {part_index} (mask {part_mask:#x}) has no acyclic 2-coloring"
        )
