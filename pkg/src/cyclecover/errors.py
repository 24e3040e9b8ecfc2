"""Exceptions shared across the package.

Every error that aborts a construction carries a witness: enough data to
reproduce the failure by hand on small inputs.
"""


class TopologyError(Exception):
    """Base class for all structural failures raised by this package."""


class OddCycleError(TopologyError):
    """The facet-dual graph is not bipartite.

    ``cycle`` is a closed walk (list of top-simplex indices) of odd length.
    """

    def __init__(self, message: str, cycle: list[int]):
        super().__init__(message)
        self.cycle = cycle


class NonOrientableError(TopologyError):
    """Coherent sign propagation failed.

    ``witness`` is a triple (facet, index_a, index_b): the two top simplices
    whose induced orientations on the shared facet cannot be made opposite.
    """

    def __init__(self, message: str, witness: tuple):
        super().__init__(message)
        self.witness = witness


class InconsistentGluingError(TopologyError):
    """Facet gluing of a permutahedral complex fails an involution or
    commutation requirement."""


class CapExceededError(TopologyError):
    """A cell enumeration grew past the configured cap."""

    def __init__(self, message: str, cap: int, reached: int):
        super().__init__(message)
        self.cap = cap
        self.reached = reached


class MatchingOverflowError(TopologyError):
    """Exact matching enumeration was refused because the complex has more
    top simplices than the configured cap allows."""


class NotACoveringError(TopologyError):
    """The candidate projection is not a covering of cell complexes."""


class NotWellDefinedError(TopologyError):
    """A map on identified faces received conflicting values on one class."""


class DegreeNotConstantError(TopologyError):
    """Signed preimage counts of a simplicial map differ between two top
    simplices of the codomain."""

    def __init__(self, message: str, witness: tuple):
        super().__init__(message)
        self.witness = witness
