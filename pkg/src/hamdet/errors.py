"""Exception types shared across the package."""


class FieldTooSmallError(ValueError):
    """The field GF(2^k) has too few elements for the requested computation."""


class UnbalancedPartitionError(ValueError):
    """A bipartition with unequal sides was given where balance is required."""


class NonBipartiteError(ValueError):
    """The graph is not bipartite but a bipartite-only routine was invoked."""


class NotIndependentError(ValueError):
    """The supplied vertex set is not independent in the graph."""


class GraphFormatError(ValueError):
    """Malformed edge-list input."""
