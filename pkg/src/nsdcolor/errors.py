"""Exception types shared across the package.

Parse errors subclass ValueError so callers that only care about "bad input
line" can catch one thing; algorithmic failures subclass RuntimeError.
"""


class Graph6Error(ValueError):
    """Base class for graph6 codec failures."""


class InvalidChar(Graph6Error):
    """A byte outside the printable graph6 range 63..126."""


class TruncatedBits(Graph6Error):
    """Fewer data bytes than the vertex count requires."""


class TrailingGarbage(Graph6Error):
    """Extra bytes, or nonzero padding bits, after the encoded triangle."""


class TooLarge(Graph6Error):
    """Vertex count outside the supported short form (n < 63)."""


class OddN(ValueError):
    """Cubic graphs need an even vertex count."""


class GenerationExhausted(RuntimeError):
    """Random generation hit its retry budget without a simple graph."""


class BadM(ValueError):
    """Partition arity outside 2..n."""


class NotCubic(ValueError):
    """Operation requires a 3-regular graph."""


class NotConnected(ValueError):
    """Operation requires a connected graph."""


class DegreeBoundViolated(RuntimeError):
    """A decomposition kept fewer cross edges than the degree bound allows."""


class MissingColor(KeyError):
    """A coloring does not cover every element it must."""


class RepairExhausted(RuntimeError):
    """Local repair ran out of budget or reachable states."""


class Infeasible4(RuntimeError):
    """No neighbor-sum-distinguishing edge coloring with colors {1,2,3,4}.

    Raised only if an exact search of the full space fails, which would
    contradict the bound the constructive solver implements.  Treated as a
    refutation event by the pipeline.
    """


class Infeasible2(RuntimeError):
    """No neighbor-sum-distinguishing total coloring with colors {1,2}.

    Same loud-refutation contract as Infeasible4.
    """


class EdgelessGraph(ValueError):
    """Edge-coloring invariants are undefined without edges."""


class BudgetExceeded(RuntimeError):
    """Exact search stopped at its node cap; the answer is unknown."""
