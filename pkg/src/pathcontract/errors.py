"""Exception types shared across the package."""


class PathContractError(Exception):
    """Base class for all library errors."""


class ParseError(PathContractError, ValueError):
    """Malformed graph file or malformed CLI fraction/vertex-list argument."""


class CapacityExceeded(PathContractError, ValueError):
    """Input exceeds the fixed 128-vertex capacity (or a generator's cap)."""


class DomainError(PathContractError, ValueError):
    """Numeric argument outside the function's domain."""


class NotAPartition(PathContractError, ValueError):
    """Supplied parts overlap or do not cover every vertex."""


class PartNotConnected(PathContractError, ValueError):
    """A part that must induce a connected subgraph does not."""

    def __init__(self, index, part):
        self.index = index
        self.part = part
        super().__init__(f"part {index} ({sorted_bits(part)}) is not connected")


class Disconnected(PathContractError, ValueError):
    """The operation requires a connected input graph."""


class NotConnected(PathContractError, ValueError):
    """A vertex set that must induce a connected subgraph does not."""


class TerminalsOverlap(PathContractError, ValueError):
    """Terminal sets passed to a DCS solver are not disjoint."""


class EmptyTerminal(PathContractError, ValueError):
    """A terminal set that must be non-empty is empty."""


class InvalidSolution(PathContractError, ValueError):
    """A tri-partition claimed as a DCS solution fails validation."""


class KeyAbsent(PathContractError, KeyError):
    """Requested set is not a key of the solution table."""


def sorted_bits(mask):
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out
