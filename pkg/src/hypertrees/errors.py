"""Exception hierarchy shared by every module."""


class HypertreeError(ValueError):
    pass


class InvalidHypergraph(HypertreeError):
    pass


class WrongCardinality(InvalidHypergraph):
    pass


class VertexOutOfRange(InvalidHypergraph):
    pass


class ParseError(HypertreeError):
    pass


class ResourceCap(HypertreeError):
    """A search or enumeration exceeded its configured budget."""


class NotAHypertree(HypertreeError):
    pass


class Not2Hypertree(HypertreeError):
    pass


class DecompositionAnomaly(HypertreeError):
    pass


class OddGroundSet(HypertreeError):
    pass


class NonDivisible(HypertreeError):
    pass


class InadmissibleOrder(HypertreeError):
    pass


class UnsupportedLabelCount(HypertreeError):
    pass


class BadPermutation(HypertreeError):
    pass


class DivisibilityViolation(HypertreeError):
    pass


class OddOrder(HypertreeError):
    pass


class TooSmall(HypertreeError):
    pass


class BlockSizeMismatch(HypertreeError):
    pass


class BaseNotEdgeMinimal(HypertreeError):
    pass


class UnknownBound(HypertreeError):
    pass


class DomainError(HypertreeError):
    pass
