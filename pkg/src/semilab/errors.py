"""Exception hierarchy shared by every semilab module."""


class SemilabError(Exception):
    """Base class for errors caused by bad input data."""


class TableFormatError(SemilabError):
    """A Cayley table (or .sg file) is malformed."""


class AssociativityError(SemilabError):
    def __init__(self, triple, left, right):
        x, y, z = triple
        self.triple = triple
        super().__init__(
            f"not associative: ({x}*{y})*{z} = {left} but {x}*({y}*{z}) = {right}"
        )


class ZeroError(SemilabError):
    def __init__(self, zero, witness):
        self.zero = zero
        self.witness = witness
        super().__init__(f"declared zero {zero} is not absorbing (witness element {witness})")


class NotAnIdeal(SemilabError):
    def __init__(self, left, right, product):
        self.witness = (left, right, product)
        super().__init__(f"not an ideal: {left}*{right} = {product} falls outside the set")


class EmptyInput(SemilabError):
    pass


class SizeLimitExceeded(SemilabError):
    def __init__(self, what, size, limit):
        self.size = size
        self.limit = limit
        super().__init__(f"{what}: size {size} exceeds the limit {limit}")


class NoZeroElement(SemilabError):
    def __init__(self, name="semigroup"):
        super().__init__(f"{name} has no zero element")


class NotAGroup(SemilabError):
    pass


class IrregularSandwich(SemilabError):
    def __init__(self, kind, index):
        self.kind = kind
        self.index = index
        super().__init__(f"sandwich matrix {kind} {index} has no nonzero entry")


class NumericalAmbiguity(SemilabError):
    pass


class UnsupportedOrder(SemilabError):
    pass


class InternalInvariantError(AssertionError):
    """Two independent computations disagreed; always a bug."""
