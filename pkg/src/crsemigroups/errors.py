"""Exception types shared across the package."""


class SemigroupError(Exception):
    """Base class for all domain errors raised by this package."""


class IndexOutOfRange(SemigroupError):
    """A Cayley table entry lies outside [0, n)."""

    def __init__(self, row: int, col: int, value: object, order: int):
        self.row, self.col, self.value, self.order = row, col, value, order
        super().__init__(
            f"table[{row}][{col}] = {value!r} is not an element index in [0, {order})"
        )


class NotAssociative(SemigroupError):
    """The table fails associativity; carries the first witness triple."""

    def __init__(self, a: int, b: int, c: int):
        self.witness = (a, b, c)
        super().__init__(f"(a*b)*c != a*(b*c) for (a, b, c) = ({a}, {b}, {c})")


class NotCompletelyRegular(SemigroupError):
    """The semigroup has an element with no commuting inverse."""

    def __init__(self, element: int):
        self.element = element
        super().__init__(f"element {element} has no commuting inverse")


class NotCompletelyRegularElement(SemigroupError):
    """A single element lies in no subgroup, so a^-1 and a^0 are undefined."""

    def __init__(self, element: int):
        self.element = element
        super().__init__(f"element {element} lies in no subgroup")


class NotClosed(SemigroupError):
    """A subset is not closed under multiplication; carries a witness pair."""

    def __init__(self, a: int, b: int, product: int):
        self.witness = (a, b)
        self.product = product
        super().__init__(f"{a}*{b} = {product} escapes the subset")


class NotACongruence(SemigroupError):
    """A partition is not compatible with multiplication."""

    def __init__(self, a: int, b: int, c: int, side: str):
        self.witness = (a, b, c, side)
        super().__init__(
            f"classes of {a} and {b} split under {side} multiplication by {c}"
        )


class HostMismatch(SemigroupError):
    """Two congruences/relations do not live on the same semigroup."""


class OrderBoundExceeded(SemigroupError):
    """An exhaustive computation was requested beyond its configured bound."""

    def __init__(self, order: int, bound: int, what: str = "computation"):
        self.order, self.bound = order, bound
        super().__init__(f"{what} supports order <= {bound}, got {order}")


class NotAGroup(SemigroupError):
    """A construction required a group but the input is not one."""


class ParseError(SemigroupError):
    """A Cayley-table text section could not be parsed."""

    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")
