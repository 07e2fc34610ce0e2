"""Exception hierarchy shared by all modules."""


class SemieqError(Exception):
    """Base class for every error raised by this package."""


class TableShapeError(SemieqError, ValueError):
    pass


class OutOfRangeEntry(SemieqError, ValueError):
    def __init__(self, i: int, j: int, value: int, order: int):
        self.i, self.j, self.value, self.order = i, j, value, order
        super().__init__(f"table[{i}][{j}] = {value} is outside [0, {order})")


class NonAssociative(SemieqError, ValueError):
    def __init__(self, i: int, j: int, k: int):
        self.triple = (i, j, k)
        super().__init__(f"associativity fails at ({i}, {j}, {k}): (ij)k != i(jk)")


class EmptyGeneratorSet(SemieqError, ValueError):
    pass


class NotACongruence(SemieqError, ValueError):
    pass


class NotAnIdeal(SemieqError, ValueError):
    pass


class UnsupportedParameter(SemieqError, ValueError):
    pass


class NoIdempotents(SemieqError, ValueError):
    pass


class NotIdempotent(SemieqError, ValueError):
    pass


class NotRegular(SemieqError, ValueError):
    pass


class EquationSyntaxError(SemieqError, ValueError):
    """Raised by the equation-system parser; carries 1-based line and column."""

    def __init__(self, message: str, line: int, column: int):
        self.line, self.column = line, column
        super().__init__(f"{message} (line {line}, column {column})")


class UnboundSymbol(SemieqError, ValueError):
    pass


class DuplicateBinder(SemieqError, ValueError):
    pass


class BudgetExceeded(SemieqError, RuntimeError):
    def __init__(self, estimated_cost: int, budget: int):
        self.estimated_cost, self.budget = estimated_cost, budget
        super().__init__(
            f"search exceeded budget of {budget} nodes (estimated cost {estimated_cost})")


class UnknownClass(SemieqError, KeyError):
    pass


class UnsupportedAtom(SemieqError, ValueError):
    pass


class DisjunctiveMatrix(SemieqError, ValueError):
    pass


class EquivalenceViolation(SemieqError, AssertionError):
    """Two independently computed verdicts that must agree did not."""


class OrderCapExceeded(SemieqError, ValueError):
    pass


class UnknownSymbol(SemieqError, ValueError):
    pass


class HasParameters(SemieqError, ValueError):
    pass


class TableParseError(SemieqError, ValueError):
    pass
