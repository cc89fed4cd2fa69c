class LotError(Exception):
    pass


class MalformedGraph(LotError):
    pass


class SelfLoop(MalformedGraph):
    pass


class DuplicateEdge(MalformedGraph):
    pass


class UnknownVertex(LotError):
    pass


class UnknownEdge(LotError):
    pass


class Disconnected(LotError):
    pass


class NotTree(LotError):
    pass


class NotInteriorReduced(LotError):
    pass


class EvenVertexCount(LotError):
    pass


class EdgeIsCovered(LotError):
    pass


class NameClash(LotError):
    pass


class SizeTooLarge(LotError):
    pass


class InvalidSize(LotError):
    pass


class BudgetExceeded(LotError):
    def __init__(self, message, lower, upper, witness=()):
        super().__init__(message)
        self.lower = lower
        self.upper = upper
        self.witness = tuple(witness)


class ParseError(LotError):
    def __init__(self, message, line=None, column=None, expected=None):
        self.line = line
        self.column = column
        self.expected = expected
        where = ""
        if line is not None and column is not None:
            where = f"line {line}, column {column}: "
        elif line is not None:
            where = f"line {line}: "
        elif column is not None:
            where = f"column {column}: "
        if expected:
            message = f"{message} (expected {expected})"
        super().__init__(where + message)


class NonConjugationRelation(ParseError):
    pass


class UnknownGenerator(ParseError):
    pass
