import re

from lotkit.errors import NonConjugationRelation, ParseError, UnknownGenerator
from lotkit.presentation import LotPresentation, Relation

__all__ = ["parse_presentation"]

TOKEN = re.compile(r"(?P<space>\s+)|(?P<inverse>\^-1)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<punct>[<>|,=])")


def _position(text, offset):
    line = text.count("\n", 0, offset) + 1
    column = offset - (text.rfind("\n", 0, offset) + 1) + 1
    return line, column


def _tokenize(text):
    tokens = []
    offset = 0
    while offset < len(text):
        m = TOKEN.match(text, offset)
        if not m:
            line, column = _position(text, offset)
            raise ParseError(
                f"unexpected character {text[offset]!r}",
                line,
                column,
                "a generator name, '^-1' or one of < > | , =",
            )
        kind = m.lastgroup
        if kind != "space":
            value = m.group(kind)
            tokens.append((value if kind == "punct" else kind, value, offset))
        offset = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def take(self):
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def fail(self, token, message, expected, error=ParseError):
        line, column = _position(self.text, token[2])
        raise error(message, line, column, expected)

    def expect(self, kind, expected):
        token = self.take()
        if token[0] != kind:
            shown = token[1] or "end of input"
            self.fail(token, f"unexpected {shown!r}", expected)
        return token

    def generators(self):
        names = []
        seen = set()
        while True:
            token = self.peek()
            if token[0] == "name":
                self.take()
                if token[1] in seen:
                    self.fail(token, f"generator {token[1]!r} listed twice", "a new generator name")
                seen.add(token[1])
                names.append(token[1])
            elif token[0] == "," and names:
                self.take()
            elif token[0] == "|":
                if not names:
                    self.fail(token, "empty generator list", "a generator name")
                return names
            else:
                shown = token[1] or "end of input"
                self.fail(token, f"unexpected {shown!r}", "a generator name, ',' or '|'")

    def relation(self, generators):
        start = self.peek()
        group = []
        while self.peek()[0] in ("name", "inverse", "="):
            group.append(self.take())
        if not group:
            shown = start[1] or "end of input"
            self.fail(start, f"unexpected {shown!r}", "a relation 'k i k^-1 = j'")
        shape = [t[0] for t in group]
        if shape != ["name", "name", "name", "inverse", "=", "name"] or group[0][1] != group[2][1]:
            words = " ".join(t[1] for t in group)
            self.fail(
                start,
                f"relation '{words}' is not a conjugation",
                "the form 'k i k^-1 = j'",
                NonConjugationRelation,
            )
        k, i, j = group[0], group[1], group[5]
        for token in (k, i, j):
            if token[1] not in generators:
                self.fail(
                    token,
                    f"unknown generator {token[1]!r}",
                    "a generator from the generator list",
                    UnknownGenerator,
                )
        if i[1] == j[1]:
            self.fail(
                start,
                f"relation conjugates {i[1]!r} to itself",
                "two different generators on either side",
                NonConjugationRelation,
            )
        return Relation(k[1], i[1], j[1])

    def presentation(self):
        self.expect("<", "'<'")
        generators = self.generators()
        self.expect("|", "'|'")
        relations = []
        if self.peek()[0] != ">":
            relations.append(self.relation(set(generators)))
            while self.peek()[0] == ",":
                self.take()
                relations.append(self.relation(set(generators)))
        self.expect(">", "',' or '>'")
        self.expect("end", "end of input")
        return LotPresentation(tuple(generators), tuple(relations))


def parse_presentation(text):
    """Parse ``< gens | k i k^-1 = j, ... >`` into a LotPresentation."""
    return _Parser(text).presentation()
