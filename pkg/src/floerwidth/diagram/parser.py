"""Parser and canonical printer for diagram notation.

Grammar (whitespace-insensitive)::

    diagram  := summand (("+" | "⊔") summand)*
    summand  := "U" | "PD" "[" crossing ("," crossing)* "]"
              | "BR" "[" ints "]" | "C" "[" ints "]" | "P" "[" ints "]"
              | "M" "[" "[" ints "]" ("," "[" ints "]")* "]"
    crossing := "X" ("(" | "[") int "," int "," int "," int (")" | "]")

Arc labels of later ``PD`` summands are shifted past the labels already used.
"""

from __future__ import annotations

import re
from typing import NamedTuple

from floerwidth.core.exceptions import DiagramError, DiagramParseError, InvalidDiagramError
from floerwidth.core.types import PDTuple
from floerwidth.diagram.model import LinkDiagram, disjoint_union

_TOKEN = re.compile(r"\s*(?:(?P<int>-?\d+)|(?P<word>[A-Za-z]+)|(?P<sym>[\[\](),+⊔]))")


class _Token(NamedTuple):
    kind: str
    text: str
    position: int


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    position = 0
    while position < len(text):
        if text[position:].strip() == "":
            break
        match = _TOKEN.match(text, position)
        if match is None:
            offset = len(text[position:]) - len(text[position:].lstrip())
            raise DiagramParseError(
                text, position + offset, f"unexpected character {text[position + offset]!r}"
            )
        kind = match.lastgroup or "sym"
        start = match.start(kind)
        tokens.append(_Token(kind, match.group(kind), start))
        position = match.end()
    tokens.append(_Token("end", "", len(text)))
    return tokens


class _Parser:
    """Recursive-descent parser over the token stream."""

    def __init__(self, text: str) -> None:
        self._text = text
        self._tokens = _tokenize(text)
        self._index = 0

    def _peek(self) -> _Token:
        return self._tokens[self._index]

    def _next(self) -> _Token:
        token = self._tokens[self._index]
        self._index += 1
        return token

    def _fail(self, token: _Token, reason: str) -> DiagramParseError:
        return DiagramParseError(self._text, token.position, reason)

    def _expect(self, *texts: str) -> _Token:
        token = self._next()
        if token.text not in texts:
            found = token.text or "end of input"
            raise self._fail(token, f"expected {' or '.join(map(repr, texts))}, found {found!r}")
        return token

    def _integer(self) -> int:
        token = self._next()
        if token.kind != "int":
            raise self._fail(token, f"expected an integer, found {token.text or 'end of input'!r}")
        return int(token.text)

    def _integer_list(self) -> list[int]:
        self._expect("[")
        if self._peek().text == "]":
            raise self._fail(self._peek(), "empty list")
        values = [self._integer()]
        while self._peek().text == ",":
            self._next()
            values.append(self._integer())
        self._expect("]")
        return values

    def _tangle_list(self) -> list[list[int]]:
        self._expect("[")
        tangles = [self._integer_list()]
        while self._peek().text == ",":
            self._next()
            tangles.append(self._integer_list())
        self._expect("]")
        return tangles

    def parse(self) -> LinkDiagram:
        summands = [self._summand()]
        while self._peek().text in ("+", "⊔"):
            self._next()
            summands.append(self._summand())
        token = self._peek()
        if token.kind != "end":
            raise self._fail(token, f"unexpected {token.text!r} after diagram")
        return disjoint_union(summands)

    def _summand(self) -> LinkDiagram:
        token = self._next()
        word = token.text.upper() if token.kind == "word" else ""
        try:
            if word == "U":
                return LinkDiagram(unknots=1)
            if word == "PD":
                return self._pd(token)
            if word in ("BR", "C", "P"):
                values = self._integer_list()
                return self._construction(word, values)
            if word == "M":
                from floerwidth.diagram.wiring import montesinos_knot

                return montesinos_knot(self._tangle_list())
        except InvalidDiagramError as e:
            raise DiagramParseError(self._text, token.position, e.reason) from e
        except DiagramParseError:
            raise
        except DiagramError as e:
            raise DiagramParseError(self._text, token.position, e.message) from e
        except ValueError as e:
            raise DiagramParseError(self._text, token.position, str(e)) from e
        raise self._fail(token, f"expected 'U', 'PD', 'BR', 'C', 'P' or 'M', found {token.text!r}")

    def _pd(self, start: _Token) -> LinkDiagram:
        self._expect("[")
        if self._peek().text == "]":
            raise self._fail(self._peek(), "PD[] has no crossings; write U for an unknot")
        crossings = [self._crossing()]
        while self._peek().text == ",":
            self._next()
            crossings.append(self._crossing())
        self._expect("]")
        return LinkDiagram(crossings=tuple(crossings))

    def _crossing(self) -> PDTuple:
        token = self._next()
        if token.text.upper() != "X":
            raise self._fail(token, f"expected 'X', found {token.text or 'end of input'!r}")
        opener = self._expect("(", "[")
        values = [self._integer()]
        for _ in range(3):
            self._expect(",")
            values.append(self._integer())
        self._expect(")" if opener.text == "(" else "]")
        a, b, c, d = values
        return (a, b, c, d)

    @staticmethod
    def _construction(word: str, values: list[int]) -> LinkDiagram:
        from floerwidth.diagram import wiring

        if word == "BR":
            return wiring.braid_closure(values)
        if word == "C":
            return wiring.rational_knot(values)
        return wiring.pretzel_knot(values)


def parse_pd(text: str) -> LinkDiagram:
    """
    Parse diagram notation into a validated LinkDiagram.

    Raises:
        DiagramParseError: Malformed text or crossing data, with position and reason.
    """
    return _Parser(text).parse()


def format_pd(diagram: LinkDiagram) -> str:
    """Canonical text: one PD list sorted by first entry, then ``+U`` per unknot."""
    pieces: list[str] = []
    if diagram.crossings:
        tuples = ",".join(
            f"X({a},{b},{c},{d})" for a, b, c, d in sorted(diagram.crossings)
        )
        pieces.append(f"PD[{tuples}]")
    pieces.extend("U" for _ in range(diagram.unknots))
    return "+".join(pieces)


def canonical_form(diagram: LinkDiagram) -> str:
    return format_pd(diagram)
