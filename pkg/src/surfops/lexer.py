"""Tokenizer shared by the word, surface, and diagram grammars.

All three grammars use the same lexical conventions: punctuation characters
are self-delimiting, whitespace separates names, and ``#k`` (k a positive
integer) is a glue token.
"""

from __future__ import annotations

from dataclasses import dataclass

PUNCTUATION = "(){}[]^;,"


class ParseError(ValueError):
    """Malformed textual input; carries the offending position."""

    def __init__(self, message: str, text: str = "", pos: int = 0) -> None:
        line = text.count("\n", 0, pos) + 1
        col = pos - text.rfind("\n", 0, pos)
        super().__init__(f"line {line}, col {col}: {message}")
        self.reason = message
        self.pos = pos
        self.line = line
        self.col = col


@dataclass(frozen=True)
class Token:
    kind: str  # a punctuation character, "name", "glue", or "end"
    text: str
    pos: int


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in PUNCTUATION:
            tokens.append(Token(ch, ch, i))
            i += 1
            continue
        if ch == "#":
            j = i + 1
            while j < n and text[j].isdigit():
                j += 1
            digits = text[i + 1 : j]
            if not digits:
                raise ParseError("expected digits after '#'", text, i)
            if digits[0] == "0":
                raise ParseError("glue token ids are positive integers without leading zeros", text, i)
            tokens.append(Token("glue", f"#{digits}", i))
            i = j
            continue
        if not ch.isprintable():
            raise ParseError(f"unprintable character {ch!r}", text, i)
        j = i
        while j < n and not text[j].isspace() and text[j] not in PUNCTUATION and text[j] != "#":
            if not text[j].isprintable():
                raise ParseError(f"unprintable character {text[j]!r}", text, j)
            j += 1
        tokens.append(Token("name", text[i:j], i))
        i = j
    tokens.append(Token("end", "", n))
    return tokens


class TokenStream:
    """Cursor over a token list with grammar-error helpers."""

    def __init__(self, text: str) -> None:
        self.text = text
        self.tokens = tokenize(text)
        self.index = 0

    def peek(self) -> Token:
        return self.tokens[self.index]

    def advance(self) -> Token:
        tok = self.tokens[self.index]
        if tok.kind != "end":
            self.index += 1
        return tok

    def expect(self, kind: str, what: str | None = None) -> Token:
        tok = self.peek()
        if tok.kind != kind:
            wanted = what or f"'{kind}'"
            found = "end of input" if tok.kind == "end" else repr(tok.text)
            raise ParseError(f"expected {wanted}, found {found}", self.text, tok.pos)
        return self.advance()

    def expect_end(self) -> None:
        tok = self.peek()
        if tok.kind != "end":
            raise ParseError(f"unexpected trailing input {tok.text!r}", self.text, tok.pos)

    def error(self, message: str, tok: Token | None = None):
        raise ParseError(message, self.text, (tok or self.peek()).pos)
