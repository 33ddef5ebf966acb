"""Labels, renamings, and cyclic words.

A cyclic word is a finite sequence of pairwise distinct labels considered up
to rotation.  Words are stored in their canonical rotation (the
lexicographically smallest one), so equality and hashing are plain value
comparisons on the stored tuple.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .lexer import ParseError, TokenStream

# Reserved in the textual grammars; none of these may appear inside a label.
RESERVED_CHARS = "(){}[]^#;,"

_GLUE_RE = re.compile(r"#[1-9][0-9]*\Z")


def is_glue(item: str) -> bool:
    """True for generated glue tokens of the form ``#k`` with k >= 1."""
    return bool(_GLUE_RE.match(item))


def glue(k: int) -> str:
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"glue token ids are positive integers, got {k!r}")
    return f"#{k}"


def glue_id(item: str) -> int:
    if not is_glue(item):
        raise ValueError(f"not a glue token: {item!r}")
    return int(item[1:])


def check_label(name: str) -> str:
    """Validate a user label: nonempty, printable, no whitespace, no reserved characters."""
    if not isinstance(name, str) or not name:
        raise ValueError(f"labels are nonempty strings, got {name!r}")
    for ch in name:
        if ch in RESERVED_CHARS:
            raise ValueError(f"label {name!r} contains reserved character {ch!r}")
        if ch.isspace() or not ch.isprintable():
            raise ValueError(f"label {name!r} contains whitespace or unprintable characters")
    return name


def check_item(name: str) -> str:
    """Validate an item: either a user label or a glue token ``#k``."""
    if isinstance(name, str) and name.startswith("#"):
        if not is_glue(name):
            raise ValueError(f"names starting with '#' are reserved for glue tokens; {name!r} is not one")
        return name
    return check_label(name)


def min_rotation(items: tuple[str, ...]) -> tuple[str, ...]:
    """The lexicographically smallest rotation of ``items``."""
    if len(items) < 2:
        return items
    return min(items[i:] + items[:i] for i in range(len(items)))


@dataclass(frozen=True, init=False)
class Renaming:
    """A bijection between two finite label sets, given by its graph."""

    pairs: tuple[tuple[str, str], ...]

    def __init__(self, mapping: Mapping[str, str] | Iterable[tuple[str, str]]) -> None:
        items = mapping.items() if isinstance(mapping, Mapping) else list(mapping)
        pairs = tuple(sorted((src, dst) for src, dst in items))
        sources = [s for s, _ in pairs]
        targets = [t for _, t in pairs]
        for name in sources:
            check_item(name)
        for name in targets:
            check_item(name)
        if len(set(sources)) != len(sources):
            raise ValueError("renaming maps some label twice")
        if len(set(targets)) != len(targets):
            raise ValueError("renaming is not injective")
        object.__setattr__(self, "pairs", pairs)
        object.__setattr__(self, "_map", dict(pairs))

    @classmethod
    def identity(cls, labels: Iterable[str]) -> "Renaming":
        return cls({l: l for l in labels})

    @property
    def domain(self) -> frozenset[str]:
        return frozenset(self._map)

    @property
    def codomain(self) -> frozenset[str]:
        return frozenset(self._map.values())

    def __call__(self, label: str) -> str:
        try:
            return self._map[label]
        except KeyError:
            raise ValueError(f"label {label!r} is outside the renaming domain") from None

    def after(self, first: "Renaming") -> "Renaming":
        """The composite 'apply ``first``, then self'."""
        if not first.codomain <= self.domain:
            raise ValueError("renamings do not compose: codomain exceeds domain")
        return Renaming({src: self(dst) for src, dst in first.pairs})

    def union(self, other: "Renaming") -> "Renaming":
        if self.domain & other.domain:
            raise ValueError("renaming domains overlap")
        return Renaming(self.pairs + other.pairs)

    def restrict(self, labels: Iterable[str]) -> "Renaming":
        keep = frozenset(labels)
        if not keep <= self.domain:
            raise ValueError("cannot restrict a renaming beyond its domain")
        return Renaming({s: t for s, t in self.pairs if s in keep})

    def inverse(self) -> "Renaming":
        return Renaming({t: s for s, t in self.pairs})

    def __str__(self) -> str:
        return "{" + ", ".join(f"{s}->{t}" for s, t in self.pairs) + "}"


@dataclass(frozen=True, init=False)
class CyclicWord:
    """A cyclic sequence of distinct items, stored in canonical rotation."""

    items: tuple[str, ...]

    def __init__(self, items: Iterable[str] = ()) -> None:
        seq = tuple(items)
        for item in seq:
            check_item(item)
        if len(set(seq)) != len(seq):
            raise ValueError(f"cyclic word has a repeated label: {seq!r}")
        object.__setattr__(self, "items", min_rotation(seq))

    @property
    def labels(self) -> frozenset[str]:
        return frozenset(self.items)

    def __len__(self) -> int:
        return len(self.items)

    def __iter__(self) -> Iterator[str]:
        return iter(self.items)

    def __contains__(self, label: str) -> bool:
        return label in self.items

    def rotated_to(self, label: str) -> tuple[str, ...]:
        """The rotation of the word that starts at ``label``."""
        try:
            i = self.items.index(label)
        except ValueError:
            raise ValueError(f"label {label!r} does not occur in {self}") from None
        return self.items[i:] + self.items[:i]

    def rotations(self) -> Iterator[tuple[str, ...]]:
        if not self.items:
            yield ()
            return
        for i in range(len(self.items)):
            yield self.items[i:] + self.items[:i]

    def rename(self, renaming: Renaming) -> "CyclicWord":
        return CyclicWord(renaming(item) for item in self.items)

    def __str__(self) -> str:
        inner = " ".join(self.items)
        return f"( {inner} )" if inner else "( )"

    @classmethod
    def parse(cls, text: str) -> "CyclicWord":
        ts = TokenStream(text)
        items = parse_word_items(ts, allow_glue=False)
        ts.expect_end()
        seen: set[str] = set()
        for tok in ts.tokens:
            if tok.kind == "name" and tok.text in seen:
                ts.error(f"label {tok.text!r} occurs twice in the word", tok)
            seen.add(tok.text)
        return cls(items)


def parse_word_items(ts: TokenStream, allow_glue: bool) -> tuple[str, ...]:
    """Parse a parenthesized item list ``( item* )`` from the stream."""
    ts.expect("(")
    items: list[str] = []
    while True:
        tok = ts.peek()
        if tok.kind == ")":
            ts.advance()
            return tuple(items)
        if tok.kind == "name":
            items.append(tok.text)
            ts.advance()
        elif tok.kind == "glue":
            if not allow_glue:
                ts.error("glue tokens are not allowed in this context", tok)
            items.append(tok.text)
            ts.advance()
        else:
            ts.error("expected a label or ')'", tok)


__all__ = [
    "RESERVED_CHARS",
    "ParseError",
    "Renaming",
    "CyclicWord",
    "check_label",
    "check_item",
    "is_glue",
    "glue",
    "glue_id",
    "min_rotation",
    "parse_word_items",
]
