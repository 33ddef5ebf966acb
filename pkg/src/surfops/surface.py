"""Surfaces with marked boundary points, and their gluing operations.

A surface is a multiset of boundary cycles (cyclic words, possibly empty)
together with a nonnegative genus.  All labels across all cycles are
pairwise distinct.  The canonical form sorts cycles by (length, content)
with each cycle in its canonical rotation; equality and hashing compare
canonical forms.

The grade of a surface with b cycles and genus g is G = 2g + b - 1.
``compose`` adds grades, ``self_glue`` raises the grade by exactly one.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable

from .lexer import TokenStream
from .words import CyclicWord, Renaming, parse_word_items


@dataclass(frozen=True, init=False)
class Surface:
    cycles: tuple[CyclicWord, ...]
    genus: int

    def __init__(self, cycles: Iterable[CyclicWord | Iterable[str]], genus: int = 0) -> None:
        words = tuple(c if isinstance(c, CyclicWord) else CyclicWord(c) for c in cycles)
        if not words:
            raise ValueError("a surface has at least one boundary cycle")
        if not isinstance(genus, int) or isinstance(genus, bool) or genus < 0:
            raise ValueError(f"genus must be a nonnegative integer, got {genus!r}")
        seen: set[str] = set()
        for w in words:
            for item in w.items:
                if item in seen:
                    raise ValueError(f"label {item!r} occurs in more than one position")
                seen.add(item)
        ordered = tuple(sorted(words, key=lambda w: (len(w.items), w.items)))
        object.__setattr__(self, "cycles", ordered)
        object.__setattr__(self, "genus", genus)

    @property
    def boundary_count(self) -> int:
        return len(self.cycles)

    @property
    def grade(self) -> int:
        return 2 * self.genus + len(self.cycles) - 1

    @property
    def labels(self) -> frozenset[str]:
        return frozenset(item for w in self.cycles for item in w.items)

    def cycle_containing(self, label: str) -> CyclicWord:
        for w in self.cycles:
            if label in w:
                return w
        raise ValueError(f"label {label!r} does not occur in {self}")

    def rename(self, renaming: Renaming) -> "Surface":
        if not self.labels <= renaming.domain:
            missing = sorted(self.labels - renaming.domain)
            raise ValueError(f"renaming does not cover labels {missing}")
        return Surface((w.rename(renaming) for w in self.cycles), self.genus)

    def __str__(self) -> str:
        inner = " ".join(str(w) for w in self.cycles)
        return f"{{ {inner} }}^{self.genus}"

    def to_json(self) -> dict:
        return {"cycles": [list(w.items) for w in self.cycles], "g": self.genus}

    def json(self) -> str:
        return json.dumps(self.to_json())

    @classmethod
    def from_json(cls, data: dict) -> "Surface":
        return cls(data["cycles"], data["g"])

    @classmethod
    def parse(cls, text: str) -> "Surface":
        ts = TokenStream(text)
        ts.expect("{")
        cycles: list[tuple[str, ...]] = []
        seen: set[str] = set()
        while ts.peek().kind == "(":
            start = ts.index
            cycles.append(parse_word_items(ts, allow_glue=False))
            for tok in ts.tokens[start : ts.index]:
                if tok.kind != "name":
                    continue
                if tok.text in seen:
                    ts.error(f"label {tok.text!r} occurs in more than one position", tok)
                seen.add(tok.text)
        ts.expect("}", "'}' or '('")
        ts.expect("^")
        g_tok = ts.expect("name", "a nonnegative integer genus")
        if not g_tok.text.isdigit():
            ts.error("genus must be a nonnegative integer", g_tok)
        ts.expect_end()
        return cls(cycles, int(g_tok.text))


def compose(q1: Surface, a: str, q2: Surface, b: str) -> Surface:
    """Glue two surfaces along marked points a of q1 and b of q2.

    The cycle (a P) of q1 and the cycle (b Q) of q2 are replaced by the
    single spliced cycle (P Q); genus adds.
    """
    if q1.labels & q2.labels:
        shared = sorted(q1.labels & q2.labels)
        raise ValueError(f"surfaces share labels {shared}")
    ca = q1.cycle_containing(a)
    cb = q2.cycle_containing(b)
    spliced = CyclicWord(ca.rotated_to(a)[1:] + cb.rotated_to(b)[1:])
    rest1 = list(q1.cycles)
    rest1.remove(ca)
    rest2 = list(q2.cycles)
    rest2.remove(cb)
    out = Surface(rest1 + rest2 + [spliced], q1.genus + q2.genus)
    assert out.grade == q1.grade + q2.grade
    return out


def self_glue(q: Surface, a: str, b: str) -> Surface:
    """Glue two marked points of the same surface together.

    If a and b lie on one cycle (a A b B), that cycle splits into the two
    cycles (B) and (A) and the genus is unchanged.  If they lie on distinct
    cycles (a A) and (b B), the cycles merge into (B A) and the genus grows
    by one.  Either way the grade rises by exactly one.
    """
    if a == b:
        raise ValueError("self-gluing needs two distinct marked points")
    ca = q.cycle_containing(a)
    rest = list(q.cycles)
    rest.remove(ca)
    if b in ca:
        seq = ca.rotated_to(a)
        j = seq.index(b)
        out = Surface(rest + [CyclicWord(seq[j + 1 :]), CyclicWord(seq[1:j])], q.genus)
    else:
        cb = q.cycle_containing(b)
        rest.remove(cb)
        merged = CyclicWord(cb.rotated_to(b)[1:] + ca.rotated_to(a)[1:])
        out = Surface(rest + [merged], q.genus + 1)
    assert out.grade == q.grade + 1
    return out


__all__ = ["Surface", "compose", "self_glue"]
