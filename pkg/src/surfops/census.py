"""Exhaustive and randomized generators for surfaces, words, and diagrams.

Exhaustive streams are emitted in a documented deterministic order: surfaces
ordered by (genus, canonical text), matchings ordered by their arc lists.
The genus table tabulates, for all perfect matchings on 2n points around a
circle, the genus of the evaluated surface.
"""

from __future__ import annotations

import random
from collections import Counter
from itertools import permutations
from typing import Iterable, Iterator, Sequence

from .diagram import ChordDiagram, evaluate
from .surface import Surface
from .words import CyclicWord, check_label, glue


def cycle_decompositions(labels: Sequence[str]) -> Iterator[tuple[tuple[str, ...], ...]]:
    """All ways to arrange ``labels`` into disjoint nonempty cyclic orders.

    Arrangements correspond to permutations of the label set (orbit walks
    give the cycles), so each arrangement appears exactly once.
    """
    base = sorted(labels)
    for image in permutations(base):
        follower = dict(zip(base, image))
        seen: set[str] = set()
        cycles: list[tuple[str, ...]] = []
        for start in base:
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            nxt = follower[start]
            while nxt != start:
                cycle.append(nxt)
                seen.add(nxt)
                nxt = follower[nxt]
            cycles.append(tuple(cycle))
        yield tuple(cycles)


def enumerate_surfaces(labels: Iterable[str], max_g: int) -> list[Surface]:
    """All surfaces over exactly this label set with genus at most ``max_g``.

    The empty label set contributes the single-empty-cycle family; extra
    empty cycles are never generated here.
    """
    names = sorted(set(labels))
    for name in names:
        check_label(name)
    if max_g < 0:
        raise ValueError("max_g must be nonnegative")
    out: list[Surface] = []
    if not names:
        out = [Surface([()], g) for g in range(max_g + 1)]
    else:
        for cycles in cycle_decompositions(names):
            for g in range(max_g + 1):
                out.append(Surface(cycles, g))
    out.sort(key=lambda s: (s.genus, str(s)))
    return out


def enumerate_cyclic_words(labels: Iterable[str]) -> list[CyclicWord]:
    """All cyclic words over exactly this label set."""
    names = sorted(set(labels))
    for name in names:
        check_label(name)
    if not names:
        return [CyclicWord()]
    first, rest = names[0], names[1:]
    return sorted(
        (CyclicWord((first, *tail)) for tail in permutations(rest)),
        key=lambda w: w.items,
    )


def _pairings(points: tuple[int, ...]) -> Iterator[list[tuple[int, int]]]:
    if not points:
        yield []
        return
    first = points[0]
    for i in range(1, len(points)):
        rest = points[1:i] + points[i + 1 :]
        for sub in _pairings(rest):
            yield [(first, points[i])] + sub


def enumerate_matchings(n: int) -> list[ChordDiagram]:
    """All (2n-1)!! diagrams with base (#1 .. #2n) and a perfect matching."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    diagrams = [
        ChordDiagram([glue(k) for k in range(1, 2 * n + 1)], [(glue(i), glue(j)) for i, j in pairing])
        for pairing in _pairings(tuple(range(1, 2 * n + 1)))
    ]
    diagrams.sort(key=lambda d: d.arcs)
    return diagrams


def genus_distribution(n: int) -> dict[int, int]:
    """Counts of evaluated genus over all perfect matchings on 2n points."""
    counts = Counter(evaluate(d).genus for d in enumerate_matchings(n))
    return {g: counts[g] for g in sorted(counts)}


def distribution_rows(dist: dict[int, int]) -> str:
    lines = [f"g={g}: {count}" for g, count in sorted(dist.items())]
    lines.append(f"total: {sum(dist.values())}")
    return "\n".join(lines)


def random_surface(
    rng: random.Random,
    labels: Sequence[str],
    max_g: int,
    max_extra_empty: int = 0,
) -> Surface:
    """A random surface on exactly ``labels`` plus up to ``max_extra_empty`` empty cycles."""
    pool = list(labels)
    rng.shuffle(pool)
    cycles: list[tuple[str, ...]] = []
    while pool:
        size = rng.randint(1, len(pool))
        cycles.append(tuple(pool[:size]))
        pool = pool[size:]
    for _ in range(rng.randint(0, max_extra_empty)):
        cycles.append(())
    if not cycles:
        cycles.append(())
    return Surface(cycles, rng.randint(0, max_g))


def random_diagram(
    rng: random.Random,
    max_labels: int = 6,
    max_arcs: int = 6,
    ensure_handle: bool = False,
    label_pool: Sequence[str] = ("a", "b", "c", "d", "e", "f", "g", "h"),
) -> ChordDiagram:
    """A random diagram; with ``ensure_handle`` it contains a handle block."""
    n_labels = rng.randint(0, max_labels)
    labels = rng.sample(list(label_pool), n_labels)
    lo = 2 if ensure_handle else 1
    n_arcs = rng.randint(lo, max(lo, max_arcs))
    tokens = [glue(k) for k in range(1, 2 * n_arcs + 1)]
    rng.shuffle(tokens)
    arcs: list[tuple[str, str]] = []
    if ensure_handle:
        block = tokens[:4]
        rest = tokens[4:]
        arcs += [(block[0], block[2]), (block[1], block[3])]
        arcs += [(rest[i], rest[i + 1]) for i in range(0, len(rest), 2)]
        base = labels + rest
        rng.shuffle(base)
        at = rng.randint(0, len(base))
        base[at:at] = block
    else:
        arcs += [(tokens[i], tokens[i + 1]) for i in range(0, len(tokens), 2)]
        base = labels + tokens
        rng.shuffle(base)
    return ChordDiagram(base, arcs)


__all__ = [
    "cycle_decompositions",
    "enumerate_surfaces",
    "enumerate_cyclic_words",
    "enumerate_matchings",
    "genus_distribution",
    "distribution_rows",
    "random_surface",
    "random_diagram",
]
