"""Independent combinatorial oracles used to cross-check the package.

The genus oracle never touches the package's gluing rules: it computes
boundary components of a one-vertex ribbon graph by tracing faces of the
rotation system.  Points 1..2n sit on a circle; the matching is the band
attachment; the face permutation is "step around the circle after jumping
through the band".
"""

from __future__ import annotations

from math import comb


def faces_of_matching(n: int, pairs: list[tuple[int, int]]) -> int:
    """Number of cycles of sigma∘alpha on points 1..2n."""
    alpha: dict[int, int] = {}
    for i, j in pairs:
        alpha[i] = j
        alpha[j] = i
    assert len(alpha) == 2 * n

    def phi(p: int) -> int:
        return alpha[p] % (2 * n) + 1

    seen: set[int] = set()
    cycles = 0
    for start in range(1, 2 * n + 1):
        if start in seen:
            continue
        cycles += 1
        p = start
        while p not in seen:
            seen.add(p)
            p = phi(p)
    return cycles


def genus_boundary_of_matching(n: int, pairs: list[tuple[int, int]]) -> tuple[int, int]:
    """(genus, boundary count) of the disc with n bands attached per ``pairs``.

    Euler characteristic: 1 - n = 2 - 2g - b with b the face count.
    """
    b = faces_of_matching(n, pairs)
    g2 = n + 1 - b
    assert g2 % 2 == 0 and g2 >= 0
    return g2 // 2, b


def all_pair_partitions(points: list[int]) -> list[list[tuple[int, int]]]:
    if not points:
        return [[]]
    out = []
    rest = points[1:]
    for k in range(len(rest)):
        partner = rest[k]
        remaining = rest[:k] + rest[k + 1 :]
        for tail in all_pair_partitions(remaining):
            out.append([(points[0], partner)] + tail)
    return out


def oracle_distribution(n: int) -> dict[int, int]:
    counts: dict[int, int] = {}
    for pairs in all_pair_partitions(list(range(1, 2 * n + 1))):
        g, _ = genus_boundary_of_matching(n, pairs)
        counts[g] = counts.get(g, 0) + 1
    return dict(sorted(counts.items()))


def double_factorial_odd(n: int) -> int:
    """(2n-1)!! = number of perfect matchings on 2n points."""
    out = 1
    for k in range(1, 2 * n, 2):
        out *= k
    return out


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)
