"""Shared test helpers, including brute-force oracles kept independent of
the library's own search code."""

from __future__ import annotations

import random

from paleyfq.graphs import GenericGraph, generic_graph


def exhaustive_mis_size(rows: list[int], n: int) -> int:
    """Maximum independent set size by enumerating all vertex subsets."""
    best = 0
    for mask in range(1 << n):
        if mask.bit_count() <= best:
            continue
        m = mask
        ok = True
        while m:
            v = (m & -m).bit_length() - 1
            if rows[v] & mask:
                ok = False
                break
            m &= m - 1
        if ok:
            best = mask.bit_count()
    return best


def random_graph(rng: random.Random, n: int, p: float) -> GenericGraph:
    rows = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return generic_graph(n, rows)


def random_directed_graph(rng: random.Random, n: int, p: float) -> GenericGraph:
    rows = [0] * n
    for i in range(n):
        for j in range(n):
            if i != j and rng.random() < p:
                rows[i] |= 1 << j
    return generic_graph(n, rows)
