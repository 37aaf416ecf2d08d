"""Closed-form counts of elements with a unique reduced expression.

Values are Python ints, so they are exact at any size; ``Infinite`` stands
for an infinite count and carries the reason that made it so.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .graph import (
    CoxeterGraph,
    INF,
    InfiniteType,
    SimplyLacedTree,
    SingleHighEdgeTree,
    classify_component,
    connected_components,
)


class InvalidArgs(ValueError):
    pass


@dataclass(frozen=True)
class Infinite:
    reason: Optional[object] = None

    def __str__(self):
        return "infinite"


UCount = Union[int, Infinite]


def is_finite(u: UCount) -> bool:
    return not isinstance(u, Infinite)


def chain_count_total(n: int) -> int:
    """Number of chains (simple paths, single vertices included) in a tree of order n."""
    if n < 0:
        raise InvalidArgs("tree order must be >= 0")
    return n * (n + 1) // 2


def chain_count_long(n: int) -> int:
    """Chains with at least two vertices: one per unordered pair of vertices."""
    if n < 0:
        raise InvalidArgs("tree order must be >= 0")
    return n * (n - 1) // 2


def u_simply_laced_tree(n: int) -> int:
    if n < 1:
        raise InvalidArgs("tree order must be >= 1")
    return n * n + 1


def u_single_high_edge(n: int, m: int, a: int, b: int) -> int:
    """Count for a tree whose only label above 3 is ``m``, on the bond that
    splits it into pieces of orders ``a`` and ``b``.

    ``m = 3`` is accepted and falls into the odd branch, where it agrees
    with the simply laced count.
    """
    if m == INF or isinstance(m, bool) or not isinstance(m, int) or m < 3:
        raise InvalidArgs(f"label must be a finite integer >= 3, got {m!r}")
    if a < 1 or b < 1 or a + b != n:
        raise InvalidArgs(f"need a, b >= 1 and a + b = n, got n={n} a={a} b={b}")
    if m % 2 == 0:
        return m * n * n // 2 + 1 - 2 * a * b
    return (m - 1) * n * n // 2 + 1


def u_component(c) -> UCount:
    if isinstance(c, SimplyLacedTree):
        return u_simply_laced_tree(c.n)
    if isinstance(c, SingleHighEdgeTree):
        return u_single_high_edge(c.n, c.m, c.a, c.b)
    if isinstance(c, InfiniteType):
        return Infinite(c.reason)
    raise TypeError(f"not a component class: {c!r}")


def combine(counts) -> UCount:
    """Combine per-component counts; the first infinite one wins."""
    total = 1
    for u in counts:
        if isinstance(u, Infinite):
            return u
        total += u - 1
    return total


def u_graph(g: CoxeterGraph) -> UCount:
    return combine(u_component(classify_component(c)) for c in connected_components(g))


@dataclass(frozen=True)
class FinitenessReport:
    finite: bool
    per_component: tuple  # of (component id, component class)


def finiteness(g: CoxeterGraph) -> FinitenessReport:
    classes = tuple(
        (k, classify_component(c)) for k, c in enumerate(connected_components(g), 1)
    )
    finite = all(not isinstance(c, InfiniteType) for _, c in classes)
    return FinitenessReport(finite, classes)
