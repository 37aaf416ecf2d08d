"""Brute-force side of the house.

An element has a unique reduced expression exactly when one (hence every)
word for it is square-free and contains no full alternating block
``[rs]^m(r,s)`` for finite ``m``; for commuting pairs that block is just
``rs`` or ``sr``. Those words form a prefix-closed regular language. We
build its suffix automaton, count accepted words by dynamic programming on
the state graph, and look for cycles to detect an infinite language.

Nothing here uses the closed forms in :mod:`counting`.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from graphlib import CycleError, TopologicalSorter
from typing import Optional

from .counting import Infinite, UCount
from .graph import (
    INF,
    ContainsCycle,
    CoxeterGraph,
    GraphError,
    InfiniteBond,
    InfiniteType,
    MultipleHighEdges,
    classify_component,
    find_chain,
)


class CountOverflow(ArithmeticError):
    """Raised when a count exceeds the caller's ``max_count``."""


class WouldNotTerminate(ValueError):
    pass


class NotInfinite(ValueError):
    pass


# ---------------------------------------------------------------------------
# Suffix states
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Start:
    pass


@dataclass(frozen=True)
class FirstLetter:
    last: int


@dataclass(frozen=True)
class Run:
    """Maximal alternating suffix over ``pair`` of length ``length``, ending in ``last``."""
    pair: tuple
    last: int
    length: int


def step(g: CoxeterGraph, state, c: int):
    """Successor of ``state`` on letter ``c``, or None if the word is rejected."""
    if isinstance(state, Start):
        return FirstLetter(c)
    t = state.last
    if c == t:
        return None
    if isinstance(state, Run) and c in state.pair:
        m = g.m(*state.pair)
        if m != INF and state.length + 1 >= m:
            return None
        sat = 2 if m == INF else m - 1
        return Run(state.pair, c, min(state.length + 1, sat))
    if g.m(t, c) == 2:
        return None
    return Run((t, c) if t < c else (c, t), c, 2)


@dataclass(frozen=True)
class Automaton:
    """Deterministic, every state accepting; ``transitions[q]`` maps a
    letter to the successor id, with missing letters rejected."""

    states: tuple
    transitions: tuple
    start: int = 0

    def __len__(self):
        return len(self.states)

    def run(self, word) -> Optional[int]:
        q = self.start
        for c in word:
            q = self.transitions[q].get(c)
            if q is None:
                return None
        return q

    def accepts(self, word) -> bool:
        return self.run(word) is not None

    def successor_map(self) -> dict:
        return {q: set(tr.values()) for q, tr in enumerate(self.transitions)}

    def has_cycle(self) -> bool:
        try:
            tuple(TopologicalSorter(self.successor_map()).static_order())
        except CycleError:
            return True
        return False


def build_automaton(g: CoxeterGraph) -> Automaton:
    start = Start()
    ids = {start: 0}
    states = [start]
    transitions = []
    queue = deque([start])
    while queue:
        state = queue.popleft()
        row = {}
        for c in range(g.n):
            nxt = step(g, state, c)
            if nxt is None:
                continue
            if nxt not in ids:
                ids[nxt] = len(states)
                states.append(nxt)
                queue.append(nxt)
            row[c] = ids[nxt]
        transitions.append(row)
    return Automaton(tuple(states), tuple(transitions))


# ---------------------------------------------------------------------------
# Counting
# ---------------------------------------------------------------------------

def count_paths(aut: Automaton) -> UCount:
    """Number of paths from the start state (the empty path included)."""
    try:
        order = tuple(TopologicalSorter(aut.successor_map()).static_order())
    except CycleError:
        return Infinite()
    # static_order yields every successor before its predecessors
    paths_from = [0] * len(aut)
    for q in order:
        paths_from[q] = 1 + sum(paths_from[r] for r in aut.transitions[q].values())
    return paths_from[aut.start]


def oracle_count(g: CoxeterGraph, max_count: Optional[int] = None) -> UCount:
    u = count_paths(build_automaton(g))
    if isinstance(u, Infinite):
        return Infinite()
    if max_count is not None and u > max_count:
        raise CountOverflow(f"count {u} exceeds limit {max_count}")
    return u


def length_census(aut: Automaton, max_length: int) -> list:
    """``census[k]`` is the number of accepted words of length ``k``."""
    weights = {aut.start: 1}
    census = []
    for _ in range(max_length + 1):
        census.append(sum(weights.values()))
        nxt = {}
        for q, w in weights.items():
            for r in aut.transitions[q].values():
                nxt[r] = nxt.get(r, 0) + w
        weights = nxt
    return census


def enumerate_unique_words(g: CoxeterGraph, max_length: Optional[int] = None) -> list:
    """Accepted words in length-then-lexicographic order (by generator index)."""
    aut = build_automaton(g)
    if max_length is None and aut.has_cycle():
        raise WouldNotTerminate("infinitely many words; pass max_length")
    words = []
    level = [((), aut.start)]
    length = 0
    while level:
        words.extend(w for w, _ in level)
        if max_length is not None and length >= max_length:
            break
        level = [
            (w + (c,), r)
            for w, q in level
            for c, r in sorted(aut.transitions[q].items())
        ]
        length += 1
    return words


# ---------------------------------------------------------------------------
# Direct recognizer
# ---------------------------------------------------------------------------

def is_unique_reduced_word(word, g: CoxeterGraph) -> bool:
    """Scan for a factor ``ss``, a commuting pair, or a full alternating block."""
    run = 0
    for k, c in enumerate(word):
        if k == 0:
            run = 1
            continue
        prev = word[k - 1]
        if c == prev:
            return False
        m = g.m(prev, c)
        if m == 2:
            return False
        run = run + 1 if k >= 2 and word[k - 2] == c else 2
        if m != INF and run >= m:
            return False
    return True


# ---------------------------------------------------------------------------
# Infinite families
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class WitnessPattern:
    """Every power of ``base`` is a reduced word with no braid move available."""
    base: tuple

    def power(self, k: int) -> tuple:
        return self.base * k


def infinite_witness(g: CoxeterGraph, check_up_to: int = 5) -> WitnessPattern:
    cls = classify_component(g)
    if not isinstance(cls, InfiniteType):
        raise NotInfinite("graph has finitely many elements with a unique reduced word")
    reason = cls.reason
    if isinstance(reason, InfiniteBond):
        base = tuple(g.index(v) for v in reason.pair)
    elif isinstance(reason, ContainsCycle):
        base = tuple(g.index(v) for v in reason.cycle)
    elif isinstance(reason, MultipleHighEdges):
        base = _high_edge_witness(g, reason.pairs)
    else:
        raise TypeError(f"unknown reason {reason!r}")
    pattern = WitnessPattern(base)
    for k in range(1, check_up_to + 1):
        if not is_unique_reduced_word(pattern.power(k), g):
            raise GraphError(f"witness {g.render(base)} fails at power {k}")
    return pattern


def _high_edge_witness(g: CoxeterGraph, pairs) -> tuple:
    # the closest two high bonds leave only label-3 bonds on the chain between them
    edges = [tuple(g.index(v) for v in p) for p in pairs]
    best = None
    for x in range(len(edges)):
        for y in range(x + 1, len(edges)):
            chain = _chain_through(g, edges[x], edges[y])
            if best is None or len(chain) < len(best):
                best = chain
    chain = best
    if g.m(chain[0], chain[1]) < g.m(chain[-2], chain[-1]):
        chain = chain[::-1]
    if len(chain) == 3:
        r, s, t = chain
        return (s, r, s, t)
    return tuple(chain) + tuple(reversed(chain[1:-1]))


def _chain_through(g: CoxeterGraph, e1, e2) -> tuple:
    """Chain in a tree that starts with bond ``e1`` and ends with bond ``e2``."""
    inner = min(
        (find_chain(g, x, y) for x in e1 for y in e2),
        key=len,
    )
    first = e1[0] if inner[0] == e1[1] else e1[1]
    last = e2[0] if inner[-1] == e2[1] else e2[1]
    return (first,) + inner + (last,)
