"""Independent checkers and random graph builders shared by the tests.

``naive_unique_words`` filters every word up to a length by an explicit
list of forbidden factors. ``reduced_expression_census`` goes through the
group itself: it walks the Cayley graph of the geometric representation
layer by layer and counts reduced expressions per element, which checks
the factor-avoidance characterisation the oracle relies on.
"""

from __future__ import annotations

import itertools
import math
import random

import numpy as np

from coxeter_unique import INF, CoxeterGraph


def alternating(r, s, length):
    return tuple(r if k % 2 == 0 else s for k in range(length))


def forbidden_factors(g: CoxeterGraph) -> set:
    bad = {(s, s) for s in range(g.n)}
    for r in range(g.n):
        for s in range(g.n):
            if r != s and g.m(r, s) != INF:
                bad.add(alternating(r, s, g.m(r, s)))
    return bad


def has_forbidden_factor(word, bad) -> bool:
    lengths = {len(f) for f in bad}
    return any(
        tuple(word[i:i + k]) in bad
        for k in lengths
        for i in range(len(word) - k + 1)
    )


def naive_unique_words(g: CoxeterGraph, max_length: int) -> list:
    bad = forbidden_factors(g)
    out = []
    for length in range(max_length + 1):
        for w in itertools.product(range(g.n), repeat=length):
            if not has_forbidden_factor(w, bad):
                out.append(w)
    return out


def reflection_matrices(g: CoxeterGraph):
    n = g.n
    form = np.zeros((n, n))
    for i in range(n):
        for j in range(n):
            m = g.m(i, j)
            form[i, j] = -1.0 if m == INF else -math.cos(math.pi / m)
    mats = []
    for i in range(n):
        s = np.eye(n)
        s[i, :] -= 2 * form[i, :]
        mats.append(s)
    return mats


def reduced_expression_census(g: CoxeterGraph, max_length: int) -> list:
    """For each length k, the number of group elements of length k that
    have exactly one reduced expression."""
    mats = reflection_matrices(g)

    def key(mat):
        return tuple(np.round(mat, 7).ravel() + 0.0)

    identity = np.eye(g.n)
    seen = {key(identity)}
    layer = {key(identity): (identity, 1)}
    census = [1]
    for _ in range(max_length):
        nxt = {}
        for mat, ways in layer.values():
            for s in mats:
                prod = mat @ s
                k = key(prod)
                if k in seen:
                    continue
                if k in nxt:
                    nxt[k] = (nxt[k][0], nxt[k][1] + ways)
                else:
                    nxt[k] = (prod, ways)
        if not nxt:
            break
        seen.update(nxt)
        census.append(sum(1 for _, ways in nxt.values() if ways == 1))
        layer = nxt
    return census


# ---------------------------------------------------------------------------
# Random graphs
# ---------------------------------------------------------------------------

def random_tree(rng: random.Random, n: int, high_label=None) -> CoxeterGraph:
    """Random labelled tree on n vertices, simply laced unless
    ``high_label`` is given, in which case one random bond carries it."""
    edges = [(rng.randrange(k), k) for k in range(1, n)]
    labels = [3] * len(edges)
    if high_label is not None and edges:
        labels[rng.randrange(len(edges))] = high_label
    names = [f"g{k}" for k in range(n)]
    g = CoxeterGraph.build(names, [(names[i], names[j], lab) for (i, j), lab in zip(edges, labels)])
    order = list(range(n))
    rng.shuffle(order)
    return g.reordered(order)


def random_finite_class_tree(rng: random.Random, max_n: int = 8) -> CoxeterGraph:
    n = rng.randint(1, max_n)
    high = rng.choice([None, 4, 5, 6, 7]) if n >= 2 else None
    return random_tree(rng, n, high)


def mutate_to_infinite(rng: random.Random, g: CoxeterGraph, kind: str):
    """Apply one of the three mutations; None if the tree is too small for it."""
    bonds = g.bond_list()
    if kind == "cycle":
        pairs = [(i, j) for i in range(g.n) for j in range(i + 1, g.n) if g.m(i, j) == 2]
        if g.n < 3 or not pairs:
            return None
        i, j = rng.choice(pairs)
        return g.with_bond(i, j, rng.choice([3, 3, 4, 5, INF]))
    if kind == "inf":
        if not bonds:
            return None
        i, j, _ = rng.choice(bonds)
        return g.with_bond(i, j, INF)
    if kind == "second-high":
        low = [(i, j) for i, j, lab in bonds if lab == 3]
        high = [b for b in bonds if b[2] != 3]
        need = 1 if high else 2
        if len(low) < need:
            return None
        for i, j in rng.sample(low, need):
            g = g.with_bond(i, j, rng.randint(4, 7))
        return g
    raise ValueError(kind)


def relabelled(g: CoxeterGraph, prefix: str) -> CoxeterGraph:
    return CoxeterGraph(tuple(prefix + name for name in g.names), dict(g.bonds))
