"""Standard irreducible finite and affine Coxeter graphs."""

from __future__ import annotations

import re
from dataclasses import dataclass

from .graph import INF, CoxeterGraph, GraphError

_LETTERS = "rstuvwxyzabcdefghijklmnopq"


class InvalidRank(GraphError):
    pass


class UnknownFamily(GraphError):
    pass


# minimum rank, maximum rank (None = unbounded)
RANKS = {
    "A": (1, None),
    "B": (2, None),
    "D": (4, None),
    "E": (6, 8),
    "F": (4, 4),
    "H": (3, 4),
    "I2": (3, None),
    "~A": (1, None),
    "~B": (3, None),
    "~C": (2, None),
    "~D": (4, None),
    "~E": (6, 8),
    "~F": (4, 4),
    "~G": (2, 2),
}


@dataclass(frozen=True)
class FamilyName:
    family: str
    rank: int  # for I2 this is the bond label

    def __post_init__(self):
        if self.family not in RANKS:
            raise UnknownFamily(f"unknown family {self.family!r}")
        lo, hi = RANKS[self.family]
        if self.rank < lo or (hi is not None and self.rank > hi):
            allowed = f"{lo}..{hi}" if hi is not None else f">= {lo}"
            raise InvalidRank(f"{self.family} needs rank {allowed}, got {self.rank}")

    def __str__(self):
        if self.family == "I2":
            return f"I2:{self.rank}"
        return f"{self.family}{self.rank}"

    @property
    def affine(self) -> bool:
        return self.family.startswith("~")


_NAME_RE = re.compile(r"^(~?)([A-Z])(\d+)$")


def parse_family(text: str) -> FamilyName:
    """Parse ``B4``, ``~B3``, ``E8``, ``I2:7`` and friends."""
    text = text.strip().upper()
    if text.startswith("I2:"):
        digits = text[3:]
        if not digits.isdigit():
            raise UnknownFamily(f"bad dihedral name {text!r}; write I2:<m>")
        return FamilyName("I2", int(digits))
    match = _NAME_RE.match(text)
    if not match:
        raise UnknownFamily(f"cannot parse family name {text!r}")
    tilde, letter, digits = match.groups()
    family = tilde + letter
    if family == "C":
        raise UnknownFamily(f"C{digits} has the same Coxeter graph as B{digits}; use B{digits}")
    if family == "G":
        raise UnknownFamily("G2 is the dihedral graph I2:6")
    return FamilyName(family, int(digits))


def vertex_names(n: int) -> tuple:
    if n <= len(_LETTERS):
        return tuple(_LETTERS[:n])
    return tuple(f"r{i}" for i in range(1, n + 1))


def _from_edges(n: int, edges) -> CoxeterGraph:
    names = vertex_names(n)
    return CoxeterGraph.build(names, [(names[i], names[j], lab) for i, j, lab in edges])


def _path(labels, offset=0):
    return [(offset + k, offset + k + 1, lab) for k, lab in enumerate(labels)]


def _star(arms):
    """Centre vertex 0 with arms of the given lengths, all labels 3."""
    edges = []
    nxt = 1
    for length in arms:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt, 3))
            prev = nxt
            nxt += 1
    return nxt, edges


def standard_graph(f: FamilyName) -> CoxeterGraph:
    fam, n = f.family, f.rank
    if fam == "A":
        return _from_edges(n, _path([3] * (n - 1)))
    if fam == "B":
        return _from_edges(n, _path([3] * (n - 2) + [4]))
    if fam == "D":
        # path 0..n-2, extra leaf n-1 on vertex n-3
        return _from_edges(n, _path([3] * (n - 2)) + [(n - 3, n - 1, 3)])
    if fam == "E":
        size, edges = _star((n - 4, 2, 1))
        return _from_edges(size, edges)
    if fam == "F":
        return _from_edges(4, _path([3, 4, 3]))
    if fam == "H":
        return _from_edges(n, _path([5] + [3] * (n - 2)))
    if fam == "I2":
        return _from_edges(2, [(0, 1, n)])
    if fam == "~A":
        if n == 1:
            return _from_edges(2, [(0, 1, INF)])
        return _from_edges(n + 1, _path([3] * n) + [(0, n, 3)])
    if fam == "~B":
        # fork leaves 0, 1 on vertex 2; path 2..n ends in a 4-bond
        return _from_edges(n + 1, [(0, 2, 3), (1, 2, 3)] + _path([3] * (n - 3) + [4], offset=2))
    if fam == "~C":
        return _from_edges(n + 1, _path([4] + [3] * (n - 2) + [4]))
    if fam == "~D":
        # spine 0..n-4, two leaves hanging off each end of it
        spine = n - 3
        edges = _path([3] * (spine - 1))
        edges += [(0, spine, 3), (0, spine + 1, 3), (spine - 1, spine + 2, 3), (spine - 1, spine + 3, 3)]
        return _from_edges(n + 1, edges)
    if fam == "~E":
        arms = {6: (2, 2, 2), 7: (3, 3, 1), 8: (5, 2, 1)}[n]
        size, edges = _star(arms)
        return _from_edges(size, edges)
    if fam == "~F":
        return _from_edges(5, _path([3, 3, 4, 3]))
    if fam == "~G":
        return _from_edges(3, _path([6, 3]))
    raise UnknownFamily(fam)


def family_graph(text: str) -> CoxeterGraph:
    return standard_graph(parse_family(text))


def table_families(max_rank: int = 8) -> list:
    """Every row of the standard finite/affine table, parametric families
    instantiated for ranks up to ``max_rank``."""
    rows = []
    for fam in ("A", "B", "D", "E", "F", "H", "I2", "~A", "~B", "~C", "~D", "~E", "~F", "~G"):
        lo, hi = RANKS[fam]
        if fam == "I2":
            lo = 6  # smaller labels duplicate A2, B2, H2
        top = max_rank if hi is None else min(hi, max_rank)
        rows.extend(FamilyName(fam, k) for k in range(lo, top + 1))
    return rows
