"""Fibonacci-run graphs.

The vertices of ``R_n`` are the run-constrained strings of length ``n + 2``
(every run of ones is immediately followed by a strictly longer run of
zeros).  These are exactly the mirror images of the 1-decreasing words of
length ``n + 2`` that start with ``0``, so the 1-Gray code ``Z_{n+2}`` read
right to left is a Hamiltonian path.  Trailing ``00`` is kept on every
label unless ``drop_suffix`` is requested.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import groupby
from typing import FrozenSet, List, Optional, Tuple

from .generation import DEFAULT_NODE_BUDGET, WordList, gray1_Z, lex_list, search_hamiltonian
from .words import BinaryWord, hamming

__all__ = [
    "RunGraph",
    "is_run_constrained",
    "build_run_graph",
    "hamiltonian_path",
    "is_hamiltonian_cycle",
    "search_cycle",
    "export_dot",
]

Edge = Tuple[BinaryWord, BinaryWord]


def is_run_constrained(w: BinaryWord) -> bool:
    runs = [(s, sum(1 for _ in g)) for s, g in groupby(str(w))]
    for i, (symbol, size) in enumerate(runs):
        if symbol == "1":
            if i + 1 == len(runs) or runs[i + 1][1] <= size:
                return False
    return True


@dataclass(frozen=True)
class RunGraph:
    n: int
    vertices: FrozenSet[BinaryWord]
    edges: FrozenSet[Edge]

    def sorted_vertices(self) -> List[BinaryWord]:
        return sorted(self.vertices)

    def sorted_edges(self) -> List[Edge]:
        return sorted(self.edges, key=lambda e: (e[0].bits, e[1].bits))

    def neighbors(self, w: BinaryWord) -> List[BinaryWord]:
        return sorted(x for x in (w.flip(i) for i in range(w.length)) if x in self.vertices)


def build_run_graph(n: int) -> RunGraph:
    """The induced hypercube subgraph on run-constrained strings of length ``n + 2``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    length = n + 2
    top = 1 << (length - 1)
    vertices = frozenset(w.reversed() for w in lex_list(length, 1) if not w.bits & top)
    edges = set()
    for w in vertices:
        for i in range(length):
            x = w.flip(i)
            if x in vertices and w.bits < x.bits:
                edges.add((w, x))
    return RunGraph(n, vertices, frozenset(edges))


def hamiltonian_path(n: int) -> WordList:
    """Hamiltonian path of ``R_n``: the words of ``Z_{n+2}`` mirrored, in list order."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return gray1_Z(n + 2).reversed_words()


def is_hamiltonian_cycle(path: WordList) -> bool:
    """True iff the listing closes up, i.e. its last word is adjacent to its first."""
    if not len(path):
        raise ValueError("path must be nonempty")
    return len(path) >= 3 and hamming(path.first(), path.last()) == 1


def search_cycle(n: int, budget: int = DEFAULT_NODE_BUDGET) -> Optional[WordList]:
    """Backtracking search for a Hamiltonian cycle in ``R_n`` (tiny ``n`` only)."""
    g = build_run_graph(n)
    found = search_hamiltonian(g.sorted_vertices(), budget=budget, cycle=True)
    return None if found is None else WordList(found, length=n + 2)


def _label(w: BinaryWord, drop_suffix: bool) -> str:
    text = str(w)
    return text[:-2] if drop_suffix else text


def export_dot(g: RunGraph, path: Optional[WordList] = None, drop_suffix: bool = False) -> str:
    """Render ``g`` as deterministic DOT text.

    Path edges are drawn solid and coloured, with ``dir`` pointing along the
    path; the remaining edges are dashed.  Without a path every edge is plain.
    """
    steps = {}
    if path is not None:
        words = list(path)
        missing = [w for w in words if w not in g.vertices]
        if missing:
            raise ValueError(f"path word {missing[0]} is not a vertex of R_{g.n}")
        for a, b in zip(words, words[1:]):
            key = (a, b) if a.bits < b.bits else (b, a)
            if key not in g.edges:
                raise ValueError(f"path step {a} -> {b} is not an edge of R_{g.n}")
            steps[key] = "forward" if key[0] == a else "back"
    lines = [f"graph R_{g.n} {{", "  node [shape=circle, fontname=monospace];"]
    for v in g.sorted_vertices():
        lines.append(f'  "{v}" [label="{_label(v, drop_suffix)}"];')
    for u, v in g.sorted_edges():
        if path is None:
            attrs = ""
        elif (u, v) in steps:
            attrs = f' [color=red, penwidth=2, dir={steps[(u, v)]}]'
        else:
            attrs = " [style=dashed]"
        lines.append(f'  "{u}" -- "{v}"{attrs};')
    lines.append("}")
    return "\n".join(lines) + "\n"
