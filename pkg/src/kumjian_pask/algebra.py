"""The Kumjian-Pask algebra of a standard k-graph as a quotient of the
free algebra: multiplication and star via normalization, basis-word
recognition, and windowed basis enumeration.

The basis consists of the vertices, the nonzero-degree paths, their
ghosts, and the products path * ghost over canonical representative pairs.
Since the vertex set is the whole lattice, every enumeration is restricted
to an explicit window; pair words are enumerated through class keys whose
ranges lie in the window, skipping keys whose representative source falls
outside it, so pair counts are window-relative.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import canonical
from .freealg import Element, Word, letter
from .kgraph import (Coords, KGraphError, StandardKGraph, leq, norm,
                     degrees_upto)
from .rewrite import normalize


@dataclass(frozen=True, slots=True)
class Window:
    """A box [lo, hi] of vertices plus a path-degree bound."""

    lo: Coords
    hi: Coords
    degree_bound: int

    def __post_init__(self) -> None:
        if len(self.lo) != len(self.hi):
            raise KGraphError("window corner dimension mismatch")
        if not leq(self.lo, self.hi):
            raise KGraphError(f"window {self.lo}..{self.hi} is empty")
        if self.degree_bound < 0:
            raise KGraphError("degree bound must be >= 0")

    @property
    def k(self) -> int:
        return len(self.lo)

    def contains(self, v: Coords) -> bool:
        return leq(self.lo, v) and leq(v, self.hi)

    def vertices(self) -> list[Coords]:
        """All lattice points of the box in lexicographic order."""
        return list(itertools.product(*(range(a, b + 1)
                                        for a, b in zip(self.lo, self.hi))))

    def degrees(self, min_norm: int = 1) -> list[Coords]:
        return degrees_upto(self.k, self.degree_bound, min_norm)


def uniform_window(k: int, lo: int, hi: int, degree_bound: int) -> Window:
    return Window((lo,) * k, (hi,) * k, degree_bound)


def kp_mul(graph: StandardKGraph, x: Element, y: Element) -> Element:
    """Product in the quotient: normal form of the free product."""
    return normalize(graph, x * y)


def kp_star(graph: StandardKGraph, x: Element) -> Element:
    """Star in the quotient: normal form of the free-algebra star."""
    return normalize(graph, x.star())


def basis_shape(w: Word) -> str | None:
    """Classify a word as 'vertex', 'path', 'ghost', or 'pair'; None if the
    word is not a basis word."""
    if len(w) == 1:
        x = w[0]
        if x.path.is_vertex:
            return "vertex"
        return "ghost" if x.ghost else "path"
    if len(w) == 2:
        x, y = w
        if (not x.ghost and not x.path.is_vertex and y.ghost
                and x.path.source == y.path.source
                and canonical.in_A(x.path, y.path)
                and canonical.in_R(x.path, y.path)):
            return "pair"
    return None


def is_basis_word(w: Word) -> bool:
    return basis_shape(w) is not None


SHAPES = ("vertex", "path", "ghost", "pair")


def enumerate_basis(graph: StandardKGraph, window: Window,
                    shape: str = "all",
                    range_left: Coords | None = None,
                    range_right: Coords | None = None) -> list[Word]:
    """All basis words with endpoints in the window and degrees within the
    bound, in a deterministic order (vertices, paths, ghosts, pairs).

    range_left filters on the range of the single path (vertex itself for
    vertex words); range_right applies to the ghost component of pair words.
    """
    if window.k != graph.k:
        raise KGraphError("window dimension differs from graph rank")
    if shape != "all" and shape not in SHAPES:
        raise KGraphError(f"unknown shape {shape!r}")
    shapes = SHAPES if shape == "all" else (shape,)
    out: list[Word] = []
    verts = window.vertices()
    if "vertex" in shapes:
        for v in verts:
            if range_left is not None and v != range_left:
                continue
            out.append((letter(graph.vertex(v)),))
    if "path" in shapes or "ghost" in shapes:
        singles: list[Word] = []
        ghosts: list[Word] = []
        for v in verts:
            if range_left is not None and v != range_left:
                continue
            for n in window.degrees():
                for p in graph.paths(v, n):
                    if not window.contains(p.source):
                        continue
                    if "path" in shapes:
                        singles.append((letter(p),))
                    if "ghost" in shapes:
                        ghosts.append((letter(p, ghost=True),))
        if "path" in shapes:
            out.extend(singles)
        if "ghost" in shapes:
            out.extend(ghosts)
    if "pair" in shapes:
        out.extend(_pair_words(graph, window, range_left, range_right))
    return out


def _pair_words(graph: StandardKGraph, window: Window,
                range_left: Coords | None,
                range_right: Coords | None) -> list[Word]:
    levels = range(1, graph.level + 1)
    out: list[Word] = []
    for rl in window.vertices():
        if range_left is not None and rl != range_left:
            continue
        for rr in window.vertices():
            if range_right is not None and rr != range_right:
                continue
            shift = norm(rr) - norm(rl)
            for a in range(1, window.degree_bound + 1):
                b = a + shift
                if not 1 <= b <= window.degree_bound:
                    continue
                for lvl in itertools.product(levels, repeat=a):
                    for lvr in itertools.product(levels, repeat=b):
                        key = canonical.ClassKey(rl, rr, lvl, lvr)
                        try:
                            src = canonical.rep_source(key)
                        except canonical.UnrealizableKeyError:
                            continue
                        if not window.contains(src):
                            continue
                        lam, mu = canonical.pair_for_source(key, src)
                        out.append((letter(lam), letter(mu, ghost=True)))
    return out
