"""Source-matched path pairs, their equivalence, and canonical representatives.

A pair (lam, mu) of nonzero-degree paths with a common source is *reduced*
(member of the set A) when no nonzero all-ones path can be split off the
bottom of both components at once; equivalently, when the bottom level
entry of one component differs from 1 or the component degrees have
pointwise minimum zero.

Appending a common all-ones path to both components generates an
equivalence on A whose classes are cut out by the two ranges and the two
level vectors; that 4-tuple is the ClassKey.  The members of a class differ
only in the shared source vertex, which ranges over the finitely many
lattice points s <= r(lam) meet r(mu) with the coordinate sum forced by the
key.  One member per class is chosen as the canonical representative: the
one with the lexicographically greatest source.  Any other choice would
work equally well; determinism is all that matters downstream.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .kgraph import Coords, Path, meet, norm

PathPair = tuple[Path, Path]


class PairError(ValueError):
    """Pair outside the domain required by an operation."""


class UnrealizableKeyError(ValueError):
    """Class key with no valid member pair."""


@dataclass(frozen=True, slots=True)
class ClassKey:
    """Invariant of an equivalence class: component ranges and level vectors."""

    left_range: Coords
    right_range: Coords
    left_levels: Coords
    right_levels: Coords

    @property
    def source_sum(self) -> int:
        """Coordinate sum of any member's common source."""
        return norm(self.left_range) - len(self.left_levels)


def check_pair(lam: Path, mu: Path) -> None:
    """Validate membership in the ambient pair set (nonzero, same source)."""
    if lam.is_vertex or mu.is_vertex:
        raise PairError("pair components must have nonzero degree")
    if lam.source != mu.source:
        raise PairError(
            f"pair components must share a source, got {lam.source} "
            f"and {mu.source}")


def in_A(lam: Path, mu: Path) -> bool:
    """True iff the pair has no common trailing all-ones factor."""
    check_pair(lam, mu)
    return (lam.levels[-1] != 1 or mu.levels[-1] != 1
            or all(x == 0 for x in meet(lam.degree, mu.degree)))


def class_key(lam: Path, mu: Path) -> ClassKey:
    if not in_A(lam, mu):
        raise PairError("pair is not reduced (not in A)")
    return ClassKey(lam.range, mu.range, lam.levels, mu.levels)


def _key_shape(key: ClassKey) -> tuple[Coords, int]:
    """(meet of ranges, deficit) for the source candidates of a key."""
    if not key.left_levels or not key.right_levels:
        raise UnrealizableKeyError("level vectors must be nonempty")
    t = key.source_sum
    if norm(key.right_range) - len(key.right_levels) != t:
        raise UnrealizableKeyError("inconsistent source coordinate sums")
    c = meet(key.left_range, key.right_range)
    deficit = norm(c) - t
    if deficit < 0:
        raise UnrealizableKeyError(
            f"no source vertex: need |s| = {t} below {c}")
    if deficit > 0 and key.left_levels[-1] == 1 and key.right_levels[-1] == 1:
        # every candidate pair would carry a common trailing all-ones factor
        raise UnrealizableKeyError("all members of this key are non-reduced")
    return c, deficit


def rep_source(key: ClassKey) -> Coords:
    """Lexicographically greatest source: push the whole deficit onto the
    last coordinate."""
    c, deficit = _key_shape(key)
    return c[:-1] + (c[-1] - deficit,)


def member_sources(key: ClassKey) -> list[Coords]:
    """All valid member sources, lexicographically descending (first = rep)."""
    c, deficit = _key_shape(key)
    k = len(c)
    drops = [t for t in product(range(deficit + 1), repeat=k)
             if sum(t) == deficit]
    sources = [tuple(ci - ti for ci, ti in zip(c, t)) for t in drops]
    sources.sort(reverse=True)
    return sources


def pair_for_source(key: ClassKey, source: Coords) -> PathPair:
    return (Path(key.left_range, source, key.left_levels),
            Path(key.right_range, source, key.right_levels))


def representative(key: ClassKey) -> PathPair:
    """The canonical member of the class with the given key."""
    return pair_for_source(key, rep_source(key))


def in_R(lam: Path, mu: Path) -> bool:
    """True iff the pair is the canonical representative of its class."""
    if not in_A(lam, mu):
        raise PairError("pair is not reduced (not in A)")
    return lam.source == rep_source(
        ClassKey(lam.range, mu.range, lam.levels, mu.levels))


def equivalent(a: PathPair, b: PathPair) -> bool:
    """Class equality of two reduced pairs."""
    return class_key(*a) == class_key(*b)
