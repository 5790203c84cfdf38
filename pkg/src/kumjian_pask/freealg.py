"""Free associative algebra on vertex, path, and ghost-path letters.

Generators are the vertices, the nonzero-degree paths, and a formal ghost
(adjoint) letter for each nonzero-degree path; vertices are self-adjoint.
Words are nonempty tuples of letters and elements are finite sums
coefficient * word over a commutative coefficient ring.  The algebra is
non-unital: there is no empty word, because the vertex set is infinite.

Coefficients are plain Python ints interpreted by a Ring instance, so all
arithmetic is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .kgraph import Path


class RingMismatchError(ValueError):
    """Operands belong to different coefficient rings."""


class Ring:
    """Commutative ring with 1; element values are ints."""

    zero = 0
    one = 1

    def add(self, a: int, b: int) -> int:
        raise NotImplementedError

    def neg(self, a: int) -> int:
        raise NotImplementedError

    def mul(self, a: int, b: int) -> int:
        raise NotImplementedError

    def from_int(self, n: int) -> int:
        raise NotImplementedError

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def coeff_str(self, a: int) -> str:
        return str(a)


class IntegerRing(Ring):
    """The ring of arbitrary-precision integers."""

    name = "int"

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def from_int(self, n):
        return n

    def __eq__(self, other):
        return type(other) is IntegerRing

    def __hash__(self):
        return hash(IntegerRing)

    def __repr__(self):
        return "IntegerRing()"


class ModularRing(Ring):
    """Integers modulo n (n >= 2); values are residues in 0..n-1."""

    def __init__(self, modulus: int):
        if modulus < 2:
            raise ValueError("modulus must be >= 2")
        self.modulus = modulus

    @property
    def name(self) -> str:
        return f"zmod:{self.modulus}"

    def add(self, a, b):
        return (a + b) % self.modulus

    def neg(self, a):
        return (-a) % self.modulus

    def mul(self, a, b):
        return (a * b) % self.modulus

    def from_int(self, n):
        return n % self.modulus

    def __eq__(self, other):
        return type(other) is ModularRing and other.modulus == self.modulus

    def __hash__(self):
        return hash((ModularRing, self.modulus))

    def __repr__(self):
        return f"ModularRing({self.modulus})"


def ring_from_spec(spec: str) -> Ring:
    """Build a ring from a selector string: "int" or "zmod:N"."""
    if spec == "int":
        return IntegerRing()
    if spec.startswith("zmod:"):
        try:
            n = int(spec.split(":", 1)[1])
        except ValueError:
            raise ValueError(f"bad modulus in ring selector {spec!r}") from None
        return ModularRing(n)
    raise ValueError(f"unknown ring selector {spec!r}")


# --------------------------------------------------------------------------
# Letters and words
# --------------------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class Letter:
    """A generator: a path, optionally marked as its ghost.

    Vertices are never ghosts (v* = v); ghost vertices are rejected so that
    letter equality is canonical.
    """

    path: Path
    ghost: bool = False

    def __post_init__(self) -> None:
        if self.ghost and self.path.is_vertex:
            raise ValueError("vertices are self-adjoint; use ghost=False")

    @property
    def is_vertex(self) -> bool:
        return self.path.is_vertex


def letter(path: Path, ghost: bool = False) -> Letter:
    """Letter factory that silently drops the ghost mark on vertices."""
    return Letter(path, ghost and not path.is_vertex)


def star_letter(x: Letter) -> Letter:
    if x.path.is_vertex:
        return x
    return Letter(x.path, not x.ghost)


def letter_key(x: Letter) -> tuple:
    # tag order: vertex < path < ghost
    tag = 0 if x.is_vertex else (2 if x.ghost else 1)
    return (tag, x.path.range, x.path.source, x.path.levels)


Word = tuple[Letter, ...]


def word_star(w: Word) -> Word:
    """Reverse the word and swap path/ghost tags."""
    return tuple(star_letter(x) for x in reversed(w))


def word_key(w: Word) -> tuple:
    """Total order key for words: length first, then letterwise."""
    return (len(w), tuple(letter_key(x) for x in w))


# --------------------------------------------------------------------------
# Elements
# --------------------------------------------------------------------------

class Element:
    """A finite sum of words with nonzero ring coefficients."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: Ring, terms: dict[Word, int] | None = None):
        self.ring = ring
        self.terms: dict[Word, int] = terms if terms is not None else {}

    @classmethod
    def zero(cls, ring: Ring) -> "Element":
        return cls(ring)

    @classmethod
    def from_terms(cls, ring: Ring,
                   items: Iterable[tuple[Word, int]]) -> "Element":
        acc: dict[Word, int] = {}
        for w, c in items:
            if not w:
                raise ValueError("words must be nonempty")
            c = ring.add(acc.get(w, ring.zero), c)
            if c == ring.zero:
                acc.pop(w, None)
            else:
                acc[w] = c
        return cls(ring, acc)

    @classmethod
    def from_word(cls, ring: Ring, w: Word, coeff: int | None = None) -> "Element":
        c = ring.one if coeff is None else coeff
        return cls.from_terms(ring, [(w, c)])

    def _require_ring(self, other: "Element") -> None:
        if self.ring != other.ring:
            raise RingMismatchError(
                f"ring mismatch: {self.ring!r} vs {other.ring!r}")

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: "Element") -> "Element":
        self._require_ring(other)
        acc = dict(self.terms)
        ring = self.ring
        for w, c in other.terms.items():
            s = ring.add(acc.get(w, ring.zero), c)
            if s == ring.zero:
                acc.pop(w, None)
            else:
                acc[w] = s
        return Element(ring, acc)

    def __neg__(self) -> "Element":
        ring = self.ring
        return Element(ring, {w: ring.neg(c) for w, c in self.terms.items()})

    def __sub__(self, other: "Element") -> "Element":
        return self + (-other)

    def scaled(self, coeff: int) -> "Element":
        ring = self.ring
        if coeff == ring.zero:
            return Element.zero(ring)
        acc = {}
        for w, c in self.terms.items():
            s = ring.mul(coeff, c)
            if s != ring.zero:
                acc[w] = s
        return Element(ring, acc)

    def __mul__(self, other: "Element") -> "Element":
        """Free product: bilinear extension of word concatenation."""
        self._require_ring(other)
        ring = self.ring
        acc: dict[Word, int] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                s = ring.add(acc.get(w, ring.zero), ring.mul(c1, c2))
                if s == ring.zero:
                    acc.pop(w, None)
                else:
                    acc[w] = s
        return Element(ring, acc)

    def star(self) -> "Element":
        """The anti-involution: reverse words, swap path/ghost tags."""
        return Element(self.ring,
                       {word_star(w): c for w, c in self.terms.items()})

    def convert(self, ring: Ring) -> "Element":
        """Reinterpret the coefficients in another ring via from_int."""
        acc = {}
        for w, c in self.terms.items():
            s = ring.from_int(c)
            if s != ring.zero:
                acc[w] = s
        return Element(ring, acc)

    def sorted_terms(self) -> list[tuple[Word, int]]:
        return sorted(self.terms.items(), key=lambda item: word_key(item[0]))

    def words(self) -> Iterator[Word]:
        return iter(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __repr__(self) -> str:
        return f"Element({self.ring!r}, {len(self.terms)} terms)"
