"""Partial permutations of the chain ``1 < 2 < ... < n``.

Maps act on the right: ``compose(s, t)`` (also ``s * t``) applies ``s`` first
and then ``t``.  An undefined application returns ``None``.
"""
from __future__ import annotations

import re
from functools import total_ordering
from itertools import combinations
from typing import Iterable, Mapping


class ChainSizeMismatch(ValueError):
    """Two partial permutations live on chains of different sizes."""


class SizeMismatch(ValueError):
    """Domain and image sets of different cardinality."""


@total_ordering
class PartialPerm:
    """An injective partial map of ``{1, ..., n}`` into itself.

    Stored as a tuple of images, ``0`` marking points outside the domain.
    Values are immutable and hashable; the ordering is the canonical one
    (rank first, then the flattened graph lexicographically).
    """

    __slots__ = ("n", "images", "_key", "_hash", "_graph")

    def __init__(self, n: int, graph: Iterable[tuple[int, int]] | Mapping[int, int] = ()):
        if n < 1:
            raise ValueError(f"chain size must be >= 1, got {n}")
        pairs = graph.items() if isinstance(graph, Mapping) else graph
        images = [0] * n
        seen = set()
        for i, j in pairs:
            if not (1 <= i <= n and 1 <= j <= n):
                raise ValueError(f"pair ({i}, {j}) outside the chain 1..{n}")
            if images[i - 1]:
                raise ValueError(f"point {i} mapped twice")
            if j in seen:
                raise ValueError(f"image {j} hit twice; not injective")
            images[i - 1] = j
            seen.add(j)
        self._init(n, tuple(images))

    def _init(self, n, images):
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "images", images)
        object.__setattr__(self, "_key", None)
        object.__setattr__(self, "_graph", None)
        object.__setattr__(self, "_hash", hash((n, images)))

    @classmethod
    def from_images(cls, images: tuple[int, ...]) -> PartialPerm:
        # trusted fast path: caller guarantees injectivity and range
        obj = cls.__new__(cls)
        obj._init(len(images), tuple(images))
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("PartialPerm is immutable")

    @property
    def graph(self) -> tuple[tuple[int, int], ...]:
        if self._graph is None:
            object.__setattr__(self, "_graph", tuple((i, j) for i, j in enumerate(self.images, 1) if j))
        return self._graph

    @property
    def rank(self) -> int:
        return sum(1 for j in self.images if j)

    def sort_key(self):
        if self._key is None:
            flat = tuple(x for pair in self.graph for x in pair)
            object.__setattr__(self, "_key", (self.n, len(flat), flat))
        return self._key

    def __eq__(self, other):
        if not isinstance(other, PartialPerm):
            return NotImplemented
        return self.n == other.n and self.images == other.images

    def __lt__(self, other):
        if not isinstance(other, PartialPerm):
            return NotImplemented
        return self.sort_key() < other.sort_key()

    def __hash__(self):
        return self._hash

    def __mul__(self, other):
        if not isinstance(other, PartialPerm):
            return NotImplemented
        return compose(self, other)

    def __call__(self, i: int) -> int | None:
        return apply(self, i)

    def __str__(self):
        return render(self)

    def __repr__(self):
        return f"PartialPerm({self.n}, {dict(self.graph)})"


def identity(n: int) -> PartialPerm:
    if n < 1:
        raise ValueError(f"chain size must be >= 1, got {n}")
    return PartialPerm.from_images(tuple(range(1, n + 1)))


def empty(n: int) -> PartialPerm:
    if n < 1:
        raise ValueError(f"chain size must be >= 1, got {n}")
    return PartialPerm.from_images((0,) * n)


def reversal(n: int) -> PartialPerm:
    """The permutation ``i -> n + 1 - i``."""
    if n < 1:
        raise ValueError(f"chain size must be >= 1, got {n}")
    return PartialPerm.from_images(tuple(range(n, 0, -1)))


def compose(s: PartialPerm, t: PartialPerm) -> PartialPerm:
    """``st``: apply ``s``, then ``t``."""
    if s.n != t.n:
        raise ChainSizeMismatch(f"cannot compose maps on chains of size {s.n} and {t.n}")
    timg = (0,) + t.images
    return PartialPerm.from_images(tuple(timg[j] for j in s.images))


def inverse(s: PartialPerm) -> PartialPerm:
    images = [0] * s.n
    for i, j in enumerate(s.images, 1):
        if j:
            images[j - 1] = i
    return PartialPerm.from_images(tuple(images))


def apply(s: PartialPerm, i: int) -> int | None:
    if not 1 <= i <= s.n:
        raise ValueError(f"point {i} outside the chain 1..{s.n}")
    return s.images[i - 1] or None


def dom(s: PartialPerm) -> tuple[int, ...]:
    return tuple(i for i, j in enumerate(s.images, 1) if j)


def im(s: PartialPerm) -> tuple[int, ...]:
    return tuple(sorted(j for j in s.images if j))


def order_iso(A: Iterable[int], B: Iterable[int], n: int) -> PartialPerm:
    """The unique order-preserving bijection from ``A`` onto ``B``."""
    A, B = sorted(A), sorted(B)
    if len(A) != len(B):
        raise SizeMismatch(f"|A| = {len(A)} but |B| = {len(B)}")
    return PartialPerm(n, zip(A, B))


def order_anti_iso(A: Iterable[int], B: Iterable[int], n: int) -> PartialPerm:
    """The unique order-reversing bijection from ``A`` onto ``B``."""
    A, B = sorted(A), sorted(B, reverse=True)
    if len(A) != len(B):
        raise SizeMismatch(f"|A| = {len(A)} but |B| = {len(B)}")
    return PartialPerm(n, zip(A, B))


def _pairs(s):
    return combinations(s.graph, 2)


def is_order_preserving(s: PartialPerm) -> bool:
    return all(a < b for (_, a), (_, b) in _pairs(s))


def is_order_reversing(s: PartialPerm) -> bool:
    return all(a > b for (_, a), (_, b) in _pairs(s))


def is_monotone(s: PartialPerm) -> bool:
    return is_order_preserving(s) or is_order_reversing(s)


def is_isometry(s: PartialPerm) -> bool:
    return all(abs(a - b) == abs(i - j) for (i, a), (j, b) in _pairs(s))


def is_extensive(s: PartialPerm) -> bool:
    return all(i <= j for i, j in s.graph)


def is_coextensive(s: PartialPerm) -> bool:
    return all(j <= i for i, j in s.graph)


def is_partial_identity(s: PartialPerm) -> bool:
    return all(i == j for i, j in s.graph)


def render(s: PartialPerm) -> str:
    """Two-row form ``[1 3 / 2 1]``; ``∅`` for the empty map."""
    g = s.graph
    if not g:
        return "∅"
    top = " ".join(str(i) for i, _ in g)
    bottom = " ".join(str(j) for _, j in g)
    return f"[{top} / {bottom}]"


_TWO_ROW = re.compile(r"^\[\s*([\d\s]*)/([\d\s]*)\]$")


def parse(text: str, n: int) -> PartialPerm:
    """Inverse of :func:`render`.  Raises ``ValueError`` on malformed input."""
    text = text.strip()
    if text in ("∅", "[]", "{}"):
        return empty(n)
    m = _TWO_ROW.match(text)
    if not m:
        raise ValueError(f"cannot parse {text!r}; expected '[i1 i2 / j1 j2]' or '∅'")
    top = [int(x) for x in m.group(1).split()]
    bottom = [int(x) for x in m.group(2).split()]
    if len(top) != len(bottom):
        raise ValueError(f"rows of {text!r} have different lengths")
    return PartialPerm(n, zip(top, bottom))
