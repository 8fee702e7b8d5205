"""Finite posets as dense order matrices: construction, covers, intervals, duals.

Elements are nonempty strings kept in canonical (sorted) order, so every
derived output of the package is deterministic.  The order relation lives in
a read-only boolean matrix; the cover relation is its transitive reduction.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    NotAChainError,
    PosetConstructionError,
    UnknownElementError,
)


def _bool_matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return (a.astype(np.uint8) @ b.astype(np.uint8)) > 0


def _reflexive_transitive_closure(rel: np.ndarray) -> np.ndarray:
    reach = rel | np.eye(rel.shape[0], dtype=bool)
    while True:
        nxt = reach | _bool_matmul(reach, reach)
        if np.array_equal(nxt, reach):
            return reach
        reach = nxt


def _transitive_reduction(leq: np.ndarray) -> np.ndarray:
    """Cover matrix of a partial order given as a reflexive leq matrix."""
    strict = leq & ~np.eye(leq.shape[0], dtype=bool)
    return strict & ~_bool_matmul(strict, strict)


@dataclass(frozen=True)
class Chain:
    """Strictly increasing element sequence; build one via Poset.chain()."""

    elements: tuple[str, ...]

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def length(self) -> int:
        """Number of steps (element count minus one)."""
        return len(self.elements) - 1

    def reversed(self) -> "Chain":
        return Chain(tuple(reversed(self.elements)))


class Poset:
    """Immutable finite poset over string element names.

    Instances are constructed through :meth:`from_cover_list`, :meth:`interval`
    or :meth:`dual`; after construction everything is a pure read, so posets
    can be shared freely between threads.  Derived tables (joins, meets,
    semimodularity, heights) are cached on first use; each cache entry is
    written exactly once, so concurrent readers see either nothing or the
    finished table.
    """

    def __init__(self, name: str, elements: tuple[str, ...], leq: np.ndarray,
                 covers: np.ndarray):
        # Internal constructor: callers guarantee `elements` is sorted and the
        # matrices describe a genuine partial order / its reduction.
        self.name = name
        self.elements = elements
        self._index = {e: i for i, e in enumerate(elements)}
        leq.flags.writeable = False
        covers.flags.writeable = False
        self._leq = leq
        self._covers = covers
        self._cache: dict = {}

    # -- construction ------------------------------------------------------

    @classmethod
    def from_cover_list(cls, name: str, elements: Iterable[str],
                        covers: Iterable[Sequence[str]],
                        mode: str = "strict") -> "Poset":
        """Build a poset from its elements and (claimed) cover edges.

        In ``strict`` mode the edges must be exactly the covers of the order
        they generate; in ``lenient`` mode redundant edges are dropped and the
        reduction is recomputed.
        """
        if mode not in ("strict", "lenient"):
            raise ValueError(f"mode must be 'strict' or 'lenient', got {mode!r}")
        elems = list(elements)
        if not elems:
            raise PosetConstructionError("empty posets are not supported")
        seen = set()
        for e in elems:
            if not isinstance(e, str) or not e:
                raise PosetConstructionError(f"element names must be nonempty strings, got {e!r}")
            if e in seen:
                raise PosetConstructionError(f"duplicate element {e!r}")
            seen.add(e)
        ordered = tuple(sorted(elems))
        index = {e: i for i, e in enumerate(ordered)}
        n = len(ordered)

        edges = []
        for pair in covers:
            a, b = pair
            for x in (a, b):
                if x not in index:
                    raise PosetConstructionError(f"unknown endpoint {x!r} in cover ({a}, {b})")
            if a == b:
                raise PosetConstructionError(f"cycle: self-cover ({a}, {b})")
            edges.append((index[a], index[b]))

        rel = np.zeros((n, n), dtype=bool)
        for i, j in edges:
            rel[i, j] = True
        leq = _reflexive_transitive_closure(rel)
        mutual = leq & leq.T & ~np.eye(n, dtype=bool)
        if mutual.any():
            i, j = np.argwhere(mutual)[0]
            raise PosetConstructionError(
                f"cycle detected through {ordered[i]!r} and {ordered[j]!r}")

        reduction = _transitive_reduction(leq)
        if mode == "strict":
            extra = sorted(set(edges) - {(int(i), int(j)) for i, j in np.argwhere(reduction)})
            if extra:
                i, j = extra[0]
                raise PosetConstructionError(
                    f"non-cover edge ({ordered[i]}, {ordered[j]})")
        return cls(name, ordered, leq, reduction)

    # -- basics ------------------------------------------------------------

    def __len__(self) -> int:
        return len(self.elements)

    def __repr__(self) -> str:
        return f"Poset({self.name!r}, {len(self)} elements)"

    def __eq__(self, other) -> bool:
        """Same carrier and same order; the name is presentation only."""
        if not isinstance(other, Poset):
            return NotImplemented
        return self.elements == other.elements and np.array_equal(self._leq, other._leq)

    __hash__ = None  # mutable caches; identity hashing would mislead

    def index(self, element: str) -> int:
        try:
            return self._index[element]
        except KeyError:
            raise UnknownElementError(
                f"element {element!r} is not in poset {self.name!r}") from None

    def __contains__(self, element: str) -> bool:
        return element in self._index

    def leq(self, a: str, b: str) -> bool:
        """True iff a <= b."""
        return bool(self._leq[self.index(a), self.index(b)])

    def is_cover(self, a: str, b: str) -> bool:
        """True iff b covers a (a < b with nothing strictly between)."""
        return bool(self._covers[self.index(a), self.index(b)])

    def cover_pairs(self) -> list[tuple[str, str]]:
        """All cover edges (lower, upper), lexicographically sorted."""
        return [(self.elements[i], self.elements[j])
                for i, j in np.argwhere(self._covers)]

    def upper_covers(self, a: str) -> list[str]:
        return [self.elements[j] for j in np.flatnonzero(self._covers[self.index(a)])]

    def lower_covers(self, a: str) -> list[str]:
        return [self.elements[i] for i in np.flatnonzero(self._covers[:, self.index(a)])]

    # -- bounds and height ---------------------------------------------------

    def bottom(self) -> str | None:
        """The unique minimum, or None."""
        rows = np.flatnonzero(self._leq.all(axis=1))
        return self.elements[rows[0]] if len(rows) else None

    def top(self) -> str | None:
        """The unique maximum, or None."""
        cols = np.flatnonzero(self._leq.all(axis=0))
        return self.elements[cols[0]] if len(cols) else None

    def element_heights(self) -> dict[str, int]:
        """Longest cover-path length from a minimal element to each element."""
        heights = self._cache.get("heights")
        if heights is None:
            n = len(self)
            below = (self._leq & ~np.eye(n, dtype=bool)).sum(axis=0)
            h = [0] * n
            for i in np.argsort(below, kind="stable"):
                lows = np.flatnonzero(self._covers[:, i])
                h[i] = 1 + max((h[k] for k in lows), default=-1)
            heights = {self.elements[i]: h[i] for i in range(n)}
            self._cache["heights"] = heights
        return heights

    def height(self) -> int:
        """Length of a longest chain (element count minus one)."""
        return max(self.element_heights().values())

    # -- derived posets ------------------------------------------------------

    def interval(self, x: str, y: str) -> "Poset":
        """Subposet {z : x <= z <= y} with covers recomputed inside it.

        Intervals are memoized per poset; repeated requests share one object
        (and therefore its cached join/meet tables).
        """
        ix, iy = self.index(x), self.index(y)
        if not self._leq[ix, iy]:
            raise PosetConstructionError(f"{x!r} is not below {y!r}; empty interval")
        key = ("interval", x, y)
        cached = self._cache.get(key)
        if cached is None:
            keep = np.flatnonzero(self._leq[ix] & self._leq[:, iy])
            sub = self._leq[np.ix_(keep, keep)].copy()
            elems = tuple(self.elements[i] for i in keep)
            cached = Poset(f"{self.name}[{x},{y}]", elems, sub, _transitive_reduction(sub))
            self._cache[key] = cached
        return cached

    def dual(self) -> "Poset":
        """Same carrier with the order reversed; an involution.

        Memoized both ways, so dual(dual(p)) is p itself.
        """
        cached = self._cache.get("dual")
        if cached is None:
            if self.name.startswith("dual(") and self.name.endswith(")"):
                name = self.name[5:-1]
            else:
                name = f"dual({self.name})"
            cached = Poset(name, self.elements, self._leq.T.copy(), self._covers.T.copy())
            cached._cache["dual"] = self
            self._cache["dual"] = cached
        return cached

    # -- chains --------------------------------------------------------------

    def chain(self, elements: Iterable[str]) -> Chain:
        """Validate a strictly increasing sequence and wrap it as a Chain."""
        elems = tuple(elements)
        if not elems:
            raise NotAChainError("a chain needs at least one element")
        for e in elems:
            self.index(e)
        for a, b in zip(elems, elems[1:]):
            if a == b or not self.leq(a, b):
                raise NotAChainError(f"not strictly increasing at ({a}, {b})")
        return Chain(elems)

    # -- serialization ---------------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "elements": list(self.elements),
            "covers": [[a, b] for a, b in self.cover_pairs()],
        }


def from_dict(data: dict, mode: str = "strict") -> Poset:
    """Inverse of Poset.to_dict; validates the JSON object shape."""
    if not isinstance(data, dict):
        raise PosetConstructionError("poset JSON must be an object")
    for field in ("name", "elements", "covers"):
        if field not in data:
            raise PosetConstructionError(f"poset JSON lacks field {field!r}")
    name = data["name"]
    if not isinstance(name, str):
        raise PosetConstructionError("field 'name' must be a string")
    elements = data["elements"]
    if not isinstance(elements, list):
        raise PosetConstructionError("field 'elements' must be an array of strings")
    covers = data["covers"]
    if not isinstance(covers, list) or any(
            not isinstance(c, list) or len(c) != 2 for c in covers):
        raise PosetConstructionError("field 'covers' must be an array of [lower, upper] pairs")
    return Poset.from_cover_list(name, elements, covers, mode=mode)


def load_poset(path: str, mode: str = "strict") -> Poset:
    with open(path, encoding="utf-8") as fh:
        return from_dict(json.load(fh), mode=mode)


def save_poset(p: Poset, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(json.dumps(p.to_dict(), indent=2, sort_keys=True) + "\n")
