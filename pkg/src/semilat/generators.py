"""Test-lattice corpus: Boolean, chain-product, partition and graphic-matroid
flat families, plus the standard negative controls.

Element naming is canonical per family (subset bitstrings, dot-joined
coordinates, partition block strings) so fixtures and DOT output are stable
across runs.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from .errors import MissingBoundsError, SizeLimitError, UnknownNameError
from .poset import Chain, Poset


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..vertices-1."""

    vertices: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        norm = []
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < self.vertices and 0 <= v < self.vertices):
                raise ValueError(f"edge ({u}, {v}) outside vertex range")
            norm.append((min(u, v), max(u, v)))
        if len(set(norm)) != len(norm):
            raise ValueError("duplicate edges")
        object.__setattr__(self, "edges", tuple(sorted(norm)))

    @classmethod
    def from_edge_list_text(cls, text: str) -> "Graph":
        """Parse one 'u v' pair per line; vertex count is max index + 1."""
        edges = []
        for lineno, line in enumerate(text.splitlines(), start=1):
            line = line.strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) != 2:
                raise ValueError(f"line {lineno}: expected 'u v', got {line!r}")
            try:
                u, v = int(parts[0]), int(parts[1])
            except ValueError:
                raise ValueError(f"line {lineno}: vertices must be integers") from None
            if u < 0 or v < 0:
                raise ValueError(f"line {lineno}: vertices must be non-negative")
            edges.append((u, v))
        if not edges:
            raise ValueError("edge list is empty")
        n = max(max(u, v) for u, v in edges) + 1
        return cls(n, tuple(edges))


def boolean_lattice(n: int) -> Poset:
    """Subsets of an n-element set by inclusion; names are bitstrings.

    The n = 0 lattice has the single element "0".
    """
    if not 0 <= n <= 6:
        raise SizeLimitError(f"boolean lattice supports 0 <= n <= 6, got {n}")
    if n == 0:
        return Poset.from_cover_list("B0", ["0"], [])
    def name(mask: int) -> str:
        return "".join("1" if mask >> i & 1 else "0" for i in range(n))
    elements = [name(m) for m in range(1 << n)]
    covers = [(name(m), name(m | 1 << i))
              for m in range(1 << n) for i in range(n) if not m >> i & 1]
    return Poset.from_cover_list(f"B{n}", elements, covers)


def chain_product(lengths: list[int]) -> Poset:
    """Direct product of chains with the componentwise order."""
    if not lengths or any(l < 1 for l in lengths):
        raise SizeLimitError("each chain factor needs at least one element")
    size = 1
    for l in lengths:
        size *= l
    if size > 10000:
        raise SizeLimitError(f"product of size {size} exceeds the 10000-element guard")

    def name(coords: tuple[int, ...]) -> str:
        return ".".join(str(c) for c in coords)

    points = [()]
    for l in lengths:
        points = [p + (i,) for p in points for i in range(l)]
    covers = []
    for pt in points:
        for k, l in enumerate(lengths):
            if pt[k] + 1 < l:
                covers.append((name(pt), name(pt[:k] + (pt[k] + 1,) + pt[k + 1:])))
    label = "C" + "x".join(str(l) for l in lengths)
    return Poset.from_cover_list(label, [name(p) for p in points], covers)


def _partitions(items: list[int]) -> list[list[list[int]]]:
    if not items:
        return [[]]
    head, rest = items[0], items[1:]
    out = []
    for part in _partitions(rest):
        out.append([[head]] + part)
        for k in range(len(part)):
            out.append(part[:k] + [[head] + part[k]] + part[k + 1:])
    return out


def _partition_name(blocks) -> str:
    ordered = sorted((sorted(b) for b in blocks), key=lambda b: b[0])
    return "|".join("".join(str(x) for x in b) for b in ordered)


def _blocks_of(name: str) -> list[list[int]]:
    return [[int(ch) for ch in part] for part in name.split("|")]


def _merge_covers(names: list[str], mergeable) -> list[tuple[str, str]]:
    """Cover edges of a refinement order: merge two blocks allowed by `mergeable`."""
    valid = set(names)
    covers = []
    for nm in names:
        blocks = _blocks_of(nm)
        for i, j in combinations(range(len(blocks)), 2):
            if not mergeable(blocks[i], blocks[j]):
                continue
            merged = [b for k, b in enumerate(blocks) if k not in (i, j)]
            merged.append(blocks[i] + blocks[j])
            upper = _partition_name(merged)
            if upper in valid:
                covers.append((nm, upper))
    return covers


def partition_lattice(n: int) -> Poset:
    """Set partitions of {1..n} ordered by refinement (finer below coarser)."""
    if not 1 <= n <= 6:
        raise SizeLimitError(f"partition lattice supports 1 <= n <= 6, got {n}")
    names = [_partition_name(part) for part in _partitions(list(range(1, n + 1)))]
    covers = _merge_covers(names, lambda a, b: True)
    return Poset.from_cover_list(f"Pi{n}", names, covers)


def graphic_flat_lattice(g: Graph) -> Poset:
    """Flats of the cycle matroid of g: vertex partitions whose blocks induce
    connected subgraphs, ordered by refinement.  Geometric, hence semimodular."""
    if g.vertices > 7:
        raise SizeLimitError(f"graphic flats support at most 7 vertices, got {g.vertices}")
    adjacent = {(u, v) for u, v in g.edges} | {(v, u) for u, v in g.edges}

    def connected(block: list[int]) -> bool:
        todo, seen = [block[0]], {block[0]}
        members = set(block)
        while todo:
            x = todo.pop()
            for y in members - seen:
                if (x, y) in adjacent:
                    seen.add(y)
                    todo.append(y)
        return len(seen) == len(block)

    names = [_partition_name(part) for part in _partitions(list(range(g.vertices)))
             if all(connected(b) for b in part)]

    def touches(a: list[int], b: list[int]) -> bool:
        return any((u, v) in adjacent for u in a for v in b)

    covers = _merge_covers(names, touches)
    label = "flats(" + "+".join(f"{u}{v}" for u, v in g.edges) + ")"
    return Poset.from_cover_list(label, names, covers)


def named_counterexample(name: str) -> Poset:
    """Negative controls: n5 (lattice, not semimodular), antichain2 and
    two_tops (not join semilattices)."""
    if name == "n5":
        return Poset.from_cover_list(
            "n5", ["0", "a", "b", "c", "1"],
            [("0", "a"), ("a", "c"), ("c", "1"), ("0", "b"), ("b", "1")])
    if name == "antichain2":
        return Poset.from_cover_list("antichain2", ["a", "b"], [])
    if name == "two_tops":
        return Poset.from_cover_list(
            "two_tops", ["0", "a", "b"], [("0", "a"), ("0", "b")])
    raise UnknownNameError(f"unknown counterexample {name!r}; "
                           "choose from n5, antichain2, two_tops")


def random_maximal_chain(p: Poset, seed: int) -> Chain:
    """Seeded uniform cover-walk from bottom to top; deterministic per seed."""
    bottom, top = p.bottom(), p.top()
    if bottom is None or top is None:
        raise MissingBoundsError(f"poset {p.name!r} lacks a bottom or top element")
    rng = random.Random(seed)
    out = [bottom]
    while out[-1] != top:
        ups = p.upper_covers(out[-1])
        out.append(ups[rng.randrange(len(ups))])
    return Chain(tuple(out))
