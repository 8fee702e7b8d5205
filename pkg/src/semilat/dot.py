"""Deterministic DOT rendering of Hasse diagrams with chain highlights."""

from __future__ import annotations

from typing import Sequence

from .matching import MatchingResult
from .poset import Poset

CHAIN_A_COLOR = "red"
CHAIN_B_COLOR = "blue"


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(p: Poset, chain_a: Sequence[str] | None = None,
               chain_b: Sequence[str] | None = None,
               matching: MatchingResult | None = None) -> str:
    """Render the cover digraph, drawn upward and ranked by element height.

    Consecutive cover pairs of the first chain are red, of the second blue
    (both at once gives a two-color edge).  When a matching is given, every
    element occurring in a witness pair is annotated with the 1-indexed
    witness numbers it serves.  Identical inputs produce identical bytes.
    """
    for ch in (chain_a or ()), (chain_b or ()):
        for e in ch:
            p.index(e)

    roles: dict[str, list[str]] = {}
    if matching is not None:
        for i, (x, y) in enumerate(matching.witnesses, start=1):
            for e in (x, y):
                p.index(e)
                roles.setdefault(e, []).append(str(i))

    a_edges = set(zip(chain_a, chain_a[1:])) if chain_a else set()
    b_edges = set(zip(chain_b, chain_b[1:])) if chain_b else set()

    lines = [f"digraph {_quote(p.name)} {{", "  rankdir=BT;", "  node [shape=box];"]
    for e in p.elements:
        if e in roles:
            # \n inside the label is a DOT line break, kept out of _quote's escaping.
            label = _quote(e)[1:-1] + "\\nw:" + ",".join(roles[e])
            lines.append(f'  {_quote(e)} [label="{label}"];')
        else:
            lines.append(f"  {_quote(e)};")

    heights = p.element_heights()
    for level in range(max(heights.values()) + 1):
        members = sorted(e for e, h in heights.items() if h == level)
        if members:
            lines.append("  { rank=same; " + " ".join(_quote(e) + ";" for e in members) + " }")

    for a, b in p.cover_pairs():
        attrs = []
        in_a = (a, b) in a_edges
        in_b = (a, b) in b_edges
        if in_a and in_b:
            attrs.append(f'color="{CHAIN_A_COLOR}:{CHAIN_B_COLOR}"')
        elif in_a:
            attrs.append(f"color={CHAIN_A_COLOR}")
        elif in_b:
            attrs.append(f"color={CHAIN_B_COLOR}")
        suffix = f" [{', '.join(attrs)}]" if attrs else ""
        lines.append(f"  {_quote(a)} -> {_quote(b)}{suffix};")
    lines.append("}")
    return "\n".join(lines) + "\n"
