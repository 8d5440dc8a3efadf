"""Line-oriented text export of a twisted poset, and a Hasse-diagram DOT emitter reading it.

Format::

    <rank>\t<element>        one line per element, canonical order
    # covers
    <lower>\t<upper>         one line per covering pair
"""

from __future__ import annotations

from .twisted import TwistedPoset

COVERS_HEADER = "# covers"


def export_text(poset: TwistedPoset) -> str:
    lines = [f"{poset.rank[i]}\t{poset.strings[i]}" for i in range(poset.size)]
    lines.append(COVERS_HEADER)
    for i in range(poset.size):
        for j in poset.up_covers[i]:
            lines.append(f"{poset.strings[i]}\t{poset.strings[j]}")
    return "\n".join(lines) + "\n"


def parse_text(text: str) -> tuple[list[tuple[int, str]], list[tuple[str, str]]]:
    """``(elements, covers)`` with elements as ``(rank, string)`` pairs."""
    elements: list[tuple[int, str]] = []
    covers: list[tuple[str, str]] = []
    in_covers = False
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        if line.strip() == COVERS_HEADER:
            in_covers = True
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected two tab-separated fields")
        if in_covers:
            covers.append((parts[0], parts[1]))
        else:
            elements.append((int(parts[0]), parts[1]))
    known = {s for _, s in elements}
    for lo, hi in covers:
        if lo not in known or hi not in known:
            raise ValueError(f"cover {lo} < {hi} names an unknown element")
    return elements, covers


def hasse_dot(text: str, name: str = "iota") -> str:
    elements, covers = parse_text(text)
    node = {s: f"n{k}" for k, (_, s) in enumerate(elements)}
    by_rank: dict[int, list[str]] = {}
    for r, s in elements:
        by_rank.setdefault(r, []).append(s)
    lines = [f"graph {name} {{", "  rankdir=BT;", "  node [shape=plaintext];"]
    for r in sorted(by_rank):
        lines.append("  { rank=same; " + " ".join(f"{node[s]};" for s in by_rank[r]) + " }")
    for _, s in elements:
        lines.append(f'  {node[s]} [label="{s}"];')
    for lo, hi in covers:
        lines.append(f"  {node[lo]} -- {node[hi]};")
    lines.append("}")
    return "\n".join(lines) + "\n"
