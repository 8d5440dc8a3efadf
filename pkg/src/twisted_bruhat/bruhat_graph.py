"""Bruhat graphs ``BG(w)`` on ``I_w = {u in iota(theta) : u <= w}``.

Vertices are poset indices.  ``{u, v}`` is an edge when ``v = u * t != u``
for a reflection ``t``; each edge records the reflections carrying its
lower endpoint to its upper one.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .twisted import InvariantError, TwistedPoset, _bits


class VertexNotFound(KeyError):
    pass


@dataclass
class BruhatGraph:
    poset: TwistedPoset
    w: int
    vertices: list[int]
    # (lower, upper, reflection indices t with lower * t == upper)
    edges: list[tuple[int, int, tuple[int, int]]]
    adjacency: dict[int, list[int]] = field(default_factory=dict)

    def _check_vertex(self, u) -> int:
        try:
            i = self.poset.idx(u)
        except KeyError as exc:
            raise VertexNotFound(str(exc)) from None
        if i not in self.adjacency:
            raise VertexNotFound(f"{self.poset.strings[i]} is not a vertex of BG({self.poset.strings[self.w]})")
        return i

    def neighbours(self, u) -> list[int]:
        i = self._check_vertex(u)
        return [self.edges[e][0] if self.edges[e][1] == i else self.edges[e][1]
                for e in self.adjacency[i]]

    def degree(self, u) -> int:
        return len(self.adjacency[self._check_vertex(u)])

    def down_degree(self, u) -> int:
        i = self._check_vertex(u)
        return sum(1 for e in self.adjacency[i] if self.edges[e][1] == i)

    def degrees(self) -> dict[int, int]:
        return {v: len(self.adjacency[v]) for v in self.vertices}

    def edge_set(self) -> set[frozenset]:
        return {frozenset((a, b)) for a, b, _ in self.edges}

    def is_regular(self, degree: int) -> bool:
        return all(len(adj) == degree for adj in self.adjacency.values())


def build_bg(poset: TwistedPoset, w) -> BruhatGraph:
    """Scan every reflection at every vertex of ``I_w``."""
    wi = poset.idx(w)
    inside = poset.below[wi]
    vertices = list(_bits(inside))
    found: dict[tuple[int, int], set[int]] = {}
    for v in vertices:
        for t, table in enumerate(poset.refl_act):
            x = table[v]
            if x != v and inside >> x & 1:
                found.setdefault((v, x), set()).add(t)

    edges = []
    adjacency: dict[int, list[int]] = {v: [] for v in vertices}
    for (a, b), ts in sorted(found.items()):
        if a > b:
            continue
        back = found.get((b, a))
        if len(ts) != 2 or back is None or len(back) != 2:
            raise InvariantError(
                f"edge {poset.strings[a]}-{poset.strings[b]} does not carry exactly two reflections")
        if poset.above[a] >> b & 1:
            lo, hi, pair = a, b, ts
        elif poset.above[b] >> a & 1:
            lo, hi, pair = b, a, back
        else:
            raise InvariantError(
                f"edge {poset.strings[a]}-{poset.strings[b]} joins incomparable vertices")
        adjacency[a].append(len(edges))
        adjacency[b].append(len(edges))
        edges.append((lo, hi, tuple(sorted(pair))))
    return BruhatGraph(poset, wi, vertices, edges, adjacency)


def edge_reflections(poset: TwistedPoset, u, v) -> tuple[int, int]:
    """The two reflection indices ``t`` with ``u * t == v``."""
    i, j = poset.idx(u), poset.idx(v)
    ts = [t for t, table in enumerate(poset.refl_act) if table[i] == j]
    if i == j or not ts:
        raise VertexNotFound(f"{{{poset.strings[i]}, {poset.strings[j]}}} is not an edge")
    if len(ts) != 2:
        raise InvariantError(f"{len(ts)} reflections join {poset.strings[i]} and {poset.strings[j]}")
    return ts[0], ts[1]


def degree(graph: BruhatGraph, u) -> int:
    return graph.degree(u)


def down_degree(graph: BruhatGraph, u) -> int:
    return graph.down_degree(u)


def minimal_words(poset: TwistedPoset) -> list[tuple[int, ...]]:
    """For each element ``u``, the shortest, then lexicographically least,
    generator word ``x`` (1-based indices) with ``u = theta(x^-1) x``."""
    best: list = [None] * poset.size
    best[0] = ()
    frontier = [0]
    while frontier:
        nxt = {}
        for i in frontier:
            for g, table in enumerate(poset.gen_act):
                j = table[i]
                if best[j] is None:
                    cand = best[i] + (g + 1,)
                    if j not in nxt or cand < nxt[j]:
                        nxt[j] = cand
        for j, word in nxt.items():
            best[j] = word
        frontier = sorted(nxt)
    return best


def word_label(word: tuple[int, ...]) -> str:
    if not word:
        return "e"
    if all(g <= 9 for g in word):
        return "".join(str(g) for g in word)
    return ".".join(str(g) for g in word)


def to_dot(graph: BruhatGraph, name: str = "BG") -> str:
    """DOT text: one rank per layer, cover edges solid, other edges dashed."""
    poset = graph.poset
    words = minimal_words(poset)
    lines = [f"graph {name} {{", "  rankdir=BT;", "  node [shape=plaintext];"]
    by_rank: dict[int, list[int]] = {}
    for v in graph.vertices:
        by_rank.setdefault(poset.rank[v], []).append(v)
    for r in sorted(by_rank):
        nodes = " ".join(f"n{v};" for v in by_rank[r])
        lines.append(f"  {{ rank=same; {nodes} }}")
    for v in graph.vertices:
        lines.append(f'  n{v} [label="{word_label(words[v])}", '
                     f'tooltip="{poset.strings[v]}"];')
    for lo, hi, pair in graph.edges:
        style = "solid" if hi in poset.up_covers[lo] else "dashed"
        refl = ",".join(poset.ctx.reflection_labels[t] for t in pair)
        lines.append(f'  n{lo} -- n{hi} [style={style}, tooltip="{refl}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(graph: BruhatGraph) -> dict:
    poset = graph.poset
    words = minimal_words(poset)
    return {
        "model": poset.ctx.name,
        "w": poset.strings[graph.w],
        "rank": poset.rank[graph.w],
        "vertices": [
            {"element": poset.strings[v], "rank": poset.rank[v],
             "label": word_label(words[v]), "degree": len(graph.adjacency[v]),
             "neighbours": sorted(poset.strings[x] for x in graph.neighbours(v))}
            for v in graph.vertices
        ],
        "edges": [
            {"lower": poset.strings[lo], "upper": poset.strings[hi],
             "reflections": [poset.ctx.reflection_labels[t] for t in pair],
             "cover": hi in poset.up_covers[lo]}
            for lo, hi, pair in graph.edges
        ],
    }
