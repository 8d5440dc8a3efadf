"""Rationally singular loci of orbit closures, by four criteria that must agree.

* KLV: ``P_{v,w} = 1`` for all ``v`` in ``[u, w]``;
* degrees: every ``v`` in ``[u, w]`` has degree ``rho(w)`` in ``BG(w)``;
* rank symmetry of ``[id, w]`` (global smoothness only);
* bottom vertex: ``deg(u) == rho(w)`` alone (type A models).

Smoothness is reported per orbit, indexed by ``u`` in ``I_w``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .bruhat_graph import BruhatGraph, build_bg, minimal_words, word_label
from .klv import PolyTable
from .poly import ONE
from .twisted import InvariantError, TwistedPoset, _bits


class UnsupportedModelError(ValueError):
    pass


def _up_closed_good(poset: TwistedPoset, w: int, good) -> set[int]:
    """``{u in I_w : good(v) for every v in [u, w]}``."""
    lower = poset.below[w]
    bad_mask = 0
    for v in _bits(lower):
        if not good(v):
            bad_mask |= 1 << v
    return {u for u in _bits(lower) if not poset.above[u] & bad_mask}


def locus_via_p(table: PolyTable, w) -> set[int]:
    poset = table.poset
    j = poset.idx(w)
    return _up_closed_good(poset, j, lambda v: table.p(v, j) == ONE)


def locus_via_degree(graph: BruhatGraph, w=None) -> set[int]:
    poset = graph.poset
    j = graph.w if w is None else poset.idx(w)
    if j != graph.w:
        raise ValueError("graph was built for a different w")
    target = poset.rank[j]
    return _up_closed_good(poset, j, lambda v: len(graph.adjacency[v]) == target)


def globally_smooth_via_rank_symmetry(poset: TwistedPoset, w) -> bool:
    counts = poset.interval_rank_counts(0, w)
    return counts == counts[::-1]


def bottom_vertex_check(graph: BruhatGraph, u) -> bool:
    """Smoothness at ``u`` decided by ``deg(u) == rho(w)`` alone.

    Valid in the flip model and, by Deodhar's theorem, in the diagonal model
    over symmetric groups (both are type A here).
    """
    poset = graph.poset
    if poset.ctx.kind not in ("flip", "diagonal"):
        raise UnsupportedModelError(f"bottom-vertex criterion not available for {poset.ctx.kind}")
    i = poset.idx(u)
    if not poset.above[i] >> graph.w & 1:
        raise ValueError("bottom_vertex_check needs u <= w")
    return graph.degree(i) == poset.rank[graph.w]


@dataclass
class LocusReport:
    poset: TwistedPoset
    w: int
    smooth_points: set[int]
    singular_points: set[int]
    globally_smooth: bool
    rank_vector: list[int]
    degrees: dict[int, int]
    criteria: dict[str, object] = field(default_factory=dict)

    def to_json(self) -> dict:
        poset = self.poset
        words = minimal_words(poset)
        return {
            "model": poset.ctx.name,
            "w": poset.strings[self.w],
            "w_label": word_label(words[self.w]),
            "rank": poset.rank[self.w],
            "rank_vector": self.rank_vector,
            "globally_smooth": self.globally_smooth,
            "vertices": [
                {"element": poset.strings[v], "label": word_label(words[v]),
                 "rank": poset.rank[v], "degree": self.degrees[v],
                 "smooth": v in self.smooth_points}
                for v in sorted(self.degrees)
            ],
            "singular_points": [poset.strings[v] for v in sorted(self.singular_points)],
            "criteria": self.criteria,
        }


def full_report(poset: TwistedPoset, w, table: PolyTable | None = None,
                graph: BruhatGraph | None = None) -> LocusReport:
    """Run every criterion for ``w``; any disagreement raises :class:`InvariantError`."""
    j = poset.idx(w)
    table = table or PolyTable(poset)
    graph = graph if graph is not None and graph.w == j else build_bg(poset, j)
    lower = set(_bits(poset.below[j]))

    by_p = locus_via_p(table, j)
    by_degree = locus_via_degree(graph, j)
    by_bottom = {u for u in lower if bottom_vertex_check(graph, u)}
    symmetric = globally_smooth_via_rank_symmetry(poset, j)
    regular = graph.is_regular(poset.rank[j])
    all_p_one = by_p == lower

    if by_p != by_degree:
        raise InvariantError(f"KLV and degree loci differ for {poset.strings[j]}")
    if by_bottom != by_degree:
        raise InvariantError(f"bottom-vertex locus differs for {poset.strings[j]}")
    if not symmetric == regular == all_p_one:
        raise InvariantError(
            f"global criteria disagree for {poset.strings[j]}: symmetric={symmetric}, "
            f"regular={regular}, all P=1: {all_p_one}")
    return LocusReport(
        poset=poset, w=j,
        smooth_points=by_p, singular_points=lower - by_p,
        globally_smooth=all_p_one,
        rank_vector=poset.interval_rank_counts(0, j),
        degrees=graph.degrees(),
        criteria={
            "klv": {"smooth": all_p_one,
                    "singular": sorted(poset.strings[v] for v in lower - by_p)},
            "degree": {"smooth": regular,
                       "singular": sorted(poset.strings[v] for v in lower - by_degree)},
            "bottom_vertex": {"smooth": by_bottom == lower,
                              "singular": sorted(poset.strings[v] for v in lower - by_bottom)},
            "rank_symmetry": {"smooth": symmetric},
            "agree": True,
        },
    )
