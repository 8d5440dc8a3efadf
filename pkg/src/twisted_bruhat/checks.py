"""Invariant suites shared by the ``check`` command and the test-suite.

Each suite returns a :class:`SuiteResult`; ``failures`` holds readable
counterexamples.  ``level="fast"`` restricts the outer loop over ``w`` to a
deterministic sample; ``"exhaustive"`` visits every ``w``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from . import classical
from . import fpf as F
from . import perm as P
from .bruhat_graph import build_bg
from .groups import GroupContext
from .klv import PolyTable
from .poly import IntPolynomial
from .smoothness import bottom_vertex_check, full_report, locus_via_degree
from .twisted import InvariantError, TwistedPoset, _bits, enumerate_iota

SUITES = ("edges", "mobius", "qsum", "equivalences", "epsilon", "oracle")
MAX_FAILURES = 50


@dataclass
class SuiteResult:
    name: str
    model: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    skipped: str = ""

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, msg: str) -> None:
        if len(self.failures) < MAX_FAILURES:
            self.failures.append(msg)

    def summary(self) -> str:
        if self.skipped:
            return f"{self.name:<13} {self.model:<11} SKIP  ({self.skipped})"
        status = "PASS" if self.passed else "FAIL"
        return f"{self.name:<13} {self.model:<11} {status}  {self.checked} checks, {len(self.failures)} failures"


class Session:
    """One model with its poset, polynomial table and cached graphs."""

    def __init__(self, ctx: GroupContext, level: str = "exhaustive"):
        if level not in ("fast", "exhaustive"):
            raise ValueError(f"unknown check level {level!r}")
        self.ctx = ctx
        self.level = level
        self.poset: TwistedPoset = enumerate_iota(ctx)
        self.table = PolyTable(self.poset)
        self._graphs: dict = {}

    def graph(self, w: int):
        if w not in self._graphs:
            self._graphs[w] = build_bg(self.poset, w)
        return self._graphs[w]

    def targets(self) -> list[int]:
        n = self.poset.size
        if self.level == "exhaustive":
            return list(range(n))
        step = max(1, n // 12)
        return sorted(set(range(0, n, step)) | {n - 1})

    def s(self, i: int) -> str:
        return self.poset.strings[i]


def suite_edges(sess: Session) -> SuiteResult:
    """Degree lower bound, down-degrees, ``Q(1) = delta`` and ``Q'(1)`` = edge indicator."""
    res = SuiteResult("edges", sess.ctx.name)
    poset, table = sess.poset, sess.table
    for w in sess.targets():
        g = sess.graph(w)
        rw = poset.rank[w]
        for v in g.vertices:
            res.checked += 2
            if g.degree(v) < rw:
                res.fail(f"deg {sess.s(v)} = {g.degree(v)} < rho({sess.s(w)}) = {rw}")
            if g.down_degree(v) != poset.rank[v]:
                res.fail(f"down-degree of {sess.s(v)} in BG({sess.s(w)}) is {g.down_degree(v)}")
        edges = g.edge_set()
        for u in range(poset.size):
            qv = table.q(u, w)
            res.checked += 2
            if qv.at_one() != (1 if u == w else 0):
                res.fail(f"Q_{{{sess.s(u)},{sess.s(w)}}}(1) = {qv.at_one()}")
            want = 1 if (u != w and poset.leq(u, w) and frozenset((u, w)) in edges) else 0
            if qv.derivative_at_one() != want:
                res.fail(f"Q'_{{{sess.s(u)},{sess.s(w)}}}(1) = {qv.derivative_at_one()}, edge indicator {want}")
    return res


def suite_mobius(sess: Session) -> SuiteResult:
    """``Q(0)`` = Moebius (closed form and recursion), and P-polynomial sanity."""
    res = SuiteResult("mobius", sess.ctx.name)
    poset, table = sess.poset, sess.table
    for w in sess.targets():
        for u in range(poset.size):
            closed = poset.mobius(u, w)
            rec = poset.mobius_recursive(u, w)
            q0 = table.q(u, w).constant_term()
            res.checked += 2
            if closed != rec:
                res.fail(f"mu({sess.s(u)},{sess.s(w)}): closed {closed} != recursive {rec}")
            if q0 != closed:
                res.fail(f"Q_{{{sess.s(u)},{sess.s(w)}}}(0) = {q0} != mu = {closed}")
            if not poset.leq(u, w):
                continue
            p = table.p(u, w)
            d = poset.rank[w] - poset.rank[u]
            res.checked += 3
            if p.constant_term() != 1:
                res.fail(f"P_{{{sess.s(u)},{sess.s(w)}}}(0) = {p.constant_term()}")
            if u != w and 2 * p.degree > d - 1:
                res.fail(f"deg P_{{{sess.s(u)},{sess.s(w)}}} = {p.degree} exceeds ({d}-1)/2")
            if not p.nonnegative():
                res.fail(f"P_{{{sess.s(u)},{sess.s(w)}}} = {p} has a negative coefficient")
    return res


def suite_qsum(sess: Session) -> SuiteResult:
    """``sum_{u <= v} Q_{u,v} = q^{rho(v)}`` and the two R routes agree."""
    res = SuiteResult("qsum", sess.ctx.name)
    poset, table = sess.poset, sess.table
    for v in sess.targets():
        total = IntPolynomial()
        for u in poset.lower(v):
            total = total + table.q(u, v)
            res.checked += 1
            if table.r(u, v) != table.r_recursive(u, v):
                res.fail(f"R_{{{sess.s(u)},{sess.s(v)}}}: conversion != recursion")
        res.checked += 1
        if total != IntPolynomial.monomial(poset.rank[v]):
            res.fail(f"sum of Q_{{u,{sess.s(v)}}} = {total}, expected q^{poset.rank[v]}")
    return res


def suite_equivalences(sess: Session) -> SuiteResult:
    """Loci by KLV / degree / bottom vertex / rank symmetry; up-closedness; monotone degrees."""
    res = SuiteResult("equivalences", sess.ctx.name)
    poset, table = sess.poset, sess.table
    for w in sess.targets():
        g = sess.graph(w)
        try:
            rep = full_report(poset, w, table, g)
        except InvariantError as exc:
            res.fail(str(exc))
            continue
        res.checked += 1
        smooth = rep.smooth_points
        by_degree = locus_via_degree(g, w)
        for u in g.vertices:
            res.checked += 2
            if bottom_vertex_check(g, u) != (u in by_degree):
                res.fail(f"bottom vertex criterion wrong at {sess.s(u)} in BG({sess.s(w)})")
            if u in smooth and any(v not in smooth for v in _bits(poset.interval_mask(u, w))):
                res.fail(f"smooth locus of {sess.s(w)} not up-closed at {sess.s(u)}")
        for lo, hi, _ in g.edges:
            res.checked += 1
            if g.degree(lo) < g.degree(hi):
                res.fail(f"degree drops moving down {sess.s(hi)} -> {sess.s(lo)} in BG({sess.s(w)})")
    return res


def suite_epsilon(sess: Session) -> SuiteResult:
    """The injection ``out(u) -> out(u star r)`` and the facts it rests on, in ``F_{2n}``."""
    res = SuiteResult("epsilon", sess.ctx.name)
    ctx = sess.ctx
    if ctx.kind != "flip":
        res.skipped = "fixed-point-free model exists only for flip"
        return res
    m = ctx.m
    fpfs = F.all_fpf(m)
    w0 = P.longest(m)
    ts = F.transpositions(m)
    poset = sess.poset
    targets = fpfs if sess.level == "exhaustive" else [F.to_fpf(ctx, poset.elements[w]) for w in sess.targets()]

    # bridge: order and graphs agree with the twisted model
    for x, y in itertools.product(fpfs, repeat=2):
        res.checked += 2
        if F.fpf_preceq(x, y) != ctx.bruhat_leq(y, x):
            res.fail(f"preceq({P.to_string(x)},{P.to_string(y)}) is not dual Bruhat")
        if F.fpf_preceq(x, y) != poset.leq(F.from_fpf(ctx, x), F.from_fpf(ctx, y)):
            res.fail(f"bridge is not an order isomorphism at {P.to_string(x)}, {P.to_string(y)}")
    for x in fpfs:
        for t in ts:
            res.checked += 1
            ti = ctx.reflection_index(P.transposition(m, *t))
            twisted = poset.elements[poset.refl_act[ti][poset.idx(F.from_fpf(ctx, x))]]
            if F.from_fpf(ctx, F.star(x, t)) != twisted:
                res.fail(f"w0 (x star t) != (w0 x) * t at x={P.to_string(x)}, t={t}")
            y = F.star(x, t)
            if y != x:
                others = [s for s in ts if s != t and F.star(x, s) == y]
                res.checked += 1
                if others != [F.partner(x, t)]:
                    res.fail(f"partner of {t} at {P.to_string(x)}: {others}")

    for w in targets:
        g = F.FpfGraph(w)
        gi = sess.graph(poset.idx(F.from_fpf(ctx, w)))
        pushed = {frozenset(F.to_fpf(ctx, poset.elements[a]) for a in e) for e in gi.edge_set()}
        res.checked += 1
        if pushed != g.edges():
            res.fail(f"BG({P.to_string(w)}) differs between models")
        for u in g.vertices:
            if u == w0:
                continue
            for r in ts:
                ur = F.star(u, r)
                if not F.fpf_prec(ur, u):
                    continue
                try:
                    images = [F.epsilon(u, r, w, e) for e in g.out[u]]
                except (AssertionError, ValueError) as exc:
                    res.fail(f"epsilon ill-defined at u={P.to_string(u)}, r={r}, w={P.to_string(w)}: {exc}")
                    continue
                res.checked += 3
                if any(img not in g.out[ur] for img in images):
                    res.fail(f"epsilon leaves out(u star r) at u={P.to_string(u)}, r={r}, w={P.to_string(w)}")
                if len(set(images)) != len(images):
                    res.fail(f"epsilon not injective at u={P.to_string(u)}, r={r}, w={P.to_string(w)}")
                if g.degree(ur) < g.degree(u):
                    res.fail(f"degree decreases from {P.to_string(u)} to {P.to_string(ur)}")
        # bottom vertex: deg(u) == deg(w) iff every v in [u, w] has that degree
        dw = g.degree(w)
        for u in g.vertices:
            res.checked += 1
            interval_ok = all(g.degree(v) == dw for v in g.vertices
                              if F.fpf_preceq(u, v))
            if (g.degree(u) == dw) != interval_ok:
                res.fail(f"bottom-vertex criterion fails at u={P.to_string(u)}, w={P.to_string(w)}")
        for u in fpfs:
            for t1, t2 in F.pairs_of_cycles(m):
                if len(F.orbit(u, t1, t2)) != 6:
                    continue
                res.checked += 1
                if not F.orbit6_check(u, t1, t2, w):
                    res.fail(f"six-element orbit of {P.to_string(u)} under {t1},{t2} has 5 of 6 in I_{P.to_string(w)}")
    return res


def suite_oracle(sess: Session) -> SuiteResult:
    """Diagonal model against classical Kazhdan-Lusztig theory."""
    res = SuiteResult("oracle", sess.ctx.name)
    ctx = sess.ctx
    if ctx.kind != "diagonal":
        res.skipped = "classical oracle applies to the diagonal model"
        return res
    if ctx.m > classical.MAX_N:
        res.skipped = f"classical oracle limited to m <= {classical.MAX_N}"
        return res
    poset, table = sess.poset, sess.table
    kl = classical.get(ctx.m)
    first = [x[0] for x in poset.elements]
    for w in sess.targets():
        for u in range(poset.size):
            r_cl = kl.r(first[u], first[w])
            p_cl = kl.p(first[u], first[w])
            res.checked += 3
            if table.q(u, w) != r_cl:
                res.fail(f"Q_{{{sess.s(u)},{sess.s(w)}}} = {table.q(u, w)} != classical R {r_cl}")
            if table.r(u, w) != r_cl:
                res.fail(f"R_{{{sess.s(u)},{sess.s(w)}}} = {table.r(u, w)} != classical R {r_cl}")
            if table.p(u, w) != p_cl:
                res.fail(f"P_{{{sess.s(u)},{sess.s(w)}}} = {table.p(u, w)} != classical P {p_cl}")
        rep = full_report(poset, w, table, sess.graph(w))
        cp = {poset.idx((a, P.inverse(a))) for a in kl.smooth_locus(first[w])}
        res.checked += 1
        if cp != rep.smooth_points:
            res.fail(f"Carrell-Peterson locus differs for {sess.s(w)}")
    return res


_RUNNERS = {
    "edges": suite_edges,
    "mobius": suite_mobius,
    "qsum": suite_qsum,
    "equivalences": suite_equivalences,
    "epsilon": suite_epsilon,
    "oracle": suite_oracle,
}


def run_suite(name: str, sess: Session) -> SuiteResult:
    if name not in _RUNNERS:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)} or all")
    try:
        return _RUNNERS[name](sess)
    except (InvariantError, AssertionError) as exc:
        res = SuiteResult(name, sess.ctx.name)
        res.fail(f"invariant violation: {exc}")
        return res


def run_suites(names, sess: Session) -> list[SuiteResult]:
    return [run_suite(n, sess) for n in names]
