"""Twisted identities ``iota(theta)`` and their induced Bruhat order.

Internally every poset element is addressed by its index in the canonical
order (rank, then serialized string); order relations are stored as Python
int bitmasks over those indices.
"""

from __future__ import annotations

from collections import deque
from functools import cached_property

from . import kernels
from .groups import Element, GroupContext


class InvariantError(AssertionError):
    """An internal consistency check failed; this is a bug, not bad input."""


def twist(ctx: GroupContext, u: Element, w: Element) -> Element:
    """``u * w = theta(w^-1) u w``."""
    return ctx.compose(ctx.compose(ctx.theta(ctx.inverse(w)), u), w)


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _leq_masks(ctx: GroupContext, left: list, right: list) -> list[int]:
    """``masks[p]`` has bit ``q`` set iff ``left[p] <= right[q]`` in ``W``."""
    m = ctx.m
    mm = m * m
    na, nb = len(left), len(right)
    out = None
    for c in range(1 if ctx.kind == "flip" else 2):
        if ctx.kind == "flip":
            a, b = left, right
        else:
            a, b = [x[c] for x in left], [x[c] for x in right]
        masks = kernels.leq_masks(kernels.pack_dots(a, m), na,
                                  kernels.pack_dots(b, m), nb, mm)
        out = masks if out is None else [x & y for x, y in zip(out, masks)]
    return out


class TwistedPoset:
    """``Br(iota(theta))`` for one group model.

    Attributes: ``elements`` (canonical order), ``rank``, ``below[i]`` and
    ``above[i]`` (bitmasks, reflexive), ``up_covers``/``down_covers``,
    ``rank_counts``, and action tables ``gen_act[g][i]`` / ``refl_act[t][i]``
    giving the index of ``elements[i] * s_g`` / ``elements[i] * t``.
    """

    def __init__(self, ctx: GroupContext, elements: list):
        self.ctx = ctx
        lengths = [ctx.length(u) for u in elements]
        keyed = sorted(zip(lengths, (ctx.to_string(u) for u in elements), elements))
        self.elements: list[Element] = [u for _, _, u in keyed]
        self.strings: list[str] = [s for _, s, _ in keyed]
        self.index: dict = {u: k for k, u in enumerate(self.elements)}
        self.rank: list[int] = []
        for ell, _, u in keyed:
            if ell % 2:
                raise InvariantError(f"twisted identity {ctx.to_string(u)} has odd length")
            if ctx.theta(u) != ctx.inverse(u):
                raise InvariantError(f"{ctx.to_string(u)} is not a twisted involution")
            self.rank.append(ell // 2)
        n = len(self.elements)
        self.size = n
        self._mobius_rows: dict[int, dict[int, int]] = {}

        self.gen_act = [self._act_table(s) for s in ctx.generators]
        self.refl_act = [self._act_table(t) for t in ctx.reflections]

        leq = _leq_masks(ctx, self.elements, self.elements)
        self.above: list[int] = leq
        below = [0] * n
        for i, mask in enumerate(leq):
            for j in _bits(mask):
                below[j] |= 1 << i
        self.below: list[int] = below

        self.up_covers: list[list[int]] = [[] for _ in range(n)]
        self.down_covers: list[list[int]] = [[] for _ in range(n)]
        for j in range(n):
            strict = below[j] & ~(1 << j)
            for i in _bits(strict):
                # i < j is a cover iff nothing strictly between
                if (self.above[i] & strict) == (1 << i):
                    self.down_covers[j].append(i)
                    self.up_covers[i].append(j)
        for i in range(n):
            for j in self.up_covers[i]:
                if self.rank[j] != self.rank[i] + 1:
                    raise InvariantError(
                        f"cover {self.strings[i]} < {self.strings[j]} jumps rank")
        self.rank_counts = [0] * (max(self.rank) + 1)
        for r in self.rank:
            self.rank_counts[r] += 1
        if self.rank[0] != 0 or self.below[0] != 1 or self.above[0] != (1 << n) - 1:
            raise InvariantError("identity is not the unique minimum")

    def _act_table(self, s: Element) -> list[int]:
        ctx = self.ctx
        return [self.index[twist(ctx, u, s)] for u in self.elements]

    def __len__(self):
        return self.size

    def __repr__(self):
        return f"TwistedPoset({self.ctx.name}, {self.size} elements)"

    # -- lookups ------------------------------------------------------------

    def idx(self, u) -> int:
        """Index of ``u`` (an element tuple, a serialized string, or an index)."""
        if isinstance(u, int):
            if not 0 <= u < self.size:
                raise KeyError(f"index {u} out of range")
            return u
        if isinstance(u, str):
            u = self.ctx.from_string(u)
        try:
            return self.index[u]
        except KeyError:
            raise KeyError(f"{self.ctx.to_string(u)} is not a twisted identity") from None

    def leq(self, u, v) -> bool:
        return bool(self.above[self.idx(u)] >> self.idx(v) & 1)

    @property
    def top(self) -> int:
        return self.size - 1

    def rank_of(self, u) -> int:
        return self.rank[self.idx(u)]

    # -- structure ----------------------------------------------------------

    def interval_mask(self, u, w) -> int:
        return self.above[self.idx(u)] & self.below[self.idx(w)]

    def interval(self, u, w) -> list[int]:
        """Indices ``v`` with ``u <= v <= w`` in canonical order; empty if ``u`` is not below ``w``."""
        return list(_bits(self.interval_mask(u, w)))

    def lower(self, w) -> list[int]:
        return list(_bits(self.below[self.idx(w)]))

    def interval_rank_counts(self, u, w) -> list[int]:
        i, j = self.idx(u), self.idx(w)
        if not self.above[i] >> j & 1:
            return []
        counts = [0] * (self.rank[j] - self.rank[i] + 1)
        for k in _bits(self.above[i] & self.below[j]):
            counts[self.rank[k] - self.rank[i]] += 1
        return counts

    def descents(self, v) -> list[int]:
        """Generator positions ``g`` with ``v s_g < v``.

        Computed both from the length in ``W`` and from ``v * s_g < v`` in
        the poset; the two must agree.
        """
        i = self.idx(v)
        ctx = self.ctx
        u = self.elements[i]
        ell = 2 * self.rank[i]
        by_length = [g for g, s in enumerate(ctx.generators)
                     if ctx.length(ctx.compose(u, s)) < ell]
        by_twist = [g for g in range(len(ctx.generators))
                    if self.rank[self.gen_act[g][i]] < self.rank[i]]
        if by_length != by_twist:
            raise InvariantError(f"descent sets disagree at {self.strings[i]}")
        return by_twist

    # -- full intervals and Moebius -----------------------------------------

    @cached_property
    def _bad_masks(self) -> tuple[list[int], list[int]]:
        """Bitmasks over the twisted involutions of ``W`` outside ``iota(theta)``."""
        ctx = self.ctx
        bad = [x for x in ctx.twisted_involutions() if x not in self.index]
        if not bad:
            return [0] * self.size, [0] * self.size
        up = _leq_masks(ctx, self.elements, bad)       # element <= x
        down_t = _leq_masks(ctx, bad, self.elements)   # x <= element
        down = [0] * self.size
        for k, mask in enumerate(down_t):
            for j in _bits(mask):
                down[j] |= 1 << k
        return up, down

    def is_full_interval(self, u, w) -> bool:
        """True iff every twisted involution ``x`` of ``W`` with ``u <= x <= w`` is a twisted identity."""
        i, j = self.idx(u), self.idx(w)
        if not self.above[i] >> j & 1:
            raise ValueError("is_full_interval needs u <= w")
        up, down = self._bad_masks
        return not (up[i] & down[j])

    def mobius(self, u, w) -> int:
        """Closed form: ``(-1)^(rank gap)`` on full intervals, else 0."""
        i, j = self.idx(u), self.idx(w)
        if not self.above[i] >> j & 1:
            return 0
        if not self.is_full_interval(i, j):
            return 0
        return -1 if (self.rank[j] - self.rank[i]) % 2 else 1

    def mobius_recursive(self, u, w) -> int:
        """Moebius function by ``mu(u,u)=1``, ``mu(u,w) = -sum_{u<=v<w} mu(u,v)``."""
        i, j = self.idx(u), self.idx(w)
        rows = self._mobius_rows
        if i not in rows:
            row = {}
            up = self.above[i]
            for k in _bits(up):  # canonical order is a linear extension
                if k == i:
                    row[k] = 1
                else:
                    row[k] = -sum(row[x] for x in _bits(up & self.below[k] & ~(1 << k)))
            rows[i] = row
        return rows[i].get(j, 0)


def enumerate_iota(ctx: GroupContext) -> TwistedPoset:
    """Breadth-first orbit of the identity under ``u -> u * s``."""
    ctx.check_capacity()
    seen = {ctx.identity}
    queue = deque([ctx.identity])
    while queue:
        u = queue.popleft()
        for s in ctx.generators:
            v = twist(ctx, u, s)
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return TwistedPoset(ctx, list(seen))


def direct_iota(ctx: GroupContext) -> set:
    """``{theta(x^-1) x : x in W}`` by brute force (oracle for ``enumerate_iota``)."""
    return {ctx.compose(ctx.theta(ctx.inverse(x)), x) for x in ctx.elements()}


def descents(poset: TwistedPoset, v) -> list[Element]:
    return [poset.ctx.generators[g] for g in poset.descents(v)]


def interval(poset: TwistedPoset, u, w) -> list[Element]:
    return [poset.elements[k] for k in poset.interval(u, w)]


def is_full_interval(poset: TwistedPoset, u, w) -> bool:
    return poset.is_full_interval(u, w)


def mobius(poset: TwistedPoset, u, w) -> int:
    """Closed-form Moebius value, cross-checked against the poset recursion."""
    closed = poset.mobius(u, w)
    rec = poset.mobius_recursive(u, w)
    if closed != rec:
        raise InvariantError(f"Moebius mismatch at ({u!r}, {w!r}): {closed} vs {rec}")
    return closed
