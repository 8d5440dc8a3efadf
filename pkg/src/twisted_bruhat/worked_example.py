"""Locate and report the rank-4 singular example in ``SymmetricFlip(6)``.

The element is found by its fingerprint rather than by a word: rank 4, and
``BG(w)`` has exactly two vertices of degree 5, namely the identity and
``theta(s1) s1``, with every other vertex of degree 4.
"""

from __future__ import annotations

from .bruhat_graph import build_bg
from .groups import GroupContext
from .selectors import resolve_word
from .twisted import TwistedPoset, enumerate_iota, twist

EXAMPLE_WORD = [5, 3, 4, 5, 1, 2, 3, 1]


def candidates(poset: TwistedPoset) -> list[int]:
    ctx = poset.ctx
    s1 = ctx.generators[0]
    special = {0, poset.index[twist(ctx, ctx.identity, s1)]}
    found = []
    for w in range(poset.size):
        if poset.rank[w] != 4:
            continue
        degrees = build_bg(poset, w).degrees()
        fives = {v for v, d in degrees.items() if d == 5}
        rest = {d for v, d in degrees.items() if v not in fives}
        if fives == special and rest == {4}:
            found.append(w)
    return found


def locate(poset: TwistedPoset | None = None) -> tuple[TwistedPoset, int]:
    poset = poset or enumerate_iota(GroupContext.flip(6))
    if poset.ctx != GroupContext.flip(6):
        raise ValueError("the worked example lives in flip:6")
    found = candidates(poset)
    if len(found) != 1:
        raise AssertionError(f"expected a unique fingerprint match, found {len(found)}")
    return poset, found[0]


def word_reading(poset: TwistedPoset) -> tuple[int, str]:
    """Where the example's generator word lands, trying both reading orders."""
    return resolve_word(poset, EXAMPLE_WORD)
