"""Parsing element selectors given on the command line.

Accepted forms:

* ``id`` / ``e`` and ``top`` (the maximum of the poset);
* a one-line permutation (``3412``, ``[1,2,...,10]``); in the diagonal model
  a single permutation ``a`` stands for ``(a, a^-1)`` and ``x|y`` is a pair;
* fixed-point-free cycle form ``(1 4)(2 3)`` (flip model; mapped by ``x -> w0 x``);
* a generator word ``s5s3s4``, ``word:5,3,4`` or ``5,3,4``.  Words are read
  as the product ``s_{i1} s_{i2} ...`` under the composition convention; if
  that is not a twisted identity the reversed reading is tried.
"""

from __future__ import annotations

import re

from . import fpf
from . import perm as P
from .twisted import TwistedPoset


class SelectorError(ValueError):
    pass


def parse_word(text: str) -> list[int] | None:
    t = text.strip()
    if t.startswith("word:"):
        body = t[5:]
        return [int(x) for x in re.split(r"[,\s.]+", body.strip()) if x]
    if re.fullmatch(r"(s\d+)+", t):
        return [int(x) for x in re.findall(r"s(\d+)", t)]
    if re.fullmatch(r"\d+([,.\s]+\d+)+", t):
        return [int(x) for x in re.split(r"[,.\s]+", t)]
    return None


def resolve_word(poset: TwistedPoset, word: list[int]) -> tuple[int, str]:
    """``(index, reading)`` where reading is ``"as written"`` or ``"reversed"``."""
    ctx = poset.ctx
    try:
        forward = ctx.from_word(word)
        backward = ctx.from_word(word[::-1])
    except ValueError as exc:
        raise SelectorError(str(exc)) from None
    if forward in poset.index:
        return poset.index[forward], "as written"
    if backward in poset.index:
        return poset.index[backward], "reversed"
    raise SelectorError(
        f"not a twisted identity: word {word} gives {ctx.to_string(forward)}, "
        f"reversed {ctx.to_string(backward)}")


def resolve(poset: TwistedPoset, text: str) -> tuple[int, str]:
    """Index of the selected twisted identity, with a note on how it was read."""
    ctx = poset.ctx
    t = text.strip()
    if t in ("id", "e"):
        return 0, "identity"
    if t == "top":
        return poset.top, "maximum"
    if t.startswith("("):
        if ctx.kind != "flip":
            raise SelectorError("cycle-form selectors need the flip model")
        try:
            x = P.from_cycles(t, ctx.m)
            u = fpf.from_fpf(ctx, x)
        except ValueError as exc:
            raise SelectorError(str(exc)) from None
        return _lookup(poset, u), "fixed-point-free involution"
    if "|" in t:
        try:
            u = ctx.from_string(t)
        except ValueError as exc:
            raise SelectorError(str(exc)) from None
        return _lookup(poset, u), "one-line"
    digits_ok = t.startswith("[") or (t.isdigit() and len(t) == ctx.m)
    if digits_ok:
        try:
            a = P.from_string(t)
        except ValueError:
            a = None
        if a is not None and len(a) == ctx.m:
            u = a if ctx.kind == "flip" else (a, P.inverse(a))
            return _lookup(poset, u), "one-line"
    word = parse_word(t)
    if word is None and t.isdigit():
        word = [int(c) for c in t]
    if word is None:
        raise SelectorError(f"cannot parse element selector {text!r}")
    return resolve_word(poset, word)


def _lookup(poset: TwistedPoset, u) -> int:
    if u not in poset.index:
        raise SelectorError(f"not a twisted identity: {poset.ctx.to_string(u)}")
    return poset.index[u]
