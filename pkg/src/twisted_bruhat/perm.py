"""Permutations of ``{1..m}`` stored as one-line tuples.

Entry ``p[k-1]`` is the image of ``k``.  Products follow
``compose(u, v)(k) == u(v(k))``, so right multiplication by a simple
reflection ``s_i`` swaps positions ``i`` and ``i+1`` of the one-line tuple.
"""

from __future__ import annotations

import itertools
import re
from typing import Iterator, Sequence

Perm = tuple[int, ...]


def check_perm(images: Sequence[int]) -> Perm:
    p = tuple(int(x) for x in images)
    if not p:
        raise ValueError("a permutation needs at least one point")
    if sorted(p) != list(range(1, len(p) + 1)):
        raise ValueError(f"{list(p)} is not a permutation of 1..{len(p)}")
    return p


def identity(m: int) -> Perm:
    return tuple(range(1, m + 1))


def longest(m: int) -> Perm:
    return tuple(range(m, 0, -1))


def compose(u: Perm, v: Perm) -> Perm:
    if len(u) != len(v):
        raise ValueError(f"size mismatch: {len(u)} vs {len(v)}")
    return tuple(u[x - 1] for x in v)


def inverse(u: Perm) -> Perm:
    inv = [0] * len(u)
    for k, x in enumerate(u, 1):
        inv[x - 1] = k
    return tuple(inv)


def transposition(m: int, a: int, b: int) -> Perm:
    if not (1 <= a <= m and 1 <= b <= m) or a == b:
        raise ValueError(f"bad transposition ({a},{b}) in S_{m}")
    p = list(range(1, m + 1))
    p[a - 1], p[b - 1] = b, a
    return tuple(p)


def simple(m: int, i: int) -> Perm:
    return transposition(m, i, i + 1)


def length(u: Perm) -> int:
    """Number of inversions."""
    n = len(u)
    return sum(1 for a in range(n) for b in range(a + 1, n) if u[a] > u[b])


def dot_count(u: Perm, i: int, j: int) -> int:
    """``|{x <= i : u(x) >= j}|``, the dots weakly northwest of ``(i, j)``."""
    m = len(u)
    if not (1 <= i <= m and 1 <= j <= m):
        raise ValueError(f"({i},{j}) out of range for size {m}")
    return sum(1 for x in range(i) if u[x] >= j)


def right_descents(u: Perm) -> list[int]:
    return [i for i in range(1, len(u)) if u[i - 1] > u[i]]


def from_word(m: int, word: Sequence[int]) -> Perm:
    """Product ``s_{w1} s_{w2} ... s_{wk}`` under the composition convention."""
    p = list(range(1, m + 1))
    for i in word:
        if not 1 <= i < m:
            raise ValueError(f"generator index {i} out of range for S_{m}")
        p[i - 1], p[i] = p[i], p[i - 1]
    return tuple(p)


def reduced_word(u: Perm) -> list[int]:
    """One reduced word, obtained by repeatedly stripping the first right descent."""
    p = list(u)
    word: list[int] = []
    while True:
        for i in range(1, len(p)):
            if p[i - 1] > p[i]:
                p[i - 1], p[i] = p[i], p[i - 1]
                word.append(i)
                break
        else:
            return word[::-1]


def all_perms(m: int) -> Iterator[Perm]:
    return itertools.permutations(range(1, m + 1))


def cycles(u: Perm) -> list[tuple[int, ...]]:
    seen = set()
    out = []
    for start in range(1, len(u) + 1):
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        x = u[start - 1]
        while x != start:
            cyc.append(x)
            seen.add(x)
            x = u[x - 1]
        out.append(tuple(cyc))
    return out


def to_string(u: Perm) -> str:
    if len(u) <= 9:
        return "".join(str(x) for x in u)
    return "[" + ",".join(str(x) for x in u) + "]"


def from_string(text: str) -> Perm:
    text = text.strip()
    if text.startswith("["):
        if not text.endswith("]"):
            raise ValueError(f"unterminated permutation {text!r}")
        body = text[1:-1].strip()
        return check_perm([int(x) for x in body.split(",")] if body else [])
    if not text.isdigit():
        raise ValueError(f"not a one-line permutation: {text!r}")
    return check_perm([int(c) for c in text])


def cycle_string(u: Perm) -> str:
    """Cycle notation without fixed points, e.g. ``(1 4)(2 3)``."""
    parts = [c for c in cycles(u) if len(c) > 1]
    if not parts:
        return "()"
    return "".join("(" + " ".join(str(x) for x in c) + ")" for c in parts)


_CYCLE = re.compile(r"\(([^()]*)\)")


def from_cycles(text: str, m: int) -> Perm:
    p = list(range(1, m + 1))
    text = text.strip()
    if _CYCLE.sub("", text).strip():
        raise ValueError(f"not cycle notation: {text!r}")
    used = set()
    for body in _CYCLE.findall(text):
        pts = [int(x) for x in body.replace(",", " ").split()]
        if len(pts) < 2:
            continue
        for a, b in zip(pts, pts[1:] + pts[:1]):
            if not 1 <= a <= m or a in used:
                raise ValueError(f"bad cycle point {a} in {text!r}")
            p[a - 1] = b
        used.update(pts)
    return check_perm(p)
