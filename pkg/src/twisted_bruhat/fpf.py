"""Fixed-point-free involutions ``F_{2n}`` and the injection between edge sets.

Works natively on ``F_{2n}`` with the conjugation action
``u * t = t^-1 u t`` (written ``star``) and the order ``preceq``, the dual of
Bruhat order restricted to ``F_{2n}``; its minimum is ``w0``.  Transpositions
are normalized pairs ``(a, b)`` with ``a < b``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from . import perm as P
from .groups import GroupContext
from .perm import Perm

MAX_2N = 8

Transposition = tuple[int, int]


def check_fpf(images) -> Perm:
    u = P.check_perm(images)
    for k, x in enumerate(u, 1):
        if x == k or u[x - 1] != k:
            raise ValueError(f"{P.to_string(u)} is not a fixed-point-free involution")
    return u


def transp(a: int, b: int) -> Transposition:
    if a == b:
        raise ValueError("a transposition needs two distinct points")
    return (a, b) if a < b else (b, a)


def supp(t: Transposition) -> set[int]:
    return {t[0], t[1]}


def star(u: Perm, t: Transposition) -> Perm:
    """``t^-1 u t``: relabel the 2-cycles of ``u`` by swapping ``t``'s points."""
    a, b = t
    m = len(u)
    if not (1 <= a <= m and 1 <= b <= m):
        raise ValueError(f"{t} does not act on 1..{m}")

    def sw(x):
        return b if x == a else a if x == b else x

    out = [0] * m
    for k, x in enumerate(u, 1):
        out[sw(k) - 1] = sw(x)
    return tuple(out)


def conj(t: Transposition, r: Transposition) -> Transposition:
    """``r t r`` as a transposition."""
    a, b = r

    def sw(x):
        return b if x == a else a if x == b else x

    return transp(sw(t[0]), sw(t[1]))


def all_fpf(two_n: int) -> list[Perm]:
    if two_n % 2 or two_n < 2:
        raise ValueError("F_{2n} needs an even positive size")
    if two_n > MAX_2N:
        raise ValueError(f"F_{{2n}} limited to 2n <= {MAX_2N}")
    out = []
    for u in P.all_perms(two_n):
        if all(x != k and u[x - 1] == k for k, x in enumerate(u, 1)):
            out.append(u)
    return out


def transpositions(two_n: int) -> list[Transposition]:
    return [(a, b) for a in range(1, two_n + 1) for b in range(a + 1, two_n + 1)]


@lru_cache(maxsize=None)
def _dots(u: Perm) -> tuple[int, ...]:
    m = len(u)
    return tuple(P.dot_count(u, i, j) for i in range(1, m + 1) for j in range(1, m + 1))


def fpf_preceq(u: Perm, w: Perm) -> bool:
    """``u preceq w`` iff every dot count of ``u`` is at least that of ``w``."""
    if len(u) != len(w):
        raise ValueError("size mismatch")
    return all(x >= y for x, y in zip(_dots(u), _dots(w)))


def fpf_prec(u: Perm, w: Perm) -> bool:
    return u != w and fpf_preceq(u, w)


def partner(u: Perm, t: Transposition) -> Transposition:
    """The other transposition ``t'`` with ``u star t' == u star t``: ``(u(a), u(b))``."""
    return transp(u[t[0] - 1], u[t[1] - 1])


# -- Bruhat graphs on F_{2n} --------------------------------------------------


class FpfGraph:
    """``BG(w)`` on ``I_w = {u : u preceq w}`` with edges ``{u, u star t}``."""

    def __init__(self, w: Perm):
        self.w = check_fpf(w)
        m = len(w)
        self.vertices = [u for u in all_fpf(m) if fpf_preceq(u, w)]
        vs = set(self.vertices)
        self.out: dict[Perm, set[frozenset]] = {u: set() for u in self.vertices}
        for u in self.vertices:
            for t in transpositions(m):
                v = star(u, t)
                if v != u and v in vs:
                    self.out[u].add(frozenset((u, v)))

    def contains(self, u: Perm) -> bool:
        return u in self.out

    def degree(self, u: Perm) -> int:
        return len(self.out[u])

    def edges(self) -> set[frozenset]:
        return set().union(*self.out.values()) if self.out else set()


def edge_transpositions(u: Perm, v: Perm) -> list[Transposition]:
    ts = [t for t in transpositions(len(u)) if star(u, t) == v]
    if u == v or len(ts) != 2:
        raise ValueError(f"{{{P.to_string(u)}, {P.to_string(v)}}} is not an edge")
    return ts


def _check_r(u: Perm, r: Transposition) -> tuple[int, int, int, int]:
    i, j = r
    if not fpf_prec(star(u, r), u):
        raise ValueError(f"u star r must be strictly below u for r={r}")
    return i, j, u[i - 1], u[j - 1]


def is_compatible(t: Transposition, u: Perm, r: Transposition) -> bool:
    i, j, a, b = _check_r(u, r)
    s = supp(t)
    return not (s & {a, b, i, j}) or bool(s & {i, j})


@dataclass(frozen=True)
class EdgeChoice:
    edge: frozenset
    t_e: Transposition
    tau_e: Transposition
    image_edge: frozenset


def _image(u: Perm, r: Transposition, w: Perm, t_e: Transposition) -> EdgeChoice:
    v = star(u, t_e)
    tau = conj(t_e, r) if fpf_preceq(star(v, r), w) else t_e
    ur = star(u, r)
    return EdgeChoice(frozenset((u, v)), t_e, tau, frozenset((ur, star(ur, tau))))


def epsilon_choice(u: Perm, r: Transposition, w: Perm, edge) -> EdgeChoice:
    """The map on one edge, with the lexicographically least compatible ``t_e``.

    When both transpositions of the edge are compatible the image under the
    other choice is computed too and must coincide.
    """
    if not fpf_preceq(u, w):
        raise ValueError("epsilon needs u preceq w")
    if u == P.longest(len(u)):
        raise ValueError("epsilon needs u != w0")
    _check_r(u, r)
    edge = frozenset(edge)
    if u not in edge or len(edge) != 2:
        raise ValueError("edge must be incident to u")
    (v,) = edge - {u}
    if not fpf_preceq(v, w):
        raise ValueError("edge is not in BG(w)")
    ts = edge_transpositions(u, v)
    good = [t for t in ts if is_compatible(t, u, r)]
    if not good:
        raise AssertionError(f"no compatible transposition for edge {sorted(edge)}")
    choices = [_image(u, r, w, t) for t in good]
    if len({c.image_edge for c in choices}) != 1:
        raise AssertionError(f"epsilon depends on the choice of t_e at {sorted(edge)}")
    return choices[0]


def epsilon(u: Perm, r: Transposition, w: Perm, edge) -> frozenset:
    return epsilon_choice(u, r, w, edge).image_edge


def orbit(u: Perm, t1: Transposition, t2: Transposition) -> set[Perm]:
    seen = {u}
    stack = [u]
    while stack:
        x = stack.pop()
        for t in (t1, t2):
            y = star(x, t)
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return seen


def orbit6_check(u: Perm, t1: Transposition, t2: Transposition, w: Perm) -> bool:
    """If five elements of the six-element orbit lie in ``I_w``, so does the sixth."""
    orb = orbit(u, t1, t2)
    if len(orb) != 6:
        raise ValueError(f"orbit has {len(orb)} elements, expected 6")
    inside = sum(1 for x in orb if fpf_preceq(x, w))
    return inside != 5


# -- the bridge to iota(theta) in the flip model ------------------------------


def to_fpf(ctx: GroupContext, u: Perm) -> Perm:
    """``u -> w0 u``; ``u`` must be a twisted identity of ``ctx``."""
    if ctx.kind != "flip":
        raise ValueError("the fpf bridge exists only for the flip model")
    x = P.compose(ctx.w0_perm, ctx.validate(u))
    try:
        return check_fpf(x)
    except ValueError:
        raise ValueError(f"{P.to_string(u)} is not a twisted identity") from None


def from_fpf(ctx: GroupContext, x: Perm) -> Perm:
    """``x -> w0 x`` for ``x`` in ``F_{2n}``."""
    if ctx.kind != "flip":
        raise ValueError("the fpf bridge exists only for the flip model")
    if len(x) != ctx.m:
        raise ValueError("size mismatch")
    return P.compose(ctx.w0_perm, check_fpf(x))


def cycle_pairs(u: Perm) -> list[tuple[int, int]]:
    return [(k, x) for k, x in enumerate(u, 1) if k < x]


def pairs_of_cycles(two_n: int):
    """All unordered transposition pairs, for exhaustive scans."""
    return itertools.combinations(transpositions(two_n), 2)
