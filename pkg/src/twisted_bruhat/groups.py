"""The two Weyl-group-with-involution models.

``SymmetricFlip(2n)``: ``W = S_{2n}`` with ``theta(x) = w0 x w0``.
``DiagonalProduct(m)``: ``W = S_m x S_m`` with ``theta(x, y) = (y, x)``.

Elements are plain tuples: a one-line permutation for the flip model and a
pair of one-line permutations for the diagonal model.
"""

from __future__ import annotations

import itertools
import os
import re
from typing import Iterator, Union

from . import kernels
from . import perm as P
from .perm import Perm

Element = Union[Perm, tuple[Perm, Perm]]

DEFAULT_LIMITS = {"flip": 8, "diagonal": 5}


class CapacityError(ValueError):
    """The requested model is beyond the desk-scale bound."""


class ModelMismatchError(ValueError):
    pass


def size_limit(kind: str) -> int:
    env = os.environ.get("TWISTED_MAX_N")
    if env:
        return int(env)
    return DEFAULT_LIMITS[kind]


class GroupContext:
    """One concrete ``(W, theta)`` with cached generators and reflections.

    ``kind`` is ``"flip"`` or ``"diagonal"``; ``m`` is the ground set size
    of each permutation (``2n`` for the flip model).
    """

    def __init__(self, kind: str, m: int):
        if kind not in ("flip", "diagonal"):
            raise ValueError(f"unknown model kind {kind!r}")
        if m < 1:
            raise ValueError("ground set size must be positive")
        if kind == "flip" and (m < 2 or m % 2):
            raise ValueError("the flip model needs an even ground set size 2n >= 2")
        self.kind = kind
        self.m = m
        self.w0_perm = P.longest(m)
        e = P.identity(m)
        simples = [P.simple(m, i) for i in range(1, m)]
        transp = [P.transposition(m, a, b)
                  for a in range(1, m + 1) for b in range(a + 1, m + 1)]
        tlabels = [(a, b) for a in range(1, m + 1) for b in range(a + 1, m + 1)]
        if kind == "flip":
            self.identity: Element = e
            self.generators: list[Element] = simples
            self.reflections: list[Element] = transp
            self.reflection_labels = [f"({a},{b})" for a, b in tlabels]
            self.longest: Element = self.w0_perm
        else:
            self.identity = (e, e)
            self.generators = [(s, e) for s in simples] + [(e, s) for s in simples]
            self.reflections = [(t, e) for t in transp] + [(e, t) for t in transp]
            self.reflection_labels = ([f"({a},{b})|e" for a, b in tlabels]
                                      + [f"e|({a},{b})" for a, b in tlabels])
            self.longest = (self.w0_perm, self.w0_perm)
        self._reflection_index = {t: k for k, t in enumerate(self.reflections)}

    @classmethod
    def flip(cls, two_n: int) -> "GroupContext":
        return cls("flip", two_n)

    @classmethod
    def diagonal(cls, m: int) -> "GroupContext":
        return cls("diagonal", m)

    @classmethod
    def parse(cls, spec: str) -> "GroupContext":
        """Model from ``"flip:2n"`` or ``"diagonal:m"``."""
        match = re.fullmatch(r"\s*(flip|diagonal):(\d+)\s*", spec)
        if not match:
            raise ValueError(f"bad model spec {spec!r}; expected flip:<2n> or diagonal:<m>")
        return cls(match.group(1), int(match.group(2)))

    @property
    def name(self) -> str:
        return f"{self.kind}:{self.m}"

    def __repr__(self):
        return f"GroupContext({self.name!r})"

    def __eq__(self, other):
        return isinstance(other, GroupContext) and (self.kind, self.m) == (other.kind, other.m)

    def __hash__(self):
        return hash((self.kind, self.m))

    def check_capacity(self) -> None:
        limit = size_limit(self.kind)
        if self.m > limit:
            raise CapacityError(
                f"{self.name} exceeds the desk-scale bound (size {limit}); "
                "set TWISTED_MAX_N to override")

    # -- element plumbing -------------------------------------------------

    def validate(self, u) -> Element:
        if self.kind == "flip":
            if not (isinstance(u, tuple) and u and isinstance(u[0], int)):
                raise ModelMismatchError(f"{u!r} is not a flip-model element")
            if len(u) != self.m:
                raise ModelMismatchError(f"{u!r} has size {len(u)}, expected {self.m}")
            return P.check_perm(u)
        if not (isinstance(u, tuple) and len(u) == 2 and isinstance(u[0], tuple)):
            raise ModelMismatchError(f"{u!r} is not a diagonal-model pair")
        if len(u[0]) != self.m or len(u[1]) != self.m:
            raise ModelMismatchError(f"pair {u!r} does not act on {self.m} points")
        return (P.check_perm(u[0]), P.check_perm(u[1]))

    def compose(self, u: Element, v: Element) -> Element:
        if self.kind == "flip":
            if len(u) != self.m or len(v) != self.m or not isinstance(u[0], int) \
                    or not isinstance(v[0], int):
                raise ModelMismatchError("compose: operands are not flip-model elements")
            return P.compose(u, v)
        if len(u) != 2 or len(v) != 2 or not isinstance(u[0], tuple) \
                or not isinstance(v[0], tuple):
            raise ModelMismatchError("compose: operands are not diagonal-model pairs")
        return (P.compose(u[0], v[0]), P.compose(u[1], v[1]))

    def inverse(self, u: Element) -> Element:
        if self.kind == "flip":
            return P.inverse(u)
        return (P.inverse(u[0]), P.inverse(u[1]))

    def theta(self, u: Element) -> Element:
        if self.kind == "flip":
            w0 = self.w0_perm
            return P.compose(P.compose(w0, u), w0)
        return (u[1], u[0])

    def length(self, u: Element) -> int:
        if self.kind == "flip":
            return kernels.inversions(u)
        return kernels.inversions(u[0]) + kernels.inversions(u[1])

    def components(self, u: Element) -> tuple[Perm, ...]:
        return (u,) if self.kind == "flip" else u

    def bruhat_leq(self, u: Element, v: Element) -> bool:
        """Ambient Bruhat order on ``W`` via dot counts; product order for pairs."""
        m = self.m
        for a, b in zip(self.components(u), self.components(v)):
            if len(a) != m or len(b) != m:
                raise ModelMismatchError("bruhat_leq: size mismatch")
            if not kernels.leq_table(kernels.pack_dots([a], m), 1,
                                     kernels.pack_dots([b], m), 1, m * m)[0]:
                return False
        return True

    def elements(self) -> Iterator[Element]:
        """All of ``W`` (in lexicographic order)."""
        if self.kind == "flip":
            yield from P.all_perms(self.m)
        else:
            perms = list(P.all_perms(self.m))
            yield from itertools.product(perms, perms)

    def twisted_involutions(self) -> list[Element]:
        """Filter ``W`` for ``theta(x) == x^-1``."""
        return [x for x in self.elements() if self.theta(x) == self.inverse(x)]

    def to_string(self, u: Element) -> str:
        if self.kind == "flip":
            return P.to_string(u)
        return P.to_string(u[0]) + "|" + P.to_string(u[1])

    def from_string(self, text: str) -> Element:
        if self.kind == "flip":
            return self.validate(P.from_string(text))
        if "|" not in text:
            raise ValueError(f"diagonal-model elements are written 'x|y', got {text!r}")
        a, b = text.split("|", 1)
        return self.validate((P.from_string(a), P.from_string(b)))

    def from_word(self, word) -> Element:
        """Product of generators ``generators[i-1]`` for ``i`` in word, left to right."""
        u = self.identity
        for i in word:
            if not 1 <= i <= len(self.generators):
                raise ValueError(f"generator index {i} out of range for {self.name}")
            u = self.compose(u, self.generators[i - 1])
        return u

    def reflection_index(self, t: Element) -> int:
        return self._reflection_index[t]
