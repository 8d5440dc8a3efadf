"""Classical Kazhdan-Lusztig R- and P-polynomials for ``S_n``, ``n <= 5``.

Deliberately independent of the twisted machinery: Bruhat order here uses
the tableau criterion (sorted prefixes) instead of dot counts, and the
recursions act on plain permutations.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .groups import CapacityError
from .poly import ONE, ZERO, IntPolynomial

MAX_N = 5


def _length(u) -> int:
    return sum(1 for a, b in itertools.combinations(u, 2) if a > b)


def tableau_leq(u, v) -> bool:
    """Bruhat ``u <= v``: every sorted prefix of ``u`` is entrywise below that of ``v``."""
    for k in range(1, len(u)):
        if any(a > b for a, b in zip(sorted(u[:k]), sorted(v[:k]))):
            return False
    return True


def _swap(u, i):
    x = list(u)
    x[i], x[i + 1] = x[i + 1], x[i]
    return tuple(x)


class ClassicalKL:
    def __init__(self, n: int):
        if n > MAX_N:
            raise CapacityError(f"classical oracle limited to n <= {MAX_N}")
        self.n = n
        self.perms = sorted(itertools.permutations(range(1, n + 1)),
                            key=lambda p: (_length(p), p))
        self.ell = {p: _length(p) for p in self.perms}
        self._leq = {}
        self.r = lru_cache(maxsize=None)(self._r)
        self._p: dict = {}

    def leq(self, u, v) -> bool:
        key = (u, v)
        if key not in self._leq:
            self._leq[key] = tableau_leq(u, v)
        return self._leq[key]

    def _r(self, u, v) -> IntPolynomial:
        if u == v:
            return ONE
        if not self.leq(u, v):
            return ZERO
        i = next(k for k in range(self.n - 1) if v[k] > v[k + 1])
        us, vs = _swap(u, i), _swap(v, i)
        if self.ell[us] < self.ell[u]:
            return self.r(us, vs)
        q = IntPolynomial((0, 1))
        return q * self.r(us, vs) + IntPolynomial((-1, 1)) * self.r(u, vs)

    def p(self, u, v) -> IntPolynomial:
        """From ``q^{l(v)-l(u)} P_{u,v}(1/q) = sum_{u<=x<=v} R_{u,x} P_{x,v}``."""
        if not self.leq(u, v):
            return ZERO
        key = (u, v)
        if key in self._p:
            return self._p[key]
        if u == v:
            self._p[key] = ONE
            return ONE
        d = self.ell[v] - self.ell[u]
        rhs = ZERO
        for x in self.perms:
            if x != u and self.leq(u, x) and self.leq(x, v):
                rhs = rhs + self.r(u, x) * self.p(x, v)
        # rhs = q^d P(1/q) - P(q); the high half of rhs is the reversed P
        coeffs = [rhs[d - e] for e in range(d) if 2 * e < d]
        result = IntPolynomial(coeffs)
        if result.reciprocal(d) - result != rhs:
            raise AssertionError(f"classical KL system inconsistent at {u}, {v}")
        self._p[key] = result
        return result

    def smooth_locus(self, v) -> set:
        """Carrell-Peterson: ``u`` smooth in ``X_v`` iff ``P_{x,v} = 1`` for all ``u <= x <= v``."""
        lower = [x for x in self.perms if self.leq(x, v)]
        bad = [x for x in lower if self.p(x, v) != ONE]
        return {u for u in lower if not any(self.leq(u, x) for x in bad)}


_CACHE: dict[int, ClassicalKL] = {}


def classical_kl_oracle(u, v) -> tuple[IntPolynomial, IntPolynomial]:
    """Classical ``(R_{u,v}, P_{u,v})`` for permutations in one-line form."""
    if len(u) != len(v):
        raise ValueError("permutations of different sizes")
    n = len(u)
    if n > MAX_N:
        raise CapacityError(f"classical oracle limited to n <= {MAX_N}")
    if n not in _CACHE:
        _CACHE[n] = ClassicalKL(n)
    kl = _CACHE[n]
    return kl.r(tuple(u), tuple(v)), kl.p(tuple(u), tuple(v))


def get(n: int) -> ClassicalKL:
    if n not in _CACHE:
        _CACHE[n] = ClassicalKL(n)
    return _CACHE[n]
