"""Dense integer polynomials in ``q`` with exact (arbitrary-size) coefficients."""

from __future__ import annotations

import re
from typing import Iterable


class IntPolynomial:
    """Immutable; ``coeffs[k]`` is the coefficient of ``q^k``, trailing zeros trimmed."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    def __setattr__(self, name, value):
        raise AttributeError("IntPolynomial is immutable")

    @classmethod
    def constant(cls, c: int) -> "IntPolynomial":
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "IntPolynomial":
        if k < 0:
            raise ValueError("negative exponent")
        return cls([0] * k + [c])

    @property
    def degree(self) -> int:
        """Degree, ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPolynomial.constant(other)
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        if isinstance(other, int):
            other = IntPolynomial.constant(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(self[k] + other[k] for k in range(n))

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        if isinstance(other, int):
            other = IntPolynomial.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if not self.coeffs or not other.coeffs:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def scale(self, c: int) -> "IntPolynomial":
        return IntPolynomial(c * x for x in self.coeffs)

    def shift(self, k: int) -> "IntPolynomial":
        """Multiply by ``q^k``."""
        if k < 0:
            raise ValueError("negative shift")
        if not self.coeffs:
            return self
        return IntPolynomial((0,) * k + self.coeffs)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def at_one(self) -> int:
        return sum(self.coeffs)

    def derivative_at_one(self) -> int:
        return sum(k * c for k, c in enumerate(self.coeffs))

    def constant_term(self) -> int:
        return self[0]

    def reciprocal(self, k: int) -> "IntPolynomial":
        """``q^k p(1/q)``; requires ``k >= deg p``."""
        if k < self.degree:
            raise ValueError(f"reciprocal transform needs k >= {self.degree}, got {k}")
        return IntPolynomial(self[k - i] for i in range(k + 1))

    def nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    # -- text forms ---------------------------------------------------------

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self):
        """Conventional form, highest power first: ``q^2 - q``."""
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                power = "q" if k == 1 else f"q^{k}"
                body = power if mag == 1 else f"{mag}*{power}"
            if not terms:
                terms.append(body if c > 0 else f"-{body}")
            else:
                terms.append(("+ " if c > 0 else "- ") + body)
        return " ".join(terms) if terms else "0"

    def serialize(self) -> str:
        """Sparse ascending form ``c0 + c1*q + c2*q^2``, zero terms omitted."""
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                terms.append(str(c) if k == 0 else f"{c}*q" if k == 1 else f"{c}*q^{k}")
        return " + ".join(terms) if terms else "0"

    _TERM = re.compile(r"^(-?\d+)(?:\*q(?:\^(\d+))?)?$")

    @classmethod
    def parse(cls, text: str) -> "IntPolynomial":
        """Inverse of :meth:`serialize`."""
        text = text.strip()
        if text == "0":
            return cls()
        coeffs: dict[int, int] = {}
        for term in text.split(" + "):
            m = cls._TERM.match(term.strip())
            if not m:
                raise ValueError(f"bad polynomial term {term!r}")
            k = 0 if "q" not in term else int(m.group(2) or 1)
            coeffs[k] = coeffs.get(k, 0) + int(m.group(1))
        return cls(coeffs.get(k, 0) for k in range(max(coeffs) + 1))

    def to_json(self) -> dict[str, int]:
        return {str(k): c for k, c in enumerate(self.coeffs) if c}

    @classmethod
    def from_json(cls, data: dict) -> "IntPolynomial":
        if not data:
            return cls()
        items = {int(k): int(v) for k, v in data.items()}
        return cls(items.get(k, 0) for k in range(max(items) + 1))


ZERO = IntPolynomial()
ONE = IntPolynomial.constant(1)
Q = IntPolynomial.monomial(1)
Q_MINUS_ONE = IntPolynomial((-1, 1))
