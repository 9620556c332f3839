"""Truncated multivariate Taylor arithmetic (jets) with float coefficients.

A jet stores the Taylor coefficients f_m = (d^m f)(x0) / m! of a smooth
function around a base point, for all multi-indices m with |m| <= order.
Sums, products and real powers of jets then yield exact derivative
values of composite expressions, with no step-size error; this is what
the kernel derivative tables are built from (finite differences serve
only as an independent cross-check).
"""

from __future__ import annotations

import math
from itertools import combinations


def multi_indices(nvars: int, total: int) -> list[tuple[int, ...]]:
    """All multi-indices over nvars variables with |m| == total."""
    out = []
    # stars and bars over the ordered compositions
    for bars in combinations(range(total + nvars - 1), nvars - 1):
        prev = -1
        parts = []
        for b in bars:
            parts.append(b - prev - 1)
            prev = b
        parts.append(total + nvars - 2 - prev)
        out.append(tuple(parts))
    return out


def multi_indices_upto(nvars: int, order: int) -> list[tuple[int, ...]]:
    out = []
    for k in range(order + 1):
        out.extend(multi_indices(nvars, k))
    return out


def factorial_prod(m: tuple[int, ...]) -> int:
    out = 1
    for k in m:
        out *= math.factorial(k)
    return out


class Jet:
    """Taylor coefficients of one scalar function, truncated at `order`."""

    __slots__ = ("nvars", "order", "terms")

    def __init__(self, nvars: int, order: int, terms: dict | None = None):
        if nvars < 1 or order < 0:
            raise ValueError("need nvars >= 1 and order >= 0")
        self.nvars = nvars
        self.order = order
        self.terms = {} if terms is None else terms

    @classmethod
    def constant(cls, nvars: int, order: int, value: float) -> "Jet":
        return cls(nvars, order, {(0,) * nvars: float(value)} if value else {})

    @classmethod
    def variable(cls, nvars: int, order: int, i: int, value: float) -> "Jet":
        """The coordinate function x_i (0-based) expanded at x_i = value."""
        if not 0 <= i < nvars:
            raise ValueError(f"variable index {i} out of range")
        terms = {}
        if value:
            terms[(0,) * nvars] = float(value)
        if order >= 1:
            unit = tuple(1 if j == i else 0 for j in range(nvars))
            terms[unit] = 1.0
        return cls(nvars, order, terms)

    def _check(self, other: "Jet"):
        if self.nvars != other.nvars or self.order != other.order:
            raise ValueError("jet shape mismatch")

    def value(self) -> float:
        return self.terms.get((0,) * self.nvars, 0.0)

    def derivative(self, m: tuple[int, ...]) -> float:
        """(d^m f)(x0): Taylor coefficient rescaled by m!."""
        if len(m) != self.nvars:
            raise ValueError("multi-index length mismatch")
        if sum(m) > self.order:
            raise ValueError(f"derivative order {sum(m)} exceeds jet order {self.order}")
        return self.terms.get(tuple(m), 0.0) * factorial_prod(tuple(m))

    def __add__(self, other):
        if isinstance(other, Jet):
            self._check(other)
            out = dict(self.terms)
            for m, c in other.terms.items():
                out[m] = out.get(m, 0.0) + c
            return Jet(self.nvars, self.order, out)
        if isinstance(other, (int, float)):
            return self + Jet.constant(self.nvars, self.order, other)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return Jet(self.nvars, self.order, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (Jet, int, float)):
            return self + (-other if isinstance(other, Jet) else -float(other))
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Jet):
            self._check(other)
            out: dict[tuple[int, ...], float] = {}
            order = self.order
            for ma, ca in self.terms.items():
                da = sum(ma)
                for mb, cb in other.terms.items():
                    if da + sum(mb) > order:
                        continue
                    m = tuple(x + y for x, y in zip(ma, mb))
                    out[m] = out.get(m, 0.0) + ca * cb
            return Jet(self.nvars, self.order, out)
        if isinstance(other, (int, float)):
            k = float(other)
            return Jet(self.nvars, self.order, {m: c * k for m, c in self.terms.items()})
        return NotImplemented

    __rmul__ = __mul__

    def power(self, exponent: float) -> "Jet":
        """Real power of a jet whose value is positive, via the binomial series.

        Writes self = u0 (1 + w) with w the zero-value part; the series
        terminates exactly at the truncation order.
        """
        u0 = self.value()
        if u0 <= 0.0:
            raise ValueError("jet power needs a positive value at the base point")
        w = (self - u0) * (1.0 / u0)
        out = Jet.constant(self.nvars, self.order, 1.0)
        acc = Jet.constant(self.nvars, self.order, 1.0)
        coeff = 1.0
        for k in range(1, self.order + 1):
            coeff *= (exponent - (k - 1)) / k
            acc = acc * w
            out = out + acc * coeff
        return out * (u0 ** exponent)


def jet_lift(point, order: int) -> list[Jet]:
    """Coordinate jets of a point: the identity map, Taylor-expanded there."""
    comps = [float(c) for c in point]
    n = len(comps)
    return [Jet.variable(n, order, i, comps[i]) for i in range(n)]
