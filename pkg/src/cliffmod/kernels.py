"""Fundamental solutions of iterated Dirac operators and their derivatives.

The base kernel on R^n \\ {0}, for integer 1 <= s < n, is

    q0(x) = x / |x|^{n+1-s}    (s odd)
    q0(x) = 1 / |x|^{n-s}      (s even),

a fundamental solution of D^s where D = sum_i e_i d/dx_i and D^2 is the
negative Laplacian.  Derivative kernels q_m = d^m q0 come from jet
arithmetic; central finite differences are provided as an independent
cross-check, never as the primary evaluation path.

On arguments that are products of nonzero vectors (Vahlen entries) the
kernel extends through reversion,

    q0(a) = reverse(a) / |a|^{n+1-s}   (s odd),

which agrees with the vector formula (vectors are fixed by reversion)
and is exactly multiplicative the reversed way around:
q0(a b) = q0(b) q0(a).  Extending by a/|a|^{n+1-s} instead would break
that identity already for a = e_1, b = e_2.
"""

from __future__ import annotations

import math

from .clifford import Multivector
from .jets import Jet, jet_lift

_DEFAULT_MAX_ORDER = 6


def _check_weight(s: int, n: int):
    if not isinstance(s, int) or not 1 <= s < n:
        raise ValueError(f"kernel weight must be an integer with 1 <= s < n, got s={s}, n={n}")


def q0(x: Multivector, s: int) -> Multivector:
    """Base kernel at a nonzero vector; float-valued."""
    n = x.dim
    _check_weight(s, n)
    if not x.is_vector() or x.is_zero():
        raise ValueError("q0 needs a nonzero grade-1 argument")
    r = x.norm()
    if s % 2:
        return x.to_float() * r ** float(-(n + 1 - s))
    return Multivector.scalar(n, r ** float(-(n - s)))


def q0_general(a: Multivector, s: int) -> Multivector:
    """Kernel on products of nonzero vectors (caller-asserted), via reversion."""
    n = a.dim
    _check_weight(s, n)
    r = a.norm()
    if r == 0.0:
        raise ValueError("q0_general needs a nonzero argument")
    if s % 2:
        return a.reverse().to_float() * r ** float(-(n + 1 - s))
    return Multivector.scalar(n, r ** float(-(n - s)))


def left_factor(a: Multivector, s: int) -> Multivector:
    """conjugate(reverse(q0(a))): the factor multiplying two-sided series
    from the left.  For even s this is q0(a) itself."""
    return q0_general(a, s).reverse().conjugate()


def kernel_multiplicativity_check(a: Multivector, b: Multivector, s: int) -> float:
    """| q0(a b) - q0(b) q0(a) |; zero up to roundoff on vector arguments."""
    return (q0_general(a * b, s) - q0_general(b, s) * q0_general(a, s)).norm()


class KernelJet:
    """All partial derivatives q_m at one point, up to a fixed total order.

    Builds the jet of |x|^{-beta} once; every q_m with |m| <= order is
    then a dictionary lookup.  Much cheaper than one finite-difference
    stencil per multi-index when whole derivative tables are needed.
    """

    def __init__(self, x: Multivector, s: int, order: int):
        n = x.dim
        _check_weight(s, n)
        if order < 0:
            raise ValueError("order must be >= 0")
        if not x.is_vector() or x.is_zero():
            raise ValueError("kernel jets need a nonzero grade-1 base point")
        self.dim = n
        self.s = s
        self.order = order
        coords = jet_lift(x.vector_components(), order)
        r_sq = None
        for c in coords:
            sq = c * c
            r_sq = sq if r_sq is None else r_sq + sq
        if s % 2:
            g = r_sq.power(-(n + 1 - s) / 2.0)
            self._components = [c * g for c in coords]
        else:
            self._components = [r_sq.power(-(n - s) / 2.0)]

    def q_m(self, m) -> Multivector:
        """The derivative kernel d^m q0 at the base point."""
        m = tuple(m)
        if len(m) != self.dim:
            raise ValueError(f"multi-index length {len(m)} != dim {self.dim}")
        if any(k < 0 for k in m):
            raise ValueError("multi-index entries must be >= 0")
        if self.s % 2:
            return Multivector.vector([comp.derivative(m) for comp in self._components])
        return Multivector.scalar(self.dim, self._components[0].derivative(m))


def q_m(x: Multivector, m, s: int, max_order: int = _DEFAULT_MAX_ORDER) -> Multivector:
    """One derivative kernel d^m q0(x); |m| is capped by max_order."""
    m = tuple(m)
    total = sum(m)
    if total > max_order:
        raise ValueError(f"|m| = {total} exceeds the configured cap {max_order}")
    return KernelJet(x, s, total).q_m(m)


# ---- finite-difference oracles ---------------------------------------------


def dirac_fd(f, x: Multivector, h: float) -> Multivector:
    """Central-difference Dirac operator sum_i e_i (f(x+h e_i) - f(x-h e_i)) / 2h."""
    if not x.is_vector():
        raise ValueError("dirac_fd needs a grade-1 base point")
    if not h > 0:
        raise ValueError("step must be positive")
    n = x.dim
    out = Multivector.zero(n)
    for i in range(1, n + 1):
        e = Multivector.basis(n, i)
        step = e * h
        diff = f(x + step) - f(x - step)
        out = out + e * diff * (0.5 / h)
    return out


def dirac_power_fd(f, x: Multivector, h: float, power: int,
                   min_last_coord: float | None = None) -> Multivector:
    """Nested central-difference D^power f at x.

    The stencil reaches coordinates x_i +- power*h; when f is only
    defined on the upper half-space pass min_last_coord=0.0 and the
    call refuses stencils that would cross it.
    """
    if power < 1:
        raise ValueError("power must be >= 1")
    if min_last_coord is not None:
        if float(x.component(x.dim)) - power * h <= min_last_coord:
            raise ValueError("finite-difference stencil would leave the domain")
    if power == 1:
        return dirac_fd(f, x, h)
    return dirac_fd(lambda y: dirac_power_fd(f, y, h, power - 1), x, h)


def fd_partial(f, x: Multivector, m, h: float, richardson: bool = False) -> Multivector:
    """Nested central differences for d^m f at x (the jet cross-check).

    With richardson=True the h and h/2 stencils are combined to cancel
    the leading h^2 error term.
    """
    m = tuple(m)
    if richardson:
        coarse = fd_partial(f, x, m, h)
        fine = fd_partial(f, x, m, h / 2.0)
        return (fine * 4.0 - coarse) * (1.0 / 3.0)
    i = next((k for k, v in enumerate(m) if v), None)
    if i is None:
        out = f(x)
        return out.to_float() if isinstance(out, Multivector) else Multivector.scalar(x.dim, float(out))
    rest = tuple(v - 1 if k == i else v for k, v in enumerate(m))
    e = Multivector.basis(x.dim, i + 1)
    step = e * h
    hi = fd_partial(f, x + step, rest, h)
    lo = fd_partial(f, x - step, rest, h)
    return (hi - lo) * (0.5 / h)
