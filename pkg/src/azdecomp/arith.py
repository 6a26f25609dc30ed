"""Exact integer arithmetic: Bezout witnesses, root-of-unity exponents, periods."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

import numpy as np


class NotCoprime(ValueError):
    """Raised when two degrees that must be coprime share a factor."""


class WrongPeriod(ValueError):
    """Raised when a Brauer class does not have the period a construction needs."""


def ext_gcd(x: int, y: int) -> tuple[int, int, int]:
    """Return ``(g, s, t)`` with ``s*x + t*y == g == gcd(x, y)``.

    When ``x`` divides ``y`` the trivial combination ``(x, 1, 0)`` is returned.
    """
    if x < 1 or y < 1:
        raise ValueError(f"ext_gcd needs positive integers, got {x}, {y}")
    if y % x == 0:
        return x, 1, 0
    old_r, r = x, y
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return old_r, old_s, old_t


@dataclass(frozen=True)
class BezoutWitness:
    """Positive ``u, v`` with ``lhs_pow*v - rhs_pow*u == sign``.

    ``lhs_pow`` is ``(bn)**(n+1)`` and ``rhs_pow`` is ``(am)**(m+1)``.
    """

    u: int
    v: int
    sign: int
    lhs_pow: int
    rhs_pow: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")
        if self.u <= 0 or self.v <= 0:
            raise ValueError("Bezout coefficients must be positive")

    def holds(self) -> bool:
        return self.lhs_pow * self.v - self.rhs_pow * self.u == self.sign


def _smallest_positive_v(p: int, q: int, target: int) -> tuple[int, int]:
    # smallest v >= 1 with p*v - q*u == target for some u >= 1
    if q == 1:
        v = 1
    else:
        v = (target * pow(p, -1, q)) % q or q
    while (p * v - target) // q <= 0:
        v += q
    return v, (p * v - target) // q


def bezout_uv(a: int, b: int, m: int, n: int) -> BezoutWitness:
    """Canonical positive ``(u, v)`` with ``(bn)^(n+1) v - (am)^(m+1) u = +-1``.

    The witness with the smallest ``v`` is returned; ``+1`` wins a tie.
    """
    for name, val in zip("abmn", (a, b, m, n)):
        if val < 1:
            raise ValueError(f"{name} must be a positive integer, got {val}")
    am, bn = a * m, b * n
    if gcd(am, bn) != 1:
        raise NotCoprime(f"gcd(am, bn) = gcd({am}, {bn}) = {gcd(am, bn)} != 1")
    p = bn ** (n + 1)
    q = am ** (m + 1)
    v_plus, u_plus = _smallest_positive_v(p, q, 1)
    v_minus, u_minus = _smallest_positive_v(p, q, -1)
    if v_plus <= v_minus:
        return BezoutWitness(u_plus, v_plus, 1, p, q)
    return BezoutWitness(u_minus, v_minus, -1, p, q)


def crt_merge(p: int, q: int, m: int, n: int) -> int:
    """Exponent mod ``mn`` of ``exp(2*pi*i*p/m) * exp(2*pi*i*q/n)``."""
    if m < 1 or n < 1:
        raise ValueError("orders must be positive")
    return (n * p + m * q) % (m * n)


@dataclass(frozen=True)
class BrauerClass:
    """An element ``value`` of the cyclic group ``Z/modulus``."""

    modulus: int
    value: int

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError(f"modulus must be positive, got {self.modulus}")
        if not 0 <= self.value < self.modulus:
            raise ValueError(f"value {self.value} not reduced mod {self.modulus}")

    def __mul__(self, k: int) -> BrauerClass:
        return BrauerClass(self.modulus, (k * self.value) % self.modulus)

    __rmul__ = __mul__

    def __add__(self, other: BrauerClass) -> BrauerClass:
        if other.modulus != self.modulus:
            raise ValueError("classes live in different groups")
        return BrauerClass(self.modulus, (self.value + other.value) % self.modulus)

    @property
    def period(self) -> int:
        return period(self)


def period(c: BrauerClass) -> int:
    """Additive order of ``c.value`` in ``Z/c.modulus``."""
    return c.modulus // gcd(c.value, c.modulus)


def periods(modulus: int, values) -> np.ndarray:
    """Vectorized :func:`period` for many residues of the same modulus."""
    values = np.asarray(values, dtype=np.int64) % modulus
    return modulus // np.gcd(values, modulus)
