"""Low-degree homotopy groups of unitary groups, their central quotients and
classifying spaces.

Only the range ``i <= 2 * degree`` is tabulated; asking beyond it raises
:class:`OutOfStableRange` instead of extrapolating.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from .fgab import FgabGroup, TRIVIAL, Z

FAMILIES = ("U", "SU", "SUquot", "Uquot", "PU")


class OutOfStableRange(ValueError):
    """A homotopy degree lies outside the range where closed forms are known."""


@dataclass(frozen=True)
class SpaceSpec:
    """One of ``U_n``, ``SU_n``, ``SU_{am}/mu_m``, ``U_{am}/mu_m``, ``PU_n``,
    or its classifying space when ``classifying`` is set."""

    family: str
    n: int | None = None
    a: int | None = None
    m: int | None = None
    classifying: bool = False

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; expected one of {FAMILIES}")
        if self.family in ("U", "SU", "PU"):
            if self.n is None or self.n < 1:
                raise ValueError(f"{self.family} needs a positive n")
        else:
            if self.a is None or self.m is None or self.a < 1 or self.m < 1:
                raise ValueError(f"{self.family} needs positive a and m")

    @property
    def degree(self) -> int:
        if self.family in ("U", "SU", "PU"):
            return self.n
        return self.a * self.m

    def loop_group(self) -> SpaceSpec:
        return SpaceSpec(self.family, self.n, self.a, self.m, classifying=False)

    def __str__(self) -> str:
        if self.family in ("U", "SU", "PU"):
            s = f"{self.family}_{self.n}"
        else:
            base = "SU" if self.family == "SUquot" else "U"
            s = f"{base}_{self.degree}/mu_{self.m}"
        return f"B{s}" if self.classifying else s


def U(n: int) -> SpaceSpec:
    return SpaceSpec("U", n=n)


def SU(n: int) -> SpaceSpec:
    return SpaceSpec("SU", n=n)


def SUquot(a: int, m: int) -> SpaceSpec:
    return SpaceSpec("SUquot", a=a, m=m)


def Uquot(a: int, m: int) -> SpaceSpec:
    return SpaceSpec("Uquot", a=a, m=m)


def PU(n: int) -> SpaceSpec:
    return SpaceSpec("PU", n=n)


def B(s: SpaceSpec) -> SpaceSpec:
    if s.classifying:
        raise ValueError("only one classifying-space shift is supported")
    return SpaceSpec(s.family, s.n, s.a, s.m, classifying=True)


def _pi_unitary(i: int, n: int) -> FgabGroup:
    if i < 2 * n:
        return Z if i % 2 else TRIVIAL
    if i == 2 * n:
        return FgabGroup.cyclic(factorial(n))
    raise OutOfStableRange(f"pi_{i}(U_{n}) is outside the tabulated range i <= {2 * n}")


def pi(i: int, s: SpaceSpec) -> FgabGroup:
    """``pi_i`` of the space ``s`` as a finitely generated abelian group."""
    if i < 0:
        raise ValueError("homotopy degree must be nonnegative")
    if s.classifying:
        if i == 0:
            return TRIVIAL
        return pi(i - 1, s.loop_group())
    if i == 0:
        return TRIVIAL
    d = s.degree
    if i > 2 * d:
        raise OutOfStableRange(f"pi_{i}({s}) is outside the tabulated range i <= {2 * d}")
    if i > 1:
        return _pi_unitary(i, d)
    # i == 1
    if s.family == "U":
        return Z
    if s.family == "SU":
        return TRIVIAL
    m = s.n if s.family == "PU" else s.m
    if s.family == "Uquot":
        return FgabGroup(1, () if m == 1 else (m,))
    return FgabGroup.cyclic(m)
