"""Homomorphisms induced on homotopy groups by block sums and tensor products
of unitary matrices, in the stable range where they have closed forms.

Every function returns an :class:`~azdecomp.fgab.FgabMap` whose source and
target are the groups from :mod:`azdecomp.homotopy`.  A map out of a product
``pi_i(X) x pi_i(Y)`` has the direct sum of the two groups as source.
"""

from __future__ import annotations

from .fgab import FgabGroup, FgabMap, codiagonal, compose, diagonal, direct_sum, direct_sum_groups
from .homotopy import OutOfStableRange, U, Uquot, pi


class UseQuotPi1(ValueError):
    """The degree-1 tensor map on quotients has torsion; use the pi_1 variant."""


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise OutOfStableRange(msg)


def _free_linear(sources: list[FgabGroup], target: FgabGroup, coeffs: list[int]) -> FgabMap:
    # source groups and target are each Z or 0; coeffs[k] scales summand k
    src = direct_sum_groups(*sources)
    if target.is_trivial or src.is_trivial:
        return FgabMap.zero(src, target)
    row = [c for g, c in zip(sources, coeffs) if g.rank]
    return FgabMap(src, target, [row])


def stab_star(i: int, m: int, n: int) -> FgabMap:
    """``pi_i(U_m) -> pi_i(U_{m+n})`` induced by ``A -> diag(A, I_n)``."""
    _require(i < 2 * m, f"stabilization is only known to be bijective for i < 2m = {2 * m}")
    return _free_linear([pi(i, U(m))], pi(i, U(m + n)), [1])


def dsum_star(i: int, m: int, n: int) -> FgabMap:
    """Direct sum ``U_m x U_n -> U_{m+n}``: ``(x, y) -> x + y``."""
    if m > n:
        raise ValueError(f"dsum_star expects m <= n, got m={m}, n={n}")
    _require(i < 2 * m, f"direct sum formula needs i < 2m = {2 * m}, got i={i}")
    return _free_linear([pi(i, U(m)), pi(i, U(n))], pi(i, U(m + n)), [1, 1])


def rsum_star(i: int, n: int, r: int) -> FgabMap:
    """r-fold block sum ``U_n -> U_{rn}``: ``x -> r x``."""
    if r < 1:
        raise ValueError("r must be positive")
    _require(i < 2 * n, f"block sum formula needs i < 2n = {2 * n}, got i={i}")
    return _free_linear([pi(i, U(n))], pi(i, U(r * n)), [r])


def tensor_star(i: int, m: int, n: int) -> FgabMap:
    """Tensor product ``U_m x U_n -> U_{mn}``: ``(x, y) -> n x + m y``."""
    if m >= n:
        raise ValueError(f"tensor_star expects m < n, got m={m}, n={n}")
    _require(i < 2 * m, f"tensor formula needs i < 2m = {2 * m}, got i={i}")
    return _free_linear([pi(i, U(m)), pi(i, U(n))], pi(i, U(m * n)), [n, m])


def rtensor_star(i: int, n: int, r: int) -> FgabMap:
    """r-fold tensor power ``U_n -> U_{n^r}``: ``x -> r n^(r-1) x``."""
    if r < 1:
        raise ValueError("r must be positive")
    _require(i < 2 * n, f"tensor power formula needs i < 2n = {2 * n}, got i={i}")
    return _free_linear([pi(i, U(n))], pi(i, U(n**r)), [r * n ** (r - 1)])


def tensor_star_quot(i: int, a: int, b: int, m: int, n: int) -> FgabMap:
    """Tensor product on central quotients for ``i > 1``: ``(x, y) -> bn x + am y``."""
    if i == 1:
        raise UseQuotPi1("pi_1 of the quotients has torsion; use tensor_star_quot_pi1")
    am, bn = a * m, b * n
    if am >= bn:
        raise ValueError(f"expects am < bn, got am={am}, bn={bn}")
    _require(i < 2 * am, f"quotient tensor formula needs i < 2am = {2 * am}, got i={i}")
    return _free_linear(
        [pi(i, Uquot(a, m)), pi(i, Uquot(b, n))], pi(i, Uquot(a * b, m * n)), [bn, am]
    )


def tensor_star_quot_pi1(a: int, b: int, m: int, n: int) -> FgabMap:
    """``pi_1`` of the quotient tensor map, ``(Z+Z/m) x (Z+Z/n) -> Z+Z/mn``.

    Free parts go to ``bn x + am y``; the torsion parts multiply as roots of
    unity, which in exponents is ``n alpha + m beta mod mn``.
    """
    src = direct_sum_groups(pi(1, Uquot(a, m)), pi(1, Uquot(b, n)))
    tgt = pi(1, Uquot(a * b, m * n))
    # source generators: x, y, then alpha (if m > 1), beta (if n > 1)
    free_row = [b * n, a * m] + [0] * len(src.torsion)
    M = [free_row]
    if tgt.torsion:
        tor_row = [0, 0]
        if m > 1:
            tor_row.append(n)
        if n > 1:
            tor_row.append(m)
        M.append(tor_row)
    return FgabMap(src, tgt, M)


def sum_of_rsums(i: int, m: int, n: int) -> FgabMap:
    """``(x, y) -> (+)^n_*(x) + (+)^m_*(y)``, built by composing block-sum maps."""
    return compose(codiagonal(pi(i, U(m * n))), direct_sum(rsum_star(i, m, n), rsum_star(i, n, m)))


def dsum_via_stabilization(i: int, m: int, n: int) -> FgabMap:
    """Direct sum as the sum of the two stabilizations ``diag(A, I)``, ``diag(I, B)``."""
    return compose(codiagonal(pi(i, U(m + n))), direct_sum(stab_star(i, m, n), stab_star(i, n, m)))


def rsum_via_embeddings(i: int, n: int, r: int) -> FgabMap:
    """Block sum as diagonal, then the r block embeddings, then summation."""
    _require(i < 2 * n, f"block embeddings are bijective only for i < 2n = {2 * n}")
    G = pi(i, U(n))
    embeds = direct_sum(*[stab_star(i, n, (r - 1) * n)] * r)
    return compose(codiagonal(pi(i, U(r * n)), r), compose(embeds, diagonal(G, r)))


def rtensor_inductive(i: int, n: int, r: int) -> FgabMap:
    """Tensor power built recursively from ``A^(r) = A^(r-1) (x) A``."""
    if r < 1:
        raise ValueError("r must be positive")
    _require(i < 2 * n, f"tensor power formula needs i < 2n = {2 * n}, got i={i}")
    G = pi(i, U(n))
    if r == 1:
        return FgabMap.identity(G)
    k = n ** (r - 1)
    prev = rtensor_inductive(i, n, r - 1)
    # tensor of a U_k factor with a U_n factor sends (x', y) to (+)^n(x') + (+)^k(y)
    left = compose(rsum_star(i, k, n), prev)
    right = rsum_star(i, n, k)
    both = compose(codiagonal(pi(i, U(k * n))), direct_sum(left, right))
    return compose(both, diagonal(G))


def rtensor_via_rsum(i: int, n: int, r: int) -> FgabMap:
    """``r`` times the ``n^(r-1)``-fold block sum."""
    return r * rsum_star(i, n, n ** (r - 1))
