"""Randomized and exhaustive property suites behind ``azdecomp verify``."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Callable

import numpy as np

from . import fgab, matrix_ops as mo
from .arith import BrauerClass, bezout_uv, period
from .engine import (
    DecompositionProblem,
    brauer_split,
    build_connectivity_matrix,
    check_case1,
    check_case2,
    decide,
)

DEFAULT_SEED = 20191


@dataclass
class PropertyResult:
    name: str
    passed: int
    total: int

    @property
    def ok(self) -> bool:
        return self.passed == self.total

    def line(self) -> str:
        return f"{'PASS' if self.ok else 'FAIL'}  {self.name}  ({self.passed}/{self.total})"


# -- random finite abelian groups and maps ---------------------------------


def random_finite_group(rng: np.random.Generator, max_order: int = 200) -> fgab.FgabGroup:
    torsion, order = [], 1
    for _ in range(int(rng.integers(1, 4))):
        d = int(rng.integers(2, 13))
        if order * d > max_order:
            break
        torsion.append(d)
        order *= d
    return fgab.FgabGroup(0, tuple(torsion))


def shuffled_presentation(rng: np.random.Generator, G: fgab.FgabGroup) -> fgab.FgabGroup:
    """A different presentation of a group isomorphic to ``G`` (orders permuted,
    coprime factors merged or split)."""
    primes = []
    for d in G.torsion:
        p = 2
        while d > 1:
            e = 1
            while d % p == 0:
                d //= p
                e *= p
            if e > 1:
                primes.append(e)
            p += 1
    rng.shuffle(primes)
    out = []
    for q in primes:
        if out and rng.random() < 0.5 and gcd(out[-1], q) == 1:
            out[-1] *= q
        else:
            out.append(q)
    return fgab.FgabGroup(0, tuple(out))


def random_map(rng: np.random.Generator, src: fgab.FgabGroup, tgt: fgab.FgabGroup) -> fgab.FgabMap:
    M = []
    for e in tgt.orders:
        row = []
        for d in src.orders:
            if e == 0:
                row.append(0 if d else int(rng.integers(-5, 6)))
            else:
                step = e // gcd(d, e) if d else 1
                row.append(step * int(rng.integers(0, e // step)))
        M.append(row)
    return fgab.FgabMap(src, tgt, M)


def brute_force_bijective(f: fgab.FgabMap) -> bool:
    if f.source.order() != f.target.order():
        return False
    return len({f(x) for x in f.source.elements()}) == f.source.order()


# -- suites -----------------------------------------------------------------


def _count(name: str, trials: int, check: Callable[[int], bool]) -> PropertyResult:
    return PropertyResult(name, sum(1 for k in range(trials) if check(k)), trials)


def matrix_suite(trials: int, seed: int, tol_scale: float = 1.0) -> list[PropertyResult]:
    rng = np.random.default_rng(seed)
    res = []

    def tol(d):
        return mo.tolerance(d, tol_scale)

    def mixed(_):
        k1, k2 = (int(x) for x in rng.integers(1, 9, size=2))
        A, C = mo.random_unitary(k1, rng), mo.random_unitary(k1, rng)
        Bm, D = mo.random_unitary(k2, rng), mo.random_unitary(k2, rng)
        lhs = mo.tensor(A, Bm) @ mo.tensor(C, D)
        return mo.frobenius_deviation(lhs, mo.tensor(A @ C, Bm @ D)) <= tol(k1 * k2)

    res.append(_count("mixed-product law", trials, mixed))

    def preserve(_):
        k = int(rng.integers(1, 6))
        A, Bm = mo.random_unitary(k, rng), mo.random_unitary(k + 1, rng)
        outs = [mo.dsum(A, Bm), mo.ksum(A, 3), mo.tensor(A, Bm), mo.ktensor(A, 2)]
        return all(mo.is_unitary(X, tol(X.shape[0])) for X in outs)

    res.append(_count("operations preserve unitarity", trials, preserve))

    def shuffle(_):
        m, n = (int(x) for x in rng.integers(1, 9, size=2))
        A = mo.random_unitary(m, rng)
        P = mo.commutation_permutation(m, n)
        lhs = np.kron(A, np.eye(n))
        return mo.frobenius_deviation(lhs, P.conjugate(np.kron(np.eye(n), A))) <= tol(m * n)

    res.append(_count("A(x)I = P (I(x)A) P^T", trials, shuffle))

    def homotopy(_):
        m, n = (int(x) for x in rng.integers(1, 5, size=2))
        A = mo.random_unitary(m, rng)
        d = m * n
        ok = mo.frobenius_deviation(mo.homotopy_st(A, n, 0.0), np.kron(np.eye(n), A)) <= tol(d)
        ok &= mo.frobenius_deviation(mo.homotopy_st(A, n, 1.0), np.kron(A, np.eye(n))) <= tol(d)
        return ok and all(
            mo.is_unitary(mo.homotopy_st(A, n, t), tol(d)) for t in (0.25, 0.5, 0.75)
        )

    res.append(_count("shuffle homotopy endpoints and unitarity", trials, homotopy))

    def block_conj(_):
        k, r = int(rng.integers(1, 5)), int(rng.integers(2, 6))
        j = int(rng.integers(1, r))
        A = mo.random_unitary(k, rng)
        Q = mo.block_swap_permutation(k, r, j)
        return mo.frobenius_deviation(Q.conjugate(mo.sj_embed(A, r, j)), mo.sj_embed(A, r, j + 1)) <= tol(k * r)

    res.append(_count("adjacent block embeddings are conjugate", trials, block_conj))

    w = bezout_uv(1, 1, 2, 3)

    def tr_hom(_):
        A1, A2 = mo.random_unitary(2, rng), mo.random_unitary(2, rng)
        B1, B2 = mo.random_unitary(3, rng), mo.random_unitary(3, rng)
        lhs = mo.tr_apply(A1 @ A2, B1 @ B2, w, 1, 1, 2, 3)
        rhs = mo.tr_apply(A1, B1, w, 1, 1, 2, 3) @ mo.tr_apply(A2, B2, w, 1, 1, 2, 3)
        return mo.frobenius_deviation(lhs, rhs) <= tol(67)

    res.append(_count("splitting map is a homomorphism (1,1,2,3)", trials, tr_hom))

    pairs = [(p, q) for p in range(2) for q in range(3)]

    def descent(k):
        p, q = pairs[k % 6]
        A = mo.central_scalar(mo.CentralElement(2, p, 2))
        Bm = mo.central_scalar(mo.CentralElement(3, q, 3))
        X = mo.tr_apply(A, Bm, w, 1, 1, 2, 3)
        return mo.frobenius_deviation(X, np.eye(67)) <= tol(67)

    res.append(_count("central pairs map to identity (1,1,2,3)", max(trials, 6), descent))
    return res


def fgab_suite(trials: int, seed: int, tol_scale: float = 1.0) -> list[PropertyResult]:
    rng = np.random.default_rng(seed)
    res = []

    def snf(_):
        r, c = (int(x) for x in rng.integers(1, 7, size=2))
        M = rng.integers(-50, 51, size=(r, c)).tolist()
        U, D, V = fgab.smith_normal_form(M)
        if fgab.matmul(fgab.matmul(U, M), V) != D:
            return False
        if abs(fgab.determinant(U)) != 1 or abs(fgab.determinant(V)) != 1:
            return False
        diag = [D[i][i] for i in range(min(r, c))]
        off = any(D[i][j] for i in range(r) for j in range(c) if i != j)
        chain = all(diag[i + 1] % diag[i] == 0 if diag[i] else diag[i + 1] == 0 for i in range(len(diag) - 1))
        return not off and chain and all(d >= 0 for d in diag)

    res.append(_count("SNF reconstruction, unimodularity, divisibility", trials, snf))

    def iso(_):
        G = random_finite_group(rng)
        H = shuffled_presentation(rng, G) if rng.random() < 0.6 else random_finite_group(rng)
        f = random_map(rng, G, H)
        return fgab.is_isomorphism(f).is_iso == brute_force_bijective(f)

    res.append(_count("is_isomorphism agrees with enumeration", trials, iso))

    def assoc(_):
        Gs = [random_finite_group(rng, 60) for _ in range(4)]
        f, g, h = (random_map(rng, Gs[k], Gs[k + 1]) for k in range(3))
        return fgab.compose(h, fgab.compose(g, f)).equals(fgab.compose(fgab.compose(h, g), f))

    res.append(_count("composition is associative", trials, assoc))

    def dsum_iso(_):
        G1, G2 = random_finite_group(rng, 30), random_finite_group(rng, 30)
        f = random_map(rng, G1, shuffled_presentation(rng, G1))
        g = random_map(rng, G2, shuffled_presentation(rng, G2))
        both = fgab.is_isomorphism(fgab.direct_sum(f, g)).is_iso
        return both == (fgab.is_isomorphism(f).is_iso and fgab.is_isomorphism(g).is_iso)

    res.append(_count("direct sum is iso iff both summands are", trials, dsum_iso))
    return res


def coprime_parameters(max_degree: int = 12):
    """All ``(a, b, m, n)`` with ``am < bn <= max_degree`` coprime."""
    for am in range(1, max_degree + 1):
        for bn in range(am + 1, max_degree + 1):
            if gcd(am, bn) != 1:
                continue
            for a in (d for d in range(1, am + 1) if am % d == 0):
                for b in (d for d in range(1, bn + 1) if bn % d == 0):
                    yield a, b, am // a, bn // b


def engine_suite(trials: int, seed: int, tol_scale: float = 1.0) -> list[PropertyResult]:
    rng = np.random.default_rng(seed)
    params = list(coprime_parameters())
    res = []

    def sweep(k):
        a, b, m, n = params[k]
        w = bezout_uv(a, b, m, n)
        M = build_connectivity_matrix(a, b, m, n, w)
        ok_case2, f2 = check_case2(a, b, m, n, w)
        free = [list(r[:2]) for r in f2.matrix[:2]]
        return (
            w.holds()
            and fgab.determinant(M) == w.sign
            and check_case1(a, b, m, n, w)
            and ok_case2
            and free == M
        )

    res.append(_count("coprime sweep am < bn <= 12: det = sign, both cases bijective", len(params), sweep))

    def determinism(_):
        a, b, m, n = params[int(rng.integers(len(params)))]
        p = DecompositionProblem(a, b, m, n, int(rng.integers(0, 2 * a * m + 3)))
        return decide(p).to_json() == decide(p).to_json()

    res.append(_count("certificates are byte-identical on repeat", trials, determinism))

    def brauer(_):
        while True:
            m, n = (int(x) for x in rng.integers(1, 45, size=2))
            if gcd(m, n) == 1:
                break
        k = m * n
        vals = [v for v in range(k) if gcd(v, k) == 1]
        cl = BrauerClass(k, vals[int(rng.integers(len(vals)))])
        cm, cn = brauer_split(cl, m, n)
        return period(cm) == m and period(cn) == n

    res.append(_count("Brauer split periods", trials, brauer))
    return res


SUITES = {"matrix": matrix_suite, "fgab": fgab_suite, "engine": engine_suite}


def run(suite: str, trials: int, seed: int, tol_scale: float = 1.0) -> list[tuple[str, list[PropertyResult]]]:
    names = list(SUITES) if suite == "all" else [suite]
    return [(name, SUITES[name](trials, seed, tol_scale)) for name in names]
