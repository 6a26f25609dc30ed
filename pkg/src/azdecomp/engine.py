"""Decide when a degree-abmn algebra splits as a tensor product of degree-am
and degree-bn algebras, and assemble a certificate with all the evidence.

The evidence consists of a Bezout witness, the integer matrices of the
induced map on homotopy groups in degrees other than 2 (Case 1) and in degree 2
(Case 2), and the resulting connectivity.  Everything is exact integer
arithmetic.  The certificate serializes to JSON with sorted keys, so equal
problems give byte-identical output.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from math import gcd

from .arith import BezoutWitness, BrauerClass, NotCoprime, WrongPeriod, bezout_uv, period
from .fgab import FgabGroup, FgabMap, determinant, is_isomorphism, pair
from .homotopy import B, U, pi
from .induced import tensor_star_quot_pi1

SCHEMA = "azdecomp.certificate/1"


class NotOrdered(ValueError):
    """The smaller degree ``am`` is not strictly below ``bn``."""


class Verdict(str, Enum):
    LIFTABLE_UNIQUE = "LiftableUnique"
    LIFTABLE_NON_UNIQUE = "LiftableNonUnique"
    NOT_GUARANTEED = "NotGuaranteed"


@dataclass(frozen=True)
class DecompositionProblem:
    a: int
    b: int
    m: int
    n: int
    dim_x: int

    def __post_init__(self):
        for name in "abmn":
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be a positive integer")
        if self.dim_x < 0:
            raise ValueError("dim_x must be nonnegative")

    @property
    def am(self) -> int:
        return self.a * self.m

    @property
    def bn(self) -> int:
        return self.b * self.n


def validate(a: int, b: int, m: int, n: int) -> None:
    am, bn = a * m, b * n
    if gcd(am, bn) != 1:
        raise NotCoprime(f"am={am} and bn={bn} are not coprime (gcd {gcd(am, bn)})")
    if am >= bn:
        raise NotOrdered(f"need am < bn, got am={am}, bn={bn}")


def build_connectivity_matrix(a: int, b: int, m: int, n: int, w: BezoutWitness) -> list[list[int]]:
    am, bn = a * m, b * n
    return [[bn, am], [w.u * am**m, w.v * bn**n]]


def case1_map(a: int, b: int, m: int, n: int, w: BezoutWitness) -> FgabMap:
    Z2 = FgabGroup(2)
    return FgabMap(Z2, Z2, build_connectivity_matrix(a, b, m, n, w))


def check_case1(a: int, b: int, m: int, n: int, w: BezoutWitness) -> bool:
    """Is the degree-i map ``Z^2 -> Z^2`` (i != 2) bijective?"""
    return is_isomorphism(case1_map(a, b, m, n, w)).is_iso


def case2_map(a: int, b: int, m: int, n: int, w: BezoutWitness) -> FgabMap:
    """The degree-2 map ``(Z+Z/m) + (Z+Z/n) -> (Z+Z/mn) + Z``.

    First factor is the quotient tensor map on ``pi_1``; the second is the
    splitting homomorphism, which kills the torsion because the central
    roots of unity lie in its kernel.
    """
    if gcd(m, n) != 1:
        raise NotCoprime(f"m={m} and n={n} are not coprime")
    tensor_part = tensor_star_quot_pi1(a, b, m, n)
    src = tensor_part.source
    am, bn = a * m, b * n
    N = w.u * am**m + w.v * bn**n
    target = pi(2, B(U(N)))
    row = [w.u * am**m, w.v * bn**n] + [0] * len(src.torsion)
    tr_part = FgabMap(src, target, [row])
    return pair(tensor_part, tr_part)


def check_case2(a: int, b: int, m: int, n: int, w: BezoutWitness) -> tuple[bool, FgabMap]:
    f = case2_map(a, b, m, n, w)
    return is_isomorphism(f).is_iso, f


@dataclass(frozen=True)
class TrStage:
    label: str
    dims: tuple[int, ...]


def tr_descriptor(a: int, b: int, m: int, n: int, w: BezoutWitness) -> list[TrStage]:
    """Stages of the splitting homomorphism with the matrix sizes they produce."""
    am, bn = a * m, b * n
    N = w.u * am**m + w.v * bn**n
    return [
        TrStage("input", (am, bn)),
        TrStage(f"tensor powers (x){m}, (x){n}", (am**m, bn**n)),
        TrStage(f"block sums (+){w.u}, (+){w.v}", (w.u * am**m, w.v * bn**n)),
        TrStage("direct sum", (N,)),
    ]


def brauer_split(cl: BrauerClass, m: int, n: int) -> tuple[BrauerClass, BrauerClass]:
    """Classes of the two factors: ``n * cl`` (period m) and ``m * cl`` (period n)."""
    if gcd(m, n) != 1:
        raise NotCoprime(f"m={m} and n={n} are not coprime")
    if cl.modulus != m * n:
        raise ValueError(f"class must live in Z/{m * n}, got Z/{cl.modulus}")
    if period(cl) != m * n:
        raise WrongPeriod(f"class {cl.value} mod {cl.modulus} has period {period(cl)}, not {m * n}")
    cl_m, cl_n = n * cl, m * cl
    assert period(cl_m) == m and period(cl_n) == n
    return cl_m, cl_n


@dataclass
class DecompositionCertificate:
    problem: DecompositionProblem
    witness: BezoutWitness
    N: int
    case1_matrix: list[list[int]]
    case1_det: int
    case2_map: FgabMap
    case2_iso: bool
    connectivity: int
    verdict: Verdict
    tr_stages: list[TrStage] = field(default_factory=list)
    brauer: dict = field(default_factory=dict)
    reasons: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        p = self.problem
        f = self.case2_map
        return {
            "schema": SCHEMA,
            "problem": {"a": p.a, "b": p.b, "m": p.m, "n": p.n, "dimX": p.dim_x},
            "witness": {
                "u": self.witness.u,
                "v": self.witness.v,
                "sign": self.witness.sign,
                "lhsPow": self.witness.lhs_pow,
                "rhsPow": self.witness.rhs_pow,
            },
            "N": self.N,
            "case1Matrix": self.case1_matrix,
            "case1Det": self.case1_det,
            "case2Map": {
                "source": _group_dict(f.source),
                "target": _group_dict(f.target),
                "matrix": [list(r) for r in f.matrix],
            },
            "case2Iso": self.case2_iso,
            "connectivity": self.connectivity,
            "verdict": self.verdict.value,
            "trStages": [{"label": s.label, "dims": list(s.dims)} for s in self.tr_stages],
            "brauer": self.brauer,
            "reasons": list(self.reasons),
        }

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent, sort_keys=True, ensure_ascii=False)

    @classmethod
    def from_dict(cls, d: dict) -> DecompositionCertificate:
        if d.get("schema") != SCHEMA:
            raise ValueError(f"unknown certificate schema {d.get('schema')!r}")
        p = d["problem"]
        w = d["witness"]
        f = d["case2Map"]
        return cls(
            problem=DecompositionProblem(p["a"], p["b"], p["m"], p["n"], p["dimX"]),
            witness=BezoutWitness(w["u"], w["v"], w["sign"], w["lhsPow"], w["rhsPow"]),
            N=d["N"],
            case1_matrix=[list(r) for r in d["case1Matrix"]],
            case1_det=d["case1Det"],
            case2_map=FgabMap(_group_from(f["source"]), _group_from(f["target"]), f["matrix"]),
            case2_iso=d["case2Iso"],
            connectivity=d["connectivity"],
            verdict=Verdict(d["verdict"]),
            tr_stages=[TrStage(s["label"], tuple(s["dims"])) for s in d["trStages"]],
            brauer=d["brauer"],
            reasons=list(d["reasons"]),
        )

    @classmethod
    def from_json(cls, text: str) -> DecompositionCertificate:
        return cls.from_dict(json.loads(text))

    def summary(self) -> str:
        p, w = self.problem, self.witness
        lines = [
            f"problem: a={p.a} b={p.b} m={p.m} n={p.n} dim(X)={p.dim_x}",
            f"bezout: {w.lhs_pow}*{w.v} - {w.rhs_pow}*{w.u} = {w.sign:+d}",
            f"N = {self.N}",
            f"case 1 matrix {self.case1_matrix}, det {self.case1_det}",
            f"case 2 map {self.case2_map}: {'bijective' if self.case2_iso else 'NOT bijective'}",
            f"connectivity: {self.connectivity}",
            f"verdict: {self.verdict.value}",
        ]
        lines += [f"  - {r}" for r in self.reasons]
        return "\n".join(lines)


def _group_dict(G: FgabGroup) -> dict:
    return {"rank": G.rank, "torsion": list(G.torsion)}


def _group_from(d: dict) -> FgabGroup:
    return FgabGroup(d["rank"], tuple(d["torsion"]))


def decide(problem: DecompositionProblem) -> DecompositionCertificate:
    a, b, m, n = problem.a, problem.b, problem.m, problem.n
    validate(a, b, m, n)
    am, bn = problem.am, problem.bn
    w = bezout_uv(a, b, m, n)
    N = w.u * am**m + w.v * bn**n
    M1 = build_connectivity_matrix(a, b, m, n, w)
    det1 = determinant(M1)
    case1 = check_case1(a, b, m, n, w)
    case2, f2 = check_case2(a, b, m, n, w)
    connectivity = 2 * am + 1

    reasons = [
        f"gcd(am, bn) = gcd({am}, {bn}) = 1 and am < bn",
        f"(bn)^(n+1) v - (am)^(m+1) u = {w.lhs_pow}*{w.v} - {w.rhs_pow}*{w.u} = {w.sign:+d}",
        f"splitting map lands in U({N}) and kills mu_{m} x mu_{n}",
        f"case 1 (degrees != 2): det {M1} = {det1}, "
        + ("unimodular" if case1 else "not unimodular"),
        f"case 2 (degree 2): {f2} is " + ("bijective" if case2 else "not bijective"),
    ]
    if not (case1 and case2):
        verdict = Verdict.NOT_GUARANTEED
        reasons.append("connectivity evidence failed; no lifting claim is made")
    elif problem.dim_x <= 2 * am:
        verdict = Verdict.LIFTABLE_UNIQUE
        reasons.append(
            f"map is {connectivity}-connected and dim(X) = {problem.dim_x} <= 2am = {2 * am}: "
            "lift exists and is unique up to homotopy"
        )
    elif problem.dim_x == connectivity:
        verdict = Verdict.LIFTABLE_NON_UNIQUE
        reasons.append(
            f"dim(X) = {problem.dim_x} = 2am+1: induced map on homotopy classes is "
            "only surjective, so a lift exists but need not be unique"
        )
    else:
        verdict = Verdict.NOT_GUARANTEED
        reasons.append(
            f"dim(X) = {problem.dim_x} > 2am+1 = {connectivity}: no claim either way"
        )

    gen = BrauerClass(m * n, 1 % (m * n))
    cl_m, cl_n = brauer_split(gen, m, n)
    brauer = {
        "modulus": m * n,
        "generatorPeriod": period(gen),
        "factorM": {"value": cl_m.value, "period": period(cl_m)},
        "factorN": {"value": cl_n.value, "period": period(cl_n)},
    }
    reasons.append(
        f"Brauer bookkeeping: a class of period {m * n} splits into n*cl of period {period(cl_m)} "
        f"and m*cl of period {period(cl_n)}"
    )
    reasons.append(
        "PU-level statement assumes the external result that lifts a period-mn class "
        "to SU_abmn/mu_mn and back; it is not re-proved here"
    )

    return DecompositionCertificate(
        problem=problem,
        witness=w,
        N=N,
        case1_matrix=M1,
        case1_det=det1,
        case2_map=f2,
        case2_iso=case2,
        connectivity=connectivity,
        verdict=verdict,
        tr_stages=tr_descriptor(a, b, m, n, w),
        brauer=brauer,
        reasons=reasons,
    )
