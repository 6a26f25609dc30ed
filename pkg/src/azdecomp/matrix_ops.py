"""Unitary-matrix realizations of block sums, tensor products, the shuffle
permutation relating ``A (x) I_n`` to ``I_n (x) A``, geodesic paths in U(N),
and the splitting homomorphism built from tensor powers and block sums.

Matrices are plain ``numpy`` complex arrays.  Identity checks use the
tolerance ``1e-9 * dim`` (Frobenius norm).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, lcm

import numpy as np
from scipy.linalg import block_diag, schur

from .arith import BezoutWitness

DEFAULT_DIM_CAP = 4096
TOL_PER_DIM = 1e-9


class DimensionOverflow(ValueError):
    """The requested matrix would exceed the dimension cap."""


class DimensionMismatch(ValueError):
    pass


class BadIndex(IndexError):
    pass


class NotUnitary(ValueError):
    pass


def tolerance(dim: int, scale: float = 1.0) -> float:
    return TOL_PER_DIM * dim * scale


def as_matrix(A) -> np.ndarray:
    A = np.asarray(A, dtype=np.complex128)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise DimensionMismatch(f"expected a square matrix, got shape {A.shape}")
    if not np.all(np.isfinite(A)):
        raise ValueError("matrix has non-finite entries")
    return A


def check_cap(dim: int, cap: int | None) -> None:
    cap = DEFAULT_DIM_CAP if cap is None else cap
    if dim > cap:
        raise DimensionOverflow(f"dimension {dim} exceeds cap {cap}")


def frobenius_deviation(A: np.ndarray, B: np.ndarray) -> float:
    return float(np.linalg.norm(A - B))


def is_unitary(A, tol: float | None = None) -> bool:
    A = as_matrix(A)
    k = A.shape[0]
    if tol is None:
        tol = tolerance(k)
    return frobenius_deviation(A.conj().T @ A, np.eye(k)) <= tol


def dsum(A, B, cap: int | None = None) -> np.ndarray:
    A, B = as_matrix(A), as_matrix(B)
    check_cap(A.shape[0] + B.shape[0], cap)
    return block_diag(A, B)


def ksum(A, r: int, cap: int | None = None) -> np.ndarray:
    """``A (+) ... (+) A`` with ``r`` blocks."""
    A = as_matrix(A)
    if r < 1:
        raise ValueError("r must be positive")
    check_cap(r * A.shape[0], cap)
    return np.kron(np.eye(r), A)


def tensor(A, B, cap: int | None = None) -> np.ndarray:
    """Kronecker product with blocks ``a_ij * B``."""
    A, B = as_matrix(A), as_matrix(B)
    check_cap(A.shape[0] * B.shape[0], cap)
    return np.kron(A, B)


def ktensor(A, r: int, cap: int | None = None) -> np.ndarray:
    A = as_matrix(A)
    if r < 1:
        raise ValueError("r must be positive")
    check_cap(A.shape[0] ** r, cap)
    out = A
    for _ in range(r - 1):
        out = np.kron(out, A)
    return out


def stab(A, n: int, cap: int | None = None) -> np.ndarray:
    """``diag(A, I_n)``."""
    A = as_matrix(A)
    if n == 0:
        return A.copy()
    return dsum(A, np.eye(n), cap)


def sj_embed(A, r: int, j: int, cap: int | None = None) -> np.ndarray:
    """Block diagonal with ``A`` in block ``j`` (1-based) and identities elsewhere."""
    A = as_matrix(A)
    if not 1 <= j <= r:
        raise BadIndex(f"block index {j} not in 1..{r}")
    k = A.shape[0]
    check_cap(r * k, cap)
    out = np.eye(r * k, dtype=np.complex128)
    s = (j - 1) * k
    out[s : s + k, s : s + k] = A
    return out


@dataclass(frozen=True)
class PermutationIndexMap:
    """Permutation matrix stored as indices: row ``k`` of ``P`` is ``e_{images[k]}``.

    So ``P @ X`` gathers rows ``X[images]`` and ``X @ P.T`` gathers columns.
    """

    images: tuple[int, ...]

    def __post_init__(self):
        imgs = tuple(int(i) for i in self.images)
        if sorted(imgs) != list(range(len(imgs))):
            raise ValueError("images is not a permutation")
        object.__setattr__(self, "images", imgs)

    @property
    def size(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, size: int) -> PermutationIndexMap:
        return cls(tuple(range(size)))

    def inverse(self) -> PermutationIndexMap:
        inv = [0] * self.size
        for k, i in enumerate(self.images):
            inv[i] = k
        return PermutationIndexMap(tuple(inv))

    def __matmul__(self, other: PermutationIndexMap) -> PermutationIndexMap:
        # (P Q) X = P (Q X): row k of PQX is row images_Q[images_P[k]] of X
        return PermutationIndexMap(tuple(other.images[i] for i in self.images))

    def apply_left(self, X: np.ndarray) -> np.ndarray:
        return X[list(self.images), :]

    def apply_right_transpose(self, X: np.ndarray) -> np.ndarray:
        return X[:, list(self.images)]

    def conjugate(self, X: np.ndarray) -> np.ndarray:
        """``P X P^T``."""
        idx = np.asarray(self.images)
        return X[np.ix_(idx, idx)]

    def to_dense(self) -> np.ndarray:
        P = np.zeros((self.size, self.size))
        P[np.arange(self.size), self.images] = 1.0
        return P

    def cycles(self) -> list[tuple[int, ...]]:
        seen, out = set(), []
        for start in range(self.size):
            if start in seen:
                continue
            cyc, k = [], start
            while k not in seen:
                seen.add(k)
                cyc.append(k)
                k = self.images[k]
            out.append(tuple(cyc))
        return out

    def transpositions(self) -> list[tuple[int, int]]:
        """Row swaps whose product, applied left to right, equals ``P``."""
        swaps = []
        for cyc in self.cycles():
            for k in range(len(cyc) - 1, 0, -1):
                swaps.append((cyc[0], cyc[k]))
        return swaps


def commutation_permutation(m: int, n: int) -> PermutationIndexMap:
    """Perfect shuffle ``P`` with ``A (x) I_n = P (I_n (x) A) P^T`` for m x m ``A``."""
    if m < 1 or n < 1:
        raise ValueError("m and n must be positive")
    images = [0] * (m * n)
    for i in range(m):
        for j in range(n):
            images[i * n + j] = j * m + i
    return PermutationIndexMap(tuple(images))


def block_swap_permutation(k: int, r: int, j: int) -> PermutationIndexMap:
    """Swap blocks ``j`` and ``j+1`` (1-based) of size ``k`` among ``r`` blocks.

    Conjugating ``sj_embed(A, r, j)`` by it gives ``sj_embed(A, r, j + 1)``.
    """
    if not 1 <= j < r:
        raise BadIndex(f"need 1 <= j < r, got j={j}, r={r}")
    images = list(range(k * r))
    s, t = (j - 1) * k, j * k
    images[s : s + k], images[t : t + k] = images[t : t + k], images[s : s + k]
    return PermutationIndexMap(tuple(images))


def unitary_path(U, t: float) -> np.ndarray:
    """Point ``t`` of the geodesic from ``I`` to ``U`` in the unitary group.

    ``U = V diag(e^{i theta}) V^*`` with ``theta`` in ``(-pi, pi]``, and the
    path is ``V diag(e^{i t theta}) V^*``.
    """
    U = as_matrix(U)
    if not is_unitary(U):
        raise NotUnitary("unitary_path needs a unitary matrix")
    # complex Schur form of a normal matrix is diagonal with unitary V
    T, V = schur(U, output="complex")
    theta = np.angle(np.diag(T))
    theta = np.where(theta <= -np.pi + 1e-12, np.pi, theta)
    return (V * np.exp(1j * t * theta)) @ V.conj().T


def homotopy_st(A, n: int, t: float) -> np.ndarray:
    """Path in U(mn) from ``I_n (x) A`` (t=0) to ``A (x) I_n`` (t=1)."""
    A = as_matrix(A)
    m = A.shape[0]
    P = commutation_permutation(m, n)
    R = P.to_dense()
    C = P.inverse().to_dense()
    base = np.kron(np.eye(n), A)
    return unitary_path(R, t) @ base @ unitary_path(C, t)


def random_unitary(n: int, seed=None) -> np.ndarray:
    """Haar-distributed unitary from the QR factorization of a complex Gaussian."""
    if n < 1:
        raise ValueError("n must be positive")
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    z = (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    d = np.diag(r)
    return q * (d / np.abs(d))


@dataclass(frozen=True)
class CentralElement:
    """The scalar matrix ``exp(2 pi i exponent / order) * I_dim``."""

    order: int
    exponent: int
    dim: int

    def __post_init__(self):
        if self.order < 1 or self.dim < 1:
            raise ValueError("order and dim must be positive")
        object.__setattr__(self, "exponent", self.exponent % self.order)

    @property
    def is_identity(self) -> bool:
        return self.exponent == 0

    def reduced(self) -> CentralElement:
        g = gcd(self.exponent, self.order)
        return CentralElement(self.order // g, self.exponent // g, self.dim)

    def same_scalar(self, other: CentralElement) -> bool:
        return self.exponent * other.order == other.exponent * self.order

    def tensor(self, other: CentralElement) -> CentralElement:
        L = lcm(self.order, other.order)
        e = self.exponent * (L // self.order) + other.exponent * (L // other.order)
        return CentralElement(L, e, self.dim * other.dim)

    def ktensor(self, r: int) -> CentralElement:
        return CentralElement(self.order, r * self.exponent, self.dim**r)

    def ksum(self, r: int) -> CentralElement:
        return CentralElement(self.order, self.exponent, r * self.dim)

    def dsum(self, other: CentralElement) -> CentralElement | None:
        """Block sum, or ``None`` when the two scalars differ (result not central)."""
        if not self.same_scalar(other):
            return None
        return CentralElement(self.order, self.exponent, self.dim + other.dim)


def central_scalar(c: CentralElement) -> np.ndarray:
    if c.exponent == 0:
        return np.eye(c.dim, dtype=np.complex128)
    return np.exp(2j * np.pi * c.exponent / c.order) * np.eye(c.dim)


def tr_dimension(w: BezoutWitness, a: int, b: int, m: int, n: int) -> int:
    return w.u * (a * m) ** m + w.v * (b * n) ** n


def tr_apply(A, B, w: BezoutWitness, a: int, b: int, m: int, n: int, cap: int | None = None) -> np.ndarray:
    """``(A^{(x)m})^{(+)u} (+) (B^{(x)n})^{(+)v}``, a unitary of size ``N``."""
    A, B = as_matrix(A), as_matrix(B)
    if A.shape[0] != a * m or B.shape[0] != b * n:
        raise DimensionMismatch(
            f"expected sizes {a * m} and {b * n}, got {A.shape[0]} and {B.shape[0]}"
        )
    check_cap(tr_dimension(w, a, b, m, n), cap)
    left = np.kron(np.eye(w.u), ktensor(A, m, cap))
    right = np.kron(np.eye(w.v), ktensor(B, n, cap))
    return block_diag(left, right)


def tr_central(alpha: CentralElement, beta: CentralElement, w: BezoutWitness, m: int, n: int):
    """Exact image of ``(alpha I, beta I)`` under the splitting map.

    Returns a :class:`CentralElement` of size ``N`` or ``None`` if the image
    is not scalar.
    """
    left = alpha.ktensor(m).ksum(w.u)
    right = beta.ktensor(n).ksum(w.v)
    return left.dsum(right)


def write_matrix(A) -> str:
    """Text form: the dimension, then one line per row of ``re,im`` pairs."""
    A = as_matrix(A)
    lines = [str(A.shape[0])]
    for row in A:
        lines.append(" ".join(f"{float(z.real)!r},{float(z.imag)!r}" for z in row))
    return "\n".join(lines) + "\n"


def read_matrix(text: str) -> np.ndarray:
    lines = [ln for ln in text.strip().splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty matrix text")
    dim = int(lines[0])
    if len(lines) != dim + 1:
        raise ValueError(f"expected {dim} rows, got {len(lines) - 1}")
    out = np.empty((dim, dim), dtype=np.complex128)
    for i, ln in enumerate(lines[1:]):
        toks = ln.split()
        if len(toks) != dim:
            raise ValueError(f"row {i} has {len(toks)} entries, expected {dim}")
        for j, tok in enumerate(toks):
            re, im = tok.split(",")
            out[i, j] = complex(float(re), float(im))
    return as_matrix(out)
