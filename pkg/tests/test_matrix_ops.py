import itertools

import numpy as np
import pytest

from azdecomp.arith import bezout_uv
from azdecomp.matrix_ops import (
    BadIndex,
    CentralElement,
    DimensionMismatch,
    DimensionOverflow,
    NotUnitary,
    PermutationIndexMap,
    block_swap_permutation,
    central_scalar,
    commutation_permutation,
    dsum,
    homotopy_st,
    is_unitary,
    ksum,
    ktensor,
    random_unitary,
    read_matrix,
    sj_embed,
    stab,
    tensor,
    tolerance,
    tr_apply,
    tr_central,
    tr_dimension,
    unitary_path,
    write_matrix,
)


def close(A, B, dim=None):
    dim = dim or A.shape[0]
    return np.linalg.norm(A - B) < tolerance(dim)


def test_dsum_identities():
    assert close(dsum(np.eye(2), np.eye(3)), np.eye(5))


def test_tensor_with_identity_is_block_sum():
    B = random_unitary(3, seed=1)
    assert close(tensor(np.eye(4), B), ksum(B, 4))


def test_mixed_product():
    rng = np.random.default_rng(0)
    for m, n in [(2, 3), (4, 4), (8, 8)]:
        A1, A2 = random_unitary(m, rng), random_unitary(m, rng)
        B1, B2 = random_unitary(n, rng), random_unitary(n, rng)
        lhs = tensor(A1, B1) @ tensor(A2, B2)
        assert close(lhs, tensor(A1 @ A2, B1 @ B2))


def test_ktensor_dimension():
    A = random_unitary(2, seed=2)
    assert ktensor(A, 3).shape == (8, 8)
    assert is_unitary(ktensor(A, 3))


def test_stab_is_first_block_embedding():
    A = random_unitary(3, seed=3)
    assert close(sj_embed(A, 4, 1), stab(A, 9))
    assert close(stab(A, 0), A)


def test_block_embeddings_multiply_to_block_sum():
    A = random_unitary(2, seed=4)
    prod = np.eye(8)
    for j in range(1, 5):
        prod = prod @ sj_embed(A, 4, j)
    assert close(prod, ksum(A, 4))


def test_block_swap_conjugates_embeddings():
    A = random_unitary(3, seed=5)
    for j in range(1, 4):
        P = block_swap_permutation(3, 4, j)
        assert close(P.conjugate(sj_embed(A, 4, j)), sj_embed(A, 4, j + 1))
    with pytest.raises(BadIndex):
        block_swap_permutation(3, 4, 4)
    with pytest.raises(BadIndex):
        sj_embed(A, 4, 0)


def test_shuffle_small_explicit():
    assert commutation_permutation(2, 3).images == (0, 2, 4, 1, 3, 5)


def test_shuffle_against_all_permutations_2x2():
    # brute force every 4x4 permutation matrix satisfying the identity
    rng = np.random.default_rng(6)
    As = [random_unitary(2, rng) for _ in range(3)]
    sols = []
    for perm in itertools.permutations(range(4)):
        P = np.eye(4)[list(perm)]
        if all(close(np.kron(A, np.eye(2)), P @ np.kron(np.eye(2), A) @ P.T) for A in As):
            sols.append(perm)
    assert commutation_permutation(2, 2).images in sols
    assert len(sols) == 2


@pytest.mark.parametrize("m,n", [(1, 1), (2, 3), (3, 2), (4, 5), (8, 8)])
def test_shuffle_identity(m, n):
    P = commutation_permutation(m, n)
    R = P.to_dense()
    A = random_unitary(m, seed=m * 10 + n)
    assert close(np.kron(A, np.eye(n)), R @ np.kron(np.eye(n), A) @ R.T)
    assert close(np.kron(A, np.eye(n)), P.conjugate(np.kron(np.eye(n), A)))


def test_permutation_algebra():
    P = commutation_permutation(3, 4)
    assert (P @ P.inverse()).images == PermutationIndexMap.identity(12).images
    assert np.array_equal((P @ P.inverse()).to_dense(), np.eye(12))
    Q = commutation_permutation(4, 3)
    assert np.array_equal((P @ Q).to_dense(), P.to_dense() @ Q.to_dense())
    with pytest.raises(ValueError):
        PermutationIndexMap((0, 0, 1))


def test_transpositions_rebuild_permutation():
    P = commutation_permutation(3, 5)
    M = np.eye(15)
    for s, t in P.transpositions():
        M[[s, t]] = M[[t, s]]
    assert np.array_equal(M, P.to_dense())


def test_unitary_path_minus_identity():
    for t in (0.0, 0.25, 0.5, 1.0):
        expected = np.exp(1j * np.pi * t) * np.eye(3)
        assert close(unitary_path(-np.eye(3), t), expected)


def test_unitary_path_endpoints_on_permutations():
    for m, n in [(2, 2), (2, 3), (3, 5)]:
        R = commutation_permutation(m, n).to_dense()
        assert close(unitary_path(R, 0.0), np.eye(m * n))
        assert close(unitary_path(R, 1.0), R)
        assert is_unitary(unitary_path(R, 0.37))


def test_unitary_path_rejects_nonunitary():
    with pytest.raises(NotUnitary):
        unitary_path(2 * np.eye(2), 0.5)


def test_homotopy_st_endpoints():
    A = random_unitary(3, seed=9)
    n = 4
    assert close(homotopy_st(A, n, 0.0), np.kron(np.eye(n), A))
    assert close(homotopy_st(A, n, 1.0), np.kron(A, np.eye(n)))
    for t in np.linspace(0, 1, 5):
        assert is_unitary(homotopy_st(A, n, t))


def test_tr_descent_central_pairs():
    w = bezout_uv(1, 1, 2, 3)
    N = tr_dimension(w, 1, 1, 2, 3)
    assert N == 67
    for p in range(2):
        for q in range(3):
            A = np.exp(2j * np.pi * p / 2) * np.eye(2)
            B = np.exp(2j * np.pi * q / 3) * np.eye(3)
            assert np.linalg.norm(tr_apply(A, B, w, 1, 1, 2, 3) - np.eye(N)) < tolerance(N)


def test_tr_homomorphism():
    w = bezout_uv(1, 1, 2, 3)
    rng = np.random.default_rng(10)
    for _ in range(5):
        A1, A2 = random_unitary(2, rng), random_unitary(2, rng)
        B1, B2 = random_unitary(3, rng), random_unitary(3, rng)
        lhs = tr_apply(A1 @ A2, B1 @ B2, w, 1, 1, 2, 3)
        rhs = tr_apply(A1, B1, w, 1, 1, 2, 3) @ tr_apply(A2, B2, w, 1, 1, 2, 3)
        assert close(lhs, rhs)


def test_tr_shape_and_cap():
    w = bezout_uv(1, 1, 2, 3)
    with pytest.raises(DimensionMismatch):
        tr_apply(np.eye(3), np.eye(3), w, 1, 1, 2, 3)
    w5 = bezout_uv(1, 1, 2, 5)
    assert tr_dimension(w5, 1, 1, 2, 5) == 10937
    with pytest.raises(DimensionOverflow):
        tr_apply(np.eye(2), np.eye(5), w5, 1, 1, 2, 5)


def test_tr_central_symbolic():
    w = bezout_uv(1, 1, 2, 3)
    for p in range(2):
        for q in range(3):
            img = tr_central(CentralElement(2, p, 2), CentralElement(3, q, 3), w, 2, 3)
            assert img is not None and img.is_identity and img.dim == 67


def test_tr_central_matches_numeric():
    # i*I_2 and exp(i pi/3)*I_3 both have -1 as their tensor power, so the image is -I
    w = bezout_uv(1, 1, 2, 3)
    alpha, beta = CentralElement(4, 1, 2), CentralElement(6, 1, 3)
    img = tr_central(alpha, beta, w, 2, 3)
    num = tr_apply(central_scalar(alpha), central_scalar(beta), w, 1, 1, 2, 3)
    assert img is not None
    assert close(num, central_scalar(img))
    assert close(num, -np.eye(67))
    assert tr_central(CentralElement(8, 1, 2), CentralElement(3, 0, 3), w, 2, 3) is None


def test_central_element_algebra():
    c = CentralElement(6, 8, 2)
    assert c.exponent == 2
    assert c.reduced() == CentralElement(3, 1, 2)
    t = CentralElement(2, 1, 2).tensor(CentralElement(3, 1, 3))
    assert t.dim == 6
    assert close(central_scalar(t), np.kron(central_scalar(CentralElement(2, 1, 2)), central_scalar(CentralElement(3, 1, 3))))


def test_matrix_text_round_trip():
    A = random_unitary(4, seed=12)
    assert np.array_equal(read_matrix(write_matrix(A)), A)
    with pytest.raises(ValueError):
        read_matrix("2\n1,0 0,0\n")
    with pytest.raises(DimensionMismatch):
        dsum(np.ones((2, 3)), np.eye(2))


def test_random_unitary_reproducible():
    assert np.array_equal(random_unitary(5, seed=7), random_unitary(5, seed=7))
    assert is_unitary(random_unitary(16, seed=8))


def test_dimension_cap():
    with pytest.raises(DimensionOverflow):
        ktensor(np.eye(2), 13)
    with pytest.raises(DimensionOverflow):
        ksum(np.eye(4), 5, cap=16)
