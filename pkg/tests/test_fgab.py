import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import invariant_factors as sympy_invariants

from azdecomp import fgab
from azdecomp.fgab import (
    FgabGroup,
    FgabMap,
    IllFormedMap,
    ShapeMismatch,
    Z,
    canonicalize,
    compose,
    determinant,
    direct_sum,
    is_isomorphism,
    matmul,
    smith_normal_form,
)
from azdecomp.verify import brute_force_bijective, random_finite_group, random_map, shuffled_presentation


def assert_snf(M):
    U, D, V = smith_normal_form(M)
    assert matmul(matmul(U, M), V) == D
    assert abs(determinant(U)) == 1 and abs(determinant(V)) == 1
    r, c = len(M), len(M[0])
    diag = [D[i][i] for i in range(min(r, c))]
    assert all(D[i][j] == 0 for i in range(r) for j in range(c) if i != j)
    assert all(d >= 0 for d in diag)
    for x, y in zip(diag, diag[1:]):
        assert (y == 0) if x == 0 else (y % x == 0)
    return diag


def test_snf_unimodular_example():
    assert assert_snf([[3, 2], [40, 27]]) == [1, 1]


def test_snf_zero_matrix():
    U, D, V = smith_normal_form([[0, 0], [0, 0]])
    assert D == [[0, 0], [0, 0]]
    assert U == [[1, 0], [0, 1]] and V == [[1, 0], [0, 1]]


def test_snf_already_diagonal():
    assert assert_snf([[2, 0], [0, 6]]) == [2, 6]


def test_snf_coprime_diagonal_merges():
    assert assert_snf([[2, 0], [0, 3]]) == [1, 6]


def test_snf_documented_sympy_example():
    M = [[12, 6, 4, 8], [3, 9, 6, 12], [2, 16, 14, 28], [20, 10, 10, 20]]
    assert assert_snf(M) == [1, 10, 30, 0]


def test_snf_rectangular():
    M = [[12, 6, 4, 8], [3, 9, 6, 12], [2, 16, 14, 28]]
    theirs = [int(d) for d in sympy_invariants(Matrix(M), domain=ZZ)]
    assert assert_snf(M) == theirs


@given(
    st.integers(1, 6).flatmap(
        lambda r: st.integers(1, 6).flatmap(
            lambda c: st.lists(st.lists(st.integers(-50, 50), min_size=c, max_size=c), min_size=r, max_size=r)
        )
    )
)
@settings(max_examples=150, deadline=None)
def test_snf_matches_sympy_invariants(M):
    diag = assert_snf(M)
    nonzero = [d for d in diag if d]
    theirs = [int(d) for d in sympy_invariants(Matrix(M), domain=ZZ)]
    assert nonzero == [abs(d) for d in theirs if d]


def test_snf_random_reconstruction():
    rng = np.random.default_rng(11)
    for _ in range(300):
        r, c = rng.integers(1, 7, size=2)
        assert_snf(rng.integers(-50, 51, size=(r, c)).tolist())


def test_determinant_matches_numpy():
    rng = np.random.default_rng(3)
    for _ in range(50):
        k = int(rng.integers(1, 6))
        M = rng.integers(-9, 10, size=(k, k))
        assert determinant(M.tolist()) == round(np.linalg.det(M))


def test_group_rendering_and_validation():
    assert str(FgabGroup(1, (3,))) == "Z ⊕ Z/3"
    assert str(FgabGroup(2)) == "Z^2"
    assert str(FgabGroup()) == "0"
    with pytest.raises(ValueError):
        FgabGroup(0, (1,))
    assert FgabGroup.cyclic(1).is_trivial
    assert FgabGroup.from_orders([0, 1, 4, 0]) == FgabGroup(2, (4,))


def test_canonicalize():
    assert canonicalize(FgabGroup(0, (2, 3))) == FgabGroup(0, (6,))
    assert canonicalize(FgabGroup(1, (4, 6))) == FgabGroup(1, (2, 12))
    assert canonicalize(FgabGroup(0, (2, 2))) == FgabGroup(0, (2, 2))


def test_identity_is_iso():
    rep = is_isomorphism(FgabMap.identity(FgabGroup(2)))
    assert rep.is_iso and rep.kernel.is_trivial and rep.cokernel.is_trivial


def test_multiplication_by_two():
    rep = is_isomorphism(FgabMap(Z, Z, [[2]]))
    assert not rep.is_iso
    assert rep.kernel.is_trivial
    assert rep.cokernel == FgabGroup(0, (2,))


def test_kernel_of_projection():
    f = FgabMap(FgabGroup(1, (2,)), FgabGroup(0, (2,)), [[0, 1]])
    assert fgab.kernel(f) == Z
    assert fgab.cokernel(f).is_trivial


def test_kernel_torsion():
    # Z/4 -> Z/4, x -> 2x has kernel and cokernel Z/2
    f = FgabMap(FgabGroup(0, (4,)), FgabGroup(0, (4,)), [[2]])
    assert fgab.kernel(f) == FgabGroup(0, (2,))
    assert fgab.cokernel(f) == FgabGroup(0, (2,))


def test_crt_map_iso():
    # Z/2 + Z/3 -> Z/6 by (a, b) -> 3a + 2b
    f = FgabMap(FgabGroup(0, (2, 3)), FgabGroup(0, (6,)), [[3, 2]])
    assert is_isomorphism(f).is_iso
    assert brute_force_bijective(f)


def test_ill_formed_map_rejected():
    f = FgabMap(FgabGroup(0, (2,)), Z, [[1]])
    with pytest.raises(IllFormedMap):
        is_isomorphism(f)
    g = FgabMap(FgabGroup(0, (2,)), FgabGroup(0, (3,)), [[1]])
    assert not g.is_well_defined()


def test_shape_mismatch():
    with pytest.raises(ShapeMismatch):
        FgabMap(Z, Z, [[1, 2]])
    with pytest.raises(ShapeMismatch):
        compose(FgabMap(FgabGroup(2), Z, [[1, 1]]), FgabMap.identity(Z))


def test_compose_identity():
    f = FgabMap(FgabGroup(1, (4,)), FgabGroup(1, (2,)), [[3, 0], [1, 1]])
    assert compose(FgabMap.identity(f.target), f) == f
    assert compose(f, FgabMap.identity(f.source)) == f


def test_direct_sum_diag():
    f = direct_sum(FgabMap(Z, Z, [[2]]), FgabMap(Z, Z, [[3]]))
    assert f.matrix == ((2, 0), (0, 3))


def test_direct_sum_orders_free_first():
    f = direct_sum(FgabMap.identity(FgabGroup(1, (2,))), FgabMap.identity(FgabGroup(1, (3,))))
    assert f.source == FgabGroup(2, (2, 3))
    assert f.matrix == tuple(tuple(int(i == j) for j in range(4)) for i in range(4))


def test_pair_and_codiagonal():
    f = fgab.pair(FgabMap(Z, Z, [[2]]), FgabMap(Z, Z, [[5]]))
    assert f.matrix == ((2,), (5,))
    assert fgab.codiagonal(Z, 3).matrix == ((1, 1, 1),)


def test_is_isomorphism_matches_enumeration():
    rng = np.random.default_rng(2024)
    agree = iso_count = 0
    for _ in range(300):
        G = random_finite_group(rng)
        H = shuffled_presentation(rng, G) if rng.random() < 0.6 else random_finite_group(rng)
        f = random_map(rng, G, H)
        rep = is_isomorphism(f)
        assert rep.is_iso == brute_force_bijective(f)
        iso_count += rep.is_iso
        # kernel order times image order equals source order
        image = {f(x) for x in G.elements()}
        assert rep.kernel.order() * len(image) == G.order()
        assert rep.cokernel.order() * len(image) == H.order()
        agree += 1
    assert iso_count > 10


def test_compose_associative_and_dsum_iso():
    rng = np.random.default_rng(8)
    for _ in range(100):
        Gs = [random_finite_group(rng, 60) for _ in range(4)]
        f, g, h = (random_map(rng, Gs[k], Gs[k + 1]) for k in range(3))
        assert compose(h, compose(g, f)).equals(compose(compose(h, g), f))
        G1, G2 = random_finite_group(rng, 30), random_finite_group(rng, 30)
        a = random_map(rng, G1, shuffled_presentation(rng, G1))
        b = random_map(rng, G2, shuffled_presentation(rng, G2))
        assert is_isomorphism(direct_sum(a, b)).is_iso == (is_isomorphism(a).is_iso and is_isomorphism(b).is_iso)


def test_mixed_free_torsion_iso():
    # (x, a) -> (x, 3x + 2a) is an automorphism of Z + Z/5
    G = FgabGroup(1, (5,))
    f = FgabMap(G, G, [[1, 0], [3, 2]])
    assert is_isomorphism(f).is_iso
    g = FgabMap(G, G, [[2, 0], [0, 1]])
    rep = is_isomorphism(g)
    assert not rep.is_iso and rep.cokernel == FgabGroup(0, (2,))
