import pytest

from azdecomp.fgab import FgabGroup, Z, is_isomorphism
from azdecomp.homotopy import OutOfStableRange
from azdecomp import induced


def test_dsum_star():
    f = induced.dsum_star(1, 1, 2)
    assert f.matrix == ((1, 1),)
    assert f.source == FgabGroup(2) and f.target == Z


def test_dsum_star_pi0_and_boundary():
    f = induced.dsum_star(0, 1, 2)
    assert f.source.is_trivial and f.target.is_trivial
    with pytest.raises(OutOfStableRange):
        induced.dsum_star(2, 1, 2)


def test_rsum_star():
    assert induced.rsum_star(3, 2, 5).matrix == ((5,),)
    assert induced.rsum_star(1, 1, 3).matrix == ((3,),)
    assert induced.rsum_star(3, 2, 1).matrix == ((1,),)


def test_tensor_star():
    f = induced.tensor_star(3, 2, 3)
    assert f.matrix == ((3, 2),)
    assert f((0, 0)) == (0,)
    with pytest.raises(OutOfStableRange):
        induced.tensor_star(4, 2, 3)


def test_rtensor_star():
    assert induced.rtensor_star(1, 2, 3).matrix == ((12,),)
    assert induced.rtensor_star(1, 2, 1).matrix == ((1,),)


def test_tensor_star_quot():
    assert induced.tensor_star_quot(3, 1, 1, 2, 3).matrix == ((3, 2),)
    assert induced.tensor_star_quot(5, 1, 1, 3, 4).matrix == ((4, 3),)
    assert induced.tensor_star_quot(2, 1, 1, 3, 4).source.is_trivial
    with pytest.raises(induced.UseQuotPi1):
        induced.tensor_star_quot(1, 1, 1, 2, 3)
    with pytest.raises(OutOfStableRange):
        induced.tensor_star_quot(4, 1, 1, 2, 3)


def test_tensor_star_quot_pi1():
    f = induced.tensor_star_quot_pi1(1, 1, 2, 3)
    # generators (x, y, alpha, beta) -> (free, Z/6)
    assert f.source == FgabGroup(2, (2, 3))
    assert f.target == FgabGroup(1, (6,))
    assert f.matrix == ((3, 2, 0, 0), (0, 0, 3, 2))
    assert f((0, 0, 0, 0)) == (0, 0)
    assert f((1, 1, 1, 1)) == (5, 5)
    assert f.is_well_defined()


def test_tensor_star_quot_pi1_torsion_bijective():
    f = induced.tensor_star_quot_pi1(1, 1, 2, 3)
    images = {f((0, 0, al, be))[1] for al in range(2) for be in range(3)}
    assert images == set(range(6))


def test_tensor_star_quot_pi1_trivial_factor():
    f = induced.tensor_star_quot_pi1(2, 1, 1, 3)
    assert f.source == FgabGroup(2, (3,))
    assert f.target == FgabGroup(1, (3,))
    assert f.matrix == ((3, 2, 0), (0, 0, 1))


def test_stab_star():
    assert induced.stab_star(1, 1, 1).matrix == ((1,),)
    assert induced.stab_star(3, 2, 7).matrix == ((1,),)
    assert induced.stab_star(0, 2, 7).source.is_trivial


def test_dsum_factorization_through_stabilization():
    for n in range(1, 9):
        for m in range(1, n + 1):
            for i in range(2 * m):
                assert induced.dsum_via_stabilization(i, m, n).equals(induced.dsum_star(i, m, n))


def test_rsum_factorization_through_block_embeddings():
    for n in range(1, 6):
        for r in range(1, 5):
            for i in range(2 * n):
                assert induced.rsum_via_embeddings(i, n, r).equals(induced.rsum_star(i, n, r))


def test_tensor_matches_sum_of_rsums():
    for n in range(2, 9):
        for m in range(1, n):
            for i in range(2 * m):
                assert induced.sum_of_rsums(i, m, n).equals(induced.tensor_star(i, m, n))


def test_rtensor_matches_induction():
    for n in range(1, 6):
        for r in range(1, 5):
            for i in range(2 * n):
                closed = induced.rtensor_star(i, n, r)
                assert induced.rtensor_inductive(i, n, r).equals(closed)
                assert induced.rtensor_via_rsum(i, n, r).equals(closed)


def test_all_maps_well_defined():
    maps = [
        induced.dsum_star(3, 2, 4),
        induced.tensor_star(1, 2, 5),
        induced.tensor_star_quot_pi1(1, 2, 3, 5),
        induced.tensor_star_quot_pi1(1, 1, 4, 9),
        induced.rtensor_inductive(3, 3, 3),
    ]
    for f in maps:
        assert f.is_well_defined()


def test_stabilization_is_iso_in_range():
    assert is_isomorphism(induced.stab_star(5, 3, 2)).is_iso
