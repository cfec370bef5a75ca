import os
import sys
import logging
from math import comb

import pytest

# Configuration du logging
logging.basicConfig(level=logging.INFO, format='%(asctime)s - %(levelname)s - %(message)s')

# Ajouter de la racine du project au chemin Python
project_root = os.path.abspath(os.path.join(os.path.dirname(__file__), '..'))
if project_root not in sys.path:
    sys.path.insert(0, project_root)

from backend.algebra.partitions import (
    cauchy_exterior,
    compositions,
    conjugate,
    dim_schur,
    lr_product,
    make_partition,
    partitions_in_box,
    partitions_of,
)
from backend.errors import ParameterRangeError


def test_make_partition_strips_zeros():
    assert make_partition([3, 1, 0, 0]) == (3, 1)
    assert make_partition([]) == ()


@pytest.mark.parametrize("bad", [[1, 2], [2, -1]])
def test_make_partition_rejects_invalid(bad):
    with pytest.raises(ParameterRangeError):
        make_partition(bad)


def test_conjugate():
    assert conjugate((3, 1)) == (2, 1, 1)
    assert conjugate(()) == ()
    assert conjugate((2, 2)) == (2, 2)


@pytest.mark.parametrize("lam, k, expected", [
    ((2, 1), 3, 8),
    ((1, 1, 1), 3, 1),
    ((3, 3, 3), 3, 1),
    ((), 0, 1),
    ((1, 1, 1, 1), 3, 0),
    ((1,), 5, 5),
    ((2,), 3, 6),
])
def test_dim_schur_examples(lam, k, expected):
    assert dim_schur(lam, k) == expected


def test_dim_schur_exterior_and_symmetric_powers():
    for k in range(1, 7):
        for t in range(0, k + 1):
            assert dim_schur((1,) * t, k) == comb(k, t)
        for t in range(0, 5):
            assert dim_schur((t,) if t else (), k) == comb(k + t - 1, t)


@pytest.mark.parametrize("lam, mu, max_length, expected", [
    ((1,), (1,), 2, {(2,): 1, (1, 1): 1}),
    ((2, 1), (2, 1), 3, {(4, 2): 1, (4, 1, 1): 1, (3, 3): 1, (3, 2, 1): 2, (3, 1, 1, 1): 0,
                         (2, 2, 2): 1, (2, 2, 1, 1): 0}),
    ((1,), (1,), 1, {(2,): 1}),
])
def test_lr_product_examples(lam, mu, max_length, expected):
    expected = {nu: c for nu, c in expected.items() if c}
    assert lr_product(lam, mu, max_length) == expected


def test_lr_product_with_empty_factor():
    assert lr_product((), (3, 1), 4) == {(3, 1): 1}
    assert lr_product((2, 2), (), 4) == {(2, 2): 1}


def test_lr_product_is_symmetric():
    shapes = partitions_in_box(3, 3)
    for lam in shapes:
        for mu in shapes:
            for max_length in (3, 6):
                assert lr_product(lam, mu, max_length) == lr_product(mu, lam, max_length)


def test_lr_dimension_consistency():
    shapes = partitions_in_box(2, 3)
    for k in range(1, 6):
        for lam in shapes:
            for mu in shapes:
                product = lr_product(lam, mu, k)
                total = sum(c * dim_schur(nu, k) for nu, c in product.items())
                assert total == dim_schur(lam, k) * dim_schur(mu, k)


def test_lr_terms_have_correct_size():
    for lam in partitions_in_box(3, 3):
        for nu in lr_product(lam, (2, 1), 6):
            assert sum(nu) == sum(lam) + 3


def test_partitions_of_respects_bounds():
    parts = list(partitions_of(5, 2, 3))
    assert parts == [(3, 2)]
    assert list(partitions_of(0, 0, 0)) == [()]
    assert len(partitions_in_box(4, 4)) == comb(8, 4)


@pytest.mark.parametrize("t, mult, rank, expected", [
    (3, 3, 2, {(3,): 1, (2, 1): 8}),
    # coefficient de 𝒮_{(1,1,1)}𝒰 : dim S^3 ℂ^2 = 4, total 2·8 + 4·1 = C(6, 3)
    (3, 2, 3, {(2, 1): 2, (1, 1, 1): 4}),
    (4, 3, 2, {(2, 2): 6, (3, 1): 3}),
    (0, 2, 3, {(): 1}),
])
def test_cauchy_exterior_examples(t, mult, rank, expected):
    assert cauchy_exterior(t, mult, rank) == expected


def test_dim_schur_accepts_lists():
    assert dim_schur([2, 1], 3) == dim_schur((2, 1), 3) == 8
    assert dim_schur([], 4) == 1


def test_cauchy_completeness():
    for m in range(1, 5):
        for r in range(1, 5):
            for t in range(0, m * r + 1):
                terms = cauchy_exterior(t, m, r)
                assert sum(c * dim_schur(mu, r) for mu, c in terms.items()) == comb(m * r, t)
                assert all(len(mu) <= r and (not mu or mu[0] <= m) for mu in terms)


def test_compositions():
    assert compositions(3, (2, 2)) == [(1, 2), (2, 1)]
    assert compositions(0, (1, 1)) == [(0, 0)]
    assert compositions(5, (2, 2)) == []
    assert compositions(2, ()) == []
    assert compositions(0, ()) == [()]
