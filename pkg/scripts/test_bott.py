import os
import sys
import logging
from itertools import product

import pytest

# Configuration du logging
logging.basicConfig(level=logging.INFO, format='%(asctime)s - %(levelname)s - %(message)s')

# Ajouter de la racine du project au chemin Python
project_root = os.path.abspath(os.path.join(os.path.dirname(__file__), '..'))
if project_root not in sys.path:
    sys.path.insert(0, project_root)

from backend.algebra.bott import BottResult, bott, bott_by_exchanges, cohom_schur_on_grass
from backend.algebra.partitions import make_partition, partitions_in_box
from backend.errors import ParameterRangeError


@pytest.mark.parametrize("alpha, expected", [
    ((0, 0, 3, 0, 0, 0), BottResult(degree=2, output=(1, 1, 1))),
    ((0, 0, 1, 1, 1), None),
    ((2, 1, 0), BottResult(degree=0, output=(2, 1))),
    ((0, 2), BottResult(degree=1, output=(1, 1))),
    ((0, 1), None),
])
def test_bott_examples(alpha, expected):
    assert bott(alpha) == expected


def test_dominant_weights_have_degree_zero():
    for lam in partitions_in_box(4, 4):
        alpha = tuple(lam) + (0,) * (4 - len(lam))
        assert bott(alpha) == BottResult(degree=0, output=lam)


def test_exchange_algorithm_agrees():
    for alpha in product(range(-1, 4), repeat=4):
        assert bott(alpha) == bott_by_exchanges(alpha), alpha


def test_pushforward_properties():
    for lam in partitions_in_box(4, 4):
        for d in range(4, 7):
            for j in range(len(lam), d + 1):
                if j == 0:
                    continue
                result = cohom_schur_on_grass(lam, j, d)
                if result is None:
                    continue
                assert 0 <= result.degree <= j * (d - j)
                assert sum(result.output) == sum(lam)
                assert len(result.output) <= d
                assert all(p >= 0 for p in result.output)


def test_cohom_schur_examples():
    # 𝒮_{(3)}𝒰_4 sur Gr(4, ℂ^6) : ∧³ℂ^6 en degré 2
    assert cohom_schur_on_grass((3,), 4, 6) == BottResult(degree=2, output=(1, 1, 1))
    assert cohom_schur_on_grass((2, 1), 2, 4) is None
    assert cohom_schur_on_grass((), 2, 4) == BottResult(degree=0, output=())
    assert cohom_schur_on_grass((1, 1), 2, 2) == BottResult(degree=0, output=(1, 1))


def test_cohom_schur_rejects_long_partitions():
    with pytest.raises(ParameterRangeError):
        cohom_schur_on_grass((1, 1, 1), 2, 4)
    with pytest.raises(ParameterRangeError):
        cohom_schur_on_grass((1,), 5, 4)


@pytest.mark.parametrize("lam, j, d, expected", [
    ((3, 1), 2, 4, BottResult(degree=2, output=(1, 1, 1, 1))),
    ((2,), 2, 4, None),
    ((2, 0), 2, 4, None),
])
def test_cohom_schur_on_small_grassmannians(lam, j, d, expected):
    assert cohom_schur_on_grass(lam, j, d) == expected


@pytest.mark.parametrize("alpha, expected", [
    ((0, 0, 3, 0), BottResult(degree=2, output=(1, 1, 1))),
    ((0, 2, 0), BottResult(degree=1, output=(1, 1))),
    ((0, 1, 0, 0, 0), None),
])
def test_bott_on_padded_weights(alpha, expected):
    assert bott(alpha) == expected
    assert bott_by_exchanges(alpha) == expected


def _lower_parts(bound):
    """Les queues (λ_2, …) décroissantes bornées terme à terme par `bound`."""
    for tail in product(*[range(b + 1) for b in bound]):
        if all(x >= y for x, y in zip(tail, tail[1:])):
            yield tail


@pytest.mark.parametrize("first", [3, 4])
def test_rank_four_bundles_on_six_space_in_degree_two(first):
    for tail in _lower_parts((1, 1, 1)):
        lam = make_partition((first,) + tail)
        expected = make_partition((first - 2, 1, 1) + tail)
        assert cohom_schur_on_grass(lam, 4, 6) == BottResult(degree=2, output=expected), lam


def test_rank_four_bundles_on_six_space_in_degree_four():
    for tail in _lower_parts((2, 2)):
        lam = make_partition((4, 4) + tail)
        expected = make_partition((2, 2, 2, 2) + tail)
        assert cohom_schur_on_grass(lam, 4, 6) == BottResult(degree=4, output=expected), lam


def test_pushforward_preserves_size_on_box():
    for lam in partitions_in_box(4, 4):
        for d in range(max(len(lam), 1), 7):
            for j in range(max(len(lam), 1), d + 1):
                result = cohom_schur_on_grass(lam, j, d)
                if result is not None:
                    assert sum(result.output) == sum(lam)
                    assert result.degree <= d * (d - 1) // 2
