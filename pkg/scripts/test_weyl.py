import os
import sys
import logging
from itertools import permutations

import pytest

# Configuration du logging
logging.basicConfig(level=logging.INFO, format='%(asctime)s - %(levelname)s - %(message)s')

# Ajouter de la racine du project au chemin Python
project_root = os.path.abspath(os.path.join(os.path.dirname(__file__), '..'))
if project_root not in sys.path:
    sys.path.insert(0, project_root)

from backend.algebra import weyl
from backend.data.constants import PATTERN_3412, PATTERN_4231
from backend.errors import MembershipError, ParameterRangeError, SmoothnessError
from backend.models.models import GrassPerm

EXAMPLE_SMALL = GrassPerm(a=(3, 4, 6, 7), n=4, m=3)
EXAMPLE_SIX = GrassPerm(a=(5, 6, 8, 9, 11, 12), n=6, m=6)
SINGULAR = GrassPerm(a=(2, 4, 7, 8), n=4, m=4)


def _identity(n, m):
    return GrassPerm(a=tuple(range(1, n + 1)), n=n, m=m)


def test_length_examples():
    assert weyl.length(EXAMPLE_SIX) == 30
    assert weyl.length(EXAMPLE_SMALL) == 10
    assert weyl.length(_identity(3, 4)) == 0
    assert weyl.codimension(EXAMPLE_SMALL) == 2
    assert weyl.codimension(EXAMPLE_SIX) == 6


def test_r_of():
    assert weyl.r_of(EXAMPLE_SIX) == 2
    assert weyl.r_of(EXAMPLE_SMALL) == 2
    assert weyl.r_of(_identity(4, 4)) == 4
    with pytest.raises(MembershipError):
        weyl.r_of(GrassPerm(a=(5, 6), n=2, m=4))


def test_grass_perm_invariants():
    with pytest.raises(MembershipError):
        weyl.make_grass_perm((3, 3, 6, 7), 4, 3)
    with pytest.raises(MembershipError):
        weyl.make_grass_perm((3, 4, 6, 8), 4, 3)
    with pytest.raises(MembershipError):
        weyl.make_grass_perm((3, 4, 6), 4, 3)
    assert weyl.make_grass_perm([3, 4, 6, 7], 4, 3) == EXAMPLE_SMALL


def test_class_membership():
    verdict = weyl.is_in_class_Wr(EXAMPLE_SMALL)
    assert verdict and verdict.r == 2
    verdict = weyl.is_in_class_Wr(EXAMPLE_SIX)
    assert verdict and verdict.r == 2
    verdict = weyl.is_in_class_Wr(GrassPerm(a=(2, 4, 6, 7), n=4, m=3))
    assert not verdict
    assert "préfixe" in verdict.reason
    assert not weyl.is_in_class_Wr(_identity(3, 3))
    verdict = weyl.is_in_class_Wr(GrassPerm(a=(3, 4, 5, 6), n=4, m=3))
    assert not verdict
    assert "a_n" in verdict.reason


def test_bundle_multiplicities_examples():
    assert weyl.bundle_multiplicities(EXAMPLE_SMALL).mult == {2: 2, 3: 1}
    assert weyl.bundle_multiplicities(EXAMPLE_SIX).mult == {2: 2, 3: 1, 4: 2, 5: 1}
    with pytest.raises(MembershipError):
        weyl.bundle_multiplicities(SINGULAR)


def test_determinantal_w():
    assert weyl.determinantal_w(2, 3, 4) == EXAMPLE_SMALL
    assert weyl.determinantal_w(1, 5, 4).a == (2, 3, 4, 9)
    assert weyl.determinantal_w(3, 4, 4).a == (4, 6, 7, 8)
    for bad in [(0, 3, 4), (4, 4, 4), (3, 2, 4)]:
        with pytest.raises(ParameterRangeError):
            weyl.determinantal_w(*bad)


def test_determinantal_bundle_closed_form():
    for n in range(2, 5):
        for m in range(1, 5):
            for k in range(1, min(n - 1, m) + 1):
                w = weyl.determinantal_w(k, m, n)
                expected = {n - k: m - k + 1}
                expected.update({i: 1 for i in range(n - k + 1, n)})
                assert weyl.bundle_multiplicities(w).mult == expected
                assert weyl.is_in_class_Wr(w).r == n - k
                assert weyl.codimension(w) == (m - k) * (n - k)


def test_bundle_rank_and_multiplicity_sum():
    for n in range(2, 6):
        for m in range(1, 6):
            for w in weyl.enumerate_class_Wr(n, m):
                xi = weyl.bundle_multiplicities(w)
                assert sum(xi.mult.values()) == m
                assert all(v > 0 for v in xi.mult.values())


def test_w_prime():
    assert weyl.w_prime(EXAMPLE_SMALL) == (3, 4, 2, 1)
    assert weyl.w_prime(_identity(4, 2)) == (1, 2, 3, 4)
    for w in weyl.enumerate_class_Wr(4, 3):
        r = weyl.r_of(w)
        assert weyl.w_prime(w) == tuple(range(4 - r + 1, 5)) + tuple(range(4 - r, 0, -1))


def test_w_max_examples():
    assert weyl.w_max(SINGULAR, 2) == (4, 2, 7, 8, 6, 5, 3, 1)
    assert weyl.w_max(EXAMPLE_SMALL, 2) == (4, 3, 6, 7, 5, 2, 1)
    assert weyl.w_max(_identity(3, 3), 1) == (1, 2, 3, 6, 5, 4)
    with pytest.raises(ParameterRangeError):
        weyl.w_max(SINGULAR, 3)


def _coset(rep, blocks):
    """Tous les éléments rep·W_J, W_J permutant les positions de chaque bloc."""
    elements = [list(rep)]
    for block in blocks:
        expanded = []
        for element in elements:
            for values in permutations([element[p] for p in block]):
                candidate = list(element)
                for p, v in zip(block, values):
                    candidate[p] = v
                expanded.append(candidate)
        elements = expanded
    return [tuple(e) for e in elements]


def test_coset_representatives_match_brute_force():
    for n in range(1, 4):
        for m in range(1, 7 - n):
            for w in weyl.enumerate_grassmannian(n, m):
                if w.a[0] > n:
                    continue
                for s in range(1, weyl.r_of(w) + 1):
                    blocks = [list(range(0, s)), list(range(n, n + m))]
                    coset = _coset(weyl.minimal_representative(w, s), blocks)
                    assert weyl.minimal_representative(w, s) == min(coset, key=weyl.inversions)
                    assert weyl.w_max(w, s) == max(coset, key=weyl.inversions)
                    assert weyl.inversions(weyl.minimal_representative(w, s)) == weyl.length(w)


def test_contains_pattern():
    assert weyl.contains_pattern((4, 2, 7, 8, 5, 6, 3, 1), PATTERN_4231)
    assert not weyl.contains_pattern((1, 2, 3, 4, 5), PATTERN_4231)
    assert weyl.contains_pattern((3, 4, 1, 2), PATTERN_3412)
    assert weyl.contains_pattern(weyl.w_max(SINGULAR, 2), PATTERN_4231)


def test_reflection_order_matches_full_bruhat_order():
    """Comparaison par paraboliques maximaux vs ordre de Bruhat sur les représentants minimaux."""
    for n in range(2, 4):
        for m in range(1, 7 - n):
            N = n + m
            for w in weyl.enumerate_grassmannian(n, m):
                if w.a[0] > n:
                    continue
                for s in range(1, min(weyl.r_of(w), n - 1) + 1):
                    w_tilde = weyl.minimal_representative(w, s)
                    for j in range(1, n + 1):
                        for i in range(max(j + 1, s + 1), N + 1):
                            t = list(weyl.transposition(i, j, N))
                            t[:s] = sorted(t[:s])
                            t[n:] = sorted(t[n:])
                            assert weyl.reflection_leq(i, j, w_tilde, s, n) == weyl.bruhat_leq(t, w_tilde)


def test_smoothness_criteria_agree_exhaustively():
    for n in range(2, 8):
        for m in range(1, 9 - n):
            for w in weyl.enumerate_grassmannian(n, m):
                if w.a[0] > n:
                    continue
                for s in range(1, min(weyl.r_of(w), n - 1) + 1):
                    assert weyl.is_smooth(w, s) == weyl.smooth_by_patterns(w, s), (w, s)


def test_singular_instance():
    assert weyl.tangent_dimension(SINGULAR, 2) > weyl.length(SINGULAR)
    assert not weyl.smooth_by_patterns(SINGULAR, 2)
    with pytest.raises(SmoothnessError):
        weyl.linearity_coordinates(SINGULAR, 2)


def test_kempf_case_is_always_smooth():
    for w in weyl.enumerate_grassmannian(3, 3):
        if w.a[0] <= 3:
            assert weyl.is_smooth(w, 1)


def test_class_Wr_is_smooth_at_s_equal_r():
    for n in range(2, 6):
        for m in range(1, 11 - n):
            for w in weyl.enumerate_class_Wr(n, m):
                r = weyl.r_of(w)
                assert weyl.tangent_dimension(w, r) == weyl.length(w)


def test_linearity_coordinates_for_class_Wr():
    for n in range(2, 6):
        for m in range(1, 6):
            for w in weyl.enumerate_class_Wr(n, m):
                r = weyl.r_of(w)
                block, trapezoid = weyl.linearity_coordinates(w, r)
                xi = weyl.bundle_multiplicities(w)
                assert block == weyl.block_coordinates_closed_form(w)
                assert len(block) == m * n - sum(mi * i for i, mi in xi.mult.items())
                assert len(trapezoid) == sum(i - 1 for i in range(r + 1, n + 1))
                assert len(block) + len(trapezoid) == weyl.length(w)


def test_linearity_coordinates_small_example():
    block, trapezoid = weyl.linearity_coordinates(EXAMPLE_SMALL, 2)
    assert len(block) == 5
    assert len(trapezoid) == 5
    assert all(i <= 3 and j <= 4 for i, j in block)


def test_opposite_cell_coordinates():
    assert weyl.opposite_cell_coordinates({4}, 7) == frozenset((i, j) for i in range(5, 8) for j in range(1, 5))
    full = weyl.opposite_cell_coordinates(set(range(1, 6)), 6)
    assert len(full) == 15
    shape = weyl.opposite_cell_coordinates({2, 3, 4}, 7)
    assert len(shape) == 3 * 4 + 1 * 2 + 1 * 3
    with pytest.raises(ParameterRangeError):
        weyl.opposite_cell_coordinates(set(), 5)


def test_determinantal_w_max_avoids_patterns():
    for n in range(2, 6):
        for m in range(1, 6):
            for k in range(1, min(n - 1, m) + 1):
                top = weyl.determinantal_w_max(k, m, n)
                assert sorted(top) == list(range(1, m + n + 1))
                assert not weyl.contains_pattern(top, PATTERN_4231)
                assert not weyl.contains_pattern(top, PATTERN_3412)


def test_enumerate_class_Wr_members():
    members = list(weyl.enumerate_class_Wr(4, 3))
    assert EXAMPLE_SMALL in members
    assert all(weyl.is_in_class_Wr(w) for w in members)
    everything = [w for w in weyl.enumerate_grassmannian(4, 3) if weyl.is_in_class_Wr(w)]
    assert sorted(w.a for w in everything) == sorted(w.a for w in members)
