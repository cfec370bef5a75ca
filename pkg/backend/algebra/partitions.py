# ===== backend/algebra/partitions.py - PARTITIONS, DIMENSIONS DE SCHUR, LITTLEWOOD-RICHARDSON =====
"""
Combinatoire des partitions utilisée par tout le pipeline :
dimension des foncteurs de Schur, produits de Littlewood-Richardson,
formule de Cauchy pour ∧^t(ℂ^m ⊗ 𝒰) et compositions bornées.

Convention : une partition est un tuple d'entiers décroissant sans zéros
terminaux ; la partition vide est `()`. Une `SchurTermSum` est un dict
{partition: coefficient} dont tous les coefficients sont > 0.
"""
import logging
from collections import Counter
from typing import Dict, Iterable, Iterator, List, Sequence, Tuple

from cachetools import LRUCache, cached

from backend.errors import ParameterRangeError
from scripts.config import Config

logger = logging.getLogger(__name__)

Partition = Tuple[int, ...]
SchurTermSum = Dict[Partition, int]


def make_partition(parts: Iterable[int]) -> Partition:
    """Valide une suite décroissante d'entiers positifs et retire les zéros terminaux."""
    parts = tuple(int(p) for p in parts)
    if any(p < 0 for p in parts):
        raise ParameterRangeError(f"partition avec une part négative : {parts}")
    if any(x < y for x, y in zip(parts, parts[1:])):
        raise ParameterRangeError(f"partition non décroissante : {parts}")
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    return parts


def conjugate(lam: Partition) -> Partition:
    """Partition transposée : lam'_j = #{i : lam_i ≥ j}."""
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


def dim_schur(lam: Sequence[int], k: int) -> int:
    """
    Dimension de 𝒮_λ ℂ^k par la formule des équerres et contenus :
    ∏ (k + c(x)) / ∏ h(x). Vaut 0 dès que len(λ) > k.
    """
    return _dim_schur(tuple(lam), k)


@cached(cache=LRUCache(maxsize=Config.CACHE_SIZE))
def _dim_schur(lam: Partition, k: int) -> int:
    if k < 0:
        raise ParameterRangeError(f"rang négatif : {k}")
    if len(lam) > k:
        return 0
    conj = conjugate(lam)
    numerator, denominator = 1, 1
    for i, row in enumerate(lam):
        for j in range(row):
            numerator *= k + j - i
            denominator *= (row - j - 1) + (conj[j] - i - 1) + 1
    return numerator // denominator


def partitions_of(t: int, max_length: int, max_part: int) -> Iterator[Partition]:
    """Partitions de t ayant au plus `max_length` parts, toutes ≤ `max_part`."""
    def _gen(remaining: int, slots: int, bound: int) -> Iterator[Partition]:
        if remaining == 0:
            yield ()
            return
        if slots == 0 or bound == 0:
            return
        for first in range(min(remaining, bound), 0, -1):
            if first * slots < remaining:
                break
            for rest in _gen(remaining - first, slots - 1, first):
                yield (first,) + rest

    if t < 0:
        return iter(())
    return _gen(t, max_length, max_part)


def partitions_in_box(rows: int, cols: int) -> List[Partition]:
    """Toutes les partitions contenues dans le rectangle rows × cols."""
    result = []
    for t in range(rows * cols + 1):
        result.extend(partitions_of(t, rows, cols))
    return result


def _lr_tableaux(lam: Partition, mu: Partition, max_length: int) -> Counter:
    """
    Remplit ν/λ lettre par lettre : la lettre k occupe une bande horizontale
    de taille μ_k, et le mot de lecture (lignes de haut en bas, de droite à
    gauche) reste un mot de Yamanouchi. Une forme ν apparaît autant de fois
    que c^ν_{λμ}.
    """
    results: Counter = Counter()

    def _place_letter(k: int, shape: List[int], prev_counts: List[int]):
        if k == len(mu):
            results[tuple(p for p in shape if p > 0)] += 1
            return
        base = shape + [0] if len(shape) < max_length else list(shape)
        rows = len(base)
        prev = prev_counts + [0] * (rows - len(prev_counts))

        def _fill_row(row: int, remaining: int, cum_cur: int, cum_prev: int, counts: List[int]):
            if row == rows:
                if remaining == 0:
                    new_shape = [b + c for b, c in zip(base, counts)]
                    while new_shape and new_shape[-1] == 0:
                        new_shape.pop()
                    _place_letter(k + 1, new_shape, counts)
                return
            limit = remaining if row == 0 else min(remaining, base[row - 1] - base[row])
            if k > 0:
                # les k+1 lus jusqu'à cette ligne ne dépassent pas les k des lignes précédentes
                limit = min(limit, cum_prev - cum_cur)
            for c in range(max(limit, -1), -1, -1):
                counts.append(c)
                _fill_row(row + 1, remaining - c, cum_cur + c, cum_prev + prev[row], counts)
                counts.pop()

        _fill_row(0, mu[k], 0, 0, [])

    _place_letter(0, list(lam), [])
    return results


@cached(cache=LRUCache(maxsize=Config.CACHE_SIZE))
def _lr_items(lam: Partition, mu: Partition, max_length: int) -> Tuple[Tuple[Partition, int], ...]:
    if len(lam) > max_length or len(mu) > max_length:
        return ()
    return tuple(sorted(_lr_tableaux(lam, mu, max_length).items(), reverse=True))


def lr_product(lam: Partition, mu: Partition, max_length: int) -> SchurTermSum:
    """𝒮_λ ⊗ 𝒮_μ = ⊕ c^ν_{λμ} 𝒮_ν, restreint aux ν de longueur ≤ max_length."""
    if max_length < 0:
        raise ParameterRangeError(f"longueur maximale négative : {max_length}")
    return dict(_lr_items(tuple(lam), tuple(mu), max_length))


@cached(cache=LRUCache(maxsize=Config.CACHE_SIZE))
def _cauchy_items(t: int, mult: int, rank: int) -> Tuple[Tuple[Partition, int], ...]:
    items = []
    for mu in partitions_of(t, rank, mult):
        coeff = dim_schur(conjugate(mu), mult)
        if coeff:
            items.append((mu, coeff))
    return tuple(items)


def cauchy_exterior(t: int, mult: int, rank: int) -> SchurTermSum:
    """
    ∧^t(ℂ^mult ⊗ 𝒰) pour 𝒰 de rang `rank` : somme des 𝒮_μ 𝒰 avec μ ⊢ t,
    len(μ) ≤ rank, μ_1 ≤ mult, de coefficient dim 𝒮_{μ'} ℂ^mult.
    """
    if t < 0 or mult < 0 or rank < 0:
        raise ParameterRangeError(f"paramètres de Cauchy invalides : t={t}, m={mult}, rang={rank}")
    return dict(_cauchy_items(t, mult, rank))


def compositions(t: int, caps: Sequence[int]) -> List[Tuple[int, ...]]:
    """Toutes les suites (t_1, …, t_p) avec 0 ≤ t_c ≤ caps[c] et Σ t_c = t, en ordre lexicographique."""
    caps = tuple(caps)
    tails = [0] * (len(caps) + 1)
    for c in range(len(caps) - 1, -1, -1):
        tails[c] = tails[c + 1] + caps[c]

    def _gen(c: int, remaining: int) -> Iterator[Tuple[int, ...]]:
        if c == len(caps):
            if remaining == 0:
                yield ()
            return
        low = max(0, remaining - tails[c + 1])
        for value in range(low, min(caps[c], remaining) + 1):
            for rest in _gen(c + 1, remaining - value):
                yield (value,) + rest

    if t < 0 or t > tails[0]:
        return []
    return list(_gen(0, t))
