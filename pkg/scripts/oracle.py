"""
Implémentations de contrôle, volontairement naïves, utilisées uniquement par
les tests pour certifier les chemins rapides de backend.algebra.partitions.
"""
import os
import sys
from collections import Counter
from itertools import combinations_with_replacement, permutations
from math import comb
from typing import Dict, List, Tuple

project_root = os.path.abspath(os.path.join(os.path.dirname(__file__), '..'))
if project_root not in sys.path:
    sys.path.insert(0, project_root)

from backend.data.constants import ORACLE_MAX_CELLS, ORACLE_MAX_LR_SIZE, ORACLE_MAX_RANK
from backend.errors import OracleBoundError
from backend.models.models import BundleSpec

Partition = Tuple[int, ...]


def dim_schur_ssyt(lam: Partition, k: int) -> int:
    """Nombre de tableaux semi-standards de forme λ à entrées dans 1..k, ligne par ligne."""
    if sum(lam) > ORACLE_MAX_CELLS or k > ORACLE_MAX_RANK:
        raise OracleBoundError(f"borne dépassée : |λ|={sum(lam)} (max {ORACLE_MAX_CELLS}), k={k} (max {ORACLE_MAX_RANK})")
    memo: Dict[Tuple[int, Tuple[int, ...]], int] = {}

    def _count(row: int, above: Tuple[int, ...]) -> int:
        if row == len(lam):
            return 1
        key = (row, above)
        if key not in memo:
            total = 0
            for candidate in combinations_with_replacement(range(1, k + 1), lam[row]):
                if all(candidate[c] > above[c] for c in range(len(candidate))):
                    total += _count(row + 1, candidate)
            memo[key] = total
        return memo[key]

    first_above = (0,) * (lam[0] if lam else 0)
    return _count(0, first_above)


def _horizontal_strips(shape: Partition, a: int) -> List[Partition]:
    """Pieri : formes ν ⊃ shape avec ν/shape bande horizontale de taille a."""
    rows = list(shape) + [0]
    results = []

    def _gen(i: int, remaining: int, acc: List[int]):
        if i == len(rows):
            if remaining == 0:
                results.append(tuple(p for p in acc if p > 0))
            return
        bound = remaining if i == 0 else min(remaining, rows[i - 1] - rows[i])
        for c in range(bound + 1):
            _gen(i + 1, remaining - c, acc + [rows[i] + c])

    _gen(0, a, [])
    return results


def _conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


def _vertical_strips(shape: Partition, a: int) -> List[Partition]:
    return [_conjugate(nu) for nu in _horizontal_strips(_conjugate(shape), a)]


def _sign(perm: Tuple[int, ...]) -> int:
    inv = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])
    return -1 if inv % 2 else 1


def lr_bruteforce(lam: Partition, mu: Partition, max_length: int) -> Dict[Partition, int]:
    """
    s_λ · s_μ en développant s_μ par Jacobi-Trudi (en h, ou en e sur la
    transposée si elle est plus courte) puis en appliquant Pieri terme à terme.
    """
    if sum(lam) + sum(mu) > ORACLE_MAX_LR_SIZE:
        raise OracleBoundError(f"borne dépassée : |λ|+|μ| = {sum(lam) + sum(mu)} > {ORACLE_MAX_LR_SIZE}")
    use_e = mu and len(_conjugate(mu)) < len(mu)
    rows = _conjugate(mu) if use_e else tuple(mu)
    strips = _vertical_strips if use_e else _horizontal_strips

    total: Counter = Counter()
    for perm in permutations(range(len(rows))):
        degrees = [rows[i] - i + perm[i] for i in range(len(rows))]
        if any(d < 0 for d in degrees):
            continue
        current: Counter = Counter({tuple(lam): 1})
        for d in degrees:
            nxt: Counter = Counter()
            for shape, c in current.items():
                for nu in strips(shape, d):
                    nxt[nu] += c
            current = nxt
        sign = _sign(perm)
        for shape, c in current.items():
            total[shape] += sign * c
    return {nu: c for nu, c in sorted(total.items(), reverse=True) if c != 0 and len(nu) <= max_length}


def exterior_total_dim(xi: BundleSpec, t: int) -> int:
    """dim ∧^t de la fibre de ξ, soit C(rang ξ, t)."""
    if t < 0:
        return 0
    return comb(xi.rank, t)
