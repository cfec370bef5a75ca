# ===== backend/algebra/bott.py - ALGORITHME DE BOTT =====
"""
Cohomologie des fibrés homogènes irréductibles sur une grassmannienne
(ou un drapeau) par le théorème de Borel-Weil-Bott.

Un poids α = (α_1, …, α_d) est décalé par ρ = (d-1, …, 1, 0). Si β = α + ρ
a deux entrées égales, toute la cohomologie s'annule ; sinon elle est
concentrée en degré #inversions(β), et la représentation obtenue est
tri_décroissant(β) - ρ.
"""
import logging
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from backend.errors import ParameterRangeError

logger = logging.getLogger(__name__)

Weight = Tuple[int, ...]


@dataclass(frozen=True)
class BottResult:
    degree: int
    output: Weight


def _strip(weight: Sequence[int]) -> Weight:
    weight = tuple(weight)
    if all(x >= 0 for x in weight):
        while weight and weight[-1] == 0:
            weight = weight[:-1]
    return weight


def bott(alpha: Sequence[int]) -> Optional[BottResult]:
    """Renvoie None quand la cohomologie est nulle, sinon (degré, représentation)."""
    d = len(alpha)
    shifted = [a + (d - 1 - i) for i, a in enumerate(alpha)]
    if len(set(shifted)) < d:
        return None
    degree = sum(1 for i in range(d) for j in range(i + 1, d) if shifted[i] < shifted[j])
    ordered = sorted(shifted, reverse=True)
    return BottResult(degree=degree, output=_strip(b - (d - 1 - i) for i, b in enumerate(ordered)))


def bott_by_exchanges(alpha: Sequence[int]) -> Optional[BottResult]:
    """
    Variante par échanges successifs : tant qu'une paire adjacente vérifie
    α_i < α_{i+1}, on la remplace par (α_{i+1} - 1, α_i + 1) ; si
    α_{i+1} = α_i + 1 la cohomologie est nulle. Le degré est le nombre
    d'échanges.
    """
    weight = list(alpha)
    steps = 0
    while True:
        for i in range(len(weight) - 1):
            if weight[i] < weight[i + 1]:
                if weight[i + 1] == weight[i] + 1:
                    return None
                weight[i], weight[i + 1] = weight[i + 1] - 1, weight[i] + 1
                steps += 1
                break
        else:
            return BottResult(degree=steps, output=_strip(weight))


def cohom_schur_on_grass(lam: Sequence[int], j: int, d: int) -> Optional[BottResult]:
    """
    Cohomologie de 𝒮_λ 𝒰_j sur la grassmannienne des quotients de rang j de
    ℂ^d (ou sur une fibre d'un drapeau relatif) : poids (0^{d-j}, λ).
    """
    if not 0 <= j <= d:
        raise ParameterRangeError(f"rang j={j} hors de 0..d={d}")
    if len(lam) > j:
        raise ParameterRangeError(f"la partition {tuple(lam)} dépasse le rang {j} du fibré")
    padded = tuple(lam) + (0,) * (j - len(lam))
    return bott((0,) * (d - j) + padded)
