# ===== backend/algebra/bundlecalc.py - COHOMOLOGIE DE ∧^t ξ PAR POUSSÉES ITÉRÉES =====
"""
Calcul de H^j(GL_n/Q, ∧^t ξ) pour ξ = ⊕ ℂ^{m_i} ⊗ 𝒰_i.

Le drapeau GL_n/Q des indices j_1 < … < j_p se projette successivement sur
les drapeaux plus courts ; à chaque niveau c, on développe ∧^{t_c}(ℂ^{m_c} ⊗ 𝒰_{j_c})
par Cauchy, on le multiplie (Littlewood-Richardson) avec le facteur déjà
transporté, puis on pousse chaque terme irréductible par Bott sur la
grassmannienne relative Gr(j_c, j_{c+1}). Chaque terme a une seule image
non nulle, donc la récursion est exacte.
"""
import logging
from collections import Counter, defaultdict
from typing import Dict, List, Tuple

from cachetools import LRUCache, cached

from backend.algebra.bott import cohom_schur_on_grass
from backend.algebra.partitions import Partition, cauchy_exterior, compositions, dim_schur, lr_product
from backend.algebra.weyl import bundle_multiplicities
from backend.errors import ParameterRangeError
from backend.models.models import BundleSpec, CohomologyTable, GrassPerm
from scripts.config import Config

logger = logging.getLogger(__name__)

# (γ, degré) -> coefficient
PushTerms = Dict[Tuple[Partition, int], int]


def build_bundle(w: GrassPerm) -> BundleSpec:
    """Fibré 𝒰_w associé à w ∈ W_r, sur les drapeaux de ℂ^n."""
    xi = bundle_multiplicities(w)
    logger.info(f"Fibré associé à w={w} : ξ = {xi} (rang {xi.rank})")
    return xi


def normalize_bundle(xi: BundleSpec, r: int = None) -> BundleSpec:
    """
    Remplace 𝒰_i (m_i = 1, i ≥ r+1) par 𝒰_{i-1}, en partant toujours du plus
    petit indice concerné, jusqu'à ce qu'aucun ne reste. r vaut par défaut le
    plus petit indice de ξ.
    """
    mult = dict(xi.mult)
    if not mult:
        return xi
    if r is None:
        r = min(mult)
    while True:
        candidates = [i for i in sorted(mult) if i >= r + 1 and mult[i] == 1]
        if not candidates:
            break
        i = candidates[0]
        del mult[i]
        mult[i - 1] = mult.get(i - 1, 0) + 1
    normalized = BundleSpec(n=xi.n, mult=mult)
    if normalized.mult != xi.mult:
        logger.info(f"Fibré normalisé : {xi} -> {normalized}")
    return normalized


def _levels(xi: BundleSpec) -> List[Tuple[int, int, int]]:
    """(j_c, m_c, j_{c+1}) pour chaque niveau, le dernier poussant vers n."""
    indices = xi.indices
    targets = indices[1:] + [xi.n]
    return [(j, xi.mult[j], nxt) for j, nxt in zip(indices, targets)]


@cached(cache=LRUCache(maxsize=Config.CACHE_SIZE))
def _push_term(j: int, mult: int, target: int, carried: Partition, t: int) -> Tuple[Tuple[Partition, int, int], ...]:
    acc: Counter = Counter()
    for mu, dim_mu in cauchy_exterior(t, mult, j).items():
        for nu, c in lr_product(carried, mu, j).items():
            pushed = cohom_schur_on_grass(nu, j, target)
            if pushed is None:
                continue
            acc[(pushed.output, pushed.degree)] += dim_mu * c
    return tuple((gamma, deg, coeff) for (gamma, deg), coeff in sorted(acc.items()) if coeff)


def pushforward_level(xi: BundleSpec, level: int = 0) -> Dict[int, PushTerms]:
    """
    Image directe du niveau `level` seul (facteur transporté trivial), pour
    chaque t_c : {t_c: {(γ, degré): coefficient}}.
    """
    levels = _levels(xi)
    if not 0 <= level < len(levels):
        raise ParameterRangeError(f"niveau {level} hors de 0..{len(levels) - 1}")
    j, mult, target = levels[level]
    table = {}
    for t in range(mult * j + 1):
        terms = {(gamma, deg): coeff for gamma, deg, coeff in _push_term(j, mult, target, (), t)}
        if terms:
            table[t] = terms
    return table


def cohomology_in_degree(xi: BundleSpec, t: int) -> Dict[int, Dict[Partition, int]]:
    """H^*(∧^t ξ) : {degré j: {γ: multiplicité de 𝒮_γ ℂ^n}}."""
    if t < 0:
        raise ParameterRangeError(f"degré extérieur négatif : {t}")
    levels = _levels(xi)
    if not levels:
        return {0: {(): 1}} if t == 0 else {}

    result: Dict[int, Counter] = defaultdict(Counter)
    caps = [mult * j for j, mult, _ in levels]
    branches = 0
    comps = compositions(t, caps)
    for composition in comps:
        states: Counter = Counter({((), 0): 1})
        for (j, mult, target), t_c in zip(levels, composition):
            new_states: Counter = Counter()
            for (carried, deg), coeff in states.items():
                for gamma, delta, c in _push_term(j, mult, target, carried, t_c):
                    new_states[(gamma, deg + delta)] += coeff * c
            states = new_states
            if not states:
                break
        for (gamma, deg), coeff in states.items():
            result[deg][gamma] += coeff
            branches += 1
    logger.debug(f"∧^{t} ξ : {len(comps)} compositions, {branches} branches")
    return {deg: dict(sorted(terms.items())) for deg, terms in sorted(result.items()) if terms}


def cohomology_table(xi: BundleSpec) -> CohomologyTable:
    entries = {}
    for t in range(xi.rank + 1):
        for deg, terms in cohomology_in_degree(xi, t).items():
            entries[(t, deg)] = terms
    logger.info(f"Table de cohomologie de ∧ξ pour ξ = {xi} : {len(entries)} entrées non nulles")
    return CohomologyTable(n=xi.n, entries=entries)


def euler_characteristic(table: CohomologyTable, t: int) -> int:
    """Σ_j (-1)^j dim H^j(∧^t ξ)."""
    return sum(
        (-1) ** deg * coeff * dim_schur(gamma, table.n)
        for (tt, deg), terms in table.entries.items() if tt == t
        for gamma, coeff in terms.items()
    )
