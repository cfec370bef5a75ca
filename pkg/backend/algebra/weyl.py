# ===== backend/algebra/weyl.py - PERMUTATIONS GRASSMANNIENNES, CLASSE W_r, LISSITÉ =====
"""
Combinatoire de W^P (P parabolique maximal d'indice n dans GL_N) :
longueur, appartenance à la classe W_r, fibré 𝒰_w associé, représentants
de classes pour P̃_s = ∩_{i=s}^{n} P_î, ordre de Bruhat, critères de lissité
et coordonnées des cellules opposées.
"""
import logging
from itertools import combinations
from typing import Iterator, List, NamedTuple, Optional, Sequence, Set, Tuple

from pydantic import ValidationError

from backend.data.constants import PATTERN_3412, PATTERN_4231, SMOOTHNESS_PATTERNS
from backend.errors import MembershipError, ParameterRangeError, SmoothnessError
from backend.models.models import BundleSpec, GrassPerm, SmoothnessReport

logger = logging.getLogger(__name__)

Permutation = Tuple[int, ...]
CoordinateSet = frozenset


class MembershipVerdict(NamedTuple):
    member: bool
    r: Optional[int]
    reason: str = ""

    def __bool__(self) -> bool:
        return self.member


def make_grass_perm(a: Sequence[int], n: int, m: int) -> GrassPerm:
    """Construit une GrassPerm ; les violations d'invariant deviennent des MembershipError."""
    try:
        return GrassPerm(a=tuple(a), n=n, m=m)
    except ValidationError as e:
        raise MembershipError(f"w={tuple(a)} n'est pas dans W^P (n={n}, m={m}) : {e.errors()[0]['msg']}") from e


def length(w: GrassPerm) -> int:
    return sum(a - i for i, a in enumerate(w.a, start=1))


def codimension(w: GrassPerm) -> int:
    return w.m * w.n - length(w)


def r_of(w: GrassPerm) -> int:
    """L'unique r avec a_r ≤ n < a_{r+1}."""
    if w.a[0] > w.n:
        raise MembershipError(f"aucune entrée ≤ n dans w={w}")
    return sum(1 for a in w.a if a <= w.n)


def is_in_class_Wr(w: GrassPerm) -> MembershipVerdict:
    if w.a[0] > w.n:
        return MembershipVerdict(False, None, "aucune entrée ≤ n")
    r = r_of(w)
    if r > w.n - 1:
        return MembershipVerdict(False, r, f"r={r} doit être ≤ n-1")
    expected = tuple(range(w.n - r + 1, w.n + 1))
    if w.a[:r] != expected:
        return MembershipVerdict(False, r, f"préfixe {w.a[:r]} différent de {expected}")
    if w.a[-1] != w.N:
        return MembershipVerdict(False, r, f"a_n={w.a[-1]} différent de N={w.N}")
    return MembershipVerdict(True, r)


def bundle_multiplicities(w: GrassPerm) -> BundleSpec:
    """𝒰_w = ⊕ 𝒰_i^{m_i} avec m_i = a_{i+1} - a_i pour r ≤ i ≤ n-1."""
    verdict = is_in_class_Wr(w)
    if not verdict:
        raise MembershipError(f"w={w} n'appartient pas à la classe W_r : {verdict.reason}")
    r = verdict.r
    mult = {i: w.a[i] - w.a[i - 1] for i in range(r, w.n)}
    return BundleSpec(n=w.n, mult=mult)


def determinantal_w(k: int, m: int, n: int) -> GrassPerm:
    """w = (k+1, …, n, N-k+1, …, N), élément de W_{n-k} dont la variété est le lieu de rang ≤ k."""
    if not (1 <= k <= n - 1) or k > m:
        raise ParameterRangeError(f"k={k} hors de 1..min(n-1, m) pour n={n}, m={m}")
    N = m + n
    return GrassPerm(a=tuple(range(k + 1, n + 1)) + tuple(range(N - k + 1, N + 1)), n=n, m=m)


def _complement(values: Sequence[int], upto: int) -> List[int]:
    present = set(values)
    return [x for x in range(1, upto + 1) if x not in present]


def w_prime(w: GrassPerm) -> Permutation:
    r = r_of(w)
    head = w.a[:r]
    return tuple(head) + tuple(sorted(_complement(head, w.n), reverse=True))


def _check_s(w: GrassPerm, s: int) -> None:
    if not 1 <= s <= r_of(w):
        raise ParameterRangeError(f"s={s} hors de 1..r(w)={r_of(w)}")


def w_max(w: GrassPerm, s: int) -> Permutation:
    """
    Représentant maximal de w dans W/W_{P̃_s} : les blocs de positions {1..s}
    et {n+1..N} sont renversés.
    """
    _check_s(w, s)
    tail = sorted(_complement(w.a, w.N), reverse=True)
    return tuple(reversed(w.a[:s])) + tuple(w.a[s:]) + tuple(tail)


def minimal_representative(w: GrassPerm, s: int) -> Permutation:
    """w̃ : blocs {1..s} et {n+1..N} triés par ordre croissant ; longueur(w̃) = longueur(w)."""
    if not 1 <= s <= w.n:
        raise ParameterRangeError(f"s={s} hors de 1..n={w.n}")
    return tuple(w.a) + tuple(_complement(w.a, w.N))


def inversions(p: Sequence[int]) -> int:
    return sum(1 for i, j in combinations(range(len(p)), 2) if p[i] > p[j])


def contains_pattern(p: Sequence[int], pattern: Sequence[int]) -> bool:
    k = len(pattern)
    target = tuple(sorted(range(k), key=lambda i: pattern[i]))
    for positions in combinations(range(len(p)), k):
        values = [p[i] for i in positions]
        if tuple(sorted(range(k), key=lambda i: values[i])) == target:
            return True
    return False


def _prefix_leq(u: Sequence[int], v: Sequence[int], l: int) -> bool:
    return all(x <= y for x, y in zip(sorted(u[:l]), sorted(v[:l])))


def bruhat_leq(u: Sequence[int], v: Sequence[int]) -> bool:
    """Ordre de Bruhat de S_N par le critère des tableaux (tous les préfixes)."""
    return all(_prefix_leq(u, v, l) for l in range(1, len(u)))


def transposition(i: int, j: int, N: int) -> Permutation:
    p = list(range(1, N + 1))
    p[i - 1], p[j - 1] = p[j - 1], p[i - 1]
    return tuple(p)


def reflection_leq(i: int, j: int, w_tilde: Sequence[int], s: int, n: int) -> bool:
    """(i, j) ≤ w̃ dans W/W_{P̃_s} : comparaison des préfixes triés pour l = s..n."""
    t = transposition(i, j, len(w_tilde))
    return all(_prefix_leq(t, w_tilde, l) for l in range(s, n + 1))


def tangent_dimension(w: GrassPerm, s: int) -> int:
    """Dimension de l'espace tangent de X_{P̃_s}(w̃) au point e_id."""
    if not 1 <= s <= w.n - 1:
        raise ParameterRangeError(f"s={s} hors de 1..n-1={w.n - 1}")
    w_tilde = minimal_representative(w, s)
    count = 0
    for j in range(1, w.n + 1):
        for i in range(max(j + 1, s + 1), w.N + 1):
            if reflection_leq(i, j, w_tilde, s, w.n):
                count += 1
    return count


def is_smooth(w: GrassPerm, s: int) -> bool:
    return tangent_dimension(w, s) == length(w)


def smooth_by_patterns(w: GrassPerm, s: int) -> bool:
    top = w_max(w, s)
    return not any(contains_pattern(top, pattern) for pattern in SMOOTHNESS_PATTERNS)


def linearity_coordinates(w: GrassPerm, s: int) -> Tuple[CoordinateSet, CoordinateSet]:
    """
    Y_{P̃}(w̃) ≅ V_w × V'_w. V_w est la partie dans le bloc m×n (ligne i-n),
    V'_w la partie dans le trapèze {j < i, s+1 ≤ i ≤ n}.
    """
    if not is_smooth(w, s):
        raise SmoothnessError(f"la propriété de linéarité exige la lissité (w={w}, s={s})")
    w_tilde = minimal_representative(w, s)
    block = frozenset(
        (i - w.n, j)
        for i in range(w.n + 1, w.N + 1)
        for j in range(1, w.n + 1)
        if reflection_leq(i, j, w_tilde, s, w.n)
    )
    trapezoid = frozenset(
        (i, j)
        for i in range(s + 1, w.n + 1)
        for j in range(1, i)
        if reflection_leq(i, j, w_tilde, s, w.n)
    )
    logger.debug(f"Coordonnées de linéarité pour w={w}, s={s} : |V|={len(block)}, |V'|={len(trapezoid)}")
    return block, trapezoid


def block_coordinates_closed_form(w: GrassPerm) -> CoordinateSet:
    """Pour w ∈ W_r : les colonnes j ≤ r s'annulent, la colonne j > r garde les lignes i ≤ a_j - n."""
    verdict = is_in_class_Wr(w)
    if not verdict:
        raise MembershipError(f"w={w} n'appartient pas à la classe W_r : {verdict.reason}")
    return frozenset(
        (i, j)
        for j in range(verdict.r + 1, w.n + 1)
        for i in range(1, w.a[j - 1] - w.n + 1)
    )


def opposite_cell_coordinates(A: Set[int], N: int) -> CoordinateSet:
    """Coordonnées (i, j) de la cellule opposée de GL_N/P_A : ∃ l ∈ A, j ≤ l < i ≤ N."""
    if not A or any(not 1 <= l <= N - 1 for l in A):
        raise ParameterRangeError(f"ensemble d'indices invalide {sorted(A)} pour N={N}")
    return frozenset(
        (i, j)
        for i in range(2, N + 1)
        for j in range(1, i)
        if any(j <= l < i for l in A)
    )


def determinantal_w_max(k: int, m: int, n: int) -> Permutation:
    """Représentant maximal du lieu de rang ≤ k pour la désingularisation par P_{n-k, n}."""
    w = determinantal_w(k, m, n)
    N = w.N
    return tuple(w.a) + tuple(range(N - k, n, -1)) + tuple(range(k, 0, -1))


def enumerate_grassmannian(n: int, m: int) -> Iterator[GrassPerm]:
    for a in combinations(range(1, m + n + 1), n):
        yield GrassPerm(a=a, n=n, m=m)


def enumerate_class_Wr(n: int, m: int) -> Iterator[GrassPerm]:
    """Tous les w ∈ W_r pour 1 ≤ r ≤ n-1, r croissant puis ordre lexicographique."""
    N = m + n
    for r in range(1, n):
        head = tuple(range(n - r + 1, n + 1))
        for middle in combinations(range(n + 1, N), n - r - 1):
            yield GrassPerm(a=head + middle + (N,), n=n, m=m)


def smoothness_report(w: GrassPerm, s: int) -> SmoothnessReport:
    """Les deux critères de lissité pour X_{P̃_s}(w̃), et les coordonnées de linéarité si lisse."""
    top = w_max(w, s)
    tangent = tangent_dimension(w, s)
    by_tangent = tangent == length(w)
    found = {pattern: contains_pattern(top, pattern) for pattern in SMOOTHNESS_PATTERNS}
    has_4231, has_3412 = found[PATTERN_4231], found[PATTERN_3412]
    by_patterns = not any(found.values())
    block = trapezoid = None
    if by_tangent:
        block, trapezoid = linearity_coordinates(w, s)
    if by_tangent != by_patterns:
        logger.warning(f"Critères de lissité discordants pour w={w}, s={s}")
    return SmoothnessReport(
        w=list(w.a),
        n=w.n,
        m=w.m,
        s=s,
        length=length(w),
        w_max=list(top),
        tangent_dimension=tangent,
        smooth_by_tangent=by_tangent,
        contains_4231=has_4231,
        contains_3412=has_3412,
        smooth_by_patterns=by_patterns,
        agree=by_tangent == by_patterns,
        block_coordinates=sorted(block) if block is not None else None,
        trapezoid_coordinates=sorted(trapezoid) if trapezoid is not None else None,
    )
