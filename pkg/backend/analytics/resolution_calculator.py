# ===== backend/analytics/resolution_calculator.py - MOTEUR DE CALCUL DES RÉSOLUTIONS =====
"""
Assemble le tableau de Betti de ℂ[Y_P(w)] à partir de la table de
cohomologie de ∧^* 𝒰_w, puis calcule série de Hilbert, multiplicité et
régularité, et contrôle la cohérence du résultat.
"""
import logging
from typing import Dict, List, Optional

import sympy as sp

from backend.algebra import bundlecalc, weyl
from backend.algebra.partitions import dim_schur
from backend.data.constants import (
    CHECK_ALTERNATING_SUM,
    CHECK_HILBERT_DIVISIBILITY,
    CHECK_LENGTH_EQUALS_CODIM,
    CHECK_NO_LINEAR_FORMS,
    CHECK_UNIQUE_GENERATOR,
    VERDICT_AGREE,
    VERDICT_DISAGREE,
)
from backend.errors import ConsistencyError, MembershipError
from backend.models.models import (
    BettiEntry,
    BettiTable,
    BundleSpec,
    CheckResult,
    CohomologyEntry,
    CohomologyTable,
    GrassPerm,
    HilbertData,
    ResolveReport,
    ValidationReport,
)

logger = logging.getLogger(__name__)

_t = sp.Symbol('t')


def betti_from_cohomology(table: CohomologyTable, w: Optional[GrassPerm] = None) -> BettiTable:
    """β_{t-j, t} = dim H^j(∧^t ξ)."""
    entries: Dict = {}
    for (t, j), terms in sorted(table.entries.items()):
        i = t - j
        if i < 0:
            raise ConsistencyError(f"pas une résolution : indice homologique négatif en (t={t}, j={j})")
        dim = sum(c * dim_schur(g, table.n) for g, c in terms.items())
        if dim:
            entries[(i, t)] = entries.get((i, t), 0) + dim
    codim = weyl.codimension(w) if w is not None else None
    ambient = w.m * w.n if w is not None else None
    return BettiTable(entries=entries, codim=codim, ambient=ambient)


def betti_numerator(betti: BettiTable) -> List[int]:
    """Coefficients de N(t) = Σ (-1)^i β_{i,d} t^d, par degré croissant."""
    top = max((d for _, d in betti.entries), default=0)
    coeffs = [0] * (top + 1)
    for (i, d), rank in betti.entries.items():
        coeffs[d] += (-1) ** i * rank
    return coeffs


def _divide_by_one_minus_t(coeffs: List[int], c: int) -> List[int]:
    numerator = sp.Poly.from_list(list(reversed(coeffs)), _t)
    quotient, remainder = sp.div(numerator, sp.Poly((1 - _t) ** c, _t))
    if not remainder.is_zero:
        raise ConsistencyError(f"le numérateur n'est pas divisible par (1-t)^{c}")
    reduced = [int(x) for x in reversed(quotient.all_coeffs())]
    while len(reduced) > 1 and reduced[-1] == 0:
        reduced.pop()
    return reduced


def hilbert_data(betti: BettiTable, w: GrassPerm) -> HilbertData:
    numerator = betti_numerator(betti)
    c = weyl.codimension(w)
    reduced = _divide_by_one_minus_t(numerator, c)
    multiplicity = sum(reduced)
    if multiplicity <= 0:
        raise ConsistencyError(f"multiplicité non positive ({multiplicity}) pour w={w}")
    return HilbertData(
        numerator=numerator,
        reduced_numerator=reduced,
        mn=w.m * w.n,
        codim=c,
        multiplicity=multiplicity,
    )


def euler_numerator(table: CohomologyTable) -> List[int]:
    """Σ_k (-1)^k χ(∧^k ξ) t^k ; coïncide avec le numérateur issu du tableau de Betti."""
    top = max((t for t, _ in table.entries), default=0)
    coeffs = [(-1) ** k * bundlecalc.euler_characteristic(table, k) for k in range(top + 1)]
    return coeffs


def regularity(table: CohomologyTable) -> int:
    return max((j for _, j in table.entries), default=0)


def regularity_from_betti(betti: BettiTable) -> int:
    return max((d - i for i, d in betti.entries), default=0)


def conjectured_regularity(w: GrassPerm) -> int:
    """Σ_i (m_i - 1)·i sur le fibré non normalisé de w."""
    xi = weyl.bundle_multiplicities(w)
    return sum((m - 1) * i for i, m in xi.mult.items())


def validate(betti: BettiTable, w: GrassPerm) -> ValidationReport:
    c = weyl.codimension(w)
    checks = {}

    alternating = sum((-1) ** i * rank for (i, _), rank in betti.entries.items())
    checks[CHECK_ALTERNATING_SUM] = CheckResult(
        passed=(c == 0 or alternating == 0),
        detail=f"Σ(-1)^i β_i = {alternating}",
    )

    degree_zero = {d: rank for (i, d), rank in betti.entries.items() if i == 0}
    checks[CHECK_UNIQUE_GENERATOR] = CheckResult(
        passed=degree_zero == {0: 1},
        detail=f"F_0 = {degree_zero}",
    )

    linear = betti.get(1, 1)
    checks[CHECK_NO_LINEAR_FORMS] = CheckResult(passed=linear == 0, detail=f"β_1,1 = {linear}")

    checks[CHECK_LENGTH_EQUALS_CODIM] = CheckResult(
        passed=betti.length == c,
        detail=f"longueur {betti.length}, codimension {c}",
    )

    try:
        data = hilbert_data(betti, w)
        checks[CHECK_HILBERT_DIVISIBILITY] = CheckResult(passed=True, detail=f"multiplicité {data.multiplicity}")
    except ConsistencyError as e:
        checks[CHECK_HILBERT_DIVISIBILITY] = CheckResult(passed=False, detail=str(e))

    report = ValidationReport(checks=checks)
    for check_id in report.failed:
        logger.warning(f"Contrôle échoué pour w={w} : {check_id} ({checks[check_id].detail})")
    return report


class ResolutionCalculator:
    """
    Moteur de calcul centralisé pour un w ∈ W_r : fibré, normalisation,
    table de cohomologie, tableau de Betti et invariants numériques.
    Les résultats intermédiaires sont calculés à la demande puis conservés.
    """

    def __init__(self, w: GrassPerm, normalize: bool = True):
        verdict = weyl.is_in_class_Wr(w)
        if not verdict:
            raise MembershipError(f"w={w} n'appartient pas à la classe W_r : {verdict.reason}")
        self.w = w
        self.r = verdict.r
        self.normalize = normalize
        self._bundle: Optional[BundleSpec] = None
        self._effective_bundle: Optional[BundleSpec] = None
        self._table: Optional[CohomologyTable] = None
        self._betti: Optional[BettiTable] = None
        self._hilbert: Optional[HilbertData] = None
        self._validation: Optional[ValidationReport] = None

    def get_bundle(self) -> BundleSpec:
        if self._bundle is None:
            self._bundle = bundlecalc.build_bundle(self.w)
        return self._bundle

    def get_effective_bundle(self) -> BundleSpec:
        """Fibré réellement poussé : la forme normalisée, sauf si la normalisation est désactivée."""
        if self._effective_bundle is None:
            bundle = self.get_bundle()
            self._effective_bundle = bundlecalc.normalize_bundle(bundle, self.r) if self.normalize else bundle
        return self._effective_bundle

    def get_cohomology_table(self) -> CohomologyTable:
        if self._table is None:
            logger.info(f"Calcul de la résolution pour w={self.w} (n={self.w.n}, m={self.w.m})...")
            self._table = bundlecalc.cohomology_table(self.get_effective_bundle())
        return self._table

    def get_betti_table(self) -> BettiTable:
        if self._betti is None:
            self._betti = betti_from_cohomology(self.get_cohomology_table(), self.w)
        return self._betti

    def get_hilbert_data(self) -> HilbertData:
        if self._hilbert is None:
            self._hilbert = hilbert_data(self.get_betti_table(), self.w)
        return self._hilbert

    def get_regularity(self) -> int:
        return regularity(self.get_cohomology_table())

    def get_conjectured_regularity(self) -> int:
        return conjectured_regularity(self.w)

    def get_verdict(self) -> str:
        reg, conj = self.get_regularity(), self.get_conjectured_regularity()
        if reg == conj:
            return VERDICT_AGREE
        logger.warning(f"Régularité {reg} différente de la valeur conjecturée {conj} pour w={self.w}")
        return VERDICT_DISAGREE

    def validate(self) -> ValidationReport:
        if self._validation is None:
            self._validation = validate(self.get_betti_table(), self.w)
        return self._validation

    def to_report(self) -> ResolveReport:
        table = self.get_cohomology_table()
        betti = self.get_betti_table()
        validation = self.validate()
        hilbert = self.get_hilbert_data() if validation.checks[CHECK_HILBERT_DIVISIBILITY].passed else None
        cohomology = [
            CohomologyEntry(
                t=t,
                j=j,
                dimension=table.dimension(t, j),
                terms={",".join(map(str, g)) or "0": c for g, c in terms.items()},
            )
            for (t, j), terms in sorted(table.entries.items())
        ]
        report = ResolveReport(
            w=list(self.w.a),
            n=self.w.n,
            m=self.w.m,
            r=self.r,
            length=weyl.length(self.w),
            codim=weyl.codimension(self.w),
            bundle=self.get_bundle().mult,
            normalized_bundle=self.get_effective_bundle().mult,
            cohomology=cohomology,
            betti=[BettiEntry(i=i, d=d, rank=rank) for (i, d), rank in sorted(betti.entries.items())],
            hilbert_numerator=betti_numerator(betti),
            reduced_numerator=hilbert.reduced_numerator if hilbert else [],
            multiplicity=hilbert.multiplicity if hilbert else 0,
            regularity=self.get_regularity(),
            conjectured_regularity=self.get_conjectured_regularity(),
            conjecture_verdict=self.get_verdict(),
            checks=validation.checks,
        )
        logger.info(f"Résolution de w={self.w} : codim {report.codim}, multiplicité {report.multiplicity}, régularité {report.regularity}")
        return report
