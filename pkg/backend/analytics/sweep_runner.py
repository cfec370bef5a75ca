# ===== backend/analytics/sweep_runner.py - BALAYAGE DE LA CLASSE W_r =====
import logging
from concurrent.futures import ProcessPoolExecutor
from typing import List, Tuple

from backend.algebra import weyl
from backend.analytics.resolution_calculator import ResolutionCalculator
from backend.data.constants import CHECK_HILBERT_DIVISIBILITY
from backend.errors import ParameterRangeError
from backend.models.models import GrassPerm, SweepReport, SweepRow

logger = logging.getLogger(__name__)


def sweep_targets(n: int, m: int, up_to: bool = False) -> List[GrassPerm]:
    """Les w ∈ W_r à traiter : taille exacte (n, m), ou tous 2 ≤ n' ≤ n, 1 ≤ m' ≤ m."""
    if n < 1 or m < 1:
        raise ParameterRangeError(f"bornes de balayage invalides : n={n}, m={m}")
    sizes: List[Tuple[int, int]] = [(n, m)]
    if up_to:
        sizes = [(nn, mm) for nn in range(2, n + 1) for mm in range(1, m + 1)]
    return [w for nn, mm in sizes for w in weyl.enumerate_class_Wr(nn, mm)]


def sweep_one(w: GrassPerm, normalize: bool = True) -> SweepRow:
    calculator = ResolutionCalculator(w, normalize=normalize)
    betti = calculator.get_betti_table()
    validation = calculator.validate()
    hilbert_ok = validation.checks[CHECK_HILBERT_DIVISIBILITY].passed
    return SweepRow(
        w=list(w.a),
        n=w.n,
        m=w.m,
        r=calculator.r,
        bundle=str(calculator.get_bundle()),
        codim=weyl.codimension(w),
        multiplicity=calculator.get_hilbert_data().multiplicity if hilbert_ok else 0,
        regularity=calculator.get_regularity(),
        conjectured_regularity=calculator.get_conjectured_regularity(),
        verdict=calculator.get_verdict(),
        checks_passed=validation.all_passed,
        shape=f"{betti.length}x{max((d - i for i, d in betti.entries), default=0)}",
    )


class SweepRunner:
    """Distribue le calcul par w sur un pool de processus ; l'ordre d'entrée est conservé."""

    def __init__(self, workers: int = 1, normalize: bool = True):
        self.workers = max(1, workers)
        self.normalize = normalize

    def run(self, n: int, m: int, up_to: bool = False) -> SweepReport:
        targets = sweep_targets(n, m, up_to)
        logger.info(f"Balayage de {len(targets)} éléments de W_r (n={n}, m={m}, workers={self.workers})")
        if self.workers == 1 or len(targets) <= 1:
            rows = [self._run_one(w) for w in targets]
        else:
            with ProcessPoolExecutor(max_workers=self.workers) as pool:
                rows = list(pool.map(sweep_one, targets, [self.normalize] * len(targets)))
        report = SweepReport(n=n, m=m, up_to=up_to, rows=rows)
        for row in report.disagreements:
            logger.warning(f"Contre-exemple à la conjecture de régularité : w={row.w} "
                           f"(régularité {row.regularity}, conjecture {row.conjectured_regularity})")
        logger.info(f"Balayage terminé : {len(rows)} éléments, {len(report.disagreements)} désaccord(s)")
        return report

    def _run_one(self, w: GrassPerm) -> SweepRow:
        logger.info(f"Traitement de w={w}...")
        return sweep_one(w, self.normalize)
