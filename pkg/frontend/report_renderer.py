# ===== frontend/report_renderer.py - RENDU TEXTE ET JSON DES RAPPORTS =====
import pandas as pd
from pydantic import BaseModel

from backend.data.constants import BETTI_TOTAL_LABEL, BETTI_ZERO_SYMBOL, CHECK_LABELS
from backend.models.models import (
    BettiTable,
    CohomologyTable,
    ResolveReport,
    SmoothnessReport,
    SweepReport,
)


def _cell(value: int) -> str:
    return str(value) if value else BETTI_ZERO_SYMBOL


def betti_frame(betti: BettiTable) -> pd.DataFrame:
    """
    Grille de Betti : ligne i (indice homologique), colonne j = d - i,
    entrée β_{i,i+j}. La colonne « total » donne le rang de F_i ; les zéros
    s'affichent « - ».
    """
    if not betti.entries:
        return pd.DataFrame()
    rows = range(0, betti.length + 1)
    cols = range(0, max(d - i for i, d in betti.entries) + 1)
    grid = pd.DataFrame(
        [[betti.get(i, i + j) for j in cols] for i in rows],
        index=list(rows),
        columns=list(cols),
    )
    grid.insert(0, BETTI_TOTAL_LABEL, grid.sum(axis=1))
    return grid.map(_cell)


def render_betti_grid(betti: BettiTable) -> str:
    frame = betti_frame(betti)
    if frame.empty:
        return "(tableau vide)"
    frame.index.name = "i"
    frame.columns.name = "d-i"
    return frame.to_string()


def cohomology_frame(table: CohomologyTable) -> pd.DataFrame:
    """dim H^j(∧^t ξ) : lignes t, colonnes j."""
    dims = table.dimensions()
    if not dims:
        return pd.DataFrame()
    frame = pd.Series(dims).unstack(fill_value=0)
    frame.index.name = "t"
    frame.columns.name = "j"
    return frame


def _betti_from_report(report: ResolveReport) -> BettiTable:
    return BettiTable(entries={(e.i, e.d): e.rank for e in report.betti}, codim=report.codim)


def _table_from_report(report: ResolveReport) -> CohomologyTable:
    """Reconstruit la table à partir des termes sérialisés (« 0 » pour la partition vide)."""
    entries = {
        (e.t, e.j): {tuple(int(p) for p in key.split(",")) if key != "0" else (): c for key, c in e.terms.items()}
        for e in report.cohomology
    }
    return CohomologyTable(n=report.n, entries=entries)


def _format_poly(coeffs) -> str:
    terms = []
    for d, c in enumerate(coeffs):
        if c == 0:
            continue
        mono = "" if d == 0 else ("t" if d == 1 else f"t^{d}")
        if mono and abs(c) == 1:
            coeff = "-" if c < 0 else "+"
        else:
            coeff = f"{c:+d}"
        terms.append(f"{coeff}{mono}")
    if not terms:
        return "0"
    text = " ".join(terms)
    return text[1:] if text.startswith("+") else text


def render_resolve_text(report: ResolveReport) -> str:
    w = ",".join(map(str, report.w))
    lines = [
        f"w = ({w})  n = {report.n}  m = {report.m}  r = {report.r}",
        f"Fibré : {report.bundle}  ->  normalisé : {report.normalized_bundle}",
        f"Longueur {report.length}, codimension {report.codim}",
        "",
        "Cohomologie dim H^j(∧^t ξ) :",
        cohomology_frame(_table_from_report(report)).to_string(),
        "",
        "Tableau de Betti :",
        render_betti_grid(_betti_from_report(report)),
        "",
        f"Numérateur de Hilbert : {_format_poly(report.hilbert_numerator)}",
        f"Numérateur réduit     : {_format_poly(report.reduced_numerator)}",
        f"Multiplicité          : {report.multiplicity}",
        f"Régularité            : {report.regularity} (conjecture : {report.conjectured_regularity}, {report.conjecture_verdict})",
        "",
        "Contrôles :",
    ]
    for check_id, result in report.checks.items():
        status = "OK" if result.passed else "ÉCHEC"
        lines.append(f"  [{status}] {CHECK_LABELS.get(check_id, check_id)} - {result.detail}")
    return "\n".join(lines)


def render_sweep_text(report: SweepReport) -> str:
    if not report.rows:
        return f"Aucun élément de W_r pour n={report.n}, m={report.m}."
    frame = pd.DataFrame([row.model_dump() for row in report.rows])
    frame["w"] = frame["w"].map(lambda a: "(" + ",".join(map(str, a)) + ")")
    columns = ["w", "n", "m", "r", "bundle", "codim", "multiplicity", "regularity",
               "conjectured_regularity", "verdict", "checks_passed", "shape"]
    summary = f"{len(report.rows)} éléments, {len(report.disagreements)} désaccord(s) avec la conjecture"
    return frame[columns].to_string(index=False) + "\n\n" + summary


def render_smooth_text(report: SmoothnessReport) -> str:
    w = ",".join(map(str, report.w))
    top = ",".join(map(str, report.w_max))
    lines = [
        f"w = ({w})  n = {report.n}  m = {report.m}  s = {report.s}",
        f"w_max = ({top})",
        f"Dimension tangente {report.tangent_dimension}, longueur {report.length} -> "
        f"{'lisse' if report.smooth_by_tangent else 'singulière'}",
        f"Motif 4231 : {'oui' if report.contains_4231 else 'non'}, motif 3412 : {'oui' if report.contains_3412 else 'non'}",
        f"Critères concordants : {'oui' if report.agree else 'NON'}",
    ]
    if report.block_coordinates is not None:
        lines.append(f"|V_w| = {len(report.block_coordinates)}, |V'_w| = {len(report.trapezoid_coordinates)}")
    return "\n".join(lines)


def render_structured(report: BaseModel) -> str:
    return report.model_dump_json(indent=2)
