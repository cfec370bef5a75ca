"""
Ligne de commande : résolutions libres minimales des cellules opposées
de variétés de Schubert de la classe W_r.

    python scripts/schubert_cli.py resolve --n 4 --m 3 --w 3,4,6,7
    python scripts/schubert_cli.py resolve --n 4 --m 3 --determinantal --k 2 --format json
    python scripts/schubert_cli.py sweep --n 4 --m 4 --up-to --workers 4
    python scripts/schubert_cli.py check-smooth --n 4 --m 4 --w 2,4,7,8 --s 2
"""
import argparse
import logging
import os
import sys
from typing import List, Optional, Tuple

# Ajouter de la racine du project au chemin Python
project_root = os.path.abspath(os.path.join(os.path.dirname(__file__), '..'))
if project_root not in sys.path:
    sys.path.insert(0, project_root)

from backend.algebra import weyl
from backend.analytics.resolution_calculator import ResolutionCalculator
from backend.analytics.sweep_runner import SweepRunner
from backend.data.constants import (
    EXIT_CONSISTENCY,
    EXIT_MEMBERSHIP,
    EXIT_OK,
    EXIT_PARSE,
    EXIT_UNEXPECTED,
    FORMAT_JSON,
    FORMAT_TEXT,
    OUTPUT_FORMATS,
)
from backend.data.input_parser import build_run_config, default_s, grass_perm_from_config
from backend.errors import ConsistencyError, InputParseError, MembershipError, ParameterRangeError, SmoothnessError
from backend.models.models import RunConfig
from backend.utils.helpers import write_output
from frontend.report_renderer import (
    render_resolve_text,
    render_smooth_text,
    render_structured,
    render_sweep_text,
)
from scripts.config import Config


class _ArgumentParser(argparse.ArgumentParser):
    """argparse lève InputParseError au lieu de quitter, pour garder nos codes de sortie."""

    def error(self, message):
        raise InputParseError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog="schubert_cli", description="Résolutions libres minimales des cellules opposées de variétés de Schubert (classe W_r).")
    subparsers = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    def _common(sub: argparse.ArgumentParser, with_w: bool = True):
        sub.add_argument("--n", type=int, required=True, help="taille du bloc (rang du sous-espace)")
        sub.add_argument("--m", type=int, required=True, help="co-taille, N = m + n")
        if with_w:
            sub.add_argument("--w", help="entrées a_1,...,a_n de w, ex. 3,4,6,7")
            sub.add_argument("--determinantal", action="store_true", help="utiliser w = (k+1,...,n,N-k+1,...,N)")
            sub.add_argument("--k", type=int, help="rang maximal pour --determinantal")
        sub.add_argument("--format", choices=OUTPUT_FORMATS, default=FORMAT_TEXT)
        sub.add_argument("--no-normalize", action="store_true", help="pousser le fibré sans le normaliser")
        sub.add_argument("--out", help="fichier de sortie (un nom nu va dans le dossier de sortie configuré)")

    resolve = subparsers.add_parser("resolve", help="tableau de Betti, série de Hilbert, régularité")
    _common(resolve)

    sweep = subparsers.add_parser("sweep", help="vérifie la conjecture de régularité sur toute la classe W_r")
    _common(sweep, with_w=False)
    sweep.add_argument("--up-to", action="store_true", help="balayer toutes les tailles 2 ≤ n' ≤ n, 1 ≤ m' ≤ m")
    sweep.add_argument("--workers", type=int, help=f"taille du pool de processus (défaut : {Config.WORKERS})")

    smooth = subparsers.add_parser("check-smooth", help="lissité de X(w̃) par l'espace tangent et par motifs")
    _common(smooth)
    smooth.add_argument("--s", type=int, help="indice s de P̃_s (défaut : min(r(w), n-1))")
    return parser


def run_resolve(config: RunConfig) -> Tuple[str, int]:
    w = grass_perm_from_config(config)
    calculator = ResolutionCalculator(w, normalize=config.normalize)
    report = calculator.to_report()
    text = render_structured(report) if config.output_format == FORMAT_JSON else render_resolve_text(report)
    status = EXIT_OK if all(c.passed for c in report.checks.values()) else EXIT_CONSISTENCY
    return text, status


def run_sweep(config: RunConfig) -> Tuple[str, int]:
    runner = SweepRunner(workers=config.workers, normalize=config.normalize)
    report = runner.run(config.n, config.m, up_to=config.up_to)
    text = render_structured(report) if config.output_format == FORMAT_JSON else render_sweep_text(report)
    status = EXIT_OK if all(row.checks_passed for row in report.rows) else EXIT_CONSISTENCY
    return text, status


def run_check_smooth(config: RunConfig) -> Tuple[str, int]:
    w = grass_perm_from_config(config)
    s = default_s(w, config.s)
    report = weyl.smoothness_report(w, s)
    text = render_structured(report) if config.output_format == FORMAT_JSON else render_smooth_text(report)
    return text, (EXIT_OK if report.agree else EXIT_CONSISTENCY)


COMMANDS = {
    "resolve": run_resolve,
    "sweep": run_sweep,
    "check-smooth": run_check_smooth,
}


def main(argv: Optional[List[str]] = None) -> int:
    logging.basicConfig(level=getattr(logging, Config.LOG_LEVEL, logging.INFO), format=Config.LOG_FORMAT)
    try:
        args = build_parser().parse_args(argv)
        config = build_run_config(args)
        text, status = COMMANDS[config.command](config)
    except InputParseError as e:
        logging.error(f"❌ Entrée invalide : {e}")
        return EXIT_PARSE
    except (MembershipError, ParameterRangeError, SmoothnessError) as e:
        logging.error(f"❌ {e}")
        return EXIT_MEMBERSHIP
    except ConsistencyError as e:
        logging.error(f"❌ Incohérence interne : {e}")
        return EXIT_CONSISTENCY
    except Exception as e:
        logging.exception(f"❌ Erreur inattendue : {e}")
        return EXIT_UNEXPECTED

    print(text)
    write_output(text, config.out)
    return status


if __name__ == "__main__":
    sys.exit(main())
