# backend/data/input_parser.py
"""Transforme les arguments de la ligne de commande en RunConfig validée."""
import logging
from argparse import Namespace
from typing import Optional

from pydantic import ValidationError

from backend.algebra import weyl
from backend.errors import InputParseError, ParameterRangeError
from backend.models.models import GrassPerm, RunConfig
from backend.utils.helpers import parse_int_sequence
from scripts.config import Config

logger = logging.getLogger(__name__)


def build_run_config(args: Namespace) -> RunConfig:
    w_text = getattr(args, 'w', None)
    determinantal = getattr(args, 'determinantal', False)
    k = getattr(args, 'k', None)

    if args.command in ('resolve', 'check-smooth'):
        if determinantal == (w_text is not None):
            raise InputParseError("indiquer exactement l'un de --w ou --determinantal --k")
        if determinantal and k is None:
            raise InputParseError("--determinantal exige --k")

    w = parse_int_sequence(w_text) if w_text is not None else None
    workers = getattr(args, 'workers', None) or Config.WORKERS
    try:
        return RunConfig(
            command=args.command,
            n=args.n,
            m=args.m,
            w=w,
            k=k if determinantal else None,
            s=getattr(args, 's', None),
            normalize=not getattr(args, 'no_normalize', False),
            up_to=getattr(args, 'up_to', False),
            output_format=args.format,
            out=getattr(args, 'out', None),
            workers=max(1, workers),
        )
    except ValidationError as e:
        raise InputParseError(f"configuration invalide : {e.errors()[0]['loc']} {e.errors()[0]['msg']}") from e


def grass_perm_from_config(config: RunConfig) -> GrassPerm:
    """w explicite ou w déterminantiel (k) ; les erreurs d'invariant deviennent des MembershipError."""
    if config.k is not None:
        return weyl.determinantal_w(config.k, config.m, config.n)
    if config.w is None:
        raise InputParseError("aucun w fourni")
    return weyl.make_grass_perm(config.w, config.n, config.m)


def default_s(w: GrassPerm, s: Optional[int]) -> int:
    """s par défaut : min(r(w), n-1)."""
    r = weyl.r_of(w)
    if s is None:
        return max(1, min(r, w.n - 1))
    if not 1 <= s <= min(r, w.n - 1):
        raise ParameterRangeError(f"s={s} hors de 1..min(r(w), n-1)={min(r, w.n - 1)}")
    return s
