import logging
import os
import re
from pathlib import Path
from typing import List, Optional, Union

from backend.errors import InputParseError
from scripts.config import Config

_INT_SEQUENCE = re.compile(r'^\(?\s*-?\d+(\s*[,;\s]\s*-?\d+)*\s*\)?$')


def parse_int_sequence(text: Union[str, List[int], None]) -> List[int]:
    """
    Lit une liste d'entiers telle que « 3,4,6,7 », « (3, 4, 6, 7) » ou
    « 3 4 6 7 ». Lève InputParseError si la chaîne est mal formée.
    """
    if text is None:
        raise InputParseError("liste d'entiers manquante")
    if isinstance(text, (list, tuple)):
        return [int(x) for x in text]
    cleaned = str(text).strip()
    if not cleaned or not _INT_SEQUENCE.match(cleaned):
        raise InputParseError(f"liste d'entiers illisible : '{text}'")
    return [int(x) for x in re.findall(r'-?\d+', cleaned)]


def resolve_output_path(out: Optional[str]) -> Optional[Path]:
    """Un nom de fichier nu est placé dans le dossier de sortie configuré."""
    if not out:
        return None
    path = Path(out)
    if path.parent == Path('.'):
        path = Path(Config.OUTPUT_DIR) / path
    return path


def write_output(text: str, out: Optional[str]) -> Optional[Path]:
    path = resolve_output_path(out)
    if path is None:
        return None
    os.makedirs(path.parent, exist_ok=True)
    path.write_text(text + "\n", encoding="utf-8")
    logging.getLogger(__name__).info(f"Rapport écrit dans {path}")
    return path
