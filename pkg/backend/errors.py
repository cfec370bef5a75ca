# ===== backend/errors.py - HIÉRARCHIE D'EXCEPTIONS =====
"""
Exceptions levées par le moteur de calcul des résolutions.

Les opérations pures lèvent ces exceptions ; seul le point d'entrée CLI les
convertit en codes de sortie (voir `backend.data.constants.EXIT_CODES`).
"""


class SchubertError(Exception):
    """Erreur de base du projet."""


class InputParseError(SchubertError, ValueError):
    """Entrée mal formée (liste d'entiers illisible, option manquante...)."""


class MembershipError(SchubertError, ValueError):
    """La permutation ne respecte pas une condition d'appartenance (W^P, classe W_r)."""


class ParameterRangeError(SchubertError, ValueError):
    """Paramètre hors de son domaine de validité (k, s, bornes d'énumération)."""


class OracleBoundError(ParameterRangeError):
    """Borne de calcul exhaustif dépassée pour un oracle."""


class SmoothnessError(SchubertError):
    """Opération réservée aux variétés de Schubert lisses."""


class ConsistencyError(SchubertError):
    """Incohérence interne : le tableau calculé contredit une propriété démontrée."""
