# backend/data/constants.py
"""
Ce fichier centralise les constantes partagées par le moteur de calcul, le CLI
et le rendu des rapports : motifs interdits, identifiants des contrôles de
cohérence, version du schéma de sortie et codes de sortie.
"""

# --- Version du schéma des sorties structurées ---
SCHEMA_VERSION = "1.0"

# --- Motifs interdits pour la lissité (critère par motifs) ---
PATTERN_4231 = (4, 2, 3, 1)
PATTERN_3412 = (3, 4, 1, 2)
SMOOTHNESS_PATTERNS = (PATTERN_4231, PATTERN_3412)

# --- Contrôles de cohérence d'un tableau de Betti ---
CHECK_ALTERNATING_SUM = "alternating_sum"
CHECK_UNIQUE_GENERATOR = "unique_generator"
CHECK_NO_LINEAR_FORMS = "no_linear_forms"
CHECK_LENGTH_EQUALS_CODIM = "length_equals_codim"
CHECK_HILBERT_DIVISIBILITY = "hilbert_divisibility"

CHECK_IDS = (
    CHECK_ALTERNATING_SUM,
    CHECK_UNIQUE_GENERATOR,
    CHECK_NO_LINEAR_FORMS,
    CHECK_LENGTH_EQUALS_CODIM,
    CHECK_HILBERT_DIVISIBILITY,
)

CHECK_LABELS = {
    CHECK_ALTERNATING_SUM: "Somme alternée des rangs nulle",
    CHECK_UNIQUE_GENERATOR: "Unique générateur en degré 0",
    CHECK_NO_LINEAR_FORMS: "Aucune forme linéaire dans l'idéal",
    CHECK_LENGTH_EQUALS_CODIM: "Longueur égale à la codimension",
    CHECK_HILBERT_DIVISIBILITY: "Numérateur divisible par (1-t)^c",
}

# --- Verdicts de la conjecture de régularité ---
VERDICT_AGREE = "AGREE"
VERDICT_DISAGREE = "DISAGREE"

# --- Formats de sortie du CLI ---
FORMAT_TEXT = "text"
FORMAT_JSON = "json"
OUTPUT_FORMATS = (FORMAT_TEXT, FORMAT_JSON)

# --- Codes de sortie ---
EXIT_OK = 0
EXIT_UNEXPECTED = 1
EXIT_PARSE = 2
EXIT_MEMBERSHIP = 3
EXIT_CONSISTENCY = 4

# --- Rendu du tableau de Betti ---
BETTI_ZERO_SYMBOL = "-"
BETTI_TOTAL_LABEL = "total"

# --- Bornes des oracles exhaustifs ---
ORACLE_MAX_CELLS = 16
ORACLE_MAX_RANK = 6
ORACLE_MAX_LR_SIZE = 12
