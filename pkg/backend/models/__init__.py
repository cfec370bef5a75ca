"""Ce package définit les modèles de données (permutations, fibrés, tables, rapports)."""
