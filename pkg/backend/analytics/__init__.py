"""Ce package assemble les tableaux de Betti et les invariants numériques, et balaie la classe W_r."""
