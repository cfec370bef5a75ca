"""Ce package contient toute la logique de calcul : combinatoire, Bott, résolutions."""
