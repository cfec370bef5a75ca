"""Ce package contient le rendu texte et JSON des rapports."""
