"""Ce package contient les fonctions utilitaires générales."""
