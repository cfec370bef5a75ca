"""Ce package regroupe les constantes et la lecture des paramètres d'entrée."""
