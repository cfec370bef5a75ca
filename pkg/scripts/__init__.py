"""Ce package contient la ligne de commande, la configuration, l'oracle de test et les tests."""
