"""Ce package contient la combinatoire des partitions, le groupe de Weyl, Bott et le calcul des fibrés."""
