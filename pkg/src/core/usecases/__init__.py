"""Core use cases: graph cliques, Coxeter words, K-invariants, classification, numerical oracle."""
