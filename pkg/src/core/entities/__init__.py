"""Core domain entities: graphs, words, invariants, operators."""
