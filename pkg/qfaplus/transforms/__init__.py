"""Constructive translations between machine classes: closure constructions, embeddings, simulation, vectorization."""
