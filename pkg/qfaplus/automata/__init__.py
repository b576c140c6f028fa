"""qfaplus automata package: executable quantum and classical machine models."""
