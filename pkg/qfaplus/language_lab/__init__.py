"""Bounded-error recognition checks against reference regular languages."""
