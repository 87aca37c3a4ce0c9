"""Centrally symmetric simplicial spheres: constructions, checks and enumeration."""

from .complex import FVector, SimplicialComplex, face, vertices_of

__all__ = ["FVector", "SimplicialComplex", "face", "vertices_of"]
__version__ = "0.1.0"
