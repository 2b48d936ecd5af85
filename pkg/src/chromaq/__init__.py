"""Exact e-expansions of chromatic quasisymmetric functions of natural unit interval graphs."""

from .graphs import Graph, KChainSpec, Nuig
from .qpoly import QPoly
from .symfunc import ESym

__version__ = "0.1.0"

__all__ = ["ESym", "Graph", "KChainSpec", "Nuig", "QPoly"]
