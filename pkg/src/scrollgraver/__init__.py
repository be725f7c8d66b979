"""Graver bases, colored partition identities and Gröbner bases of rational normal scrolls."""
from .cpi import Cpi, enumerate_pcpi, is_primitive_cpi
from .gb import ReducedGB, TermOrder, buchberger, reduced_gb_of_config
from .graver import GraverBasis, KernelVector, circuits
from .scroll import (PointConfig, ScrollSpec, build_config, scroll_degree,
                     sharp_degree_bound)

__all__ = [
    "Cpi", "enumerate_pcpi", "is_primitive_cpi",
    "ReducedGB", "TermOrder", "buchberger", "reduced_gb_of_config",
    "GraverBasis", "KernelVector", "circuits",
    "PointConfig", "ScrollSpec", "build_config", "scroll_degree", "sharp_degree_bound",
]
