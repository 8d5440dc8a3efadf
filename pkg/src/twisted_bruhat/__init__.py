"""Twisted identities in Weyl groups, their Bruhat graphs and KLV polynomials,
and rational smoothness criteria for the orbit closures they index."""

from .groups import CapacityError, GroupContext
from .kernels import BACKEND
from .klv import PolyTable, p_poly, q_poly, r_poly
from .poly import IntPolynomial
from .bruhat_graph import BruhatGraph, build_bg
from .smoothness import LocusReport, full_report
from .twisted import InvariantError, TwistedPoset, enumerate_iota, twist

__all__ = [
    "BACKEND", "BruhatGraph", "CapacityError", "GroupContext", "IntPolynomial",
    "InvariantError", "LocusReport", "PolyTable", "TwistedPoset", "build_bg",
    "enumerate_iota", "full_report", "p_poly", "q_poly", "r_poly", "twist",
]
