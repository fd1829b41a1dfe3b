"""Exact arithmetic for Atkin-Lehner quotients of Shimura curves.

The package computes genera, Atkin-Lehner fixed point counts, quotient
genera, embedding numbers of quadratic orders into Eichler orders, and
local point criteria, and assembles them into the classification of the
geometrically bielliptic and trigonal curves in the family, with
literature-sourced fixtures for everything that is not recomputable.
"""

__version__ = "0.1.0"

from .errors import DomainError, FixtureError, IntegralityError, PipelineError

__all__ = ["DomainError", "FixtureError", "IntegralityError", "PipelineError"]
