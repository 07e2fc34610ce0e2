"""Finite semigroups, quantified equation systems and class membership by search."""

from .algebra import FiniteSemigroup, direct_product
from .eqdsl import EquationSystem, parse, render
from .evaluate import EvalReport, evaluate, satisfies
from .families import make_family

__all__ = ["FiniteSemigroup", "direct_product", "EquationSystem", "parse", "render",
           "EvalReport", "evaluate", "satisfies", "make_family"]
