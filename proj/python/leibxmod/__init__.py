"""Leibniz crossed modules: exterior products, Schur multipliers and stem covers.

Rational entries cross the boundary as strings "p/q"; `fraction_matrix`
turns them into `fractions.Fraction`.
"""

from fractions import Fraction

from ._leibxmod import (
    Algebra,
    CrossedModule,
    Extension,
    FixtureError,
    identity_xmod,
    load_algebra,
    load_extension,
    load_xmod,
    run,
    stem_cover_of_perfect,
    zero_top_xmod,
)

__all__ = [
    "Algebra",
    "CrossedModule",
    "Extension",
    "FixtureError",
    "fraction_matrix",
    "identity_xmod",
    "load_algebra",
    "load_extension",
    "load_xmod",
    "run",
    "stem_cover_of_perfect",
    "zero_top_xmod",
]


def fraction_matrix(rows):
    return [[Fraction(x) for x in row] for row in rows]
