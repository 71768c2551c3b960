"""Exact harmonic analysis in superspace R^{m|2n}.

Thin wrapper around the compiled ``_core`` extension. Rationals are returned
as ``fractions.Fraction``; integrals over the supersphere come back as
``PiScaledValue`` (a rational times a power of sqrt(pi)).
"""

from ._core import *  # noqa: F401,F403
from ._core import Polynomial, SpaceParams


def poly(text, m, n):
    """Parse ``text`` as a polynomial over R^{m|2n}."""
    return Polynomial(text, SpaceParams(m, n))
