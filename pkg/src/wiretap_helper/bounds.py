"""Converse bounds on the secrecy rate, kept as exact rationals.

The three bounds hold for every coding scheme on the deterministic model
with symmetric eavesdropper gains.  The Gaussian variant is the same
triple shifted by a configurable constant; this package makes no claim
about the constant's value and defaults it to zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ParameterError
from .ldm import ChannelParams


@dataclass(frozen=True)
class UpperBounds:
    ub1: Fraction
    ub2: Fraction
    ub3: Fraction

    @property
    def min_ub(self) -> Fraction:
        return min(self.ub1, self.ub2, self.ub3)


def _pos(x: int) -> int:
    return x if x > 0 else 0


def upper_bounds(p: ChannelParams) -> UpperBounds:
    """Evaluate the three converse bounds for a deterministic instance."""
    rp = _pos(p.n11 - p.n2)
    ub1 = rp + Fraction(max(p.n11, p.n21) - rp, 2) + Fraction(_pos(p.n2 - p.n21), 2)
    ub2 = Fraction(p.n11)
    ub3 = Fraction(
        p.n21
        + _pos(p.n11 - p.n21 - p.n2)
        + _pos(p.n2 - p.n21 - _pos(p.n2 - p.n11 + p.n21))
    )
    return UpperBounds(ub1, ub2, ub3)


def gaussian_upper_bounds(p: ChannelParams, c: Fraction | int = 0) -> UpperBounds:
    """Deterministic bounds plus the constant-gap term c (c >= 0)."""
    c = Fraction(c)
    if c < 0:
        raise ParameterError("the gap constant c must be nonnegative")
    det = upper_bounds(p)
    return UpperBounds(det.ub1 + c, det.ub2 + c, det.ub3 + c)
