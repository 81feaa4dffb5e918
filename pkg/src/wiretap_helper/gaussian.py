"""Closed-form Gaussian secrecy rates via the power-ratio parametrization.

The Gaussian instance is described by log2 SNR1 and two exponents: the
helper is received by the legitimate user at SNR1^beta1 and both senders
reach the eavesdropper at SNR1^beta2.  Received power is partitioned into
levels of width (1 - beta1) in the exponent, mirroring the bit-level
partitions of the deterministic model; level-wise lattice decoding that
treats lower levels as noise costs a bounded number of bits per level,
which enters the closed form as a penalty of one bit per full level.

All closed-form arithmetic is exact over rationals; logarithms are base 2
and rates are in bits.  Only the per-level decoding bound and the odd-level
rate sum are floating point, evaluated in the log domain so large SNR
exponents cannot overflow.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import ParameterError
from .ldm import ChannelParams
from .scheme import CaseTag, phi1, phi2

_TWO_THIRDS = Fraction(2, 3)


def to_fraction(x: int | float | str | Fraction) -> Fraction:
    """Exact rational from user input; floats go through their repr so that
    decimal literals like 0.05 mean 1/20."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        return Fraction(str(x))
    return Fraction(x)


@dataclass(frozen=True)
class GaussianParams:
    """Gaussian instance: log2 of SNR1 plus the two gain-ratio exponents."""

    log_snr1: Fraction
    beta1: Fraction
    beta2: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "log_snr1", to_fraction(self.log_snr1))
        object.__setattr__(self, "beta1", to_fraction(self.beta1))
        object.__setattr__(self, "beta2", to_fraction(self.beta2))
        if self.log_snr1 <= 0:
            raise ParameterError("log_snr1 must be positive")
        if self.beta1 < 0 or self.beta2 < 0:
            raise ParameterError("beta exponents must be nonnegative")

    @property
    def l_max(self) -> Fraction:
        """Number of level widths spanning the full power range."""
        if self.beta1 == 1:
            raise ParameterError("level structure is undefined at beta1 = 1")
        return 1 / abs(1 - self.beta1)

    @property
    def full_levels(self) -> int:
        return math.floor(self.l_max)

    @property
    def level_width(self) -> Fraction:
        """Log-domain width of one power level, in bits."""
        if self.beta1 == 1:
            raise ParameterError("level structure is undefined at beta1 = 1")
        return abs(1 - self.beta1) * self.log_snr1


@dataclass(frozen=True)
class GaussianRateBreakdown:
    """Rate split for a Gaussian instance.

    r_gross is the rate carried by the alignment structure itself;
    r_ach additionally charges the per-level decoding penalty d (one bit
    per full level), clamped at zero.  normalized is r_ach / log2 SNR1.
    """

    r_private: Fraction
    r_common: Fraction
    r_gross: Fraction
    d: int
    r_ach: Fraction
    normalized: Fraction
    case_tag: CaseTag
    r_common_sum: float | None = None


def _log2_1p_exp2(e: float) -> float:
    """log2(1 + 2**e), stable for any magnitude of e."""
    if e > 48:
        return e + math.log1p(2.0 ** (-e)) / math.log(2)
    if e < -48:
        return 2.0**e / math.log(2)
    return math.log1p(2.0**e) / math.log(2)


def _log2_theta(g: GaussianParams, level: int) -> float:
    hi = float(g.log_snr1 * (1 - (level - 1) * (1 - g.beta1)))
    lo = float(g.log_snr1 * (1 - level * (1 - g.beta1)))
    # log2(2^hi - 2^lo) = hi + log2(1 - 2^(lo - hi)); lo < hi always
    return hi + math.log1p(-(2.0 ** (lo - hi))) / math.log(2)


def _check_level(g: GaussianParams, level: int) -> None:
    if g.beta1 >= 1:
        raise ParameterError("power levels require beta1 < 1")
    if not 1 <= level <= math.ceil(g.l_max):
        raise ParameterError(f"level {level} out of range 1..{math.ceil(g.l_max)}")


def theta(g: GaussianParams, level: int) -> float:
    """Signal power of one level: the difference of two SNR1 powers."""
    _check_level(g, level)
    log2_value = _log2_theta(g, level)
    if log2_value > 1023:  # beyond float range; rate functions stay in log domain
        return math.inf
    return 2.0**log2_value


def level_rate(g: GaussianParams, level: int) -> float:
    """Per-level decoding bound, treating all lower levels as noise."""
    _check_level(g, level)
    lo = float(g.log_snr1 * (1 - level * (1 - g.beta1)))
    noise = _log2_1p_exp2(1.0 + lo)
    return max(0.0, _log2_theta(g, level) - noise)


def remainder_rate(g: GaussianParams) -> float:
    """Rate of the slice left below the last full level, for reporting.

    Zero whenever the full levels tile the power range exactly.
    """
    if g.beta1 >= 1:
        raise ParameterError("power levels require beta1 < 1")
    width = float(g.log_snr1 * (1 - g.full_levels * (1 - g.beta1)))
    if width <= 0:
        return 0.0
    # log2(2^width - 1)
    val = width + math.log1p(-(2.0**-width)) / math.log(2)
    return max(0.0, val)


def odd_level_sum(g: GaussianParams) -> float:
    """Sum of the per-level bounds over the odd (message-carrying) levels."""
    return sum(level_rate(g, l) for l in range(1, g.full_levels + 1, 2))


def correspondence(g: GaussianParams) -> ChannelParams:
    """Deterministic instance matching this Gaussian one: n = ceil(log SNR)+."""
    return ChannelParams(
        n11=max(0, math.ceil(g.log_snr1)),
        n21=max(0, math.ceil(g.beta1 * g.log_snr1)),
        n2=max(0, math.ceil(g.beta2 * g.log_snr1)),
    )


def gaussian_rate(g: GaussianParams) -> GaussianRateBreakdown:
    """Achievable Gaussian secrecy rate, exact over rationals.

    The private rate is the log-SNR advantage over the eavesdropper,
    floored at zero.  In the aligned regime the common rate comes from the
    same partition-count functions as the deterministic model, applied to
    log-domain quantities, and the per-level decoding penalty d (one bit
    per full level) is charged against the total.
    """
    L, b1, b2 = g.log_snr1, g.beta1, g.beta2
    rp = max((1 - b2) * L, Fraction(0))
    zero = Fraction(0)

    if b1 == 1:
        return GaussianRateBreakdown(
            r_private=rp, r_common=zero, r_gross=rp, d=0, r_ach=rp,
            normalized=rp / L, case_tag=CaseTag.SINGULAR,
        )

    common_sum = odd_level_sum(g) if b1 < 1 else None

    if b1 < _TWO_THIRDS:
        r = max((1 - b1) * L, b1 * L, rp)
        return GaussianRateBreakdown(
            r_private=rp, r_common=r - rp, r_gross=r, d=0, r_ach=r,
            normalized=r / L, case_tag=CaseTag.WEAK_HELPER,
            r_common_sum=common_sum,
        )
    if b1 >= 2:
        return GaussianRateBreakdown(
            r_private=rp, r_common=L - rp, r_gross=L, d=0, r_ach=L,
            normalized=Fraction(1), case_tag=CaseTag.STRONG_HELPER,
        )

    p_arg = (1 - max(1 - b2, zero)) * L
    q_arg = abs(1 - b1) * L
    phi = phi1 if (b1 < 1 and b2 < 1) else phi2
    rc = Fraction(phi(p_arg, q_arg))
    d = g.full_levels
    gross = rp + rc
    r_ach = max(gross - d, zero)
    return GaussianRateBreakdown(
        r_private=rp, r_common=rc, r_gross=gross, d=d, r_ach=r_ach,
        normalized=r_ach / L, case_tag=CaseTag.ALIGNED,
        r_common_sum=common_sum,
    )
