"""Achievable secrecy rates and the partition-aligned jamming scheme.

The achievable rate of an instance splits into a private part (user levels
below the eavesdropper's noise floor, secure for free) and a common part
that must be protected by helper jamming.  The common part is organized in
partitions of delta = |n11 - n21| consecutive levels counted from the top.
Because both signals reach the eavesdropper at the same gain, jamming the
same level indices the message occupies erases it there exactly, while at
the legitimate receiver the delta offset pushes the jam onto the unused
partitions in between.

Three regimes arise from the helper-to-direct gain ratio: a weak helper
(ratio below 2/3), the aligned middle regime, and a strong helper (ratio
at least 2) that can cover the whole user signal without ever colliding
with it.  At n11 == n21 the offset vanishes and no alignment scheme
exists; such instances are flagged as singular.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .errors import ParameterError, SingularCaseError
from .ldm import ChannelParams, Gf2Matrix

Rational = int | Fraction


class CaseTag(enum.Enum):
    WEAK_HELPER = "weak-helper"
    ALIGNED = "aligned"
    STRONG_HELPER = "strong-helper"
    SINGULAR = "singular"


@dataclass(frozen=True)
class RateBreakdown:
    """Achievable secrecy rate of one instance, split by mechanism."""

    r_private: int
    r_common: int
    r_ach: int
    case_tag: CaseTag


@dataclass(frozen=True)
class Allocation:
    """Level sets realizing a rate: message levels of the user signal
    (1..n11, counted from the top of the received signal) and jam levels
    of the helper signal as seen at the eavesdropper (1..n2)."""

    message_levels: frozenset[int]
    jam_levels: frozenset[int]
    delta: int


@dataclass(frozen=True)
class LinearScheme:
    """GF(2) maps from message bits (k) and jam bits (m) to both receivers.

    A, B map message and jam to the eavesdropper's observation; C, D map
    them to the legitimate receiver.  Column order follows ascending level
    order of the allocation.
    """

    k: int
    m: int
    A: Gf2Matrix
    B: Gf2Matrix
    C: Gf2Matrix
    D: Gf2Matrix
    message_levels: tuple[int, ...]
    jam_levels: tuple[int, ...]
    params: ChannelParams


def _half(x: Rational) -> Rational:
    # callers guarantee x is even when it is an int
    return x // 2 if isinstance(x, int) else x / 2


def l_func(p: Rational, q: Rational) -> int:
    """Number of whole q-sized blocks in p; zero when q is zero."""
    if p < 0 or q < 0:
        raise ParameterError("l(p, q) expects nonnegative arguments")
    if q == 0:
        return 0
    return int(p // q)


def phi1(p: Rational, q: Rational) -> Rational:
    """Common rate when the partition adjacent to the private part is unusable."""
    lv = l_func(p, q)
    if lv % 2 == 0:
        return _half(lv * q)
    return p - _half((lv + 1) * q)


def phi2(p: Rational, q: Rational) -> Rational:
    """Common rate when every second partition, plus an odd remainder, is usable."""
    lv = l_func(p, q)
    if lv % 2 == 1:
        return _half((lv + 1) * q)
    return p - _half(lv * q)


def r_private(p: ChannelParams) -> int:
    """Levels of the user signal below the eavesdropper's noise floor."""
    return max(p.n11 - p.n2, 0)


def _uses_phi1(p: ChannelParams) -> bool:
    # nonzero private part and strictly weaker helper at the legitimate receiver
    return p.n11 > p.n2 and p.n11 > p.n21


def r_achievable(p: ChannelParams) -> RateBreakdown:
    """Achievable secrecy rate of the instance (integer bits per channel use)."""
    rp = r_private(p)
    if p.n11 == 0:
        tag = CaseTag.STRONG_HELPER if p.n21 > 0 else CaseTag.SINGULAR
        return RateBreakdown(0, 0, 0, tag)
    if 3 * p.n21 < 2 * p.n11:
        r = max(p.n11 - p.n21, p.n21, rp)
        return RateBreakdown(rp, r - rp, r, CaseTag.WEAK_HELPER)
    if p.n21 >= 2 * p.n11:
        return RateBreakdown(rp, p.n11 - rp, p.n11, CaseTag.STRONG_HELPER)
    if p.delta == 0:
        return RateBreakdown(rp, 0, rp, CaseTag.SINGULAR)
    n_common = p.n11 - rp
    phi = phi1 if _uses_phi1(p) else phi2
    rc = int(phi(n_common, p.delta))
    return RateBreakdown(rp, rc, rp + rc, CaseTag.ALIGNED)


def _block(delta: int, k: int) -> range:
    """Positions of the k-th delta-sized partition, counted from the top."""
    return range((k - 1) * delta + 1, k * delta + 1)


def _aligned_common_levels(p: ChannelParams) -> set[int]:
    delta = p.delta
    n_common = p.n11 - r_private(p)
    full = n_common // delta
    rem = n_common - full * delta
    levels: set[int] = set()
    if _uses_phi1(p):
        # jamming lands one partition below at the receiver, so the
        # bottom-most used partition must keep its landing zone inside
        # the common range; the slot next to the private part is lost.
        if full % 2 == 0:
            for k in range(1, full, 2):
                levels.update(_block(delta, k))
        else:
            for k in range(1, full - 1, 2):
                levels.update(_block(delta, k))
            top = (full - 1) * delta
            levels.update(range(top + 1, top + rem + 1))
    else:
        if full % 2 == 1:
            for k in range(1, full + 1, 2):
                levels.update(_block(delta, k))
        else:
            for k in range(1, full, 2):
                levels.update(_block(delta, k))
            levels.update(range(full * delta + 1, n_common + 1))
    return levels


def construct_allocation(p: ChannelParams) -> Allocation:
    """Build the level allocation realizing the achievable rate exactly.

    Raises SingularCaseError when no alignment scheme exists (n11 == n21
    within the aligned regime, or the all-zero instance).
    """
    br = r_achievable(p)
    if br.case_tag is CaseTag.SINGULAR:
        raise SingularCaseError(
            f"no alignment scheme for n11={p.n11}, n21={p.n21}: "
            "equal gains leave nothing to align against"
        )
    rp = br.r_private
    if br.case_tag is CaseTag.STRONG_HELPER:
        message = set(range(1, p.n11 + 1))
        jam = set(range(1, min(p.n11, p.n2) + 1))
        return Allocation(frozenset(message), frozenset(jam), p.delta)
    if br.case_tag is CaseTag.WEAK_HELPER:
        gap = p.n11 - p.n21
        if gap >= p.n21 and gap >= rp:
            # top block, jam-covered; the jam lands in the next block down
            message = set(range(1, gap + 1))
            jam = set(range(1, min(gap, p.n2) + 1))
        elif p.n21 >= rp:
            # top block plus everything below the jam's landing zone; the
            # weak ratio pushes jamming for the lower slice off the vector
            message = set(range(1, gap + 1)) | set(range(2 * gap + 1, p.n11 + 1))
            jam = {v for v in message if v <= p.n2}
        else:
            message = set(range(min(p.n11, p.n2) + 1, p.n11 + 1))
            jam = set()
        return Allocation(frozenset(message), frozenset(jam), p.delta)
    common = _aligned_common_levels(p)
    message = common | set(range(p.n11 - rp + 1, p.n11 + 1))
    return Allocation(frozenset(message), frozenset(common), p.delta)


def build_linear_scheme(a: Allocation, p: ChannelParams) -> LinearScheme:
    """Compile an allocation into the four channel-induced GF(2) maps."""
    msg = tuple(sorted(a.message_levels))
    jam = tuple(sorted(a.jam_levels))
    if any(not 1 <= u <= p.n11 for u in msg):
        raise ParameterError(f"message level out of range 1..{p.n11}: {msg}")
    if any(not 1 <= v <= p.n2 for v in jam):
        raise ParameterError(f"jam level out of range 1..{p.n2}: {jam}")
    q = p.q

    def unit(pos: int) -> int:
        return 1 << (pos - 1) if 1 <= pos <= q else 0

    a_cols = tuple(unit(u + q - p.n2) for u in msg)
    b_cols = tuple(unit(v + q - p.n2) for v in jam)
    c_cols = tuple(unit(u + q - p.n11) for u in msg)
    d_cols = tuple(unit(v + q - p.n21) for v in jam)
    k, m = len(msg), len(jam)
    return LinearScheme(
        k=k,
        m=m,
        A=Gf2Matrix.from_columns(a_cols, q),
        B=Gf2Matrix.from_columns(b_cols, q),
        C=Gf2Matrix.from_columns(c_cols, q),
        D=Gf2Matrix.from_columns(d_cols, q),
        message_levels=msg,
        jam_levels=jam,
        params=p,
    )
