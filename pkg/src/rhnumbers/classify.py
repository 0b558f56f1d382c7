"""Membership tests and multiplier witnesses for one integer in one base.

A number N is b-ARH when N = M*s_b(N) + (M*s_b(N))^R for some positive
integer M, and b-MRH when N = M*s_b(N) * (M*s_b(N))^R.  The witness
extractors here are complete per-N enumerations; they are meant for
values below WORD_SIZE_CAP.  verify_witness takes a supplied M instead
and works at any magnitude through digit-vector arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .digitvec import DigitVec, digit_sum_int, reverse_int

# Enumeration contract bound for the per-N searches and range scans.
WORD_SIZE_CAP = 2**63 - 1

ARH = "arh"
MRH = "mrh"
NIVEN = "niven"


@dataclass(frozen=True)
class WitnessAdd:
    """Additive multiplier M with X = M*s_b(N) satisfying X + X^R = N."""

    m: int
    x: DigitVec
    xr: DigitVec


@dataclass(frozen=True)
class WitnessMul:
    """Multiplicative multiplier M with X = M*s_b(N) satisfying X * X^R = N."""

    m: int
    x: DigitVec
    xr: DigitVec


@dataclass(frozen=True)
class VerifyFailure:
    """Defining equation failed: `combined` (X op X^R) != `expected` (N)."""

    kind: str
    m: int
    x: DigitVec
    xr: DigitVec
    combined: DigitVec
    expected: DigitVec


@dataclass(frozen=True)
class ClassifyResult:
    n: DigitVec
    is_niven: bool
    arh: tuple[WitnessAdd, ...]
    mrh: tuple[WitnessMul, ...]
    quadratic_niven: bool
    strongly_quadratic_niven: bool

    @property
    def arh_multiplicity(self) -> int:
        return len(self.arh)

    @property
    def mrh_multiplicity(self) -> int:
        return len(self.mrh)

    def to_json_dict(self) -> dict:
        return {
            "n": self.n.to_int(),
            "base": self.n.base,
            "niven": self.is_niven,
            "arh": [{"m": w.m, "x": w.x.to_int(), "xr": w.xr.to_int()} for w in self.arh],
            "mrh": [{"m": w.m, "x": w.x.to_int(), "xr": w.xr.to_int()} for w in self.mrh],
            "quadratic_niven": self.quadratic_niven,
            "strongly_quadratic_niven": self.strongly_quadratic_niven,
        }


def is_niven(n: DigitVec) -> bool:
    """True iff digit_sum(n) divides value(n); valid at any size via mod_small."""
    s = n.digit_sum()
    if s == 0:
        raise ValueError("Niven test undefined for zero (digit sum 0)")
    return n.mod_small(s) == 0


def is_quadratic_niven(n: DigitVec) -> bool:
    """N and N^2 both b-Niven (N^2 computed in the same base)."""
    return is_niven(n) and is_niven(n * n)


def is_strongly_quadratic_niven(n: DigitVec) -> bool:
    """Quadratic Niven with s_b(N) == s_b(N^2)."""
    if not is_niven(n):
        return False
    sq = n * n
    return is_niven(sq) and n.digit_sum() == sq.digit_sum()


def arh_witnesses(n: DigitVec) -> list[WitnessAdd]:
    """All additive multipliers of n, ascending.

    Enumerates X over multiples of s = s_b(n) with s <= X < value(n);
    X + X^R = N forces s | X and X < N (X^R >= 1), so the scan is
    complete.
    """
    value = n.to_int()
    if not 1 <= value <= WORD_SIZE_CAP:
        raise ValueError(f"value {value} outside [1, {WORD_SIZE_CAP}]")
    base = n.base
    s = n.digit_sum()
    out = []
    x = s
    while x < value:
        if x + reverse_int(x, base) == value:
            out.append(_make_witness(WitnessAdd, x, s, base))
        x += s
    return out


def mrh_witnesses(n: DigitVec) -> list[WitnessMul]:
    """All multiplicative multipliers of n, ascending.

    Trial division: for each divisor pair (d1, d2) of value(n), both
    orders are tested; X = d1 qualifies when rev(d1) == d2 and s | d1.
    """
    value = n.to_int()
    if not 1 <= value <= WORD_SIZE_CAP:
        raise ValueError(f"value {value} outside [1, {WORD_SIZE_CAP}]")
    base = n.base
    s = n.digit_sum()
    hits = set()
    for d1 in range(1, isqrt(value) + 1):
        if value % d1:
            continue
        d2 = value // d1
        for x, other in ((d1, d2), (d2, d1)):
            if x % s == 0 and reverse_int(x, base) == other:
                hits.add(x)
    return [_make_witness(WitnessMul, x, s, base) for x in sorted(hits)]


def _make_witness(cls, x: int, s: int, base: int):
    xd = DigitVec.from_int(x, base)
    return cls(m=x // s, x=xd, xr=xd.reversal())


def verify_witness(
    n: DigitVec, m: int, kind: str
) -> WitnessAdd | WitnessMul | VerifyFailure:
    """Check the defining equation for a supplied multiplier, at any size.

    X = M*s_b(n) is built and combined with X^R through digit-vector
    arithmetic only; no enumeration, no factoring.
    """
    if m < 1:
        raise ValueError(f"multiplier must be positive, got {m}")
    if kind not in (ARH, MRH):
        raise ValueError(f"kind must be {ARH!r} or {MRH!r}, got {kind!r}")
    base = n.base
    x = DigitVec.from_int(m, base) * DigitVec.from_int(n.digit_sum(), base)
    xr = x.reversal()
    combined = x + xr if kind == ARH else x * xr
    if combined == n:
        cls = WitnessAdd if kind == ARH else WitnessMul
        return cls(m=m, x=x, xr=xr)
    return VerifyFailure(kind=kind, m=m, x=x, xr=xr, combined=combined, expected=n)


def classify(n: DigitVec) -> ClassifyResult:
    """Full classification record: Niven flags plus both witness lists."""
    return ClassifyResult(
        n=n,
        is_niven=is_niven(n),
        arh=tuple(arh_witnesses(n)),
        mrh=tuple(mrh_witnesses(n)),
        quadratic_niven=is_quadratic_niven(n),
        strongly_quadratic_niven=is_strongly_quadratic_niven(n),
    )


def is_niven_int(value: int, base: int) -> bool:
    """Plain-int Niven test for the scan paths."""
    if value < 1:
        raise ValueError("Niven test undefined for nonpositive values")
    return value % digit_sum_int(value, base) == 0
