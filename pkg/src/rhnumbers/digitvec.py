"""Exact digit-sequence arithmetic in an arbitrary numeration base.

A DigitVec stores the base-b digits of a nonnegative integer, most
significant first.  All operations are pure and exact at any length;
there is no word-size anywhere in this module.  Canonical form: no
leading zeros, except zero itself which is the single digit [0].

Alongside the structural type there are plain-int helpers
(reverse_int, digit_sum_int, digit_count_int, has_zero_digit) used by
the search engines, which need the same digit operations without the
object overhead.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


def check_base(base: int) -> int:
    if not isinstance(base, int) or base < 2:
        raise ValueError(f"base must be an integer >= 2, got {base!r}")
    return base


def _canonical(digits: Sequence[int]) -> tuple[int, ...]:
    """Strip leading zeros; the empty/all-zero sequence collapses to (0,)."""
    i = 0
    while i < len(digits) - 1 and digits[i] == 0:
        i += 1
    out = tuple(digits[i:])
    return out if out else (0,)


@dataclass(frozen=True)
class DigitVec:
    """Base-b digit sequence, most significant digit first."""

    base: int
    digits: tuple[int, ...]

    def __post_init__(self) -> None:
        check_base(self.base)
        if not self.digits:
            raise ValueError("digit sequence must be nonempty")
        for d in self.digits:
            if not 0 <= d < self.base:
                raise ValueError(f"digit {d} out of range for base {self.base}")
        if len(self.digits) > 1 and self.digits[0] == 0:
            raise ValueError("leading zero in non-zero digit sequence")

    # -- construction ------------------------------------------------

    @classmethod
    def from_int(cls, n: int, base: int) -> "DigitVec":
        """Canonical digit vector of a nonnegative integer."""
        check_base(base)
        if n < 0:
            raise ValueError(f"negative value {n} has no digit vector")
        if n == 0:
            return cls(base, (0,))
        digits = []
        while n:
            n, d = divmod(n, base)
            digits.append(d)
        return cls(base, tuple(reversed(digits)))

    @classmethod
    def from_digits(cls, digits: Iterable[int], base: int) -> "DigitVec":
        """Build from a digit sequence, canonicalizing leading zeros."""
        return cls(check_base(base), _canonical(tuple(digits)))

    @classmethod
    def parse(cls, text: str, base: int) -> "DigitVec":
        """Inverse of render(): juxtaposed digits for b <= 10, comma-separated above."""
        check_base(base)
        text = text.strip()
        if not text:
            raise ValueError("empty digit string")
        if base <= 10:
            parts = list(text)
        else:
            parts = text.split(",")
        return cls.from_digits([int(p) for p in parts], base)

    # -- queries -----------------------------------------------------

    def to_int(self) -> int:
        """Exact value (unbounded)."""
        value = 0
        for d in self.digits:
            value = value * self.base + d
        return value

    def digit_sum(self) -> int:
        return sum(self.digits)

    def digit_count(self) -> int:
        return len(self.digits)

    def is_zero(self) -> bool:
        return self.digits == (0,)

    def mod_small(self, m: int) -> int:
        """value(self) mod m by left-to-right Horner accumulation."""
        if m < 1:
            raise ValueError(f"modulus must be >= 1, got {m}")
        acc = 0
        for d in self.digits:
            acc = (acc * self.base + d) % m
        return acc

    def reversal(self) -> "DigitVec":
        """Digits reversed, then re-canonicalized (trailing zeros vanish)."""
        return DigitVec(self.base, _canonical(self.digits[::-1]))

    def is_palindrome(self) -> bool:
        return self.reversal() == self

    # -- arithmetic (schoolbook, full carry propagation) --------------

    def _require_same_base(self, other: "DigitVec") -> None:
        if not isinstance(other, DigitVec):
            raise TypeError(f"expected DigitVec, got {type(other).__name__}")
        if other.base != self.base:
            raise ValueError(f"base mismatch: {self.base} vs {other.base}")

    def __add__(self, other: "DigitVec") -> "DigitVec":
        self._require_same_base(other)
        b = self.base
        a = self.digits[::-1]
        c = other.digits[::-1]
        out = []
        carry = 0
        for i in range(max(len(a), len(c))):
            t = carry
            if i < len(a):
                t += a[i]
            if i < len(c):
                t += c[i]
            carry, d = divmod(t, b)
            out.append(d)
        if carry:
            out.append(carry)
        return DigitVec(b, _canonical(out[::-1]))

    def __mul__(self, other: "DigitVec") -> "DigitVec":
        self._require_same_base(other)
        b = self.base
        if self.is_zero() or other.is_zero():
            return DigitVec(b, (0,))
        a = self.digits[::-1]
        c = other.digits[::-1]
        acc = [0] * (len(a) + len(c))
        for i, da in enumerate(a):
            if da == 0:
                continue
            carry = 0
            for j, dc in enumerate(c):
                t = acc[i + j] + da * dc + carry
                carry, acc[i + j] = divmod(t, b)
            k = i + len(c)
            while carry:
                t = acc[k] + carry
                carry, acc[k] = divmod(t, b)
                k += 1
        return DigitVec(b, _canonical(acc[::-1]))

    # -- rendering ----------------------------------------------------

    def render(self) -> str:
        """Digits base-10-per-digit: juxtaposed for b <= 10, comma-separated above."""
        if self.base <= 10:
            return "".join(str(d) for d in self.digits)
        return ",".join(str(d) for d in self.digits)

    def __str__(self) -> str:
        return self.render()


def repeat_pattern(pattern: str | Sequence[int], times: int, base: int) -> DigitVec:
    """Digit vector of `pattern` concatenated `times` times, canonicalized."""
    check_base(base)
    if times < 1:
        raise ValueError(f"times must be >= 1, got {times}")
    if isinstance(pattern, str):
        parts = list(pattern) if base <= 10 else pattern.split(",")
        pattern_digits = tuple(int(p) for p in parts)
    else:
        pattern_digits = tuple(pattern)
    if not pattern_digits:
        raise ValueError("empty pattern")
    for d in pattern_digits:
        if not 0 <= d < base:
            raise ValueError(f"pattern digit {d} out of range for base {base}")
    return DigitVec.from_digits(pattern_digits * times, base)


# -- plain-int digit helpers (search engine workhorses) ---------------


def reverse_int(x: int, base: int) -> int:
    """Value of x's base-b digits reversed; trailing zeros of x vanish."""
    r = 0
    while x:
        x, d = divmod(x, base)
        r = r * base + d
    return r


def digit_sum_int(x: int, base: int) -> int:
    s = 0
    while x:
        x, d = divmod(x, base)
        s += d
    return s


def digit_count_int(x: int, base: int) -> int:
    if x == 0:
        return 1
    k = 0
    while x:
        x //= base
        k += 1
    return k


def has_zero_digit(x: int, base: int) -> bool:
    if x == 0:
        return True
    while x:
        x, d = divmod(x, base)
        if d == 0:
            return True
    return False
