"""Enumeration engines: range scans, complete per-multiplier sets, the
non-expressible counting experiment, and the palindromic-square search.

Range scans work forward from the candidate product X rather than
testing every N: for each X, N = X + X^R (additive) or N = X * X^R
(multiplicative) and X is a witness product iff s_b(N) | X.  Every
witness of every N <= hi has X <= hi, so one sweep of the X-space is a
complete scan of the N-range.  The multiplicative sweep only needs X
with no trailing zeros (X = Y*b^t reverses to Y^R), which keeps it at
O(sqrt(hi*b)) candidates.

The X-space is what gets partitioned for parallel execution; a single
merge groups hits by N and sorts, so output is byte-identical for any
partition count.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .bounds import digit_bound
from .classify import (
    ARH,
    MRH,
    NIVEN,
    WORD_SIZE_CAP,
    ClassifyResult,
    WitnessAdd,
    WitnessMul,
)
from .digitvec import (
    DigitVec,
    check_base,
    digit_sum_int,
    has_zero_digit,
    reverse_int,
)

ALLOW = "allow"
FORBID = "forbid"


@dataclass(frozen=True)
class SearchConfig:
    base: int
    lo: int
    hi: int
    kind: str
    zero_digit_policy: str = ALLOW
    multiplier_filter: int | None = None

    def __post_init__(self) -> None:
        check_base(self.base)
        if not 1 <= self.lo <= self.hi:
            raise ValueError(f"need 1 <= lo <= hi, got [{self.lo}, {self.hi}]")
        if self.hi > WORD_SIZE_CAP:
            raise ValueError(f"range end {self.hi} exceeds word-size cap {WORD_SIZE_CAP}")
        if self.kind not in (ARH, MRH, NIVEN):
            raise ValueError(f"kind must be one of {ARH!r}, {MRH!r}, {NIVEN!r}")
        if self.zero_digit_policy not in (ALLOW, FORBID):
            raise ValueError(f"zero_digit_policy must be {ALLOW!r} or {FORBID!r}")
        if self.multiplier_filter is not None:
            if self.multiplier_filter < 1:
                raise ValueError("multiplier_filter must be a positive integer")
            if self.kind == NIVEN:
                raise ValueError("multiplier_filter makes no sense for a Niven scan")


def split_range(lo: int, hi: int, parts: int) -> list[tuple[int, int]]:
    """Contiguous inclusive chunks covering [lo, hi] exactly; may be fewer than `parts`."""
    if parts < 1:
        raise ValueError(f"parts must be >= 1, got {parts}")
    total = hi - lo + 1
    if total <= 0:
        return []
    parts = min(parts, total)
    q, r = divmod(total, parts)
    chunks = []
    start = lo
    for i in range(parts):
        size = q + (1 if i < r else 0)
        chunks.append((start, start + size - 1))
        start += size
    return chunks


def arh_pairs_chunk(
    base: int, x_lo: int, x_hi: int, n_lo: int, n_hi: int
) -> list[tuple[int, int, int]]:
    """(N, M, X) hits with X in [x_lo, x_hi] and N = X + X^R in [n_lo, n_hi]."""
    out = []
    for x in range(max(x_lo, 1), x_hi + 1):
        n = x + reverse_int(x, base)
        if n < n_lo or n > n_hi:
            continue
        s = digit_sum_int(n, base)
        if x % s == 0:
            out.append((n, x // s, x))
    return out


def mrh_y_limit(base: int, hi: int) -> int:
    """Upper bound on the zero-trailing-free part Y of any witness X."""
    # rev(Y) > Y/b for Y >= 1, so N >= Y*rev(Y) > Y^2/b.
    return isqrt(hi * base)


def mrh_pairs_chunk(
    base: int, y_lo: int, y_hi: int, n_lo: int, n_hi: int
) -> list[tuple[int, int, int]]:
    """(N, M, X) hits with X = Y*b^t, Y in [y_lo, y_hi] trailing-zero-free."""
    out = []
    for y in range(max(y_lo, 1), y_hi + 1):
        if y % base == 0:
            continue
        p = y * reverse_int(y, base)
        if p > n_hi:
            continue
        s = digit_sum_int(p, base)  # appending zeros to X leaves s_b(N) fixed
        n, x = p, y
        while n <= n_hi:
            if n >= n_lo and x % s == 0:
                out.append((n, x // s, x))
            n *= base
            x *= base
    return out


def _witness_maps(
    cfg: SearchConfig, partitions: int
) -> tuple[dict[int, list[tuple[int, int]]], dict[int, list[tuple[int, int]]]]:
    """Complete (M, X) witness lists for every N in range, both kinds."""
    arh_map: dict[int, list[tuple[int, int]]] = {}
    mrh_map: dict[int, list[tuple[int, int]]] = {}
    for x_lo, x_hi in split_range(1, cfg.hi - 1, partitions) if cfg.hi > 1 else []:
        for n, m, x in arh_pairs_chunk(cfg.base, x_lo, x_hi, cfg.lo, cfg.hi):
            arh_map.setdefault(n, []).append((m, x))
    y_max = mrh_y_limit(cfg.base, cfg.hi)
    for y_lo, y_hi in split_range(1, y_max, partitions):
        for n, m, x in mrh_pairs_chunk(cfg.base, y_lo, y_hi, cfg.lo, cfg.hi):
            mrh_map.setdefault(n, []).append((m, x))
    for groups in (arh_map, mrh_map):
        for pairs in groups.values():
            pairs.sort()
    return arh_map, mrh_map


def _build_result(
    n: int,
    base: int,
    arh_hits: list[tuple[int, int]],
    mrh_hits: list[tuple[int, int]],
) -> ClassifyResult:
    nd = DigitVec.from_int(n, base)
    s = digit_sum_int(n, base)
    niven = n % s == 0
    sq = n * n
    sq_sum = digit_sum_int(sq, base)
    quad = niven and sq % sq_sum == 0
    arh = tuple(
        WitnessAdd(m, DigitVec.from_int(x, base), DigitVec.from_int(reverse_int(x, base), base))
        for m, x in arh_hits
    )
    mrh = tuple(
        WitnessMul(m, DigitVec.from_int(x, base), DigitVec.from_int(reverse_int(x, base), base))
        for m, x in mrh_hits
    )
    return ClassifyResult(
        n=nd,
        is_niven=niven,
        arh=arh,
        mrh=mrh,
        quadratic_niven=quad,
        strongly_quadratic_niven=quad and s == sq_sum,
    )


def scan_range(cfg: SearchConfig, partitions: int = 1):
    """Ordered stream of (N, ClassifyResult) for every hit of cfg.kind.

    Each emitted record carries the complete witness lists of both
    kinds for that N.  Output is independent of `partitions`.
    """
    arh_map, mrh_map = _witness_maps(cfg, partitions)
    if cfg.kind == ARH:
        candidates = sorted(arh_map)
    elif cfg.kind == MRH:
        candidates = sorted(mrh_map)
    else:
        candidates = [
            n
            for n in range(cfg.lo, cfg.hi + 1)
            if n % digit_sum_int(n, cfg.base) == 0
        ]
    for n in candidates:
        if cfg.zero_digit_policy == FORBID and has_zero_digit(n, cfg.base):
            continue
        if cfg.multiplier_filter is not None:
            key = arh_map if cfg.kind == ARH else mrh_map
            if all(m != cfg.multiplier_filter for m, _ in key.get(n, [])):
                continue
        yield n, _build_result(n, cfg.base, arh_map.get(n, []), mrh_map.get(n, []))


def numbers_for_multiplier(
    base: int, multiplier: int, kind: str, zero_digit_policy: str = ALLOW
) -> list[int]:
    """The complete set of b-ARH/b-MRH numbers with the given multiplier.

    Forward generation: any qualifying N has at most k_max digits
    (digit-count bound), hence s_b(N) <= (b-1)*k_max; each candidate
    digit sum s determines X = M*s and N, accepted iff s_b(N) == s.
    """
    check_base(base)
    if multiplier < 1:
        raise ValueError(f"multiplier must be positive, got {multiplier}")
    if kind not in (ARH, MRH):
        raise ValueError(f"kind must be {ARH!r} or {MRH!r}, got {kind!r}")
    if zero_digit_policy not in (ALLOW, FORBID):
        raise ValueError(f"zero_digit_policy must be {ALLOW!r} or {FORBID!r}")
    k_max = digit_bound(base, multiplier, kind).k_max
    found = []
    for s in range(1, (base - 1) * k_max + 1):
        x = multiplier * s
        xr = reverse_int(x, base)
        n = x + xr if kind == ARH else x * xr
        if digit_sum_int(n, base) != s:
            continue
        if zero_digit_policy == FORBID and has_zero_digit(n, base):
            continue
        found.append(n)
    return sorted(found)


def multiplier_multiplicity(
    base: int, multiplier: int, kind: str, zero_digit_policy: str = ALLOW
) -> int:
    """How many b-ARH/b-MRH numbers admit this multiplier."""
    return len(numbers_for_multiplier(base, multiplier, kind, zero_digit_policy))


def count_not_sum_of_reversal(base: int, k: int) -> int:
    """Brute count of k-digit base-b integers not expressible as X + X^R.

    Sieve oracle: mark X + X^R for every positive X below b^k; no
    X >= b^k can land in the k-digit window.
    """
    check_base(base)
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    window_lo = base ** (k - 1) if k > 1 else 1
    window_hi = base**k  # exclusive
    if window_hi > WORD_SIZE_CAP:
        raise ValueError(f"b^k = {window_hi} exceeds word-size cap")
    marked = bytearray(window_hi - window_lo)
    for x in range(1, window_hi):
        t = x + reverse_int(x, base)
        if window_lo <= t < window_hi:
            marked[t - window_lo] = 1
    return (window_hi - window_lo) - sum(marked)


def formula_lower_bound(base: int, k: int) -> int:
    """b^(k-1)*(b-3)/2 + b^(k-2), in exact integer arithmetic."""
    check_base(base)
    if k < 2:
        raise ValueError(f"formula needs k >= 2, got {k}")
    numerator = base ** (k - 1) * (base - 3)
    if numerator % 2:
        raise ArithmeticError("b^(k-1)*(b-3) is always even for k >= 2")
    return numerator // 2 + base ** (k - 2)


def is_expressible_as_sum_of_reversal(n: int, base: int) -> bool:
    """Whether n = X + X^R for some positive X (X < n suffices)."""
    if n < 2:
        return False
    return any(x + reverse_int(x, base) == n for x in range(1, n))


def palindromic_square_search(limit: int, base: int = 10) -> list[tuple[int, int, int]]:
    """All palindromic N <= limit with s_b(N^2) | N and N^2 zero-digit-free.

    Each (N, N^2, s_b(N^2)) in the result makes N^2 a zero-free b-MRH
    number with multiplier N / s_b(N^2), since N^R = N.
    """
    check_base(base)
    if limit < 1:
        raise ValueError(f"limit must be >= 1, got {limit}")
    if limit * limit > WORD_SIZE_CAP:
        raise ValueError("limit^2 exceeds word-size cap")
    out = []
    for n in range(1, limit + 1):
        if reverse_int(n, base) != n:
            continue
        sq = n * n
        if has_zero_digit(sq, base):
            continue
        s = digit_sum_int(sq, base)
        if n % s == 0:
            out.append((n, sq, s))
    return out
