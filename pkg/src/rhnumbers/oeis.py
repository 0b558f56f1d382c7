"""OEIS b-file emission for the two base-10 sequences.

A305130: base-10 ARH numbers ascending; A305131: base-10 MRH numbers
ascending.  Terms come from the literal definitions with zero digits
allowed; where that disagrees with the values quoted in the source
text, the deviation is reported alongside, never silently edited in.
"""

from __future__ import annotations

from .classify import ARH, MRH
from .search import SearchConfig, scan_range

SEQ_ARH = "A305130"
SEQ_MRH = "A305131"

# The multiplier-1 MRH set quoted in the introductory text; used only
# to flag deviations of A305131's leading terms.
SECTION1_MRH_TEXT_SET = (1, 81, 1458, 1729)

_SCAN_START = 10_000
_SCAN_LIMIT = 10**9


def _kind_for(seq: str) -> str:
    if seq == SEQ_ARH:
        return ARH
    if seq == SEQ_MRH:
        return MRH
    raise ValueError(f"sequence must be {SEQ_ARH} or {SEQ_MRH}, got {seq!r}")


def first_terms(seq: str, count: int) -> list[int]:
    """First `count` terms, ascending; scans widening ranges until enough."""
    kind = _kind_for(seq)
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    hi = _SCAN_START
    while True:
        cfg = SearchConfig(base=10, lo=1, hi=hi, kind=kind)
        terms = [n for n, _ in scan_range(cfg)]
        if len(terms) >= count:
            return terms[:count]
        if hi >= _SCAN_LIMIT:
            raise ValueError(
                f"{seq} has only {len(terms)} terms up to {hi}; count {count} is out of reach"
            )
        hi *= 10


def emit_bfile(seq: str, count: int) -> str:
    """OEIS b-file text: 'index value' per line, 1-based, newline-terminated."""
    terms = first_terms(seq, count)
    return "".join(f"{i} {v}\n" for i, v in enumerate(terms, start=1))


def bfile_deviation_note(seq: str, terms: list[int]) -> str | None:
    """A note when A305131's leading terms deviate from the quoted text set."""
    if seq != SEQ_MRH:
        return None
    quoted = SECTION1_MRH_TEXT_SET[: len(terms)]
    head = tuple(terms[: len(quoted)])
    if head == quoted:
        return None
    return (
        f"note: leading terms {list(head)} deviate from the quoted multiplier-1 set "
        f"{list(quoted)}; the b-file follows the literal definition (every multiplier, "
        "zero digits allowed)"
    )
