"""Constructive generators for the infinite families, with verifiers.

Each generator builds its family member as a digit string (never by
native exponentiation), predicts the multiplier set the corresponding
theorem describes, and attaches named claims.  verify_family recomputes
every claim with exact digit-vector arithmetic; a failing claim is data,
not a crash: construction guarantees that fail are IMPLEMENTATION-BUG,
printed-source assertions that recompute false are CONFLICT-WITH-PAPER.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .classify import (
    ARH,
    MRH,
    WORD_SIZE_CAP,
    VerifyFailure,
    arh_witnesses,
    is_niven,
    mrh_witnesses,
    verify_witness,
)
from .digitvec import DigitVec, check_base, repeat_pattern

REPUNIT12 = "repunit12"
ALL_ONES = "all_ones"
ALTERNATING = "alternating"
SQUARE = "square"
NIVEN_NOT_MRH = "niven_not_mrh"

CONSTRUCTION = "construction"
PAPER = "paper"

PASS = "PASS"
IMPLEMENTATION_BUG = "IMPLEMENTATION-BUG"
CONFLICT_WITH_PAPER = "CONFLICT-WITH-PAPER"
INFO = "INFO"
SKIPPED = "SKIPPED"

# Materializing 2^((k-2p)/2) multipliers must stay sane.
MAX_MULTIPLIER_SET = 1 << 16
# Root of the square family has 2^(k-1) digits; schoolbook squaring caps this.
MAX_SQUARE_ROOT_DIGITS = 1 << 12
# Exhaustive witness searches in the verifier only run below this value.
DEFAULT_EXHAUSTIVE_CAP = 1 << 20


class FamilyParameterError(ValueError):
    """A family side condition was violated; `condition` names which one."""

    def __init__(self, condition: str, message: str):
        super().__init__(message)
        self.condition = condition


@dataclass(frozen=True)
class Claim:
    name: str
    source: str  # CONSTRUCTION | PAPER
    expected: bool | None  # None: informational, reported but not judged


@dataclass(frozen=True)
class FamilyInstance:
    family: str
    base: int
    params: dict
    number: DigitVec
    predicted_multipliers: tuple[DigitVec, ...]
    claims: tuple[Claim, ...]

    def to_json_dict(self) -> dict:
        return {
            "family": self.family,
            "base": self.base,
            "params": dict(self.params),
            "number": {"value": self.number.to_int(), "digits": self.number.render()},
            "predicted_multipliers": [
                {"value": m.to_int(), "digits": m.render()}
                for m in self.predicted_multipliers
            ],
            "claims": [
                {"name": c.name, "source": c.source, "expected": c.expected}
                for c in self.claims
            ],
        }


@dataclass(frozen=True)
class ClaimResult:
    name: str
    passed: bool | None  # None: informational or skipped
    verdict: str
    detail: str

    def to_json_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "verdict": self.verdict,
            "detail": self.detail,
        }


@dataclass(frozen=True)
class FamilyReport:
    instance: FamilyInstance
    results: tuple[ClaimResult, ...]

    @property
    def passed(self) -> bool:
        return all(r.passed is not False for r in self.results)

    @property
    def conflicts(self) -> tuple[ClaimResult, ...]:
        return tuple(r for r in self.results if r.verdict == CONFLICT_WITH_PAPER)

    def to_json_dict(self) -> dict:
        return {
            "instance": self.instance.to_json_dict(),
            "results": [r.to_json_dict() for r in self.results],
            "passed": self.passed,
            "conflicts": [r.name for r in self.conflicts],
        }


def _require(ok: bool, condition: str, message: str) -> None:
    if not ok:
        raise FamilyParameterError(condition, message)


# -- generators --------------------------------------------------------


def gen_repunit12(k: int) -> FamilyInstance:
    """Base-10 numbers (12) repeated 3^k times; ARH and Niven for every k."""
    _require(k >= 0, "k >= 0", f"k must be a nonnegative integer, got {k}")
    number = repeat_pattern("12", 3**k, 10)
    s = 3 ** (k + 1)
    value = number.to_int()
    quot, rem = divmod(value, 2 * s)
    if rem:  # construction guarantee, must not occur
        raise ArithmeticError(f"2*s(N) does not divide N for k={k}")
    return FamilyInstance(
        family=REPUNIT12,
        base=10,
        params={"k": k},
        number=number,
        predicted_multipliers=(DigitVec.from_int(quot, 10),),
        claims=(
            Claim("arh_witness", CONSTRUCTION, True),
            Claim("half_is_palindrome", CONSTRUCTION, True),
            Claim("niven", PAPER, True),
        ),
    )


def _all_ones_params(base: int, p: int) -> int:
    _require(base % 2 == 0, "b even", f"base must be even, got {base}")
    _require(p >= 1, "p >= 1", f"p must be >= 1, got {p}")
    return base**p  # k = [1 (0)^p]_b


def gen_all_ones(base: int, p: int) -> FamilyInstance:
    """(1) repeated k = b^p times in even base b; 2^((k-2p)/2) multipliers."""
    check_base(base)
    k = _all_ones_params(base, p)
    _require(k >= 2 * p, "k >= 2p", f"k = b^p = {k} must be >= 2p = {2 * p}")
    half = (k - 2 * p) // 2
    _require(
        1 << half <= MAX_MULTIPLIER_SET,
        "multiplier set materializable",
        f"2^{half} multipliers exceed the materialization limit",
    )
    number = DigitVec.from_digits([1] * k, base)
    prefix = [1] * p
    multipliers = []
    for bits in itertools.product((0, 1), repeat=half):
        inner = list(bits) + [1 - b for b in reversed(bits)]
        multipliers.append(DigitVec.from_digits(prefix + inner, base))
    claims = [
        Claim("multipliers_verify", CONSTRUCTION, True),
        Claim("multiplier_cardinality", PAPER, True),
        Claim("not_niven", PAPER, True),
    ]
    if base == 2:
        claims.append(Claim("multiplier_set_complete", PAPER, True))
    return FamilyInstance(
        family=ALL_ONES,
        base=base,
        params={"p": p, "k": k},
        number=number,
        predicted_multipliers=tuple(multipliers),
        claims=tuple(claims),
    )


def gen_alternating(base: int, p: int) -> FamilyInstance:
    """[(1)^p (10)^(k-2p) 0 (1)^p]_b in even base b; (b-1)^((k-2p)/2) multipliers."""
    check_base(base)
    k = _all_ones_params(base, p)
    _require(k > 2 * p, "k > 2p", f"k = b^p = {k} must be > 2p = {2 * p}")
    blocks = k - 2 * p
    half = blocks // 2
    _require(
        (base - 1) ** half <= MAX_MULTIPLIER_SET,
        "multiplier set materializable",
        f"(b-1)^{half} multipliers exceed the materialization limit",
    )
    number = DigitVec.from_digits([1] * p + [1, 0] * blocks + [0] + [1] * p, base)
    prefix = [1] * p
    multipliers = []
    for free in itertools.product(range(1, base), repeat=half):
        alphas = list(free) + [base - a for a in reversed(free)]
        inner = []
        for a in alphas:
            inner += [0, a]
        multipliers.append(DigitVec.from_digits(prefix + inner + [0], base))
    multipliers.sort(key=DigitVec.to_int)
    return FamilyInstance(
        family=ALTERNATING,
        base=base,
        params={"p": p, "k": k},
        number=number,
        predicted_multipliers=tuple(multipliers),
        claims=(
            Claim("multipliers_verify", CONSTRUCTION, True),
            Claim("multiplier_cardinality", PAPER, True),
            Claim("not_niven", PAPER, True),
            Claim("multiplier_set_complete", PAPER, True),
        ),
    )


# The printed example asserts the root is NOT Niven for this one instance.
SQUARE_PAPER_NOT_NIVEN = (17, 5)


def gen_square_family(base: int, k: int) -> FamilyInstance:
    """Perfect-square b-MRH numbers in odd base b with s_b(root) = s_b(N)."""
    check_base(base)
    _require(base % 2 == 1, "b odd", f"base must be odd, got {base}")
    _require(k >= 2, "k >= 2", f"k must be >= 2, got {k}")
    half_len = 2 ** (k - 1)
    _require(
        half_len <= MAX_SQUARE_ROOT_DIGITS,
        "root materializable",
        f"root would have {half_len} digits, over the materialization limit",
    )
    number = DigitVec.from_digits(
        [base - 1] * (half_len - 1) + [base - 2] + [0] * (half_len - 1) + [1], base
    )
    root = DigitVec.from_digits([base - 1] * half_len, base)
    s = half_len * (base - 1)
    root_value = root.to_int()
    predicted = ()
    if root_value % s == 0:
        predicted = (DigitVec.from_int(root_value // s, base),)
    if base % 4 == 3:
        root_claim = Claim("root_niven", PAPER, True)
    elif (base, k) == SQUARE_PAPER_NOT_NIVEN:
        root_claim = Claim("root_niven", PAPER, False)
    else:
        root_claim = Claim("root_niven", PAPER, None)
    return FamilyInstance(
        family=SQUARE,
        base=base,
        params={"k": k},
        number=number,
        predicted_multipliers=predicted,
        claims=(
            Claim("square_is_number", CONSTRUCTION, True),
            Claim("digit_sum_match", PAPER, True),
            Claim("digit_sum_divides_root", PAPER, True),
            Claim("mrh_witness", PAPER, True),
            root_claim,
        ),
    )


def gen_niven_not_mrh(base: int, n: int) -> FamilyInstance:
    """(b-1)*n*R_n: a b-Niven number that is not b-MRH, for (b-1) not dividing n."""
    check_base(base)
    _require(n >= 1, "n >= 1", f"n must be >= 1, got {n}")
    _require(
        n % (base - 1) != 0,
        "(b-1) does not divide n",
        f"n = {n} is divisible by b-1 = {base - 1}",
    )
    repunit = repeat_pattern([1], n, base)
    number = DigitVec.from_int((base - 1) * n, base) * repunit
    _require(
        number.to_int() <= WORD_SIZE_CAP,
        "value within word size",
        "(b-1)*n*R_n exceeds the word-size cap needed for the exhaustive not-MRH check",
    )
    return FamilyInstance(
        family=NIVEN_NOT_MRH,
        base=base,
        params={"n": n},
        number=number,
        predicted_multipliers=(),
        claims=(
            Claim("digit_sum_lemma", PAPER, True),
            Claim("niven", PAPER, True),
            Claim("not_mrh", PAPER, True),
        ),
    )


GENERATORS = {
    REPUNIT12: gen_repunit12,
    ALL_ONES: gen_all_ones,
    ALTERNATING: gen_alternating,
    SQUARE: gen_square_family,
    NIVEN_NOT_MRH: gen_niven_not_mrh,
}


# -- verification ------------------------------------------------------


def _judge(claim: Claim, actual: bool, detail: str) -> ClaimResult:
    if claim.expected is None:
        return ClaimResult(claim.name, None, INFO, detail)
    if actual == claim.expected:
        return ClaimResult(claim.name, True, PASS, detail)
    verdict = IMPLEMENTATION_BUG if claim.source == CONSTRUCTION else CONFLICT_WITH_PAPER
    return ClaimResult(claim.name, False, verdict, detail)


def _skip(claim: Claim, reason: str) -> ClaimResult:
    return ClaimResult(claim.name, None, SKIPPED, reason)


def verify_family(
    inst: FamilyInstance, exhaustive_cap: int = DEFAULT_EXHAUSTIVE_CAP
) -> FamilyReport:
    """Recompute every claim of the instance with exact arithmetic.

    Constructive witnesses are used at any size; exhaustive witness
    searches (set-completeness, not-MRH) only run for values at or
    below `exhaustive_cap` / the word-size cap and are SKIPPED above.
    """
    n = inst.number
    value = n.to_int()
    s = n.digit_sum()
    results = []
    for claim in inst.claims:
        name = claim.name
        if name == "arh_witness":
            m = inst.predicted_multipliers[0].to_int()
            got = verify_witness(n, m, ARH)
            ok = not isinstance(got, VerifyFailure)
            results.append(_judge(claim, ok, f"M={m}: X + X^R {'=' if ok else '!='} N"))
        elif name == "half_is_palindrome":
            m = inst.predicted_multipliers[0]
            x = m * DigitVec.from_int(s, inst.base)
            results.append(
                _judge(claim, x.is_palindrome(), f"X = M*s = {x.render()}")
            )
        elif name == "niven":
            ok = is_niven(n)
            results.append(_judge(claim, ok, f"s_b(N) = {s} {'|' if ok else 'does not divide'} N"))
        elif name == "not_niven":
            ok = not is_niven(n)
            results.append(
                _judge(claim, ok, f"s_b(N) = {s} {'does not divide' if ok else '|'} N")
            )
        elif name == "multipliers_verify":
            bad = [
                m.to_int()
                for m in inst.predicted_multipliers
                if isinstance(verify_witness(n, m.to_int(), ARH), VerifyFailure)
            ]
            results.append(
                _judge(
                    claim,
                    not bad,
                    f"{len(inst.predicted_multipliers) - len(bad)}/"
                    f"{len(inst.predicted_multipliers)} multipliers satisfy X + X^R = N"
                    + (f"; failing: {bad[:4]}" if bad else ""),
                )
            )
        elif name == "multiplier_cardinality":
            if inst.family == ALL_ONES:
                expected_count = 1 << ((inst.params["k"] - 2 * inst.params["p"]) // 2)
            else:
                expected_count = (inst.base - 1) ** (
                    (inst.params["k"] - 2 * inst.params["p"]) // 2
                )
            got = len(inst.predicted_multipliers)
            results.append(
                _judge(claim, got == expected_count, f"predicted {got}, formula {expected_count}")
            )
        elif name == "multiplier_set_complete":
            if value > exhaustive_cap:
                results.append(_skip(claim, f"value {value} above exhaustive cap {exhaustive_cap}"))
                continue
            brute = {w.m for w in arh_witnesses(n)}
            predicted = {m.to_int() for m in inst.predicted_multipliers}
            extra = sorted(brute - predicted)
            missing = sorted(predicted - brute)
            ok = not extra and not missing
            detail = f"brute force found {len(brute)} multipliers"
            if extra:
                detail += f"; unpredicted: {extra[:4]}"
            if missing:
                detail += f"; predicted but absent: {missing[:4]}"
            results.append(_judge(claim, ok, detail))
        elif name == "square_is_number":
            root = _square_root_vec(inst)
            ok = root * root == n
            results.append(_judge(claim, ok, f"root^2 {'=' if ok else '!='} N"))
        elif name == "digit_sum_match":
            root = _square_root_vec(inst)
            expected_sum = 2 ** (inst.params["k"] - 1) * (inst.base - 1)
            ok = root.digit_sum() == s == expected_sum
            results.append(
                _judge(claim, ok, f"s_b(root) = {root.digit_sum()}, s_b(N) = {s}, formula {expected_sum}")
            )
        elif name == "digit_sum_divides_root":
            root = _square_root_vec(inst)
            ok = root.mod_small(s) == 0
            results.append(_judge(claim, ok, f"root mod s_b(N) = {root.mod_small(s)}"))
        elif name == "mrh_witness":
            if not inst.predicted_multipliers:
                results.append(
                    _judge(claim, False, "no integer multiplier: s_b(N) does not divide the root")
                )
                continue
            m = inst.predicted_multipliers[0].to_int()
            got = verify_witness(n, m, MRH)
            ok = not isinstance(got, VerifyFailure)
            results.append(_judge(claim, ok, f"M={m}: X * X^R {'=' if ok else '!='} N"))
        elif name == "root_niven":
            root = _square_root_vec(inst)
            ok = is_niven(root)
            results.append(
                _judge(claim, ok, f"root is {'a' if ok else 'not a'} {inst.base}-Niven number")
            )
        elif name == "digit_sum_lemma":
            expected_sum = (inst.base - 1) * inst.params["n"]
            results.append(
                _judge(claim, s == expected_sum, f"s_b(N) = {s}, (b-1)*n = {expected_sum}")
            )
        elif name == "not_mrh":
            if value > WORD_SIZE_CAP:
                results.append(_skip(claim, "value above word-size cap"))
                continue
            witnesses = mrh_witnesses(n)
            ok = not witnesses
            results.append(
                _judge(
                    claim,
                    ok,
                    "exhaustive search found no multiplicative multiplier"
                    if ok
                    else f"multiplicative multipliers exist: {[w.m for w in witnesses][:4]}",
                )
            )
        else:  # unknown claim name is a construction bug
            results.append(ClaimResult(name, False, IMPLEMENTATION_BUG, "unknown claim"))
    return FamilyReport(instance=inst, results=tuple(results))


def _square_root_vec(inst: FamilyInstance) -> DigitVec:
    half_len = 2 ** (inst.params["k"] - 1)
    return DigitVec.from_digits([inst.base - 1] * half_len, inst.base)
