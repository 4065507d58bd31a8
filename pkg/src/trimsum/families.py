"""The divisibility-test families and their iteration driver.

Families: right trimming (weight on the last digit), left trimming
(weight base - q on the top digit, always run on stacked coefficients),
weighted summing, binomial summing, the historical base-10 test for 7,
and last-digits tests for divisors of a power of the base.

Two conventions are easy to transpose and are fixed here once:

* summing weights w**j attach from the MOST significant digit down
  (j = 0 on the top digit);
* binomial weights (base - q)**j attach from the LEAST significant digit
  up (j = 0 on the last digit), with (base - q)**0 = 1 even when
  base == q.

All families act on |a|. Divisibility does not depend on sign, and
intermediate results may themselves go negative (trimming 49 by sevens
gives -14); the driver renormalises to the magnitude before the next
step.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import oracle
from .digits import DigitString, StackedNumber, add, collapse, lift, scale, split_low
from .weights import Weight, weight_inverse

TRIM = "trim"
LEFT_TRIM = "left_trim"
SUM = "sum"
BINOMIAL = "binomial"
TALMUD = "talmud"
LAST_DIGITS = "last_digits"
FAMILIES = (TRIM, LEFT_TRIM, SUM, BINOMIAL, TALMUD, LAST_DIGITS)

DIVISIBLE = "divisible"
NOT_DIVISIBLE = "not_divisible"


@dataclass(frozen=True)
class TestRule:
    """A divisibility test: a family plus the divisor it decides.

    Build rules through the classmethod constructors; they validate the
    family's preconditions and attach the weight where one is needed.
    """

    family: str
    q: int
    base: int = 10
    weight: Weight | None = None
    k: int | None = None

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.q < 1:
            raise ValueError(f"divisor must be >= 1, got {self.q}")
        if self.base < 2:
            raise ValueError(f"base must be >= 2, got {self.base}")

    @property
    def binomial_weight(self) -> int:
        return self.base - self.q

    @property
    def omega(self) -> int | None:
        return self.weight.omega if self.weight is not None else None

    def as_json(self) -> dict:
        return {"family": self.family, "q": self.q, "base": self.base, "omega": self.omega}

    @classmethod
    def trim(cls, q: int, base: int = 10) -> TestRule:
        return cls(TRIM, q, base, weight=weight_inverse(q, base))

    @classmethod
    def sum(cls, q: int, base: int = 10) -> TestRule:
        return cls(SUM, q, base, weight=weight_inverse(q, base))

    @classmethod
    def binomial(cls, q: int, base: int = 10) -> TestRule:
        if q < 2:
            raise ValueError(f"binomial test requires q >= 2, got {q}")
        return cls(BINOMIAL, q, base)

    @classmethod
    def left_trim(cls, q: int, base: int = 10) -> TestRule:
        if q < 2:
            raise ValueError(f"left trim requires q >= 2, got {q}")
        return cls(LEFT_TRIM, q, base)

    @classmethod
    def talmud(cls) -> TestRule:
        return cls(TALMUD, 7, 10)

    @classmethod
    def last_digits(cls, q: int, base: int = 10) -> TestRule:
        """Rule returning the low k digits, for the least k with q | base**k."""
        if q < 1 or base < 2:
            raise ValueError(f"need q >= 1 and base >= 2, got q={q} base={base}")
        k, power = 0, 1
        # if every prime of q divides the base, k never exceeds log2(q)
        while power % q and k <= q.bit_length():
            k += 1
            power *= base
        if power % q:
            raise ValueError(f"q={q} divides no power of base {base}; no last-digits test")
        return cls(LAST_DIGITS, q, base, k=k)


@dataclass(frozen=True)
class TraceStep:
    op: str
    stacked: StackedNumber
    collapsed: DigitString


@dataclass(frozen=True)
class Trace:
    rule: TestRule
    steps: tuple[TraceStep, ...]
    terminal: DigitString
    verdict: str

    def as_json(self) -> dict:
        return {
            "rule": self.rule.as_json(),
            "steps": [
                {"op": s.op, "coeffs": list(s.stacked.coeffs), "collapsed": s.collapsed.render()}
                for s in self.steps
            ],
            "terminal": self.terminal.render(),
            "verdict": self.verdict,
        }


def _expect(rule: TestRule, *families: str) -> None:
    if rule.family not in families:
        raise ValueError(f"rule family {rule.family!r} not usable here (need {' or '.join(families)})")


def _expect_base(base: int, rule: TestRule) -> None:
    if base != rule.base:
        raise ValueError(f"base mismatch: value in base {base}, rule in base {rule.base}")


def trim(a: DigitString, rule: TestRule) -> DigitString:
    """One right trim: everything but the last digit, plus omega times it."""
    _expect(rule, TRIM)
    _expect_base(a.base, rule)
    abar, a0 = split_low(abs(a), 1)
    return add(abar, scale(a0, rule.weight.omega))


def stack_trim(s: StackedNumber, rule: TestRule) -> StackedNumber:
    """Right trim on stacked coefficients: fold omega * coeffs[0] into coeffs[1].

    Higher coefficients are untouched, so iterating never propagates a
    carry; that is what keeps the chain's terminal equal to the weighted
    digit sum.
    """
    _expect(rule, TRIM)
    _expect_base(s.base, rule)
    w = rule.weight.omega
    c = s.coeffs
    if len(c) == 1:
        return StackedNumber(s.base, (w * c[0],))
    return StackedNumber(s.base, (c[1] + w * c[0],) + c[2:])


def left_trim(s: StackedNumber, rule: TestRule) -> StackedNumber:
    """Left trim: fold (base - q) * top coefficient into the next slot down."""
    _expect(rule, LEFT_TRIM)
    _expect_base(s.base, rule)
    if len(s.coeffs) < 2:
        raise ValueError("left trim needs at least two coefficients")
    c = s.coeffs
    return StackedNumber(s.base, c[:-2] + (c[-2] + rule.binomial_weight * c[-1],))


def sum_test(a: DigitString, rule: TestRule) -> DigitString:
    """Weighted digit sum with omega**j applied from the top digit down."""
    _expect(rule, SUM)
    _expect_base(a.base, rule)
    w = rule.weight.omega
    digits = abs(a).digits
    acc = digits[0]
    for d in digits[1:]:
        acc = d + w * acc
    return DigitString.from_int(acc, a.base)


def binomial_test(a: DigitString, rule: TestRule) -> DigitString:
    """Weighted digit sum with (base - q)**j applied from the last digit up."""
    _expect(rule, BINOMIAL)
    _expect_base(a.base, rule)
    w = rule.binomial_weight
    digits = abs(a).digits
    acc = digits[-1]
    for d in reversed(digits[:-1]):
        acc = d + w * acc
    return DigitString.from_int(acc, a.base)


def talmud(a: DigitString) -> DigitString:
    """Twice the hundreds part plus the last two digits (base 10, q = 7)."""
    if a.base != 10:
        raise ValueError("the Talmud test is a base-10 test")
    high, low = split_low(abs(a), 2)
    return add(scale(high, 2), low)


def last_digits(a: DigitString, rule: TestRule) -> DigitString:
    """The low k digits of |a|; a test for q whenever q divides base**k."""
    _expect(rule, LAST_DIGITS)
    _expect_base(a.base, rule)
    return split_low(abs(a), rule.k)[1]


def apply_once(a: DigitString, rule: TestRule) -> DigitString:
    """One application of the rule's reduction, as a canonical value."""
    if rule.family == TRIM:
        return trim(a, rule)
    if rule.family == SUM:
        return sum_test(a, rule)
    if rule.family == BINOMIAL:
        return binomial_test(a, rule)
    if rule.family == TALMUD:
        return talmud(a)
    if rule.family == LAST_DIGITS:
        return last_digits(a, rule)
    # left trim of a single digit has nothing to trim; the empty chain is |a|
    s = lift(abs(a))
    if len(s.coeffs) == 1:
        return abs(a)
    return collapse(left_trim(s, rule))


def iterate(a: DigitString, rule: TestRule, *, stacked: bool = False) -> Trace:
    """Drive a rule to a verdict, recording every step.

    Plain mode applies the rule to canonical values and stops once the
    magnitude falls below base**2 or a step fails to shrink it; the
    verdict is then decided by direct remainder. With ``stacked=True``
    (trim only) the chain instead runs on stacked coefficients for
    exactly length-1 steps, whose terminal single coefficient is the
    weighted digit sum. Left trimming always runs its stacked chain.
    """
    if rule.family == LEFT_TRIM:
        return _chain_stacked(a, rule, left_trim, "left_trim")
    if rule.family == TRIM and stacked:
        return _chain_stacked(a, rule, stack_trim, "stack")
    if stacked:
        raise ValueError(f"stacked iteration applies to {TRIM!r} and {LEFT_TRIM!r} rules only")
    return _iterate_plain(a, rule)


def _verdict(terminal: DigitString, q: int) -> str:
    return DIVISIBLE if oracle.remainder(terminal, q) == 0 else NOT_DIVISIBLE


def _chain_stacked(a: DigitString, rule: TestRule, step_fn, op: str) -> Trace:
    s = lift(abs(a))
    steps = []
    while len(s.coeffs) > 1:
        s = step_fn(s, rule)
        steps.append(TraceStep(op, s, collapse(s)))
    terminal = steps[-1].collapsed if steps else abs(a)
    return Trace(rule, tuple(steps), terminal, _verdict(terminal, rule.q))


def _iterate_plain(a: DigitString, rule: TestRule) -> Trace:
    current = abs(a)
    bound = rule.base * rule.base
    steps = []
    while current.value >= bound:
        out = apply_once(current, rule)
        steps.append(TraceStep(rule.family, lift(out), out))
        if abs(out.value) >= current.value:
            break
        current = abs(out)
    terminal = steps[-1].collapsed if steps else current
    return Trace(rule, tuple(steps), terminal, _verdict(terminal, rule.q))


def divides_via(a: DigitString, rule: TestRule) -> bool:
    """Decide q | a by iterating the rule."""
    return iterate(a, rule).verdict == DIVISIBLE
