"""Work accounting across the test families.

Cost is counted in single-digit multiply-adds: one unit per trimming
step, one unit per digit position when a summing test is evaluated by
running scale-and-add. Together with the weight magnitude and the peak
size of the intermediates this quantifies why small-weight summing beats
binomial summing, and why trimming beats both per decision.
"""

from __future__ import annotations

from dataclasses import dataclass

from .digits import DigitString
from .families import BINOMIAL, LAST_DIGITS, LEFT_TRIM, SUM, TALMUD, TRIM, TestRule, iterate

CSV_HEADER = "q,base,family,weight_magnitude,iterations,digit_ops,max_intermediate_digits"

_COMPARE_FAMILIES = (BINOMIAL, SUM, TRIM)


@dataclass(frozen=True)
class CostReport:
    q: int
    base: int
    family: str
    weight_magnitude: int
    iterations: int
    digit_ops: int
    max_intermediate_digits: int

    def as_csv_row(self) -> str:
        return (
            f"{self.q},{self.base},{self.family},{self.weight_magnitude},"
            f"{self.iterations},{self.digit_ops},{self.max_intermediate_digits}"
        )

    def as_json(self) -> dict:
        return {
            "q": self.q,
            "base": self.base,
            "family": self.family,
            "weight_magnitude": self.weight_magnitude,
            "iterations": self.iterations,
            "digit_ops": self.digit_ops,
            "max_intermediate_digits": self.max_intermediate_digits,
        }


def _weight_magnitude(rule: TestRule) -> int:
    if rule.family in (TRIM, SUM):
        return abs(rule.weight.omega)
    if rule.family in (BINOMIAL, LEFT_TRIM):
        return abs(rule.binomial_weight)
    if rule.family == TALMUD:
        return 2
    return 0


def cost_profile(a: DigitString, rule: TestRule) -> CostReport:
    """Instrument one full run of the rule's verdict iteration."""
    trace = iterate(a, rule)
    lengths = [len(a)] + [len(step.collapsed) for step in trace.steps]
    if rule.family in (SUM, BINOMIAL):
        # one multiply-add per digit position beyond the first, per application
        ops = sum(n - 1 for n in lengths[:-1]) if trace.steps else 0
    elif rule.family == LAST_DIGITS:
        ops = 0
    else:
        ops = len(trace.steps)
    return CostReport(
        rule.q,
        rule.base,
        rule.family,
        _weight_magnitude(rule),
        len(trace.steps),
        ops,
        max(lengths),
    )


def _rule_for(family: str, q: int, base: int) -> TestRule:
    if family == TRIM:
        return TestRule.trim(q, base)
    if family == SUM:
        return TestRule.sum(q, base)
    return TestRule.binomial(q, base)


@dataclass(frozen=True)
class ComparisonTable:
    rows: tuple[CostReport, ...]

    def to_csv(self) -> str:
        return "\n".join([CSV_HEADER, *(r.as_csv_row() for r in self.rows)]) + "\n"

    def as_json(self) -> list[dict]:
        return [r.as_json() for r in self.rows]


def compare(q_list, a_list, base: int = 10) -> ComparisonTable:
    """One cost row per (q, a, family), sorted so output is reproducible."""
    keyed = []
    for q in q_list:
        for a in a_list:
            for family in _COMPARE_FAMILIES:
                report = cost_profile(a, _rule_for(family, q, base))
                keyed.append(((q, a.value, family), report))
    keyed.sort(key=lambda pair: pair[0])
    return ComparisonTable(tuple(report for _, report in keyed))
