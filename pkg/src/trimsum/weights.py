"""Trimming weights: the signed multiplier applied to the last digit.

A weight w for divisor q in base b satisfies b*w = 1 (mod q). Three
derivations are provided: a four-case table keyed on the last digit of q
(base 10 only), a rounding rule that triples q when it ends in 3 or 7 and
then rounds q/10 to the nearest integer (base 10 only), and the least
absolute residue of the inverse of the base modulo q, which works in any
base coprime to q. All three produce the same integer wherever their
domains overlap, and the canonical method for the test families is
``inverse``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

TABLE = "table"
ROUNDING = "rounding"
INVERSE = "inverse"
METHODS = (TABLE, ROUNDING, INVERSE)


@dataclass(frozen=True)
class Weight:
    q: int
    base: int
    omega: int
    method: str


def _check_base10_divisor(q: int) -> None:
    if q < 1:
        raise ValueError(f"divisor must be >= 1, got {q}")
    if q % 2 == 0 or q % 5 == 0:
        raise ValueError(
            f"no base-10 trimming weight for q={q}: last digit must be 1, 3, 7 or 9"
        )


def weight_table(q: int) -> Weight:
    """Base-10 weight from the four-case table.

    last digit of q:   1        3         7          9
    weight:           -q//10    3*q//10+1 -(3*q//10+2)  q//10+1
    """
    _check_base10_divisor(q)
    q0, qbar = q % 10, q // 10
    omega = {1: -qbar, 3: 3 * qbar + 1, 7: -(3 * qbar + 2), 9: qbar + 1}[q0]
    return Weight(q, 10, omega, TABLE)


def weight_rounding(q: int) -> Weight:
    """Base-10 weight by rounding.

    If q ends in 3 or 7, triple it so the last digit becomes 9 or 1. Then
    round q/10 to the nearest integer; the weight is negative when the
    rounding went down (last digit 1) and positive when it went up (9).
    """
    _check_base10_divisor(q)
    m = 3 * q if q % 10 in (3, 7) else q
    # last digit of m is 1 or 9, so m/10 never lands on a .5 tie
    if m % 10 == 1:
        omega = -(m // 10)
    else:
        omega = m // 10 + 1
    return Weight(q, 10, omega, ROUNDING)


def weight_inverse(q: int, base: int = 10) -> Weight:
    """Least absolute residue of the inverse of the base modulo q.

    The result is the unique integer in (-q/2, q/2] with base*omega = 1
    (mod q). Requires gcd(q, base) = 1.
    """
    if q < 1:
        raise ValueError(f"divisor must be >= 1, got {q}")
    if base < 2:
        raise ValueError(f"base must be >= 2, got {base}")
    if math.gcd(q, base) != 1:
        raise ValueError(f"q={q} and base={base} share a factor; no trimming weight exists")
    inv = pow(base, -1, q)
    omega = inv - q if 2 * inv > q else inv
    return Weight(q, base, omega, INVERSE)
