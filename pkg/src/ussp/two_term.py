"""Two-weight equations ``y1*p1 + y2*p2 = s``.

The core step, :func:`first_coefficient`, picks the smallest ``y`` for the
first weight that makes the remainder divisible by the second. The chain
solver calls it with weights in either order, so it does not require
``p < q``; :func:`solve_two` is the ordered public form.
"""

from dataclasses import dataclass

from .errors import Infeasible, NotCoprime, TooSmall
from .numtheory import (
    check_nat,
    checked_mul,
    checked_sub,
    divides,
    gcd,
    mod_inverse,
    mulmod,
)


def first_coefficient(s, p, q):
    """Smallest ``y >= 0`` with ``q | s - p*y`` and ``p*y <= s``.

    Raises ``Infeasible`` when ``gcd(p, q)`` does not divide ``s`` and
    ``TooSmall`` when the residue-class representative overshoots ``s``.
    """
    e = gcd(p, q)
    if not divides(e, s):
        raise Infeasible(f"gcd={e}")
    s_r, p_r, q_r = s // e, p // e, q // e
    y = mulmod(s_r, mod_inverse(p_r, q_r), q_r)
    if checked_mul(p, y) > s:
        raise TooSmall(f"s={s} is below {p}*{y}", residual=s)
    return y


@dataclass(frozen=True)
class TwoTermWitness:
    s: int
    p1: int
    p2: int
    y1_star: int
    y2_star: int
    coset_count: int
    common_divisor: int

    def __post_init__(self):
        if self.y1_star * self.p1 + self.y2_star * self.p2 != self.s:
            raise ValueError("witness does not reproduce s")
        if self.coset_count < 1:
            raise ValueError("coset_count must be >= 1")
        if self.y1_star >= self.p2 // self.common_divisor:
            raise ValueError("y1_star is not a residue of the reduced p2")

    def solutions(self):
        """Every non-negative pair, walking the coset from the seed."""
        step1 = self.p2 // self.common_divisor
        step2 = self.p1 // self.common_divisor
        return [
            (self.y1_star + j * step1, self.y2_star - j * step2)
            for j in range(self.coset_count)
        ]


def solve_two(s, p1, p2):
    check_nat(s, "s")
    if not 0 < p1 < p2:
        raise ValueError(f"need 0 < p1 < p2, got {p1}, {p2}")
    y1 = first_coefficient(s, p1, p2)
    e = gcd(p1, p2)
    y2 = (s - p1 * y1) // p2
    return TwoTermWitness(
        s=s,
        p1=p1,
        p2=p2,
        y1_star=y1,
        y2_star=y2,
        coset_count=y2 // (p1 // e) + 1,
        common_divisor=e,
    )


def count_two(s, p1, p2):
    """Number of non-negative pairs solving ``y1*p1 + y2*p2 = s``."""
    try:
        return solve_two(s, p1, p2).coset_count
    except TooSmall:
        return 0


def frobenius_two(p1, p2):
    if not 1 < p1 < p2:
        raise ValueError(f"need 1 < p1 < p2, got {p1}, {p2}")
    if gcd(p1, p2) != 1:
        raise NotCoprime(f"gcd({p1}, {p2}) = {gcd(p1, p2)}")
    return checked_sub(checked_mul(p1, p2), p1 + p2)


def chain_threshold(values):
    """Sum of ``a*b - a - b`` over consecutive pairs, floored at 0.

    A single value has threshold 0: any multiple of it is reachable.
    """
    total = 0
    for a, b in zip(values, values[1:]):
        total += checked_mul(a, b) - a - b
    return check_nat(max(total, 0), "threshold")


def count_representable_formula(s, p1, p2):
    """Closed-form count of representable ``r`` in ``[0, s]``.

    Uses ``ceil(s/p1)`` multiples of ``p1`` (taken as 1 at ``s == 0``) plus
    ``floor((s - i*p1)/p2)`` for ``i`` up to ``ceil(s/p1) - 1``, with negative
    terms dropped. Approximate; see the audit in :mod:`ussp.harness`.
    """
    frob = frobenius_two(p1, p2)
    if s > frob:
        raise ValueError(f"s={s} exceeds the Frobenius number {frob}")
    multiples = -(-s // p1)
    total = max(multiples, 1)
    for i in range(multiples):
        total += max((s - i * p1) // p2, 0)
    return total


def count_representable_exact(s, weights):
    from .oracle import representable_set

    return int(representable_set(s, weights).sum())
