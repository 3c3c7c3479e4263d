"""Chain solver for targets above the divisor-subset threshold.

With divisor subset ``q1..qk`` (selection order), step ``i`` assigns to
``qi`` the smallest coefficient that leaves the residual divisible by
``gcd(q_{i+1}..qk)``. After ``k - 1`` steps the residual is a multiple of
``qk``, which absorbs it.

The optional spread passes then push the residual upward through the larger
weights and grant ``p_j`` units to unused smaller weights, so more of ``W``
gets a non-zero coefficient. Coefficients are accumulated, never
overwritten.
"""

from dataclasses import dataclass, field
from math import gcd

from .errors import TooSmall
from .model import Solution, validate_weights
from .numtheory import check_nat, checked_mul
from .subset_finder import _scan
from .two_term import chain_threshold, first_coefficient


@dataclass
class ChainTrace:
    # (weight index, modulus, coefficient, residual after the step)
    steps: list = field(default_factory=list)
    # (weight index, coefficient)
    spread_steps: list = field(default_factory=list)
    final_residual: int = 0

    def add_step(self, index, modulus, coefficient, residual):
        if self.steps and residual > self.steps[-1][3]:
            raise AssertionError("residual increased along the chain")
        if residual % modulus:
            raise AssertionError(f"{modulus} does not divide residual {residual}")
        self.steps.append((index, modulus, coefficient, residual))


def threshold_z(subset):
    return chain_threshold(subset.weights)


def _spread(s, weights, coeffs, j, trace):
    """Distribute the residual ``s`` (a multiple of ``weights[j]``)."""
    n = len(weights)
    for i in range(j + 1, n):
        try:
            y = first_coefficient(s, weights[j], weights[i])
        except TooSmall:
            if coeffs[i] is None:
                coeffs[i] = 0
            continue
        coeffs[j] = (coeffs[j] or 0) + y
        s -= weights[j] * y
        trace.spread_steps.append((j, y))
        j = i
    for i in range(j):
        if coeffs[i] is not None:
            continue
        if s >= weights[j] * weights[i]:
            coeffs[i] = weights[j]
            s -= weights[i] * weights[j]
            trace.spread_steps.append((i, weights[j]))
        else:
            coeffs[i] = 0
    return s, j


def solve_chain(s, weights, spread=False):
    """Return ``(Solution, ChainTrace)``.

    Raises ``Infeasible`` when ``gcd(weights)`` does not divide ``s`` and
    ``TooSmall`` when a chain step cannot keep the residual non-negative.
    """
    check_nat(s, "s")
    weights = validate_weights(weights)
    n = len(weights)
    trace = ChainTrace()
    if s == 0:
        return Solution(0, weights, (0,) * n, "chain"), trace

    subset = _scan(s, weights)
    coeffs = [None] * n
    members = subset.members
    k = len(members)
    # suffix[i] = gcd of member weights i..k-1
    suffix = [0] * (k + 1)
    for i in range(k - 1, -1, -1):
        suffix[i] = gcd(suffix[i + 1], members[i][1])

    residual = s
    for i in range(k - 1):
        index, q = members[i]
        x = suffix[i + 1]  # equals q_k on the last step
        try:
            y = first_coefficient(residual, q, x)
        except TooSmall as exc:
            raise TooSmall(
                f"chain step {i + 1} of {k - 1}: {exc}", step=i, residual=residual
            ) from None
        coeffs[index] = y
        residual -= checked_mul(q, y)
        trace.add_step(index, x, y, residual)

    last, q_last = members[-1]
    if spread:
        residual, last = _spread(residual, weights, coeffs, last, trace)
        q_last = weights[last]
    coeffs[last] = (coeffs[last] or 0) + residual // q_last
    trace.final_residual = residual - (residual // q_last) * q_last

    coefficients = tuple(0 if y is None else y for y in coeffs)
    return Solution(s, weights, coefficients, "chain"), trace
