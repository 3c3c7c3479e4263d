"""Retry wrapper around the chain solver, plus its success-rate estimate.

Each attempt extracts a divisor subset from the working weights and runs the
chain solver on it. When the chain is too short for ``s``, the subset's first
(largest) member is deleted from the working set and the search repeats.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .chain_solver import solve_chain
from .errors import EmptyInput, Infeasible, NotFound, TooSmall
from .model import Solution, validate_weights
from .numtheory import check_nat, gcd_set, divides
from .subset_finder import find_divisor_subset


@dataclass(frozen=True)
class Attempt:
    members: tuple  # weights in selection order
    threshold_z: int
    outcome: str  # "solved" or "too_small"


@dataclass
class AttemptLog:
    attempts: list = field(default_factory=list)
    removed: list = field(default_factory=list)

    @property
    def subsets_found(self):
        return len(self.attempts)

    @property
    def z_values(self):
        return [a.threshold_z for a in self.attempts]


def solve_multi(s, weights):
    """Return ``(Solution, AttemptLog)`` or raise ``Infeasible``/``NotFound``.

    ``NotFound`` carries the log as ``exc.log``.
    """
    check_nat(s, "s")
    weights = validate_weights(weights)
    g = gcd_set(weights)
    if not divides(g, s):
        raise Infeasible(f"gcd={g}")

    log = AttemptLog()
    position = {w: i for i, w in enumerate(weights)}
    working = list(weights)
    for _ in range(len(weights)):
        if not working:
            break
        try:
            subset = find_divisor_subset(s, working)
        except Infeasible:
            break
        sub_weights = sorted(subset.weights)
        try:
            partial, _ = solve_chain(s, sub_weights)
        except TooSmall:
            log.attempts.append(Attempt(subset.weights, subset.threshold_z, "too_small"))
            dropped = subset.weights[0]
            working.remove(dropped)
            log.removed.append(dropped)
            continue
        log.attempts.append(Attempt(subset.weights, subset.threshold_z, "solved"))
        coeffs = [0] * len(weights)
        for w, y in zip(sub_weights, partial.coefficients):
            coeffs[position[w]] = y
        return Solution(s, weights, tuple(coeffs), "multi"), log

    exc = NotFound(f"no subset of {weights} reached s={s}")
    exc.log = log
    raise exc


def discover_thresholds(s, weights):
    """Thresholds of every subset the deletion loop can reach for ``s``.

    Unlike :func:`solve_multi` this does not stop at the first success; it
    is the subset count used by the success estimate.
    """
    working = list(validate_weights(weights))
    found = []
    while working:
        try:
            subset = find_divisor_subset(s, working)
        except Infeasible:
            break
        found.append(subset.threshold_z)
        working.remove(subset.weights[0])
    return found


@dataclass(frozen=True)
class ProbabilityEstimate:
    z_values: tuple
    p_fail: Fraction
    p_success: Fraction
    clamped: bool = False

    def display(self):
        return f"{float(self.p_success):.2f}"


def estimate_from_ratios(ratios, z_values=()):
    """``1 - prod(1 - r)`` over the given ratios, each clamped to [0, 1]."""
    ratios = [Fraction(r) for r in ratios]
    if not ratios:
        raise EmptyInput("need at least one ratio")
    p_fail = Fraction(1)
    clamped = False
    for r in ratios:
        factor = 1 - r
        if not 0 <= factor <= 1:
            factor = min(max(factor, Fraction(0)), Fraction(1))
            clamped = True
        p_fail *= factor
    return ProbabilityEstimate(tuple(z_values), p_fail, 1 - p_fail, clamped)


def estimate_success(z_values):
    """Success estimate with ratios ``z_1 / (2 z_i)``, ``z_1`` the first entry."""
    z_values = list(z_values)
    if not z_values:
        raise EmptyInput("need at least one threshold")
    if any(z < 1 for z in z_values):
        raise ValueError("thresholds must be >= 1")
    z1 = z_values[0]
    return estimate_from_ratios([Fraction(z1, 2 * z) for z in z_values], z_values)
