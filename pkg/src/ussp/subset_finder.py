"""Greedy extraction of a small weight subset whose gcd divides the target.

Weights are scanned from the largest down. A weight is kept only when
dropping it would leave the gcd of (kept weights + weights not yet scanned)
unable to divide ``s``; the scan stops as soon as the kept weights alone
have a gcd dividing ``s``.
"""

from dataclasses import dataclass
from math import gcd

from .errors import EmptyInput, Infeasible
from .model import validate_weights
from .numtheory import check_nat, divides
from .two_term import chain_threshold


@dataclass(frozen=True)
class DivisorSubset:
    """Selected ``(index, weight)`` pairs in selection order.

    Selection order runs from the largest weight down, so the last member is
    the smallest selected weight. The chain solver consumes members in this
    same order.
    """

    members: tuple
    threshold_z: int

    @property
    def k(self):
        return len(self.members)

    @property
    def weights(self):
        return tuple(w for _, w in self.members)

    @property
    def indices(self):
        return tuple(i for i, _ in self.members)


def find_divisor_subset(s, weights):
    check_nat(s, "s")
    if not weights:
        raise EmptyInput("weight list is empty")
    return _scan(s, validate_weights(weights))


def _scan(s, weights):
    n = len(weights)

    # prefix[i] = gcd(weights[:i]); gcd of an empty set is 0
    prefix = [0] * (n + 1)
    for i, w in enumerate(weights):
        prefix[i + 1] = gcd(prefix[i], w)
    if not divides(prefix[n], s):
        raise Infeasible(f"gcd={prefix[n]}")

    if s == 0:
        # every gcd divides 0; keep the largest weight so k >= 1
        members = ((n - 1, weights[-1]),)
        return DivisorSubset(members, 0)

    # s > 0 from here, so "d divides s" is "d and s % d == 0"
    selected = []
    g_sel = 0
    for i in range(n - 1, -1, -1):
        d = gcd(g_sel, prefix[i])
        if d == 0 or s % d:
            selected.append((i, weights[i]))
            g_sel = gcd(g_sel, weights[i])
        if g_sel and s % g_sel == 0:
            break
    members = tuple(selected)
    return DivisorSubset(members, chain_threshold([w for _, w in members]))
