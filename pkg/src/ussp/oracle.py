"""Exact ground-truth solvers.

Three methods that share no code path, so they can check each other:

* :func:`dp_solve` -- target-indexed dynamic program with a witness,
* :func:`build_residue_table` / :func:`residue_decide` -- shortest paths
  over residues modulo the smallest weight,
* :func:`representable_set` -- a numpy sieve over ``0..limit``.
"""

import heapq
from dataclasses import dataclass

import numpy as np

from .errors import CeilingExceeded, EmptyInput, Infeasible
from .model import Solution
from .numtheory import check_nat, divides, gcd_set

DEFAULT_CEILING = 10**7


def _check_weights(weights):
    weights = tuple(weights)
    if not weights:
        raise EmptyInput("weight list is empty")
    for w in weights:
        check_nat(w, "weight")
        if w < 1:
            raise ValueError("weights must be >= 1")
    return weights


_TABLE_CACHE = {}
_TABLE_CACHE_SIZE = 32


def _dp_table(weights, limit):
    """``pred[t]`` is the index of the last weight used to reach ``t``
    (-1 if unreachable); ``run[t]`` counts how many times in a row it
    repeats, so a witness unwinds in runs rather than single coins.

    Tables are cached per weight tuple and grown on demand.
    """
    cached = _TABLE_CACHE.pop(weights, None)
    if cached is None:
        pred, run = [len(weights)], [0]
    else:
        pred, run = cached
    start = len(pred)
    if limit >= start:
        order = sorted(range(len(weights)), key=lambda i: -weights[i])
        pred.extend([-1] * (limit + 1 - start))
        run.extend([0] * (limit + 1 - start))
        for t in range(start, limit + 1):
            for i in order:
                w = weights[i]
                if w > t:
                    continue
                p = pred[t - w]
                if p != -1:
                    pred[t] = i
                    run[t] = run[t - w] + 1 if p == i else 1
                    break
    if len(_TABLE_CACHE) >= _TABLE_CACHE_SIZE:
        _TABLE_CACHE.pop(next(iter(_TABLE_CACHE)))
    _TABLE_CACHE[weights] = (pred, run)
    return pred, run


def _table_limit(s, ceiling):
    # grow in powers of two so neighbouring targets reuse one table
    return min(max(1024, 1 << s.bit_length()), max(ceiling, s))


def dp_solve(s, weights, ceiling=DEFAULT_CEILING):
    check_nat(s, "s")
    weights = _check_weights(weights)
    if s > ceiling:
        raise CeilingExceeded(s, ceiling)
    g = gcd_set(weights)
    if not divides(g, s):
        raise Infeasible(f"gcd={g}")
    pred, run = _dp_table(weights, _table_limit(s, ceiling))
    if pred[s] == -1:
        raise Infeasible("exhaustive")
    coeffs = [0] * len(weights)
    t = s
    while t:
        i = pred[t]
        coeffs[i] += run[t]
        t -= run[t] * weights[i]
    return Solution(s, weights, tuple(coeffs), "dp")


@dataclass(frozen=True)
class ResidueTable:
    """Smallest representable value in each residue class mod ``base``.

    ``min_reachable[r]`` is ``None`` for classes no combination reaches.
    ``last_weight[r]`` is the weight on the final edge of the shortest path.
    """

    base: int
    weights: tuple
    min_reachable: tuple
    last_weight: tuple

    def witness(self, r):
        """Multiset of weights summing to ``min_reachable[r]``."""
        used = []
        value = self.min_reachable[r]
        while r:
            w = self.last_weight[r]
            used.append(w)
            value -= w
            r = value % self.base
        return used


def build_residue_table(weights):
    weights = _check_weights(weights)
    base = min(weights)
    dist = [None] * base
    last = [None] * base
    dist[0] = 0
    heap = [(0, 0)]
    while heap:
        d, r = heapq.heappop(heap)
        if d != dist[r]:
            continue
        for w in weights:
            nr = (r + w) % base
            nd = d + w
            if dist[nr] is None or nd < dist[nr]:
                dist[nr] = nd
                last[nr] = w
                heapq.heappush(heap, (nd, nr))
    return ResidueTable(base, weights, tuple(dist), tuple(last))


def residue_decide(table, s):
    e = table.min_reachable[s % table.base]
    return e is not None and e <= s


def representable_set(limit, weights, ceiling=DEFAULT_CEILING):
    """Boolean array ``a`` of length ``limit + 1`` with ``a[r]`` true iff
    ``r`` is a non-negative combination of ``weights``."""
    check_nat(limit, "limit")
    weights = _check_weights(weights)
    if limit > ceiling:
        raise CeilingExceeded(limit, ceiling)
    size = limit + 1
    reach = np.zeros(size, dtype=bool)
    reach[0] = True
    for w in sorted(set(weights)):
        if w > limit:
            break
        rows = -(-size // w)
        buf = np.zeros(rows * w, dtype=bool)
        buf[:size] = reach
        # unbounded use of w: OR-accumulate down each residue class
        buf = np.logical_or.accumulate(buf.reshape(rows, w), axis=0)
        reach = buf.ravel()[:size]
    return reach
