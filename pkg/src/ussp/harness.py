"""Experiment driver: instance generation, solve dispatch, coverage scans.

Random instances come from numpy's PCG64 generator, so a seed fixes every
draw regardless of platform.
"""

import csv
import io
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .chain_solver import solve_chain
from .errors import Infeasible, NotFound, TooSmall, ValidationError
from .model import Instance, validate_weights
from .multi_solver import (
    discover_thresholds,
    estimate_from_ratios,
    estimate_success,
    solve_multi,
)
from .numtheory import NAT_MAX, check_nat, gcd_set
from .oracle import DEFAULT_CEILING, dp_solve, representable_set
from .subset_finder import find_divisor_subset
from .two_term import count_representable_formula, frobenius_two

EXAMPLE1_WEIGHTS = (11, 13, 15, 19, 21)
EXAMPLE1_RANGE = (11, 119)
# ratios printed next to each factor of the worked estimate (119/238, ...)
EXAMPLE1_RATIOS = (Fraction(1, 2), Fraction(35, 100), Fraction(28, 100), Fraction(16, 100))
EXAMPLE1_DENOMINATORS = (238, 334, 418, 718)
EXAMPLE1_CLAIM = Fraction(85, 100)


# -- random instances -------------------------------------------------------

def make_rng(seed):
    return np.random.Generator(np.random.PCG64(seed))


def rand_below(rng, n):
    """Uniform integer in ``[0, n)`` for arbitrarily large ``n``."""
    if n <= 0:
        raise ValueError("empty range")
    if n <= 1 << 62:
        return int(rng.integers(0, n))
    bits = (n - 1).bit_length()
    nbytes = -(-bits // 8)
    while True:
        value = int.from_bytes(rng.bytes(nbytes), "little") >> (nbytes * 8 - bits)
        if value < n:
            return value


def rand_between(rng, lo, hi):
    return lo + rand_below(rng, hi - lo + 1)


def random_weights(rng, n, max_weight):
    """``n`` distinct weights from ``[2, max_weight]``, sorted."""
    if n < 1 or max_weight < n + 1:
        raise ValidationError(
            f"cannot draw {n} distinct weights from [2, {max_weight}]"
        )
    span = max_weight - 1
    if span <= 1 << 20:
        picks = rng.choice(span, size=n, replace=False) + 2
        return tuple(sorted(int(p) for p in picks))
    chosen = set()
    while len(chosen) < n:
        chosen.add(rand_between(rng, 2, max_weight))
    return tuple(sorted(chosen))


def _threshold(s, weights):
    return find_divisor_subset(s, weights).threshold_z


def draw_target(rng, weights, strategy, tries=64):
    """Draw ``s`` for ``weights`` per ``strategy``; ``None`` if it fails.

    ``above``: ``z < s <= 2z + 1000``; ``near-above``: ``z < s <= z + 1000``;
    ``below``: ``p1 <= s <= z``; ``("uniform", lo, hi)``: any ``s`` in range.
    ``z`` is the threshold of the divisor subset found for ``s`` itself, so the
    draw is repeated until ``s`` lands inside its own window. Threshold
    strategies only produce ``s`` divisible by ``gcd(weights)``.
    """
    if isinstance(strategy, tuple):
        _, lo, hi = strategy
        if lo > hi:
            raise ValidationError(f"empty uniform range [{lo}, {hi}]")
        return rand_between(rng, lo, hi)
    g = gcd_set(weights)
    if strategy in ("above", "near-above"):
        z = _threshold(weights[-1], weights)
        for _ in range(tries):
            extra = z + 1000 if strategy == "above" else 1000
            lo, hi = z // g + 1, (z + extra) // g
            s = g * rand_between(rng, lo, hi)
            z_s = _threshold(s, weights)
            extra_s = z_s + 1000 if strategy == "above" else 1000
            if z_s < s <= z_s + extra_s and s <= NAT_MAX:
                return s
            z = z_s
        return None
    if strategy == "below":
        lo = -(-weights[0] // g)
        z = _threshold(weights[-1], weights)
        for _ in range(tries):
            s = g * rand_between(rng, lo, max(z // g, lo))
            z_s = _threshold(s, weights)
            if weights[0] <= s <= z_s:
                return s
            z = z_s
        return None
    raise ValueError(f"unknown strategy {strategy!r}")


def parse_strategy(text):
    if text in ("above", "near-above", "below"):
        return text
    if text.startswith("uniform:"):
        try:
            _, lo, hi = text.split(":")
            return ("uniform", int(lo), int(hi))
        except ValueError:
            pass
    raise ValidationError(
        f"bad strategy {text!r}; use above, near-above, below or uniform:LO:HI"
    )


def generate_instance(n, max_weight, strategy, seed, attempts=100):
    rng = make_rng(seed)
    if isinstance(strategy, str) and strategy.startswith("uniform:"):
        strategy = parse_strategy(strategy)
    for _ in range(attempts):
        weights = random_weights(rng, n, max_weight)
        s = draw_target(rng, weights, strategy)
        if s is not None:
            return Instance(s, weights)
    raise ValidationError(f"no instance found for strategy {strategy!r}")


# -- dispatch ---------------------------------------------------------------

def run_solve(instance, method="auto", spread=False, ceiling=DEFAULT_CEILING):
    """Solve ``instance``; raise ``Infeasible`` or ``NotFound`` otherwise.

    ``auto`` tries the chain solver, then the retry solver, then the DP
    oracle (which may raise ``CeilingExceeded``).
    """
    s, weights = instance.target, instance.weights
    if method == "chain":
        try:
            return solve_chain(s, weights, spread=spread)[0]
        except TooSmall as exc:
            raise NotFound(str(exc)) from None
    if method == "multi":
        return solve_multi(s, weights)[0]
    if method == "dp":
        return dp_solve(s, weights, ceiling)
    if method != "auto":
        raise ValueError(f"unknown method {method!r}")
    try:
        return solve_chain(s, weights, spread=spread)[0]
    except TooSmall:
        pass
    try:
        return solve_multi(s, weights)[0]
    except NotFound:
        pass
    return dp_solve(s, weights, ceiling)


def above_threshold_experiment(seed, cases, max_n=6, max_weight=30):
    """Run the chain solver on seeded instances with ``z < s <= z + 1000``.

    Every returned solution is substitution-checked by ``Solution`` itself;
    the result counts how often the chain reports ``TooSmall`` anyway.
    """
    rng = make_rng(seed)
    counts = {"cases": 0, "solved": 0, "too_small": 0}
    failures = []
    while counts["cases"] < cases:
        n = int(rng.integers(2, max_n + 1))
        weights = random_weights(rng, n, max_weight)
        s = draw_target(rng, weights, "near-above")
        if s is None:
            continue
        counts["cases"] += 1
        try:
            solve_chain(s, weights)
            counts["solved"] += 1
        except TooSmall:
            counts["too_small"] += 1
            failures.append(Instance(s, weights))
    return counts, failures


# -- coverage ---------------------------------------------------------------

@dataclass(frozen=True)
class CoverageRow:
    s: int
    oracle_feasible: bool
    alg3: str
    alg4: str

    @property
    def agree(self):
        return (self.alg4 == "solved") == self.oracle_feasible


@dataclass
class CoverageReport:
    weights: tuple
    s_min: int
    s_max: int
    rows: list
    z_values: list
    estimate: object = None  # ProbabilityEstimate or None
    extras: dict = field(default_factory=dict)
    # Example 1 only: estimates from the published ratio list
    paper_estimate: object = None
    paper_estimate_exact: object = None

    def _fraction(self, pred):
        return Fraction(sum(1 for r in self.rows if pred(r)), len(self.rows))

    @property
    def oracle_fraction(self):
        return self._fraction(lambda r: r.oracle_feasible)

    @property
    def alg3_fraction(self):
        return self._fraction(lambda r: r.alg3 == "solved")

    @property
    def alg4_fraction(self):
        return self._fraction(lambda r: r.alg4 == "solved")

    def summary(self):
        lines = [
            ("weights", " ".join(map(str, self.weights))),
            ("s_range", f"{self.s_min}..{self.s_max}"),
            ("oracle_fraction", _fmt(self.oracle_fraction)),
            ("alg3_fraction", _fmt(self.alg3_fraction)),
            ("alg4_fraction", _fmt(self.alg4_fraction)),
            ("z_values", " ".join(map(str, self.z_values)) or "-"),
        ]
        if self.estimate is not None:
            lines.append(("estimated_p_success", _fmt(self.estimate.p_success)))
            lines.append(("estimate_clamped", str(self.estimate.clamped).lower()))
        lines.extend(self.extras.items())
        return lines

    def to_csv(self):
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["s", "oracle_feasible", "alg3", "alg4", "agree"])
        for r in self.rows:
            writer.writerow([r.s, int(r.oracle_feasible), r.alg3, r.alg4, int(r.agree)])
        for key, value in self.summary():
            out.write(f"# {key}={value}\n")
        return out.getvalue()


def _fmt(frac):
    return f"{float(frac):.4f} ({frac.numerator}/{frac.denominator})"


def _outcome(fn, s, weights):
    try:
        fn(s, weights)
    except Infeasible:
        return "infeasible"
    except TooSmall:
        return "too_small"
    except NotFound:
        return "not_found"
    return "solved"


def _coverage_rows(weights, s_values, reachable):
    return [
        CoverageRow(
            s,
            bool(reachable[s]),
            _outcome(solve_chain, s, weights),
            _outcome(solve_multi, s, weights),
        )
        for s in s_values
    ]


def _chunks(seq, parts):
    size = -(-len(seq) // parts)
    return [seq[i:i + size] for i in range(0, len(seq), size)]


def run_coverage(weights, s_min, s_max, jobs=1, ceiling=DEFAULT_CEILING):
    weights = validate_weights(weights)
    check_nat(s_min, "s_min")
    if s_min > s_max:
        raise ValidationError(f"s_min {s_min} > s_max {s_max}")
    reachable = representable_set(s_max, weights, ceiling)
    s_values = list(range(s_min, s_max + 1))
    if jobs > 1 and len(s_values) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [
                pool.submit(_coverage_rows, weights, chunk, reachable)
                for chunk in _chunks(s_values, jobs)
            ]
            rows = [row for f in futures for row in f.result()]
    else:
        rows = _coverage_rows(weights, s_values, reachable)

    z_values = []
    estimate = None
    extras = {}
    found = discover_thresholds(s_min, weights)
    z_values = [z for z in found if z >= 1]
    if len(z_values) < len(found):
        extras["zero_thresholds_dropped"] = str(len(found) - len(z_values))
    if z_values:
        estimate = estimate_success(z_values)
    return CoverageReport(weights, s_min, s_max, rows, z_values, estimate, extras)


def run_example1(jobs=1):
    report = run_coverage(EXAMPLE1_WEIGHTS, *EXAMPLE1_RANGE, jobs=jobs)
    printed = estimate_from_ratios(EXAMPLE1_RATIOS)
    z_paper = [d // 2 for d in EXAMPLE1_DENOMINATORS]
    exact = estimate_success(z_paper)
    report.extras.update(
        {
            "paper_claim_alg4": _fmt(EXAMPLE1_CLAIM),
            "paper_estimate_printed_ratios": f"{printed.display()} ({float(printed.p_success):.4f})",
            "paper_estimate_exact_denominators": f"{exact.display()} ({float(exact.p_success):.4f})",
            "alg4_minus_claim_pp": f"{100 * float(report.alg4_fraction - EXAMPLE1_CLAIM):+.1f}",
        }
    )
    report.paper_estimate = printed
    report.paper_estimate_exact = exact
    return report


# -- formula audit ----------------------------------------------------------

def audit_formula(max_weight=15):
    """Compare the closed-form representable count with the exact count.

    Returns rows ``(p1, p2, s, formula, exact)`` for every coprime pair
    ``1 < p1 < p2 <= max_weight`` and every ``0 <= s <= p1*p2 - p1 - p2``.
    """
    rows = []
    for p2 in range(3, max_weight + 1):
        for p1 in range(2, p2):
            if np.gcd(p1, p2) != 1:
                continue
            frob = frobenius_two(p1, p2)
            cumulative = np.cumsum(representable_set(frob, [p1, p2]))
            for s in range(frob + 1):
                rows.append((p1, p2, s, count_representable_formula(s, p1, p2), int(cumulative[s])))
    return rows


def audit_csv(rows):
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["p1", "p2", "s", "formula", "exact", "diff"])
    mismatches = 0
    for p1, p2, s, formula, exact in rows:
        writer.writerow([p1, p2, s, formula, exact, formula - exact])
        mismatches += formula != exact
    out.write(f"# rows={len(rows)}\n# mismatches={mismatches}\n")
    return out.getvalue()


# -- bench ------------------------------------------------------------------

BENCH_SIZES = (10**2, 10**3, 10**4, 10**5)


def run_bench(seed, cases, sizes=BENCH_SIZES, max_weight=1 << 60):
    """Time the chain solver on large random instances above threshold."""
    rng = make_rng(seed)
    results = []
    for n in sizes:
        elapsed = 0.0
        outcomes = {"solved": 0, "too_small": 0, "overflow": 0, "skipped": 0}
        for _ in range(cases):
            weights = random_weights(rng, n, max_weight)
            try:
                s = draw_target(rng, weights, "above", tries=8)
            except OverflowError:
                s = None
            if s is None:
                outcomes["skipped"] += 1
                continue
            start = time.perf_counter()
            try:
                solve_chain(s, weights)
                outcomes["solved"] += 1
            except TooSmall:
                outcomes["too_small"] += 1
            except OverflowError:
                outcomes["overflow"] += 1
            elapsed += time.perf_counter() - start
        timed = cases - outcomes["skipped"]
        results.append(
            {"n": n, "cases": cases, "mean_seconds": elapsed / timed if timed else float("nan"), **outcomes}
        )
    return results


def bench_csv(results):
    out = io.StringIO()
    fields = ["n", "cases", "mean_seconds", "solved", "too_small", "overflow", "skipped"]
    writer = csv.DictWriter(out, fieldnames=fields, lineterminator="\n")
    writer.writeheader()
    for row in results:
        writer.writerow({**row, "mean_seconds": f"{row['mean_seconds']:.6f}"})
    return out.getvalue()
