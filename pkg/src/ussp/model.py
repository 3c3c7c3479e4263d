"""Instances, solutions and their text formats.

Instance file::

    # comments start with '#'
    120
    6 10 15

Solution output is ``SOLVED <method>`` followed by the coefficient line,
``INFEASIBLE <certificate>``, or ``NOTFOUND``.
"""

from dataclasses import dataclass
from operator import mul

from .errors import ParseError, ValidationError
from .numtheory import NAT_MAX, check_nat

METHODS = ("chain", "multi", "dp")


def validate_weights(weights):
    """Return ``weights`` as a tuple after checking it is a strictly
    increasing list of positive Nats."""
    weights = tuple(weights)
    if not weights:
        raise ValidationError("weight list is empty")
    prev = 0
    for w in weights:
        if type(w) is not int or w > NAT_MAX:
            check_nat(w, "weight")
        if w <= prev:
            if w < 1:
                raise ValidationError("weights must be >= 1")
            kind = "duplicate" if w == prev else "non-increasing"
            raise ValidationError(f"{kind} weights {prev}, {w}")
        prev = w
    return weights


@dataclass(frozen=True)
class Instance:
    target: int
    weights: tuple

    def __post_init__(self):
        check_nat(self.target, "target")
        object.__setattr__(self, "weights", validate_weights(self.weights))

    @property
    def n(self):
        return len(self.weights)


@dataclass(frozen=True)
class Solution:
    """Coefficients aligned with ``weights``; checked on construction."""

    target: int
    weights: tuple
    coefficients: tuple
    method: str = "chain"

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(self.weights))
        object.__setattr__(self, "coefficients", tuple(self.coefficients))
        if self.method not in METHODS:
            raise ValueError(f"unknown method tag {self.method!r}")
        if len(self.coefficients) != len(self.weights):
            raise ValueError("coefficient vector has the wrong length")
        if self.coefficients and min(self.coefficients) < 0:
            raise ValueError(f"negative coefficient in {self.coefficients}")
        total = sum(map(mul, self.coefficients, self.weights))
        if total != self.target:
            raise ValueError(
                f"coefficients sum to {total}, expected {self.target}"
            )


def _decode(text):
    if isinstance(text, (bytes, bytearray)):
        try:
            return text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"not UTF-8: {exc}", 1) from None
    return text


def _content_lines(text):
    for lineno, raw in enumerate(_decode(text).splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        yield lineno, raw


def _parse_ints(lineno, raw):
    values = []
    col = 0
    for token in raw.split():
        col = raw.index(token, col) + 1
        if not (token.isascii() and token.isdigit()):
            raise ParseError(f"expected a decimal integer, got {token!r}", lineno, col)
        values.append(int(token))
        col += len(token) - 1
    return values


def parse_instance(text):
    lines = list(_content_lines(text))
    if len(lines) != 2:
        where = lines[2][0] if len(lines) > 2 else (lines[-1][0] if lines else 1)
        raise ParseError(f"expected 2 content lines, found {len(lines)}", where)
    (l1, raw1), (l2, raw2) = lines
    head = _parse_ints(l1, raw1)
    if len(head) != 1:
        raise ParseError("first line must hold the single target s", l1)
    weights = _parse_ints(l2, raw2)
    return Instance(head[0], tuple(weights))


def format_instance(instance):
    return f"{instance.target}\n{' '.join(map(str, instance.weights))}\n"


def format_solution(solution):
    coeffs = " ".join(map(str, solution.coefficients))
    return f"SOLVED {solution.method}\n{coeffs}\n"


def parse_solution(text, instance):
    lines = [raw for _, raw in _content_lines(text)]
    if not lines or not lines[0].startswith("SOLVED "):
        raise ParseError("expected a SOLVED header", 1)
    method = lines[0].split(None, 1)[1].strip()
    if len(lines) != 2:
        raise ParseError("expected one coefficient line", 2)
    coeffs = _parse_ints(2, lines[1])
    try:
        return Solution(instance.target, instance.weights, tuple(coeffs), method)
    except ValueError as exc:
        raise ValidationError(str(exc)) from None
