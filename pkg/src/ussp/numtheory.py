"""Integer primitives with 128-bit overflow checking.

Values are plain Python ints, but anything handed to or produced by the
solvers must fit the unsigned range ``0 .. NAT_MAX``; :func:`check_nat`
raises ``OverflowError`` instead of letting a value grow past it.
"""

import math
from functools import reduce

from .errors import EmptyInput, NoInverse

NAT_MAX = (1 << 127) - 1


def check_nat(value, name="value"):
    if type(value) is int and 0 <= value <= NAT_MAX:
        return value
    if isinstance(value, bool) or not isinstance(value, int):
        raise TypeError(f"{name} must be an int, got {type(value).__name__}")
    if value < 0:
        raise ValueError(f"{name} must be non-negative, got {value}")
    if value > NAT_MAX:
        raise OverflowError(f"{name} exceeds 2**127-1")
    return value


def checked_add(a, b):
    return check_nat(a + b, "sum")


def checked_sub(a, b):
    if b > a:
        raise OverflowError(f"{a} - {b} underflows")
    return a - b


def checked_mul(a, b):
    return check_nat(a * b, "product")


def mulmod(a, b, m):
    # double-width intermediate, result always < m
    return (a % m) * (b % m) % m


def gcd(a, b):
    return math.gcd(a, b)


def gcd_set(values):
    values = list(values)
    if not values:
        raise EmptyInput("gcd_set needs at least one value")
    return reduce(math.gcd, values)


def divides(d, n):
    """True when ``d | n``; zero divides only zero."""
    if d == 0:
        return n == 0
    return n % d == 0


def ext_gcd(a, b):
    """Return ``(g, x, y)`` with ``a*x + b*y == g == gcd(a, b)``."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    return old_r, old_x, old_y


def mod_inverse(a, m):
    """Inverse of ``a`` modulo ``m`` in ``[0, m)``.

    For ``m == 1`` every residue is 0, so 0 is returned.
    """
    if m < 1:
        raise ValueError("modulus must be >= 1")
    if m == 1:
        return 0
    g, x, _ = ext_gcd(a % m, m)
    if g != 1:
        raise NoInverse(f"{a} has no inverse modulo {m} (gcd {g})")
    return x % m
