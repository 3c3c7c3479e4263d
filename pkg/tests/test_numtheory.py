import math

import pytest
from hypothesis import given, strategies as st

from ussp.errors import EmptyInput, NoInverse
from ussp.numtheory import (
    NAT_MAX,
    check_nat,
    checked_add,
    checked_mul,
    ext_gcd,
    gcd,
    gcd_set,
    mod_inverse,
)

import brute


@pytest.mark.parametrize("a,b,expected", [(12, 18, 6), (7, 0, 7), (15, 10, 5), (0, 0, 0)])
def test_gcd_examples(a, b, expected):
    assert gcd(a, b) == expected


@pytest.mark.parametrize(
    "values,expected", [([6, 10, 15], 1), ([11, 13, 15, 19, 21], 1), ([4, 6], 2)]
)
def test_gcd_set_examples(values, expected):
    assert gcd_set(values) == expected


def test_gcd_set_empty():
    with pytest.raises(EmptyInput):
        gcd_set([])


def test_mod_inverse_examples():
    assert brute.inverse_by_scan(3, 5) == 2
    assert mod_inverse(3, 5) == 2
    assert mod_inverse(5, 1) == 0
    with pytest.raises(NoInverse):
        mod_inverse(4, 6)


def test_gcd_divisibility_exhaustive():
    for a in range(201):
        for b in range(201):
            g = gcd(a, b)
            if g:
                assert a % g == 0 and b % g == 0
            else:
                assert a == b == 0
            for d in range(1, 30):
                if a % d == 0 and b % d == 0:
                    assert g % d == 0


def test_mod_inverse_matches_scan():
    for m in range(1, 60):
        for a in range(0, 2 * m):
            expected = brute.inverse_by_scan(a, m)
            if expected is None:
                with pytest.raises(NoInverse):
                    mod_inverse(a, m)
            else:
                assert mod_inverse(a, m) == expected


@given(st.integers(0, NAT_MAX), st.integers(0, NAT_MAX))
def test_ext_gcd_bezout(a, b):
    g, x, y = ext_gcd(a, b)
    assert g == math.gcd(a, b)
    assert a * x + b * y == g


@given(st.integers(0, NAT_MAX), st.integers(2, NAT_MAX))
def test_mod_inverse_property(a, m):
    if math.gcd(a, m) != 1:
        with pytest.raises(NoInverse):
            mod_inverse(a, m)
    else:
        assert a * mod_inverse(a, m) % m == 1


@given(st.lists(st.integers(0, 10**30), min_size=1, max_size=8), st.randoms())
def test_gcd_set_order_independent(values, rnd):
    shuffled = list(values)
    rnd.shuffle(shuffled)
    assert gcd_set(values) == gcd_set(shuffled)


def test_overflow_is_signalled():
    assert check_nat(NAT_MAX) == NAT_MAX
    with pytest.raises(OverflowError):
        check_nat(NAT_MAX + 1)
    with pytest.raises(OverflowError):
        checked_add(NAT_MAX, 1)
    with pytest.raises(OverflowError):
        checked_mul(1 << 64, 1 << 63)
    with pytest.raises(ValueError):
        check_nat(-1)
    with pytest.raises(TypeError):
        check_nat(True)
