"""Error-free transformations and compensated accumulation."""

import math
import random

from quarteig import dd


def test_two_sum_exactness():
    random.seed(7)
    for _ in range(200):
        a = random.uniform(-1, 1) * 10 ** random.randint(-10, 10)
        b = random.uniform(-1, 1) * 10 ** random.randint(-10, 10)
        s, e = dd.two_sum(a, b)
        # the pair reproduces the rounding error of the naive sum
        assert s == a + b
        assert s + e == s or abs(e) <= abs(s) * 2.3e-16


def test_two_prod_recovers_error():
    a, b = 1.0 + 2.0**-30, 1.0 - 2.0**-30
    p, e = dd.two_prod(a, b)
    assert p == a * b
    # exact product is 1 - 2^-60; the error term captures the difference
    assert p + e == 1.0 - 2.0**-60 or abs((p + e) - (1.0 - 2.0**-60)) < 1e-30


def test_dot2_cancellation():
    xs = [1.0, 1e16, 1.0, -1e16]
    ys = [1.0, 1.0, 1.0, 1.0]
    assert dd.dot2(xs, ys) == 2.0


def test_sum2_kahan_case():
    vals = [1e16, 1.0, -1e16, 1.0]
    assert dd.sum2(vals) == 2.0


def test_dot2_matches_fsum():
    random.seed(11)
    xs = [random.uniform(-1, 1) for _ in range(50)]
    ys = [random.uniform(-1, 1) for _ in range(50)]
    ref = math.fsum(x * y for x, y in zip(xs, ys))
    assert abs(dd.dot2(xs, ys) - ref) <= 4e-16 * max(1.0, abs(ref))
