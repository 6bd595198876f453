"""Exact rational scalars.

All coefficient arithmetic in this package runs in exact rational numbers.
Two interchangeable backends are supported and one is selected at import
time: the compiled ``gmpy2.mpq`` type when gmpy2 is installed, and the
pure-Python ``fractions.Fraction`` otherwise.  Setting the environment
variable ``SPLITCURVES_PURE_RATIONALS=1`` forces the pure backend (used by
``benchmarks/bench_backends.py`` to compare the two).

Both types are kept in canonical reduced form by their constructors, and
their arithmetic semantics agree exactly, so every result of this package
is byte-identical under either backend.
"""

import math
import os
from fractions import Fraction

if os.environ.get("SPLITCURVES_PURE_RATIONALS") == "1":
    QQ = Fraction
    BACKEND = "fraction"
else:
    try:
        from gmpy2 import mpq as QQ  # type: ignore

        BACKEND = "gmpy2"
    except ImportError:  # pragma: no cover - environment dependent
        QQ = Fraction
        BACKEND = "fraction"

ZERO = QQ(0)
ONE = QQ(1)


def rat(value, den=None):
    """Coerce ``value`` (int, str like ``"3/4"``, or rational) to a scalar."""
    if den is not None:
        return QQ(value) / QQ(den)
    if isinstance(value, str):
        value = value.strip()
        if "/" in value:
            num, _, d = value.partition("/")
            return QQ(int(num)) / QQ(int(d))
        return QQ(int(value))
    return QQ(value)


def numer(q):
    return int(q.numerator)


def denom(q):
    return int(q.denominator)


def height(q):
    """Naive height max(|numerator|, denominator) of a rational."""
    return max(abs(numer(q)), denom(q))


def isqrt_exact(n):
    """Integer square root of ``n`` if ``n`` is a perfect square, else None."""
    if n < 0:
        return None
    r = math.isqrt(n)
    return r if r * r == n else None


def rat_sqrt(q):
    """Exact nonnegative square root of a rational, or None if not a square."""
    num = isqrt_exact(numer(q))
    if num is None:
        return None
    den = isqrt_exact(denom(q))
    if den is None:
        return None
    return QQ(num) / QQ(den)


def is_square(q):
    return rat_sqrt(q) is not None


def rat_str(q):
    """Canonical string form, ``p/q`` or ``p``."""
    n, d = numer(q), denom(q)
    return str(n) if d == 1 else "%d/%d" % (n, d)


def clear_denominators(values):
    """Scale rationals to coprime integers; returns list of ints.

    The common sign is preserved; an all-zero input maps to all zeros.
    """
    lcm = 1
    for v in values:
        lcm = lcm * denom(v) // math.gcd(lcm, denom(v))
    ints = [numer(v) * (lcm // denom(v)) for v in values]
    g = 0
    for i in ints:
        g = math.gcd(g, i)
    if g > 1:
        ints = [i // g for i in ints]
    return ints
