"""Independent reference computations used by the tests.

Nothing here imports the code under test.
"""

import itertools
import math
from collections import Counter
from fractions import Fraction


def brute_force_monomials(m, n):
    """Monomial counts of (alpha+beta)^(m+n) (alpha beta)^(-n) by enumerating words."""
    out = Counter()
    for word in itertools.product((0, 1), repeat=m + n):
        i = word.count(0) - n
        j = word.count(1) - n
        out[(i, j)] += 1
    return dict(out)


def symdet_monomials(a, b):
    return {(u + b, a - u + b): 1 for u in range(a + 1)}


def expand_symdet_map(d):
    """Monomial counts of a {(a, b): mult} combination."""
    out = Counter()
    for (a, b), mult in d.items():
        for mono, c in symdet_monomials(a, b).items():
            out[mono] += mult * c
    return {k: v for k, v in out.items() if v}


def ballot(k, t):
    return math.comb(k, t) - (math.comb(k, t - 1) if t else 0)


def pole_k6_from_statement(n, r):
    """Order 5 iff omega^(3-n) = 1, otherwise 0."""
    return 5 if (3 - n) % r == 0 else 0


def a_table_printed(n, r):
    """The printed table of A(n, r) as (lo, hi)."""
    rows = {
        (0, 8): [({2, 4}, (14, 14)), ({5, 10, 20}, (0, 1))],
        (1, 7): [({3}, (14, 14)), ({5, 15}, (0, 1))],
        (2, 6): [({2}, (14, 14)), ({5, 10}, (0, 1))],
        (3, 5): [({5}, (0, 1))],
    }
    if n == 4:
        return (14, 14)
    for ns, cases in rows.items():
        if n in ns:
            for rs, val in cases:
                if r in rs:
                    return val
            return (0, 0)
    raise ValueError(n)


def cauchy_schwarz_grid(Q, steps=12):
    """Minimum over a positive weight grid of the general lemma ratio, in floats."""
    Q2 = Q * Q
    u = (1.0, Q2 - 1, Q2 * Q2 - 3 * Q2 + 1)
    best = math.inf
    vals = [0.1 * 1.6**i for i in range(steps)]
    for a in vals:
        for b in vals:
            for c in vals:
                num = a * a + b * b + c * c
                den = (a * u[0] + b * u[1] + c * u[2]) ** 2
                best = min(best, num / den)
    return best


def ks_exact(Q):
    Q = Fraction(Q)
    return 1 / (1 + (Q * Q - 1) ** 2 + (Q**4 - 3 * Q * Q + 1) ** 2)
