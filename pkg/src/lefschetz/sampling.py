"""Seeded sampling of generic objects.

Genericity is certified by maximizing (or minimizing, for kernel dimensions)
over a small number of independent samples; rank is lower semicontinuous, so
the max over samples of a rank is the generic rank unless every sample is
degenerate.  Defaults: 3 samples, integer coefficients uniform in [-999, 999]
(points for osculating computations use [1, 999] to stay off the coordinate
hyperplanes).  Every operation derives its own generator from
``(seed, operation, qualifier)`` so results do not depend on call order.
"""

from __future__ import annotations

import random

from .algebra import Form

COEFF_BOUND = 999
DEFAULT_TRIALS = 3
DEFAULT_SEED = 0


def rng_for(seed, *tags) -> random.Random:
    """Deterministic generator keyed by seed and operation tags."""
    return random.Random("|".join(str(t) for t in (seed, *tags)))


def random_linear_form(n: int, rng: random.Random) -> Form:
    """Linear form with coefficients in [-999, 999], not identically zero."""
    while True:
        coeffs = [rng.randint(-COEFF_BOUND, COEFF_BOUND) for _ in range(n + 1)]
        if any(coeffs):
            break
    return Form(
        n,
        1,
        {
            tuple(1 if j == i else 0 for j in range(n + 1)): c
            for i, c in enumerate(coeffs)
            if c
        },
    )


def random_form(n: int, degree: int, rng: random.Random, bound=COEFF_BOUND) -> Form:
    """Dense form of the given degree, nonzero, coefficients in [-bound, bound]."""
    from .algebra import monomial_basis

    while True:
        terms = {
            e: rng.randint(-bound, bound) for e in monomial_basis(n, degree)
        }
        form = Form(n, degree, terms)
        if not form.is_zero:
            return form


def random_chart_point(n: int, rng: random.Random):
    """Integer point of the affine chart x_0 = 1: n coordinates in [1, 999]."""
    return tuple(rng.randint(1, COEFF_BOUND) for _ in range(n))


def random_line(n: int, rng: random.Random):
    """Two projectively distinct points with coordinates in [-999, 999]."""
    while True:
        p = tuple(rng.randint(-COEFF_BOUND, COEFF_BOUND) for _ in range(n + 1))
        q = tuple(rng.randint(-COEFF_BOUND, COEFF_BOUND) for _ in range(n + 1))
        if not any(p) or not any(q):
            continue
        # projectively distinct: some 2x2 minor is nonzero
        if any(
            p[i] * q[j] - p[j] * q[i]
            for i in range(n + 1)
            for j in range(i + 1, n + 1)
        ):
            return p, q


def random_hyperplane_substitution(n: int, rng: random.Random):
    """A random hyperplane sum(a_i x_i) = 0, returned as (i, g) with x_i := g.

    The eliminated variable is x_n (resampled until its coefficient is
    nonzero), so g = -sum_{i<n} (a_i/a_n) x_i is a linear form avoiding x_n.
    """
    from fractions import Fraction

    while True:
        coeffs = [rng.randint(-COEFF_BOUND, COEFF_BOUND) for _ in range(n + 1)]
        if coeffs[n]:
            break
    terms = {}
    for i in range(n):
        if coeffs[i]:
            exponent = tuple(1 if j == i else 0 for j in range(n + 1))
            terms[exponent] = Fraction(-coeffs[i], coeffs[n])
    return n, Form(n, 1, terms)
