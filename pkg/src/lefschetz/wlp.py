"""The Weak Lefschetz Property for artinian ideals generated in one degree.

An ideal I in R = k[x_0, ..., x_n] is presented by r linearly independent
forms of a single degree d.  R/I has the WLP when, for a general linear form
L, every multiplication map

    x L : (R/I)_j -> (R/I)_{j+1}

has maximal rank.  For MONOMIAL ideals it is enough to test the single form
L = x_0 + ... + x_n, which is what the monomial fast path does; general
ideals are tested against a few random linear forms and the best rank wins
(rank is lower semicontinuous, so the max over samples is the generic rank).

The degree d-1 is the interesting one: for r <= comb(n+d-1, d) the map in
degree d-1 fails maximal rank exactly when the restrictions of the
generators to a general hyperplane become linearly dependent, which is the
bridge to Laplace equations (module ``osculating``) and makes
``is_togliatti`` a finite, exact decision.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Optional

from .algebra import Form, monomial_basis, rank_of_span, substitute_variable
from .linalg import clear_denominators, exact_rank
from .sampling import (
    DEFAULT_SEED,
    DEFAULT_TRIALS,
    random_hyperplane_substitution,
    random_linear_form,
    rng_for,
)


class IdealSpec:
    """An ideal generated by independent forms of one degree.

    Attributes: n (projective dimension; n+1 variables), d (generator
    degree), generators (tuple of Forms), r (generator count), is_monomial
    (every generator a single monomial with coefficient 1).  Construction
    rejects generators that are not linearly independent, of mixed degree,
    or from different rings.  Graded piece dimensions are memoized.
    """

    __slots__ = ("n", "d", "generators", "is_monomial", "_exponents", "_dim_cache")

    def __init__(self, n: int, d: int, generators):
        generators = tuple(generators)
        if n < 0 or d < 1:
            raise ValueError("need n >= 0 and d >= 1")
        for g in generators:
            if not isinstance(g, Form):
                raise TypeError("generators must be Forms")
            if g.n != n or g.degree != d:
                raise ValueError("generators must be forms of degree d in n+1 variables")
            if g.is_zero:
                raise ValueError("zero generator")
        if rank_of_span(list(generators)) != len(generators):
            raise ValueError("generators are not linearly independent")
        self.n = n
        self.d = d
        self.generators = generators
        self.is_monomial = all(g.is_monomial for g in generators)
        self._exponents = (
            frozenset(next(iter(g.terms)) for g in generators)
            if self.is_monomial
            else None
        )
        self._dim_cache = {}

    @classmethod
    def from_monomials(cls, n: int, d: int, exponents) -> "IdealSpec":
        return cls(n, d, [Form.monomial(e) for e in exponents])

    @property
    def r(self) -> int:
        return len(self.generators)

    def monomial_exponents(self) -> frozenset:
        if self._exponents is None:
            raise ValueError("not a monomial ideal")
        return self._exponents

    def __repr__(self):
        kind = "monomial, " if self.is_monomial else ""
        return f"IdealSpec(n={self.n}, d={self.d}, {kind}r={self.r})"


@dataclass(frozen=True)
class WlpReport:
    """Outcome of one multiplication map (R/I)_j -> (R/I)_{j+1}."""

    degree: int
    dim_source: int
    dim_target: int
    rank: int
    lefschetz_form: Form

    @property
    def injective(self) -> bool:
        return self.rank == self.dim_source

    @property
    def surjective(self) -> bool:
        return self.rank == self.dim_target

    @property
    def maximal_rank(self) -> bool:
        return self.rank == min(self.dim_source, self.dim_target)


def _divisible(exponent, divisor) -> bool:
    return all(a >= b for a, b in zip(exponent, divisor))


def _monomial_ideal_piece(spec: IdealSpec, t: int):
    gens = spec.monomial_exponents()
    return [
        e
        for e in monomial_basis(spec.n, t)
        if any(_divisible(e, g) for g in gens)
    ]


def ideal_piece_dimension(spec: IdealSpec, t: int) -> int:
    """dim_k I_t, exact.  Monomial ideals count divisible monomials."""
    if t < 0:
        raise ValueError("degree must be non-negative")
    if t < spec.d or spec.r == 0:
        return 0
    cached = spec._dim_cache.get(t)
    if cached is not None:
        return cached
    if spec.is_monomial:
        dim = len(_monomial_ideal_piece(spec, t))
    else:
        multiples = [
            Form.monomial(e) * g
            for e in monomial_basis(spec.n, t - spec.d)
            for g in spec.generators
        ]
        dim = rank_of_span(multiples)
    spec._dim_cache[t] = dim
    return dim


def hilbert_function(spec: IdealSpec, t: int) -> int:
    """h_{R/I}(t) = dim R_t - dim I_t."""
    if t < 0:
        raise ValueError("degree must be non-negative")
    return comb(spec.n + t, t) - ideal_piece_dimension(spec, t)


def artinian_bound(spec: IdealSpec) -> int:
    """If h(t) > 0 for t = (n+1)(d-1) + 1 then R/I is not artinian."""
    return (spec.n + 1) * (spec.d - 1) + 1


def is_artinian(spec: IdealSpec) -> bool:
    """True iff h(t) = 0 for some (equivalently all large) t.

    Monomial shortcut: a monomial ideal generated in degree d contains a
    power of every variable iff every pure power x_i^d is a generator; by
    pigeonhole every monomial of degree (n+1)(d-1)+1 is then divisible by
    one of them.  General ideals scan t upward with an early exit (once the
    Hilbert function vanishes it stays zero).
    """
    if spec.r == 0:
        return False
    if spec.is_monomial:
        gens = spec.monomial_exponents()
        return all(
            tuple(spec.d if j == i else 0 for j in range(spec.n + 1)) in gens
            for i in range(spec.n + 1)
        )
    for t in range(spec.d, artinian_bound(spec) + 1):
        if hilbert_function(spec, t) == 0:
            return True
    return False


def h_vector(spec: IdealSpec):
    """(h(0), h(1), ..., h(s)) up to the socle degree.  Requires artinian."""
    if not is_artinian(spec):
        raise ValueError("ideal is not artinian")
    values = []
    t = 0
    while True:
        h = hilbert_function(spec, t)
        if h == 0:
            break
        values.append(h)
        t += 1
    return tuple(values)


def _sum_of_variables(n: int) -> Form:
    return Form(
        n, 1, {tuple(1 if j == i else 0 for j in range(n + 1)): 1 for i in range(n + 1)}
    )


def multiplication_rank(spec: IdealSpec, linear_form: Form, j: int) -> WlpReport:
    """Exact rank of x linear_form : (R/I)_j -> (R/I)_{j+1}.

    rank = dim(L*R_j + I_{j+1}) - dim I_{j+1}.  For monomial ideals the
    quotient basis in degree j+1 is the set of non-divisible monomials, so
    the ideal part is projected away instead of eliminated.
    """
    if linear_form.degree != 1 or linear_form.n != spec.n:
        raise ValueError("need a linear form in the same ring")
    if j < 0:
        raise ValueError("degree must be non-negative")
    hs = hilbert_function(spec, j)
    ht = hilbert_function(spec, j + 1)
    if hs == 0 or ht == 0:
        return WlpReport(j, hs, ht, 0, linear_form)
    if spec.is_monomial:
        gens = spec.monomial_exponents()
        target = [
            e
            for e in monomial_basis(spec.n, j + 1)
            if not any(_divisible(e, g) for g in gens)
        ]
        column = {e: k for k, e in enumerate(target)}
        coeffs = {
            i: c for i, c in enumerate(
                linear_form.terms.get(
                    tuple(1 if kk == i else 0 for kk in range(spec.n + 1)), 0
                )
                for i in range(spec.n + 1)
            )
            if c
        }
        rows = []
        for e in monomial_basis(spec.n, j):
            if any(_divisible(e, g) for g in gens):
                continue
            row = [0] * len(target)
            hit = False
            for i, c in coeffs.items():
                shifted = tuple(e[k] + (1 if k == i else 0) for k in range(spec.n + 1))
                k = column.get(shifted)
                if k is not None:
                    row[k] = c
                    hit = True
            if hit:
                rows.append(clear_denominators(row))
        rank = exact_rank(rows) if rows else 0
    else:
        span = [
            Form.monomial(e) * g
            for e in monomial_basis(spec.n, j + 1 - spec.d)
            for g in spec.generators
        ] if j + 1 >= spec.d else []
        span += [Form.monomial(e) * linear_form for e in monomial_basis(spec.n, j)]
        rank = rank_of_span(span) - ideal_piece_dimension(spec, j + 1)
    return WlpReport(j, hs, ht, rank, linear_form)


def certified_lefschetz_report(
    spec: IdealSpec,
    j: int,
    *,
    seed=DEFAULT_SEED,
    trials=DEFAULT_TRIALS,
    force_generic: bool = False,
) -> WlpReport:
    """Best WlpReport over the sampling policy for one degree.

    Monomial ideals use L = x_0 + ... + x_n (sufficient for them); general
    ideals take the best of ``trials`` random linear forms, stopping early
    once maximal rank is certified.  ``force_generic`` samples random forms
    even for monomial ideals (cross-validation of the fast path).
    """
    if spec.is_monomial and not force_generic:
        return multiplication_rank(spec, _sum_of_variables(spec.n), j)
    rng = rng_for(seed, "wlp-linear-form", j)
    best: Optional[WlpReport] = None
    for _ in range(trials):
        report = multiplication_rank(spec, random_linear_form(spec.n, rng), j)
        if best is None or report.rank > best.rank:
            best = report
        if best.maximal_rank:
            break
    return best


def has_wlp(spec: IdealSpec, *, seed=DEFAULT_SEED, trials=DEFAULT_TRIALS):
    """(True, []) if R/I has the WLP, else (False, failing degrees).

    Requires an artinian ideal; scans every degree up to the socle.
    """
    if not is_artinian(spec):
        raise ValueError("ideal is not artinian")
    socle = len(h_vector(spec)) - 1
    failures = []
    for j in range(socle + 1):
        report = certified_lefschetz_report(spec, j, seed=seed, trials=trials)
        if not report.maximal_rank:
            failures.append(j)
    return (not failures, failures)


def generator_bound(n: int, d: int) -> int:
    """comb(n+d-1, n-1): the generator-count bound for the degree-(d-1) theory.

    Equals comb(n+d-1, d) (same binomial coefficient), the bound under which
    restriction to a general hyperplane detects the degree-(d-1) failure.
    """
    return comb(n + d - 1, n - 1)


def restricted_generators(spec: IdealSpec, *, seed=DEFAULT_SEED, trials=DEFAULT_TRIALS):
    """Restrictions of the generators to one general hyperplane (per trial).

    Yields lists of forms in n variables.  Monomial ideals use the single
    hyperplane x_0 + ... + x_n = 0; general ideals yield ``trials`` samples.
    """
    if spec.is_monomial:
        replacement = Form(
            spec.n,
            1,
            {
                tuple(1 if j == i else 0 for j in range(spec.n + 1)): -1
                for i in range(spec.n)
            },
        )
        yield [substitute_variable(g, spec.n, replacement) for g in spec.generators]
        return
    rng = rng_for(seed, "hyperplane")
    for _ in range(trials):
        i, replacement = random_hyperplane_substitution(spec.n, rng)
        yield [substitute_variable(g, i, replacement) for g in spec.generators]


def fails_in_degree_dminus1(
    spec: IdealSpec, *, seed=DEFAULT_SEED, trials=DEFAULT_TRIALS
) -> bool:
    """Whether x L : (R/I)_{d-1} -> (R/I)_d drops rank for general L.

    Decided by restriction: for r <= comb(n+d-1, d) the map fails maximal
    rank iff the generators become linearly dependent on a general
    hyperplane.  Raises ValueError when r exceeds the bound.
    """
    if spec.r > generator_bound(spec.n, spec.d):
        raise ValueError(
            f"r={spec.r} exceeds comb(n+d-1, d)={generator_bound(spec.n, spec.d)}; "
            "the hyperplane criterion does not apply"
        )
    if spec.r == 0:
        return False
    best = 0
    for restricted in restricted_generators(spec, seed=seed, trials=trials):
        best = max(best, rank_of_span(restricted))
        if best == spec.r:
            return False
    return best < spec.r


def is_togliatti(spec: IdealSpec, *, seed=DEFAULT_SEED, trials=DEFAULT_TRIALS) -> bool:
    """Artinian, r <= comb(n+d-1, n-1), and fails WLP in degree d-1."""
    if spec.r > generator_bound(spec.n, spec.d):
        return False
    if not is_artinian(spec):
        return False
    return fails_in_degree_dminus1(spec, seed=seed, trials=trials)


def trivial_type_a(spec: IdealSpec):
    """Monomial Q of degree d-1 with Q*x_i in I for every i, or None.

    Such a Q makes the failure of the WLP trivial (the apolar system lies on
    a degenerate projection).  Monomial ideals only.
    """
    if not spec.is_monomial:
        raise ValueError("trivial type A search needs a monomial ideal")
    gens = spec.monomial_exponents()
    for q in monomial_basis(spec.n, spec.d - 1):
        if all(
            tuple(q[k] + (1 if k == i else 0) for k in range(spec.n + 1)) in gens
            for i in range(spec.n + 1)
        ):
            return q
    return None


@dataclass(frozen=True)
class TypeBResult:
    """Trivial type B probe for monomial cubic ideals.

    ``sufficient``: more than comb(n+1, 2) generators divisible by some x_i
    (a count that forces the tangent-cone intersection below).
    ``full``: dim(I_3 intersect x_i*M*R_1) >= 1 for a general linear M, for
    some i, certified over the sampling policy.  ``witness`` is that i.
    """

    sufficient: bool
    full: bool
    witness: Optional[int]


def trivial_type_b_test(
    spec: IdealSpec, *, seed=DEFAULT_SEED, trials=DEFAULT_TRIALS
) -> TypeBResult:
    if not spec.is_monomial or spec.d != 3:
        raise ValueError("trivial type B probe needs a monomial cubic ideal")
    gens = spec.monomial_exponents()
    gen_forms = [Form.monomial(e) for e in gens]
    sufficient = False
    full = False
    witness = None
    for i in range(spec.n + 1):
        divisible = sum(1 for e in gens if e[i] >= 1)
        if divisible > comb(spec.n + 1, 2):
            sufficient = True
        rng = rng_for(seed, "type-b", i)
        x_i = Form.variable(spec.n, i)
        full_here = True
        for _ in range(trials):
            m = random_linear_form(spec.n, rng)
            tangent = [x_i * m * Form.variable(spec.n, j) for j in range(spec.n + 1)]
            # dim(A) + dim(B) - dim(A + B), generators independent so dim I_3 = r
            joint = rank_of_span(gen_forms + tangent)
            intersection = spec.r + rank_of_span(tangent) - joint
            if intersection < 1:
                full_here = False
                break
        if full_here:
            full = True
            if witness is None:
                witness = i
    return TypeBResult(sufficient, full, witness)
