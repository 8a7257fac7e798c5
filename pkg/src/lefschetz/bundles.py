"""Splitting type of the syzygy bundle on a general line.

For an artinian ideal I = (F_1, ..., F_r) of forms of degree d, the kernel
bundle K (syzygies of the F_i) restricted to a general line L splits as a
direct sum of line bundles O_L(a_1) + ... + O_L(a_{r-1}) with every a_i <= 0
and sum a_i = -d.  The splitting type is recovered from exact kernel
dimensions on the line:

    k(t) = dim ker( O_L(t)^r -> O_L(t+d),  (g_i) |-> sum g_i F_i|_L )
         = sum_i max(0, a_i + t + 1)

so c_t = k(t) - k(t-1) counts the a_i >= -t and the multiset of a_i follows.
Genericity: kernel dimension is upper semicontinuous, so the minimum of each
k(t) over sampled lines is the generic value; the recovered profile must
satisfy the Chern checks (r-1 values, all <= 0, sum = -d) or an
AnalysisError is raised.

The figure of merit: a_{r-1} < 0 (equivalently k(0) = 0, the restricted
generators stay independent) is exactly WLP in degree d-1, which gives the
third, bundle-theoretic route to the Togliatti verdict.  ``verify_r4_theorem``
runs the full r = 4, n = 2 picture over a degree range.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import Form, monomial_basis
from .linalg import clear_denominators, exact_rank
from .sampling import DEFAULT_SEED, DEFAULT_TRIALS, random_line, rng_for
from .wlp import IdealSpec, fails_in_degree_dminus1, has_wlp, is_artinian


class AnalysisError(RuntimeError):
    """An internal consistency check failed (bad sampling or a real bug)."""


@dataclass(frozen=True)
class SplittingType:
    """Multiset of twists, ascending: values[0] <= ... <= values[r-2] <= 0."""

    d: int
    values: tuple

    @property
    def generic_splitting(self) -> tuple:
        return self.values

    @property
    def wlp_in_degree_dminus1(self) -> bool:
        """a_{r-1} < 0: no trivial summand, restricted generators independent."""
        return self.values[-1] < 0


def restrict_to_line(forms, point_p, point_q):
    """Restrict forms to the line s*p + t*q, as binary forms in (s, t).

    The points must be projectively distinct (some 2x2 minor nonzero).
    """
    point_p = tuple(Fraction(c) for c in point_p)
    point_q = tuple(Fraction(c) for c in point_q)
    if len(point_p) != len(point_q):
        raise ValueError("points of different lengths")
    n = len(point_p) - 1
    if not any(
        point_p[i] * point_q[j] - point_p[j] * point_q[i]
        for i in range(n + 1)
        for j in range(i + 1, n + 1)
    ):
        raise ValueError("points are coincident (projectively equal)")
    restricted = []
    for form in forms:
        if form.n != n:
            raise ValueError("form does not live on the ambient space of the points")
        degree = form.degree
        total = [Fraction(0)] * (degree + 1)  # coefficient of s^(d-k) t^k
        for exponent, coeff in form.terms.items():
            # product of (p_i s + q_i t)^e_i, expanded as a dense binary poly
            poly = [Fraction(coeff)]
            for p_i, q_i, e in zip(point_p, point_q, exponent):
                for _ in range(e):
                    nxt = [Fraction(0)] * (len(poly) + 1)
                    for k, c in enumerate(poly):
                        if c:
                            nxt[k] += c * p_i
                            nxt[k + 1] += c * q_i
                    poly = nxt
            for k, c in enumerate(poly):
                total[k] += c
        restricted.append(
            Form(1, degree, {(degree - k, k): c for k, c in enumerate(total) if c})
        )
    return restricted


def _kernel_dimension_on_line(restricted, t: int) -> int:
    """dim ker((g_i) -> sum g_i F_i) for g_i binary of degree t.  Exact."""
    d = restricted[0].degree
    r = len(restricted)
    target = monomial_basis(1, t + d)
    column = {e: k for k, e in enumerate(target)}
    rows = []
    for f in restricted:
        for g_exp in monomial_basis(1, t):
            row = [Fraction(0)] * len(target)
            for e, c in f.terms.items():
                row[column[(e[0] + g_exp[0], e[1] + g_exp[1])]] = c
            rows.append(clear_denominators(row))
    rank = exact_rank(rows)
    return r * (t + 1) - rank


def splitting_type(
    spec: IdealSpec, *, seed=DEFAULT_SEED, trials=DEFAULT_TRIALS
) -> SplittingType:
    """Generic splitting type of the syzygy bundle of an artinian ideal.

    Minimum of each kernel dimension k(t), t = 0..d, over sampled lines;
    Chern consistency (r-1 twists, all <= 0, sum = -d) is asserted on every
    call and failure raises AnalysisError.
    """
    if not is_artinian(spec):
        raise ValueError("ideal is not artinian")
    if spec.r < 2:
        raise ValueError("splitting needs at least two generators")
    rng = rng_for(seed, "splitting-line")
    profiles = []
    for _ in range(trials):
        p, q = random_line(spec.n, rng)
        restricted = restrict_to_line(spec.generators, p, q)
        if any(f.is_zero for f in restricted):
            # the line hit a generator's zero locus entirely; resample
            continue
        profiles.append(
            [_kernel_dimension_on_line(restricted, t) for t in range(spec.d + 1)]
        )
    if not profiles:
        raise AnalysisError("every sampled line was degenerate for the ideal")
    kernel_dims = [min(column) for column in zip(*profiles)]
    values = []
    previous_count = 0
    previous_k = 0
    for t in range(spec.d + 1):
        count_ge = kernel_dims[t] - previous_k  # number of a_i >= -t
        exactly = count_ge - previous_count
        if exactly < 0:
            raise AnalysisError(f"inconsistent kernel profile {kernel_dims}")
        values.extend([-t] * exactly)
        previous_count = count_ge
        previous_k = kernel_dims[t]
    values.sort()
    result = SplittingType(spec.d, tuple(values))
    if len(result.values) != spec.r - 1:
        raise AnalysisError(
            f"recovered {len(result.values)} twists, expected {spec.r - 1} "
            f"(kernel profile {kernel_dims})"
        )
    if sum(result.values) != -spec.d:
        raise AnalysisError(
            f"twist sum {sum(result.values)} != -d = {-spec.d} "
            f"(kernel profile {kernel_dims})"
        )
    if any(a > 0 for a in result.values):
        raise AnalysisError(f"positive twist in {result.values}")
    return result


def wlp_via_splitting(
    spec: IdealSpec, *, seed=DEFAULT_SEED, trials=DEFAULT_TRIALS
) -> bool:
    """WLP in degree d-1, decided on the bundle side (a_{r-1} < 0)."""
    return splitting_type(spec, seed=seed, trials=trials).wlp_in_degree_dminus1


def _pure_powers(n: int, d: int):
    return [
        tuple(d if j == i else 0 for j in range(n + 1)) for i in range(n + 1)
    ]


def verify_r4_theorem(
    d_min: int,
    d_max: int,
    *,
    seed=DEFAULT_SEED,
    trials=DEFAULT_TRIALS,
    monomial_samples: int = 50,
    random_samples: int = 5,
    random_full_scans: int = 3,
) -> dict:
    """Check the r = 4, n = 2 picture over d in [d_min, d_max].

    For every d: no sampled 4-generator artinian ideal (x^d, y^d, z^d, m)
    with m a mixed monomial, nor any sampled random artinian ideal, fails
    WLP in degree d-1.  If d is not a multiple of 3, sampled ideals have
    full WLP.  If d = 3*lambda with lambda odd, the witness
    (x^d, y^d, z^d, x^lambda y^lambda z^lambda) fails exactly in degree
    4*lambda - 2.  If d is a multiple of 6, sampled monomial ideals have
    full WLP.  Returns a JSON-ready report; report["ok"] is the verdict.
    """
    from .sampling import random_form

    report = {"d_min": d_min, "d_max": d_max, "seed": seed, "per_degree": []}
    violations = []
    for d in range(d_min, d_max + 1):
        entry = {
            "d": d,
            "monomial_samples": monomial_samples,
            "distinct_monomial_ideals": 0,
            "random_samples": random_samples,
            "degree_dminus1_failures": [],
            "full_wlp_failures": [],
            "witness": None,
        }
        pure = _pure_powers(2, d)
        mixed = [e for e in monomial_basis(2, d) if max(e) < d]
        rng = rng_for(seed, "r4-monomial", d)
        chosen = set()
        for _ in range(monomial_samples):
            chosen.add(mixed[rng.randrange(len(mixed))])
        entry["distinct_monomial_ideals"] = len(chosen)
        full_scan_everything = d % 3 != 0
        scan_monomials = full_scan_everything or d % 6 == 0
        for m in sorted(chosen):
            spec = IdealSpec.from_monomials(2, d, pure + [m])
            if fails_in_degree_dminus1(spec):
                entry["degree_dminus1_failures"].append(["monomial", list(m)])
            if scan_monomials:
                ok, failures = has_wlp(spec)
                if not ok:
                    entry["full_wlp_failures"].append(["monomial", list(m), failures])
        rng_random = rng_for(seed, "r4-random", d)
        for k in range(random_samples):
            while True:
                forms = [random_form(2, d, rng_random) for _ in range(4)]
                try:
                    spec = IdealSpec(2, d, forms)
                except ValueError:
                    continue
                if is_artinian(spec):
                    break
            if fails_in_degree_dminus1(spec, seed=seed, trials=trials):
                entry["degree_dminus1_failures"].append(["random", k])
            if full_scan_everything and k < random_full_scans:
                ok, failures = has_wlp(spec, seed=seed, trials=trials)
                if not ok:
                    entry["full_wlp_failures"].append(["random", k, failures])
        if d % 3 == 0 and (d // 3) % 2 == 1:
            lam = d // 3
            witness = IdealSpec.from_monomials(2, d, pure + [(lam, lam, lam)])
            ok, failures = has_wlp(witness)
            entry["witness"] = {
                "ideal": f"(x^{d}, y^{d}, z^{d}, x^{lam} y^{lam} z^{lam})",
                "failure_degrees": failures,
                "expected": [4 * lam - 2],
            }
            if failures != [4 * lam - 2]:
                violations.append(f"d={d}: witness failure degrees {failures}")
        if entry["degree_dminus1_failures"]:
            violations.append(f"d={d}: degree d-1 failures")
        if entry["full_wlp_failures"]:
            violations.append(f"d={d}: full WLP failures")
        report["per_degree"].append(entry)
    report["violations"] = violations
    report["ok"] = not violations
    return report
