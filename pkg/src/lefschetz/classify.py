"""Exhaustive classification of monomial Togliatti systems of cubics.

Every monomial artinian ideal generated in degree 3 contains the pure cubes,
so candidates are (x_0^3, ..., x_n^3) plus j mixed cubic monomials with
1 <= j <= comb(n+2, n-1) - (n+1), the generator bound for the degree-2
failure theory.  Candidates are deduplicated by canonical form under the
coordinate permutations, every canonical representative is tested with
``is_togliatti``, and each hit is fully certified: apolar system, Laplace
count re-verified, lattice quadric, polytope verdict (smooth / quasi-smooth
/ singular), toric degree, triviality flags, orbit size.

``build_named_example`` constructs the standard families:

* ``truncated-simplex``: cubes + all squarefree triples (blow-up of the
  n+1 fundamental points; the punctured-hexagon systems).
* ``second-example``: cubes + x_0^2 x_1 + x_0 x_1^2 + the triples not
  containing both x_0 and x_1 (blow-up of n-1 points and a line).
* ``ilardi-counterexample``: (x_0, ..., x_{n-2})^3 + x_{n-1}^3 + x_n^3 +
  (x_i x_{n-1} x_n)_{i <= n-2}; for n = 3 this is the degree-18 smooth case.
* ``partition``: given a partition of the variables with parts of at most
  n-1 elements, the monomials supported inside one part plus the triples
  meeting three distinct parts (blow-up along the part subspaces, then
  projection from the full hexagon centres).  Specializes to all of the
  above.
"""

from __future__ import annotations

import itertools
import json
from collections import Counter
from dataclasses import dataclass
from math import comb
from typing import Optional

from .algebra import Form, monomial_basis
from .apolarity import apolar_complement
from .bundles import AnalysisError
from .osculating import LinearSystem, laplace_count, perkinson_quadric
from .parser import format_form, parse_polynomial
from .polytope import (
    normalized_volume,
    polytope_from_points,
    smoothness_report,
)
from .sampling import DEFAULT_SEED, DEFAULT_TRIALS
from .wlp import IdealSpec, is_togliatti, trivial_type_a, trivial_type_b_test

RECORD_SCHEMA = 1

VERDICT_SMOOTH = "smooth"
VERDICT_QUASI_SMOOTH = "quasi-smooth"
VERDICT_SINGULAR = "singular"
VERDICT_DEGENERATE = "degenerate"


def canonical_form(exponents):
    """Lex-minimal sorted exponent tuple over all coordinate permutations.

    Idempotent and constant on permutation orbits; the canonical key used
    for deduplication everywhere in this module.
    """
    exponents = [tuple(e) for e in exponents]
    if not exponents:
        return ()
    width = len(exponents[0])
    best = None
    for sigma in itertools.permutations(range(width)):
        image = tuple(
            sorted(tuple(e[sigma[i]] for i in range(width)) for e in exponents)
        )
        if best is None or image < best:
            best = image
    return best


def permutation_images(exponents):
    """All distinct images of the set under coordinate permutations."""
    exponents = [tuple(e) for e in exponents]
    if not exponents:
        return {()}
    width = len(exponents[0])
    images = set()
    for sigma in itertools.permutations(range(width)):
        images.add(
            tuple(sorted(tuple(e[sigma[i]] for i in range(width)) for e in exponents))
        )
    return images


def _variable_names(n: int):
    return [f"x{i}" for i in range(n + 1)]


@dataclass(frozen=True)
class ClassificationRecord:
    """A fully certified monomial Togliatti system of cubics."""

    n: int
    generators: tuple  # canonical, ascending
    extra: tuple  # the mixed monomials among the generators
    r: int
    apolar_exponents: tuple
    togliatti: bool
    trivial_a: Optional[tuple]  # witness monomial of degree 2, or None
    trivial_b_sufficient: bool
    trivial_b_full: bool
    trivial_b_witness: Optional[int]
    verdict: str
    edge_rule_fired: bool
    toric_degree: Optional[int]
    quadric: Optional[Form]
    laplace_delta: int
    orbit_size: int

    @property
    def j(self) -> int:
        return len(self.extra)

    def ideal(self) -> IdealSpec:
        return IdealSpec.from_monomials(self.n, 3, self.generators)

    def to_json_dict(self) -> dict:
        names = _variable_names(self.n)
        return {
            "schema": RECORD_SCHEMA,
            "n": self.n,
            "j": self.j,
            "r": self.r,
            "generators": [list(e) for e in self.generators],
            "extra": [list(e) for e in self.extra],
            "apolar": [list(e) for e in self.apolar_exponents],
            "togliatti": self.togliatti,
            "trivial_a": list(self.trivial_a) if self.trivial_a else None,
            "trivial_b": {
                "sufficient": self.trivial_b_sufficient,
                "full": self.trivial_b_full,
                "witness": self.trivial_b_witness,
            },
            "verdict": self.verdict,
            "edge_rule_fired": self.edge_rule_fired,
            "toric_degree": self.toric_degree,
            "quadric": format_form(self.quadric, names) if self.quadric else None,
            "laplace_delta": self.laplace_delta,
            "orbit_size": self.orbit_size,
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "ClassificationRecord":
        if data.get("schema") != RECORD_SCHEMA:
            raise ValueError(f"unsupported record schema {data.get('schema')!r}")
        n = data["n"]
        quadric = (
            parse_polynomial(data["quadric"], _variable_names(n), 2)
            if data["quadric"]
            else None
        )
        return cls(
            n=n,
            generators=tuple(tuple(e) for e in data["generators"]),
            extra=tuple(tuple(e) for e in data["extra"]),
            r=data["r"],
            apolar_exponents=tuple(tuple(e) for e in data["apolar"]),
            togliatti=data["togliatti"],
            trivial_a=tuple(data["trivial_a"]) if data["trivial_a"] else None,
            trivial_b_sufficient=data["trivial_b"]["sufficient"],
            trivial_b_full=data["trivial_b"]["full"],
            trivial_b_witness=data["trivial_b"]["witness"],
            verdict=data["verdict"],
            edge_rule_fired=data["edge_rule_fired"],
            toric_degree=data["toric_degree"],
            quadric=quadric,
            laplace_delta=data["laplace_delta"],
            orbit_size=data["orbit_size"],
        )


def _pure_cubes(n: int):
    return tuple(
        tuple(3 if j == i else 0 for j in range(n + 1)) for i in range(n + 1)
    )


def certify_candidate(
    n: int,
    generators,
    orbit_size: int,
    *,
    seed=DEFAULT_SEED,
    trials=DEFAULT_TRIALS,
) -> Optional[ClassificationRecord]:
    """Full certification of one canonical candidate; None if not Togliatti."""
    generators = tuple(sorted(tuple(e) for e in generators))
    spec = IdealSpec.from_monomials(n, 3, generators)
    if not is_togliatti(spec, seed=seed, trials=trials):
        return None
    apolar = apolar_complement(spec)
    apolar_exponents = apolar.exponents()
    system = LinearSystem.from_apolar(apolar)
    laplace = laplace_count(system, 2, seed=seed, trials=trials)
    if laplace.delta < 1:
        raise AnalysisError(
            f"Togliatti candidate {generators} shows no order-2 Laplace equation"
        )
    quadric = perkinson_quadric(apolar_exponents)
    if quadric is None:
        raise AnalysisError(
            f"Togliatti candidate {generators} has no lattice quadric certificate"
        )
    polytope = polytope_from_points([e[:-1] for e in apolar_exponents])
    if polytope.is_full_dimensional:
        report = smoothness_report(polytope)
        if not report.simple:
            verdict = VERDICT_SINGULAR
        elif report.smooth:
            verdict = VERDICT_SMOOTH
        else:
            verdict = VERDICT_QUASI_SMOOTH
        edge_rule_fired = report.edge_rule_fired
        degree = normalized_volume(polytope)
    else:
        verdict = VERDICT_DEGENERATE
        edge_rule_fired = False
        degree = None
    mixed = tuple(e for e in generators if max(e) < 3)
    type_b = trivial_type_b_test(spec, seed=seed, trials=trials)
    return ClassificationRecord(
        n=n,
        generators=generators,
        extra=mixed,
        r=spec.r,
        apolar_exponents=apolar_exponents,
        togliatti=True,
        trivial_a=trivial_type_a(spec),
        trivial_b_sufficient=type_b.sufficient,
        trivial_b_full=type_b.full,
        trivial_b_witness=type_b.witness,
        verdict=verdict,
        edge_rule_fired=edge_rule_fired,
        toric_degree=degree,
        quadric=quadric,
        laplace_delta=laplace.delta,
        orbit_size=orbit_size,
    )


def _certify_star(args):
    n, generators, orbit_size, seed, trials = args
    return certify_candidate(n, generators, orbit_size, seed=seed, trials=trials)


@dataclass(frozen=True)
class ClassificationRun:
    """Result of an enumeration: records plus raw-count bookkeeping."""

    n: int
    j_max: int
    subsets_seen: int
    candidates_tested: int
    hit_counts: dict  # canonical key -> number of subsets in its orbit
    records: tuple

    def __iter__(self):
        return iter(self.records)

    @property
    def raw_togliatti_hits(self) -> int:
        keys = {record.generators for record in self.records}
        return sum(count for key, count in self.hit_counts.items() if key in keys)


def enumerate_cubic_togliatti(
    n: int,
    *,
    seed=DEFAULT_SEED,
    trials=DEFAULT_TRIALS,
    max_extra: Optional[int] = None,
    workers: int = 1,
    cache: Optional[dict] = None,
    progress=None,
) -> ClassificationRun:
    """All canonical monomial Togliatti systems of cubics on P^n.

    ``max_extra`` caps the number j of mixed generators (required sanity for
    n >= 4, where the full range is astronomically large).  ``cache`` maps
    canonical generator keys to ClassificationRecords (or None for certified
    non-Togliatti candidates) and is consulted before recomputing; it is
    updated in place.  ``workers`` > 1 certifies candidates in parallel
    processes; output order is canonical either way.
    """
    if n < 2:
        raise ValueError("classification needs n >= 2")
    j_limit = comb(n + 2, n - 1) - (n + 1)
    if max_extra is not None:
        j_limit = min(j_limit, max_extra)
    elif n >= 4:
        raise ValueError(
            "for n >= 4 pass max_extra: the full enumeration is out of reach"
        )
    cubes = _pure_cubes(n)
    mixed = tuple(e for e in monomial_basis(n, 3) if max(e) < 3)
    counter: Counter = Counter()
    candidates = []
    subsets_seen = 0
    for j in range(1, j_limit + 1):
        for subset in itertools.combinations(mixed, j):
            subsets_seen += 1
            full = tuple(sorted(cubes + subset))
            key = canonical_form(full)
            counter[key] += 1
            if key == full:
                candidates.append(key)
    candidates.sort(key=lambda key: (len(key), key))
    jobs = []
    results = {}
    for key in candidates:
        if cache is not None and key in cache:
            results[key] = cache[key]
        else:
            jobs.append((n, key, counter[key], seed, trials))
    if workers > 1 and jobs:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=workers) as pool:
            for args, record in zip(jobs, pool.map(_certify_star, jobs, chunksize=8)):
                results[args[1]] = record
                if progress is not None:
                    progress(args[1], record)
    else:
        for args in jobs:
            results[args[1]] = _certify_star(args)
            if progress is not None:
                progress(args[1], results[args[1]])
    if cache is not None:
        cache.update(results)
    records = tuple(
        results[key] for key in candidates if results.get(key) is not None
    )
    return ClassificationRun(
        n=n,
        j_max=j_limit,
        subsets_seen=subsets_seen,
        candidates_tested=len(candidates),
        hit_counts=dict(counter),
        records=records,
    )


def cache_line(key, record: Optional[ClassificationRecord]) -> str:
    """One cache-file line for a certified candidate (JSON, no newline).

    Hits serialize the full record; certified non-Togliatti candidates get
    a negative stub so a resumed run can skip them too.
    """
    if record is not None:
        payload = record.to_json_dict()
    else:
        payload = {
            "schema": RECORD_SCHEMA,
            "togliatti": False,
            "generators": [list(e) for e in key],
        }
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def load_cache(path) -> dict:
    """Read a cache file back into the dict ``enumerate_cubic_togliatti`` takes."""
    cache: dict = {}
    with open(path, "r", encoding="utf-8") as handle:
        for line in handle:
            line = line.strip()
            if not line:
                continue
            data = json.loads(line)
            key = tuple(sorted(tuple(e) for e in data["generators"]))
            if data["togliatti"]:
                cache[key] = ClassificationRecord.from_json_dict(data)
            else:
                if data.get("schema") != RECORD_SCHEMA:
                    raise ValueError(
                        f"unsupported record schema {data.get('schema')!r}"
                    )
                cache[key] = None
    return cache


# The four n = 3 classification cases, by their apolar systems (the
# inverse-system monomials); the ideals are the complements.
_CASE_SYSTEMS = {
    1: "a2b a2c a2d ab2 ac2 ad2 b2c b2d bc2 bd2 c2d cd2",
    2: "abc abd a2c a2d ac2 ad2 b2c b2d bc2 bd2 c2d cd2",
    3: "abc abd acd bcd a2c ac2 a2d ad2 b2c bc2 b2d bd2",
    4: "acd bcd a2c a2d ac2 ad2 b2c b2d bc2 bd2 c2d cd2",
}

_LETTERS = "abcd"


def _monomial_word_to_exponent(word: str, n: int = 3):
    exponent = [0] * (n + 1)
    i = 0
    while i < len(word):
        idx = _LETTERS.index(word[i])
        if i + 1 < len(word) and word[i + 1].isdigit():
            exponent[idx] += int(word[i + 1])
            i += 2
        else:
            exponent[idx] += 1
            i += 1
    return tuple(exponent)


def classification_case_system(case: int):
    """Apolar-system exponents of classification case 1..4 (n = 3)."""
    return tuple(
        sorted(_monomial_word_to_exponent(w) for w in _CASE_SYSTEMS[case].split())
    )


def classification_case_ideal(case: int) -> IdealSpec:
    """The ideal of classification case 1..4 (complement of the system)."""
    system = set(classification_case_system(case))
    gens = [e for e in monomial_basis(3, 3) if e not in system]
    return IdealSpec.from_monomials(3, 3, gens)


def four_prime_projections(*, seed=DEFAULT_SEED, trials=DEFAULT_TRIALS):
    """The stated (4') projections, each certified rather than asserted.

    Removing system monomials projects the variety; the removed monomials
    join the ideal.  Only non-empty removal subsets are enumerated; removals
    pushing r past the generator bound comb(5, 2) = 10 are reported as out
    of range and not certified.  Returns a list of dicts with label,
    removed monomials, r, in_range, and (when in range) the certified
    record.
    """
    removals = []
    for k in (1, 2):
        for subset in itertools.combinations(("abc", "abd"), k):
            removals.append((2, subset))
    for k in (1, 2, 3, 4):
        for subset in itertools.combinations(("abc", "abd", "acd", "bcd"), k):
            removals.append((3, subset))
    for k in (1, 2):
        for subset in itertools.combinations(("acd", "bcd"), k):
            removals.append((4, subset))
    bound = comb(5, 2)
    results = []
    for case, subset in removals:
        removed = [_monomial_word_to_exponent(w) for w in subset]
        base = classification_case_ideal(case)
        gens = tuple(sorted(base.monomial_exponents() | set(removed)))
        entry = {
            "label": f"case-{case}-minus-{'-'.join(subset)}",
            "case": case,
            "removed": subset,
            "r": len(gens),
            "in_range": len(gens) <= bound,
            "canonical": canonical_form(gens),
            "record": None,
        }
        if entry["in_range"]:
            entry["record"] = certify_candidate(
                3, entry["canonical"], len(permutation_images(gens)),
                seed=seed, trials=trials,
            )
        results.append(entry)
    return results


def _partition_generators(n: int, parts):
    seen = set()
    cleaned = []
    for part in parts:
        part = tuple(sorted(int(i) for i in part))
        if not part:
            raise ValueError("empty part")
        for i in part:
            if not 0 <= i <= n:
                raise ValueError(f"variable index {i} out of range")
            if i in seen:
                raise ValueError(f"variable {i} appears in two parts")
            seen.add(i)
        if len(part) > n - 1:
            raise ValueError(
                f"part {part} has {len(part)} points; at most n-1 = {n - 1} allowed"
            )
        cleaned.append(part)
    if seen != set(range(n + 1)):
        raise ValueError("parts must cover all variables")
    part_of = {}
    for k, part in enumerate(cleaned):
        for i in part:
            part_of[i] = k
    gens = []
    for e in monomial_basis(n, 3):
        support = [i for i, c in enumerate(e) if c]
        touched = {part_of[i] for i in support}
        if len(touched) == 1:
            gens.append(e)  # supported inside one part (blown-up subspace)
        elif len(support) == 3 and len(touched) == 3 and max(e) == 1:
            gens.append(e)  # full hexagon centre: three distinct parts
    return tuple(sorted(gens))


def build_named_example(name: str, n: int, partition=None) -> IdealSpec:
    """Construct a named family member; see the module docstring."""
    if n < 2:
        raise ValueError("need n >= 2")
    if name == "truncated-simplex":
        parts = [(i,) for i in range(n + 1)]
        return IdealSpec.from_monomials(n, 3, _partition_generators(n, parts))
    if name == "second-example":
        gens = set(_pure_cubes(n))
        gens.add(tuple(2 if i == 0 else (1 if i == 1 else 0) for i in range(n + 1)))
        gens.add(tuple(1 if i == 0 else (2 if i == 1 else 0) for i in range(n + 1)))
        for triple in itertools.combinations(range(n + 1), 3):
            if triple[0] == 0 and triple[1] == 1:
                continue
            gens.add(tuple(1 if i in triple else 0 for i in range(n + 1)))
        return IdealSpec.from_monomials(n, 3, sorted(gens))
    if name == "ilardi-counterexample":
        if n < 3:
            raise ValueError("the counterexample family needs n >= 3")
        parts = [tuple(range(n - 1)), (n - 1,), (n,)]
        return IdealSpec.from_monomials(n, 3, _partition_generators(n, parts))
    if name == "partition":
        if partition is None:
            raise ValueError("partition construction needs the partition")
        return IdealSpec.from_monomials(n, 3, _partition_generators(n, partition))
    raise ValueError(f"unknown example name {name!r}")
