"""Command-line interface.

Commands take an ideal document (JSON file with ``variables``, ``degree``,
``generators`` and optional ``seed`` / ``trials``) or inline ``--gen``
expressions, and report either human-readable text or canonical JSON
(``--json``; sorted keys, compact separators, so identical inputs and seeds
give byte-identical bytes).

Exit status: 0 success, 1 analysis failure (non-artinian input where
artinian is required, certification disagreement, verification violations),
2 usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .apolarity import apolar_complement
from .bundles import AnalysisError, splitting_type, verify_r4_theorem
from .classify import (
    build_named_example,
    cache_line,
    classification_case_ideal,
    enumerate_cubic_togliatti,
    load_cache,
)
from .osculating import LinearSystem, laplace_count, osculating_dimension
from .parser import ParseError, format_form, parse_polynomial
from .polytope import (
    DegeneratePolytopeError,
    normalized_volume,
    polytope_from_points,
    polytope_json,
    smoothness_report,
)
from .sampling import DEFAULT_SEED, DEFAULT_TRIALS
from .wlp import (
    IdealSpec,
    certified_lefschetz_report,
    fails_in_degree_dminus1,
    generator_bound,
    h_vector,
    is_artinian,
)


class UsageError(Exception):
    """Bad document or flags; maps to exit status 2."""


def _dumps(payload) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


class Report:
    """Collects human lines and a JSON payload; emits one of them."""

    def __init__(self, command: str):
        self.lines = []
        self.payload = {"command": command}

    def line(self, text: str):
        self.lines.append(text)

    def render(self, as_json: bool) -> str:
        if as_json:
            return _dumps(self.payload) + "\n"
        return "\n".join(self.lines) + "\n"


def _emit(text: str, out_path):
    if out_path:
        with open(out_path, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


class Document:
    """A parsed ideal document: the spec plus its display names and policy."""

    def __init__(self, spec: IdealSpec, names, seed, trials):
        self.spec = spec
        self.names = names
        self.seed = seed
        self.trials = trials

    def format(self, form) -> str:
        return format_form(form, self.names)


def _load_document(args) -> Document:
    data = None
    if getattr(args, "file", None):
        try:
            with open(args.file, "r", encoding="utf-8") as handle:
                data = json.load(handle)
        except OSError as exc:
            raise UsageError(f"cannot read {args.file}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise UsageError(f"{args.file} is not valid JSON: {exc}") from exc
    elif getattr(args, "gen", None):
        if not args.variables:
            raise UsageError("--gen needs --variables")
        if args.degree is None:
            raise UsageError("--gen needs --degree")
        data = {
            "variables": [v.strip() for v in args.variables.split(",")],
            "degree": args.degree,
            "generators": args.gen,
        }
    else:
        raise UsageError("give an ideal document file or --gen expressions")
    try:
        names = list(data["variables"])
        degree = int(data["degree"])
        expressions = list(data["generators"])
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"document needs variables/degree/generators: {exc}") from exc
    if len(set(names)) != len(names):
        raise UsageError("duplicate variable names")
    try:
        forms = [parse_polynomial(src, names, degree) for src in expressions]
        spec = IdealSpec(len(names) - 1, degree, forms)
    except (ParseError, ValueError) as exc:
        raise UsageError(str(exc)) from exc
    seed = args.seed
    if seed is None:
        seed = data.get("seed")
    if seed is None:
        seed = int(os.environ.get("LEFSCHETZ_SEED", DEFAULT_SEED))
    trials = args.trials
    if trials is None:
        trials = data.get("trials")
    if trials is None:
        trials = DEFAULT_TRIALS
    return Document(spec, names, int(seed), int(trials))


def _document_system(doc: Document, use_generators: bool) -> LinearSystem:
    if use_generators:
        return LinearSystem(doc.spec.n, doc.spec.d, tuple(doc.spec.generators))
    return LinearSystem.from_apolar(apolar_complement(doc.spec))


def _cmd_wlp(args) -> int:
    doc = _load_document(args)
    if not is_artinian(doc.spec):
        raise AnalysisError("ideal is not artinian")
    hv = h_vector(doc.spec)
    report = Report("wlp")
    report.payload.update(
        {
            "n": doc.spec.n,
            "d": doc.spec.d,
            "r": doc.spec.r,
            "seed": doc.seed,
            "h_vector": list(hv),
            "reports": [],
        }
    )
    report.line("h-vector: " + " ".join(str(h) for h in hv))
    failures = []
    for j in range(len(hv)):
        step = certified_lefschetz_report(
            doc.spec, j, seed=doc.seed, trials=doc.trials,
            force_generic=args.generic_l,
        )
        verdict = "maximal" if step.maximal_rank else "NOT maximal"
        if not step.maximal_rank:
            failures.append(j)
        report.line(
            f"degree {j}: {step.dim_source} -> {step.dim_target}, "
            f"rank {step.rank}, {verdict}"
        )
        report.payload["reports"].append(
            {
                "degree": j,
                "dim_source": step.dim_source,
                "dim_target": step.dim_target,
                "rank": step.rank,
                "maximal": step.maximal_rank,
                "linear_form": doc.format(step.lefschetz_form),
            }
        )
    report.payload["wlp"] = not failures
    report.payload["failures"] = failures
    if failures:
        report.line("WLP fails in degrees: " + " ".join(str(j) for j in failures))
    else:
        report.line("WLP holds")
    _emit(report.render(args.json), args.out)
    return 0


def _cmd_togliatti(args) -> int:
    doc = _load_document(args)
    spec = doc.spec
    if not is_artinian(spec):
        raise AnalysisError("ideal is not artinian")
    bound = generator_bound(spec.n, spec.d)
    if spec.r > bound:
        raise AnalysisError(
            f"r = {spec.r} exceeds the generator bound {bound}; "
            "the degree-(d-1) theory does not apply"
        )
    step = certified_lefschetz_report(
        spec, spec.d - 1, seed=doc.seed, trials=doc.trials
    )
    fails_wlp = not step.maximal_rank
    dependent = fails_in_degree_dminus1(spec, seed=doc.seed, trials=doc.trials)
    system = _document_system(doc, use_generators=False)
    laplace = laplace_count(system, spec.d - 1, seed=doc.seed, trials=doc.trials)
    has_laplace = laplace.delta >= 1
    if not (fails_wlp == dependent == has_laplace):
        raise AnalysisError(
            "equivalence check failed: "
            f"wlp-failure={fails_wlp} hyperplane-dependence={dependent} "
            f"laplace={has_laplace} (delta={laplace.delta})"
        )
    report = Report("togliatti")
    report.payload.update(
        {
            "n": spec.n,
            "d": spec.d,
            "r": spec.r,
            "bound": bound,
            "seed": doc.seed,
            "fails_dminus1": fails_wlp,
            "hyperplane_dependent": dependent,
            "laplace_order": spec.d - 1,
            "laplace_delta": laplace.delta,
            "togliatti": fails_wlp,
        }
    )
    yn = {True: "yes", False: "no"}
    report.line(f"r = {spec.r}, generator bound = {bound}")
    report.line(f"multiplication drops rank in degree {spec.d - 1}: {yn[fails_wlp]}")
    report.line(f"generators dependent on a general hyperplane: {yn[dependent]}")
    report.line(f"Laplace equations of order {spec.d - 1}: {laplace.delta}")
    report.line(f"Togliatti system: {yn[fails_wlp]}")
    _emit(report.render(args.json), args.out)
    return 0


def _cmd_osculate(args) -> int:
    doc = _load_document(args)
    system = _document_system(doc, args.system)
    osc = osculating_dimension(system, args.order, seed=doc.seed, trials=doc.trials)
    laplace = laplace_count(system, args.order, seed=doc.seed, trials=doc.trials)
    report = Report("osculate")
    report.payload.update(
        {
            "order": osc.order,
            "members": len(system.members),
            "projective_target": system.projective_target,
            "expected_dim": osc.expected_dim,
            "actual_dim": osc.actual_dim,
            "delta": osc.delta,
            "degenerate": laplace.degenerate,
            "seed": doc.seed,
        }
    )
    report.line(f"system of {len(system.members)} members in P^{system.projective_target}")
    report.line(
        f"osculating space of order {osc.order}: expected dim {osc.expected_dim}, "
        f"actual dim {osc.actual_dim}"
    )
    report.line(f"Laplace equations of order {osc.order}: {osc.delta}")
    if laplace.degenerate:
        report.line("target too small for the expected dimension (degenerate count)")
    _emit(report.render(args.json), args.out)
    return 0


def _cmd_apolar(args) -> int:
    doc = _load_document(args)
    system = apolar_complement(doc.spec)
    report = Report("apolar")
    basis = [doc.format(f) for f in system.basis]
    report.payload.update(
        {
            "n": system.n,
            "d": system.d,
            "dimension": system.dimension,
            "basis": basis,
        }
    )
    report.line(f"inverse system dimension {system.dimension} in degree {system.d}")
    for text in basis:
        report.line("  " + text)
    _emit(report.render(args.json), args.out)
    return 0


def _cmd_polytope(args) -> int:
    doc = _load_document(args)
    system = _document_system(doc, args.system)
    if not system.is_monomial():
        raise AnalysisError("polytope analysis needs a monomial system")
    points = [e[:-1] for e in system.exponents()]
    polytope = polytope_from_points(points)
    report = Report("polytope")
    if not polytope.is_full_dimensional:
        report.payload.update(
            {
                "points": [list(p) for p in polytope.points],
                "affine_dim": polytope.affine_dim,
                "verdict": "degenerate",
            }
        )
        report.line(
            f"degenerate: affine dimension {polytope.affine_dim} < {polytope.dim}"
        )
        _emit(report.render(args.json), args.out)
        return 0
    smooth = smoothness_report(polytope)
    if not smooth.simple:
        verdict = "singular"
    elif smooth.smooth:
        verdict = "smooth"
    else:
        verdict = "quasi-smooth"
    report.payload.update(polytope_json(polytope))
    report.payload.update(
        {
            "simple": smooth.simple,
            "smooth": smooth.smooth,
            "edge_rule_fired": smooth.edge_rule_fired,
            "verdict": verdict,
        }
    )
    report.line(
        f"{len(polytope.points)} lattice points, {len(polytope.vertices)} vertices, "
        f"{len(polytope.facets)} facets, {len(polytope.edges)} edges"
    )
    report.line(f"verdict: {verdict}")
    report.line(f"normalized volume (toric degree): {report.payload['normalized_volume']}")
    _emit(report.render(args.json), args.out)
    return 0


def _cmd_splitting(args) -> int:
    doc = _load_document(args)
    if not is_artinian(doc.spec):
        raise AnalysisError("ideal is not artinian")
    result = splitting_type(doc.spec, seed=doc.seed, trials=doc.trials)
    report = Report("splitting")
    report.payload.update(
        {
            "d": result.d,
            "values": list(result.values),
            "wlp_dminus1": result.wlp_in_degree_dminus1,
            "seed": doc.seed,
        }
    )
    report.line(
        "splitting type on a general line: ("
        + ", ".join(str(a) for a in result.values)
        + ")"
    )
    report.line(
        f"WLP in degree {result.d - 1}: "
        + ("yes" if result.wlp_in_degree_dminus1 else "no")
    )
    _emit(report.render(args.json), args.out)
    return 0


def _cmd_classify(args) -> int:
    seed = args.seed
    if seed is None:
        seed = int(os.environ.get("LEFSCHETZ_SEED", DEFAULT_SEED))
    trials = args.trials if args.trials is not None else DEFAULT_TRIALS
    cache = None
    cache_handle = None
    if args.cache:
        cache = {}
        if args.resume and os.path.exists(args.cache):
            cache = load_cache(args.cache)
        cache_handle = open(args.cache, "a", encoding="utf-8")
    out_handle = open(args.out, "w", encoding="utf-8") if args.out else sys.stdout

    emitted = 0
    counts = {}

    def show(record):
        nonlocal emitted
        emitted += 1
        counts[record.verdict] = counts.get(record.verdict, 0) + 1
        if args.json:
            out_handle.write(_dumps(record.to_json_dict()) + "\n")
        else:
            quadric = record.to_json_dict()["quadric"]
            out_handle.write(
                f"j={record.j} r={record.r} verdict={record.verdict} "
                f"degree={record.toric_degree} orbit={record.orbit_size} "
                f"quadric[{quadric}] generators "
                + " ".join(
                    "".join(map(str, e)) for e in record.generators
                )
                + "\n"
            )
        out_handle.flush()

    def progress(key, record):
        if cache_handle is not None:
            cache_handle.write(cache_line(key, record) + "\n")
            cache_handle.flush()

    try:
        run = enumerate_cubic_togliatti(
            args.n,
            seed=seed,
            trials=trials,
            max_extra=args.max_extra,
            workers=args.threads,
            cache=cache,
            progress=progress if cache_handle is not None else None,
        )
        for record in run.records:
            show(record)
        if not args.json:
            summary = (
                f"{run.subsets_seen} subsets, {run.candidates_tested} canonical "
                f"candidates, {emitted} Togliatti systems"
            )
            if counts:
                summary += " (" + ", ".join(
                    f"{v}: {counts[v]}" for v in sorted(counts)
                ) + ")"
            out_handle.write(summary + "\n")
    finally:
        if cache_handle is not None:
            cache_handle.close()
        if args.out:
            out_handle.close()
    return 0


def _cmd_verify_r4(args) -> int:
    seed = args.seed
    if seed is None:
        seed = int(os.environ.get("LEFSCHETZ_SEED", DEFAULT_SEED))
    trials = args.trials if args.trials is not None else DEFAULT_TRIALS
    report_dict = verify_r4_theorem(
        args.dmin,
        args.dmax,
        seed=seed,
        trials=trials,
        monomial_samples=args.monomial_samples,
        random_samples=args.random_samples,
    )
    report = Report("verify-r4")
    report.payload.update(report_dict)
    for entry in report_dict["per_degree"]:
        status = "ok"
        if entry["degree_dminus1_failures"] or entry["full_wlp_failures"]:
            status = "FAIL"
        line = (
            f"d={entry['d']}: {entry['distinct_monomial_ideals']} monomial + "
            f"{entry['random_samples']} random ideals, {status}"
        )
        if entry["witness"]:
            line += (
                f"; witness {entry['witness']['ideal']} fails in degrees "
                + " ".join(str(j) for j in entry["witness"]["failure_degrees"])
            )
        report.line(line)
    report.line("verdict: " + ("ok" if report_dict["ok"] else "VIOLATIONS"))
    _emit(report.render(args.json), args.out)
    if not report_dict["ok"]:
        raise AnalysisError("; ".join(report_dict["violations"]))
    return 0


def _parse_partition(text: str):
    parts = []
    for chunk in text.split("|"):
        chunk = chunk.strip()
        if not chunk:
            raise UsageError("empty part in --partition")
        try:
            parts.append(tuple(int(i) for i in chunk.split(",")))
        except ValueError as exc:
            raise UsageError(f"bad --partition: {exc}") from exc
    return parts


def _cmd_example(args) -> int:
    try:
        if args.name.startswith("case-"):
            case = int(args.name.split("-", 1)[1])
            if case not in (1, 2, 3, 4):
                raise UsageError("cases are case-1 .. case-4")
            if args.n not in (None, 3):
                raise UsageError("the classification cases live on P^3")
            spec = classification_case_ideal(case)
        else:
            if args.n is None:
                raise UsageError(f"--n is required for {args.name!r}")
            partition = _parse_partition(args.partition) if args.partition else None
            spec = build_named_example(args.name, args.n, partition)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    names = [f"x{i}" for i in range(spec.n + 1)]
    document = {
        "variables": names,
        "degree": spec.d,
        "generators": [format_form(g, names) for g in spec.generators],
    }
    _emit(_dumps(document) + "\n", args.out)
    return 0


def _add_document_arguments(parser: argparse.ArgumentParser):
    parser.add_argument("file", nargs="?", help="ideal document (JSON)")
    parser.add_argument(
        "--gen",
        action="append",
        metavar="EXPR",
        help="inline generator expression (repeatable; needs --variables/--degree)",
    )
    parser.add_argument("--variables", help="comma-separated variable names")
    parser.add_argument("--degree", type=int, help="generation degree d")


def build_arg_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lefschetz",
        description="Weak Lefschetz Property, Laplace equations, Togliatti systems",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=None, help="sampling seed")
    common.add_argument("--trials", type=int, default=None, help="sampling trials")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--out", help="write the report to this file")
    commands = parser.add_subparsers(dest="command", required=True)

    def add_command(name, help_text):
        return commands.add_parser(name, help=help_text, parents=[common])

    p = add_command("wlp", "full WLP scan of an artinian ideal")
    _add_document_arguments(p)
    p.add_argument(
        "--generic-l",
        action="store_true",
        help="use random linear forms even for monomial ideals",
    )
    p.set_defaults(handler=_cmd_wlp)

    p = add_command("togliatti", "degree-(d-1) failure, checked three equivalent ways")
    _add_document_arguments(p)
    p.set_defaults(handler=_cmd_togliatti)

    p = add_command("osculate", "osculating dimension of the image")
    _add_document_arguments(p)
    p.add_argument("--order", type=int, required=True, help="osculation order s")
    p.add_argument(
        "--system",
        action="store_true",
        help="treat the generators themselves as the linear system "
        "(default: its apolar complement)",
    )
    p.set_defaults(handler=_cmd_osculate)

    p = add_command("apolar", "apolar (Macaulay inverse) system basis")
    _add_document_arguments(p)
    p.set_defaults(handler=_cmd_apolar)

    p = add_command("polytope", "lattice polytope certificates")
    _add_document_arguments(p)
    p.add_argument(
        "--system",
        action="store_true",
        help="build the polytope from the generators, not the apolar system",
    )
    p.set_defaults(handler=_cmd_polytope)

    p = add_command("splitting", "syzygy-bundle splitting type")
    _add_document_arguments(p)
    p.set_defaults(handler=_cmd_splitting)

    p = add_command("classify", "enumerate monomial Togliatti systems of cubics")
    p.add_argument("--n", type=int, required=True, help="projective dimension")
    p.add_argument(
        "--max-extra",
        type=int,
        default=None,
        help="cap on the number of mixed generators (required for n >= 4)",
    )
    p.add_argument("--threads", type=int, default=1, help="worker processes")
    p.add_argument("--cache", help="JSONL cache file for certified candidates")
    p.add_argument(
        "--resume",
        action="store_true",
        help="reuse results already present in --cache",
    )
    p.set_defaults(handler=_cmd_classify)

    p = add_command("verify-r4", "scan the 4-generator picture on P^2 over a degree range")
    p.add_argument("--dmin", type=int, required=True)
    p.add_argument("--dmax", type=int, required=True)
    p.add_argument("--monomial-samples", type=int, default=50)
    p.add_argument("--random-samples", type=int, default=5)
    p.set_defaults(handler=_cmd_verify_r4)

    p = add_command("example", "emit a named example as a document")
    p.add_argument(
        "--name",
        required=True,
        help="truncated-simplex | second-example | ilardi-counterexample | "
        "partition | case-1 .. case-4",
    )
    p.add_argument("--n", type=int, default=None, help="projective dimension")
    p.add_argument(
        "--partition",
        help="variable partition, e.g. '0,1|2|3' (with --name partition)",
    )
    p.set_defaults(handler=_cmd_example)

    return parser


def main(argv=None) -> int:
    parser = build_arg_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (AnalysisError, DegeneratePolytopeError, ValueError) as exc:
        print(f"analysis failed: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
