"""Command-line front door.

Usage examples:

    localprops verify-coloring --input coloring.json --k 3 --ell 3
    localprops verify-diffset --input set.json --k 4 --ell 5
    localprops verify-distances --input points.json --k 3 --ell 3
    localprops construct --kind random-coloring --n 8 --colors 5 --seed 7 \
        --artifact-out coloring.json
    localprops construct --kind behrend --size-target 32 --artifact-out set.json
    localprops construct --kind collinear-points --input set.json \
        --artifact-out points.json
    localprops construct --kind estimate-probability --n 6 --colors 9 \
        --k 3 --ell 2 --trials 500 --seed 11
    localprops solve-f --n 5 --k 3 --ell 3 --certificate-out cert.json
    localprops solve-g --n 4 --k 4 --ell 5 --range-cap 10
    localprops energy --input coloring.json --format csv
    localprops profile --input coloring.json --k 6 --m 2 --format csv
    localprops lemma-check --input system.json

Exit status: 0 when the run succeeds or the property holds; 1 when a
property fails or a query is infeasible (the payload carries the witness
or failure report); 2 on usage or parse errors.  Budget exhaustion is a
status field in the payload, not an exit code.  Randomized subcommands
require an explicit --seed and never read clocks or environment
variables, so identical command lines produce byte-identical payloads.
"""

from __future__ import annotations

import argparse
import csv
import io as _io
import sys
from collections import Counter
from math import comb
from pathlib import Path

from . import __version__
from .coloring import LocalSpec, cauchy_schwarz_floor, verify_local_property
from .constructions import (
    RandomColoringConfig,
    behrend_set,
    collinear_point_set,
    estimate_property_probability,
    random_coloring,
)
from .energy import bound_report, dyadic_profile, energy_decomposition
from .forbidden import DetectorParams, counting_lemma_find, lemma_hypothesis_holds
from .io import (
    dump_json,
    load_coloring,
    load_integer_set,
    load_point_set,
    load_set_system,
    save_coloring,
    save_integer_set,
    save_point_set,
)
from .numbersets import (
    min_difference_set,
    verify_diff_local_property,
    verify_distance_local_property,
)
from .solver import SolveBudget, min_colors

SCHEMA_VERSION = 1


def _payload(subcommand: str, params: dict, **fields) -> dict:
    out = {
        "schema_version": SCHEMA_VERSION,
        "tool": "localprops",
        "version": __version__,
        "subcommand": subcommand,
        "params": params,
    }
    out.update(fields)
    return out


def _emit(args, payload: dict, csv_text: str | None = None) -> None:
    if getattr(args, "format", "json") == "csv" and csv_text is not None:
        text = csv_text
    else:
        text = dump_json(payload)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)


def _spec_from(args) -> LocalSpec:
    return LocalSpec(args.k, args.ell)


def _verdict_fields(verdict) -> dict:
    return {
        "status": "holds" if verdict.holds else "fails",
        "witness": list(verdict.witness) if verdict.witness is not None else None,
        "witness_colors": verdict.witness_colors,
    }


def _cmd_verify_coloring(args) -> int:
    spec = _spec_from(args)
    G = load_coloring(args.input)
    params = {"k": args.k, "ell": args.ell, "n": G.n}
    if spec.k > G.n:
        _emit(args, _payload("verify-coloring", params, status="infeasible"))
        return 1
    verdict = verify_local_property(G, spec)
    _emit(args, _payload("verify-coloring", params, **_verdict_fields(verdict)))
    return 0 if verdict.holds else 1


def _cmd_verify_diffset(args) -> int:
    spec = _spec_from(args)
    a = load_integer_set(args.input)
    params = {"k": args.k, "ell": args.ell, "n": len(a)}
    if spec.k > len(a):
        _emit(args, _payload("verify-diffset", params, status="infeasible"))
        return 1
    verdict = verify_diff_local_property(a, spec)
    _emit(args, _payload("verify-diffset", params, **_verdict_fields(verdict)))
    return 0 if verdict.holds else 1


def _cmd_verify_distances(args) -> int:
    spec = _spec_from(args)
    pts = load_point_set(args.input)
    params = {"k": args.k, "ell": args.ell, "n": len(pts)}
    if spec.k > len(pts):
        _emit(args, _payload("verify-distances", params, status="infeasible"))
        return 1
    verdict = verify_distance_local_property(pts, spec)
    fields = _verdict_fields(verdict)
    if fields["witness"] is not None:
        fields["witness"] = [list(p) for p in verdict.witness]
    _emit(args, _payload("verify-distances", params, **fields))
    return 0 if verdict.holds else 1


def _require(args, parser, names) -> None:
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n) is None]
    if missing:
        parser.error(
            f"--kind {args.kind} requires {', '.join(missing)}"
        )


def _cmd_construct(args, parser) -> int:
    kind = args.kind
    if kind == "random-coloring":
        _require(args, parser, ["n", "colors", "seed", "artifact_out"])
        cfg = RandomColoringConfig(args.n, args.colors, args.seed)
        G = random_coloring(cfg)
        save_coloring(args.artifact_out, G)
        params = {"kind": kind, "n": args.n, "colors": args.colors, "seed": args.seed}
        _emit(
            args,
            _payload(
                "construct",
                params,
                status="ok",
                artifact=args.artifact_out,
                num_colors_used=G.num_colors,
            ),
        )
        return 0
    if kind == "behrend":
        _require(args, parser, ["size_target", "artifact_out"])
        out = behrend_set(args.size_target)
        save_integer_set(args.artifact_out, out)
        params = {"kind": kind, "size_target": args.size_target}
        _emit(
            args,
            _payload(
                "construct",
                params,
                status="ok",
                artifact=args.artifact_out,
                size=len(out),
                max_element=out[-1],
            ),
        )
        return 0
    if kind == "collinear-points":
        _require(args, parser, ["input", "artifact_out"])
        a = load_integer_set(args.input)
        if not a:
            raise ValueError("input set is empty")
        pts = collinear_point_set(a)
        save_point_set(args.artifact_out, pts)
        params = {"kind": kind}
        _emit(
            args,
            _payload(
                "construct", params, status="ok", artifact=args.artifact_out,
                size=len(pts),
            ),
        )
        return 0
    # estimate-probability
    _require(args, parser, ["n", "colors", "k", "ell", "trials", "seed"])
    spec = _spec_from(args)
    if spec.k > args.n:
        params = {"kind": kind, "n": args.n, "k": args.k, "ell": args.ell}
        _emit(args, _payload("construct", params, status="infeasible"))
        return 1
    prob = estimate_property_probability(args.n, args.colors, spec, args.trials, args.seed)
    params = {
        "kind": kind,
        "n": args.n,
        "colors": args.colors,
        "k": args.k,
        "ell": args.ell,
        "trials": args.trials,
        "seed": args.seed,
    }
    _emit(args, _payload("construct", params, status="ok", probability=prob))
    return 0


def _cmd_solve_f(args) -> int:
    params = {
        "n": args.n,
        "k": args.k,
        "ell": args.ell,
        "node_limit": args.node_limit,
        "time_limit": args.time_limit,
    }
    if args.ell > comb(args.k, 2):
        _emit(args, _payload("solve-f", params, status="unsatisfiable"))
        return 1
    spec = _spec_from(args)
    if spec.k > args.n:
        _emit(args, _payload("solve-f", params, status="infeasible"))
        return 1
    budget = SolveBudget(args.node_limit, args.time_limit)
    result = min_colors(args.n, spec, budget)
    if args.certificate_out and result.certificate is not None:
        save_coloring(args.certificate_out, result.certificate)
    if args.log_out:
        buf = _io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["c", "nodes", "outcome"])
        for row in result.log:
            writer.writerow(row)
        Path(args.log_out).write_text(buf.getvalue())
    _emit(
        args,
        _payload(
            "solve-f",
            params,
            status=result.status,
            value=result.value,
            lower_bound=result.lower_bound,
            certificate=args.certificate_out if result.certificate else None,
            levels=[{"c": c, "nodes": n, "outcome": o} for c, n, o in result.log],
        ),
    )
    return 0


def _cmd_solve_g(args) -> int:
    params = {
        "n": args.n,
        "k": args.k,
        "ell": args.ell,
        "range_cap": args.range_cap,
        "max_sets": args.max_sets,
    }
    if args.ell > comb(args.k, 2):
        _emit(args, _payload("solve-g", params, status="unsatisfiable"))
        return 1
    spec = _spec_from(args)
    result = min_difference_set(args.n, spec, args.range_cap, args.max_sets)
    cert = None
    if result.certificate is not None:
        cert = {
            "set": list(result.certificate),
            "difference_set": list(result.difference_set),
        }
        if args.certificate_out:
            Path(args.certificate_out).write_text(dump_json(cert))
    _emit(
        args,
        _payload(
            "solve-g",
            params,
            status=result.status,
            value=result.value,
            certificate=cert,
            sets_examined=result.sets_examined,
            scope=f"exact over subsets of [1, {args.range_cap}]; "
            "upper bound for the uncapped minimum",
        ),
    )
    if result.status == "infeasible":
        return 1
    return 0


def _cmd_energy(args) -> int:
    G = load_coloring(args.input)
    contributions, total = energy_decomposition(G)
    cs = cauchy_schwarz_floor(G) if G.num_colors else None
    bins = [0] * len(contributions)
    for mult in Counter(G.edge_colors).values():
        bins[mult.bit_length() - 1] += 1
    rows = [
        {"j": j, "bin_count": bc, "contribution": contrib}
        for j, (bc, contrib) in enumerate(zip(bins, contributions))
    ]
    payload = _payload(
        "energy",
        {"n": G.n},
        status="ok",
        num_colors=G.num_colors,
        energy=total,
        cauchy_schwarz_floor=cs,
        decomposition=rows,
    )
    buf = _io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["j", "bin_count", "contribution"])
    for row in rows:
        writer.writerow([row["j"], row["bin_count"], row["contribution"]])
    writer.writerow(["total", "", total])
    _emit(args, payload, buf.getvalue())
    return 0


def _cmd_profile(args) -> int:
    p = DetectorParams(args.k, args.m)
    G = load_coloring(args.input)
    profile = dyadic_profile(G, p)
    rows = bound_report(G, p, locate=args.locate, tuple_budget=args.tuple_budget)
    row_dicts = []
    for r in rows:
        flags = [
            "poor_ok" if r.poor_ok else "poor_violated",
            "rich_regime" if r.rich_regime else "poor_regime",
            "rich_ok" if r.rich_ok else "rich_violated:forbidden-configuration-implied",
        ]
        if r.remark_zone:
            flags.append("remark_zone")
        d = {
            "j": r.j,
            "bin_count": r.bin_count,
            "k_j": r.cum_count,
            "poor_bound_num": r.poor_bound[0],
            "poor_bound_den": r.poor_bound[1],
            "rich_bound_num": r.rich_bound[0],
            "rich_bound_den": r.rich_bound[1],
            "flags": ";".join(flags),
            "min_support": r.min_support,
            "support_bound_num": r.support_bound[0],
            "support_bound_den": r.support_bound[1],
        }
        if r.located is not None:
            mono, hit = r.located
            d["located"] = {
                "mono_degree_violations": [list(v) for v in mono],
                "popular_intersection": (
                    hit
                    if hit is None or hit == "budget-exceeded"
                    else {
                        "colors": list(hit.colors),
                        "vertices": sorted(hit.vertices),
                    }
                ),
            }
        row_dicts.append(d)
    payload = _payload(
        "profile",
        {"n": G.n, "k": args.k, "m": args.m},
        status="ok",
        crossover=profile.crossover,
        bin_count=list(profile.bin_count),
        cum_count=list(profile.cum_count),
        rows=row_dicts,
    )
    buf = _io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(
        [
            "j",
            "bin_count",
            "k_j",
            "poor_bound_num",
            "poor_bound_den",
            "rich_bound_num",
            "rich_bound_den",
            "flags",
        ]
    )
    for d in row_dicts:
        writer.writerow(
            [
                d["j"],
                d["bin_count"],
                d["k_j"],
                d["poor_bound_num"],
                d["poor_bound_den"],
                d["rich_bound_num"],
                d["rich_bound_den"],
                d["flags"],
            ]
        )
    _emit(args, payload, buf.getvalue())
    return 0


def _cmd_lemma_check(args) -> int:
    inst = load_set_system(args.input)
    hit = counting_lemma_find(inst)
    payload = _payload(
        "lemma-check",
        {"n": inst.n, "d": inst.d, "k": len(inst.sets), "min_set_size": inst.min_size},
        status="found" if hit else "none",
        hypothesis_holds=lemma_hypothesis_holds(inst),
        indices=list(hit[0]) if hit else None,
        intersection_size=hit[1] if hit else None,
    )
    _emit(args, payload)
    return 0 if hit else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="localprops",
        description="Verify, construct, solve and profile local-property instances.",
    )
    parser.add_argument("--version", action="version", version=f"localprops {__version__}")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def common(p, output=True, threads=True):
        if output:
            p.add_argument("--output", help="payload destination (default stdout)")
        if threads:
            p.add_argument(
                "--threads",
                type=int,
                default=1,
                help="worker cap; results never depend on it",
            )

    for name in ["verify-coloring", "verify-diffset", "verify-distances"]:
        p = sub.add_parser(name, help=f"{name.replace('-', ' ')} against a (k, ell) spec")
        p.add_argument("--input", required=True)
        p.add_argument("--k", type=int, required=True)
        p.add_argument("--ell", type=int, required=True)
        common(p)

    p = sub.add_parser("construct", help="generators and the probability estimator")
    p.add_argument(
        "--kind",
        required=True,
        choices=[
            "random-coloring",
            "behrend",
            "collinear-points",
            "estimate-probability",
        ],
    )
    p.add_argument("--n", type=int)
    p.add_argument("--colors", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--ell", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--trials", type=int)
    p.add_argument("--size-target", type=int)
    p.add_argument("--input")
    p.add_argument("--artifact-out", help="where the constructed object is written")
    common(p)

    p = sub.add_parser("solve-f", help="exact minimum color count with certificate")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--node-limit", type=int)
    p.add_argument("--time-limit", type=float)
    p.add_argument("--certificate-out")
    p.add_argument("--log-out", help="per-level CSV search log")
    common(p)

    p = sub.add_parser("solve-g", help="exact minimum difference-set size over a capped range")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--range-cap", type=int, required=True)
    p.add_argument("--max-sets", type=int)
    p.add_argument("--certificate-out")
    common(p)

    p = sub.add_parser("energy", help="color energy, its floor, and the dyadic split")
    p.add_argument("--input", required=True)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    common(p)

    p = sub.add_parser("profile", help="dyadic profile and per-j bound report")
    p.add_argument("--input", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--locate", action="store_true", help="locate forbidden configs on rich-bound violations")
    p.add_argument("--tuple-budget", type=int, default=1_000_000)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    common(p)

    p = sub.add_parser("lemma-check", help="search a set system for a dense d-wise intersection")
    p.add_argument("--input", required=True)
    common(p)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "threads", 1) is not None and getattr(args, "threads", 1) < 1:
        parser.error("--threads must be at least 1")
    try:
        if args.subcommand == "verify-coloring":
            return _cmd_verify_coloring(args)
        if args.subcommand == "verify-diffset":
            return _cmd_verify_diffset(args)
        if args.subcommand == "verify-distances":
            return _cmd_verify_distances(args)
        if args.subcommand == "construct":
            return _cmd_construct(args, parser)
        if args.subcommand == "solve-f":
            return _cmd_solve_f(args)
        if args.subcommand == "solve-g":
            return _cmd_solve_g(args)
        if args.subcommand == "energy":
            return _cmd_energy(args)
        if args.subcommand == "profile":
            return _cmd_profile(args)
        if args.subcommand == "lemma-check":
            return _cmd_lemma_check(args)
    except (ValueError, OSError) as exc:
        print(f"localprops: error: {exc}", file=sys.stderr)
        return 2
    raise AssertionError("unreachable")


if __name__ == "__main__":
    sys.exit(main())
