"""Command-line front end.  Every command prints one JSON object.

Exit codes: 0 computed (including "criterion fails" verdicts), 2 malformed
input, 3 refused because a resource bound was exceeded.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import sys
from fractions import Fraction
from pathlib import Path

from .bigraphs import (BipartiteGraph, FormalSum, GraphError, ResourceBoundError,
                       criterion_check, conjecture_scan)
from .decomposition import (RankDeficientError, decomposition_identity_check, fit_s_basis)
from .diagrams import DiagramError, Partition, Profile, profile_of_partition
from .embeddings import count_embeddings, embedding_volume, mc_volume
from .functionals import s_k_partition, s_k_profile
from .maps import (DEFAULT_MAX_EDGES, character_maps, enumerate_gluings, normalized_sigma)
from .rationals import format_rational

EXIT_OK, EXIT_INPUT, EXIT_BOUND = 0, 2, 3

# generic strict profile used when `decompose` is not given one
DEFAULT_PROFILE = Profile([(-3, 3), (-1, Fraction(7, 2)), (1, 3),
                           (Fraction(5, 2), Fraction(5, 2))])


class InputError(ValueError):
    pass


def _load_json(arg: str):
    """Inline JSON if the argument looks like JSON, otherwise a file path."""
    text = arg.strip()
    if not text.startswith(("{", "[")):
        try:
            text = Path(arg).read_text()
        except OSError as exc:
            raise InputError(f"cannot read {arg}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON in {arg}: {exc}") from exc


def _graph(arg) -> BipartiteGraph:
    return BipartiteGraph.from_json(_load_json(arg))


def _sum(arg) -> FormalSum:
    data = _load_json(arg)
    if "terms" not in data:
        return FormalSum.of(BipartiteGraph.from_json(data))
    return FormalSum.from_json(data)


def _diagram(args):
    if getattr(args, "profile", None):
        return Profile.from_json(_load_json(args.profile))
    if getattr(args, "partition", None) is not None:
        return Partition.parse(args.partition)
    raise InputError("one of --partition / --profile is required")


def cmd_functional(args) -> dict:
    diagram = _diagram(args)
    if isinstance(diagram, Partition):
        value = s_k_partition(diagram, args.k)
        source = {"partition": str(diagram)}
    else:
        value = s_k_profile(diagram, args.k)
        source = {"profile": diagram.to_json()}
    return {"value": format_rational(value), "k": args.k, **source}


def cmd_embed(args) -> dict:
    g = _graph(args.graph)
    diagram = _diagram(args)
    if isinstance(diagram, Partition):
        return {"count": str(count_embeddings(g, diagram)), "partition": str(diagram),
                "graph": g.to_json()}
    return {"volume": format_rational(embedding_volume(g, diagram)),
            "profile": diagram.to_json(), "graph": g.to_json()}


def cmd_check_poly(args) -> dict:
    report = criterion_check(_sum(args.sum))
    return report.to_json()


def cmd_decompose(args) -> dict:
    s = _sum(args.sum)
    omega = Profile.from_json(_load_json(args.profile)) if args.profile else DEFAULT_PROFILE
    train = [Partition.parse(t) for t in args.train.split(";")] if args.train else None
    criterion = criterion_check(s)
    fit = fit_s_basis(s, train=train)
    if all(g.is_forest() for g in s.terms):
        identity = decomposition_identity_check(s, omega).to_json()
    else:
        identity = {"hypotheses_ok": False, "problems": ["exact evaluation needs forest terms"]}
    fit_json = fit.to_json()
    return {
        "s_polynomial": fit_json["s_polynomial"],
        "feasible": fit_json["feasible"],
        "criterion": criterion.to_json(),
        "identity_check": identity,
        "train_rank": fit_json["train_rank"],
        "train_residuals": fit_json["train_residuals"],
        "test_residuals": fit_json["test_residuals"],
        "profile": omega.to_json(),
    }


def cmd_character(args) -> dict:
    mu = Partition.parse(args.mu)
    lam = Partition.parse(args.lam)
    out: dict = {"mu": str(mu), "lambda": str(lam), "alpha": args.alpha,
                 "method": args.method, "max_edges": args.max_edges}
    if args.method in ("maps", "both"):
        res = character_maps(mu, lam, args.alpha, args.max_edges)
        out.update(res.to_json())
    if args.method in ("mn", "both"):
        if args.alpha != 1:
            raise InputError("the Murnaghan-Nakayama oracle covers alpha = 1 only")
        oracle = normalized_sigma(mu, lam)
        out["oracle"] = format_rational(oracle)
        if args.method == "mn":
            out["value"] = format_rational(oracle)
        else:
            out["agree"] = out["value"] == out["oracle"]
    return out


def cmd_maps(args) -> dict:
    mu = Partition.parse(args.mu)
    maps = enumerate_gluings(mu, args.max_edges)
    out = {"mu": str(mu), "maps_enumerated": len(maps), "max_edges": args.max_edges,
           "orientable": sum(m.orientable for m in maps),
           "oriented": sum(m.oriented for m in maps)}
    if args.list:
        out["maps"] = [m.to_json() for m in maps]
    return out


def cmd_conjecture_scan(args) -> dict:
    report = conjecture_scan(args.max_edges, args.mode, args.trials, args.seed, args.bound)
    out = report.to_json()
    out["bound"] = args.bound
    return out


def cmd_mc(args) -> dict:
    g = _graph(args.graph)
    diagram = _diagram(args)
    omega = profile_of_partition(diagram) if isinstance(diagram, Partition) else diagram
    res = mc_volume(g, omega, args.samples, args.seed, threads=args.threads)
    return {**res.to_json(), "threads": args.threads, "graph": g.to_json(),
            "profile": omega.to_json()}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="youngcalc", description=__doc__)
    parser.add_argument("--threads", type=int, default=1,
                        help="cap on worker threads (output does not depend on it)")
    sub = parser.add_subparsers(dest="command", required=True)

    def diagram_args(p, required=True):
        g = p.add_mutually_exclusive_group(required=required)
        g.add_argument("--partition", help='comma-separated parts, e.g. "4,3,1"')
        g.add_argument("--profile", help="profile JSON (file or inline)")

    p = sub.add_parser("functional", help="evaluate S_k")
    diagram_args(p)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_functional)

    p = sub.add_parser("embed", help="N_G on a partition (count) or profile (forest volume)")
    p.add_argument("--graph", required=True)
    diagram_args(p)
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("check-poly", help="polynomiality criterion for a formal sum")
    p.add_argument("--sum", required=True)
    p.set_defaults(func=cmd_check_poly)

    p = sub.add_parser("decompose", help="S-basis fit and decomposition identity")
    p.add_argument("--sum", required=True)
    p.add_argument("--profile", help="strict profile for the identity check")
    p.add_argument("--train", help='training partitions, e.g. "2;1,1;2,1"')
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("character", help="characters from map sums and/or the oracle")
    p.add_argument("--mu", required=True)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--alpha", type=int, choices=(1, 2), default=1)
    p.add_argument("--method", choices=("maps", "mn", "both"), default="maps")
    p.add_argument("--max-edges", type=int, default=DEFAULT_MAX_EDGES)
    p.set_defaults(func=cmd_character)

    p = sub.add_parser("maps", help="enumerate polygon gluings")
    p.add_argument("--mu", required=True)
    p.add_argument("--list", action="store_true")
    p.add_argument("--max-edges", type=int, default=DEFAULT_MAX_EDGES)
    p.set_defaults(func=cmd_maps)

    p = sub.add_parser("conjecture-scan", help="search for counterexamples to the k >= 2 conditions")
    p.add_argument("--max-edges", type=int, default=3)
    p.add_argument("--mode", choices=("exhaustive", "random"), default="exhaustive")
    p.add_argument("--trials", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--bound", type=int, default=4)
    p.set_defaults(func=cmd_conjecture_scan)

    p = sub.add_parser("mc", help="Monte Carlo volume")
    p.add_argument("--graph", required=True)
    diagram_args(p)
    p.add_argument("--samples", type=int, default=1_000_000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_mc)
    return parser


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stderr(stderr), contextlib.redirect_stdout(stdout):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        result = args.func(args)
    except ResourceBoundError as exc:
        print(json.dumps({"error": "resource bound", "detail": str(exc)}), file=stderr)
        return EXIT_BOUND
    except (InputError, DiagramError, GraphError, RankDeficientError, ValueError) as exc:
        print(json.dumps({"error": "bad input", "detail": str(exc)}), file=stderr)
        return EXIT_INPUT
    print(json.dumps(result, sort_keys=True), file=stdout)
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
