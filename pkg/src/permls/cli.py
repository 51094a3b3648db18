"""Command-line front end.

Every command prints a line-oriented ``key value`` report. ``solve`` exits
0 when it found a smaller cover, 1 when it found none and 2 on input
errors; ``check`` exits 0 on pass, 1 on fail and 2 on input errors.
"""
from __future__ import annotations

import argparse
import logging
import random
import sys
import time
from pathlib import Path
from typing import Sequence

from .coloring import FamilyTooLarge
from .dimacs import FormatError, read_graph, read_vertex_set, write_graph, write_vertex_set
from .generators import (
    maximal_matching_cover,
    random_graph,
    random_two_subdivided,
    subdivision_cover,
)
from .graph_core import (
    BipartiteGraph,
    Graph,
    NotSeparable,
    certify_separability,
    is_two_subdivided,
    smallest_separability,
)
from .permissive import parameter_q, permissive_search, structural_violations
from .reductions import (
    CliqueInstance,
    clique_to_hallset,
    clique_to_hallset_2subdivided,
    hallset_to_lsvc,
    vc_subdivision_shift,
)
from .strict_ls import CoverInstance, HallInstance, InvalidCover, strict_search

log = logging.getLogger("permls")

EXIT_IMPROVED, EXIT_NONE, EXIT_INPUT = 0, 1, 2
EXIT_PASS, EXIT_FAIL = 0, 1


class InputError(Exception):
    pass


def _ids(s) -> str:
    return " ".join(str(v + 1) for v in sorted(s)) if s else "-"


def _emit(pairs: list[tuple[str, object]], out=None) -> None:
    out = out or sys.stdout
    for key, value in pairs:
        out.write(f"{key} {value}\n")


def _load_graph(path: str) -> Graph:
    try:
        return read_graph(path)[0]
    except FileNotFoundError:
        raise InputError(f"graph file not found: {path}") from None
    except FormatError as exc:
        raise InputError(f"malformed graph file {path}: {exc}") from None


def _load_set(path: str, n: int) -> frozenset[int]:
    try:
        return read_vertex_set(path, n)[0]
    except FileNotFoundError:
        raise InputError(f"vertex set file not found: {path}") from None
    except FormatError as exc:
        raise InputError(f"malformed vertex set file {path}: {exc}") from None


def _certificate(g: Graph, beta: str, cap: int):
    if beta == "auto":
        try:
            return smallest_separability(g, cap)
        except NotSeparable as exc:
            raise InputError(f"not separable for any beta <= {cap}: {exc}") from None
    try:
        value = int(beta)
    except ValueError:
        raise InputError(f"--beta must be an integer or 'auto', got {beta!r}") from None
    try:
        return certify_separability(g, value)
    except NotSeparable as exc:
        raise InputError(str(exc)) from None


def cmd_solve(args) -> int:
    started = time.perf_counter()
    g = _load_graph(args.graph)
    cover = _load_set(args.cover, g.n)
    try:
        inst = CoverInstance(g, cover, args.k)
    except InvalidCover as exc:
        raise InputError(f"cover check failed: {exc}") from None
    report: list[tuple[str, object]] = [
        ("command", "solve"),
        ("engine", args.engine),
        ("n", g.n),
        ("m", g.m),
        ("cover_size", len(cover)),
        ("k", args.k),
    ]
    if args.engine == "strict":
        found = strict_search(inst)
        report += [("status", "improved" if found is not None else "no-improvement")]
        if found is not None:
            report += [("new_cover_size", len(found)), ("new_cover", _ids(found))]
        _finish(report, started, found, args)
        return EXIT_IMPROVED if found is not None else EXIT_NONE

    cert = _certificate(g, args.beta, args.beta_cap)
    q = parameter_q(args.k, cert.beta)
    report += [("beta", cert.beta), ("q", q), ("seed", args.seed), ("delta", args.delta or "-")]
    current = inst
    final = None
    improved_any = False
    steps = 0
    while True:
        try:
            outcome = permissive_search(current, cert.beta, mode=args.mode, seed=args.seed + steps,
                                        delta=args.delta, cert=cert, threads=args.threads)
        except FamilyTooLarge as exc:
            raise InputError(str(exc)) from None
        log.debug("step %d: %s after %d of %d candidates", steps, outcome.status,
                  outcome.candidates_tried, outcome.candidates)
        if steps == 0:
            report += [("mode", outcome.mode), ("family_size", outcome.family_size),
                       ("construction", outcome.construction), ("candidates", outcome.candidates)]
        if not outcome.improved:
            break
        improved_any = True
        final = outcome
        steps += 1
        if args.iterate:
            report.append((f"step_{steps}", f"size {len(outcome.cover)} q_index {outcome.candidate_index}"))
            current = CoverInstance(g, outcome.cover, args.k)
            continue
        break
    if improved_any:
        report += [
            ("status", "improved"),
            ("new_cover_size", len(final.cover)),
            ("new_cover", _ids(final.cover)),
            ("witness_q_index", final.candidate_index),
            ("witness_q", _ids(final.q_set)),
            ("witness_w", _ids(final.witness)),
        ]
        if args.iterate:
            report += [("steps", steps), ("final_negative", "probabilistic" if outcome.probabilistic else "exact")]
    else:
        report += [("status", "no-improvement"),
                   ("negative", "probabilistic" if outcome.probabilistic else "exact"),
                   ("candidates_tried", outcome.candidates_tried)]
    _finish(report, started, final.cover if final else None, args)
    return EXIT_IMPROVED if improved_any else EXIT_NONE


def _finish(report, started, cover, args) -> None:
    report.append(("wall_ms", round((time.perf_counter() - started) * 1000, 1)))
    _emit(report)
    if cover is not None and getattr(args, "output", None):
        write_vertex_set(args.output, cover)


def _write_outputs(prefix: str, g: Graph, params: dict, sets: dict[str, frozenset[int]]) -> list[tuple[str, object]]:
    base = Path(prefix)
    base.parent.mkdir(parents=True, exist_ok=True)
    graph_path = base.with_name(base.name + ".gr")
    write_graph(graph_path, g, params)
    written = [("graph_file", graph_path)]
    for suffix, members in sets.items():
        path = base.with_name(base.name + "." + suffix)
        write_vertex_set(path, members, params)
        written.append((f"{suffix}_file", path))
    return written


def cmd_reduce(args) -> int:
    g = _load_graph(args.graph)
    report: list[tuple[str, object]] = [("command", f"reduce {args.reduction}")]
    if args.reduction in ("clique-to-hallset", "clique-to-hallset-2sub"):
        if args.k is None:
            raise InputError("-k is required for clique reductions")
        try:
            ci = CliqueInstance(g, args.k)
            red = (clique_to_hallset if args.reduction == "clique-to-hallset" else clique_to_hallset_2subdivided)(ci)
        except ValueError as exc:
            raise InputError(str(exc)) from None
        bg = red.instance.bg
        params = {"reduction": args.reduction, "k": args.k, "k_prime": red.instance.k, "t": red.t,
                  "a_size": len(bg.a), "b_size": len(bg.b)}
        report += list(params.items())[1:]
        report += _write_outputs(args.out, bg.graph, params, {"a": bg.a})
    elif args.reduction == "hallset-to-lsvc":
        if args.k is None or args.a_side is None:
            raise InputError("hallset-to-lsvc needs -k and --a-side")
        a = _load_set(args.a_side, g.n)
        try:
            hi = HallInstance(BipartiteGraph(g, a, frozenset(range(g.n)) - a), args.k)
        except ValueError as exc:
            raise InputError(f"not a valid Hall Set instance: {exc}") from None
        inst = hallset_to_lsvc(hi)
        beta = smallest_separability(g).beta
        params = {"reduction": args.reduction, "k": args.k, "k_prime": inst.k,
                  "beta": beta, "q": parameter_q(inst.k, beta)}
        report += list(params.items())[1:]
        report += _write_outputs(args.out, g, params, {"cover": inst.cover})
    elif args.reduction == "subdivide":
        g2, shift = vc_subdivision_shift(g)
        params = {"reduction": "subdivide", "source_n": g.n, "source_m": g.m, "cover_shift": shift}
        report += list(params.items())[1:] + [("n", g2.n), ("m", g2.m)]
        report += _write_outputs(args.out, g2, params, {})
    else:  # pragma: no cover - argparse restricts choices
        raise InputError(f"unknown reduction {args.reduction}")
    _emit(report)
    return 0


def cmd_gen(args) -> int:
    rng = random.Random(args.seed)
    if args.kind == "random":
        g = random_graph(args.n, args.p, rng)
        cover = maximal_matching_cover(g, rng)
        params = {"generator": "random", "n": args.n, "p": args.p, "seed": args.seed}
    else:
        base, g = random_two_subdivided(args.n, args.m, rng)
        cover = subdivision_cover(base, rng)
        params = {"generator": "subdivided", "base_n": args.n, "base_m": args.m, "seed": args.seed}
    report = [("command", f"gen {args.kind}"), ("n", g.n), ("m", g.m), ("cover_size", len(cover))]
    report += _write_outputs(args.out, g, params, {"cover": cover})
    _emit(report)
    return 0


def cmd_check(args) -> int:
    g = _load_graph(args.graph)
    report: list[tuple[str, object]] = [("command", f"check {args.what}")]
    problems: list[str] = []
    if args.what == "separability":
        try:
            cert = certify_separability(g, args.beta)
            report += [("beta", args.beta), ("v1_size", len(cert.v1)), ("v2_size", len(cert.v2))]
        except NotSeparable as exc:
            problems.append(str(exc))
        report.append(("two_subdivided", "yes" if is_two_subdivided(g) else "no"))
    elif args.what == "cover":
        s = _load_set(_require(args.cover, "--cover"), g.n)
        uncovered = [(u, v) for u, v in g.edges() if u not in s and v not in s]
        problems += [f"edge {u + 1}-{v + 1} uncovered" for u, v in uncovered[:10]]
        report.append(("cover_size", len(s)))
    elif args.what == "hall-witness":
        a = _load_set(_require(args.a_side, "--a-side"), g.n)
        w = _load_set(_require(args.set, "--set"), g.n)
        try:
            bg = BipartiteGraph(g, a, frozenset(range(g.n)) - a)
        except ValueError as exc:
            raise InputError(f"not bipartite with the given a-side: {exc}") from None
        nbr = bg.neighborhood(w)
        report += [("set_size", len(w)), ("neighborhood_size", len(nbr))]
        if not w <= a:
            problems.append("set is not contained in the a-side")
        if not len(nbr) < len(w):
            problems.append(f"|N(W)| = {len(nbr)} is not < |W| = {len(w)}")
    elif args.what == "structural-witness":
        s = _load_set(_require(args.cover, "--cover"), g.n)
        star = _load_set(_require(args.set, "--set"), g.n)
        if args.k is None:
            raise InputError("-k is required")
        problems += structural_violations(g, s, args.k, star)
    report.append(("result", "fail" if problems else "pass"))
    report += [("violation", p) for p in problems]
    _emit(report)
    return EXIT_FAIL if problems else EXIT_PASS


def _require(value, flag: str):
    if value is None:
        raise InputError(f"{flag} is required")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="permls", description="Strict and permissive k-exchange local search for vertex cover.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="search for a smaller vertex cover")
    p.add_argument("--graph", required=True)
    p.add_argument("--cover", required=True)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--engine", choices=("strict", "permissive"), default="permissive")
    p.add_argument("--beta", default="auto", help="separability parameter or 'auto'")
    p.add_argument("--beta-cap", type=int, default=8, help="largest beta tried by --beta auto")
    p.add_argument("--mode", choices=("auto", "universal", "randomized"), default="auto")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--delta", type=float, default=None, help="target failure probability in randomized mode")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--iterate", action="store_true", help="repeat until no improvement is found")
    p.add_argument("--output", help="write the improved cover here")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("reduce", help="apply a reduction and write the resulting instance")
    p.add_argument("reduction", choices=("clique-to-hallset", "clique-to-hallset-2sub", "hallset-to-lsvc", "subdivide"))
    p.add_argument("--graph", required=True)
    p.add_argument("-k", type=int)
    p.add_argument("--a-side")
    p.add_argument("--out", required=True, help="output path prefix")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("gen", help="generate a random instance")
    p.add_argument("kind", choices=("random", "subdivided"))
    p.add_argument("--n", type=int, required=True, help="vertices (of the base graph for 'subdivided')")
    p.add_argument("--p", type=float, default=0.3)
    p.add_argument("--m", type=int, default=0, help="base edges for 'subdivided'")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("check", help="validate a certificate or witness")
    p.add_argument("what", choices=("separability", "cover", "hall-witness", "structural-witness"))
    p.add_argument("--graph", required=True)
    p.add_argument("--beta", type=int, default=2)
    p.add_argument("--cover")
    p.add_argument("--a-side")
    p.add_argument("--set")
    p.add_argument("-k", type=int)
    p.set_defaults(func=cmd_check)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except InputError as exc:
        _emit([("command", args.command), ("error", exc)])
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
