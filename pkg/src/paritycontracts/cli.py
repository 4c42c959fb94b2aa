"""Command-line front end.

Exit codes: 0 success (and realizable where that applies), 1 internal
error or failed verification, 2 malformed input, 3 negotiation finished
compatible but with an empty joint region (unrealizable verdict).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional

from .benchgen import gen_factory, gen_random_objective
from .csm import CSM, parity_temp
from .errors import ConflictAt, ParityContractsError, ParseError, SizeCap
from .graph import GameGraph, PriorityFn, TwoObjectiveGame, parse_game, serialize_game
from .negotiation import COMPATIBLE, NegotiationOutcome, negotiate
from .templates import (CondLiveGroup, LiveGroup, Template, check_template,
                        extract_strategy)
from .verification import (DEFAULT_CAP, brute_coop_parity, brute_coop_two,
                           verify_profile_winning)

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_PARSE = 2
EXIT_UNREALIZABLE = 3


def _use_color(stream) -> bool:
    return not os.environ.get("NO_COLOR") and hasattr(stream, "isatty") and stream.isatty()


def _verdict(label: str, ok: bool, stream=None) -> None:
    stream = stream if stream is not None else sys.stdout
    word = "pass" if ok else "FAIL"
    if _use_color(stream):
        code = "32" if ok else "31"
        word = f"\x1b[{code}m{word}\x1b[0m"
    print(f"{label}: {word}", file=stream)


# ---------------------------------------------------------------- JSON views

def edges_json(edges) -> list[list[int]]:
    return [list(e) for e in sorted(edges)]


def template_json(t: Template) -> dict:
    return {
        "unsafe": edges_json(t.unsafe),
        "colive": edges_json(t.colive),
        "cond_live": [
            {"cond": sorted(cl.cond),
             "groups": [edges_json(h.edges) for h in cl.groups]}
            for cl in t.cond_live
        ],
    }


def template_from_json(data: dict) -> Template:
    return Template(
        unsafe=frozenset((int(u), int(v)) for u, v in data.get("unsafe", [])),
        colive=frozenset((int(u), int(v)) for u, v in data.get("colive", [])),
        cond_live=tuple(
            CondLiveGroup.of(cl["cond"],
                             [LiveGroup.of([tuple(e) for e in h])
                              for h in cl["groups"]])
            for cl in data.get("cond_live", [])
        ),
    )


def csm_json(c: CSM) -> dict:
    return {
        "owner": c.owner,
        "assumption": template_json(c.assumption),
        "strategy": template_json(c.strategy),
    }


def outcome_json(o: NegotiationOutcome) -> dict:
    return {
        "status": o.status,
        "priorities0": [p.priorities.tolist() for p in o.final_priorities[0]],
        "priorities1": [p.priorities.tolist() for p in o.final_priorities[1]],
        "live_region": sorted(o.live_region),
        "regions": [sorted(o.regions[0]), sorted(o.regions[1])],
        "csm0": csm_json(o.csm0),
        "csm1": csm_json(o.csm1),
        "iterations": [
            {
                "index": r.index,
                "regions": [sorted(r.regions[0]), sorted(r.regions[1])],
                "colive_cores": [sorted(r.colive_cores[0]), sorted(r.colive_cores[1])],
                "conflicts": _conflict_count(r),
                "update_w": sorted(r.update_w) if r.update_w is not None else None,
                "update_c": sorted(r.update_c) if r.update_c is not None else None,
            }
            for r in o.iterations
        ],
    }


def _conflict_count(record) -> int:
    return sum(len(c.bad_vertices) + len(c.bad_groups) for c in record.conflicts)


def _dump(data: dict) -> None:
    json.dump(data, sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")


def _template_text(name: str, t: Template, g: GameGraph) -> list[str]:
    def fmt(edges):
        return " ".join(f"({u},{v})" for u, v in sorted(edges)) or "-"
    lines = [f"{name}:"]
    lines.append(f"  unsafe: {fmt(t.unsafe)}")
    lines.append(f"  colive: {fmt(t.colive)}")
    if not t.cond_live:
        lines.append("  live: -")
    for cl in t.cond_live:
        cond = "all" if cl.cond == g.vertices() else "{" + ",".join(map(str, sorted(cl.cond))) + "}"
        groups = " | ".join(fmt(h.edges) for h in cl.groups)
        lines.append(f"  live[{cond}]: {groups}")
    return lines


# ---------------------------------------------------------------- commands

def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _parse_single(path: str) -> tuple[GameGraph, PriorityFn]:
    parsed = parse_game(_read(path))
    if isinstance(parsed, TwoObjectiveGame):
        raise ParseError("expected a single-objective game, got parity2 input")
    return parsed


def _parse_two(path: str) -> TwoObjectiveGame:
    parsed = parse_game(_read(path))
    if not isinstance(parsed, TwoObjectiveGame):
        raise ParseError("expected a parity2 two-objective game")
    return parsed


def cmd_solve(args) -> int:
    g, p = _parse_single(args.input)
    res = parity_temp(g, p, args.player)
    if args.format == "json":
        _dump({"region": sorted(res.region),
               "colive_core": sorted(res.colive_core),
               "csm": csm_json(res.csm)})
    else:
        print(f"region: {sorted(res.region)}")
        print(f"colive core: {sorted(res.colive_core)}")
        for line in _template_text("assumption", res.csm.assumption, g):
            print(line)
        for line in _template_text("strategy", res.csm.strategy, g):
            print(line)
    return EXIT_OK


def cmd_negotiate(args) -> int:
    game = _parse_two(args.input)
    outcome = negotiate(game.graph, game.p0, game.p1, args.max_iters)
    for r in outcome.iterations:
        w = r.regions[0] & r.regions[1]
        c = r.colive_cores[0] | r.colive_cores[1]
        print(f"iter {r.index}: |W|={len(w)}, |C|={len(c)}, "
              f"conflicts={_conflict_count(r)}", file=sys.stderr)
    if args.format == "json":
        _dump(outcome_json(outcome))
    else:
        print(f"status: {outcome.status}")
        print(f"live region: {sorted(outcome.live_region)}")
        print(f"joint region: {sorted(outcome.joint_region)}")
        for name, c in (("csm0", outcome.csm0), ("csm1", outcome.csm1)):
            for line in _template_text(f"{name}.assumption", c.assumption, game.graph):
                print(line)
            for line in _template_text(f"{name}.strategy", c.strategy, game.graph):
                print(line)
    if outcome.status != COMPATIBLE:
        return EXIT_INTERNAL
    return EXIT_OK if outcome.joint_region else EXIT_UNREALIZABLE


def cmd_check_template(args) -> int:
    parsed = parse_game(_read(args.input))
    g = parsed.graph if isinstance(parsed, TwoObjectiveGame) else parsed[0]
    with open(args.template) as fh:
        t = template_from_json(json.load(fh))
    res = check_template(g, t)
    if args.format == "json":
        _dump({"conflict_free": res.conflict_free,
               "bad_vertices": sorted(res.bad_vertices),
               "bad_groups": [{"edges": edges_json(edges), "source": src}
                              for edges, src in res.bad_groups]})
    else:
        _verdict("conflict-free", res.conflict_free)
        for v in sorted(res.bad_vertices):
            print(f"  vertex {v}: every outgoing edge unsafe or co-live")
        for edges, src in res.bad_groups:
            print(f"  live-group at {src}: all of {edges_json(edges)} blocked")
    return EXIT_OK


def cmd_extract_strategy(args) -> int:
    parsed = parse_game(_read(args.input))
    g = parsed.graph if isinstance(parsed, TwoObjectiveGame) else parsed[0]
    with open(args.template) as fh:
        t = template_from_json(json.load(fh))
    s = extract_strategy(g, t, args.player)
    data = {str(v): [e[1] for e in edges] for v, edges in sorted(s.allowed.items())}
    if args.format == "json":
        _dump({"player": args.player, "allowed": data})
    else:
        for v, targets in data.items():
            print(f"{v}: {' '.join(map(str, targets))}")
    return EXIT_OK


def cmd_verify_profile(args) -> int:
    game = _parse_two(args.input)
    outcome = negotiate(game.graph, game.p0, game.p1, args.max_iters)
    if outcome.status != COMPATIBLE:
        print("negotiation did not converge", file=sys.stderr)
        return EXIT_INTERNAL
    report = verify_profile_winning(game.graph, game.p0, game.p1, outcome,
                                    cap=args.cap)
    if args.format == "json":
        _dump({"sound": report.sound, "complete": report.complete,
               "verdicts": [
                   {"vertex": v.vertex, "in_coop_region": v.in_coop_region,
                    "profile_wins": v.profile_wins}
                   for v in report.verdicts]})
    else:
        _verdict("sound", report.sound)
        _verdict("complete", report.complete)
    if not report.ok:
        return EXIT_INTERNAL
    return EXIT_OK if outcome.joint_region else EXIT_UNREALIZABLE


def cmd_gen_factory(args) -> int:
    fac = gen_factory(args.x, args.y, args.walls, args.corridors,
                      args.kind, args.seed)
    sys.stdout.write(serialize_game(fac.game))
    if args.meta:
        with open(args.meta, "w") as fh:
            json.dump(fac.meta, fh, indent=2, sort_keys=True)
            fh.write("\n")
    return EXIT_OK


def cmd_gen_objectives(args) -> int:
    parsed = parse_game(_read(args.input))
    if isinstance(parsed, TwoObjectiveGame):
        g, p0 = parsed.graph, parsed.p0
    else:
        g, p0 = parsed
    p1 = gen_random_objective(g, args.max_priority, args.seed)
    sys.stdout.write(serialize_game(TwoObjectiveGame(g, p0, p1)))
    return EXIT_OK


def cmd_oracle(args) -> int:
    parsed = parse_game(_read(args.input))
    if isinstance(parsed, TwoObjectiveGame):
        region = brute_coop_two(parsed.graph, parsed.p0, parsed.p1, cap=args.cap)
    else:
        region = brute_coop_parity(parsed[0], parsed[1], cap=args.cap)
    if args.format == "json":
        _dump({"region": sorted(region)})
    else:
        print(f"region: {sorted(region)}")
    return EXIT_OK


# ---------------------------------------------------------------- plumbing

def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="paritycontracts",
        description="Assume-guarantee templates for two-objective parity games")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(fn=fn)
        p.add_argument("--format", choices=("text", "json"), default="text")
        return p

    p = add("solve", cmd_solve, help="templates for one player's objective")
    p.add_argument("input")
    p.add_argument("--player", type=int, choices=(0, 1), required=True)

    p = add("negotiate", cmd_negotiate, help="negotiate both objectives")
    p.add_argument("input")
    p.add_argument("--max-iters", type=int, default=None)

    p = add("check-template", cmd_check_template, help="conflict-freeness check")
    p.add_argument("input")
    p.add_argument("--template", required=True)

    p = add("extract-strategy", cmd_extract_strategy,
            help="round-robin strategy from a template")
    p.add_argument("input")
    p.add_argument("--template", required=True)
    p.add_argument("--player", type=int, choices=(0, 1), required=True)

    p = add("verify-profile", cmd_verify_profile,
            help="negotiate, extract, and compare against the oracle")
    p.add_argument("input")
    p.add_argument("--max-iters", type=int, default=None)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)

    p = add("gen-factory", cmd_gen_factory, help="two-robot maze benchmark")
    p.add_argument("x", type=int)
    p.add_argument("y", type=int)
    p.add_argument("walls", type=int)
    p.add_argument("corridors", type=int)
    p.add_argument("kind", choices=("buchi", "parity"))
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--meta", default=None, help="write state metadata JSON here")

    p = add("gen-objectives", cmd_gen_objectives,
            help="add a random parity objective to a game")
    p.add_argument("input")
    p.add_argument("-m", "--max-priority", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)

    p = add("oracle", cmd_oracle, help="brute-force cooperative region")
    p.add_argument("input")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)

    return ap


def main(argv: Optional[list[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (ConflictAt, SizeCap, ParityContractsError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
