"""End-to-end acceptance checks at desk scale.

Each test exercises one headline property of the solver, prints a single
pass/fail line, and pins its tolerances (exact set equality, iteration
bounds, wall-clock budgets) in the assertions.
"""

import random
import time
from functools import lru_cache

import numpy as np

from paritycontracts import (COMPATIBLE, Exhausted, PriorityFn,
                             brute_coop_parity, buchi_temp, buchi_to_parity,
                             check_template, cobuchi_temp, conjoin,
                             coop_parity, eval_template, extract_strategy,
                             incremental_add, negotiate, parity_temp,
                             run_profile, sample_winning_lassos,
                             verify_profile_winning, zielonka)
from paritycontracts.benchgen import gen_factory

from .conftest import random_game
from .test_csm import group_edge_sets, prune_forced

A, B, C, D = 0, 1, 2, 3


def _report(label: str, checks: dict[str, bool]) -> None:
    ok = all(checks.values())
    print(f"{label}: {'pass' if ok else 'FAIL'}")
    for name, good in checks.items():
        assert good, name


def test_worked_example_templates(example_game):
    started = time.perf_counter()
    rec = buchi_temp(example_game, {C}, 0)
    pers = cobuchi_temp(example_game, {A, C, D}, 1)
    alt = cobuchi_temp(example_game, {A, B, C}, 1)
    elapsed = time.perf_counter() - started
    psi0, pi0 = rec.csm.assumption, prune_forced(rec.csm.strategy, example_game)
    _report("worked-example templates", {
        "recurrence assumption is live{(b,d)}":
            group_edge_sets(psi0) == {frozenset({(B, D)})}
            and psi0.unsafe == psi0.colive == frozenset(),
        "recurrence strategy prunes to live{(a,c)}":
            group_edge_sets(pi0) == {frozenset({(A, C)})}
            and pi0.unsafe == pi0.colive == frozenset(),
        "persistence assumption is colive{(a,b)}":
            pers.csm.assumption.colive == {(A, B)}
            and not pers.csm.assumption.cond_live,
        "persistence strategy is colive{(b,b)}":
            pers.csm.strategy.colive == {(B, B)}
            and not pers.csm.strategy.cond_live,
        "alternate persistence assumption is trivial":
            alt.csm.assumption.is_empty(),
        "alternate persistence strategy is colive{(b,d)}":
            alt.csm.strategy.colive == {(B, D)},
        "runtime under 1s": elapsed < 1.0,
    })


def test_cross_conjunction_conflict_detection(example_game):
    rec = buchi_temp(example_game, {C}, 0)
    pers = cobuchi_temp(example_game, {A, C, D}, 1)
    alt = cobuchi_temp(example_game, {A, B, C}, 1)
    clash = check_template(example_game,
                           conjoin(rec.csm.assumption, alt.csm.strategy))
    clean = check_template(example_game,
                           conjoin(pers.csm.assumption, rec.csm.strategy))
    _report("cross-conjunction conflict detection", {
        "clash located at b over edge (b,d)":
            not clash.conflict_free
            and any(src == B and (B, D) in edges
                    for edges, src in clash.bad_groups),
        "compatible pair is conflict-free": clean.conflict_free,
    })


def test_cooperative_region_oracle_agreement():
    started = time.perf_counter()
    regions_exact = partition_holds = True
    for seed in range(500):
        rng = random.Random(9000 + seed)
        g, p = random_game(rng, rng.randint(2, 8), 4)
        region = coop_parity(g, p)
        regions_exact &= region == brute_coop_parity(g, p)
        w0, w1 = zielonka(g, p)
        partition_holds &= ((w0 | w1) == g.vertices() and not (w0 & w1)
                            and w0 <= region)
    elapsed = time.perf_counter() - started
    _report("cooperative region vs oracle (500 games)", {
        "coop_parity matches exhaustive oracle exactly": regions_exact,
        "zero-sum regions partition V inside the coop region":
            partition_holds,
        "runtime under 60s": elapsed < 60.0,
    })


@lru_cache(maxsize=1)
def _negotiated_batch():
    batch = []
    for seed in range(300):
        rng = random.Random(40000 + seed)
        n = rng.randint(2, 7)
        g, p0 = random_game(rng, n, 3)
        p1 = PriorityFn.of([rng.randrange(4) for _ in range(n)])
        batch.append((g, p0, p1, negotiate(g, p0, p1)))
    return batch


def test_negotiation_sound_and_complete():
    started = time.perf_counter()
    converged = bounded = sound = complete = True
    for g, p0, p1, out in _negotiated_batch():
        converged &= out.status == COMPATIBLE
        bounded &= len(out.iterations) <= g.n * g.n + 1
        report = verify_profile_winning(g, p0, p1, out)
        sound &= report.sound
        complete &= report.complete
    elapsed = time.perf_counter() - started
    _report("negotiation soundness/completeness (300 games)", {
        "every negotiation ends Compatible": converged,
        "iteration count within n^2+1": bounded,
        "profile never wins outside the cooperative region": sound,
        "profile wins from every cooperatively winning vertex": complete,
        "runtime under 120s": elapsed < 120.0,
    })


def test_winning_plays_respect_assumption_templates():
    violations = 0
    games = 0
    seed = 0
    while games < 50:
        seed += 1
        rng = random.Random(70000 + seed)
        g, p = random_game(rng, rng.randint(3, 8), 3)
        if not coop_parity(g, p):
            continue
        res = parity_temp(g, p, rng.randrange(2))
        try:
            lassos = sample_winning_lassos(g, p, 200, seed)
        except Exhausted:
            continue
        games += 1
        violations += sum(not eval_template(lasso, res.csm.assumption)
                          for lasso in lassos)
    _report("assumption permissiveness (50 games x 200 winning lassos)", {
        "zero template violations": violations == 0,
    })


def test_strengthening_measure_strictly_decreases():
    decreasing = True
    for _, _, _, out in _negotiated_batch():
        measures = []
        for rec in out.iterations:
            if rec.update_w is None:
                continue
            measures.append((len(rec.update_w),
                             len(rec.update_w - rec.update_c)))
        for before, after in zip(measures, measures[1:]):
            decreasing &= after < before
    _report("strengthening measure decreases across conflict rounds", {
        "(|W|, |W \\ C|) lexicographically strictly decreasing": decreasing,
    })


def test_factory_pipeline_and_scaling():
    sizes = range(3, 7)
    slopes = {}
    all_compatible = True
    for kind in ("buchi", "parity"):
        med_edges, med_times = [], []
        for size in sizes:
            times, edges = [], []
            for seed in range(10):
                fac = gen_factory(size, size, size - 1, 2, kind, seed)
                game = fac.game
                started = time.perf_counter()
                out = negotiate(game.graph, game.p0, game.p1)
                times.append(time.perf_counter() - started)
                edges.append(game.graph.m)
                if kind == "buchi":
                    all_compatible &= out.status == COMPATIBLE
            med_edges.append(np.median(edges))
            med_times.append(np.median(times))
        slopes[kind] = np.polyfit(np.log(med_edges), np.log(med_times), 1)[0]
    fac = gen_factory(3, 3, 0, 0, "buchi", 0)
    free = negotiate(fac.game.graph, fac.game.p0, fac.game.p1)
    _report("factory pipeline scaling (3x3..6x6, 10 seeds)", {
        "all recurrence-kind instances negotiate to Compatible":
            all_compatible,
        "recurrence-kind time grows at most quadratically in edges":
            slopes["buchi"] <= 2.0,
        "round-gadget kind grows strictly faster":
            slopes["parity"] > slopes["buchi"],
        "wall-free 3x3 is realizable from the initial state":
            free.status == COMPATIBLE and fac.initial in free.joint_region,
    })


def test_incremental_objective_addition(example_game):
    visit_c = buchi_to_parity(example_game, {C})
    avoid_b = PriorityFn.of([0, 1, 0, 0])
    avoid_d = PriorityFn.of([0, 0, 0, 1])
    base = negotiate(example_game, visit_c, avoid_b)
    redundant = incremental_add(base, example_game,
                                buchi_to_parity(example_game, {C}), 0)
    extended = incremental_add(base, example_game, avoid_d, 1)
    report = verify_profile_winning(example_game, visit_c, avoid_d, extended)
    s0 = extract_strategy(example_game,
                          conjoin(extended.csm1.assumption,
                                  extended.csm0.strategy),
                          0, extended.live_region)
    s1 = extract_strategy(example_game,
                          conjoin(extended.csm0.assumption,
                                  extended.csm1.strategy),
                          1, extended.live_region)
    avoids_d = all(
        D not in run_profile(example_game, s0.clone(), s1.clone(), v).cycle
        for v in extended.live_region)
    _report("incremental objective addition", {
        "redundant objective adds zero negotiation iterations":
            redundant.status == COMPATIBLE
            and len(redundant.iterations) == len(base.iterations),
        "conflicting addition still converges": extended.status == COMPATIBLE,
        "profile wins both objectives from every vertex":
            report.ok and all(v.profile_wins for v in report.verdicts),
        "every profile play eventually avoids d": avoids_d,
    })
