"""The negotiation loop: each player synthesizes a permissive
assumption/strategy pair for its own objective, the cross-conjunctions
are checked for conflict-freeness, and on a conflict both objectives are
strengthened (restrict to the joint winning region, demand eventual
avoidance of the co-live cores) before another round.

A player may hold several parity objectives at once (this is how
objectives are added incrementally): its specification is kept as a
tuple of priority functions, one template pair is synthesized per
conjunct, and the conjunction of those pairs acts as the player's CSM.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Optional, Sequence

import numpy as np

from .csm import CSM, parity_temp
from .errors import EmptyGame
from .fixpoints import coop_safety
from .graph import GameGraph, PriorityFn, VertexSet, restrict
from .templates import CheckResult, Template, check_template, conjoin

COMPATIBLE = "Compatible"
CAP_REACHED = "IterationCapReached"


@dataclass(frozen=True)
class IterationRecord:
    """One negotiation round: both players' regions and co-live cores,
    the conflict check results, and the strengthening applied (None in
    the final, compatible round)."""

    index: int
    regions: tuple[VertexSet, VertexSet]
    colive_cores: tuple[VertexSet, VertexSet]
    conflicts: tuple[CheckResult, CheckResult]
    update_w: Optional[VertexSet]
    update_c: Optional[VertexSet]

    @property
    def compatible(self) -> bool:
        return all(bool(c) for c in self.conflicts)


@dataclass(frozen=True)
class NegotiationOutcome:
    status: str
    final_priorities: tuple[tuple[PriorityFn, ...], tuple[PriorityFn, ...]]
    live_region: VertexSet
    regions: tuple[VertexSet, VertexSet]
    csm0: CSM
    csm1: CSM
    iterations: tuple[IterationRecord, ...]

    @property
    def joint_region(self) -> VertexSet:
        return self.regions[0] & self.regions[1]

    @property
    def realizable(self) -> bool:
        return self.status == COMPATIBLE and bool(self.joint_region)

    def csm(self, player: int) -> CSM:
        return self.csm0 if player == 0 else self.csm1


def _bump_value(prios: np.ndarray, dom: Sequence[int]) -> int:
    top = max((int(prios[v]) for v in dom), default=0)
    return top + 1 if top % 2 == 0 else top + 2


def apply_spec_update(g: GameGraph, p: PriorityFn, w: VertexSet,
                      c: VertexSet) -> tuple[GameGraph, PriorityFn, tuple[int, ...]]:
    """Strengthen an objective: restrict the game to the largest subset of
    `w` a play can stay in, and push the vertices of `c` to a fresh odd
    priority above everything else so they must be avoided eventually.

    Returns the restricted graph, the updated priorities, and the map
    from new to old vertex ids.
    """
    core = coop_safety(g, w)
    if not core:
        raise EmptyGame("joint winning region has an empty safety core")
    g2, old_ids = restrict(g, core)
    bump = _bump_value(p.priorities, old_ids)
    prios = np.array([bump if v in c else int(p.priorities[v]) for v in old_ids],
                     dtype=np.int32)
    return g2, PriorityFn(prios), old_ids


def _empty_csm(player: int) -> CSM:
    return CSM(owner=player, assumption=Template.empty(), strategy=Template.empty())


def _conjoin_csm(a: CSM, b: CSM) -> CSM:
    assert a.owner == b.owner
    return CSM(owner=a.owner, assumption=conjoin(a.assumption, b.assumption),
               strategy=conjoin(a.strategy, b.strategy))


def _player_csm(g: GameGraph, player: int, specs: Sequence[np.ndarray],
                domain: VertexSet) -> tuple[VertexSet, VertexSet, CSM]:
    """Synthesize one CSM per objective conjunct and conjoin them.
    Returns (region, colive core, csm) for the conjunction."""
    region = domain
    core: VertexSet = frozenset()
    csm = _empty_csm(player)
    for prios in specs:
        res = parity_temp(g, PriorityFn(prios), player, domain)
        region = region & res.region
        core = core | res.colive_core
        csm = _conjoin_csm(csm, res.csm)
    return region, core, csm


def _loop(g: GameGraph, specs: list[list[np.ndarray]], max_iters: int,
          domain: VertexSet, prior: tuple[IterationRecord, ...],
          start_index: int) -> NegotiationOutcome:
    records = list(prior)

    def finish(status: str, regions, csms, live) -> NegotiationOutcome:
        return NegotiationOutcome(
            status=status,
            final_priorities=tuple(tuple(PriorityFn(a) for a in s) for s in specs),
            live_region=live,
            regions=regions,
            csm0=csms[0], csm1=csms[1],
            iterations=tuple(records))

    for index in range(start_index, start_index + max_iters):
        parts = [_player_csm(g, i, specs[i], domain) for i in (0, 1)]
        regions = (parts[0][0], parts[1][0])
        cores = (parts[0][1], parts[1][1])
        csms = (parts[0][2], parts[1][2])
        checks = tuple(
            check_template(g, conjoin(csms[1 - i].assumption, csms[i].strategy),
                           domain)
            for i in (0, 1))
        if all(bool(c) for c in checks):
            records.append(IterationRecord(index, regions, cores, checks, None, None))
            return finish(COMPATIBLE, regions, csms, domain)

        w = regions[0] & regions[1]
        c = cores[0] | cores[1]
        records.append(IterationRecord(index, regions, cores, checks, w, c))
        new_domain = coop_safety(g, w, domain)
        if not new_domain:
            empty = frozenset()
            return finish(COMPATIBLE, (empty, empty),
                          (_empty_csm(0), _empty_csm(1)), empty)
        for player_specs in specs:
            for prios in player_specs:
                bump = _bump_value(prios, new_domain)
                for v in c & new_domain:
                    prios[v] = bump
        domain = new_domain

    parts = [_player_csm(g, i, specs[i], domain) for i in (0, 1)]
    return finish(CAP_REACHED, (parts[0][0], parts[1][0]),
                  (parts[0][2], parts[1][2]), domain)


def default_max_iters(g: GameGraph) -> int:
    return g.n * g.n + 1


def negotiate(g: GameGraph, p0: PriorityFn, p1: PriorityFn,
              max_iters: Optional[int] = None) -> NegotiationOutcome:
    """Run the negotiation to a fixed point.

    Returns Compatible with both CSMs and the surviving vertex set, or
    IterationCapReached if `max_iters` rounds did not suffice (which the
    termination measure rules out at the default cap)."""
    if max_iters is None:
        max_iters = default_max_iters(g)
    specs = [[p0.priorities.astype(np.int32).copy()],
             [p1.priorities.astype(np.int32).copy()]]
    return _loop(g, specs, max_iters, g.vertices(), (), 1)


def incremental_add(outcome: NegotiationOutcome, g: GameGraph,
                    p_new: PriorityFn, player: int,
                    max_iters: Optional[int] = None) -> NegotiationOutcome:
    """Add one more parity objective for `player` on top of a compatible
    outcome.  The new conjunct's CSM is synthesized on the surviving
    region and conjoined with the player's existing templates; only if
    that introduces a conflict does the negotiation loop resume.
    """
    if outcome.status != COMPATIBLE:
        raise ValueError("can only extend a compatible outcome")
    if max_iters is None:
        max_iters = default_max_iters(g)
    domain = outcome.live_region
    if not domain:
        return replace(outcome, final_priorities=(
            outcome.final_priorities[0] + ((p_new,) if player == 0 else ()),
            outcome.final_priorities[1] + ((p_new,) if player == 1 else ())))

    res = parity_temp(g, p_new, player, domain)
    csms = [outcome.csm0, outcome.csm1]
    csms[player] = _conjoin_csm(csms[player], res.csm)
    checks = tuple(
        check_template(g, conjoin(csms[1 - i].assumption, csms[i].strategy),
                       domain)
        for i in (0, 1))
    regions = list(outcome.regions)
    regions[player] = regions[player] & res.region
    new_specs = tuple(
        outcome.final_priorities[i] + ((p_new,) if i == player else ())
        for i in (0, 1))
    if all(bool(c) for c in checks):
        return replace(outcome,
                       final_priorities=new_specs,
                       regions=(regions[0], regions[1]),
                       csm0=csms[0], csm1=csms[1])

    specs = [[p.priorities.astype(np.int32).copy() for p in new_specs[i]]
             for i in (0, 1)]
    return _loop(g, specs, max_iters, domain, outcome.iterations,
                 len(outcome.iterations) + 1)
