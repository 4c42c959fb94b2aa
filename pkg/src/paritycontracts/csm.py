"""Contracted strategy-masks: an assumption template on the opponent
paired with a strategy template for the owner, computed so that the pair
is winning wherever cooperation could win, followable by both players
everywhere, and satisfied by every objective-satisfying play.

Safety objectives contribute unsafe edges, recurrence objectives
live-groups, persistence objectives co-live edges; full parity
objectives combine all three through a Zielonka-style recursion.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import NonTermination
from .fixpoints import (attr, coop_buchi, coop_cobuchi, coop_parity,
                        coop_safety, cpre, frontier)
from .graph import EdgeSet, GameGraph, PriorityFn, VertexSet
from .templates import CondLiveGroup, LiveGroup, Template


@dataclass(frozen=True)
class CSM:
    """Templates for one player: what it assumes of the opponent and what
    it promises to do itself.  Every assumption edge originates at an
    opponent vertex, every strategy edge at an owned vertex."""

    owner: int
    assumption: Template
    strategy: Template

    def validate_sources(self, g: GameGraph) -> None:
        for t, player in ((self.assumption, 1 - self.owner), (self.strategy, self.owner)):
            edges = set(t.unsafe) | set(t.colive)
            for cl in t.cond_live:
                for h in cl.groups:
                    edges |= h.edges
            for u, _ in edges:
                if g.owner[u] != player:
                    raise ValueError(f"edge source {u} violates template ownership")


@dataclass(frozen=True)
class TempResult:
    region: VertexSet
    csm: CSM


@dataclass(frozen=True)
class ParityTempResult:
    region: VertexSet          # cooperative winning region
    colive_core: VertexSet     # vertices a winning play visits finitely often
    csm: CSM


def _split_by_owner(g: GameGraph, edges: Iterable[tuple[int, int]],
                    player: int) -> tuple[EdgeSet, EdgeSet]:
    own, opp = [], []
    for e in edges:
        (own if g.owner[e[0]] == player else opp).append(e)
    return frozenset(own), frozenset(opp)


def _split_group(g: GameGraph, group: LiveGroup, player: int) -> tuple[
        Optional[LiveGroup], Optional[LiveGroup]]:
    own, opp = _split_by_owner(g, group.edges, player)
    return (LiveGroup(own) if own else None,
            LiveGroup(opp) if opp else None)


def unsafe_temp(g: GameGraph, u: Iterable[int], player: int,
                domain: Optional[VertexSet] = None) -> tuple[EdgeSet, EdgeSet]:
    """Edges leaving the safety core of `u`, split into (own, opponent)."""
    if domain is None:
        domain = g.vertices()
    core = coop_safety(g, u, domain)
    # edges leaving the core are unsafe even when the target has already
    # been dropped from the domain by an earlier restriction
    leaving = [(v, int(w)) for v in core
               for w in g.successors(v) if int(w) not in core]
    return _split_by_owner(g, leaving, player)


def live_proc(g: GameGraph, goal: Iterable[int], player: int,
              domain: Optional[VertexSet] = None) -> tuple[
                  tuple[LiveGroup, ...], tuple[LiveGroup, ...]]:
    """Alternating expansion toward `goal`: the player's attractor levels
    become strategy live-groups, the opponent's one-step helps become
    assumption live-groups.  Requires `domain` to be the cooperative
    recurrence region of `goal` (the loop must cover it entirely)."""
    if domain is None:
        domain = g.vertices()
    u = frozenset(goal) & domain
    strat: list[LiveGroup] = []
    assume: list[LiveGroup] = []
    while u != domain:
        res = attr(g, u, player, domain)
        for group in res.levels:
            s, a = _split_group(g, group, player)
            if s:
                strat.append(s)
            if a:
                assume.append(a)
        u = u | res.attractor
        if u == domain:
            break
        c = cpre(g, u, 1 - player, domain) - u
        if not c:
            raise NonTermination(
                "expansion stalled; graph not restricted to the cooperative region")
        bad = [v for v in c if g.owner[v] == player]
        if bad:
            raise NonTermination(
                f"player-owned vertices {bad} in the opponent frontier after "
                "attractor saturation")
        edges = [(v, int(w)) for v in c for w in g.successors(v)
                 if int(w) in u]
        assume.append(LiveGroup.of(edges))
        u = u | c
    return tuple(strat), tuple(assume)


def colive_proc(g: GameGraph, safe: Iterable[int], player: int,
                domain: Optional[VertexSet] = None) -> tuple[EdgeSet, EdgeSet]:
    """Co-live edges steering the play into (and keeping it near) the
    safety core of `safe`: edges leaving the growing core plus edges among
    each new frontier.  Requires `domain` to be the cooperative
    persistence region of `safe`."""
    if domain is None:
        domain = g.vertices()
    u = coop_safety(g, safe, domain)
    d: set[tuple[int, int]] = set()

    def leaving(src: VertexSet) -> list[tuple[int, int]]:
        return [(v, int(w)) for v in src for w in g.successors(v)
                if int(w) in domain and int(w) not in u]

    d.update(leaving(u))
    while u != domain:
        f = frontier(g, u, domain)
        if not f:
            raise NonTermination(
                "expansion stalled; graph not restricted to the cooperative region")
        d.update((v, int(w)) for v in f for w in g.successors(v) if int(w) in f)
        u = u | f
        d.update(leaving(u))
    return _split_by_owner(g, d, player)


def buchi_temp(g: GameGraph, goal: Iterable[int], player: int,
               domain: Optional[VertexSet] = None) -> TempResult:
    """Adequately permissive CSM for "visit `goal` infinitely often"."""
    if domain is None:
        domain = g.vertices()
    region = coop_buchi(g, goal, domain)
    own_unsafe, opp_unsafe = unsafe_temp(g, region, player, domain)
    strat_groups, assume_groups = live_proc(g, frozenset(goal) & region,
                                            player, region)
    return TempResult(
        region=region,
        csm=CSM(owner=player,
                assumption=conjoin_parts(opp_unsafe, frozenset(),
                                         _as_cond(g, assume_groups)),
                strategy=conjoin_parts(own_unsafe, frozenset(),
                                       _as_cond(g, strat_groups))))


def cobuchi_temp(g: GameGraph, safe: Iterable[int], player: int,
                 domain: Optional[VertexSet] = None) -> TempResult:
    """Adequately permissive CSM for "eventually stay in `safe`"."""
    if domain is None:
        domain = g.vertices()
    region = coop_cobuchi(g, safe, domain)
    own_unsafe, opp_unsafe = unsafe_temp(g, region, player, domain)
    strat_colive, assume_colive = colive_proc(g, frozenset(safe) & region,
                                              player, region)
    return TempResult(
        region=region,
        csm=CSM(owner=player,
                assumption=conjoin_parts(opp_unsafe, assume_colive, ()),
                strategy=conjoin_parts(own_unsafe, strat_colive, ())))


def _as_cond(g: GameGraph, groups: tuple[LiveGroup, ...]) -> tuple[CondLiveGroup, ...]:
    if not groups:
        return ()
    return (CondLiveGroup.of(range(g.n), groups),)


def conjoin_parts(unsafe: EdgeSet, colive: EdgeSet,
                  cond: tuple[CondLiveGroup, ...]) -> Template:
    return Template(unsafe=unsafe, colive=colive, cond_live=cond)


def parity_temp(g: GameGraph, p: PriorityFn, player: int,
                domain: Optional[VertexSet] = None) -> ParityTempResult:
    """Adequately permissive CSM for a full parity objective.

    Peels priorities from the top: a highest odd priority must eventually
    be avoided (co-live edges towards the sub-region winning without it,
    its complement joining the colive core); a highest even priority
    yields, per lower odd priority l, a conditional live-group demanding
    progress towards higher even priorities whenever l recurs.  The freed
    top priority is folded to 0 and the recursion continues on the
    remainder.
    """
    if domain is None:
        domain = g.vertices()
    region = coop_parity(g, p, domain)
    own_unsafe, opp_unsafe = unsafe_temp(g, region, player, domain)

    prios = p.priorities.copy()
    dom = region
    core: set[int] = set()
    colive_s: set[tuple[int, int]] = set()
    colive_a: set[tuple[int, int]] = set()
    cond_s: list[CondLiveGroup] = []
    cond_a: list[CondLiveGroup] = []

    while dom:
        d = max(int(prios[v]) for v in dom)
        if d == 0:
            break
        top = frozenset(v for v in dom if prios[v] == d)
        if d % 2 == 1:
            w_nd = coop_parity(g, PriorityFn(prios), dom - top)
            cs, ca = colive_proc(g, w_nd, player, dom)
            colive_s |= cs
            colive_a |= ca
            core |= dom - w_nd
        else:
            w_d = coop_buchi(g, top, dom)
            w_nd = dom - w_d
            for low in range(1, d, 2):
                cond = frozenset(v for v in w_d if prios[v] == low)
                if not cond:
                    continue
                targets = frozenset(v for v in w_d
                                    if prios[v] > low and prios[v] % 2 == 0)
                sg, ag = live_proc(g, targets, player, w_d)
                if sg:
                    cond_s.append(CondLiveGroup.of(cond, sg))
                if ag:
                    cond_a.append(CondLiveGroup.of(cond, ag))
        for v in top & w_nd:
            prios[v] = 0
        dom = w_nd

    return ParityTempResult(
        region=region,
        colive_core=frozenset(core),
        csm=CSM(owner=player,
                assumption=Template(unsafe=opp_unsafe,
                                    colive=frozenset(colive_a),
                                    cond_live=tuple(cond_a)),
                strategy=Template(unsafe=own_unsafe,
                                  colive=frozenset(colive_s),
                                  cond_live=tuple(cond_s))))
