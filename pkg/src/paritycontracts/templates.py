"""Edge-template algebra: representation, lasso semantics, conflict
checks, strategy extraction and profile simulation.

A template is the conjunction of three restrictions on edges: unsafe
edges (never take), co-live edges (take at most finitely often) and
conditional live-groups (if the condition set recurs, keep taking some
edge of each group whose source recurs).  Plain live-groups are stored
as conditional groups whose condition is the full vertex set.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .errors import ConflictAt, UndefinedAt
from .graph import Edge, EdgeSet, GameGraph, PriorityFn, VertexSet


@dataclass(frozen=True)
class LiveGroup:
    edges: EdgeSet

    @staticmethod
    def of(edges: Iterable[Edge]) -> "LiveGroup":
        es = frozenset((int(u), int(v)) for u, v in edges)
        if not es:
            raise ValueError("live group must be non-empty")
        return LiveGroup(es)

    @property
    def sources(self) -> VertexSet:
        return frozenset(u for u, _ in self.edges)

    def edges_from(self, v: int) -> EdgeSet:
        return frozenset(e for e in self.edges if e[0] == v)


@dataclass(frozen=True)
class CondLiveGroup:
    cond: VertexSet
    groups: tuple[LiveGroup, ...]

    @staticmethod
    def of(cond: Iterable[int], groups: Iterable[LiveGroup]) -> "CondLiveGroup":
        gs = tuple(groups)
        if not gs:
            raise ValueError("conditional live-group needs at least one group")
        return CondLiveGroup(frozenset(int(v) for v in cond), gs)


EMPTY_EDGES: EdgeSet = frozenset()


@dataclass(frozen=True)
class Template:
    unsafe: EdgeSet = EMPTY_EDGES
    colive: EdgeSet = EMPTY_EDGES
    cond_live: tuple[CondLiveGroup, ...] = ()

    @staticmethod
    def empty() -> "Template":
        return Template()

    @staticmethod
    def live(g: GameGraph, groups: Iterable[LiveGroup]) -> "Template":
        """Unconditional live-group template (condition = all vertices)."""
        gs = tuple(groups)
        if not gs:
            return Template()
        return Template(cond_live=(CondLiveGroup.of(range(g.n), gs),))

    def is_empty(self) -> bool:
        return not self.unsafe and not self.colive and not self.cond_live

    def restricted_to_sources(self, sources: VertexSet) -> "Template":
        """Keep only the constraints whose edges originate in `sources`."""
        cond = []
        for cl in self.cond_live:
            groups = []
            for h in cl.groups:
                es = frozenset(e for e in h.edges if e[0] in sources)
                if es:
                    groups.append(LiveGroup(es))
            if groups:
                cond.append(CondLiveGroup(cl.cond, tuple(groups)))
        return Template(
            unsafe=frozenset(e for e in self.unsafe if e[0] in sources),
            colive=frozenset(e for e in self.colive if e[0] in sources),
            cond_live=tuple(cond),
        )


def conjoin(t1: Template, t2: Template) -> Template:
    """Conjunction of templates is the component-wise union."""
    seen = set()
    cond: list[CondLiveGroup] = []
    for cl in t1.cond_live + t2.cond_live:
        key = (cl.cond, frozenset(h.edges for h in cl.groups))
        if key not in seen:
            seen.add(key)
            cond.append(cl)
    return Template(
        unsafe=t1.unsafe | t2.unsafe,
        colive=t1.colive | t2.colive,
        cond_live=tuple(cond),
    )


@dataclass(frozen=True)
class Lasso:
    """Ultimately periodic play: finite stem followed by a repeated cycle."""

    stem: tuple[int, ...]
    cycle: tuple[int, ...]

    @staticmethod
    def of(stem: Sequence[int], cycle: Sequence[int]) -> "Lasso":
        if not cycle:
            raise ValueError("lasso cycle must be non-empty")
        return Lasso(tuple(stem), tuple(cycle))

    def validate(self, g: GameGraph) -> None:
        path = list(self.stem) + list(self.cycle)
        for u, v in zip(path, path[1:]):
            if not g.has_edge(u, v):
                raise ValueError(f"({u},{v}) is not an edge")
        if not g.has_edge(self.cycle[-1], self.cycle[0]):
            raise ValueError("cycle does not close")

    def stem_edges(self) -> list[Edge]:
        path = list(self.stem) + [self.cycle[0]]
        return list(zip(path, path[1:]))

    def cycle_edges(self) -> list[Edge]:
        c = list(self.cycle)
        return list(zip(c, c[1:] + [c[0]]))


def eval_parity(lasso: Lasso, p: PriorityFn) -> bool:
    """True iff the maximum priority on the cycle is even."""
    return max(p[v] for v in lasso.cycle) % 2 == 0


def eval_template(lasso: Lasso, t: Template) -> bool:
    """Interpret the template's LTL on the ultimately periodic word."""
    cycle_edges = set(lasso.cycle_edges())
    all_edges = cycle_edges | set(lasso.stem_edges())
    if all_edges & t.unsafe:
        return False
    if cycle_edges & t.colive:
        return False
    cycle_vertices = set(lasso.cycle)
    for cl in t.cond_live:
        if not (cl.cond & cycle_vertices):
            continue
        for h in cl.groups:
            if h.sources & cycle_vertices and not (h.edges & cycle_edges):
                return False
    return True


@dataclass(frozen=True)
class CheckResult:
    conflict_free: bool
    bad_vertices: VertexSet
    bad_groups: tuple[tuple[EdgeSet, int], ...]  # (group edges, blocked source)

    def __bool__(self) -> bool:
        return self.conflict_free


def check_template(g: GameGraph, t: Template,
                   domain: Optional[VertexSet] = None) -> CheckResult:
    """Conflict-freeness: every vertex, and every live-group source, keeps
    an admissible outgoing edge (neither unsafe nor co-live)."""
    if domain is None:
        domain = g.vertices()
    dead = t.unsafe | t.colive
    bad_vertices = []
    for v in domain:
        out = [(v, int(w)) for w in g.successors(v) if int(w) in domain]
        if all(e in dead for e in out):
            bad_vertices.append(v)
    bad_groups = []
    for cl in t.cond_live:
        if not (cl.cond & domain):
            continue
        for h in cl.groups:
            for v in h.sources:
                if v not in domain:
                    continue
                es = [e for e in h.edges_from(v) if e[1] in domain]
                if es and all(e in dead for e in es):
                    bad_groups.append((h.edges, v))
    return CheckResult(
        conflict_free=not bad_vertices and not bad_groups,
        bad_vertices=frozenset(bad_vertices),
        bad_groups=tuple(bad_groups),
    )


@dataclass
class Strategy:
    """Round-robin strategy over the per-vertex admissible edges.

    `allowed` lists permitted outgoing edges per owned vertex in a fixed
    deterministic order; `cursor` is the rotating pick.  Mutable: clone
    before running concurrent simulations.
    """

    player: int
    allowed: dict[int, tuple[Edge, ...]]
    cursor: dict[int, int] = field(default_factory=dict)

    def move(self, v: int) -> int:
        edges = self.allowed.get(v)
        if not edges:
            raise UndefinedAt(v)
        k = self.cursor.get(v, 0)
        target = edges[k % len(edges)][1]
        self.cursor[v] = (k + 1) % len(edges)
        return target

    def reset(self) -> None:
        self.cursor.clear()

    def clone(self) -> "Strategy":
        return Strategy(self.player, dict(self.allowed), dict(self.cursor))


def extract_strategy(g: GameGraph, t: Template, player: int,
                     domain: Optional[VertexSet] = None) -> Strategy:
    """Strategy following a conflict-free template: at each owned vertex
    rotate through all outgoing edges that are neither unsafe nor co-live,
    in ascending target order."""
    if domain is None:
        domain = g.vertices()
    dead = t.unsafe | t.colive
    allowed: dict[int, tuple[Edge, ...]] = {}
    for v in domain:
        if g.owner[v] != player:
            continue
        out = [(v, int(w)) for w in sorted(g.successors(v).tolist()) if int(w) in domain]
        keep = tuple(e for e in out if e not in dead)
        if not keep:
            raise ConflictAt(v)
        allowed[v] = keep
    return Strategy(player, allowed)


def run_profile(g: GameGraph, s0: Strategy, s1: Strategy, start: int) -> Lasso:
    """Simulate the unique play of the profile from `start`.

    The configuration (vertex, full cursor state of both strategies) lives
    in a finite space, so a repeat is guaranteed; the lasso is cut there.
    """
    strategies = {0: s0, 1: s1}
    for s in strategies.values():
        s.reset()

    def config(v: int):
        return (v,
                tuple(sorted(s0.cursor.items())),
                tuple(sorted(s1.cursor.items())))

    trail: list[int] = []
    seen: dict = {}
    v = start
    while True:
        c = config(v)
        if c in seen:
            k = seen[c]
            return Lasso.of(trail[:k], trail[k:])
        seen[c] = len(trail)
        trail.append(v)
        v = strategies[int(g.owner[v])].move(v)
