"""Brute-force oracles and property checkers.

Everything here is deliberately independent of the fixpoint solvers:
cooperative regions are recomputed by exhaustive subset enumeration in
plain Python, and strategy profiles are validated by actually simulating
them.  Sizes are capped since the enumeration is exponential.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .errors import Exhausted, SizeCap
from .graph import GameGraph, PriorityFn, VertexSet
from .templates import Lasso, conjoin, eval_parity, extract_strategy, run_profile

DEFAULT_CAP = 12
_MAX_REJECTS = 10_000


def _strongly_connected(g: GameGraph, sub: frozenset[int]) -> bool:
    """Whether `sub` induces a subgraph where a cycle can cover every
    vertex: strongly connected, and a single vertex needs a self-loop."""
    first = next(iter(sub))
    if len(sub) == 1:
        return g.has_edge(first, first)

    def closure(forward: bool) -> set[int]:
        seen = {first}
        stack = [first]
        while stack:
            v = stack.pop()
            if forward:
                nxt = (int(w) for w in g.successors(v) if int(w) in sub)
            else:
                nxt = (u for u in sub if g.has_edge(u, v))
            for w in nxt:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return seen

    return closure(True) == sub and closure(False) == sub


def _forward_reach(g: GameGraph, targets: set[int]) -> VertexSet:
    reached = set(targets)
    changed = True
    while changed:
        changed = False
        for v in range(g.n):
            if v in reached:
                continue
            if any(int(w) in reached for w in g.successors(v)):
                reached.add(v)
                changed = True
    return frozenset(reached)


def _good_subsets(g: GameGraph, predicate, cap: int) -> VertexSet:
    if g.n > cap:
        raise SizeCap(g.n, cap)
    good: set[int] = set()
    for size in range(1, g.n + 1):
        for combo in combinations(range(g.n), size):
            sub = frozenset(combo)
            if sub <= good:
                continue
            if predicate(sub) and _strongly_connected(g, sub):
                good |= sub
    return _forward_reach(g, good)


def brute_coop_parity(g: GameGraph, p: PriorityFn,
                      cap: int = DEFAULT_CAP) -> VertexSet:
    """Vertices that can reach a cycle whose maximum priority is even,
    by enumerating all strongly connected vertex subsets."""
    return _good_subsets(
        g, lambda sub: max(int(p.priorities[v]) for v in sub) % 2 == 0, cap)


def brute_coop_two(g: GameGraph, p0: PriorityFn, p1: PriorityFn,
                   cap: int = DEFAULT_CAP) -> VertexSet:
    """Vertices that can reach a cycle winning under both priority
    functions at once (a closed walk covering a strongly connected subset
    sees its maximum under each)."""
    def even_both(sub: frozenset[int]) -> bool:
        return (max(int(p0.priorities[v]) for v in sub) % 2 == 0
                and max(int(p1.priorities[v]) for v in sub) % 2 == 0)
    return _good_subsets(g, even_both, cap)


@dataclass(frozen=True)
class VertexVerdict:
    vertex: int
    in_coop_region: bool
    profile_wins: Optional[bool]   # None when no profile run is possible
    wins0: Optional[bool]
    wins1: Optional[bool]


@dataclass(frozen=True)
class ProfileReport:
    verdicts: tuple[VertexVerdict, ...]
    sound: bool      # profile wins only where cooperation could win
    complete: bool   # profile wins everywhere cooperation could win

    @property
    def ok(self) -> bool:
        return self.sound and self.complete


def verify_profile_winning(g: GameGraph, p0: PriorityFn, p1: PriorityFn,
                           outcome, cap: int = DEFAULT_CAP) -> ProfileReport:
    """Extract both strategies from a compatible outcome and simulate the
    profile from every vertex, comparing against the subset oracle."""
    target = brute_coop_two(g, p0, p1, cap)
    domain = outcome.live_region
    if domain:
        s0 = extract_strategy(g, conjoin(outcome.csm1.assumption,
                                         outcome.csm0.strategy), 0, domain)
        s1 = extract_strategy(g, conjoin(outcome.csm0.assumption,
                                         outcome.csm1.strategy), 1, domain)
    verdicts = []
    sound = complete = True
    for v in range(g.n):
        wins0 = wins1 = wins = None
        if v in domain:
            lasso = run_profile(g, s0.clone(), s1.clone(), v)
            wins0 = eval_parity(lasso, p0)
            wins1 = eval_parity(lasso, p1)
            wins = wins0 and wins1
        if wins and v not in target:
            sound = False
        if v in target and not wins:
            complete = False
        verdicts.append(VertexVerdict(v, v in target, wins, wins0, wins1))
    return ProfileReport(tuple(verdicts), sound, complete)


def sample_winning_lassos(g: GameGraph, p: PriorityFn, count: int,
                          seed: int) -> tuple[Lasso, ...]:
    """Random-walk lassos accepted when they satisfy the parity objective.
    Deterministic per seed; raises Exhausted when acceptance looks hopeless.
    """
    rng = random.Random(seed)
    out: list[Lasso] = []
    rejects = 0
    while len(out) < count:
        if rejects >= _MAX_REJECTS:
            raise Exhausted(
                f"{rejects} consecutive rejections; winning plays may not exist")
        v = rng.randrange(g.n)
        path = [v]
        seen = {v: 0}
        while True:
            succ = g.successors(path[-1])
            v = int(succ[rng.randrange(len(succ))])
            if v in seen:
                cut = seen[v]
                lasso = Lasso.of(path[:cut], path[cut:])
                break
            seen[v] = len(path)
            path.append(v)
        if eval_parity(lasso, p):
            out.append(lasso)
            rejects = 0
        else:
            rejects += 1
    return tuple(out)
