"""Set transformers and cooperative/zero-sum region solvers.

All operations take an optional `domain`, the vertex set of a restricted
subgraph on original indices.  Callers pass cooperative winning regions
(which are existentially closed), so no re-indexing is ever needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from . import kernels
from .graph import GameGraph, PriorityFn, VertexSet
from .templates import LiveGroup


def _mask(g: GameGraph, s: Optional[Iterable[int]]) -> np.ndarray:
    if s is None:
        return np.ones(g.n, dtype=bool)
    if isinstance(s, np.ndarray) and s.dtype == bool:
        return s
    return g.mask(s)


def _set(mask: np.ndarray) -> VertexSet:
    return frozenset(np.flatnonzero(mask).tolist())


def cpre(g: GameGraph, u: Iterable[int], player: int,
         domain: Optional[Iterable[int]] = None) -> VertexSet:
    """Vertices where `player` can force entering `u` in one step."""
    out = kernels.cpre_mask(g.indptr, g.indices, g.owner,
                            _mask(g, u), _mask(g, domain), player)
    return _set(out)


@dataclass(frozen=True)
class AttrResult:
    """Attractor (target excluded) plus one live-group per breadth level."""

    attractor: VertexSet
    levels: tuple[LiveGroup, ...]


def attr(g: GameGraph, u: Iterable[int], player: int,
         domain: Optional[Iterable[int]] = None) -> AttrResult:
    """Least fixpoint of cpre levels; level i's group holds the edges from
    vertices first forced at step i into the part already reached."""
    dom = _mask(g, domain)
    level = kernels.attr_levels(g.indptr, g.indices, g.owner,
                                _mask(g, u), dom, player)
    attractor = _set(level >= 1)
    groups = []
    top = int(level.max(initial=0))
    for k in range(1, top + 1):
        edges = []
        for v in np.flatnonzero(level == k).tolist():
            for w in g.successors(v):
                w = int(w)
                if dom[w] and 0 <= level[w] < k:
                    edges.append((v, w))
        if edges:
            groups.append(LiveGroup.of(edges))
    return AttrResult(attractor, tuple(groups))


def epre(g: GameGraph, u: Iterable[int],
         domain: Optional[Iterable[int]] = None) -> VertexSet:
    """Vertices with some successor in `u`."""
    return _set(kernels.epre_mask(g.indptr, g.indices, _mask(g, u), _mask(g, domain)))


def frontier(g: GameGraph, u: Iterable[int],
             domain: Optional[Iterable[int]] = None) -> VertexSet:
    """epre(u) minus u: the one-step predecessors strictly outside `u`."""
    us = frozenset(u)
    return epre(g, us, domain) - us


def coop_safety(g: GameGraph, u: Iterable[int],
                domain: Optional[Iterable[int]] = None) -> VertexSet:
    """Largest subset of `u` from which some play stays in `u` forever."""
    return _set(kernels.safety_mask(g.indptr, g.indices, _mask(g, u), _mask(g, domain)))


def reach_exists(g: GameGraph, u: Iterable[int],
                 domain: Optional[Iterable[int]] = None) -> VertexSet:
    """Vertices with some path into `u` (including `u` itself)."""
    return _set(kernels.reach_mask(g.indptr, g.indices, _mask(g, u), _mask(g, domain)))


def _scc_labels(g: GameGraph, dom: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Strong components of the domain-induced subgraph.

    Returns (labels, nontrivial) where nontrivial[c] is true when
    component c contains a cycle (size >= 2 or a self-loop).
    """
    src = np.repeat(np.arange(g.n, dtype=np.int32), np.diff(g.indptr))
    keep = dom[src] & dom[g.indices]
    mat = csr_matrix((np.ones(int(keep.sum()), dtype=np.int8),
                      (src[keep], g.indices[keep])), shape=(g.n, g.n))
    ncomp, labels = connected_components(mat, directed=True, connection="strong")
    sizes = np.bincount(labels[dom], minlength=ncomp)
    nontrivial = sizes >= 2
    self_loops = keep & (src == g.indices)
    for v in np.unique(src[self_loops]):
        nontrivial[labels[v]] = True
    return labels, nontrivial


def coop_buchi(g: GameGraph, goal: Iterable[int],
               domain: Optional[Iterable[int]] = None) -> VertexSet:
    """Vertices from which some play visits `goal` infinitely often."""
    dom = _mask(g, domain)
    goal_mask = _mask(g, goal) & dom
    labels, nontrivial = _scc_labels(g, dom)
    recurrent = goal_mask & nontrivial[labels]
    return _set(kernels.reach_mask(g.indptr, g.indices, recurrent, dom))


def coop_cobuchi(g: GameGraph, safe: Iterable[int],
                 domain: Optional[Iterable[int]] = None) -> VertexSet:
    """Vertices from which some play eventually stays in `safe`."""
    dom = _mask(g, domain)
    core = kernels.safety_mask(g.indptr, g.indices, _mask(g, safe), dom)
    return _set(kernels.reach_mask(g.indptr, g.indices, core, dom))


def coop_parity(g: GameGraph, p: PriorityFn,
                domain: Optional[Iterable[int]] = None) -> VertexSet:
    """Cooperative parity region via even-cycle analysis: a vertex wins iff
    it reaches a cycle whose maximum priority is even."""
    dom = _mask(g, domain)
    prios = p.priorities
    good = np.zeros(g.n, dtype=bool)
    for target in range(0, int(prios[dom].max(initial=0)) + 1, 2):
        sub = dom & (prios <= target)
        if not sub.any():
            continue
        labels, nontrivial = _scc_labels(g, sub)
        has_target = np.zeros(labels.max(initial=0) + 1, dtype=bool)
        for v in np.flatnonzero(sub & (prios == target)).tolist():
            has_target[labels[v]] = True
        good |= sub & nontrivial[labels] & has_target[labels]
    return _set(kernels.reach_mask(g.indptr, g.indices, good, dom))


def _attr_zero_sum(g: GameGraph, target: np.ndarray, player: int,
                   dom: np.ndarray) -> np.ndarray:
    level = kernels.attr_levels(g.indptr, g.indices, g.owner, target, dom, player)
    return level >= 0


def zielonka(g: GameGraph, p: PriorityFn,
             domain: Optional[Iterable[int]] = None) -> tuple[VertexSet, VertexSet]:
    """Zero-sum winning regions by the classical recursive algorithm.

    Used as an oracle; parity games are determined, so the result is a
    partition of the (domain) vertex set.
    """
    prios = p.priorities

    def solve(dom: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        if not dom.any():
            empty = np.zeros(g.n, dtype=bool)
            return empty, empty
        d = int(prios[dom].max())
        sigma = d % 2
        top = dom & (prios == d)
        a = _attr_zero_sum(g, top, sigma, dom)
        w0, w1 = solve(dom & ~a)
        w_opp = w1 if sigma == 0 else w0
        if not w_opp.any():
            return (dom, np.zeros(g.n, dtype=bool)) if sigma == 0 else \
                   (np.zeros(g.n, dtype=bool), dom)
        b = _attr_zero_sum(g, w_opp, 1 - sigma, dom)
        w0b, w1b = solve(dom & ~b)
        if sigma == 0:
            return w0b, w1b | b
        return w0b | b, w1b
    r0, r1 = solve(_mask(g, domain))
    return _set(r0), _set(r1)
