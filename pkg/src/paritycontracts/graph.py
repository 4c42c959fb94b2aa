"""Game graphs, parity objectives and the pgsolver-style text formats.

Vertices are dense integers 0..n-1.  Successor lists are stored in CSR
form (``indptr``/``indices``) so the fixpoint kernels can run over flat
arrays; the original file ids survive only as vertex names.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

import numpy as np

from .errors import NotClosed, ParseError

Edge = tuple[int, int]
VertexSet = frozenset[int]
EdgeSet = frozenset[Edge]


@dataclass(frozen=True)
class GameGraph:
    """Two-player game graph with a total successor relation."""

    n: int
    owner: np.ndarray          # int8, 0 or 1 per vertex
    indptr: np.ndarray         # int32, len n+1
    indices: np.ndarray        # int32, successor targets
    names: Optional[tuple[str, ...]] = None

    @staticmethod
    def build(owners: Sequence[int], successors: Sequence[Sequence[int]],
              names: Optional[Sequence[str]] = None) -> "GameGraph":
        n = len(owners)
        if len(successors) != n:
            raise ValueError("owner and successor lists disagree in length")
        indptr = np.zeros(n + 1, dtype=np.int32)
        flat: list[int] = []
        for v, succ in enumerate(successors):
            if len(succ) == 0:
                raise ValueError(f"vertex {v} has an empty successor list")
            seen = set()
            for w in succ:
                if not 0 <= w < n:
                    raise ValueError(f"successor {w} of vertex {v} out of range")
                if w in seen:
                    raise ValueError(f"duplicate successor {w} at vertex {v}")
                seen.add(w)
                flat.append(w)
            indptr[v + 1] = len(flat)
        owner = np.asarray(owners, dtype=np.int8)
        if not np.isin(owner, (0, 1)).all():
            raise ValueError("owners must be 0 or 1")
        return GameGraph(n=n, owner=owner, indptr=indptr,
                         indices=np.asarray(flat, dtype=np.int32),
                         names=tuple(names) if names is not None else None)

    def successors(self, v: int) -> np.ndarray:
        return self.indices[self.indptr[v]:self.indptr[v + 1]]

    def edges(self) -> Iterator[Edge]:
        for v in range(self.n):
            for w in self.successors(v):
                yield (v, int(w))

    @property
    def m(self) -> int:
        return len(self.indices)

    def vertices(self) -> VertexSet:
        return frozenset(range(self.n))

    def player_vertices(self, player: int) -> VertexSet:
        return frozenset(np.flatnonzero(self.owner == player).tolist())

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.successors(u)

    def name_of(self, v: int) -> str:
        if self.names is not None:
            return self.names[v]
        return str(v)

    def mask(self, vs: Iterable[int]) -> np.ndarray:
        out = np.zeros(self.n, dtype=bool)
        for v in vs:
            out[v] = True
        return out


@dataclass(frozen=True)
class PriorityFn:
    """Vertex-to-priority map for a parity objective."""

    priorities: np.ndarray     # int32, one entry per vertex

    @staticmethod
    def of(values: Sequence[int]) -> "PriorityFn":
        arr = np.asarray(values, dtype=np.int32)
        if (arr < 0).any():
            raise ValueError("priorities must be non-negative")
        return PriorityFn(arr)

    @property
    def d(self) -> int:
        return int(self.priorities.max())

    def __getitem__(self, v: int) -> int:
        return int(self.priorities[v])

    def with_updates(self, updates: dict[int, int]) -> "PriorityFn":
        arr = self.priorities.copy()
        for v, p in updates.items():
            arr[v] = p
        return PriorityFn(arr)

    def priority_set(self, p: int) -> VertexSet:
        return frozenset(np.flatnonzero(self.priorities == p).tolist())


@dataclass(frozen=True)
class TwoObjectiveGame:
    graph: GameGraph
    p0: PriorityFn
    p1: PriorityFn

    def __post_init__(self):
        if len(self.p0.priorities) != self.graph.n or len(self.p1.priorities) != self.graph.n:
            raise ValueError("priority functions must be total over the vertex set")


def buchi_to_parity(g: GameGraph, goal: Iterable[int]) -> PriorityFn:
    """Encode the recurrence objective "visit `goal` infinitely often"."""
    goal = set(goal)
    return PriorityFn.of([2 if v in goal else 1 for v in range(g.n)])


def cobuchi_to_parity(g: GameGraph, safe: Iterable[int]) -> PriorityFn:
    """Encode the persistence objective "eventually stay in `safe`"."""
    safe = set(safe)
    return PriorityFn.of([0 if v in safe else 1 for v in range(g.n)])


def restrict(g: GameGraph, u: Iterable[int]) -> tuple[GameGraph, tuple[int, ...]]:
    """Induced subgraph on `u`, which must be existentially closed.

    Returns the subgraph together with the tuple mapping new indices back
    to the original ones.  Raises NotClosed on a vertex whose successors
    all lie outside `u`; callers pass cooperative winning regions, so a
    violation indicates a solver bug upstream.
    """
    keep = sorted(set(u))
    old_to_new = {v: i for i, v in enumerate(keep)}
    owners, succs, names = [], [], []
    for v in keep:
        inner = [old_to_new[int(w)] for w in g.successors(v) if int(w) in old_to_new]
        if not inner:
            raise NotClosed(v)
        owners.append(int(g.owner[v]))
        succs.append(inner)
        names.append(g.name_of(v))
    sub = GameGraph.build(owners, succs, names)
    return sub, tuple(keep)


_LINE_RE = re.compile(r"^(.*?)\s*(?:\"([^\"]*)\")?\s*;?\s*$")


def _split_fields(line: str):
    """Strip the optional quoted name and trailing semicolon, normalize the
    successor list, and return (whitespace fields, name)."""
    m = _LINE_RE.match(line)
    fields = re.sub(r"\s*,\s*", ",", m.group(1)).split()
    return fields, m.group(2)


def parse_game(text: str):
    """Parse pgsolver (`parity`) or two-objective (`parity2`) text.

    Returns ``(GameGraph, PriorityFn)`` for single-objective input and a
    :class:`TwoObjectiveGame` for the two-priority extension.  Vertex ids
    are compacted to dense indices in declaration order.
    """
    lines = text.splitlines()
    header = None
    two = False
    rows = []  # (line_no, orig_id, prios, owner, succ_ids, name)
    seen_ids = {}
    for ln, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line:
            continue
        if header is None:
            m = re.match(r"^(parity2?)\s+(\d+)\s*;?\s*$", line)
            if not m:
                raise ParseError(f"expected 'parity <max-id>;' header, got {line!r}", ln)
            header = m.group(1)
            two = header == "parity2"
            continue
        fields, name = _split_fields(line)
        if not fields or not all(re.fullmatch(r"[0-9,]+", f) for f in fields):
            raise ParseError(f"malformed vertex line {line!r}", ln)
        nprio = 2 if two else 1
        want = nprio + 3            # id, priorities, owner, successor list
        if two and len(fields) == want - 1:
            raise ParseError("parity2 lines need two priorities", ln)
        if len(fields) == want - 1:
            raise ParseError(f"vertex {fields[0]} has an empty successor list", ln)
        if not two and len(fields) == want + 1:
            raise ParseError("single-objective lines carry one priority", ln)
        if len(fields) != want:
            raise ParseError(f"malformed vertex line {line!r}", ln)
        try:
            orig = int(fields[0])
            prios = tuple(int(f) for f in fields[1:1 + nprio])
            owner = int(fields[1 + nprio])
            succ_ids = [int(s) for s in fields[2 + nprio].split(",")]
        except ValueError:
            raise ParseError(f"bad successor list {fields[-1]!r}", ln)
        if owner not in (0, 1):
            raise ParseError(f"owner must be 0 or 1, got {owner}", ln)
        if orig in seen_ids:
            raise ParseError(f"duplicate vertex id {orig}", ln)
        seen_ids[orig] = len(rows)
        rows.append((ln, orig, prios, owner, succ_ids, name))
    if header is None:
        raise ParseError("empty input")
    if not rows:
        raise ParseError("no vertices declared")

    owners, succs, names = [], [], []
    p_first, p_second = [], []
    for ln, orig, prios, owner, succ_ids, name in rows:
        owners.append(owner)
        inner = []
        for s in succ_ids:
            if s not in seen_ids:
                raise ParseError(f"dangling successor id {s} at vertex {orig}", ln)
            inner.append(seen_ids[s])
        succs.append(inner)
        names.append(name if name is not None else str(orig))
        p_first.append(prios[0])
        if two:
            p_second.append(prios[1])
    try:
        graph = GameGraph.build(owners, succs, names)
    except ValueError as exc:
        raise ParseError(str(exc))
    if two:
        return TwoObjectiveGame(graph, PriorityFn.of(p_first), PriorityFn.of(p_second))
    return graph, PriorityFn.of(p_first)


def serialize_game(game, p: Optional[PriorityFn] = None) -> str:
    """Inverse of :func:`parse_game` on dense-indexed games."""
    if isinstance(game, TwoObjectiveGame):
        g = game.graph
        out = [f"parity2 {g.n - 1};"]
        for v in range(g.n):
            succ = ",".join(str(int(w)) for w in g.successors(v))
            out.append(f"{v} {game.p0[v]} {game.p1[v]} {int(g.owner[v])} {succ} \"{g.name_of(v)}\";")
        return "\n".join(out) + "\n"
    g = game
    if p is None:
        raise ValueError("single-objective serialization needs a priority function")
    out = [f"parity {g.n - 1};"]
    for v in range(g.n):
        succ = ",".join(str(int(w)) for w in g.successors(v))
        out.append(f"{v} {p[v]} {int(g.owner[v])} {succ} \"{g.name_of(v)}\";")
    return "\n".join(out) + "\n"


def isomorphic(a: GameGraph, b: GameGraph) -> bool:
    """Structural equality on dense indices (names ignored)."""
    return (a.n == b.n
            and np.array_equal(a.owner, b.owner)
            and np.array_equal(a.indptr, b.indptr)
            and np.array_equal(a.indices, b.indices))
