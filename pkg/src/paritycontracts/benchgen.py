"""Benchmark generators: two-robot factory mazes and random parity
objectives for existing graphs.

The maze is a grid with randomly placed horizontal walls (each row pair
keeps at least one passage) and optional one-way corridors.  Two robots
take turns moving in the 4-neighborhood or staying put; moves onto the
other robot's cell are omitted, so collision states are unreachable by
construction.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .graph import GameGraph, PriorityFn, TwoObjectiveGame

Cell = tuple[int, int]  # (col, row), row 0 at the bottom


@dataclass(frozen=True)
class Maze:
    x: int
    y: int
    walls: frozenset[tuple[int, int]]        # (col, lower row): wall above that cell
    one_way: dict[tuple[int, int], str]      # passage -> "up" | "down"
    seed: int

    def passable(self, src: Cell, dst: Cell) -> bool:
        (c1, r1), (c2, r2) = src, dst
        if abs(c1 - c2) + abs(r1 - r2) != 1:
            return False
        if not (0 <= c2 < self.x and 0 <= r2 < self.y):
            return False
        if r1 == r2:
            return True
        slot = (c1, min(r1, r2))
        if slot in self.walls:
            return False
        direction = self.one_way.get(slot)
        if direction == "up" and r2 < r1:
            return False
        if direction == "down" and r2 > r1:
            return False
        return True

    def moves(self, pos: Cell) -> list[Cell]:
        c, r = pos
        out = [pos]
        for dc, dr in ((1, 0), (-1, 0), (0, 1), (0, -1)):
            dst = (c + dc, r + dr)
            if self.passable(pos, dst):
                out.append(dst)
        return out


def gen_maze(x: int, y: int, w: int, c: int, seed: int) -> Maze:
    """Random maze with `w` horizontal walls (clamped so every adjacent
    row pair keeps a passage) and at most `c` one-way corridors."""
    if x < 2 or y < 2:
        raise ValueError("maze needs at least 2 columns and 2 rows")
    rng = random.Random(seed)
    w = min(w, (x - 1) * (y - 1))
    slots = [(col, row) for row in range(y - 1) for col in range(x)]
    rng.shuffle(slots)
    walls: set[tuple[int, int]] = set()
    per_row = [0] * (y - 1)
    for slot in slots:
        if len(walls) == w:
            break
        if per_row[slot[1]] < x - 1:
            walls.add(slot)
            per_row[slot[1]] += 1
    passages = sorted(s for s in slots if s not in walls)
    # keep one two-way passage per row pair so rows stay mutually reachable
    two_way = {row: sum(1 for s in passages if s[1] == row) for row in range(y - 1)}
    candidates = passages[:]
    rng.shuffle(candidates)
    one_way: dict[tuple[int, int], str] = {}
    for s in candidates:
        if len(one_way) == c:
            break
        if two_way[s[1]] >= 2:
            one_way[s] = rng.choice(("up", "down"))
            two_way[s[1]] -= 1
    return Maze(x, y, frozenset(walls), one_way, seed)


# objective cells, by role: robot 1 shuttles between a and b; robot 2
# serves b and c whenever robot 1 keeps reaching a
def _cell_a(m: Maze) -> Cell:
    return (m.x - 1, m.y - 1)       # upper-right corner


def _cell_b(m: Maze) -> Cell:
    return (m.x // 2, 0)            # lower-middle


def _cell_c(m: Maze) -> Cell:
    return (0, m.y - 1)             # upper-left corner


@dataclass(frozen=True)
class FactoryGame:
    game: TwoObjectiveGame
    kind: str
    initial: int
    states: tuple[tuple, ...]
    meta: dict = field(compare=False)


def _buchi_state(m: Maze):
    start = ((0, 0), (m.x - 1, 0), 0)

    def succs(state):
        p1, p2, turn = state
        if turn == 0:
            return [(q, p2, 1) for q in m.moves(p1) if q != p2]
        return [(p1, q, 0) for q in m.moves(p2) if q != p1]

    def prios(state):
        p1, p2, _ = state
        return (2 if p1 == _cell_a(m) else 1,
                2 if p2 == _cell_c(m) else 1)

    return start, succs, prios


def _step_gadget(mem: int, arrived: bool, done: bool) -> int:
    # 0: seeking the first cell, 1: seeking the second, 2: round complete
    if mem == 1:
        return 2 if done else 1
    return 1 if arrived else 0


def _parity_state(m: Maze):
    a, b, c = _cell_a(m), _cell_b(m), _cell_c(m)
    start = ((0, 0), (m.x - 1, 0), 0, 0, 0)

    def succs(state):
        p1, p2, m1, m2, turn = state
        if turn == 0:
            return [(q, p2, _step_gadget(m1, q == a, q == b), m2, 1)
                    for q in m.moves(p1) if q != p2]
        return [(p1, q, m1, _step_gadget(m2, q == b, q == c), 0)
                for q in m.moves(p2) if q != p1]

    def prios(state):
        p1, _, m1, m2, _ = state
        pr1 = 2 if m1 == 2 else 1
        if m2 == 2:
            pr2 = 2
        elif p1 == a:
            pr2 = 1
        else:
            pr2 = 0
        return pr1, pr2

    return start, succs, prios


def maze_to_game(m: Maze, kind: str) -> FactoryGame:
    """Turn-based product game over the reachable state space.

    kind "buchi": each robot must visit its corner infinitely often
    (priority 2 there, 1 elsewhere; no memory needed).  kind "parity":
    robot 1 must visit cells a and b infinitely often; robot 2 must visit
    b and c infinitely often whenever robot 1 keeps reaching a.  Both use
    a 3-valued round gadget whose completion state carries priority 2.
    """
    if kind == "buchi":
        start, succs, prios = _buchi_state(m)
    elif kind == "parity":
        start, succs, prios = _parity_state(m)
    else:
        raise ValueError(f"unknown kind {kind!r}")

    index: dict[tuple, int] = {start: 0}
    states: list[tuple] = [start]
    head = 0
    while head < len(states):
        for nxt in succs(states[head]):
            if nxt not in index:
                index[nxt] = len(states)
                states.append(nxt)
        head += 1
    succ_lists = [sorted({index[nxt] for nxt in succs(s)}) for s in states]

    owners = [s[-1] for s in states]
    names = [repr(s) for s in states]
    g = GameGraph.build(owners, succ_lists, names)
    pr = [prios(s) for s in states]
    game = TwoObjectiveGame(
        g,
        PriorityFn(np.array([p[0] for p in pr], dtype=np.int32)),
        PriorityFn(np.array([p[1] for p in pr], dtype=np.int32)))
    meta = {
        "kind": kind,
        "maze": {"x": m.x, "y": m.y, "seed": m.seed,
                 "walls": sorted(m.walls),
                 "one_way": {f"{k[0]},{k[1]}": v for k, v in sorted(m.one_way.items())}},
        "initial": 0,
        "states": [repr(s) for s in states],
    }
    return FactoryGame(game=game, kind=kind, initial=0,
                       states=tuple(states), meta=meta)


def gen_factory(x: int, y: int, w: int, c: int, kind: str,
                seed: int) -> FactoryGame:
    return maze_to_game(gen_maze(x, y, w, c, seed), kind)


def gen_random_objective(g: GameGraph, m: int, seed: int,
                         rng: Optional[random.Random] = None) -> PriorityFn:
    """Random priority function over 0..m: half the vertices split as
    evenly as possible across the priorities (remainder to the lowest),
    the other half uniform."""
    if m < 1:
        raise ValueError("need at least two priorities")
    rng = rng or random.Random(seed)
    prios = np.zeros(g.n, dtype=np.int32)
    selected = rng.sample(range(g.n), g.n // 2)
    base, rem = divmod(len(selected), m + 1)
    pos = 0
    for prio in range(m + 1):
        take = base + (1 if prio < rem else 0)
        for v in selected[pos:pos + take]:
            prios[v] = prio
        pos += take
    chosen = set(selected)
    for v in range(g.n):
        if v not in chosen:
            prios[v] = rng.randrange(m + 1)
    return PriorityFn(prios)
