import ast
import random

import pytest

from paritycontracts import (Lasso, brute_coop_two, eval_parity, negotiate,
                             parse_game, serialize_game)
from paritycontracts.benchgen import (Maze, gen_factory, gen_maze,
                                      gen_random_objective, maze_to_game)
from paritycontracts.graph import isomorphic

from .conftest import random_game


class TestMazeGeneration:
    @pytest.mark.parametrize("x,y", [(2, 2), (3, 3), (4, 3), (6, 6)])
    def test_invariants_over_many_seeds(self, x, y):
        for seed in range(200):
            m = gen_maze(x, y, x + y, 2, seed)
            assert len(m.one_way) <= 2
            for row in range(y - 1):
                passages = [c for c in range(x) if (c, row) not in m.walls]
                assert passages, "row pair sealed off"
                two_way = [c for c in passages if (c, row) not in m.one_way]
                assert two_way, "row pair traversable in one direction only"

    def test_wall_clamping(self):
        m = gen_maze(2, 2, 99, 0, seed=0)
        assert len(m.walls) == 1          # one slot must stay open
        assert not m.one_way

    def test_deterministic(self):
        assert gen_maze(4, 4, 5, 2, 17) == gen_maze(4, 4, 5, 2, 17)
        assert gen_maze(4, 4, 5, 2, 17) != gen_maze(4, 4, 5, 2, 18)

    def test_rejects_degenerate_sizes(self):
        with pytest.raises(ValueError):
            gen_maze(1, 3, 0, 0, 0)

    def test_one_way_direction_respected(self):
        m = Maze(2, 2, frozenset({(0, 0)}), {(1, 0): "up"}, seed=0)
        assert m.passable((1, 0), (1, 1))
        assert not m.passable((1, 1), (1, 0))
        assert not m.passable((0, 0), (0, 1))   # walled
        assert m.passable((0, 0), (1, 0))       # horizontal always open


def independent_state_count(m: Maze) -> int:
    """Exhaustive enumeration of collision-free position pairs with turn."""
    cells = [(c, r) for c in range(m.x) for r in range(m.y)]
    return sum(2 for p1 in cells for p2 in cells if p1 != p2)


class TestFactoryGames:
    def test_state_space_bound_and_validation(self):
        m = gen_maze(2, 2, 0, 0, seed=0)
        fac = maze_to_game(m, "buchi")
        g = fac.game.graph
        assert g.n <= independent_state_count(m)
        # turn alternates along every edge
        for u, v in g.edges():
            assert fac.states[u][-1] != fac.states[v][-1]
        # collision-free
        for s in fac.states:
            assert s[0] != s[1]

    def test_buchi_priorities_follow_positions(self):
        fac = gen_factory(3, 3, 0, 0, "buchi", seed=0)
        for i, s in enumerate(fac.states):
            assert fac.game.p0[i] == (2 if s[0] == (2, 2) else 1)
            assert fac.game.p1[i] == (2 if s[1] == (0, 2) else 1)

    def test_parity_gadget_on_constructed_lassos(self):
        fac = gen_factory(3, 3, 0, 0, "parity", seed=0)
        g, p0, p1 = fac.game.graph, fac.game.p0, fac.game.p1
        rng = random.Random(0)
        # steer robot 1 around the a-b circuit while robot 2 idles
        found_phi1_only = False
        for _ in range(4000):
            v = rng.randrange(g.n)
            path, seen = [v], {v: 0}
            while True:
                v = int(rng.choice(list(g.successors(path[-1]))))
                if v in seen:
                    lasso = Lasso.of(path[:seen[v]], path[seen[v]:])
                    break
                seen[v] = len(path)
                path.append(v)
            win1 = eval_parity(lasso, p0)
            win2 = eval_parity(lasso, p1)
            cyc = [fac.states[u] for u in lasso.cycle]
            completes_r1 = any(s[2] == 2 for s in cyc)
            assert win1 == completes_r1
            if win1 and not win2:
                # robot 1 keeps reaching a, so robot 2 owes its b-c round
                assert any(s[0] == (2, 2) for s in cyc)
                assert not any(s[3] == 2 for s in cyc)
                found_phi1_only = True
        assert found_phi1_only

    def test_wall_free_3x3_is_realizable_from_start(self):
        fac = gen_factory(3, 3, 0, 0, "buchi", seed=0)
        g = fac.game
        out = negotiate(g.graph, g.p0, g.p1)
        assert out.status == "Compatible"
        assert fac.initial in out.joint_region

    def test_blocked_maze_is_unrealizable(self):
        # the only passage upward is a one-way corridor pointing down
        m = Maze(2, 3, frozenset({(0, 0), (0, 1)}),
                 {(1, 0): "down", (1, 1): "down"}, seed=0)
        fac = maze_to_game(m, "buchi")
        g = fac.game
        if g.graph.n <= 12:
            assert brute_coop_two(g.graph, g.p0, g.p1) == frozenset()
        out = negotiate(g.graph, g.p0, g.p1)
        assert out.joint_region == frozenset()

    def test_round_trips_through_text_format(self):
        fac = gen_factory(3, 3, 2, 1, "buchi", seed=5)
        game2 = parse_game(serialize_game(fac.game))
        assert isomorphic(fac.game.graph, game2.graph)
        # names decode back to the original product states
        assert ast.literal_eval(game2.graph.name_of(0)) == fac.states[0]

    def test_metadata_matches(self):
        fac = gen_factory(3, 3, 2, 1, "parity", seed=5)
        assert fac.meta["kind"] == "parity"
        assert fac.meta["initial"] == 0
        assert fac.meta["states"] == [repr(s) for s in fac.states]


class TestRandomObjectives:
    def test_deterministic(self):
        rng = random.Random(0)
        g, _ = random_game(rng, 20, 2)
        a = gen_random_objective(g, 4, seed=9)
        b = gen_random_objective(g, 4, seed=9)
        assert list(a.priorities) == list(b.priorities)

    def test_even_split_over_selected_half(self):
        rng = random.Random(1)
        g, _ = random_game(rng, 24, 2)
        p = gen_random_objective(g, 5, seed=2)
        assert p.priorities.max() <= 5
        # 12 selected vertices over 6 priorities: exactly 2 each, so every
        # priority class holds at least its structured quota
        for prio in range(6):
            assert len(p.priority_set(prio)) >= 2
        assert len(p.priorities) == 24

    def test_binary_range(self):
        rng = random.Random(2)
        g, _ = random_game(rng, 10, 2)
        p = gen_random_objective(g, 1, seed=0)
        assert set(p.priorities.tolist()) <= {0, 1}

    def test_rejects_zero_range(self):
        rng = random.Random(3)
        g, _ = random_game(rng, 4, 1)
        with pytest.raises(ValueError):
            gen_random_objective(g, 0, seed=0)
