import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from paritycontracts import (CondLiveGroup, ConflictAt, Lasso, LiveGroup,
                             PriorityFn, Template, buchi_temp, check_template,
                             cobuchi_temp, conjoin, eval_parity, eval_template,
                             extract_strategy, run_profile)

from .conftest import random_game

A, B, C, D = 0, 1, 2, 3


def live(g, edges):
    return Template.live(g, [LiveGroup.of(edges)])


def test_conjoin_unions_components(example_game):
    t1 = Template(unsafe=frozenset({(A, B)}), colive=frozenset({(B, B)}))
    t2 = live(example_game, [(A, C)])
    t = conjoin(t1, t2)
    assert t.unsafe == {(A, B)}
    assert t.colive == {(B, B)}
    assert len(t.cond_live) == 1


def test_conjoin_deduplicates_groups(example_game):
    t = live(example_game, [(A, C)])
    assert conjoin(t, t) == t


def test_lasso_validation(example_game):
    Lasso.of([A, B, D], [C]).validate(example_game)
    with pytest.raises(ValueError):
        Lasso.of([A], [B, D, C]).validate(example_game)  # (c,b) missing
    with pytest.raises(ValueError):
        Lasso.of([], [])


def test_eval_parity(visit_c):
    assert eval_parity(Lasso.of([A], [C]), visit_c)
    assert not eval_parity(Lasso.of([C], [A]), visit_c)


def test_eval_template_unsafe_anywhere(example_game):
    t = Template(unsafe=frozenset({(A, B)}))
    assert not eval_template(Lasso.of([A], [B]), t)       # stem edge
    assert eval_template(Lasso.of([], [A]), t)


def test_eval_template_colive_only_on_cycle():
    t = Template(colive=frozenset({(A, B)}))
    assert eval_template(Lasso.of([A], [B]), t)           # taken once, fine
    assert not eval_template(Lasso.of([], [A, B, D, C]), t)


def test_eval_template_live_groups(example_game):
    t = live(example_game, [(B, D)])
    # b recurs without ever leaving to d: group violated
    assert not eval_template(Lasso.of([], [B]), t)
    assert eval_template(Lasso.of([], [B, D, C, A]), t)
    # source does not recur: group vacuous
    assert eval_template(Lasso.of([B], [D, C]), t)


def test_eval_template_conditional_gate(example_game):
    t = Template(cond_live=(CondLiveGroup.of({C}, [LiveGroup.of([(B, D)])]),))
    # condition vertex c never recurs, so the group never fires
    assert eval_template(Lasso.of([], [B]), t)
    # with the condition set to b itself, the same cycle is a violation
    gated = Template(cond_live=(CondLiveGroup.of({B}, [LiveGroup.of([(B, D)])]),))
    assert not eval_template(Lasso.of([], [B]), gated)
    assert eval_template(Lasso.of([], [B, D, C, A]), gated)


def test_check_template_vertex_conflict(example_game):
    g = example_game
    t = Template(unsafe=frozenset({(D, C)}))
    res = check_template(g, t)
    assert not res.conflict_free
    assert res.bad_vertices == {D}


def test_check_template_group_conflict(example_game):
    g = example_game
    t = conjoin(live(g, [(B, D)]), Template(colive=frozenset({(B, D)})))
    res = check_template(g, t)
    assert not res.conflict_free
    assert res.bad_groups == ((frozenset({(B, D)}), B),)
    assert not res.bad_vertices                    # b still has (b,b)


def test_check_template_cross_pair_detects_conflict(example_game):
    g = example_game
    psi0 = buchi_temp(g, {C}, 0).csm.assumption
    pi1_avoid_d = cobuchi_temp(g, {A, B, C}, 1).csm.strategy
    res = check_template(g, conjoin(psi0, pi1_avoid_d))
    assert not res.conflict_free
    assert res.bad_groups == ((frozenset({(B, D)}), B),)


def test_check_template_cross_pair_clean(example_game):
    g = example_game
    psi1 = cobuchi_temp(g, {A, C, D}, 1).csm.assumption
    pi0 = buchi_temp(g, {C}, 0).csm.strategy
    assert check_template(g, conjoin(psi1, pi0)).conflict_free


def test_extract_strategy_round_robin(example_game):
    g = example_game
    s = extract_strategy(g, Template(colive=frozenset({(A, A)})), 0)
    assert s.allowed[A] == ((A, B), (A, C))
    assert [s.move(A) for _ in range(4)] == [B, C, B, C]


def test_extract_strategy_raises_on_dead_vertex(example_game):
    with pytest.raises(ConflictAt):
        extract_strategy(example_game, Template(unsafe=frozenset({(D, C)})), 0)


def test_run_profile_is_a_valid_lasso(example_game):
    g = example_game
    s0 = extract_strategy(g, Template(), 0)
    s1 = extract_strategy(g, Template(), 1)
    lasso = run_profile(g, s0, s1, A)
    lasso.validate(g)


def test_run_profile_cursor_rotation_reaches_target(example_game):
    g = example_game
    # restrict player 1 at b to d so every play from b funnels into c
    s0 = extract_strategy(g, Template(colive=frozenset({(A, A), (A, B)})), 0)
    s1 = extract_strategy(g, Template(colive=frozenset({(B, B), (C, A)})), 1)
    lasso = run_profile(g, s0, s1, B)
    assert C in lasso.cycle


@st.composite
def lasso_and_templates(draw):
    rng = random.Random(draw(st.integers(0, 10_000)))
    g, p = random_game(rng, draw(st.integers(2, 6)), 3)
    v = rng.randrange(g.n)
    path = [v]
    seen = {v: 0}
    while True:
        v = int(rng.choice(list(g.successors(path[-1]))))
        if v in seen:
            lasso = Lasso.of(path[:seen[v]], path[seen[v]:])
            break
        seen[v] = len(path)
        path.append(v)

    def rand_template():
        edges = list(g.edges())
        unsafe = frozenset(e for e in edges if rng.random() < 0.15)
        colive = frozenset(e for e in edges if rng.random() < 0.15)
        cond = ()
        if rng.random() < 0.6:
            group = [e for e in edges if rng.random() < 0.3]
            if group:
                cond = (CondLiveGroup.of(
                    [u for u in range(g.n) if rng.random() < 0.5],
                    [LiveGroup.of(group)]),)
        return Template(unsafe=unsafe, colive=colive, cond_live=cond)

    return lasso, rand_template(), rand_template()


@settings(max_examples=120, deadline=None)
@given(lasso_and_templates())
def test_conjunction_is_logical_and(args):
    lasso, t1, t2 = args
    assert eval_template(lasso, conjoin(t1, t2)) == (
        eval_template(lasso, t1) and eval_template(lasso, t2))
