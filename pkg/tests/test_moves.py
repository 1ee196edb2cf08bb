"""Tests for the local moves: validity, invertibility, and invariance of
the writhe-normalised value."""

import random

import pytest

from conftest import grow_with_moves, random_braid_link, random_vertex_graph
from knotgraph import catalog
from knotgraph.bracket import p_eval
from knotgraph.graphinv import CASIMIR_PLAIN, VASSILIEV, eval_graph
from knotgraph.moves import (KINK_VARIANTS, MoveError, applicable_moves,
                             apply_move, find_r1_minus, find_r2_minus,
                             find_r3, find_r4, find_r5, inverse_spec, r1_minus,
                             r1_plus, r2_minus, r2_plus, r3)


def _walk(rng, d, steps, allowed=None, cap=6):
    cur = d
    for _ in range(steps):
        cand = applicable_moves(cur)
        if allowed is not None:
            cand = [m for m in cand if m.move in allowed]
        if len(cur.crossings()) >= cap:
            cand = [m for m in cand if m.move not in ("R1+", "R2+")]
        if not cand:
            break
        cur = apply_move(cur, rng.choice(cand))
        assert cur.validate() == []
    return cur


def test_curl_insert_and_remove_are_inverse():
    rng = random.Random(21)
    for _ in range(10):
        d = random_braid_link(rng)
        arc = rng.choice(d.arcs)
        variant = rng.choice(sorted(KINK_VARIANTS))
        kinked = r1_plus(d, arc, variant)
        assert kinked.validate() == []
        assert len(kinked.crossings()) == len(d.crossings()) + 1
        sites = find_r1_minus(kinked)
        assert sites
        back = [r1_minus(kinked, s.site[0]) for s in sites]
        assert any(b.same_as(d) for b in back)


def test_slide_insert_and_remove_are_inverse():
    rng = random.Random(22)
    for _ in range(10):
        d = random_braid_link(rng)
        a1, a2 = rng.sample(list(d.arcs), 2)
        pushed = r2_plus(d, a1, a2)
        assert pushed.validate() == []
        assert len(pushed.crossings()) == len(d.crossings()) + 2
        assert any(r2_minus(pushed, *s.site).same_as(d)
                   for s in find_r2_minus(pushed))


def test_r1_minus_rejects_non_curls():
    d = catalog.named_diagram("trefoil+")
    with pytest.raises(MoveError):
        r1_minus(d, "c0")


def test_r2_minus_rejects_non_cancelling_pairs():
    d = catalog.named_diagram("hopf+")
    with pytest.raises(MoveError):
        r2_minus(d, "n0", "n1")


def test_triangle_slide_preserves_the_value():
    rng = random.Random(23)
    found = 0
    for _ in range(60):
        d = grow_with_moves(rng, random_braid_link(rng), 2, cap=6)
        sites = find_r3(d)
        if not sites:
            continue
        found += 1
        m = rng.choice(sites)
        after = r3(d, *m.site)
        assert after.validate() == []
        assert p_eval(after) == p_eval(d)
    assert found >= 10


def test_vertex_slides_preserve_all_schemes():
    # push a strand across both arcs at a vertex to stage slide sites
    rng = random.Random(24)
    found4 = found5 = 0
    for _ in range(25):
        base = random_vertex_graph(rng, steps=rng.randint(0, 1))
        v = rng.choice(base.vertices())
        at_v = [a for a in base.arcs if v in (a[0][0], a[1][0])]
        if len(at_v) < 2:
            continue
        g = r2_plus(base, *rng.sample(at_v, 2))
        assert g.validate() == []
        for finder, label in ((find_r4, "R4"), (find_r5, "R5")):
            for m in finder(g)[:2]:
                after = apply_move(g, m)
                assert after.validate() == []
                for scheme in (VASSILIEV, CASIMIR_PLAIN):
                    assert eval_graph(after, scheme) == eval_graph(g, scheme)
                if label == "R4":
                    found4 += 1
                else:
                    found5 += 1
    assert found4 >= 5 and found5 >= 5


def test_self_inverse_moves_round_trip():
    rng = random.Random(25)
    for _ in range(25):
        g = random_vertex_graph(rng, steps=1)
        for m in applicable_moves(g):
            if m.move not in ("R3", "R4", "R5"):
                continue
            after = apply_move(g, m)
            back = apply_move(after, inverse_spec(g, after, m))
            assert back.same_as(g)


def test_insertion_moves_round_trip_via_inverse_spec():
    rng = random.Random(26)
    for _ in range(15):
        d = random_braid_link(rng)
        for m in applicable_moves(d):
            if m.move not in ("R1+", "R2+"):
                continue
            after = apply_move(d, m)
            inv = inverse_spec(d, after, m)
            assert apply_move(after, inv).same_as(d)
            break


def test_random_walks_preserve_the_normalised_value():
    rng = random.Random(27)
    for _ in range(40):
        d = random_braid_link(rng)
        before = p_eval(d)
        after = _walk(rng, d, 4)
        assert p_eval(after) == before


def test_applicable_moves_all_apply():
    rng = random.Random(28)
    for _ in range(10):
        g = random_vertex_graph(rng, steps=1)
        for m in applicable_moves(g):
            assert apply_move(g, m).validate() == []
