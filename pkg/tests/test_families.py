from __future__ import annotations

import itertools
from fractions import Fraction

import pytest

from oracles import wiener as oracle_wiener
from sweeps import closed_form_specs, partitions, sweep
from wienerkit.blocks import cut_vertices
from wienerkit.canon import graph_canonical_form, tree_canonical_code
from wienerkit.errors import BadParameters, NoClosedForm, NonIntegerResult
from wienerkit.families import (
    _exact,
    all_tags,
    build,
    caterpillar_max_wiener,
    closed_form_wiener,
    double_broom,
    has_closed_form,
    lollipop,
    lollipop_pendant_distance,
    parse_spec,
    spec,
    star_tree,
    vertex_distance_closed_form,
    wagner_partition,
    wiener_double_broom,
)
from wienerkit.metrics import diameter, distance_sums, wiener_index


def test_closed_forms_match_bfs_up_to_forty():
    checked, bad = sweep()
    assert bad == []
    assert checked > 180_000


def test_every_closed_form_family_is_swept():
    swept = {s.tag for s in closed_form_specs(20)}
    assert swept == {t for t in all_tags() if has_closed_form(t)}


def test_sweep_against_floyd_oracle_on_small_orders():
    for s in closed_form_specs(11):
        g = build(s)
        assert closed_form_wiener(s) == oracle_wiener(g.n, g.edges()), str(s)


# -- worked values -------------------------------------------------------------------


@pytest.mark.parametrize("text, expected", [
    ("cycle:n=9", 90),
    ("lollipop:n=10,g=8", 121),
    ("T7:n=9", 98),
    ("T9:n=9", 98),
    ("T8:n=9", 96),
    ("T21:t=2", 88),
    ("T1", 213), ("T2", 218), ("T3", 236), ("T4", 230), ("T5", 65), ("T6", 62),
    ("G7", 84), ("G8", 82), ("G9", 80), ("G10", 79),
])
def test_known_values(text, expected):
    s = parse_spec(text)
    assert closed_form_wiener(s) == expected
    assert wiener_index(build(s)) == expected


def test_vertex_distance_forms():
    assert vertex_distance_closed_form("path", 5, 0) == 10
    assert vertex_distance_closed_form("cycle", 7, 3) == 12
    assert vertex_distance_closed_form("path", 9, 4) == 20
    for n in range(1, 30):
        sums = distance_sums(build(spec("path", n=n)))
        assert [vertex_distance_closed_form("path", n, i) for i in range(n)] == sums
    for n in range(3, 30):
        assert set(distance_sums(build(spec("cycle", n=n)))) == {vertex_distance_closed_form("cycle", n, 0)}
    with pytest.raises(BadParameters):
        vertex_distance_closed_form("path", 5, 5)
    with pytest.raises(BadParameters):
        vertex_distance_closed_form("star", 5, 0)


def test_lollipop_pendant_distance():
    for g in range(3, 15):
        for n in range(g + 1, 25):
            assert lollipop_pendant_distance(n, g) == distance_sums(lollipop(n, g))[0]


def test_lollipop_shape():
    g = lollipop(9, 7)
    assert g.n == 9 and g.m == 9 and len(cut_vertices(g)) == 2
    for gg in range(3, 20):
        for n in range(gg + 1, 30):
            assert diameter(lollipop(n, gg)) == (n - gg) + gg // 2


def test_caterpillar_maximum_is_the_balanced_double_broom():
    for n in range(4, 30):
        for d in range(2, n):
            r = n - d + 1
            brooms = [wiener_double_broom(l, r - l, d - 1) for l in range(1, r)]
            assert caterpillar_max_wiener(n, d) == max(brooms)
            assert diameter(double_broom(1, r - 1, d - 1)) == d


def test_double_broom_with_two_and_three_leaves():
    # T(2,3,n-5) has diameter n-4 and coincides with T7
    for n in range(9, 21):
        b = double_broom(2, 3, n - 5)
        assert b.n == n and diameter(b) == n - 4
        assert tree_canonical_code(b) == tree_canonical_code(build(spec("T7", n=n)))


def test_star_tree_partition():
    assert wagner_partition(7) == (2, 2, 2)
    for n in range(3, 16):
        parts = wagner_partition(n)
        assert sum(parts) == n - 1
        best = max(closed_form_wiener(spec("startree", c=c)) for c in partitions(n - 1))
        assert closed_form_wiener(spec("startree", c=parts)) == best
    assert diameter(star_tree((2, 2, 2))) == 4
    assert wiener_index(star_tree((2, 2, 2))) == 48


# -- tagged graphs ------------------------------------------------------------------------------


def test_t21_and_g12_classes():
    for t in range(1, 8):
        g = build(spec("T21", t=t))
        assert g.n == 4 * t + 1 and g.is_tree()
        assert len(cut_vertices(g)) == 4 * t - 3 and diameter(g) == 2 * t
        h = build(spec("G12", t=t))
        assert h.n == 4 * t + 3 and len(cut_vertices(h)) == 4 * t - 1 and diameter(h) == 2 * t + 1


def test_g12_first_member_is_the_triangle_graph():
    assert graph_canonical_form(build(spec("G12", t=1))) == graph_canonical_form(build(spec("G3")))


def test_ordering_of_diameter_n_minus_4_candidates():
    for n in range(10, 41):
        w7 = closed_form_wiener(spec("T7", n=n))
        assert all(w7 > closed_form_wiener(spec(f"T{i}", n=n)) for i in (8, 9, 10))


def test_ordering_of_diameter_n_minus_5_candidates():
    for n in range(12, 41):
        w11 = closed_form_wiener(spec("T11", n=n))
        for i in range(12, 21):
            try:
                w = closed_form_wiener(spec(f"T{i}", n=n))
            except BadParameters:
                continue
            assert w11 > w, (n, i)


def test_candidate_diameters():
    for n in range(10, 21):
        for i in range(7, 11):
            assert diameter(build(spec(f"T{i}", n=n))) == n - 4
        for i in range(11, 21):
            try:
                g = build(spec(f"T{i}", n=n))
            except BadParameters:
                continue
            assert g.is_tree() and diameter(g) == n - 5


def test_candidate_minimum_orders():
    with pytest.raises(BadParameters):
        build(spec("T20", n=12))
    for tag in ("T18", "T19"):
        with pytest.raises(BadParameters):
            build(spec(tag, n=10))
        build(spec(tag, n=11))
    build(spec("T20", n=13))
    with pytest.raises(BadParameters):
        build(spec("T7", n=8))


def test_cyclic_graph_families():
    for tag, (k, d) in {"G3": (3, 3), "G7": (3, 4), "G8": (3, 4), "G9": (3, 4), "G10": (3, 4)}.items():
        g = build(spec(tag))
        assert g.is_connected() and len(cut_vertices(g)) == k and diameter(g) == d, tag
    assert len({graph_canonical_form(build(spec(f"G{i}"))) for i in range(13) if i not in (11, 12)}) == 11
    for tag in ("G0", "G1", "G2", "G4", "G5", "G6"):
        with pytest.raises(NoClosedForm):
            closed_form_wiener(spec(tag))


# -- parameters and parsing ------------------------------------------------------------------------


@pytest.mark.parametrize("text", [
    "lollipop:n=4,g=4", "lollipop:n=9,g=2", "doublebroom:l=0,k=1,d=3", "startree:c=0-2",
    "cycle:n=2", "path:n=0", "T21:t=0", "T11:n=9", "lollipop:n=9", "cycle:n=5,g=3",
    "nosuch:n=3", "T99:n=20", "cycle:n=x", "cycle:n",
])
def test_bad_parameters(text):
    with pytest.raises(BadParameters):
        closed_form_wiener(parse_spec(text))


def test_spec_round_trip():
    for text in ["lollipop:g=7,n=9", "doublebroom:d=4,k=3,l=2", "startree:c=2-3-3", "T21:t=2", "G3", "cycle:n=5"]:
        s = parse_spec(text)
        assert str(s) == text
        assert parse_spec(str(s)) == s
    assert parse_spec("Lollipop:n=9,g=7") == spec("lollipop", n=9, g=7)
    assert parse_spec("t7:n=9") == spec("T7", n=9)
    assert parse_spec("broom:l=1,k=1,d=2").tag == "doublebroom"


def test_exact_arithmetic_guard():
    with pytest.raises(NonIntegerResult):
        _exact(Fraction(7, 2))


def test_builders_are_deterministic():
    for s in itertools.islice(closed_form_specs(14), 0, None, 37):
        assert build(s) == build(s)
