import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from holelab.budget import Budget
from holelab.errors import BudgetExceededError, ChordError, InputError
from holelab.graph import Graph
from holelab.holes import (
    Hole,
    anticomplete_hole_family,
    canonical_hole,
    consecutive_hole_pairs,
    enumerate_holes,
    is_d_peripheral,
    residue_coverage,
)

from conftest import cycle_graph, oracle_holes, petersen_graph, random_graph


def test_hole_properties():
    h = Hole((0, 2, 5, 3))
    assert h.length == 4
    assert h.vertex_set() == frozenset({0, 2, 3, 5})
    assert h.residue(3) == 1


def test_validate_catches_defects():
    g = Graph(6, cycle_graph(6))
    Hole((0, 1, 2, 3, 4, 5)).validate(g)
    with pytest.raises(InputError):
        Hole((0, 1, 2)).validate(g)  # too short
    with pytest.raises(InputError):
        Hole((0, 1, 2, 3)).validate(g)  # 3-0 is not an edge
    with pytest.raises(InputError):
        Hole((1, 2, 3, 4, 5, 0)).validate(g)  # wrong rotation
    chorded = Graph(5, cycle_graph(5) + [(0, 2)])
    with pytest.raises(ChordError) as exc:
        Hole((0, 1, 2, 3, 4)).validate(chorded)
    assert set(exc.value.chord) == {0, 2}


@settings(max_examples=80, deadline=None)
@given(st.integers(4, 10), st.integers(0, 20), st.data())
def test_canonical_hole_kills_rotation_and_reflection(k, rot, data):
    base = list(range(0, 2 * k, 2))
    random.Random(7).shuffle(base)
    rotated = base[rot % k :] + base[: rot % k]
    if data.draw(st.booleans()):
        rotated.reverse()
    assert canonical_hole(rotated) == canonical_hole(base)
    vs = canonical_hole(base).vertices
    assert vs[0] == min(vs) and vs[1] < vs[-1]


def test_petersen_hole_census():
    g = petersen_graph()
    holes = list(enumerate_holes(g))
    by_len = {}
    for h in holes:
        by_len[h.length] = by_len.get(h.length, 0) + 1
    assert by_len == {5: 12, 6: 10}
    for h in holes:
        h.validate(g)
    assert len({h.vertices for h in holes}) == 22


def test_enumerate_matches_oracle():
    rng = random.Random(31)
    for _ in range(40):
        g = random_graph(rng, rng.randrange(4, 10), rng.uniform(0.2, 0.6))
        got = {h.vertex_set() for h in enumerate_holes(g)}
        assert got == oracle_holes(g)


def test_min_len_below_four_rejected():
    with pytest.raises(InputError):
        list(enumerate_holes(Graph(5, cycle_graph(5)), min_len=3))


def test_d_peripheral():
    # C4 plus a far-away triangle: chi of the exterior is 3
    g = Graph(7, cycle_graph(4) + [(4, 5), (5, 6), (4, 6)])
    hole = Hole((0, 1, 2, 3))
    ok, exterior = is_d_peripheral(g, hole, 2)
    assert ok and exterior == frozenset({4, 5, 6})
    ok3, _ = is_d_peripheral(g, hole, 3)
    assert not ok3
    # within one graph, peripherality is antitone in d
    for d in range(4):
        if is_d_peripheral(g, hole, d + 1)[0]:
            assert is_d_peripheral(g, hole, d)[0]


def test_residue_coverage():
    g = petersen_graph()
    cov = residue_coverage(g, 3)
    assert cov.covered == frozenset({2, 0})  # lengths 5 and 6
    assert not cov.complete
    assert cov.witnesses[2].length == 5
    assert cov.witnesses[0].length == 6
    full = residue_coverage(g, 2)
    assert full.complete and full.modulus == 2
    with pytest.raises(InputError):
        residue_coverage(g, 0)


def test_residue_coverage_with_peripherality():
    # hole plus distant odd cycle: the C4 is 2-peripheral, nothing is
    # 3-peripheral
    g = Graph(9, cycle_graph(4) + cycle_graph(5, offset=4))
    cov = residue_coverage(g, 4, d=2)
    assert cov.witnesses[0].length == 4
    assert 1 not in cov.covered  # the C5 exterior contains the C4, chi = 2
    cov3 = residue_coverage(g, 4, d=3)
    assert cov3.covered == frozenset()


def test_anticomplete_hole_family():
    g = Graph(9, cycle_graph(4) + cycle_graph(5, offset=4))
    family = anticomplete_hole_family(g, [(0, 4), (1, 4)])
    assert family is not None
    lengths = sorted(h.length for h in family)
    assert lengths == [4, 5]
    assert g.is_anticomplete(family[0].vertices, family[1].vertices)
    # two disjoint C4s cannot be found: only one 4-hole exists
    assert anticomplete_hole_family(g, [(0, 4), (0, 4)]) is None
    assert anticomplete_hole_family(g, []) == []
    with pytest.raises(InputError):
        anticomplete_hole_family(g, [(1, 0)])


def test_anticomplete_family_budget_is_indeterminate():
    g = Graph(9, cycle_graph(4) + cycle_graph(5, offset=4))
    with pytest.raises(BudgetExceededError):
        anticomplete_hole_family(g, [(0, 4), (0, 4)], budget=Budget(4))


def test_consecutive_hole_pairs():
    g = petersen_graph()
    pairs = consecutive_hole_pairs(g, 4)
    assert [t for t, _, _ in pairs] == [5]
    t, h5, h6 = pairs[0]
    assert (h5.length, h6.length) == (5, 6)
    # threshold at or above the pair suppresses it
    assert consecutive_hole_pairs(g, 5) == []
    assert consecutive_hole_pairs(Graph(4, cycle_graph(4)), 4) == []
