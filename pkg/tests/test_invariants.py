import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from holelab.budget import Budget
from holelab.errors import BudgetExceededError, InputError
from holelab.graph import Graph
from holelab.invariants import (
    chi_rho,
    chromatic_number,
    clique_number,
    invariant_report,
)

from conftest import (
    complete_graph,
    cycle_graph,
    oracle_chromatic_number,
    oracle_clique_number,
    petersen_graph,
    random_graph,
)


def test_clique_number_known_values():
    assert clique_number(Graph(0))[0] == 0
    assert clique_number(Graph(3))[0] == 1
    assert clique_number(complete_graph(6))[0] == 6
    assert clique_number(petersen_graph())[0] == 2
    assert clique_number(Graph(5, cycle_graph(5)))[0] == 2


def test_clique_witness_is_a_clique():
    rng = random.Random(7)
    for _ in range(40):
        g = random_graph(rng, rng.randrange(1, 11), rng.uniform(0.2, 0.8))
        size, witness = clique_number(g)
        assert len(witness) == size
        assert g.is_clique(witness)
        assert size == oracle_clique_number(g)


def test_chromatic_number_known_values():
    assert chromatic_number(Graph(0)) == (0, ())
    assert chromatic_number(Graph(4))[0] == 1
    assert chromatic_number(complete_graph(5))[0] == 5
    assert chromatic_number(Graph(5, cycle_graph(5)))[0] == 3
    assert chromatic_number(Graph(6, cycle_graph(6)))[0] == 2
    assert chromatic_number(petersen_graph())[0] == 3


def test_coloring_witness_is_proper_and_tight():
    rng = random.Random(21)
    for _ in range(40):
        g = random_graph(rng, rng.randrange(1, 10), rng.uniform(0.2, 0.8))
        chi, coloring = chromatic_number(g)
        assert len(coloring) == g.n
        assert all(coloring[u] != coloring[v] for u, v in g.edges())
        assert len(set(coloring)) == max(chi, 0 if g.n else 0)
        assert chi == oracle_chromatic_number(g)


def test_chi_rho_values():
    g = petersen_graph()
    # radius-1 balls in a triangle-free graph are stars: two-colorable
    assert chi_rho(g, 1) == 2
    # radius-2 balls cover all of the Petersen graph (diameter 2)
    assert chi_rho(g, 2) == 3
    assert chi_rho(Graph(0), 1) == 0
    with pytest.raises(InputError):
        chi_rho(g, 0)


def test_chi_rho_monotone_in_radius():
    rng = random.Random(3)
    for _ in range(20):
        g = random_graph(rng, 9, 0.4)
        values = [chi_rho(g, rho) for rho in (1, 2, 3)]
        assert values == sorted(values)
        chi, _ = chromatic_number(g)
        assert values[-1] <= chi


def test_invariant_report_bundle():
    rep = invariant_report(petersen_graph(), radii=(1, 2))
    assert rep.omega == 2
    assert rep.chi == 3
    assert rep.chi_rho == {1: 2, 2: 3}
    assert petersen_graph().is_clique(rep.clique_witness)


def test_budget_carries_bracketing_bounds():
    g = complete_graph(12)
    with pytest.raises(BudgetExceededError) as exc:
        clique_number(g, Budget(5))
    assert 0 <= exc.value.lower <= 12
    assert exc.value.upper == 12

    with pytest.raises(BudgetExceededError) as exc:
        chromatic_number(petersen_graph(), Budget(1))
    assert exc.value.lower <= 3 <= exc.value.upper


@st.composite
def small_graphs(draw):
    n = draw(st.integers(min_value=0, max_value=8))
    edges = draw(
        st.lists(
            st.tuples(
                st.integers(0, max(n - 1, 0)), st.integers(0, max(n - 1, 0))
            ).filter(lambda e: e[0] != e[1]),
            max_size=20,
        )
    ) if n > 1 else []
    return Graph(n, edges)


@settings(max_examples=60, deadline=None)
@given(small_graphs())
def test_omega_le_chi_le_degree_bound(g):
    omega, _ = clique_number(g)
    chi, _ = chromatic_number(g)
    assert omega <= chi
    max_deg = max((g.degree(v) for v in g.vertices()), default=-1)
    assert chi <= max(max_deg + 1, 1 if g.n else 0)


@settings(max_examples=40, deadline=None)
@given(small_graphs())
def test_chi_matches_exhaustive_assignment(g):
    chi, _ = chromatic_number(g)
    assert chi == oracle_chromatic_number(g)
