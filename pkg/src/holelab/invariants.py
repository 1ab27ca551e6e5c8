"""Exact clique number, chromatic number, and local chromatic number.

All three searches are exact and budgeted: when the node budget trips they
raise BudgetExceededError carrying the best bracketing bounds found so far,
never a silent approximation. Branching ties always break toward the lowest
vertex index so witnesses are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .budget import Budget, ensure_budget
from .errors import BudgetExceededError, InputError
from .graph import Graph, bits


@dataclass(frozen=True)
class InvariantReport:
    """Exact invariant bundle for one graph."""

    omega: int
    chi: int
    chi_rho: dict[int, int] = field(default_factory=dict)
    clique_witness: frozenset[int] = frozenset()
    coloring_witness: tuple[int, ...] = ()


def clique_number(g: Graph, budget: Budget | None = None) -> tuple[int, frozenset[int]]:
    """Exact maximum clique size with a witness clique.

    Tomita-style branch and bound: pivot on the candidate vertex covering the
    most candidates, color-free bound |R| + |P|.
    """
    budget = ensure_budget(budget)
    adj = g.adjacency_masks()
    best_size = 0
    best_mask = 0

    def expand(r_mask: int, r_size: int, p_mask: int) -> None:
        nonlocal best_size, best_mask
        budget.tick(lower=best_size)
        if not p_mask:
            if r_size > best_size:
                best_size = r_size
                best_mask = r_mask
            return
        if r_size + p_mask.bit_count() <= best_size:
            return
        # pivot: candidate whose neighborhood covers most of the candidates
        pivot = -1
        pivot_cover = -1
        for v in bits(p_mask):
            cover = (adj[v] & p_mask).bit_count()
            if cover > pivot_cover:
                pivot, pivot_cover = v, cover
        branch = p_mask & ~adj[pivot]
        for v in bits(branch):
            expand(r_mask | (1 << v), r_size + 1, p_mask & adj[v])
            p_mask &= ~(1 << v)
            if r_size + p_mask.bit_count() <= best_size:
                return

    try:
        expand(0, 0, g.full_mask())
    except BudgetExceededError as exc:
        raise BudgetExceededError(
            "clique search budget exceeded",
            lower=best_size,
            upper=g.n,
            partial=frozenset(bits(best_mask)),
        ) from exc
    return best_size, frozenset(bits(best_mask))


def _greedy_coloring(g: Graph) -> list[int]:
    """Greedy coloring in descending-degree order; upper bound seed."""
    order = sorted(g.vertices(), key=lambda v: (-g.degree(v), v))
    adj = g.adjacency_masks()
    colors = [-1] * g.n
    for v in order:
        used = 0
        for w in bits(adj[v]):
            if colors[w] >= 0:
                used |= 1 << colors[w]
        c = 0
        while (used >> c) & 1:
            c += 1
        colors[v] = c
    return colors


def _k_colorable(
    g: Graph, k: int, clique: frozenset[int], budget: Budget
) -> list[int] | None:
    """Exact k-colorability by DSATUR-ordered backtracking.

    A maximum clique is pre-colored to break color symmetry. Returns a proper
    coloring with colors 0..k-1, or None.
    """
    n = g.n
    adj = g.adjacency_masks()
    colors = [-1] * n
    forbidden = [0] * n  # bitmask of colors blocked by colored neighbors
    full_k = (1 << k) - 1
    seed = sorted(clique)
    if len(seed) > k:
        return None
    for c, v in enumerate(seed):
        colors[v] = c
        for w in bits(adj[v]):
            forbidden[w] |= 1 << c

    order: list[int] = []  # assignment stack of vertices colored by search

    def pick() -> int:
        # highest saturation, then highest degree, then lowest index
        best, key = -1, None
        for v in range(n):
            if colors[v] >= 0:
                continue
            cand = (
                -(forbidden[v] & full_k).bit_count(),
                -adj[v].bit_count(),
                v,
            )
            if key is None or cand < key:
                best, key = v, cand
        return best

    def assign(v: int, c: int) -> list[int]:
        colors[v] = c
        touched = []
        bit = 1 << c
        for w in bits(adj[v]):
            if colors[w] < 0 and not forbidden[w] & bit:
                forbidden[w] |= bit
                touched.append(w)
        return touched

    def unassign(v: int, c: int, touched: list[int]) -> None:
        colors[v] = -1
        bit = 1 << c
        for w in touched:
            forbidden[w] &= ~bit

    def solve(remaining: int) -> bool:
        if remaining == 0:
            return True
        budget.tick()
        v = pick()
        avail = full_k & ~forbidden[v]
        # new-color symmetry: allow at most one color unused so far
        used_max = max((c for c in colors if c >= 0), default=-1)
        for c in bits(avail):
            if c > used_max + 1:
                break
            touched = assign(v, c)
            if solve(remaining - 1):
                return True
            unassign(v, c, touched)
        return False

    if solve(n - len(seed)):
        return colors
    return None


def chromatic_number(
    g: Graph, budget: Budget | None = None
) -> tuple[int, tuple[int, ...]]:
    """Exact chromatic number with a witness coloring.

    Iterative deepening from the clique lower bound up to the greedy upper
    bound. On budget exhaustion raises with the bracketing bounds proven so
    far in .lower / .upper.
    """
    budget = ensure_budget(budget)
    if g.n == 0:
        return 0, ()
    if g.edge_count == 0:
        return 1, (0,) * g.n
    omega, clique = clique_number(g, budget)
    greedy = _greedy_coloring(g)
    upper = max(greedy) + 1
    lower = omega
    witness = tuple(greedy)
    try:
        for k in range(lower, upper):
            coloring = _k_colorable(g, k, clique, budget)
            if coloring is not None:
                return k, tuple(coloring)
            lower = k + 1
    except BudgetExceededError as exc:
        raise BudgetExceededError(
            "coloring search budget exceeded",
            lower=lower,
            upper=upper,
            partial=witness,
        ) from exc
    return upper, witness


def chi_rho(g: Graph, rho: int, budget: Budget | None = None) -> int:
    """Maximum chromatic number over all closed rho-balls; 0 for the null graph."""
    if rho < 1:
        raise InputError("radius must be at least 1")
    budget = ensure_budget(budget)
    best = 0
    for v in g.vertices():
        ball, _ = g.induced_subgraph(g.ball(v, rho, closed=True))
        chi, _ = chromatic_number(ball, budget)
        best = max(best, chi)
    return best


def invariant_report(
    g: Graph, radii: tuple[int, ...] = (), budget: Budget | None = None
) -> InvariantReport:
    """Compute the full invariant bundle in one pass."""
    budget = ensure_budget(budget)
    omega, clique = clique_number(g, budget)
    chi, coloring = chromatic_number(g, budget)
    rho_values = {rho: chi_rho(g, rho, budget) for rho in radii}
    return InvariantReport(
        omega=omega,
        chi=chi,
        chi_rho=rho_values,
        clique_witness=clique,
        coloring_witness=coloring,
    )
