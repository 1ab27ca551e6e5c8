"""Hole enumeration, residue coverage, peripherality, and hole families.

A hole is an induced cycle of length at least 4. Enumeration is delegated to
the selected kernel (compiled or pure); everything here works with canonical
Hole values: the vertex sequence starts at the cycle's minimum vertex and
the second vertex is the smaller of the anchor's two cycle-neighbors, so
each hole appears exactly once up to rotation and reflection.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .budget import Budget, ensure_budget
from .errors import BudgetExceededError, ChordError, InputError
from .graph import Graph, bits, mask_of
from .invariants import chromatic_number
from .kernels import find_holes


@dataclass(frozen=True, order=True)
class Hole:
    """An induced cycle of length >= 4, in canonical vertex order."""

    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices)

    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)

    def residue(self, ell: int) -> int:
        return self.length % ell

    def validate(self, g: Graph) -> None:
        """Raise unless this is a chordless cycle of g in canonical form."""
        vs = self.vertices
        k = len(vs)
        if k < 4:
            raise InputError(f"hole length {k} is below 4")
        if len(set(vs)) != k:
            raise InputError("hole vertices are not distinct")
        for v in vs:
            g.check_vertex(v)
        for i in range(k):
            for j in range(i + 1, k):
                consecutive = j - i == 1 or (i == 0 and j == k - 1)
                if g.has_edge(vs[i], vs[j]) != consecutive:
                    if consecutive:
                        raise InputError(
                            f"hole vertices {vs[i]} and {vs[j]} are not adjacent"
                        )
                    raise ChordError(vs[i], vs[j])
        if vs[0] != min(vs) or vs[1] > vs[-1]:
            raise InputError("hole is not in canonical rotation")


def canonical_hole(vertices: Sequence[int]) -> Hole:
    """Canonicalize a cyclic vertex sequence into a Hole."""
    vs = list(vertices)
    k = len(vs)
    a = vs.index(min(vs))
    rot = vs[a:] + vs[:a]
    if rot[-1] < rot[1]:
        rot = [rot[0]] + rot[:0:-1]
    return Hole(tuple(rot))


@dataclass(frozen=True)
class ResidueCoverage:
    """Residues mod ell realized by hole lengths, with one witness each."""

    modulus: int
    witnesses: dict[int, Hole]

    @property
    def covered(self) -> frozenset[int]:
        return frozenset(self.witnesses)

    @property
    def complete(self) -> bool:
        return len(self.witnesses) == self.modulus


def enumerate_holes(
    g: Graph,
    min_len: int = 4,
    max_len: int | None = None,
    budget: Budget | None = None,
) -> Iterator[Hole]:
    """Stream each hole of g exactly once, canonically oriented.

    On budget exhaustion raises BudgetExceededError; holes already yielded
    remain valid partial results.
    """
    if min_len < 4:
        raise InputError("minimum hole length is 4")
    budget = ensure_budget(budget)
    stream = find_holes(
        g.adjacency_masks(), g.n, min_len, max_len, budget.remaining
    )
    count = 0
    try:
        for vs in stream:
            count += 1
            yield Hole(vs)
    except BudgetExceededError as exc:
        budget.used = budget.limit if budget.limit is not None else budget.used
        raise BudgetExceededError(
            str(exc), partial=count
        ) from exc


def is_d_peripheral(
    g: Graph, h: Hole, d: int, budget: Budget | None = None
) -> tuple[bool, frozenset[int]]:
    """Is h d-peripheral in g? Also returns the exterior set X.

    X is the set of vertices outside the hole with no neighbor on it — the
    unique maximal such set, which suffices since chromatic number is
    monotone under taking induced subgraphs. The hole is d-peripheral when
    chi(G[X]) > d.
    """
    h.validate(g)
    exterior = frozenset(g.vertices()) - g.closed_neighborhood(h.vertices)
    sub, _ = g.induced_subgraph(exterior)
    chi, _ = chromatic_number(sub, budget)
    return chi > d, exterior


def residue_coverage(
    g: Graph,
    ell: int,
    d: int | None = None,
    min_len: int = 4,
    max_len: int | None = None,
    budget: Budget | None = None,
) -> ResidueCoverage:
    """Residues mod ell realized by (optionally d-peripheral) hole lengths.

    Keeps the first witness per residue in enumeration order. Exhaustive
    within the length window, so stops early once all residues are covered.
    """
    if ell < 1:
        raise InputError("modulus must be at least 1")
    budget = ensure_budget(budget)
    witnesses: dict[int, Hole] = {}
    for hole in enumerate_holes(g, min_len, max_len, budget):
        r = hole.residue(ell)
        if r in witnesses:
            continue
        if d is not None and not is_d_peripheral(g, hole, d, budget)[0]:
            continue
        witnesses[r] = hole
        if len(witnesses) == ell:
            break
    return ResidueCoverage(modulus=ell, witnesses=witnesses)


def anticomplete_hole_family(
    g: Graph,
    specs: Sequence[tuple[int, int]],
    budget: Budget | None = None,
) -> list[Hole] | None:
    """A pairwise-anticomplete hole family matching each (p_i, q_i) spec.

    Returns holes H_1..H_n with H_i of length p_i mod q_i and no edges (or
    shared vertices) between distinct members, or None when exhaustive
    search proves no such family exists. Budget exhaustion raises — an
    indeterminate outcome, deliberately distinct from the verified None.
    """
    for p, q in specs:
        if q < 1:
            raise InputError("residue modulus must be at least 1")
    if not specs:
        return []
    budget = ensure_budget(budget)
    holes = sorted(enumerate_holes(g, budget=budget), key=lambda h: (h.length, h.vertices))
    adj = g.adjacency_masks()
    closed = []
    for h in holes:
        m = mask_of(h.vertices)
        for v in h.vertices:
            m |= adj[v]
        closed.append(m)
    by_spec: list[list[int]] = [
        [i for i, h in enumerate(holes) if h.length % q == p % q]
        for p, q in specs
    ]
    chosen: list[int] = []

    def extend(spec_idx: int, used: int) -> bool:
        if spec_idx == len(specs):
            return True
        budget.tick()
        for i in by_spec[spec_idx]:
            # anticomplete to all chosen holes: no vertex of this hole lies
            # in or next to any of them
            if used & mask_of(holes[i].vertices):
                continue
            chosen.append(i)
            if extend(spec_idx + 1, used | closed[i]):
                return True
            chosen.pop()
        return False

    try:
        if extend(0, 0):
            return [holes[i] for i in chosen]
    except BudgetExceededError as exc:
        raise BudgetExceededError(
            "family search budget exceeded; existence undetermined",
            partial=[holes[i] for i in chosen],
        ) from exc
    return None


def consecutive_hole_pairs(
    g: Graph, ell: int, budget: Budget | None = None
) -> list[tuple[int, Hole, Hole]]:
    """All lengths t > ell with holes of lengths t and t+1, with witnesses."""
    budget = ensure_budget(budget)
    first: dict[int, Hole] = {}
    for hole in enumerate_holes(g, budget=budget):
        first.setdefault(hole.length, hole)
    return [
        (t, first[t], first[t + 1])
        for t in sorted(first)
        if t > ell and t + 1 in first
    ]
