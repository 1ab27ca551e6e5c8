"""Covers, multicovers, oddities, gradings, showers, jets, and their kin.

Each object holds its host graph by reference plus vertex-index sets, so
every axiom is checkable against the original adjacency. Verifiers report —
they list violated axioms rather than throwing on falsity. Extraction
procedures (refinement, oddity selection, jets, bloodlines, recirculators)
are deterministic: ties always break toward the lowest vertex index.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .budget import Budget, ensure_budget
from .errors import BudgetExceededError, ChordError, InputError, RefinementError
from .graph import Graph, bits, mask_of
from .holes import Hole, canonical_hole
from .invariants import chromatic_number, clique_number


# ---------------------------------------------------------------------------
# types


@dataclass(frozen=True)
class Multicover:
    """A family (N_x : x in X) multicovering a target set C."""

    host: Graph
    X: frozenset[int]
    families: dict[int, frozenset[int]]
    C: frozenset[int]

    @property
    def length(self) -> int:
        return len(self.X)

    def family_union(self) -> frozenset[int]:
        out: frozenset[int] = frozenset()
        for n in self.families.values():
            out |= n
        return out

    def ground_set(self) -> frozenset[int]:
        return self.X | self.family_union() | self.C


@dataclass(frozen=True)
class CrestData:
    """Crest of a stably k-crested multicover.

    apexes lists a_1..a_k; subdivisions maps (i, x) to the vertex a_{ix}
    sitting between apex a_i and multicover apex x.
    """

    apexes: tuple[int, ...]
    subdivisions: dict[tuple[int, int], int]

    @property
    def k(self) -> int:
        return len(self.apexes)


@dataclass(frozen=True)
class Oddity:
    """An induced path of length 3 or 5 between two multicover apexes."""

    path: tuple[int, ...]
    multicover: Multicover

    @property
    def length(self) -> int:
        return len(self.path) - 1


@dataclass(frozen=True)
class Grading:
    """An ordered partition (W_1..W_n) of a ground set."""

    host: Graph
    parts: tuple[frozenset[int], ...]
    tau: int | None = None

    def ground_set(self) -> frozenset[int]:
        out: frozenset[int] = frozenset()
        for w in self.parts:
            out |= w
        return out

    def part_of(self, v: int) -> int | None:
        for i, w in enumerate(self.parts):
            if v in w:
                return i
        return None


@dataclass(frozen=True)
class Shower:
    """Layers L_0..L_k with a drain s in the last layer."""

    host: Graph
    layers: tuple[frozenset[int], ...]
    drain: int

    @property
    def k(self) -> int:
        return len(self.layers) - 1

    @property
    def head(self) -> int:
        (h,) = self.layers[0]
        return h

    def vertex_set(self) -> frozenset[int]:
        out: frozenset[int] = frozenset()
        for layer in self.layers:
            out |= layer
        return out

    def floor(self) -> frozenset[int]:
        """Vertices of the last layer with a neighbor in the layer above."""
        if self.k == 0:
            return frozenset()
        g = self.host
        above = mask_of(self.layers[-2])
        return frozenset(
            v for v in self.layers[-1] if g.adjacency_mask(v) & above
        )


@dataclass(frozen=True)
class RefinementBudget:
    """Caller-supplied chromatic thresholds, one per refinement round."""

    thresholds: tuple[int, ...]
    tau: int | None = None

    def __post_init__(self):
        if any(c < 0 for c in self.thresholds):
            raise InputError("refinement thresholds must be nonnegative")
        if self.tau is not None and self.tau < 0:
            raise InputError("ambient bound must be nonnegative")


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of a structure verifier: axioms checked, first failure kept."""

    valid: bool
    failures: tuple[str, ...] = ()
    cover_clique_number: int | None = None

    @property
    def first_failure(self) -> str | None:
        return self.failures[0] if self.failures else None


@dataclass(frozen=True)
class RefinementRound:
    """One round of multicover refinement."""

    apex: int
    A: frozenset[int]
    C: frozenset[int]
    D: frozenset[int]
    covered_side: str  # "C" or "D": the side A covers


@dataclass(frozen=True)
class JetSummary:
    """Residue summary of a shower's d-jetset."""

    modulus: int
    d: int
    lengths: frozenset[int]
    residues: frozenset[int]
    completeness: int  # largest t with the jetset (t, ell)-complete; 0 if none


# ---------------------------------------------------------------------------
# multicovers


def _is_cover_of(g: Graph, x: int, n_x: frozenset[int], c: frozenset[int]) -> str | None:
    """None if (x, N_x) is a cover of C; otherwise the violated clause."""
    adj_x = g.adjacency_mask(x)
    if x in n_x or x in c:
        return f"apex {x} lies in its own family or the target"
    if any(not (adj_x >> v) & 1 for v in n_x):
        return f"family of apex {x} contains a non-neighbor of it"
    if n_x & c:
        return f"family of apex {x} intersects the target"
    if adj_x & mask_of(c):
        return f"apex {x} has a neighbor in the target"
    if not all(g.adjacency_mask(v) & mask_of(n_x) for v in c):
        return f"family of apex {x} does not cover the target"
    return None


def verify_multicover(
    mc: Multicover,
    stable: bool = False,
    crest: CrestData | None = None,
    budget: Budget | None = None,
) -> VerificationReport:
    """Check every multicover axiom; optionally stability and a crest.

    Reports the cover clique number (clique number of the subgraph induced
    on the union of the families) whenever the axioms allow computing it.
    """
    g = mc.host
    failures: list[str] = []
    try:
        for v in mc.ground_set():
            g.check_vertex(v)
        if set(mc.families) != set(mc.X):
            raise InputError("families are not indexed exactly by X")
    except InputError as exc:
        return VerificationReport(False, (str(exc),))
    if not g.is_stable(mc.X):
        failures.append("X is not stable")
    for x in sorted(mc.X):
        violation = _is_cover_of(g, x, mc.families[x], mc.C)
        if violation:
            failures.append(violation)
    seen: dict[int, int] = {}
    for x in sorted(mc.X):
        for v in mc.families[x] | {x}:
            if v in seen:
                failures.append(
                    f"vertex {v} shared by the closed families of apexes "
                    f"{seen[v]} and {x}"
                )
            seen[v] = x
    for x in sorted(mc.X):
        n_mask = mask_of(mc.families[x])
        for y in sorted(mc.X):
            if y != x and g.adjacency_mask(y) & n_mask:
                failures.append(
                    f"apex {y} has a neighbor in the family of apex {x}"
                )
    if stable:
        for x in sorted(mc.X):
            if not g.is_stable(mc.families[x]):
                failures.append(f"family of apex {x} is not stable")
    if crest is not None:
        failures.extend(_crest_failures(mc, crest))
    union = mc.family_union()
    ccn: int | None = None
    try:
        sub, _ = g.induced_subgraph(union)
        ccn, _ = clique_number(sub, budget)
    except (InputError, BudgetExceededError):
        pass
    return VerificationReport(not failures, tuple(failures), ccn)


def _crest_failures(mc: Multicover, crest: CrestData) -> list[str]:
    """The five crest axioms, as failure strings."""
    g = mc.host
    out: list[str] = []
    ground = mc.ground_set()
    xs = sorted(mc.X)
    k = crest.k
    crest_vertices = list(crest.apexes) + [
        crest.subdivisions[(i, x)] for i in range(k) for x in xs
        if (i, x) in crest.subdivisions
    ]
    if set(crest.subdivisions) != {(i, x) for i in range(k) for x in xs}:
        return ["crest subdivision vertices are not indexed by (apex, x) pairs"]
    if len(set(crest_vertices)) != len(crest_vertices):
        out.append("crest vertices are not all distinct")
    if any(v in ground for v in crest_vertices):
        out.append("a crest vertex lies in the multicover's ground set")
    ground_mask = mask_of(ground)
    sub_by_pair = crest.subdivisions
    for i in range(k):
        a_i = crest.apexes[i]
        if g.adjacency_mask(a_i) & ground_mask:
            out.append(f"crest apex a_{i + 1} has a neighbor in the ground set")
    for i in range(k):
        for x in xs:
            a_ix = sub_by_pair[(i, x)]
            if not g.has_edge(a_ix, x):
                out.append(f"subdivision vertex for (a_{i + 1}, {x}) misses {x}")
            extra = g.adjacency_mask(a_ix) & ground_mask & ~(1 << x)
            if extra:
                out.append(
                    f"subdivision vertex for (a_{i + 1}, {x}) touches the "
                    "ground set beyond its own apex"
                )
            if not g.has_edge(a_ix, crest.apexes[i]):
                out.append(
                    f"subdivision vertex for (a_{i + 1}, {x}) misses a_{i + 1}"
                )
            for j in range(k):
                if j != i and g.has_edge(a_ix, crest.apexes[j]):
                    out.append(
                        f"subdivision vertex for (a_{i + 1}, {x}) touches a_{j + 1}"
                    )
    for i in range(k):
        for j in range(i + 1, k):
            if g.has_edge(crest.apexes[i], crest.apexes[j]):
                out.append(f"crest apexes a_{i + 1}, a_{j + 1} are adjacent")
    for i in range(k):
        for j in range(k):
            for x in xs:
                for y in xs:
                    if x != y and g.has_edge(
                        sub_by_pair[(i, x)], sub_by_pair[(j, y)]
                    ):
                        out.append(
                            "subdivision vertices over distinct apexes "
                            f"({x}, {y}) are adjacent"
                        )
    return out


def verify_oddity(o: Oddity) -> VerificationReport:
    """Check the four oddity axioms against the multicover's host graph."""
    mc = o.multicover
    g = mc.host
    p = o.path
    failures: list[str] = []
    try:
        for v in p:
            g.check_vertex(v)
    except InputError as exc:
        return VerificationReport(False, (str(exc),))
    if len(set(p)) != len(p):
        failures.append("path vertices are not distinct")
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if g.has_edge(p[i], p[j]) != (j - i == 1):
                failures.append("path is not induced")
                break
        else:
            continue
        break
    if o.length not in (3, 5):
        failures.append(f"path length {o.length} is not 3 or 5")
    if not (p[0] in mc.X and p[-1] in mc.X):
        failures.append("path ends are not both in X")
    p_mask = mask_of(p)
    for x in sorted(mc.X - {p[0], p[-1]}):
        if x in p or g.adjacency_mask(x) & p_mask:
            failures.append(f"non-end apex {x} lies in or touches the path")
    allowed = mc.ground_set()
    for v in p:
        if v not in allowed:
            failures.append(f"path vertex {v} is outside X, the families, and C")
    return VerificationReport(not failures, tuple(failures))


def refine_multicover(
    mc: Multicover,
    budget: RefinementBudget,
    node_budget: Budget | None = None,
) -> list[RefinementRound]:
    """Greedy chromatic refinement of a multicover, one round per apex.

    Round 1 picks an inclusion-minimal A_1 within the first family whose
    C-neighborhood f(A_1) exceeds the round's threshold; later rounds pick a
    minimal A_i pushing one side of the previous (C, D) split above the
    threshold, preferring the C side. Each round's postcondition — every
    A_h covers one of (C_i, D_i) and is anticomplete to the other — is
    verified by direct scan before the round is accepted.
    """
    if len(budget.thresholds) != mc.length:
        raise InputError("need exactly one threshold per apex")
    node_budget = ensure_budget(node_budget)
    g = mc.host
    xs = sorted(mc.X)

    def chi(vertices: frozenset[int]) -> int:
        sub, _ = g.induced_subgraph(vertices)
        return chromatic_number(sub, node_budget)[0]

    def f(a: Iterable[int]) -> frozenset[int]:
        am = mask_of(a)
        return frozenset(v for v in mc.C if g.adjacency_mask(v) & am)

    def minimal(n_x: frozenset[int], holds) -> frozenset[int] | None:
        if not holds(n_x):
            return None
        a = set(n_x)
        for v in sorted(n_x):
            trial = frozenset(a - {v})
            if holds(trial):
                a.discard(v)
        return frozenset(a)

    rounds: list[RefinementRound] = []
    cur_c: frozenset[int] = mc.C
    cur_d: frozenset[int] | None = None
    for idx, (x, c_i) in enumerate(zip(xs, budget.thresholds), start=1):
        n_x = mc.families[x]
        if idx == 1:
            a = minimal(n_x, lambda s: chi(f(s)) > c_i)
            if a is None:
                raise RefinementError(1, "threshold unreachable at round 1")
            new_c = f(a)
            new_d = mc.C - new_c
            side = "C"
        else:
            assert cur_d is not None

            def c_side(s: frozenset[int]) -> bool:
                return chi(f(s) & cur_c) > c_i

            def d_side(s: frozenset[int]) -> bool:
                return chi(f(s) & cur_d) > c_i

            if c_side(n_x):
                a = minimal(n_x, c_side)
                new_c = f(a) & cur_c
                new_d = cur_d - f(a)
                side = "C"
            elif d_side(n_x):
                a = minimal(n_x, d_side)
                new_d = f(a) & cur_d
                new_c = cur_c - f(a)
                side = "D"
            else:
                raise RefinementError(
                    idx, f"threshold unreachable at round {idx}"
                )
        rounds.append(RefinementRound(x, a, new_c, new_d, side))
        # postcondition: every A_h so far covers one side, anticomplete to
        # the other
        for r in rounds:
            covered = new_c if _covers_side(g, r.A, new_c) else None
            if covered is None and _covers_side(g, r.A, new_d):
                covered = new_d
            other = new_d if covered is new_c else new_c
            if covered is None or not g.is_anticomplete(r.A, other):
                raise RefinementError(
                    idx,
                    f"round {idx} postcondition failed for apex {r.apex}",
                )
        cur_c, cur_d = new_c, new_d
    return rounds


def _covers_side(g: Graph, a: frozenset[int], side: frozenset[int]) -> bool:
    if a & side:
        return False
    am = mask_of(a)
    return all(g.adjacency_mask(v) & am for v in side)


def find_oddity(
    mc: Multicover,
    B1: frozenset[int],
    B2: frozenset[int],
    D: frozenset[int],
    Z: frozenset[int],
) -> Oddity | None:
    """Extract an oddity by the greedy selection over a clique Z inside D.

    B1 and B2 must each cover D and lie inside distinct families; Z must be
    a clique within D. Picks y_1 in B1 | B2 with the most neighbors in Z,
    then a Z-vertex z_2 missed by y_1, a B2-vertex y_2 catching z_2, and a
    Z-vertex z_1 seen by y_1 but not y_2; emits the length-3 path when
    y_1 y_2 is an edge, else the length-5 path through z_1, z_2. Returns
    None when the selection runs out of candidates.
    """
    g = mc.host
    if not g.is_clique(Z) or not Z <= D:
        raise InputError("Z must be a clique inside D")
    for b in (B1, B2):
        if not g.covers(b, D):
            raise InputError("B1 and B2 must each cover D")
    apex1 = _apex_of(mc, B1)
    apex2 = _apex_of(mc, B2)
    if apex1 is None or apex2 is None or apex1 == apex2:
        raise InputError("B1 and B2 must lie inside distinct families")
    z_mask = mask_of(Z)

    def z_degree(v: int) -> int:
        return (g.adjacency_mask(v) & z_mask).bit_count()

    y1 = max(sorted(B1 | B2), key=z_degree)
    if y1 in B2:
        B1, B2 = B2, B1
        apex1, apex2 = apex2, apex1
    z2 = next((z for z in sorted(Z) if not g.has_edge(y1, z)), None)
    if z2 is None:
        return None
    y2 = next((y for y in sorted(B2) if g.has_edge(y, z2)), None)
    if y2 is None:
        return None
    z1 = next(
        (
            z
            for z in sorted(Z)
            if g.has_edge(y1, z) and not g.has_edge(y2, z)
        ),
        None,
    )
    if z1 is None:
        return None
    if g.has_edge(y1, y2):
        path = (apex1, y1, y2, apex2)
    else:
        path = (apex1, y1, z1, z2, y2, apex2)
    oddity = Oddity(path=path, multicover=mc)
    report = verify_oddity(oddity)
    if not report.valid:
        return None
    return oddity


def _apex_of(mc: Multicover, b: frozenset[int]) -> int | None:
    for x in sorted(mc.X):
        if b <= mc.families[x]:
            return x
    return None


# ---------------------------------------------------------------------------
# gradings and square edges


def earliest_parent(g: Graph, b_enum: Sequence[int], v: int) -> int:
    """The earliest vertex of the enumeration adjacent to v."""
    g.check_vertex(v)
    for b in b_enum:
        if g.has_edge(b, v):
            return b
    raise InputError(f"vertex {v} has no neighbor in the enumeration")


def _check_enum_covers(g: Graph, b_enum: Sequence[int], c: frozenset[int]) -> None:
    if len(set(b_enum)) != len(b_enum):
        raise InputError("enumeration has repeated vertices")
    if not g.covers(frozenset(b_enum), c):
        raise InputError("the enumeration does not cover the target set")


def grading_from_cover(
    g: Graph, b_enum: Sequence[int], C: Iterable[int]
) -> Grading:
    """Grade C by earliest parent: W_i holds the vertices adopted by b_i."""
    c = g.check_set(C)
    _check_enum_covers(g, b_enum, c)
    parts = []
    remaining = set(c)
    for b in b_enum:
        w = frozenset(v for v in remaining if g.has_edge(b, v))
        remaining -= w
        parts.append(w)
    return Grading(host=g, parts=tuple(parts))


def square_edges(
    g: Graph, b_enum: Sequence[int], C: Iterable[int]
) -> list[tuple[int, int]]:
    """Edges of G[C] whose endpoints' earliest parents miss the other end."""
    c = g.check_set(C)
    _check_enum_covers(g, b_enum, c)
    out = []
    for u in sorted(c):
        for v in sorted(c):
            if v <= u or not g.has_edge(u, v):
                continue
            if not g.has_edge(earliest_parent(g, b_enum, u), v) and not g.has_edge(
                earliest_parent(g, b_enum, v), u
            ):
                out.append((u, v))
    return out


def is_compatible(b_enum: Sequence[int], grading: Grading) -> bool:
    """Does earlier-in-grading force a strictly earlier earliest parent?"""
    g = grading.host
    ground = grading.ground_set()
    _check_enum_covers(g, b_enum, ground)
    rank = {b: i for i, b in enumerate(b_enum)}
    for i in range(len(grading.parts)):
        for j in range(i + 1, len(grading.parts)):
            for u in grading.parts[i]:
                for v in grading.parts[j]:
                    if (
                        rank[earliest_parent(g, b_enum, u)]
                        >= rank[earliest_parent(g, b_enum, v)]
                    ):
                        return False
    return True


# ---------------------------------------------------------------------------
# showers


def verify_shower(s: Shower) -> tuple[VerificationReport, frozenset[int]]:
    """Check the four shower axioms; also return the floor."""
    g = s.host
    failures: list[str] = []
    try:
        for layer in s.layers:
            g.check_set(layer)
        g.check_vertex(s.drain)
    except InputError as exc:
        return VerificationReport(False, (str(exc),)), frozenset()
    seen: set[int] = set()
    for layer in s.layers:
        if layer & seen:
            failures.append("layers are not pairwise disjoint")
            break
        seen |= layer
    if len(s.layers[0]) != 1:
        failures.append("first layer does not have exactly one vertex")
    if s.drain not in s.layers[-1]:
        failures.append("drain is not in the last layer")
    k = s.k
    for i in range(1, k):
        if not g.covers(s.layers[i - 1], s.layers[i]):
            failures.append(f"layer {i - 1} does not cover layer {i}")
    for i in range(k + 1):
        for j in range(i + 2, k + 1):
            mi = mask_of(s.layers[i])
            if any(g.adjacency_mask(v) & mi for v in s.layers[j]):
                failures.append(f"edge between layer {i} and layer {j}")
    last, _ = g.induced_subgraph(s.layers[-1])
    if not last.is_connected():
        failures.append("last layer does not induce a connected subgraph")
    return VerificationReport(not failures, tuple(failures)), s.floor()


def shower_from_bfs(
    g: Graph, root: int, k: int, drain: int
) -> Shower | None:
    """Build a shower from BFS layers of root, drained at the given vertex.

    L_i is the distance-i layer for i < k; the last layer is the distance-k
    layer restricted to the drain's component (connectivity is required but
    the last layer need not be covered). Returns None when the construction
    cannot satisfy the axioms.
    """
    g.check_vertex(root)
    g.check_vertex(drain)
    if k < 0:
        return None
    dist = g.distances_from(root)
    if dist[drain] != k:
        return None
    layers = [frozenset(v for v in g.vertices() if dist[v] == i) for i in range(k + 1)]
    if k > 0:
        last, keep = g.induced_subgraph(layers[k])
        comp_dist = last.distances_from(keep.index(drain))
        layers[k] = frozenset(
            keep[i] for i in range(last.n) if comp_dist[i] != float("inf")
        )
    shower = Shower(host=g, layers=tuple(layers), drain=drain)
    report, _ = verify_shower(shower)
    return shower if report.valid else None


def enumerate_jets(
    s: Shower,
    max_len: int,
    ell: int | None = None,
    d: int | None = None,
    budget: Budget | None = None,
) -> tuple[list[tuple[int, ...]], JetSummary | None]:
    """All induced head-drain paths in the shower's vertex set, up to max_len.

    With ell set, also summarizes the (d-peripheral, when d is given) jet
    lengths: residues mod ell and the largest t for which the jetset is
    (t, ell)-complete, i.e. contains t consecutive lengths mod ell.
    """
    budget = ensure_budget(budget)
    g = s.host
    report, floor = verify_shower(s)
    if not report.valid:
        raise InputError(f"invalid shower: {report.first_failure}")
    allowed = mask_of(s.vertex_set())
    jets = sorted(
        _simple_induced_paths(g, s.head, s.drain, allowed, max_len, budget)
    )
    summary = None
    if ell is not None:
        if ell < 2:
            raise InputError("jetset modulus must be at least 2")
        lengths = set()
        for j in jets:
            if d is None or _jet_is_peripheral(g, j, floor, d, budget):
                lengths.add(len(j) - 1)
        residues = frozenset(l % ell for l in lengths)
        summary = JetSummary(
            modulus=ell,
            d=d if d is not None else -1,
            lengths=frozenset(lengths),
            residues=residues,
            completeness=_longest_cyclic_run(residues, ell),
        )
    return jets, summary


def _jet_is_peripheral(
    g: Graph, jet: tuple[int, ...], floor: frozenset[int], d: int, budget: Budget
) -> bool:
    """d-peripherality via the maximal candidate exterior.

    Any floor subset anticomplete to the jet is contained in
    floor minus N[jet], so checking that maximal set is exact (chromatic
    number is monotone under induced subgraphs).
    """
    x = floor - g.closed_neighborhood(jet)
    sub, _ = g.induced_subgraph(x)
    return chromatic_number(sub, budget)[0] > d


def _longest_cyclic_run(residues: frozenset[int], ell: int) -> int:
    """Longest run of consecutive residues mod ell present; capped at ell."""
    if not residues:
        return 0
    if len(residues) == ell:
        return ell
    best = 0
    for start in residues:
        if (start - 1) % ell in residues:
            continue
        run = 0
        while (start + run) % ell in residues:
            run += 1
        best = max(best, run)
    return best


def _simple_induced_paths(
    g: Graph,
    source: int,
    target: int,
    allowed_mask: int,
    max_len: int,
    budget: Budget,
) -> Iterator[tuple[int, ...]]:
    """Induced source-target paths with at most max_len edges."""
    if source == target:
        return
    adj = g.adjacency_masks()

    def extend(path: list[int], banned: int) -> Iterator[tuple[int, ...]]:
        last = path[-1]
        if len(path) > max_len:
            return
        budget.tick()
        if (adj[last] >> target) & 1 and not (banned >> target) & 1:
            yield tuple(path) + (target,)
        for v in bits(adj[last] & allowed_mask & ~banned & ~(1 << target)):
            new_banned = banned | adj[last] | (1 << v)
            path.append(v)
            yield from extend(path, new_banned)
            path.pop()

    yield from extend([source], 1 << source)


def bloodline(
    g: Graph, last_layer: frozenset[int], drain: int, v: int
) -> tuple[int, ...]:
    """An induced path from v to the drain inside the last layer.

    M_i is the set of last-layer vertices at G[L_k]-distance i from the
    drain; the path steps from v through strictly earlier M-layers using
    the lowest-index predecessor each time, so it has length exactly the
    M-index of v and is automatically induced.
    """
    if v not in last_layer or drain not in last_layer:
        raise InputError("both the vertex and the drain must be in the layer")
    sub, keep = g.induced_subgraph(last_layer)
    index = {u: i for i, u in enumerate(keep)}
    dist = sub.distances_from(index[drain])
    if dist[index[v]] == float("inf"):
        raise InputError(f"vertex {v} is not in any M-layer of the drain")
    path = [v]
    cur = v
    while cur != drain:
        d = dist[index[cur]]
        pred = min(
            u
            for u in sub.neighbors(index[cur])
            if dist[u] == d - 1
        )
        cur = keep[pred]
        path.append(cur)
    return tuple(path)


def find_recirculator(
    g: Graph, s: Shower, max_len: int, budget: Budget | None = None
) -> tuple[int, ...] | None:
    """Shortest induced drain-to-head path outside the shower.

    Internal vertices lie outside the shower's vertex set and have no
    neighbors in it except possibly the drain and head. BFS inside the set
    of admissible vertices; the result is verified before return.
    """
    budget = ensure_budget(budget)
    v_set = s.vertex_set()
    head = s.head
    drain = s.drain
    ends_mask = (1 << head) | (1 << drain)
    interior_forbidden = mask_of(v_set) & ~ends_mask
    admissible = [
        v
        for v in g.vertices()
        if v not in v_set and not (g.adjacency_mask(v) & interior_forbidden)
    ]
    allowed = mask_of(admissible) | ends_mask
    # BFS from drain to head inside the admissible set; a shortest path in
    # this set is automatically induced unless a chord connects path
    # vertices, so verify and fall back to induced-path search if needed
    best: tuple[int, ...] | None = None
    for path in sorted(
        _simple_induced_paths(g, drain, head, allowed, max_len, budget),
        key=lambda p: (len(p), p),
    ):
        best = path
        break
    if best is None:
        return None
    internal = best[1:-1]
    for v in internal:
        if v in v_set:
            return None
        if g.adjacency_mask(v) & interior_forbidden:
            return None
    return best


def close_hole(jet: Sequence[int], recirc: Sequence[int], g: Graph) -> Hole:
    """Glue a jet and a recirculator sharing exactly their endpoints.

    The union must be a chordless cycle; any chord raises ChordError naming
    the offending pair.
    """
    if len(jet) < 2 or len(recirc) < 2:
        raise InputError("jet and recirculator must each have an edge")
    ends = {jet[0], jet[-1]}
    if {recirc[0], recirc[-1]} != ends:
        raise InputError("jet and recirculator must share their endpoints")
    if set(jet[1:-1]) & set(recirc[1:-1]):
        raise InputError("jet and recirculator share an internal vertex")
    r = list(recirc)
    if r[0] != jet[-1]:
        r.reverse()
    cycle = list(jet) + r[1:-1]
    k = len(cycle)
    for i in range(k):
        for j in range(i + 1, k):
            consecutive = j - i == 1 or (i == 0 and j == k - 1)
            if g.has_edge(cycle[i], cycle[j]) != consecutive:
                if consecutive:
                    raise InputError(
                        f"cycle vertices {cycle[i]} and {cycle[j]} not adjacent"
                    )
                raise ChordError(cycle[i], cycle[j])
    hole = canonical_hole(cycle)
    hole.validate(g)
    return hole
