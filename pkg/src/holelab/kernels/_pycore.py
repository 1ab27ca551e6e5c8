"""Pure-Python hole-search kernel.

Enumerates chordless cycles of length >= 4 exactly once up to rotation and
reflection: each cycle is reported anchored at its minimum vertex, with the
smaller of the anchor's two cycle-neighbors listed second.

The search is a DFS over induced paths rooted at the anchor, extending only
through vertices greater than the anchor. When an upper length bound is
given, branches are pruned with a completion-feasibility test on the
residual graph: degree-2 chains are contracted to weighted superedges,
odd-weight superedges are treated as use-at-most-once resources, and a
shortest-path sweep over (branch vertex, odd-superedge subset, weight
residue) states decides whether any return path with an admissible total
length can still exist. The test only ever rejects impossible completions,
so pruning never changes the emitted set of holes, and the compiled kernel
agrees with this one hole for hole.
"""

from __future__ import annotations

import heapq
from typing import Iterator, Sequence

from ..errors import BudgetExceededError

IMPLEMENTATION = "pure"

MAX_TRACKED_ODD = 6
MAX_RESIDUE_MOD = 64


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _completion_feasible(
    adj: Sequence[int],
    allowed: int,
    start: int,
    anchor: int,
    needed: Sequence[int],
) -> bool:
    """Can some simple path from start to anchor with length in `needed`
    exist within `allowed`?

    Works on the contraction of the residual graph: maximal chains of
    degree-2 vertices collapse into superedges carrying their lengths. A
    simple path traverses any chain wholly or not at all, so path lengths in
    the residual graph are exactly walk weights in the contraction that use
    each odd superedge at most once and revisit no chain. The state sweep
    relaxes "revisit no chain" for even superedges only, which can only
    overestimate what is achievable, keeping the prune sound.
    """
    if not needed:
        return False
    live = allowed | (1 << start) | (1 << anchor)
    # residual degrees
    deg = {}
    for v in _bits(live):
        deg[v] = (adj[v] & live).bit_count()
    branch_mask = 0
    for v, d in deg.items():
        if d != 2 or v == start or v == anchor:
            branch_mask |= 1 << v
    if not (branch_mask >> start) & 1 or not (branch_mask >> anchor) & 1:
        return False  # start or anchor isolated from live set
    # walk chains: superedges (u, v, weight) between branch vertices; each
    # chain is seen from both ends, so keep it only from its lexicographically
    # smaller (endpoint, first interior vertex) side
    superedges = []
    for u in _bits(branch_mask):
        for w in _bits(adj[u] & live):
            if (branch_mask >> w) & 1:
                if u < w:
                    superedges.append((u, w, 1))
                continue
            prev, cur, weight = u, w, 1
            while not (branch_mask >> cur) & 1:
                nxt_mask = adj[cur] & live & ~(1 << prev)
                prev, cur = cur, (nxt_mask & -nxt_mask).bit_length() - 1
                weight += 1
            if u != cur and (u, w) < (cur, prev):
                superedges.append((u, cur, weight))
    if not superedges:
        return False
    # residue modulus from the even superedge weights
    g = 0
    for _, _, w in superedges:
        if w % 2 == 0:
            g = _gcd(g, w)
    modulus = 2 * g if 0 < 2 * g <= MAX_RESIDUE_MOD else 2
    # classify odd superedges; track a bounded number as use-once resources
    odd_ids: dict[int, int] = {}
    edge_list = []
    for idx, (u, v, w) in enumerate(superedges):
        odd_id = -1
        if w % 2 == 1 and len(odd_ids) < MAX_TRACKED_ODD:
            odd_ids[idx] = len(odd_ids)
            odd_id = odd_ids[idx]
        elif w % 2 == 1:
            odd_id = -2  # untracked odd edge: reusable, still flips parity
        edge_list.append((u, v, w, odd_id))
    n_subsets = 1 << len(odd_ids)
    verts = {v: i for i, v in enumerate(_bits(branch_mask))}
    nb = len(verts)
    max_needed = max(needed)
    INF = max_needed + 1
    dist = [INF] * (nb * n_subsets * modulus)
    adjacency: list[list[tuple[int, int, int]]] = [[] for _ in range(nb)]
    for u, v, w, odd_id in edge_list:
        adjacency[verts[u]].append((verts[v], w, odd_id))
        adjacency[verts[v]].append((verts[u], w, odd_id))
    s_idx = verts[start]
    a_idx = verts[anchor]
    state0 = s_idx * n_subsets * modulus
    dist[state0] = 0
    heap = [(0, state0)]
    while heap:
        d, state = heapq.heappop(heap)
        if d > dist[state]:
            continue
        v_idx, rest = divmod(state, n_subsets * modulus)
        subset, residue = divmod(rest, modulus)
        if v_idx == a_idx and d >= 2:
            if any(r >= d and (r - d) % modulus == 0 for r in needed):
                return True
        for w_idx, weight, odd_id in adjacency[v_idx]:
            nd = d + weight
            if nd > max_needed:
                continue
            nsubset = subset
            if odd_id >= 0:
                bit = 1 << odd_id
                if subset & bit:
                    continue
                nsubset = subset | bit
            nstate = (w_idx * n_subsets + nsubset) * modulus + nd % modulus
            if nd < dist[nstate]:
                dist[nstate] = nd
                heapq.heappush(heap, (nd, nstate))
    # re-check anchor states (anchor may be reached with several residues)
    base = a_idx * n_subsets * modulus
    for offset in range(n_subsets * modulus):
        d = dist[base + offset]
        if d < 2:
            continue
        if d <= max_needed and any(
            r >= d and (r - d) % modulus == 0 for r in needed
        ):
            return True
    return False


def find_holes(
    adj: Sequence[int],
    n: int,
    min_len: int = 4,
    max_len: int | None = None,
    budget: int | None = None,
) -> Iterator[tuple[int, ...]]:
    """Yield each hole of the graph once, canonically oriented.

    adj: per-vertex neighbor bitmasks. budget: maximum number of DFS
    extensions before raising BudgetExceededError (partial results already
    yielded remain valid).
    """
    if min_len < 4:
        min_len = 4
    if max_len is not None and max_len < min_len:
        return
    nodes = 0
    for anchor in range(n):
        anchor_bit = 1 << anchor
        gt_mask = ((1 << n) - 1) & ~((anchor_bit << 1) - 1)
        adj_anchor = adj[anchor]
        root_cands = adj_anchor & gt_mask
        path = [anchor]
        ext_stack = [root_cands]
        clos_stack = [0]
        banned_stack = [anchor_bit]
        while path:
            depth = len(path)
            clos = clos_stack[-1]
            if clos:
                u = clos & -clos
                clos_stack[-1] = clos ^ u
                yield tuple(path) + (u.bit_length() - 1,)
                continue
            ext = ext_stack[-1]
            if not ext:
                path.pop()
                ext_stack.pop()
                clos_stack.pop()
                banned_stack.pop()
                continue
            u_bit = ext & -ext
            ext_stack[-1] = ext ^ u_bit
            u = u_bit.bit_length() - 1
            nodes += 1
            if budget is not None and nodes > budget:
                raise BudgetExceededError(
                    f"hole search exceeded budget of {budget} nodes"
                )
            new_depth = depth + 1
            if depth >= 2:
                banned = banned_stack[-1] | adj[path[-1]] | u_bit
            else:
                banned = banned_stack[-1] | u_bit
            cand = adj[u] & gt_mask & ~banned
            clos_new = 0
            if new_depth + 1 >= min_len and new_depth + 1 >= 4:
                if max_len is None or new_depth + 1 <= max_len:
                    clos_new = cand & adj_anchor
            if clos_new and depth >= 2:
                # kill reflections: closing vertex must exceed the second one
                clos_new &= ~((1 << (path[1] + 1)) - 1)
            ext_new = cand & ~adj_anchor
            if max_len is not None and new_depth + 2 > max_len:
                ext_new = 0
            if ext_new and max_len is not None:
                allowed = gt_mask & ~banned
                edges_used = new_depth - 1
                lo = max(min_len - edges_used, 2)
                hi = max_len - edges_used
                needed = range(lo, hi + 1)
                if not _completion_feasible(adj, allowed, u, anchor, needed):
                    ext_new = 0
            if clos_new or ext_new:
                path.append(u)
                ext_stack.append(ext_new)
                clos_stack.append(clos_new)
                banned_stack.append(banned)
