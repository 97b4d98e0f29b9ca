"""Phase 2: depth-first search over partial base-segment maps for one
fixed segment assignment.

Positions are filled in the color order; a DFS node assigns the next
color-order position's base segment to one more vertex. Each distinct
state is expanded at most once per run (visited set keyed by a packed
per-vertex code).
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .assignments import SegmentAssignment
from .geometry import ColorOrder, color_order
from .graph import Graph, ordering_bandwidth

DEFAULT_MAX_STATES = 1 << 26

YES = "yes"
NO = "no"
UNKNOWN = "unknown"


class BudgetExhausted(Exception):
    """Raised internally when a resource cap is hit; surfaces as UNKNOWN."""


@dataclass(frozen=True)
class SearchState:
    """Partial map vertex -> base-segment index (None = undefined)."""

    assigned: tuple[int | None, ...]

    @property
    def count(self) -> int:
        return sum(1 for t in self.assigned if t is not None)

    @classmethod
    def empty(cls, n: int) -> "SearchState":
        return cls((None,) * n)


@dataclass
class SearchStats:
    states_visited: int = 0
    depth_max: int = 0
    result: str = UNKNOWN

    def to_dict(self) -> dict:
        return {
            "states_visited": self.states_visited,
            "depth_max": self.depth_max,
            "result": self.result,
        }


def extend_candidates(
    s: SearchState, phi: SegmentAssignment, g: Graph, t: int
) -> list[int]:
    """Vertices whose assignment to base segment t yields an extension.

    A vertex qualifies when (a) base segment t lies inside its assigned
    segment, (b) every defined neighbor's value k satisfies
    k-1 <= t <= k, and (c) every undefined neighbor's segment starts at
    or before t.
    """
    out = []
    for v in range(phi.n):
        if s.assigned[v] is not None:
            continue
        if not (phi.lo[v] <= t < phi.hi(v)):
            continue
        ok = True
        for u in g.adj[v]:
            k = s.assigned[u]
            if k is not None:
                if not (k - 1 <= t <= k):
                    ok = False
                    break
            elif phi.lo[u] > t:
                ok = False
                break
        if ok:
            out.append(v)
    return out


def extend(s: SearchState, v: int, t: int) -> SearchState:
    assert s.assigned[v] is None, "vertex already defined"
    new = list(s.assigned)
    new[v] = t
    return SearchState(tuple(new))


def encode_state(s: SearchState, phi: SegmentAssignment) -> int:
    """Injective packed key: 3 bits per vertex, 0 for undefined, else
    1 + offset of the base segment inside the vertex's segment."""
    key = 0
    for v, t in enumerate(s.assigned):
        if t is not None:
            key |= (1 + t - phi.lo[v]) << (3 * v)
    return key


def decode_state(key: int, phi: SegmentAssignment) -> SearchState:
    assigned: list[int | None] = []
    for v in range(phi.n):
        code = (key >> (3 * v)) & 0b111
        assigned.append(None if code == 0 else phi.lo[v] + code - 1)
    return SearchState(tuple(assigned))


def dfs_decide(
    phi: SegmentAssignment,
    g: Graph,
    b: int,
    max_states: int = DEFAULT_MAX_STATES,
    deadline: float | None = None,
    corder: ColorOrder | None = None,
) -> tuple[str, list[int] | None, SearchStats]:
    """Search for an ordering of bandwidth <= b consistent with phi.

    Returns (YES, ordering, stats) on success, (NO, None, stats) when
    the state space is exhausted, or (UNKNOWN, None, stats) when a
    resource cap fires. The visited set belongs to this run only.
    """
    n = g.n
    if corder is None:
        corder = color_order(n, b)
    step = corder.step_base_segment
    seq = corder.sequence
    adj = g.adj
    lo = phi.lo
    hi = [phi.hi(v) for v in range(n)]

    assigned = [-1] * n
    path: list[int] = []
    visited = {0}
    stats = SearchStats(states_visited=1)

    def visit(key: int, depth: int) -> list[int] | None:
        if depth > stats.depth_max:
            stats.depth_max = depth
        if depth == n:
            pos = [0] * n
            for k, v in enumerate(path):
                pos[v] = seq[k]
            return pos
        if deadline is not None and time.monotonic() > deadline:
            raise BudgetExhausted("time budget exhausted")
        t = step[depth]
        for v in range(n):
            if assigned[v] >= 0 or not (lo[v] <= t < hi[v]):
                continue
            ok = True
            for u in adj[v]:
                k = assigned[u]
                if k >= 0:
                    if not (k - 1 <= t <= k):
                        ok = False
                        break
                elif lo[u] > t:
                    ok = False
                    break
            if not ok:
                continue
            child = key | (1 + t - lo[v]) << (3 * v)
            if child in visited:
                continue
            if len(visited) >= max_states:
                raise BudgetExhausted("state budget exhausted")
            visited.add(child)
            stats.states_visited += 1
            assigned[v] = t
            path.append(v)
            found = visit(child, depth + 1)
            path.pop()
            assigned[v] = -1
            if found is not None:
                return found
        return None

    try:
        pos = visit(0, 0)
    except BudgetExhausted:
        stats.result = UNKNOWN
        return UNKNOWN, None, stats
    if pos is None:
        stats.result = NO
        return NO, None, stats
    # Defensive check: the witness really is a b-ordering.
    assert ordering_bandwidth(g, pos) <= b, "search produced an invalid witness"
    stats.result = YES
    return YES, pos, stats


def per_run_state_ceiling(n: int, leaf_count: int) -> int:
    """Visited-state ceiling for one run: 3^(n-L) * 4^L."""
    return 3 ** (n - leaf_count) * 4**leaf_count
