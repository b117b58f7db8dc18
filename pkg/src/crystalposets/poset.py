"""
Analytics over edge-colored graded posets presented by their cover-edge
graphs: interval extraction, Mobius function, saturated chain enumeration,
square/hexagon chain moves and their connectivity, Euler-characteristic
cross-checks, and (non-)lattice witnesses.

Intervals are extracted by budgeted bidirectional search: the number of
color-i covers on any chain from u to v is forced by the weight difference,
so the upward search from u never leaves the per-color budget, and the
result is intersected with the symmetric downward search from v.  An
interval is self-contained (local indices, restricted covers), which lets
the same machinery run on intervals of crystals far too large to generate.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Hashable, Iterable, Sequence

from .crystal import CrystalGraph, GraphSizeError, Tableau, apply_e, apply_f, weight

DEFAULT_CHAIN_CAP = 10_000_000


class ChainCapError(RuntimeError):
    """Raised when chain enumeration would exceed the configured cap."""


@dataclass
class Interval:
    """A closed interval [u, v] with its restricted colored covers.

    Local vertex indices are assigned by (rank, payload) so extraction is
    deterministic; ``payloads`` carries the underlying tableaux and
    ``graph_indices`` maps back to the ambient graph when one was used.
    All maximal chains run from ``bottom`` to ``top`` and share the color
    multiset recorded in ``budget``.
    """

    payloads: tuple[Tableau, ...]
    covers: tuple[tuple[int, int, int], ...]
    bottom: int
    top: int
    ranks: tuple[int, ...]
    span: int
    budget: dict[int, int]
    graph_indices: tuple[int, ...] | None = None
    fwd: tuple[dict[int, int], ...] = field(default=(), repr=False)
    bwd: tuple[dict[int, int], ...] = field(default=(), repr=False)

    def __post_init__(self) -> None:
        if not self.fwd:
            f: list[dict[int, int]] = [{} for _ in self.payloads]
            b: list[dict[int, int]] = [{} for _ in self.payloads]
            for a, c, i in self.covers:
                f[a][i] = c
                b[c][i] = a
            self.fwd = tuple(f)
            self.bwd = tuple(b)

    def __len__(self) -> int:
        return len(self.payloads)

    def up_closures(self) -> list[int]:
        """Bitmask of {z : v <= z} per local vertex v."""
        order = sorted(range(len(self.payloads)), key=lambda v: -self.ranks[v])
        up = [0] * len(self.payloads)
        for v in order:
            mask = 1 << v
            for w in self.fwd[v].values():
                mask |= up[w]
            up[v] = mask
        return up

    def down_closures(self) -> list[int]:
        order = sorted(range(len(self.payloads)), key=lambda v: self.ranks[v])
        down = [0] * len(self.payloads)
        for v in order:
            mask = 1 << v
            for w in self.bwd[v].values():
                mask |= down[w]
            down[v] = mask
        return down


def _color_budget(wt_u: Sequence[int], wt_v: Sequence[int]) -> dict[int, int] | None:
    """Per-color cover counts forced by the weight drop, or None if some
    partial sum goes negative (then u is not below v)."""
    budget: dict[int, int] = {}
    acc = 0
    for k in range(len(wt_u) - 1):
        acc += wt_u[k] - wt_v[k]
        if acc < 0:
            return None
        budget[k + 1] = acc
    if acc + (wt_u[-1] - wt_v[-1]) != 0:
        return None
    return budget


def _extract(
    u_key: Hashable,
    v_key: Hashable,
    budget: dict[int, int],
    up_steps: Callable[[Hashable], Iterable[tuple[int, Hashable]]],
    down_steps: Callable[[Hashable], Iterable[tuple[int, Hashable]]],
    max_vertices: int,
) -> tuple[dict[Hashable, dict[int, int]], set[Hashable]] | None:
    """Budgeted bidirectional closure; returns (usage table, interval keys)."""
    zero = {i: 0 for i in budget}
    usage: dict[Hashable, dict[int, int]] = {u_key: zero}
    queue = deque([u_key])
    while queue:
        x = queue.popleft()
        used = usage[x]
        for i, y in up_steps(x):
            if used[i] + 1 > budget[i]:
                continue
            if y not in usage:
                if len(usage) > max_vertices:
                    raise GraphSizeError(f"interval vertex cap {max_vertices} exceeded")
                nxt = dict(used)
                nxt[i] += 1
                usage[y] = nxt
                queue.append(y)
    if v_key not in usage or usage[v_key] != budget:
        return None
    reach_down = {v_key}
    queue = deque([v_key])
    while queue:
        x = queue.popleft()
        for i, y in down_steps(x):
            if y in usage and y not in reach_down:
                reach_down.add(y)
                queue.append(y)
    return usage, {x for x in usage if x in reach_down}


def _build_interval(
    keys: set[Hashable],
    usage: dict[Hashable, dict[int, int]],
    budget: dict[int, int],
    u_key: Hashable,
    v_key: Hashable,
    payload_of: Callable[[Hashable], Tableau],
    up_steps: Callable[[Hashable], Iterable[tuple[int, Hashable]]],
    graph_index_of: Callable[[Hashable], int] | None,
) -> Interval:
    rank_of = {x: sum(usage[x].values()) for x in keys}
    ordered = sorted(keys, key=lambda x: (rank_of[x], payload_of(x)))
    local = {x: k for k, x in enumerate(ordered)}
    covers = []
    for x in ordered:
        for i, y in up_steps(x):
            if y in local:
                covers.append((local[x], local[y], i))
    covers.sort()
    return Interval(
        payloads=tuple(payload_of(x) for x in ordered),
        covers=tuple(covers),
        bottom=local[u_key],
        top=local[v_key],
        ranks=tuple(rank_of[x] for x in ordered),
        span=rank_of[v_key],
        budget=budget,
        graph_indices=tuple(graph_index_of(x) for x in ordered) if graph_index_of else None,
    )


def interval(graph: CrystalGraph, u: int, v: int, max_vertices: int = 2_000_000) -> Interval | None:
    """Extract [u, v] from a generated graph, or None when u is not below v."""
    budget = _color_budget(graph.weights[u], graph.weights[v])
    if budget is None:
        return None

    def up(x: int) -> list[tuple[int, int]]:
        return sorted(graph.fwd[x].items())

    def down(x: int) -> list[tuple[int, int]]:
        return sorted(graph.bwd[x].items())

    got = _extract(u, v, budget, up, down, max_vertices)
    if got is None:
        return None
    usage, keys = got
    return _build_interval(keys, usage, budget, u, v, lambda x: graph.vertices[x], up, lambda x: x)


def free_interval(u: Tableau, v: Tableau, n: int, max_vertices: int = 2_000_000) -> Interval | None:
    """Extract [u, v] directly from the crystal operators, without ever
    materializing the ambient crystal; this is what makes intervals of huge
    crystals tractable."""
    budget = _color_budget(weight(u, n), weight(v, n))
    if budget is None:
        return None

    def up(x: Tableau) -> list[tuple[int, Tableau]]:
        out = []
        for i in range(1, n):
            y = apply_f(x, i)
            if y is not None:
                out.append((i, y))
        return out

    def down(x: Tableau) -> list[tuple[int, Tableau]]:
        out = []
        for i in range(1, n):
            y = apply_e(x, i)
            if y is not None:
                out.append((i, y))
        return out

    got = _extract(u, v, budget, up, down, max_vertices)
    if got is None:
        return None
    usage, keys = got
    return _build_interval(keys, usage, budget, u, v, lambda x: x, up, None)


def graph_leq(graph: CrystalGraph, a: int, b: int) -> bool:
    """Order test by budgeted upward search with early exit."""
    if a == b:
        return True
    budget = _color_budget(graph.weights[a], graph.weights[b])
    if budget is None:
        return False
    zero = {i: 0 for i in budget}
    usage: dict[int, dict[int, int]] = {a: zero}
    queue = deque([a])
    while queue:
        x = queue.popleft()
        used = usage[x]
        for i, y in graph.fwd[x].items():
            if used[i] + 1 > budget[i] or y in usage:
                continue
            if y == b:
                return True
            nxt = dict(used)
            nxt[i] += 1
            usage[y] = nxt
            queue.append(y)
    return False


# -- Mobius function --------------------------------------------------------

@dataclass
class MobiusCache:
    """Memo table for one fixed graph, keyed by (bottom, vertex) pairs."""

    values: dict[tuple[int, int], int] = field(default_factory=dict)


def interval_mobius(itv: Interval) -> int:
    """Mobius value mu(bottom, top) by the defining recursion over the
    extracted interval only."""
    down = itv.down_closures()
    mu = [0] * len(itv)
    for z in sorted(range(len(itv)), key=lambda z: itv.ranks[z]):
        if z == itv.bottom:
            mu[z] = 1
            continue
        total = 0
        mask = down[z] & ~(1 << z)
        while mask:
            bit = mask & (-mask)
            total += mu[bit.bit_length() - 1]
            mask ^= bit
        mu[z] = -total
    return mu[itv.top]


def mobius(graph: CrystalGraph, u: int, v: int, cache: MobiusCache | None = None) -> int:
    """mu(u, v) in the crystal poset; raises ValueError when u is not below v.

    When a cache is supplied, every value mu(u, z) for z in [u, v] computed
    along the way is recorded and reused.
    """
    if cache is not None and (u, v) in cache.values:
        return cache.values[(u, v)]
    itv = interval(graph, u, v)
    if itv is None:
        raise ValueError(f"vertex {u} is not below {v}")
    if cache is None:
        return interval_mobius(itv)
    down = itv.down_closures()
    mu_local = [0] * len(itv)
    for z in sorted(range(len(itv)), key=lambda z: itv.ranks[z]):
        g = itv.graph_indices[z] if itv.graph_indices else z
        if (u, g) in cache.values:
            mu_local[z] = cache.values[(u, g)]
            continue
        if z == itv.bottom:
            mu_local[z] = 1
        else:
            total = 0
            mask = down[z] & ~(1 << z)
            while mask:
                bit = mask & (-mask)
                total += mu_local[bit.bit_length() - 1]
                mask ^= bit
            mu_local[z] = -total
        cache.values[(u, g)] = mu_local[z]
    return mu_local[itv.top]


def lower_mobius_all(graph: CrystalGraph) -> list[int]:
    """mu(minimum, x) for every vertex x, in one pass over the whole graph."""
    if graph.minimum is None:
        raise ValueError("graph has no unique minimum")
    order = sorted(range(len(graph)), key=lambda v: graph.rank[v])
    down = [0] * len(graph)
    mu = [0] * len(graph)
    for v in order:
        mask = 1 << v
        for u in graph.bwd[v].values():
            mask |= down[u]
        down[v] = mask
        if v == graph.minimum:
            mu[v] = 1
            continue
        total = 0
        rest = mask & ~(1 << v)
        while rest:
            bit = rest & (-rest)
            total += mu[bit.bit_length() - 1]
            rest ^= bit
        mu[v] = -total
    return mu


def euler_mobius(itv: Interval) -> int:
    """Reduced Euler characteristic of the order complex of the open
    interval, by counting chains of every size; an independent cross-check
    of :func:`interval_mobius`.
    """
    if itv.span < 1:
        raise ValueError("Euler cross-check needs an interval of rank at least 1")
    inner = [z for z in range(len(itv)) if z not in (itv.bottom, itv.top)]
    down = itv.down_closures()
    # chains_by_size[z] = number of chains in the open interval ending at z,
    # indexed by size; build up one extra element at a time
    result = -1
    current = {z: 1 for z in inner}  # size-1 chains
    sign = 1
    while current:
        result += sign * sum(current.values())
        sign = -sign
        nxt: dict[int, int] = {}
        for z in inner:
            below = down[z] & ~(1 << z)
            total = 0
            for y in current:
                if below >> y & 1:
                    total += current[y]
            if total:
                nxt[z] = total
        current = nxt
    return result


# -- saturated chains and chain moves ---------------------------------------

@dataclass(frozen=True)
class SaturatedChain:
    """A maximal chain through an interval, as local vertex indices plus the
    matching cover colors."""

    vertices: tuple[int, ...]
    labels: tuple[int, ...]


def saturated_chains(itv: Interval, cap: int = DEFAULT_CHAIN_CAP) -> list[SaturatedChain]:
    """All maximal chains from bottom to top, depth-first in increasing
    color order (hence deterministic)."""
    chains: list[SaturatedChain] = []
    stack: list[tuple[tuple[int, ...], tuple[int, ...]]] = [((itv.bottom,), ())]
    while stack:
        verts, labels = stack.pop()
        last = verts[-1]
        if last == itv.top:
            chains.append(SaturatedChain(verts, labels))
            if len(chains) > cap:
                raise ChainCapError(f"chain cap {cap} exceeded")
            continue
        for i, nxt in sorted(itv.fwd[last].items(), reverse=True):
            stack.append((verts + (nxt,), labels + (i,)))
    chains.sort(key=lambda c: c.labels)
    return chains


def stembridge_moves(chain: SaturatedChain, itv: Interval) -> list[tuple[int, SaturatedChain]]:
    """All chains obtainable from ``chain`` by one move: swap a length-2
    segment when the square with transposed colors closes at the same
    endpoints, or a length-4 segment with color pattern (a, b, b, a) when
    the transposed hexagon side exists with the same endpoints.
    """
    out: list[tuple[int, SaturatedChain]] = []
    verts, labels = chain.vertices, chain.labels
    for p in range(len(labels) - 1):
        a, b = labels[p], labels[p + 1]
        if a == b:
            continue
        start, end = verts[p], verts[p + 2]
        mid = itv.fwd[start].get(b)
        if mid is not None and itv.fwd[mid].get(a) == end:
            out.append((
                p,
                SaturatedChain(
                    verts[: p + 1] + (mid,) + verts[p + 2 :],
                    labels[:p] + (b, a) + labels[p + 2 :],
                ),
            ))
    for p in range(len(labels) - 3):
        a, b = labels[p], labels[p + 1]
        if a == b or labels[p + 1 : p + 4] != (b, b, a):
            continue
        start, end = verts[p], verts[p + 4]
        z1 = itv.fwd[start].get(b)
        z2 = itv.fwd[z1].get(a) if z1 is not None else None
        z3 = itv.fwd[z2].get(a) if z2 is not None else None
        if z3 is not None and itv.fwd[z3].get(b) == end:
            out.append((
                p,
                SaturatedChain(
                    verts[: p + 1] + (z1, z2, z3) + verts[p + 4 :],
                    labels[:p] + (b, a, a, b) + labels[p + 4 :],
                ),
            ))
    return out


def stembridge_components(
    itv: Interval, cap: int = DEFAULT_CHAIN_CAP
) -> tuple[list[SaturatedChain], list[list[int]]]:
    """Connected components of the move graph on all saturated chains.

    Returns the chain list (sorted by labels) and the components as lists
    of indices into it, each sorted, ordered by first chain.
    """
    chains = saturated_chains(itv, cap)
    key = {c.vertices: k for k, c in enumerate(chains)}
    seen = [False] * len(chains)
    components: list[list[int]] = []
    for start in range(len(chains)):
        if seen[start]:
            continue
        comp = [start]
        seen[start] = True
        queue = deque([start])
        while queue:
            k = queue.popleft()
            for _, moved in stembridge_moves(chains[k], itv):
                m = key[moved.vertices]
                if not seen[m]:
                    seen[m] = True
                    comp.append(m)
                    queue.append(m)
        components.append(sorted(comp))
    return chains, components


def find_move_path(
    itv: Interval,
    start: SaturatedChain,
    goal: SaturatedChain,
    cap: int = DEFAULT_CHAIN_CAP,
) -> list[tuple[int, SaturatedChain]] | None:
    """Shortest sequence of moves from one chain to another (breadth-first
    over the move graph), or None when they lie in different components."""
    if start.vertices == goal.vertices:
        return []
    prev: dict[tuple[int, ...], tuple[tuple[int, ...], int, SaturatedChain]] = {}
    seen = {start.vertices}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        for pos, moved in stembridge_moves(cur, itv):
            if moved.vertices in seen:
                continue
            if len(seen) > cap:
                raise ChainCapError(f"move search cap {cap} exceeded")
            seen.add(moved.vertices)
            prev[moved.vertices] = (cur.vertices, pos, moved)
            if moved.vertices == goal.vertices:
                path: list[tuple[int, SaturatedChain]] = []
                node = moved.vertices
                while node != start.vertices:
                    back, p, chain_at = prev[node]
                    path.append((p, chain_at))
                    node = back
                path.reverse()
                return path
            queue.append(moved)
    return None


# -- upper bounds and witnesses ---------------------------------------------

def minimal_upper_bounds(
    graph: CrystalGraph, a: int, b: int, rank_limit: int | None = None
) -> list[int]:
    """All minimal elements among common upper bounds of a and b, optionally
    restricted to ranks <= rank_limit.  Minimality needs no search beyond
    lower covers because common upper bounds form an up-set.
    """

    def bounded_upset(s: int) -> set[int]:
        seen = {s}
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in graph.fwd[x].values():
                if y not in seen and (rank_limit is None or graph.rank[y] <= rank_limit):
                    seen.add(y)
                    queue.append(y)
        return seen

    common = bounded_upset(a) & bounded_upset(b)
    return sorted(
        z for z in common if not any(p in common for p in graph.bwd[z].values())
    )


@dataclass(frozen=True)
class Witness:
    """A covering pair whose join behavior inside the interval cannot come
    from the square/hexagon relations; all indices are interval-local.

    ``kind`` is "non_unique" when the pair has two or more minimal common
    upper bounds, and "nonlocal" when it has a least upper bound that is not
    reached by the degree-2 or degree-4 configuration.
    """

    kind: str
    base: int
    cover_a: int
    cover_b: int
    minimal_upper_bounds: tuple[int, ...]


def _closes_locally(itv: Interval, b: int, i: int, c: int, j: int, z: int) -> bool:
    """Does z top off the square or the hexagon over the covers b (color i)
    and c (color j)?  Convexity makes the interval-restricted test agree
    with the ambient one whenever z lies in the interval."""
    if itv.fwd[b].get(j) == z and itv.fwd[c].get(i) == z:
        return True

    def walk(start: int, word: tuple[int, ...]) -> int | None:
        cur: int | None = start
        for color in word:
            if cur is None:
                return None
            cur = itv.fwd[cur].get(color)
        return cur

    return walk(b, (j, j, i)) == z and walk(c, (i, i, j)) == z


def non_stembridge_witness(itv: Interval) -> Witness | None:
    """Search the interval for a covering pair certifying a relation among
    the operators beyond the square/hexagon ones: either no least upper
    bound inside the interval, or a least upper bound that the local
    degree-2/degree-4 configurations do not produce.
    """
    up = itv.up_closures()
    order = sorted(range(len(itv)), key=lambda z: (itv.ranks[z], z))
    for base in order:
        colors = sorted(itv.fwd[base])
        for s in range(len(colors)):
            for t in range(s + 1, len(colors)):
                i, j = colors[s], colors[t]
                b, c = itv.fwd[base][i], itv.fwd[base][j]
                common = up[b] & up[c]
                mubs = []
                mask = common
                while mask:
                    bit = mask & (-mask)
                    z = bit.bit_length() - 1
                    mask ^= bit
                    if not any(common >> p & 1 for p in itv.bwd[z].values()):
                        mubs.append(z)
                mubs.sort()
                if len(mubs) >= 2:
                    return Witness("non_unique", base, b, c, tuple(mubs))
                if mubs and not _closes_locally(itv, b, i, c, j, mubs[0]):
                    return Witness("nonlocal", base, b, c, tuple(mubs))
    return None


# -- serialization ----------------------------------------------------------

def interval_to_json(itv: Interval) -> dict:
    """Same schema as the crystal graph export, plus bottom/top markers."""
    return {
        "n": len(itv.budget) + 1,
        "vertices": [[list(row) for row in t] for t in itv.payloads],
        "edges": [list(e) for e in itv.covers],
        "rank": list(itv.ranks),
        "bottom": itv.bottom,
        "top": itv.top,
        "budget": {str(i): m for i, m in sorted(itv.budget.items())},
    }


def components_to_json(chains: list[SaturatedChain], components: list[list[int]]) -> dict:
    """Report: component sizes with one representative label sequence each."""
    return {
        "chain_count": len(chains),
        "component_count": len(components),
        "components": [
            {
                "size": len(comp),
                "representative": list(chains[comp[0]].labels),
            }
            for comp in components
        ],
    }
