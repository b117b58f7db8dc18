"""
The key map from a tableau crystal to the symmetric group, computed purely
from the edge-colored poset structure, plus its consistency checks, fibers,
fiber extremes at longest parabolic elements, and Demazure subcrystals.

The recursion fills the table rank by rank: the minimum gets the identity,
atoms get their edge's simple reflection, a vertex covering two or more
elements gets the left weak join of the keys below, and a vertex with a
unique cover keeps or bumps the key below depending on whether the cover
sits at the bottom of its color string.  Within one rank the five rules are
independent of processing order.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from . import weyl
from .crystal import CrystalGraph
from .poset import graph_leq

Permutation = weyl.Permutation


@dataclass
class KeyTable:
    """Per-vertex key permutations for one fixed graph."""

    n: int
    keys: tuple[Permutation, ...]

    def __getitem__(self, v: int) -> Permutation:
        return self.keys[v]

    def __len__(self) -> int:
        return len(self.keys)


class FiberStructureError(RuntimeError):
    """A fiber at a longest parabolic element lacked a unique extreme."""


def compute_keys(graph: CrystalGraph) -> KeyTable:
    """Fill the key table in rank order by the five structural rules.

    >>> from .crystal import generate
    >>> table = compute_keys(generate((2, 1), 3))
    >>> table[0]
    (1, 2, 3)
    """
    if graph.minimum is None:
        raise ValueError("graph has no unique minimum")
    n = graph.n
    ident = weyl.identity(n)
    keys: list[Permutation | None] = [None] * len(graph)
    for v in sorted(range(len(graph)), key=lambda v: graph.rank[v]):
        below = sorted(graph.bwd[v].items())  # (color, lower vertex)
        if not below:
            keys[v] = ident
        elif graph.rank[v] == 1:
            i, _ = below[0]
            keys[v] = weyl.left_multiply(i, ident)
        elif len(below) >= 2:
            keys[v] = weyl.left_weak_join([keys[u] for _, u in below])
        else:
            i, u = below[0]
            if graph.bwd[u].get(i) is not None:
                keys[v] = keys[u]
            else:
                keys[v] = weyl.left_multiply(i, keys[u])
    return KeyTable(n=n, keys=tuple(keys))


@dataclass(frozen=True)
class KeyReport:
    passed: bool
    vertex: int | None = None
    color: int | None = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.passed


def check_key_axioms(graph: CrystalGraph, table: KeyTable) -> KeyReport:
    """At every vertex b and color p: if no p-edge enters b then s_p must
    lengthen the key; along every p-edge the key either stays fixed or gets
    bumped by s_p, and it may only change at the bottom of a p-string.
    """
    for b in range(len(graph)):
        kb = table[b]
        lb = weyl.length(kb)
        for p in graph.colors:
            if graph.bwd[b].get(p) is None:
                if weyl.length(weyl.left_multiply(p, kb)) <= lb:
                    return KeyReport(False, b, p, "key has a left descent at a string bottom")
            target = graph.fwd[b].get(p)
            if target is None:
                continue
            kt = table[target]
            if graph.bwd[b].get(p) is not None:
                if kt != kb:
                    return KeyReport(False, b, p, "key changed off the string bottom")
            elif kt not in (kb, weyl.left_multiply(p, kb)):
                return KeyReport(False, b, p, "key jumped outside the allowed pair")
    return KeyReport(True)


def adapted_string_check(graph: CrystalGraph, table: KeyTable, b: int) -> bool:
    """For every reduced word of the key of b, greedily exhausting each
    raising color in turn starting at b must land exactly on the minimum."""
    for word in sorted(weyl.reduced_words(table[b])):
        cur = b
        for i in word:
            while (nxt := graph.bwd[cur].get(i)) is not None:
                cur = nxt
        if cur != graph.minimum:
            return False
    return True


@dataclass
class Fiber:
    """A key-map fiber with the order induced from the crystal poset.

    ``covers`` lists induced cover pairs (a, b, color); the color is the
    edge color when the pair is also a crystal cover, else None.
    ``components`` partitions the vertices by comparability.
    """

    word: Permutation
    vertices: tuple[int, ...]
    relations: tuple[tuple[int, int], ...]
    covers: tuple[tuple[int, int, int | None], ...]
    components: tuple[tuple[int, ...], ...]


def fiber(graph: CrystalGraph, table: KeyTable, w: Permutation) -> Fiber:
    """All vertices with key w, their induced order, and its components."""
    w = weyl.check_permutation(w)
    verts = [v for v in range(len(graph)) if table[v] == w]
    less: list[tuple[int, int]] = []
    for a, b in combinations(verts, 2):
        x, y = (a, b) if graph.rank[a] <= graph.rank[b] else (b, a)
        if graph_leq(graph, x, y):
            less.append((x, y))
    lset = set(less)
    covers = []
    for x, y in less:
        if not any((x, z) in lset and (z, y) in lset for z in verts):
            color = None
            if graph.rank[y] == graph.rank[x] + 1:
                for i, t in graph.fwd[x].items():
                    if t == y:
                        color = i
                        break
            covers.append((x, y, color))
    adjacency: dict[int, set[int]] = {v: set() for v in verts}
    for x, y in less:
        adjacency[x].add(y)
        adjacency[y].add(x)
    seen: set[int] = set()
    components = []
    for v in verts:
        if v in seen:
            continue
        stack, comp = [v], []
        seen.add(v)
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in adjacency[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        components.append(tuple(sorted(comp)))
    components.sort()
    return Fiber(
        word=w,
        vertices=tuple(verts),
        relations=tuple(sorted(less)),
        covers=tuple(sorted(covers)),
        components=tuple(components),
    )


def stabilizer_indices(weight_vector: tuple[int, ...]) -> frozenset[int]:
    """Colors whose simple reflection fixes the given weight."""
    return frozenset(
        k + 1 for k in range(len(weight_vector) - 1)
        if weight_vector[k] == weight_vector[k + 1]
    )


def shape_stabilizer(graph: CrystalGraph) -> frozenset[int]:
    """Stabilizer of the highest weight, read off the minimum's weight."""
    if graph.minimum is None:
        raise ValueError("graph has no unique minimum")
    return stabilizer_indices(graph.weights[graph.minimum])


def fiber_extremes(
    graph: CrystalGraph, table: KeyTable, parabolic: frozenset[int] | set[int]
) -> tuple[int, int] | None:
    """Unique minimum and maximum of the fiber at the longest element of the
    parabolic on the given colors; None when that fiber is empty (exactly
    the case of an index stabilizing the highest weight).
    """
    w = weyl.longest_parabolic(parabolic, graph.n)
    fib = fiber(graph, table, w)
    avoids_stabilizer = set(parabolic) <= set(graph.colors) - shape_stabilizer(graph)
    if not fib.vertices:
        if avoids_stabilizer:
            raise FiberStructureError(
                f"empty fiber at {w} despite indices avoiding the stabilizer"
            )
        return None
    if not avoids_stabilizer:
        raise FiberStructureError(f"nonempty fiber at {w} despite a stabilizer index")
    lset = set(fib.relations)
    minima = [v for v in fib.vertices if not any((x, v) in lset for x in fib.vertices)]
    maxima = [v for v in fib.vertices if not any((v, x) in lset for x in fib.vertices)]
    if len(minima) != 1 or len(maxima) != 1:
        raise FiberStructureError(
            f"fiber at {w} has minima {minima} and maxima {maxima}"
        )
    return minima[0], maxima[0]


def demazure(graph: CrystalGraph, table: KeyTable, w: Permutation) -> frozenset[int]:
    """Vertices whose key is below w in strong Bruhat order."""
    w = weyl.check_permutation(w)
    return frozenset(v for v in range(len(graph)) if weyl.strong_bruhat_leq(table[v], w))


def minimal_fiber_elements(graph: CrystalGraph, table: KeyTable) -> dict[frozenset[int], int]:
    """For every color subset avoiding the stabilizer, the minimum of the
    fiber at the corresponding longest parabolic element."""
    free = sorted(set(graph.colors) - shape_stabilizer(graph))
    out: dict[frozenset[int], int] = {}
    for r in range(len(free) + 1):
        for sub in combinations(free, r):
            j = frozenset(sub)
            extremes = fiber_extremes(graph, table, j)
            if extremes is None:
                raise FiberStructureError(f"unexpected empty fiber at indices {sorted(j)}")
            out[j] = extremes[0]
    return out


def key_table_to_json(table: KeyTable) -> dict:
    """Vertex index -> one-line permutation string."""
    return {
        str(v): weyl.permutation_to_string(table[v]) for v in range(len(table))
    }


def fiber_to_json(fib: Fiber) -> dict:
    return {
        "key": weyl.permutation_to_string(fib.word),
        "vertices": list(fib.vertices),
        "components": [list(c) for c in fib.components],
        "covers": [[a, b, c] for a, b, c in fib.covers],
    }
