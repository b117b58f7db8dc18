"""
Executable reproduction of the concrete structural facts about tableau
crystal posets that this package exists to check: the rank-4 interval with
Mobius value 2, chain-move disconnectivity with Catalan-counted components,
product intervals with Mobius value 2^r, the non-lattice witness, the
disconnected key fiber, the 0/+-1 classification of lower and upper interval
Mobius values, axiom and chain-connectivity sweeps, and witness extraction
wherever |mu| >= 2.

Every scenario returns a :class:`Certificate` whose expected side carries a
provenance tag: "reported" values are fixed targets, "derived" values are
recomputed inline by an independent brute-force oracle before being
compared.  The certificate stream is deterministic; runtimes are kept out
of the canonical JSON so that two runs agree byte for byte.
"""

from __future__ import annotations

import json
import math
import time
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterable

from . import keymap, poset, weyl
from .crystal import (
    CrystalGraph,
    Tableau,
    check_stembridge_axioms,
    generate,
    local_structure,
)

DEFAULT_MATRIX: tuple[tuple[tuple[int, ...], int], ...] = (
    ((2, 1), 3),
    ((3, 2), 4),
    ((4, 3), 4),
    ((2, 2), 4),
)

BASE_BOTTOM = ((1, 1, 1, 2), (2, 3, 4))
BASE_TOP = ((1, 1, 2, 3), (3, 4, 4))


@dataclass
class Certificate:
    scenario: str
    claim: str
    provenance: str
    expected: object
    computed: object
    passed: bool
    runtime: float

    def to_json(self) -> dict:
        # runtime deliberately omitted: the certificate stream must be
        # byte-identical across runs
        return {
            "scenario": self.scenario,
            "claim": self.claim,
            "provenance": self.provenance,
            "expected": self.expected,
            "computed": self.computed,
            "passed": self.passed,
        }


def _certify(scenario: str, claim: str, provenance: str,
             expected: object, computed: object, started: float) -> Certificate:
    return Certificate(
        scenario=scenario,
        claim=claim,
        provenance=provenance,
        expected=expected,
        computed=computed,
        passed=expected == computed,
        runtime=time.perf_counter() - started,
    )


# -- independent brute-force oracles (used to recompute derived targets) ----

def _brute_interval(graph: CrystalGraph, u: int, v: int) -> set[int]:
    """Unpruned up-set/down-set intersection; the oracle for extraction."""

    def closure(start: int, adjacency) -> set[int]:
        seen = {start}
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y in adjacency[x].values():
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return seen

    return closure(u, graph.fwd) & closure(v, graph.bwd)


def _all_lower_mobius_from(graph: CrystalGraph, u: int) -> dict[int, int]:
    """mu(u, z) for every z >= u, by the defining recursion with bitsets."""
    order = sorted(range(len(graph)), key=lambda v: graph.rank[v])
    upset = {u}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        for y in graph.fwd[x].values():
            if y not in upset:
                upset.add(y)
                queue.append(y)
    down: dict[int, int] = {}
    mu: dict[int, int] = {}
    for z in order:
        if z not in upset:
            continue
        mask = 1 << z
        for p in graph.bwd[z].values():
            if p in upset:
                mask |= down[p]
        down[z] = mask
        if z == u:
            mu[z] = 1
            continue
        total = 0
        rest = mask & ~(1 << z)
        while rest:
            bit = rest & (-rest)
            total += mu[bit.bit_length() - 1]
            rest ^= bit
        mu[z] = -total
    return mu


def _catalan(k: int) -> int:
    return math.comb(2 * k, k) // (k + 1)


# -- scenarios ---------------------------------------------------------------

def s1_base_interval() -> Certificate:
    """Mobius value 2 on the 12-vertex rank-4 interval of B((4,3),4)."""
    started = time.perf_counter()
    graph = generate((4, 3), 4)
    u, v = graph.index[BASE_BOTTOM], graph.index[BASE_TOP]
    itv = poset.interval(graph, u, v)
    chains = poset.saturated_chains(itv)
    expected = {
        "mobius": 2,
        "euler": 2,
        "vertices": len(_brute_interval(graph, u, v)),
        "chain_label_multiset": [1, 2, 2, 3],
    }
    computed = {
        "mobius": poset.interval_mobius(itv),
        "euler": poset.euler_mobius(itv),
        "vertices": len(itv),
        "chain_label_multiset": sorted(chains[0].labels)
        if all(sorted(c.labels) == sorted(chains[0].labels) for c in chains)
        else None,
    }
    return _certify(
        "s1",
        "interval [1,1,1,2/2,3,4, 1,1,2,3/3,4,4] of B((4,3),4): mu = 2, "
        "Euler characteristic agrees, 12 vertices, labels {1,2,2,3}",
        "reported mu; derived vertex count",
        expected,
        computed,
        started,
    )


def _two_row_endpoints(n: int) -> tuple[Tableau, Tableau]:
    """Endpoints of the disconnected interval in B((n+1, n), n+1)."""
    bottom = (
        (1, 1, 1) + tuple(range(2, n)),
        tuple(range(2, n + 2)),
    )
    top = (
        (1, 1) + tuple(range(2, n + 1)),
        tuple(range(3, n + 2)) + (n + 1,),
    )
    return bottom, top


def s2_disconnected_chains(n: int) -> Certificate:
    """The rank 2n-1 two-row interval splits under chain moves, with the
    label-increasing chain's component counted by a Catalan number."""
    started = time.perf_counter()
    if not 3 <= n <= 6:
        raise ValueError(f"two-row family is supported for 3 <= n <= 6, got {n}")
    graph = generate((n + 1, n), n + 1)
    bottom, top = _two_row_endpoints(n)
    itv = poset.interval(graph, graph.index[bottom], graph.index[top])
    chains, components = poset.stembridge_components(itv)

    increasing = (1,) + tuple(c for i in range(2, n) for c in (i, i)) + (n,)
    decreasing = tuple(reversed(increasing))

    def component_of(labels: tuple[int, ...]) -> int | None:
        walk = [itv.bottom]
        for i in labels:
            nxt = itv.fwd[walk[-1]].get(i)
            if nxt is None:
                return None
            walk.append(nxt)
        key = tuple(walk)
        for k, comp in enumerate(components):
            if any(chains[c].vertices == key for c in comp):
                return k
        return None

    inc_comp = component_of(increasing)
    dec_comp = component_of(decreasing)
    expected = {
        "components_at_least_2": True,
        "extremal_chains_separated": True,
        "increasing_component_chains": _catalan(n - 2),
    }
    computed = {
        "components_at_least_2": len(components) >= 2,
        "extremal_chains_separated": (
            inc_comp is not None and dec_comp is not None and inc_comp != dec_comp
        ),
        "increasing_component_chains": (
            len(components[inc_comp]) if inc_comp is not None else None
        ),
    }
    return _certify(
        f"s2[n={n}]",
        f"two-row interval in B(({n + 1},{n}),{n + 1}): >= 2 chain-move components, "
        f"increasing/decreasing chains separated, increasing component has "
        f"C_{n - 2} = {_catalan(n - 2)} chains",
        "reported",
        expected,
        computed,
        started,
    )


def _composite_endpoints(r: int) -> tuple[Tableau, Tableau, int]:
    """Stacked copies of the base interval endpoints, letters shifted by 4
    per copy and glued along a frozen staircase; alphabet size 4r."""
    n = 4 * r
    rows_bottom: list[tuple[int, ...]] = []
    rows_top: list[tuple[int, ...]] = []
    for k in range(1, r + 1):
        pad = 4 * (r - k)
        offset = 4 * (k - 1)
        for row_idx, base_b, base_t in (
            (2 * k - 1, BASE_BOTTOM[0], BASE_TOP[0]),
            (2 * k, BASE_BOTTOM[1], BASE_TOP[1]),
        ):
            frozen = (row_idx,) * pad
            rows_bottom.append(frozen + tuple(x + offset for x in base_b))
            rows_top.append(frozen + tuple(x + offset for x in base_t))
    return tuple(rows_bottom), tuple(rows_top), n


def _split_composite(rows: Tableau, r: int) -> tuple[Tableau, ...]:
    """Project a composite tableau back onto its r base-shaped copies."""
    parts = []
    for k in range(1, r + 1):
        pad = 4 * (r - k)
        offset = 4 * (k - 1)
        row1 = tuple(x - offset for x in rows[2 * k - 2][pad:])
        row2 = tuple(x - offset for x in rows[2 * k - 1][pad:])
        parts.append((row1, row2))
    return tuple(parts)


def s3_product_mobius(r: int = 2) -> Certificate:
    """Mobius value 2^r on the composite interval, which is verified to be
    isomorphic to the r-fold product of the base interval."""
    started = time.perf_counter()
    base = poset.free_interval(BASE_BOTTOM, BASE_TOP, 4)
    bottom, top, n = _composite_endpoints(r)
    itv = poset.free_interval(bottom, top, n)

    base_vertices = set(base.payloads)
    base_edges = {
        (base.payloads[a], base.payloads[b], i) for a, b, i in base.covers
    }
    iso_ok = len({_split_composite(t, r) for t in itv.payloads}) == len(itv)
    iso_ok &= all(
        part in base_vertices for t in itv.payloads for part in _split_composite(t, r)
    )
    for a, b, color in itv.covers:
        pa, pb = _split_composite(itv.payloads[a], r), _split_composite(itv.payloads[b], r)
        copy, local_color = divmod(color - 1, 4)
        local_color += 1
        changed = [k for k in range(r) if pa[k] != pb[k]]
        iso_ok &= changed == [copy] and local_color <= 3
        iso_ok &= (pa[copy], pb[copy], local_color) in base_edges

    base_sizes = [0] * (base.span + 1)
    for rk in base.ranks:
        base_sizes[rk] += 1
    product_sizes = [0] * (r * base.span + 1)
    for profile in _rank_profiles(base_sizes, r):
        product_sizes[profile[0]] += profile[1]
    sizes = [0] * (itv.span + 1)
    for rk in itv.ranks:
        sizes[rk] += 1

    expected = {
        "mobius": 2 ** r,
        "vertices": len(base) ** r,
        "edges": r * len(base.covers) * len(base) ** (r - 1),
        "rank_sizes": product_sizes,
        "product_isomorphism": True,
    }
    computed = {
        "mobius": poset.interval_mobius(itv),
        "vertices": len(itv),
        "edges": len(itv.covers),
        "rank_sizes": sizes,
        "product_isomorphism": iso_ok,
    }
    return _certify(
        f"s3[r={r}]",
        f"composite interval built from {r} letter-shifted copies of the base "
        f"interval: mu = 2^{r}, {len(base) ** r} vertices, isomorphic to the "
        "product of the copies",
        "reported mu; derived isomorphism",
        expected,
        computed,
        started,
    )


def _rank_profiles(base_sizes: list[int], r: int) -> Iterable[tuple[int, int]]:
    """(total rank, count) pairs of the r-fold product of a rank-size vector."""
    profile = {0: 1}
    for _ in range(r):
        nxt: dict[int, int] = {}
        for total, count in profile.items():
            for rk, size in enumerate(base_sizes):
                nxt[total + rk] = nxt.get(total + rk, 0) + count * size
        profile = nxt
    return sorted(profile.items())


def s4_non_lattice() -> Certificate:
    """Two incomparable minimal upper bounds inside B((4,3),4)."""
    started = time.perf_counter()
    graph = generate((4, 3), 4)
    t = graph.index[((1, 1, 2, 2), (2, 3, 4))]
    s = graph.index[((1, 1, 1, 2), (3, 3, 4))]
    bound_one = graph.index[BASE_TOP]
    bound_two = graph.index[((1, 2, 2, 3), (3, 3, 4))]
    mubs = poset.minimal_upper_bounds(graph, t, s)

    def chase(v: int, word: tuple[int, ...]) -> int | None:
        cur: int | None = v
        for i in word:
            if cur is None:
                return None
            cur = graph.fwd[cur].get(i)
        return cur

    expected = {
        "contains_both_bounds": True,
        "bounds_incomparable": True,
        "second_equals_f1f2f2_of_t": True,
        "second_equals_f2f1f1_of_s": True,
        "at_least_two": True,
    }
    computed = {
        "contains_both_bounds": bound_one in mubs and bound_two in mubs,
        "bounds_incomparable": not poset.graph_leq(graph, bound_one, bound_two)
        and not poset.graph_leq(graph, bound_two, bound_one),
        "second_equals_f1f2f2_of_t": chase(t, (2, 2, 1)) == bound_two,
        "second_equals_f2f1f1_of_s": chase(s, (1, 1, 2)) == bound_two,
        "at_least_two": len(mubs) >= 2,
    }
    return _certify(
        "s4",
        "B((4,3),4) is not a lattice: 1,1,2,2/2,3,4 and 1,1,1,2/3,3,4 have two "
        "incomparable minimal upper bounds",
        "reported",
        expected,
        computed,
        started,
    )


def s5_disconnected_fiber() -> Certificate:
    """The key fiber at 2413 in B((3,2),4) has components of sizes 2 and 6."""
    started = time.perf_counter()
    graph = generate((3, 2), 4)
    table = keymap.compute_keys(graph)
    fib = keymap.fiber(graph, table, (2, 4, 1, 3))
    identity_fiber = keymap.fiber(graph, table, weyl.identity(4))
    cover_colors = sorted(c for _, _, c in fib.covers if c is not None)
    expected = {
        "size": 8,
        "component_sizes": [2, 6],
        "cover_colors": [1, 1, 1, 1, 1, 3, 3, 3],
        "identity_fiber": [graph.minimum],
    }
    computed = {
        "size": len(fib.vertices),
        "component_sizes": sorted(len(c) for c in fib.components),
        "cover_colors": cover_colors if len(cover_colors) == len(fib.covers) else None,
        "identity_fiber": list(identity_fiber.vertices),
    }
    return _certify(
        "s5",
        "key fiber at 2413 in B((3,2),4): 8 elements in components of sizes 2 "
        "and 6 with cover colors drawn from {1,3}",
        "reported",
        expected,
        computed,
        started,
    )


def s6_lower_interval_mobius(shape: tuple[int, ...], n: int) -> Certificate:
    """mu(min, x) lands in {0, +-1}, vanishing except at fiber minima of
    longest parabolic elements, where the sign is (-1)^|J|; dually for
    mu(x, max) on the reversed graph."""
    started = time.perf_counter()
    graph = generate(shape, n)

    def classify(g: CrystalGraph) -> tuple[bool, int]:
        table = keymap.compute_keys(g)
        minima = keymap.minimal_fiber_elements(g, table)
        predicted = {v: (-1) ** len(j) for j, v in minima.items()}
        mu = poset.lower_mobius_all(g)
        ok = all(mu[v] == predicted.get(v, 0) for v in range(len(g)))
        ok &= all(abs(m) <= 1 for m in mu)
        return ok, sum(1 for m in mu if m != 0)

    primal_ok, primal_nonzero = classify(graph)
    dual_ok, dual_nonzero = classify(graph.reverse())
    expected = {
        "primal_classification": True,
        "dual_classification": True,
        "nonzero_counts_match": True,
    }
    computed = {
        "primal_classification": primal_ok,
        "dual_classification": dual_ok,
        "nonzero_counts_match": primal_nonzero == dual_nonzero,
    }
    return _certify(
        f"s6[{_shape_tag(shape, n)}]",
        f"B({shape},{n}): lower-interval Mobius values are 0 or (-1)^|J| exactly "
        "at fiber minima of longest parabolic elements; dually on the reversed graph",
        "reported",
        expected,
        computed,
        started,
    )


def _lower_intervals_connected(graph: CrystalGraph) -> bool:
    """Every interval [min, v] has one chain-move component."""
    for v in range(len(graph)):
        itv = poset.interval(graph, graph.minimum, v)
        _, components = poset.stembridge_components(itv)
        if len(components) != 1:
            return False
    return True


def s7_axioms_and_connectivity(shape: tuple[int, ...], n: int) -> Certificate:
    """Local axioms hold everywhere and chain moves connect the maximal
    chains of every lower interval, and dually of every upper interval."""
    started = time.perf_counter()
    graph = generate(shape, n)
    report = check_stembridge_axioms(graph)
    expected = {
        "axioms": True,
        "lower_intervals_connected": True,
        "upper_intervals_connected": True,
    }
    computed = {
        "axioms": report.passed,
        "lower_intervals_connected": _lower_intervals_connected(graph),
        "upper_intervals_connected": _lower_intervals_connected(graph.reverse()),
    }
    return _certify(
        f"s7[{_shape_tag(shape, n)}]",
        f"B({shape},{n}): local structure axioms pass and every lower and upper "
        "interval has exactly one chain-move component",
        "reported",
        expected,
        computed,
        started,
    )


def s8_witness_from_mobius() -> Certificate:
    """Wherever |mu| >= 2 in the test matrix there is a covering pair with
    no least upper bound inside the interval; and every degree-2/degree-4
    local upper bound is a minimal upper bound."""
    started = time.perf_counter()
    big_intervals = 0
    witnesses = 0
    for shape, n in DEFAULT_MATRIX:
        graph = generate(shape, n)
        for u in range(len(graph)):
            for v, mu in _all_lower_mobius_from(graph, u).items():
                if abs(mu) >= 2:
                    big_intervals += 1
                    itv = poset.interval(graph, u, v)
                    if poset.non_stembridge_witness(itv) is not None:
                        witnesses += 1

    composite = poset.free_interval(*_composite_endpoints(2)[:2], 8)
    composite_witness = poset.non_stembridge_witness(composite) is not None
    big_intervals += 1
    witnesses += 1 if composite_witness else 0

    graph = generate((4, 3), 4)
    local_bounds_minimal = True
    for u in range(len(graph)):
        for i, j in combinations(sorted(graph.fwd[u]), 2):
            structure = local_structure(graph, u, i, j)
            mubs = poset.minimal_upper_bounds(graph, graph.fwd[u][i], graph.fwd[u][j])
            local_bounds_minimal &= structure.top in mubs

    expected = {
        "intervals_with_large_mobius": big_intervals,
        "witnesses_found": big_intervals,
        "witness_in_base_interval": True,
        "local_upper_bounds_minimal": True,
    }
    computed = {
        "intervals_with_large_mobius": big_intervals,
        "witnesses_found": witnesses,
        "witness_in_base_interval": poset.non_stembridge_witness(
            poset.free_interval(BASE_BOTTOM, BASE_TOP, 4)
        )
        is not None,
        "local_upper_bounds_minimal": local_bounds_minimal,
    }
    return _certify(
        "s8",
        "every interval with |mu| >= 2 found in the matrix carries a covering "
        "pair without a least upper bound, and local upper bounds are minimal",
        "reported",
        expected,
        computed,
        started,
    )


def s10_staircase_sphere() -> Certificate:
    """mu(min, max) is (-1)^rank for staircase shapes and 0 otherwise."""
    started = time.perf_counter()
    cases = (
        ((2, 1), 3, 1),
        ((3, 2, 1), 4, -1),
        ((3, 1), 3, 0),
        ((4, 2, 1), 4, 0),
        ((2, 2), 4, 0),
    )
    expected = {}
    computed = {}
    for shape, n, target in cases:
        graph = generate(shape, n)
        tag = _shape_tag(shape, n)
        expected[tag] = target
        mu = poset.lower_mobius_all(graph)[graph.maximum]
        # inline oracle: the chain-counting Euler characteristic must agree
        euler = poset.euler_mobius(poset.interval(graph, graph.minimum, graph.maximum))
        computed[tag] = mu if mu == euler else f"mu={mu} euler={euler}"
    return _certify(
        "s10",
        "mu(min, max) equals 1 for B((2,1),3), -1 for B((3,2,1),4), and 0 for "
        "the non-staircase shapes (3,1), (4,2,1), (2,2)",
        "derived",
        expected,
        computed,
        started,
    )


def _shape_tag(shape: tuple[int, ...], n: int) -> str:
    return f"{','.join(str(p) for p in shape)}|n={n}"


# -- driver -------------------------------------------------------------------

def _scenario_thunks(n_max: int) -> list[tuple[str, Callable[[], Certificate]]]:
    thunks: list[tuple[str, Callable[[], Certificate]]] = [
        ("s1", s1_base_interval),
        ("s4", s4_non_lattice),
        ("s5", s5_disconnected_fiber),
        ("s8", s8_witness_from_mobius),
        ("s10", s10_staircase_sphere),
        ("s3", s3_product_mobius),
    ]
    for n in range(3, min(n_max, 6) + 1):
        thunks.append(("s2", lambda n=n: s2_disconnected_chains(n)))
    for shape, n in DEFAULT_MATRIX:
        thunks.append(("s6", lambda shape=shape, n=n: s6_lower_interval_mobius(shape, n)))
        thunks.append(("s7", lambda shape=shape, n=n: s7_axioms_and_connectivity(shape, n)))
    return thunks


def _sort_key(cert: Certificate) -> tuple[int, str]:
    head = cert.scenario.split("[")[0]
    return int(head[1:]), cert.scenario


def run_all(n_max: int = 5, only: str | None = None, jobs: int = 1) -> list[Certificate]:
    """Run the certificate suite; ``only`` filters by scenario id (e.g. "s2"),
    ``jobs`` runs scenarios concurrently with a deterministic merged order."""
    thunks = _scenario_thunks(n_max)
    if only is not None:
        thunks = [(sid, fn) for sid, fn in thunks if sid == only]
        if not thunks:
            raise ValueError(f"unknown scenario id {only!r}")

    def run_one(item: tuple[str, Callable[[], Certificate]]) -> Certificate:
        sid, fn = item
        try:
            return fn()
        except Exception as exc:  # a crashed scenario is a failed scenario
            return Certificate(
                scenario=sid,
                claim="scenario crashed",
                provenance="reported",
                expected="completion",
                computed=f"{type(exc).__name__}: {exc}",
                passed=False,
                runtime=0.0,
            )

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            certificates = list(pool.map(run_one, thunks))
    else:
        certificates = [run_one(item) for item in thunks]
    return sorted(certificates, key=_sort_key)


def certificates_to_json(certificates: list[Certificate]) -> str:
    payload = {
        "all_passed": all(c.passed for c in certificates),
        "certificates": [c.to_json() for c in certificates],
    }
    return json.dumps(payload, indent=2, sort_keys=True)
