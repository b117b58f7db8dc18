"""
Tableau crystals of type A: semistandard Young tableaux, the signature rule
for the raising/lowering operators, full graph generation, string statistics,
and verification of the local structure axioms.

A tableau is a tuple of rows, each row a tuple of integers in 1..n, weakly
increasing along rows and strictly increasing down columns.  The crystal
graph on all such tableaux of a fixed shape has a colored edge T -i-> T'
whenever T' = f_i(T); viewed as a poset it is graded with a unique minimum
(the superstandard filling) and, being finite, a unique maximum.

Graphs are immutable after generation and all queries are pure, so a graph
may be shared freely across threads.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable

Shape = tuple[int, ...]
Tableau = tuple[tuple[int, ...], ...]
Cell = tuple[int, int]

DEFAULT_VERTEX_CAP = 2_000_000


class GraphSizeError(RuntimeError):
    """Raised when generation would exceed the configured vertex cap."""


def check_shape(shape: Shape) -> Shape:
    shape = tuple(shape)
    if not shape or any(p < 1 for p in shape):
        raise ValueError(f"shape parts must be positive: {shape}")
    if any(shape[i] < shape[i + 1] for i in range(len(shape) - 1)):
        raise ValueError(f"shape must be weakly decreasing: {shape}")
    return shape


def staircase(r: int) -> Shape:
    """The partition (r, r-1, ..., 1)."""
    return tuple(range(r, 0, -1))


def is_semistandard(rows: Tableau, n: int) -> bool:
    for r, row in enumerate(rows):
        for c, val in enumerate(row):
            if not 1 <= val <= n:
                return False
            if c + 1 < len(row) and row[c] > row[c + 1]:
                return False
            if r + 1 < len(rows) and c < len(rows[r + 1]) and val >= rows[r + 1][c]:
                return False
    return True


def check_tableau(rows: Tableau, n: int, shape: Shape | None = None) -> Tableau:
    rows = tuple(tuple(row) for row in rows)
    if shape is not None and tuple(len(row) for row in rows) != tuple(shape):
        raise ValueError(f"tableau rows {rows} do not match shape {shape}")
    check_shape(tuple(len(row) for row in rows))
    if not is_semistandard(rows, n):
        raise ValueError(f"not semistandard with entries in 1..{n}: {rows}")
    return rows


def weight(rows: Tableau, n: int) -> tuple[int, ...]:
    """Content vector (c_1, ..., c_n); c_k = multiplicity of the letter k.

    >>> weight(((1, 1, 2, 3), (3, 4, 4)), 4)
    (2, 1, 2, 2)
    """
    content = [0] * n
    for row in rows:
        for val in row:
            content[val - 1] += 1
    return tuple(content)


def highest(shape: Shape, n: int) -> Tableau:
    """The superstandard tableau: row j filled with the letter j.

    >>> highest((2, 1), 3)
    ((1, 1), (2,))
    """
    shape = check_shape(shape)
    if len(shape) > n:
        raise ValueError(f"shape {shape} has more than n={n} rows")
    return tuple(tuple(j + 1 for _ in range(shape[j])) for j in range(len(shape)))


def cartan_entry(i: int, j: int) -> int:
    """Type A Cartan matrix entry a_ij: 2, -1 for adjacent colors, else 0."""
    if i == j:
        return 2
    return -1 if abs(i - j) == 1 else 0


@dataclass(frozen=True)
class Signature:
    """Surviving symbols of the bracket cancellation for one color.

    ``plus_cells``/``minus_cells`` hold the (row, col) addresses of the
    surviving letters i and i+1, in scan order; the reduced word is then
    '+' * x followed by '-' * y.
    """

    plus_cells: tuple[Cell, ...]
    minus_cells: tuple[Cell, ...]

    @property
    def x(self) -> int:
        return len(self.plus_cells)

    @property
    def y(self) -> int:
        return len(self.minus_cells)

    @property
    def word(self) -> str:
        return "+" * self.x + "-" * self.y


def i_signature(rows: Tableau, i: int) -> Signature:
    """Scan columns left to right, bottom to top; record + for the letter i
    and - for i+1; repeatedly delete adjacent "-+" pairs.

    >>> i_signature(((1, 2, 2, 2, 2, 3), (3, 3, 4)), 2).word
    '++-'
    """
    ncols = len(rows[0]) if rows else 0
    stack: list[tuple[str, Cell]] = []
    for c in range(ncols):
        for r in range(len(rows) - 1, -1, -1):
            if c >= len(rows[r]):
                continue
            val = rows[r][c]
            if val == i:
                if stack and stack[-1][0] == "-":
                    stack.pop()
                else:
                    stack.append(("+", (r, c)))
            elif val == i + 1:
                stack.append(("-", (r, c)))
    plus = tuple(cell for sym, cell in stack if sym == "+")
    minus = tuple(cell for sym, cell in stack if sym == "-")
    return Signature(plus, minus)


def _replace(rows: Tableau, cell: Cell, val: int) -> Tableau:
    r, c = cell
    row = rows[r][:c] + (val,) + rows[r][c + 1 :]
    return rows[:r] + (row,) + rows[r + 1 :]


def apply_f(rows: Tableau, i: int) -> Tableau | None:
    """Lowering operator: increment the letter i of the rightmost surviving +.

    >>> apply_f(((1, 2, 2, 2, 2, 3), (3, 3, 4)), 2)
    ((1, 2, 2, 2, 3, 3), (3, 3, 4))
    """
    sig = i_signature(rows, i)
    if sig.x == 0:
        return None
    return _replace(rows, sig.plus_cells[-1], i + 1)


def apply_e(rows: Tableau, i: int) -> Tableau | None:
    """Raising operator: decrement the letter i+1 of the leftmost surviving -.

    >>> apply_e(((1, 2, 2, 2, 3, 3), (3, 3, 4)), 2)
    ((1, 2, 2, 2, 2, 3), (3, 3, 4))
    """
    sig = i_signature(rows, i)
    if sig.y == 0:
        return None
    return _replace(rows, sig.minus_cells[0], i)


@dataclass(frozen=True)
class StringStats:
    """Length of the monochromatic string through a vertex: ``rise`` steps
    remain upward (f applications), ``depth`` = -(steps downward)."""

    rise: int
    depth: int


@dataclass
class CrystalGraph:
    """Edge-colored cover graph of a tableau crystal.

    Vertices are indexed in generation (BFS) order, children explored in
    increasing color order, which makes every export reproducible.  Both
    forward and backward adjacency are kept per color so string walks are
    O(1) per step.  ``weights`` stores the per-vertex content vectors used
    for interval budgets; on a reversed view they are negated so that the
    edge rule wt(target) = wt(source) - alpha_color keeps holding.
    """

    shape: Shape | None
    n: int
    vertices: tuple[Tableau, ...]
    edges: tuple[tuple[int, int, int], ...]
    fwd: tuple[dict[int, int], ...]
    bwd: tuple[dict[int, int], ...]
    rank: tuple[int, ...]
    weights: tuple[tuple[int, ...], ...]
    minimum: int | None
    maximum: int | None
    is_dual: bool = False
    index: dict[Tableau, int] = field(repr=False, default_factory=dict)

    def __post_init__(self) -> None:
        if not self.index:
            self.index = {t: k for k, t in enumerate(self.vertices)}

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def colors(self) -> range:
        return range(1, self.n)

    def f(self, v: int, i: int) -> int | None:
        return self.fwd[v].get(i)

    def e(self, v: int, i: int) -> int | None:
        return self.bwd[v].get(i)

    def rank_sizes(self) -> tuple[int, ...]:
        span = max(self.rank) if self.rank else 0
        sizes = [0] * (span + 1)
        for r in self.rank:
            sizes[r] += 1
        return tuple(sizes)

    def reverse(self) -> "CrystalGraph":
        """Dual view: edges reversed, rank flipped, weights negated.

        The result is again a valid crystal graph (the color relabeling
        that would restore the usual conventions does not matter for any
        of the poset analytics here).
        """
        span = max(self.rank) if self.rank else 0
        return CrystalGraph(
            shape=self.shape,
            n=self.n,
            vertices=self.vertices,
            edges=tuple((b, a, i) for (a, b, i) in self.edges),
            fwd=self.bwd,
            bwd=self.fwd,
            rank=tuple(span - r for r in self.rank),
            weights=tuple(tuple(-c for c in wt) for wt in self.weights),
            minimum=self.maximum,
            maximum=self.minimum,
            is_dual=not self.is_dual,
            index=self.index,
        )


def generate(shape: Shape, n: int, max_vertices: int = DEFAULT_VERTEX_CAP) -> CrystalGraph:
    """Breadth-first closure of the superstandard tableau under all f_i.

    >>> len(generate((2, 1), 3))
    8
    """
    top = highest(shape, n)
    vertices: list[Tableau] = [top]
    index: dict[Tableau, int] = {top: 0}
    fwd: list[dict[int, int]] = [{}]
    rank: list[int] = [0]
    edges: list[tuple[int, int, int]] = []
    head = 0
    while head < len(vertices):
        v = head
        head += 1
        rows = vertices[v]
        for i in range(1, n):
            image = apply_f(rows, i)
            if image is None:
                continue
            if not is_semistandard(image, n):
                raise RuntimeError(f"operator f_{i} broke semistandardness at {rows}")
            w = index.get(image)
            if w is None:
                if len(vertices) >= max_vertices:
                    raise GraphSizeError(
                        f"vertex cap {max_vertices} exceeded generating B({shape}, n={n})"
                    )
                w = len(vertices)
                index[image] = w
                vertices.append(image)
                fwd.append({})
                rank.append(rank[v] + 1)
            edges.append((v, w, i))
            fwd[v][i] = w
    bwd: list[dict[int, int]] = [{} for _ in vertices]
    for a, b, i in edges:
        bwd[b][i] = a
    sources = [v for v in range(len(vertices)) if not bwd[v]]
    sinks = [v for v in range(len(vertices)) if not fwd[v]]
    if sources != [0] or len(sinks) != 1:
        raise RuntimeError(f"crystal of {shape} lacks a unique minimum/maximum")
    return CrystalGraph(
        shape=check_shape(shape),
        n=n,
        vertices=tuple(vertices),
        edges=tuple(edges),
        fwd=tuple(fwd),
        bwd=tuple(bwd),
        rank=tuple(rank),
        weights=tuple(weight(t, n) for t in vertices),
        minimum=0,
        maximum=sinks[0],
        index=index,
    )


def string_stats(graph: CrystalGraph, v: int, i: int) -> StringStats:
    """Walk the color-i string through v in both directions."""
    rise = 0
    cur = v
    while (nxt := graph.fwd[cur].get(i)) is not None:
        cur = nxt
        rise += 1
    down = 0
    cur = v
    while (nxt := graph.bwd[cur].get(i)) is not None:
        cur = nxt
        down += 1
    return StringStats(rise=rise, depth=-down)


@dataclass(frozen=True)
class AxiomReport:
    """Outcome of the local-structure check; ``witness`` pinpoints the first
    violation as (axiom, vertex, i, j, detail)."""

    passed: bool
    axiom: str | None = None
    vertex: int | None = None
    i: int | None = None
    j: int | None = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.passed


def _apply_word(graph: CrystalGraph, v: int, word: Iterable[int], direction: str) -> int | None:
    adj = graph.bwd if direction == "e" else graph.fwd
    cur: int | None = v
    for i in word:
        if cur is None:
            return None
        cur = adj[cur].get(i)
    return cur


def check_stembridge_axioms(graph: CrystalGraph) -> AxiomReport:
    """Verify the degree bounds and all difference conditions on string
    statistics at every vertex/color pair, from graph walks alone (no
    tableau formulas), so imported graphs can be audited too.
    """
    colors = list(graph.colors)

    # no monochromatic circuits: per color, follow out-edges with a step cap
    cap = len(graph.vertices)
    for v in range(len(graph.vertices)):
        for i in colors:
            cur, steps = v, 0
            while (nxt := graph.fwd[cur].get(i)) is not None:
                cur = nxt
                steps += 1
                if steps > cap:
                    return AxiomReport(False, "P1", v, i, None, "monochromatic circuit")

    def delta(v: int) -> dict[int, int]:
        return {j: string_stats(graph, v, j).depth for j in colors}

    def rise(v: int) -> dict[int, int]:
        return {j: string_stats(graph, v, j).rise for j in colors}

    for b in range(len(graph.vertices)):
        d_b, r_b = delta(b), rise(b)
        for i in colors:
            bp = graph.bwd[b].get(i)
            if bp is None:
                continue
            d_bp, r_bp = delta(bp), rise(bp)
            for j in colors:
                dd = d_bp[j] - d_b[j]
                de = r_bp[j] - r_b[j]
                if dd + de != cartan_entry(i, j):
                    return AxiomReport(
                        False, "P3", b, i, j,
                        f"delta-depth {dd} + delta-rise {de} != a_ij {cartan_entry(i, j)}",
                    )
                if i != j and (dd > 0 or de > 0):
                    return AxiomReport(False, "P4", b, i, j, f"positive difference ({dd}, {de})")

        for i in colors:
            for j in colors:
                if i == j or graph.bwd[b].get(i) is None or graph.bwd[b].get(j) is None:
                    continue
                d_bi = delta(graph.bwd[b][i])
                dd_ij = d_bi[j] - d_b[j]
                if dd_ij == 0:
                    x = _apply_word(graph, b, (i, j), "e")
                    y = _apply_word(graph, b, (j, i), "e")
                    if x is None or y is None or x != y:
                        return AxiomReport(False, "P5", b, i, j, "raising square does not close")
                    fx = graph.fwd[x].get(j)
                    if fx is None or rise(x)[i] - rise(fx)[i] != 0:
                        return AxiomReport(False, "P5", b, i, j, "rise condition at the top fails")
                elif dd_ij == -1:
                    d_bj = delta(graph.bwd[b][j])
                    if d_bj[i] - d_b[i] == -1:
                        x = _apply_word(graph, b, (i, j, j, i), "e")
                        y = _apply_word(graph, b, (j, i, i, j), "e")
                        if x is None or y is None or x != y:
                            return AxiomReport(False, "P6", b, i, j, "raising hexagon does not close")
                        r_x = rise(x)
                        fxj = graph.fwd[x].get(j)
                        fxi = graph.fwd[x].get(i)
                        if (
                            fxj is None or fxi is None
                            or r_x[i] - rise(fxj)[i] != -1
                            or r_x[j] - rise(fxi)[j] != -1
                        ):
                            return AxiomReport(False, "P6", b, i, j, "rise condition at the top fails")
    return AxiomReport(True)


@dataclass(frozen=True)
class LocalStructure:
    """How two covers f_i(u), f_j(u) close above u.

    ``degree`` is 2 when a single square closes, 4 when the two length-4
    chains (with label patterns j,j,i and i,i,j) meet; ``top`` is the common
    endpoint and ``chains`` the vertex paths from u upward.
    """

    degree: int
    top: int
    chains: tuple[tuple[int, ...], tuple[int, ...]]


def local_structure(graph: CrystalGraph, u: int, i: int, j: int) -> LocalStructure:
    """Classify the configuration above u for two distinct outgoing colors.

    Raises ValueError if u lacks one of the edges or if neither of the two
    sanctioned configurations is found (which would mean corrupted data).
    """
    if i == j:
        raise ValueError("colors must differ")
    v = graph.fwd[u].get(i)
    w = graph.fwd[u].get(j)
    if v is None or w is None:
        raise ValueError(f"vertex {u} lacks outgoing colors {i} and {j}")
    x2 = graph.fwd[v].get(j)
    if x2 is not None and x2 == graph.fwd[w].get(i):
        return LocalStructure(2, x2, ((u, v, x2), (u, w, x2)))
    via_v = _apply_word(graph, v, (j, j, i), "f")
    via_w = _apply_word(graph, w, (i, i, j), "f")
    if via_v is not None and via_v == via_w:
        # by weights, a shorter closure over v and w could only sit two
        # steps up, reached by {i,j} from one side and a repeated color
        # from the other; rule both patterns out
        for side, a, b in ((v, j, i), (w, i, j)):
            other = w if side is v else v
            mixed = {_apply_word(graph, side, (a, b), "f"), _apply_word(graph, side, (b, a), "f")}
            repeated = _apply_word(graph, other, (b, b), "f")
            if repeated is not None and repeated in mixed:
                raise ValueError(f"closure of length 2 coexists with degree-4 data at {u}")
        cv = (u, v, graph.fwd[v][j], _apply_word(graph, v, (j, j), "f"), via_v)
        cw = (u, w, graph.fwd[w][i], _apply_word(graph, w, (i, i), "f"), via_w)
        return LocalStructure(4, via_v, (cv, cw))
    raise ValueError(f"no degree 2 or 4 closure above vertex {u} for colors ({i}, {j})")


# -- serialization ----------------------------------------------------------

def graph_to_json(graph: CrystalGraph) -> dict:
    """Schema: shape, n, vertices as rows-of-rows, [src, dst, color] edges,
    and the rank vector; vertex order is generation order."""
    return {
        "shape": list(graph.shape) if graph.shape else None,
        "n": graph.n,
        "vertices": [[list(row) for row in t] for t in graph.vertices],
        "edges": [list(e) for e in graph.edges],
        "rank": list(graph.rank),
    }


def graph_from_json(data: dict | str) -> CrystalGraph:
    """Rebuild a graph from the JSON schema, recomputing ranks and weights.

    Intended for auditing externally produced graphs: duplicate colored
    edges and broken gradedness are rejected here, everything deeper is the
    axiom checker's job.
    """
    if isinstance(data, str):
        data = json.loads(data)
    n = int(data["n"])
    vertices = tuple(tuple(tuple(int(x) for x in row) for row in t) for t in data["vertices"])
    nv = len(vertices)
    fwd: list[dict[int, int]] = [{} for _ in range(nv)]
    bwd: list[dict[int, int]] = [{} for _ in range(nv)]
    edges: list[tuple[int, int, int]] = []
    for a, b, i in data["edges"]:
        a, b, i = int(a), int(b), int(i)
        if not (0 <= a < nv and 0 <= b < nv and 1 <= i <= n - 1):
            raise ValueError(f"edge ({a}, {b}, {i}) out of range")
        if i in fwd[a] or i in bwd[b]:
            raise ValueError(f"duplicate color-{i} edge at ({a}, {b})")
        fwd[a][i] = b
        bwd[b][i] = a
        edges.append((a, b, i))

    sources = [v for v in range(nv) if not bwd[v]]
    sinks = [v for v in range(nv) if not fwd[v]]
    rank = [-1] * nv
    order: list[int] = list(sources)
    indeg = [len(bwd[v]) for v in range(nv)]
    for v in sources:
        rank[v] = 0
    head = 0
    while head < len(order):
        v = order[head]
        head += 1
        for i, w in fwd[v].items():
            if rank[w] == -1:
                rank[w] = rank[v] + 1
            elif rank[w] != rank[v] + 1:
                raise ValueError(f"graph is not graded at edge ({v}, {w}, {i})")
            indeg[w] -= 1
            if indeg[w] == 0:
                order.append(w)
    if len(order) != nv:
        raise ValueError("graph has a directed cycle")

    shape = tuple(int(p) for p in data["shape"]) if data.get("shape") else None
    return CrystalGraph(
        shape=shape,
        n=n,
        vertices=vertices,
        edges=tuple(edges),
        fwd=tuple(fwd),
        bwd=tuple(bwd),
        rank=tuple(rank),
        weights=tuple(weight(t, n) for t in vertices),
        minimum=sources[0] if len(sources) == 1 else None,
        maximum=sinks[0] if len(sinks) == 1 else None,
    )


def tableau_to_string(rows: Tableau) -> str:
    """Literal syntax: rows joined by '/', entries by ',' .

    >>> tableau_to_string(((1, 1, 1, 2), (2, 3, 4)))
    '1,1,1,2/2,3,4'
    """
    return "/".join(",".join(str(v) for v in row) for row in rows)


def tableau_from_string(text: str, n: int, shape: Shape | None = None) -> Tableau:
    """Parse the '1,1,1,2/2,3,4' literal syntax and validate."""
    try:
        rows = tuple(
            tuple(int(part) for part in chunk.split(","))
            for chunk in text.strip().split("/")
        )
    except ValueError as exc:
        raise ValueError(f"malformed tableau literal {text!r}") from exc
    return check_tableau(rows, n, shape)


_DOT_PALETTE = ("black", "red", "blue", "forestgreen", "darkorange", "purple", "brown")


def graph_to_dot(graph: CrystalGraph) -> str:
    """Graphviz rendering with one node per vertex labeled by its tableau."""
    lines = ["digraph crystal {", "    rankdir=BT;"]
    for k, t in enumerate(graph.vertices):
        lines.append(f'    {k} [label="{tableau_to_string(t)}"];')
    for a, b, i in graph.edges:
        color = _DOT_PALETTE[(i - 1) % len(_DOT_PALETTE)]
        lines.append(f'    {a} -> {b} [label="{i}", color="{color}"];')
    lines.append("}")
    return "\n".join(lines)
