"""Graph families, Kronecker products and exact metric data.

Vertices are always 0-indexed with a canonical ordering per family:

* cycle C_n: 0..n-1 around the cycle;
* complete K_n: all pairs adjacent;
* Johnson J(m, r): r-subsets of {1..m} in lexicographic order, adjacent
  when the intersection has exactly r-1 elements;
* Hamming H(d, q): d-tuples over {0..q-1} in lexicographic order, adjacent
  when the Hamming distance is 1;
* Kronecker products: index(u, v) = u * |V(right)| + v, so the product is
  partitioned into |V(left)| consecutive blocks of right-factor vertices.

The block-by-left-factor ordering is what makes the distance matrices of
K_n (x) G literally block circulant, which downstream modules rely on.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from math import comb
from typing import Iterator, Union

import numpy as np

from .errors import (
    BipartiteGraphError,
    DisconnectedGraphError,
    FamilyDomainError,
    NotStabilizedError,
    OrderCapError,
)
from .numeric import dense_matrix_cap

__all__ = [
    "Graph",
    "Cycle",
    "Complete",
    "Johnson",
    "Hamming",
    "Kron",
    "FamilySpec",
    "family_order",
    "family_to_string",
    "build_family",
    "kronecker_product",
    "is_connected",
    "has_odd_cycle",
    "kronecker_connectivity_predicted",
    "distance_matrix",
    "diameter",
    "walk_gamma",
    "gamma",
    "complete_multipartite_parts",
    "predicted_kron_diameter",
    "to_edge_list_text",
    "from_edge_list_text",
    "PRODUCT_VERTEX_CAP",
]

PRODUCT_VERTEX_CAP = 20_000


# ---------------------------------------------------------------------------
# Core graph type
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with sorted adjacency lists.

    ``labels``, when present, are human-readable vertex names (subset or
    tuple notation for Johnson/Hamming vertices); they carry no algorithmic
    weight and exist to make failures debuggable.
    """

    adjacency: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        n = len(self.adjacency)
        for u, nbrs in enumerate(self.adjacency):
            prev = -1
            for v in nbrs:
                if not 0 <= v < n:
                    raise ValueError(f"neighbor {v} of {u} out of range")
                if v == u:
                    raise ValueError(f"self-loop at vertex {u}")
                if v <= prev:
                    raise ValueError(f"adjacency of {u} not strictly sorted")
                prev = v
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs:
                if u not in self.adjacency[v]:
                    raise ValueError(f"edge {u}-{v} not symmetric")
        if self.labels is not None:
            if len(self.labels) != n:
                raise ValueError("labels length must equal vertex count")
            if len(set(self.labels)) != n:
                raise ValueError("labels must be pairwise distinct")

    @property
    def vertex_count(self) -> int:
        return len(self.adjacency)

    @property
    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as (u, v) with u < v, sorted."""
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs:
                if u < v:
                    yield (u, v)

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.vertex_count, self.vertex_count), dtype=np.int64)
        for u, nbrs in enumerate(self.adjacency):
            a[u, list(nbrs)] = 1
        return a

    @staticmethod
    def from_neighbor_lists(neighbors: list[list[int]],
                            labels: list[str] | None = None) -> "Graph":
        adj = tuple(tuple(sorted(set(ns))) for ns in neighbors)
        return Graph(adj, tuple(labels) if labels is not None else None)


# ---------------------------------------------------------------------------
# Family specifications
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Cycle:
    n: int

    def __post_init__(self):
        if self.n < 3:
            raise FamilyDomainError(f"cycle needs n >= 3, got {self.n}")


@dataclass(frozen=True)
class Complete:
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise FamilyDomainError(f"complete graph needs n >= 1, got {self.n}")


@dataclass(frozen=True)
class Johnson:
    m: int
    r: int

    def __post_init__(self):
        if not (self.m >= 2 * self.r >= 2):
            raise FamilyDomainError(
                f"Johnson needs m >= 2r >= 2, got m={self.m}, r={self.r}"
            )


@dataclass(frozen=True)
class Hamming:
    d: int
    q: int

    def __post_init__(self):
        if self.d < 1 or self.q < 2:
            raise FamilyDomainError(
                f"Hamming needs d >= 1 and q >= 2, got d={self.d}, q={self.q}"
            )


@dataclass(frozen=True)
class Kron:
    left: "FamilySpec"
    right: "FamilySpec"


FamilySpec = Union[Cycle, Complete, Johnson, Hamming, Kron]


def family_order(spec: FamilySpec) -> int:
    """Vertex count of the graph the spec describes, without building it."""
    if isinstance(spec, (Cycle, Complete)):
        return spec.n
    if isinstance(spec, Johnson):
        return comb(spec.m, spec.r)
    if isinstance(spec, Hamming):
        return spec.q ** spec.d
    if isinstance(spec, Kron):
        return family_order(spec.left) * family_order(spec.right)
    raise TypeError(f"not a family spec: {spec!r}")


def family_to_string(spec: FamilySpec) -> str:
    """Compact string form, e.g. 'kron(K3,C4)' or 'J(4,2)'."""
    if isinstance(spec, Cycle):
        return f"C{spec.n}"
    if isinstance(spec, Complete):
        return f"K{spec.n}"
    if isinstance(spec, Johnson):
        return f"J({spec.m},{spec.r})"
    if isinstance(spec, Hamming):
        return f"H({spec.d},{spec.q})"
    if isinstance(spec, Kron):
        return f"kron({family_to_string(spec.left)},{family_to_string(spec.right)})"
    raise TypeError(f"not a family spec: {spec!r}")


# ---------------------------------------------------------------------------
# Family construction
# ---------------------------------------------------------------------------

def build_family(spec: FamilySpec) -> Graph:
    """Construct the graph for a family spec in its canonical vertex order."""
    if isinstance(spec, Cycle):
        n = spec.n
        return Graph.from_neighbor_lists([[(i - 1) % n, (i + 1) % n] for i in range(n)])
    if isinstance(spec, Complete):
        n = spec.n
        return Graph.from_neighbor_lists(
            [[j for j in range(n) if j != i] for i in range(n)]
        )
    if isinstance(spec, Johnson):
        return _build_johnson(spec.m, spec.r)
    if isinstance(spec, Hamming):
        return _build_hamming(spec.d, spec.q)
    if isinstance(spec, Kron):
        return kronecker_product(build_family(spec.left), build_family(spec.right))
    raise TypeError(f"not a family spec: {spec!r}")


def _build_johnson(m: int, r: int) -> Graph:
    verts = list(itertools.combinations(range(1, m + 1), r))
    sets = [frozenset(v) for v in verts]
    n = len(verts)
    neighbors = [
        [j for j in range(n) if j != i and len(sets[i] & sets[j]) == r - 1]
        for i in range(n)
    ]
    labels = ["{" + ",".join(map(str, v)) + "}" for v in verts]
    return Graph.from_neighbor_lists(neighbors, labels)


def _build_hamming(d: int, q: int) -> Graph:
    n = q ** d
    if n > PRODUCT_VERTEX_CAP:
        raise OrderCapError(f"H({d},{q}) has {n} vertices, cap is {PRODUCT_VERTEX_CAP}")
    # vertex index is the base-q numeral of the tuple, so lexicographic order
    # is automatic and neighbors come from single-digit edits.
    weights = [q ** (d - 1 - i) for i in range(d)]
    neighbors: list[list[int]] = []
    for idx in range(n):
        digits = [(idx // w) % q for w in weights]
        nbrs = []
        for pos, w in enumerate(weights):
            base = idx - digits[pos] * w
            nbrs.extend(base + v * w for v in range(q) if v != digits[pos])
        neighbors.append(nbrs)
    sep = "" if q <= 10 else ","
    labels = [
        sep.join(str((idx // w) % q) for w in weights) for idx in range(n)
    ]
    return Graph.from_neighbor_lists(neighbors, labels)


def kronecker_product(g: Graph, h: Graph) -> Graph:
    """Kronecker (tensor) product: (u, v) ~ (u', v') iff u~u' and v~v'.

    Vertex (u, v) gets index u * |V(h)| + v: the product is laid out in
    |V(g)| blocks, one per left-factor vertex.
    """
    if g.vertex_count == 0 or h.vertex_count == 0:
        raise FamilyDomainError("Kronecker product needs nonempty factors")
    n = g.vertex_count * h.vertex_count
    if n > PRODUCT_VERTEX_CAP:
        raise OrderCapError(f"product has {n} vertices, cap is {PRODUCT_VERTEX_CAP}")
    nh = h.vertex_count
    neighbors: list[list[int]] = [[] for _ in range(n)]
    for u, g_nbrs in enumerate(g.adjacency):
        for v, h_nbrs in enumerate(h.adjacency):
            base = [u2 * nh for u2 in g_nbrs]
            neighbors[u * nh + v] = [b + v2 for b in base for v2 in h_nbrs]
    g_labels = g.labels or tuple(str(u) for u in range(g.vertex_count))
    h_labels = h.labels or tuple(str(v) for v in range(h.vertex_count))
    labels = [f"({gl},{hl})" for gl in g_labels for hl in h_labels]
    return Graph.from_neighbor_lists(neighbors, labels)


# ---------------------------------------------------------------------------
# Connectivity and parity
# ---------------------------------------------------------------------------

def is_connected(g: Graph) -> bool:
    """True iff one BFS from vertex 0 reaches every vertex."""
    n = g.vertex_count
    if n == 0:
        return True
    seen = [False] * n
    seen[0] = True
    queue = deque([0])
    count = 1
    while queue:
        u = queue.popleft()
        for v in g.adjacency[u]:
            if not seen[v]:
                seen[v] = True
                count += 1
                queue.append(v)
    return count == n


def has_odd_cycle(g: Graph) -> bool:
    """True iff the graph is non-bipartite (BFS 2-coloring fails somewhere)."""
    n = g.vertex_count
    color = [-1] * n
    for start in range(n):
        if color[start] != -1:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v in g.adjacency[u]:
                if color[v] == -1:
                    color[v] = color[u] ^ 1
                    queue.append(v)
                elif color[v] == color[u]:
                    return True
    return False


def kronecker_connectivity_predicted(g: Graph, h: Graph) -> bool:
    """Connectivity of g (x) h predicted from factor parity.

    For connected factors the product is connected iff at least one factor
    contains an odd cycle.  Agreement with a BFS on the actual product is a
    test obligation, not an assumption.
    """
    if not is_connected(g) or not is_connected(h):
        raise DisconnectedGraphError("both factors must be connected")
    return has_odd_cycle(g) or has_odd_cycle(h)


# ---------------------------------------------------------------------------
# Distances
# ---------------------------------------------------------------------------

def distance_matrix(g: Graph) -> np.ndarray:
    """All-pairs shortest-path lengths as a dense symmetric integer matrix.

    Runs breadth-first level expansion from all sources simultaneously via
    boolean matrix products; level sets are exactly the per-source BFS
    levels.  Raises DisconnectedGraphError if any pair is unreachable.
    """
    n = g.vertex_count
    cap = dense_matrix_cap()
    if n > cap:
        raise OrderCapError(f"distance matrix order {n} exceeds dense cap {cap}")
    if n == 0:
        return np.zeros((0, 0), dtype=np.int64)
    a = g.adjacency_matrix().astype(np.float64)
    dist = np.full((n, n), -1, dtype=np.int64)
    np.fill_diagonal(dist, 0)
    reached = np.eye(n, dtype=bool)
    frontier = reached
    level = 0
    while True:
        grown = (frontier.astype(np.float64) @ a) > 0
        newly = grown & ~reached
        if not newly.any():
            break
        level += 1
        dist[newly] = level
        reached |= newly
        frontier = newly
    if (dist < 0).any():
        raise DisconnectedGraphError("graph is disconnected")
    return dist


def diameter(g: Graph) -> int:
    """Maximum entry of the distance matrix."""
    d = distance_matrix(g)
    if d.size == 0:
        raise DisconnectedGraphError("diameter of empty graph is undefined")
    return int(d.max())


# ---------------------------------------------------------------------------
# Walk-length closure
# ---------------------------------------------------------------------------

def _check_walk_preconditions(g: Graph, bound: int | None) -> int:
    if not is_connected(g):
        raise DisconnectedGraphError("walk-length closure needs a connected graph")
    if not has_odd_cycle(g):
        raise BipartiteGraphError(
            "bipartite graph: walk lengths between a fixed pair have a fixed parity"
        )
    if bound is None:
        bound = max(2 * g.vertex_count, 8)
    if bound < 1:
        raise ValueError("bound must be positive")
    return bound


def _not_stabilized(n: int, bound: int) -> NotStabilizedError:
    return NotStabilizedError(
        f"walk lengths not stable over the last {n} values up to bound {bound}"
    )


def walk_gamma(g: Graph, x: int, y: int, bound: int | None = None) -> int:
    """Least k0 such that an (x, y)-walk of every length >= k0 exists.

    Walk lengths are enumerated by iterated boolean adjacency products up
    to ``bound``.  The result is accepted only with a stabilization
    witness: the last vertex_count consecutive lengths must all be
    achievable (a bound of at least 2 * vertex_count is recommended).
    Defined for connected non-bipartite graphs.
    """
    bound = _check_walk_preconditions(g, bound)
    n = g.vertex_count
    a = g.adjacency_matrix().astype(np.float64)
    reach = np.zeros(n, dtype=bool)
    reach[x] = True
    achievable = [bool(reach[y])]
    for _ in range(bound):
        reach = (reach.astype(np.float64) @ a) > 0
        achievable.append(bool(reach[y]))
    if bound - n + 1 < 0 or not all(achievable[bound - n + 1:]):
        raise _not_stabilized(n, bound)
    last_missing = -1
    for k in range(bound, -1, -1):
        if not achievable[k]:
            last_missing = k
            break
    return last_missing + 1


def gamma(g: Graph, bound: int | None = None) -> int:
    """Maximum of walk_gamma over all vertex pairs (single streamed sweep)."""
    bound = _check_walk_preconditions(g, bound)
    n = g.vertex_count
    if bound - n + 1 < 0:
        raise _not_stabilized(n, bound)
    a = g.adjacency_matrix().astype(np.float64)
    reach = np.eye(n, dtype=bool)
    last_missing = np.full((n, n), -1, dtype=np.int64)
    last_missing[~reach] = 0
    witness_lo = bound - n + 1
    witness = reach.copy() if witness_lo == 0 else np.ones((n, n), dtype=bool)
    for k in range(1, bound + 1):
        reach = (reach.astype(np.float64) @ a) > 0
        last_missing[~reach] = k
        if k >= witness_lo:
            witness &= reach
    if not witness.all():
        raise _not_stabilized(n, bound)
    return int(last_missing.max()) + 1


# ---------------------------------------------------------------------------
# Diameter prediction for products with complete multipartite graphs
# ---------------------------------------------------------------------------

def complete_multipartite_parts(g: Graph) -> list[list[int]] | None:
    """Partition into independent parts with all cross edges, or None.

    A graph is complete multipartite iff non-adjacency is transitive; the
    parts are then the connected components of the complement.
    """
    n = g.vertex_count
    adj = [set(nbrs) for nbrs in g.adjacency]
    part_of = [-1] * n
    parts: list[list[int]] = []
    for start in range(n):
        if part_of[start] != -1:
            continue
        members = [start]
        part_of[start] = len(parts)
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v in range(n):
                if part_of[v] == -1 and v not in adj[u] and v != u:
                    part_of[v] = len(parts)
                    members.append(v)
                    queue.append(v)
        parts.append(members)
    for u in range(n):
        for v in range(u + 1, n):
            same = part_of[u] == part_of[v]
            if same and v in adj[u]:
                return None
            if not same and v not in adj[u]:
                return None
    return parts


def predicted_kron_diameter(g: Graph, t_partite_h: Graph) -> int:
    """Diameter of g (x) h predicted without building the product.

    Requires h complete multipartite with more than 3 parts and g connected
    with diameter >= 1.  With d = diam(g): d when d >= 3; otherwise 2 when
    every pair of g-vertices admits walks of all lengths >= 2 (gamma <= 2)
    and 3 when some pair does not (gamma > 2; in particular bipartite g,
    where gamma is infinite).  The boundary case gamma == 2 maps to 2,
    which BFS agreement tests pin down.
    """
    parts = complete_multipartite_parts(t_partite_h)
    if parts is None or len(parts) <= 3:
        raise FamilyDomainError(
            "second factor must be complete multipartite with more than 3 parts"
        )
    if not is_connected(g):
        raise DisconnectedGraphError("first factor must be connected")
    d = diameter(g)
    if d < 1:
        raise FamilyDomainError("first factor must have diameter >= 1")
    if d >= 3:
        return d
    if not has_odd_cycle(g):
        return 3
    return 2 if gamma(g) <= 2 else 3


# ---------------------------------------------------------------------------
# Edge-list text format
# ---------------------------------------------------------------------------

def to_edge_list_text(g: Graph) -> str:
    """Serialize as 'p <n> <e>' followed by sorted 'u v' lines, u < v."""
    lines = [f"p {g.vertex_count} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def from_edge_list_text(text: str) -> Graph:
    """Parse the edge-list format produced by :func:`to_edge_list_text`."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("p "):
        raise ValueError("first line must be 'p <vertex_count> <edge_count>'")
    header = lines[0].split()
    if len(header) != 3:
        raise ValueError("malformed header line")
    n, e = int(header[1]), int(header[2])
    if n < 0 or e < 0:
        raise ValueError("vertex and edge counts must be nonnegative")
    neighbors: list[list[int]] = [[] for _ in range(n)]
    seen: set[tuple[int, int]] = set()
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"malformed edge line: {ln!r}")
        u, v = int(parts[0]), int(parts[1])
        if not (0 <= u < v < n):
            raise ValueError(f"edge {u} {v} violates 0 <= u < v < {n}")
        if (u, v) in seen:
            raise ValueError(f"duplicate edge {u} {v}")
        seen.add((u, v))
        neighbors[u].append(v)
        neighbors[v].append(u)
    if len(seen) != e:
        raise ValueError(f"header declares {e} edges, found {len(seen)}")
    return Graph.from_neighbor_lists(neighbors)
