"""The (q,t)-wheel multidigraph, its Laplacians and the tree polynomial W_k.

Vertex 0 is the hub; rim vertices 1..k run clockwise.  Rim vertex i has q
edges to its clockwise neighbour, one edge to its counter-clockwise
neighbour and t spokes in each direction to the hub.

Degenerate rims: for k = 1 the rim edges would be loops and are dropped;
for k = 2 the clockwise and counter-clockwise edges between the two rim
vertices merge into q + 1 parallel edges each way.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, List, Tuple

from .errors import InternalError, InvalidArgument, ResourceLimit
from .exactmath import ONE, Q, T, BivariatePolynomial, Matrix, det_poly, divisors

TREE_ENUMERATION_BOUND = 12


@dataclass(frozen=True)
class WheelParams:
    k: int
    q: int
    t: int

    def __post_init__(self):
        for name in ("k", "q", "t"):
            if not isinstance(getattr(self, name), int):
                raise InvalidArgument(f"{name} must be an int")
        if self.k < 1:
            raise InvalidArgument(f"k must be >= 1, got {self.k}")
        if self.t < 1:
            raise InvalidArgument(f"t must be >= 1, got {self.t}")
        if self.q < 0:
            raise InvalidArgument(f"q must be >= 0, got {self.q}")

    @property
    def fire_threshold(self) -> int:
        """Chips a rim vertex needs to fire: its nominal out-degree 1+q+t."""
        return 1 + self.q + self.t

    @property
    def stable_max(self) -> int:
        return self.q + self.t


@dataclass(frozen=True)
class WheelGraph:
    params: WheelParams
    adjacency: Tuple[Tuple[int, ...], ...]

    def d(self, i: int, j: int) -> int:
        return self.adjacency[i][j]

    def out_degree(self, i: int) -> int:
        return sum(self.adjacency[i])

    @property
    def num_vertices(self) -> int:
        return self.params.k + 1

    def laplacian(self) -> Matrix:
        n = self.num_vertices
        rows = []
        for i in range(n):
            rows.append([self.out_degree(i) if i == j else -self.adjacency[i][j] for j in range(n)])
        return Matrix(rows)


def build_wheel(params: WheelParams) -> WheelGraph:
    k, q, t = params.k, params.q, params.t
    adj = [[0] * (k + 1) for _ in range(k + 1)]
    for i in range(1, k + 1):
        adj[i][0] = t
        adj[0][i] = t
    if k == 2:
        adj[1][2] = adj[2][1] = q + 1
    elif k >= 3:
        for i in range(1, k + 1):
            cw = i % k + 1
            ccw = (i - 2) % k + 1
            adj[i][cw] += q
            adj[i][ccw] += 1
    return WheelGraph(params, tuple(tuple(r) for r in adj))


def _reduced_rows(k: int, q, t, one) -> List[list]:
    # shared by the integer and the symbolic builds
    diag = one + q + t
    if k == 1:
        return [[t]]
    if k == 2:
        off = -(one + q)
        return [[diag, off], [off, diag]]
    rows = []
    for i in range(k):
        row = [0] * k
        row[i] = diag
        row[(i + 1) % k] = -q
        row[(i - 1) % k] = -one
        rows.append(row)
    return rows


def reduced_laplacian(params: WheelParams | int, symbolic: bool = False) -> Matrix:
    """Laplacian with the hub row and column deleted.

    With ``symbolic=True`` (or when given only k) entries are polynomials in
    q and t; otherwise integers at params.q, params.t.
    """
    if isinstance(params, int):
        k, symbolic = params, True
    else:
        k = params.k
    if k < 1:
        raise InvalidArgument(f"k must be >= 1, got {k}")
    if symbolic:
        return Matrix(_reduced_rows(k, Q, T, ONE))
    return Matrix(_reduced_rows(k, params.q, params.t, 1))


@lru_cache(maxsize=None)
def wheel_poly(k: int) -> BivariatePolynomial:
    """W_k(q,t): determinant of the symbolic reduced Laplacian."""
    if not isinstance(k, int) or k < 1:
        raise InvalidArgument(f"k must be a positive int, got {k!r}")
    return det_poly(reduced_laplacian(k))


def rim_edge_endpoints(k: int, i: int) -> Tuple[int, int]:
    """Rim edge i joins v_{i-1} to v_i clockwise (edge 1 is v_k -> v_1)."""
    return ((i - 2) % k + 1, i)


def rim_arcs(k: int, edges: frozenset) -> List[List[int]]:
    """Maximal rim arcs, each as its vertex list in clockwise order.

    ``edges`` is a set of rim-edge indices in 1..k that is not the full cycle.
    """
    if k == 1:
        return [[1]]
    if len(edges) >= k:
        raise InvalidArgument("the full rim cycle is not a forest")
    # start right after a missing edge: vertex i begins an arc iff edge i is absent
    arcs = []
    starts = [i for i in range(1, k + 1) if i not in edges]
    for s in starts:
        arc = [s]
        v = s
        while (v % k + 1) in edges:
            v = v % k + 1
            arc.append(v)
        arcs.append(arc)
    return arcs


def iter_spanning_trees(k: int) -> Iterator[Tuple[frozenset, frozenset, int]]:
    """Yield (rim edge set, spoke vertex set, dist) for every spanning tree.

    dist counts, over all arcs, the rim edges lying clockwise of the arc's
    spoke.  Trees are those of the underlying undirected wheel, with the two
    parallel rim edges of the k = 2 wheel kept distinct.
    """
    if k > TREE_ENUMERATION_BOUND:
        raise ResourceLimit(f"tree enumeration bounded at k <= {TREE_ENUMERATION_BOUND}")
    n_edges = 0 if k == 1 else k
    full = (1 << n_edges) - 1
    for mask in range(1 << n_edges):
        if n_edges and mask == full:
            continue
        edges = frozenset(i + 1 for i in range(n_edges) if mask >> i & 1)
        arcs = rim_arcs(k, edges)
        yield from _place_spokes(edges, arcs, 0, frozenset(), 0)


def _place_spokes(edges, arcs, idx, spokes, dist):
    if idx == len(arcs):
        yield edges, spokes, dist
        return
    arc = arcs[idx]
    m = len(arc) - 1
    for pos, v in enumerate(arc):
        yield from _place_spokes(edges, arcs, idx + 1, spokes | {v}, dist + m - pos)


def enumerate_weighted_trees(k: int, bound: int = TREE_ENUMERATION_BOUND) -> BivariatePolynomial:
    """Sum over spanning trees of q**dist * t**spokes, by direct enumeration."""
    if not isinstance(k, int) or k < 1:
        raise InvalidArgument(f"k must be a positive int, got {k!r}")
    if k > bound:
        raise ResourceLimit(f"k = {k} exceeds enumeration bound {bound}")
    counts: Counter = Counter()
    for _, spokes, dist in iter_spanning_trees(k):
        counts[(dist, len(spokes))] += 1
    return BivariatePolynomial(dict(counts))


@lru_cache(maxsize=None)
def wcyc(d: int) -> BivariatePolynomial:
    """Cyclotomic-style factor of W_d: W_k is the product of wcyc(d) over d | k."""
    if not isinstance(d, int) or d < 1:
        raise InvalidArgument(f"d must be a positive int, got {d!r}")
    if d == 1:
        return T
    rest = ONE
    for e in divisors(d)[:-1]:
        rest = rest * wcyc(e)
    quot, rem = wheel_poly(d).divmod_lex(rest)
    if not rem.is_zero():
        raise InternalError(f"W_{d} is not divisible by the product of lower factors")
    return quot
