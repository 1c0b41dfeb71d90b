"""Bijection between critical configurations and labeled spanning trees.

Entry c_i in {1+q..q+t} puts a spoke at v_i labeled c_i; entry c_i in
{1..q} puts rim edge i (v_{i-1} -> v_i) in the tree labeled c_i; a zero
entry contributes nothing.  A block ending in ``0, q, ..., q`` leaves a
rim path with no spoke, and it is joined to the next spoke vertex v_n by
the forced rim edge n, labeled q.

Under this map the edges labeled from {1..q} are exactly those clockwise
of their arc's spoke, so a tree's q-weight q**dist counts its labelings.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Tuple

from .chipfire import Configuration, _is_critical_blocks
from .errors import InvalidArgument
from .wheel import WheelParams, rim_arcs, rim_edge_endpoints


@dataclass(frozen=True)
class SpanningTree:
    """Labeled spanning tree of the undirected wheel skeleton.

    ``spokes`` maps rim vertex -> label; ``arcs`` maps rim-edge index i
    (joining v_{i-1} to v_i) -> label.
    """

    params: WheelParams
    spokes: Tuple[Tuple[int, int], ...]
    arcs: Tuple[Tuple[int, int], ...]

    @property
    def spoke_map(self) -> Dict[int, int]:
        return dict(self.spokes)

    @property
    def arc_map(self) -> Dict[int, int]:
        return dict(self.arcs)

    @property
    def spoke_count(self) -> int:
        return len(self.spokes)

    def skeleton(self) -> Tuple[frozenset, frozenset]:
        return frozenset(i for i, _ in self.arcs), frozenset(v for v, _ in self.spokes)

    def arc_lists(self) -> List[List[int]]:
        return rim_arcs(self.params.k, frozenset(i for i, _ in self.arcs))

    def is_valid(self) -> bool:
        k = self.params.k
        edges = frozenset(i for i, _ in self.arcs)
        if len(edges) != len(self.arcs) or len(self.spoke_map) != len(self.spokes):
            return False
        if any(not 1 <= i <= k for i in edges) or (k == 1 and edges):
            return False
        if k >= 2 and len(edges) >= k:
            return False
        spokes = self.spoke_map
        if any(not 1 <= v <= k for v in spokes):
            return False
        return all(sum(v in spokes for v in arc) == 1 for arc in rim_arcs(k, edges))

    @property
    def dist(self) -> int:
        spokes = self.spoke_map
        total = 0
        for arc in self.arc_lists():
            pos = next(i for i, v in enumerate(arc) if v in spokes)
            total += len(arc) - 1 - pos
        return total

    def to_json_obj(self) -> dict:
        k = self.params.k
        arcs = []
        for i, label in self.arcs:
            a, b = rim_edge_endpoints(k, i)
            arcs.append({"from": a, "to": b, "label": label})
        return {
            "spokes": [{"vertex": v, "label": lab} for v, lab in self.spokes],
            "arcs": arcs,
        }

    @classmethod
    def from_json_obj(cls, obj: dict, params: WheelParams) -> "SpanningTree":
        spokes = tuple(sorted((int(s["vertex"]), int(s["label"])) for s in obj["spokes"]))
        arcs = []
        for a in obj["arcs"]:
            i = int(a["to"])
            if rim_edge_endpoints(params.k, i) != (int(a["from"]), i):
                raise InvalidArgument(f"rim edge {a['from']}->{a['to']} does not exist")
            arcs.append((i, int(a["label"])))
        return cls(params, spokes, tuple(sorted(arcs)))


def config_to_tree(c: Configuration) -> SpanningTree:
    p = c.params
    q, t, k = p.q, p.t, p.k
    if q < 1:
        raise InvalidArgument("the tree bijection needs q >= 1")
    if not _is_critical_blocks(c.chips, q, t):
        raise InvalidArgument(f"{list(c.chips)} is not critical on {p}")
    spokes = []
    arcs = []
    for i, x in enumerate(c.chips, start=1):
        if x > q:
            spokes.append((i, x))
        elif x >= 1:
            arcs.append((i, x))
    # forced edge into a spoke vertex whose preceding block contains a 0
    for i, x in enumerate(c.chips, start=1):
        if x <= q:
            continue
        j = (i - 2) % k
        while c.chips[j] <= q:
            if c.chips[j] == 0:
                arcs.append((i, q))
                break
            j = (j - 1) % k
    return SpanningTree(p, tuple(sorted(spokes)), tuple(sorted(arcs)))


def tree_to_config(tr: SpanningTree) -> Configuration:
    p = tr.params
    q, t, k = p.q, p.t, p.k
    if not tr.is_valid():
        raise InvalidArgument("not a spanning tree of the wheel")
    spokes = tr.spoke_map
    labels = tr.arc_map
    chips = [None] * k
    for arc in tr.arc_lists():
        pos = next(i for i, v in enumerate(arc) if v in spokes)
        s = arc[pos]
        if not q + 1 <= spokes[s] <= q + t:
            raise InvalidArgument(f"spoke label {spokes[s]} outside {q + 1}..{q + t}")
        chips[s - 1] = spokes[s]
        # clockwise of the spoke: edge into v carries c_v
        for v in arc[pos + 1:]:
            lab = labels[v]
            if not 1 <= lab <= q:
                raise InvalidArgument(f"rim label {lab} outside 1..{q}")
            chips[v - 1] = lab
        # counter-clockwise of the spoke: a zero, then q's, then the forced edge
        if pos > 0:
            chips[arc[0] - 1] = 0
            for v in arc[1:pos + 1]:
                if labels[v] != q:
                    raise InvalidArgument(
                        f"rim edge {v} lies counter-clockwise of its spoke and must be labeled {q}"
                    )
                if v != s:
                    chips[v - 1] = q
    return Configuration(tuple(chips), p)
