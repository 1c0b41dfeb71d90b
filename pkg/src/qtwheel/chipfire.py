"""Dollar game on the (q,t)-wheel with the hub as bank.

Only rim chip counts are stored; the hub count is minus their sum.  A rim
vertex fires once it holds at least 1+q+t chips and sends q chips
clockwise, one counter-clockwise and t to the hub (loops for k = 1 and the
merged edges for k = 2 fall out of the same index arithmetic).  Firing the
hub adds t to every rim vertex.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Sequence, Tuple

from .errors import IllegalFire, InvalidArgument, ResourceLimit, Unsupported
from .wheel import WheelParams

ENUMERATION_BUDGET = 2_000_000

Chips = Tuple[int, ...]


@dataclass(frozen=True)
class Configuration:
    chips: Chips
    params: WheelParams

    def __post_init__(self):
        object.__setattr__(self, "chips", tuple(int(c) for c in self.chips))
        if len(self.chips) != self.params.k:
            raise InvalidArgument(
                f"configuration has {len(self.chips)} entries, wheel has k = {self.params.k}"
            )

    @property
    def k(self) -> int:
        return self.params.k

    def __add__(self, other: "Configuration") -> "Configuration":
        _same_params(self, other)
        return Configuration(tuple(a + b for a, b in zip(self.chips, other.chips)), self.params)

    def is_legal(self) -> bool:
        return all(c >= 0 for c in self.chips)

    def is_stable(self) -> bool:
        top = self.params.stable_max
        return all(0 <= c <= top for c in self.chips)

    def tolist(self) -> List[int]:
        return list(self.chips)


def _same_params(a: Configuration, b: Configuration) -> None:
    if a.params != b.params:
        raise InvalidArgument(f"configurations live on different wheels: {a.params} vs {b.params}")


def _fire_rim(c: list, i: int, q: int, t: int) -> None:
    k = len(c)
    c[i] -= 1 + q + t
    c[(i + 1) % k] += q
    c[(i - 1) % k] += 1


def fire(c: Configuration, vertex: int) -> Configuration:
    """Fire one vertex: 0 is the hub, 1..k the rim."""
    p = c.params
    if not 0 <= vertex <= p.k:
        raise InvalidArgument(f"vertex {vertex} outside 0..{p.k}")
    chips = list(c.chips)
    if vertex == 0:
        if any(x >= p.fire_threshold for x in chips):
            raise IllegalFire("the hub may only fire when no rim vertex can")
        return Configuration(tuple(x + p.t for x in chips), p)
    if chips[vertex - 1] < p.fire_threshold:
        raise IllegalFire(
            f"v{vertex} holds {chips[vertex - 1]} chips, needs {p.fire_threshold}"
        )
    _fire_rim(chips, vertex - 1, p.q, p.t)
    return Configuration(tuple(chips), p)


def _stabilize(chips: Sequence[int], q: int, t: int, policy: str = "lowest") -> Chips:
    c = list(chips)
    k = len(c)
    thr = 1 + q + t
    if policy == "lowest":
        order = range(k)
    elif policy == "highest":
        order = range(k - 1, -1, -1)
    else:
        raise InvalidArgument(f"unknown firing policy {policy!r}")
    while True:
        for i in order:
            if c[i] >= thr:
                _fire_rim(c, i, q, t)
                break
        else:
            return tuple(c)


def stabilize(c: Configuration, policy: str = "lowest") -> Configuration:
    if not c.is_legal():
        raise InvalidArgument("stabilize needs nonnegative entries; use class_representative")
    p = c.params
    return Configuration(_stabilize(c.chips, p.q, p.t, policy), p)


def _criticalize(chips: Sequence[int], q: int, t: int) -> Chips:
    seen = set()
    s = _stabilize(chips, q, t)
    while s not in seen:
        seen.add(s)
        s = _stabilize([x + t for x in s], q, t)
    return s


def criticalize(c: Configuration) -> Configuration:
    """Run the dollar game until a stable configuration repeats; return it."""
    if not c.is_legal():
        raise InvalidArgument("criticalize needs nonnegative entries; use class_representative")
    p = c.params
    return Configuration(_criticalize(c.chips, p.q, p.t), p)


def _is_critical_dynamic(chips: Chips, q: int, t: int) -> bool:
    top = q + t
    if any(x < 0 or x > top for x in chips):
        return False
    seen = {chips}
    s = _stabilize([x + t for x in chips], q, t)
    while s not in seen:
        seen.add(s)
        s = _stabilize([x + t for x in s], q, t)
    return s == chips


def is_critical_dynamic(c: Configuration) -> bool:
    """Stable and revisited by its own dollar-game orbit."""
    return _is_critical_dynamic(c.chips, c.params.q, c.params.t)


def _is_critical_blocks(chips: Chips, q: int, t: int) -> bool:
    top = q + t
    if any(x < 0 or x > top for x in chips):
        return False
    start = next((i for i, x in enumerate(chips) if x > q), None)
    if start is None:
        return False
    word = chips[start:] + chips[:start]
    # each block is B followed by {1..q}* and optionally 0 q*
    after_zero = False
    for x in word[1:]:
        if x > q:
            after_zero = False
        elif x == 0:
            if after_zero:
                return False
            after_zero = True
        elif after_zero and x != q:
            return False
    return True


def is_critical_blocks(c: Configuration) -> bool:
    """Block-grammar test for criticality of a stable configuration."""
    if c.params.q < 1:
        raise Unsupported("block characterization needs q >= 1")
    return _is_critical_blocks(c.chips, c.params.q, c.params.t)


def is_critical(c: Configuration) -> bool:
    if c.params.q >= 1:
        return is_critical_blocks(c)
    return is_critical_dynamic(c)


def _lift(v: Sequence[int], t: int) -> List[int]:
    deficit = -min(v) if v else 0
    if deficit <= 0:
        return list(v)
    n = -(-deficit // t)
    return [x + n * t for x in v]


def _class_rep(v: Sequence[int], q: int, t: int) -> Chips:
    return _criticalize(_lift(v, t), q, t)


def class_representative(v: Sequence[int], params: WheelParams) -> Configuration:
    """Critical representative of v modulo the reduced-Laplacian lattice."""
    v = tuple(int(x) for x in v)
    if len(v) != params.k:
        raise InvalidArgument(f"vector has {len(v)} entries, wheel has k = {params.k}")
    return Configuration(_class_rep(v, params.q, params.t), params)


def group_identity(params: WheelParams) -> Configuration:
    return Configuration(_criticalize([0] * params.k, params.q, params.t), params)


def group_add(a: Configuration, b: Configuration) -> Configuration:
    _same_params(a, b)
    return criticalize(a + b)


def group_inverse(c: Configuration) -> Configuration:
    return class_representative([-x for x in c.chips], c.params)


def group_scalar(m: int, c: Configuration) -> Configuration:
    return class_representative([m * x for x in c.chips], c.params)


def stable_vectors(params: WheelParams) -> Iterable[Chips]:
    return itertools.product(range(params.stable_max + 1), repeat=params.k)


def _check_budget(params: WheelParams, budget: int) -> None:
    size = (params.stable_max + 1) ** params.k
    if size > budget:
        raise ResourceLimit(f"{size} stable vectors exceed the budget of {budget}")


@dataclass(frozen=True)
class CriticalGroup:
    params: WheelParams
    elements: Tuple[Chips, ...]
    identity: Configuration
    _index: Dict[Chips, int] = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "_index", {c: i for i, c in enumerate(self.elements)})

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, c) -> bool:
        chips = c.chips if isinstance(c, Configuration) else tuple(c)
        return chips in self._index

    def __iter__(self):
        for chips in self.elements:
            yield Configuration(chips, self.params)

    def configurations(self) -> List[Configuration]:
        return list(self)

    def add(self, a: Configuration, b: Configuration) -> Configuration:
        return group_add(a, b)

    def inverse(self, c: Configuration) -> Configuration:
        return group_inverse(c)

    def is_zero_class(self, v: Sequence[int]) -> bool:
        p = self.params
        return _class_rep(v, p.q, p.t) == self.identity.chips


def enumerate_criticals(
    params: WheelParams, budget: int = ENUMERATION_BUDGET, method: str = "auto"
) -> CriticalGroup:
    """All critical configurations of the wheel, in lexicographic order."""
    _check_budget(params, budget)
    q, t = params.q, params.t
    if method == "auto":
        method = "blocks" if q >= 1 else "dynamic"
    if method == "blocks":
        if q < 1:
            raise Unsupported("block characterization needs q >= 1")
        test = _is_critical_blocks
    elif method == "dynamic":
        test = _is_critical_dynamic
    else:
        raise InvalidArgument(f"unknown method {method!r}")
    elements = tuple(c for c in stable_vectors(params) if test(c, q, t))
    return CriticalGroup(params, elements, group_identity(params))
