"""Smith normal form of integer matrices.

Only the three unimodular moves are used: negating a row or column, adding
an integer multiple of one row (column) to another, and swapping two rows
(columns).  The pivot is always an entry of least absolute value in the
active submatrix, so each reduction round strictly shrinks it.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from .matrix import Matrix


@dataclass(frozen=True)
class SNFResult:
    invariant_factors: Tuple[int, ...]
    left: Optional[Matrix] = field(default=None, compare=False, repr=False)
    right: Optional[Matrix] = field(default=None, compare=False, repr=False)

    def nontrivial(self) -> Tuple[int, ...]:
        """Factors other than 1 (zeros are kept: they are infinite cyclic)."""
        return tuple(d for d in self.invariant_factors if d != 1)

    def order(self) -> int:
        """Cokernel order; 0 stands for infinite."""
        out = 1
        for d in self.invariant_factors:
            out *= d
        return out

    def to_json_obj(self) -> dict:
        return {"invariant_factors": [str(d) for d in self.invariant_factors]}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, obj: dict) -> "SNFResult":
        return cls(tuple(int(d) for d in obj["invariant_factors"]))


def _as_rows(m) -> List[List[int]]:
    rows = m.tolist() if isinstance(m, Matrix) else [list(r) for r in m]
    for r in rows:
        for x in r:
            if not isinstance(x, int):
                raise TypeError("smith_normal_form needs integer entries; evaluate first")
    return rows


def smith_normal_form(m: Matrix | Sequence[Sequence[int]], transforms: bool = False) -> SNFResult:
    a = _as_rows(m)
    nr = len(a)
    nc = len(a[0]) if a else 0
    u = [[int(i == j) for j in range(nr)] for i in range(nr)] if transforms else None
    v = [[int(i == j) for j in range(nc)] for i in range(nc)] if transforms else None

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        if u is not None:
            u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        if v is not None:
            for r in v:
                r[i], r[j] = r[j], r[i]

    def add_row(dst, src, f):
        # row[dst] += f * row[src]
        a[dst] = [x + f * y for x, y in zip(a[dst], a[src])]
        if u is not None:
            u[dst] = [x + f * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, f):
        for r in a:
            r[dst] += f * r[src]
        if v is not None:
            for r in v:
                r[dst] += f * r[src]

    def negate_row(i):
        a[i] = [-x for x in a[i]]
        if u is not None:
            u[i] = [-x for x in u[i]]

    for s in range(min(nr, nc)):
        while True:
            best = None
            for i in range(s, nr):
                for j in range(s, nc):
                    if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                break
            if best[0] != s:
                swap_rows(s, best[0])
            if best[1] != s:
                swap_cols(s, best[1])
            p = a[s][s]
            dirty = False
            for i in range(s + 1, nr):
                if a[i][s]:
                    add_row(i, s, -(a[i][s] // p))
                    dirty = dirty or a[i][s] != 0
            for j in range(s + 1, nc):
                if a[s][j]:
                    add_col(j, s, -(a[s][j] // p))
                    dirty = dirty or a[s][j] != 0
            if dirty:
                continue
            bad = next(
                (i for i in range(s + 1, nr) for j in range(s + 1, nc) if a[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(s, bad, 1)
        if a[s][s] < 0:
            negate_row(s)

    factors = tuple(a[i][i] for i in range(min(nr, nc)))
    if transforms:
        return SNFResult(factors, Matrix(u), Matrix(v))
    return SNFResult(factors)
