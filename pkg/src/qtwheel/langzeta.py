"""The cyclic language of critical configurations and its zeta function.

The automaton has states A, B, C.  From A or B a letter in {q+1..q+t}
leads to A, a letter in {1..q} to B and the letter 0 to C; from C a letter
in {q+1..q+t} leads to A and the letter q back to C.  A word is accepted
when some run returns to its start state and passes through A.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import InvalidArgument
from .exactmath import (
    Q,
    T,
    Matrix,
    RationalSeries,
    UniPoly,
    det_cofactor,
)

STATES = ("A", "B", "C")


@dataclass(frozen=True)
class AutomatonMG:
    q: int
    t: int

    def __post_init__(self):
        if not isinstance(self.q, int) or self.q < 1:
            raise InvalidArgument(f"the automaton needs an int q >= 1, got {self.q!r}")
        if not isinstance(self.t, int) or self.t < 1:
            raise InvalidArgument(f"t must be an int >= 1, got {self.t!r}")

    @property
    def alphabet_size(self) -> int:
        return self.q + self.t + 1

    def step(self, state: str, letter: int) -> Optional[str]:
        """Next state, or None when no transition reads ``letter``."""
        q, t = self.q, self.t
        if not 0 <= letter <= q + t:
            raise InvalidArgument(f"letter {letter} outside 0..{q + t}")
        if letter > q:
            return "A"
        if state == "C":
            return "C" if letter == q else None
        return "B" if letter >= 1 else "C"

    def transfer_matrix(self) -> Matrix:
        counts = {s: {r: 0 for r in STATES} for s in STATES}
        for s in STATES:
            for letter in range(self.alphabet_size):
                nxt = self.step(s, letter)
                if nxt is not None:
                    counts[s][nxt] += 1
        return Matrix([[counts[s][r] for r in STATES] for s in STATES])

    def accepts(self, word: Sequence[int]) -> bool:
        word = [int(x) for x in word]
        for x in word:
            if not 0 <= x <= self.q + self.t:
                raise InvalidArgument(f"letter {x} outside 0..{self.q + self.t}")
        if not word:
            return False
        for start in STATES:
            state = start
            seen_a = start == "A"
            for x in word:
                state = self.step(state, x)
                if state is None:
                    break
                seen_a = seen_a or state == "A"
            if state == start and seen_a:
                return True
        return False


def mg_accepts(word: Sequence[int], q: int, t: int) -> bool:
    return AutomatonMG(q, t).accepts(word)


def symbolic_transfer_matrix(q=Q, t=T) -> Matrix:
    return Matrix([[t, q, 1], [t, q, 1], [t, 0, 1]])


def word_count(k: int, q=Q, t=T):
    """Accepted words of length k: tr(M^k) minus the B-only and C-only cycles.

    Symbolic in q and t unless both are ints.
    """
    if not isinstance(k, int) or k < 1:
        raise InvalidArgument(f"k must be a positive int, got {k!r}")
    return (symbolic_transfer_matrix(q, t) ** k).trace() - q**k - 1


def count_accepted_words(k: int, q: int, t: int) -> int:
    """Brute-force scan over every word of length k."""
    m = AutomatonMG(q, t)
    return sum(1 for w in itertools.product(range(m.alphabet_size), repeat=k) if m.accepts(w))


def zeta_language(q=Q, t=T) -> RationalSeries:
    """(1 - qT)(1 - T) / (1 - (1+q+t)T + qT^2)."""
    num = UniPoly([1, -q]) * UniPoly([1, -1])
    den = UniPoly([1, -(1 + q + t), q])
    return RationalSeries(num, den)


def zeta_det_form(q=Q, t=T) -> RationalSeries:
    """det(1 - qT) det(1 - T) / det(I - M T), with the determinant expanded."""
    m = symbolic_transfer_matrix(q, t)
    rows = []
    for i in range(3):
        row = []
        for j in range(3):
            row.append(UniPoly([int(i == j), -m[i, j]]))
        rows.append(row)
    den = det_cofactor(Matrix(rows))
    num = UniPoly([1, -q]) * UniPoly([1, -1])
    return RationalSeries(num, den)


def elliptic_zeta(q=Q, n1=T) -> RationalSeries:
    """(1 - (1+q-N1)T + qT^2) / ((1 - T)(1 - qT)); N1 rides in the second variable."""
    a = 1 + q - n1
    return RationalSeries(UniPoly([1, -a, q]), UniPoly([1, -1]) * UniPoly([1, -q]))


def reciprocity_holds() -> bool:
    """zeta_language * elliptic_zeta(N1 -> -t) == 1 as rational functions."""
    ez = elliptic_zeta().substitute(Q, -T)
    prod = zeta_language() * ez
    return prod.is_one() or prod.same_function(RationalSeries(UniPoly([1]), UniPoly([1])))
