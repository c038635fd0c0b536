"""Exact Markov-chain oracle: the ring-process transition matrix and its
stationary distribution by rational Gaussian elimination."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..combinatorics import Word, enumerate_states
from ..errors import InvalidRate, SingularSystem


@dataclass(frozen=True)
class TransitionMatrix:
    states: tuple[Word, ...]
    t0: Fraction
    rows: tuple[tuple[Fraction, ...], ...]

    @property
    def size(self) -> int:
        return len(self.states)

    def entry(self, i: int, j: int) -> Fraction:
        return self.rows[i][j]

    def index_of(self, mu: Word) -> int:
        return self.states.index(mu)


def build_transition_matrix(k: int, r: int, l: int, t0) -> TransitionMatrix:
    """One step of the ring process: a cyclically adjacent pair with the
    larger letter on the left swaps with probability t0/n, the reverse swap
    has probability 1/n; remaining mass stays put.  On the two-site ring
    both bonds join the same pair, so those rates add."""
    t0 = Fraction(t0)
    if not 0 <= t0 <= 1:
        raise InvalidRate(f"hop rate must lie in [0, 1]: {t0}")
    states = enumerate_states(k, r, l)
    index = {mu: i for i, mu in enumerate(states)}
    n = k + r + l
    rows = []
    for mu in states:
        row = [Fraction(0)] * len(states)
        off = Fraction(0)
        for p in range(n):
            a, b = mu.letters[p], mu.letters[(p + 1) % n]
            if a == b:
                continue
            swapped = list(mu.letters)
            swapped[p], swapped[(p + 1) % n] = b, a
            rate = Fraction(t0, n) if a > b else Fraction(1, n)
            row[index[Word(tuple(swapped))]] += rate
            off += rate
        row[index[mu]] = 1 - off
        rows.append(tuple(row))
    return TransitionMatrix(tuple(states), t0, tuple(rows))


def steady_state(matrix: TransitionMatrix) -> tuple[Fraction, ...]:
    """The unique probability vector with pi P = pi, solved exactly.

    One balance equation is replaced by the normalisation sum(pi) = 1; a
    vanishing pivot elsewhere signals a kernel of dimension != 1."""
    m = matrix.size
    # Equations indexed by state nu: sum_mu pi_mu (P[mu][nu] - delta) = 0.
    a = [[matrix.rows[mu][nu] - (1 if mu == nu else 0) for mu in range(m)] for nu in range(m)]
    b = [Fraction(0)] * m
    a[m - 1] = [Fraction(1)] * m
    b[m - 1] = Fraction(1)

    for col in range(m):
        pivot = next((row for row in range(col, m) if a[row][col] != 0), None)
        if pivot is None:
            raise SingularSystem("stationary system is rank deficient")
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            b[col], b[pivot] = b[pivot], b[col]
        inv = 1 / a[col][col]
        a[col] = [v * inv for v in a[col]]
        b[col] *= inv
        for row in range(m):
            if row != col and a[row][col]:
                factor = a[row][col]
                a[row] = [u - factor * v for u, v in zip(a[row], a[col])]
                b[row] -= factor * b[col]

    pi = tuple(b)
    if any(p < 0 for p in pi):
        raise SingularSystem("negative entry in the stationary solution")
    return pi
