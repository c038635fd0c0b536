"""Weight functions on tableaux and the quantities built from them:
Tab_t, Tab_qtx, the partition function and stationary law, and the
Macdonald polynomials E and P for partitions with parts at most 2.

Arrow orderings in different rows never interact, so every sum over
orderings factorises into per-row sums; the per-tableau scalar
[r+l-arr]!/[r+l]! depends only on the arrow count, so tableaux are
accumulated per arrow count and each factorial ratio is applied once.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache

from .algebra.poly import MultiPoly
from .algebra.qtx import QtxExpr, qtx_sum
from .algebra.ratfunc import (
    RatFunc,
    qt_factorial_ratio,
    ratfunc_sum,
    t_factorial_ratio,
)
from .combinatorics import (
    ArrowOrdering,
    Tableau,
    Word,
    disorder,
    enumerate_states,
    enumerate_tableaux,
    recoils,
    row_reading,
)

_ONE = Fraction(1)


def _x_monomial(cols, n: int, extra: dict[int, int] | None = None) -> MultiPoly:
    exps = [0] * n
    for c in cols:
        exps[c - 1] += 1
    if extra:
        for c, e in extra.items():
            exps[c - 1] += e
    return MultiPoly.monomial(0, 0, exps)


def wt_x(tableau: Tableau, ordering: ArrowOrdering) -> QtxExpr:
    """The x-monomial of a tableau with an ordering: x_{row label} for each
    row-maximal arrow, x_{column label} for every other arrow and for each
    arrowless square column, times x_i over all particle positions."""
    diagram = tableau.diagram
    mu = diagram.word
    counts: dict[int, int] = {}
    for c in mu.ea():
        counts[c] = counts.get(c, 0) + 1
    for c in diagram.square_cols:
        if tableau.arrow_row(c) is None:
            counts[c] = counts.get(c, 0) + 1
    for i in range(1, diagram.k + 1):
        order = ordering.row_order(i)
        if not order:
            continue
        label = diagram.row_label(i)
        counts[label] = counts.get(label, 0) + 1  # the row-maximal arrow
        for c in order[:-1]:
            counts[c] = counts.get(c, 0) + 1
    return QtxExpr.x_monomial(_exps_from_counts(counts, mu.n))


def _exps_from_counts(counts: dict[int, int], n: int) -> tuple[int, ...]:
    exps = [0] * n
    for c, e in counts.items():
        exps[c - 1] = e
    return tuple(exps)


def wt_qtx_ordered(tableau: Tableau, ordering: ArrowOrdering) -> QtxExpr:
    """t^disorder q^cycling times the x-weight, for one ordering."""
    dis = 0
    rec = 0
    for i in range(1, tableau.diagram.k + 1):
        reading = row_reading(tableau, i, ordering)
        dis += disorder(reading)
        rec += recoils(reading)
    return QtxExpr.from_multipoly(MultiPoly.monomial(rec, dis, ())) * wt_x(tableau, ordering)


def _row_sum(tableau: Tableau, i: int, with_x: bool) -> MultiPoly:
    """Sum over the row's label orderings of q^rec t^dis (times the arrow
    x-weights when with_x)."""
    diagram = tableau.diagram
    cols = tuple(sorted(tableau.row_arrow_cols(i)))
    n = diagram.word.n
    total = MultiPoly.zero()
    for perm in itertools.permutations(cols):
        ordering = ArrowOrdering(((i, perm),))
        reading = row_reading(tableau, i, ordering)
        dis = disorder(reading)
        rec = recoils(reading)
        if with_x:
            counts = {diagram.row_label(i): 1} if perm else {}
            for c in perm[:-1]:
                counts[c] = counts.get(c, 0) + 1
            mono = _exps_from_counts(counts, n) if perm else ()
            total = total + MultiPoly.monomial(rec, dis, mono)
        else:
            total = total + MultiPoly.monomial(0, dis, ())  # q dropped in the t-weight
    return total


def wt_qtx(tableau: Tableau) -> QtxExpr:
    """The qtx-weight: the factorial ratio times the ordering sum."""
    diagram = tableau.diagram
    mu = diagram.word
    body = MultiPoly.one()
    for i in range(1, diagram.k + 1):
        body = body * _row_sum(tableau, i, with_x=True)
    fixed = _x_monomial(mu.ea(), mu.n, extra={c: 1 for c in diagram.square_cols if tableau.arrow_row(c) is None})
    scalar = qt_factorial_ratio(mu.r + mu.l - tableau.arr, mu.r + mu.l)
    return QtxExpr.from_multipoly(body * fixed) * scalar


def wt_t(tableau: Tableau) -> RatFunc:
    """The t-weight: q and x dropped."""
    mu = tableau.diagram.word
    body = MultiPoly.one()
    for i in range(1, tableau.diagram.k + 1):
        body = body * _row_sum(tableau, i, with_x=False)
    return t_factorial_ratio(mu.r + mu.l - tableau.arr, mu.r + mu.l) * RatFunc(body)


def tab_qtx(mu: Word) -> QtxExpr:
    """Sum of qtx-weights over all tableaux of type mu."""
    by_arr: dict[int, MultiPoly] = {}
    for tableau in enumerate_tableaux(mu):
        body = MultiPoly.one()
        for i in range(1, tableau.diagram.k + 1):
            body = body * _row_sum(tableau, i, with_x=True)
        arrowless = {c: 1 for c in tableau.diagram.square_cols if tableau.arrow_row(c) is None}
        body = body * _x_monomial((), mu.n, extra=arrowless)
        by_arr[tableau.arr] = by_arr.get(tableau.arr, MultiPoly.zero()) + body
    ea_mono = _x_monomial(mu.ea(), mu.n)
    total = QtxExpr.zero()
    for a, body in sorted(by_arr.items()):
        scalar = qt_factorial_ratio(mu.r + mu.l - a, mu.r + mu.l)
        total = total + QtxExpr.from_multipoly(body * ea_mono) * scalar
    return total


def tab_t(mu: Word) -> RatFunc:
    """Sum of t-weights over all tableaux; computed directly with
    t-brackets (the q = 1, x = 1 specialization of tab_qtx is a test)."""
    by_arr: dict[int, MultiPoly] = {}
    for tableau in enumerate_tableaux(mu):
        body = MultiPoly.one()
        for i in range(1, tableau.diagram.k + 1):
            body = body * _row_sum(tableau, i, with_x=False)
        by_arr[tableau.arr] = by_arr.get(tableau.arr, MultiPoly.zero()) + body
    total = RatFunc.zero()
    for a, body in sorted(by_arr.items()):
        total = total + t_factorial_ratio(mu.r + mu.l - a, mu.r + mu.l) * RatFunc(body)
    return total


# -- exact numeric twins (used by the large cross-oracle sweeps) -----------


def _row_sum_eval(tableau: Tableau, i: int, q0, t0, xs) -> Fraction:
    diagram = tableau.diagram
    cols = tuple(sorted(tableau.row_arrow_cols(i)))
    total = Fraction(0)
    for perm in itertools.permutations(cols):
        ordering = ArrowOrdering(((i, perm),))
        reading = row_reading(tableau, i, ordering)
        v = q0 ** recoils(reading) * t0 ** disorder(reading)
        if perm:
            v *= xs[diagram.row_label(i) - 1]
            for c in perm[:-1]:
                v *= xs[c - 1]
        total += v
    return total


def tab_qtx_eval(mu: Word, q0, t0, xs) -> Fraction:
    """tab_qtx evaluated at exact rationals without symbolic overhead."""
    q0, t0 = Fraction(q0), Fraction(t0)
    xs = tuple(Fraction(v) for v in xs)
    rl = mu.r + mu.l
    ratio_cache: dict[int, Fraction] = {}

    def ratio(a: int) -> Fraction:
        if a not in ratio_cache:
            v = Fraction(1)
            for j in range(rl - a + 1, rl + 1):
                v /= (1 - q0 * t0**j) / (1 - t0)
            ratio_cache[a] = v
        return ratio_cache[a]

    ea_val = Fraction(1)
    for c in mu.ea():
        ea_val *= xs[c - 1]
    total = Fraction(0)
    for tableau in enumerate_tableaux(mu):
        v = ratio(tableau.arr) * ea_val
        for c in tableau.diagram.square_cols:
            if tableau.arrow_row(c) is None:
                v *= xs[c - 1]
        for i in range(1, tableau.diagram.k + 1):
            v *= _row_sum_eval(tableau, i, q0, t0, xs)
        total += v
    return total


def tab_t_eval(mu: Word, t0) -> Fraction:
    ones = (_ONE,) * mu.n
    return tab_qtx_eval(mu, 1, t0, ones)


# -- partition function and the stationary law ------------------------------


@lru_cache(maxsize=None)
def _partition_function_cached(k: int, r: int, l: int) -> RatFunc:
    return ratfunc_sum(tab_t(mu) for mu in enumerate_states(k, r, l))


def partition_function(k: int, r: int, l: int) -> RatFunc:
    """Sum of tab_t over all states with the given species counts."""
    if k + r + l < 1:
        raise ValueError("need at least one site")
    return _partition_function_cached(k, r, l)


def stationary_prob(mu: Word) -> RatFunc:
    """Steady-state probability of a state, as a rational function of t."""
    return tab_t(mu) / partition_function(mu.k, mu.r, mu.l)


# -- Macdonald polynomials ---------------------------------------------------


def omega(lam: Word) -> RatFunc:
    """The scalar attached to a partition: the product over 1 <= i < j <= s
    of (1 - q^(j-i) t^(conj_i - conj_j)), s the largest part; empty product
    1 when s <= 1."""
    lam.require_partition()
    parts = lam.letters
    s = parts[0] if parts else 0
    conj = [sum(1 for a in parts if a >= i) for i in range(1, s + 1)]
    out = RatFunc.one()
    for i in range(1, s + 1):
        for j in range(i + 1, s + 1):
            out = out * RatFunc(
                MultiPoly.one() - MultiPoly.q(j - i) * MultiPoly.t(conj[i - 1] - conj[j - 1])
            )
    return out


def macdonald_E(lam: Word, require_partition: bool = True) -> QtxExpr:
    """The nonsymmetric Macdonald polynomial of a partition in {0,1,2}^n,
    as the tableau sum.  With require_partition unset the same sum is
    returned for any word, but it is then only the tableau generating
    function, not E."""
    if require_partition:
        lam.require_partition()
    return tab_qtx(lam)


def macdonald_P(lam: Word) -> QtxExpr:
    """The symmetric Macdonald polynomial: the tableau sum over all
    distinct rearrangements of the partition."""
    lam.require_partition()
    return qtx_sum(tab_qtx(mu) for mu in enumerate_states(lam.k, lam.r, lam.l))
