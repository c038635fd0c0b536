"""Two-line queues: cylindrical two-row ball configurations with a partial
matching, their weight algorithm, and the weight-preserving correspondence
with (tableau, arrow ordering) pairs.

A queue is valid when every top ball is matched, an unmatched bottom ball
has no top ball above it, and every non-self edge lies on a chain starting
at an unrestricted top ball (matchings with cycles among restricted balls
satisfy the two local rules but cannot be produced by the correspondence
or weighted by the traversal, so they are excluded)."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .algebra.poly import MultiPoly
from .algebra.qtx import QtxExpr
from .algebra.ratfunc import RatFunc, qt_bracket
from .combinatorics import ArrowOrdering, Tableau, Word, build_diagram
from .errors import InvalidQueue


@dataclass(frozen=True)
class TwoLineQueue:
    n: int
    top: frozenset[int]
    bottom: frozenset[int]
    matching: tuple[tuple[int, int], ...]  # (top column, bottom column), sorted

    @staticmethod
    def make(n: int, top, bottom, matching) -> "TwoLineQueue":
        return TwoLineQueue(n, frozenset(top), frozenset(bottom), tuple(sorted(matching)))

    def matching_dict(self) -> dict[int, int]:
        return dict(self.matching)

    def validate(self) -> None:
        cols = range(1, self.n + 1)
        if not (self.top <= set(cols) and self.bottom <= set(cols)):
            raise InvalidQueue("ball outside the column range")
        match = dict(self.matching)
        if len(match) != len(self.matching):
            raise InvalidQueue("a top ball is matched twice")
        if set(match) != self.top:
            raise InvalidQueue("every top ball must be matched, and only balls match")
        targets = list(match.values())
        if len(set(targets)) != len(targets):
            raise InvalidQueue("a bottom ball is matched twice")
        if not set(targets) <= self.bottom:
            raise InvalidQueue("matched to an empty bottom site")
        for b in self.bottom:
            if b not in set(targets) and b in self.top:
                raise InvalidQueue(f"unmatched bottom ball under a top ball at column {b}")
        # chain structure: walking from unrestricted tops must visit every
        # non-self edge exactly once
        seen = 0
        for start in self.top - self.bottom:
            i = start
            while True:
                j = match[i]
                seen += 1
                if j in self.top and match[j] != j:
                    i = j
                else:
                    break
        non_self = sum(1 for i, j in self.matching if i != j)
        if seen != non_self:
            raise InvalidQueue("matching contains a cycle among restricted balls")
        for i, j in self.matching:
            if i == j and any(jj == i for ii, jj in self.matching if ii != i):
                raise InvalidQueue(f"self-matched column {i} also receives a chain edge")

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "top": sorted(self.top),
            "bottom": sorted(self.bottom),
            "matching": [list(edge) for edge in self.matching],
        }

    @staticmethod
    def from_json_dict(doc: dict) -> "TwoLineQueue":
        return TwoLineQueue.make(
            int(doc["n"]),
            (int(c) for c in doc["top"]),
            (int(c) for c in doc["bottom"]),
            ((int(i), int(j)) for i, j in doc["matching"]),
        )


def queue_type(queue: TwoLineQueue) -> Word:
    """Bottom row read left to right: empty 0, unmatched ball 1, matched 2."""
    matched = {j for _, j in queue.matching}
    letters = []
    for c in range(1, queue.n + 1):
        if c not in queue.bottom:
            letters.append(0)
        elif c in matched:
            letters.append(2)
        else:
            letters.append(1)
    return Word(tuple(letters))


def _traverse(queue: TwoLineQueue) -> list[tuple[int, int, int, int]]:
    """Edge records (i, j, skipped, free) of the weighting traversal.

    Repeatedly start from the rightmost unprocessed unrestricted top ball
    and follow its chain; ``skipped`` counts free bottom balls passed
    moving right cyclically from i to j, ``free`` the free count when the
    edge is weighted.  Self-matched bottom balls stay free throughout.
    """
    match = queue.matching_dict()
    free = set(queue.bottom)
    records = []
    for start in sorted(queue.top - queue.bottom, reverse=True):
        i = start
        while True:
            j = match[i]
            if i < j:
                skipped = sum(1 for u in free if i <= u < j)
            else:
                skipped = sum(1 for u in free if u >= i or u < j)
            records.append((i, j, skipped, len(free)))
            free.discard(j)
            if j in queue.top and match[j] != j:
                i = j
            else:
                break
    return records


def queue_weight(queue: TwoLineQueue) -> QtxExpr:
    """x per ball, times q^{wrap} t^{skipped} / [free] per traversal edge."""
    queue.validate()
    total_q = total_t = 0
    edges = 0
    den = MultiPoly.one()
    one_minus_t = MultiPoly.one() - MultiPoly.t()
    for i, j, skipped, free in _traverse(queue):
        if i > j:
            total_q += 1
        total_t += skipped
        edges += 1
        den = den * (MultiPoly.one() - MultiPoly.q() * MultiPoly.t(free))
    exps = [0] * queue.n
    for c in queue.top:
        exps[c - 1] += 1
    for c in queue.bottom:
        exps[c - 1] += 1
    # q^a t^b (1-t)^e and prod (1 - q t^f) share no factors
    num = MultiPoly.monomial(total_q, total_t, ()) * one_minus_t**edges
    coeff = RatFunc._reduced(num, den)
    return QtxExpr.x_monomial(exps, coeff)


def crt_to_queue(tableau: Tableau, ordering: ArrowOrdering) -> TwoLineQueue:
    """Arrows labeled 1 start chains at their row's column; consecutive
    labels in a row continue them; the row-maximal arrow ends its chain."""
    diagram = tableau.diagram
    mu = diagram.word
    n = mu.n
    bottom = set(mu.ea())
    top: set[int] = set()
    matching: list[tuple[int, int]] = []
    for c in diagram.square_cols:
        if tableau.arrow_row(c) is None:
            top.add(c)
            matching.append((c, c))
    for i in range(1, diagram.k + 1):
        order = ordering.row_order(i)
        if not order:
            continue
        label = diagram.row_label(i)
        top.add(label)
        matching.append((label, order[0]))
        for a, b in zip(order, order[1:]):
            top.add(a)
            matching.append((a, b))
    return TwoLineQueue.make(n, top, bottom, matching)


def queue_to_crt(queue: TwoLineQueue) -> tuple[Tableau, ArrowOrdering]:
    """Inverse correspondence: each chain from an unrestricted top ball
    becomes the arrows of one row, labeled in chain order."""
    queue.validate()
    mu = queue_type(queue)
    diagram = build_diagram(mu)
    match = queue.matching_dict()
    arrows: list[tuple[int, int]] = []
    orders: dict[int, tuple[int, ...]] = {i: () for i in range(1, diagram.k + 1)}
    for start in queue.top - queue.bottom:
        row = diagram.row_labels.index(start) + 1
        chain = []
        i = start
        while True:
            j = match[i]
            chain.append(j)
            if j in queue.top and match[j] != j:
                i = j
            else:
                break
        orders[row] = tuple(chain)
        arrows.extend((c, row) for c in chain)
    tableau = Tableau(diagram, tuple(sorted(arrows)))
    ordering = ArrowOrdering(tuple(sorted(orders.items())))
    return tableau, ordering


def enumerate_queues(mu: Word) -> list[TwoLineQueue]:
    """All valid queues of a type, built directly as chain systems: choose
    the self-matched heavy columns, then distribute the rest into labeled
    chains hanging from hole columns."""
    zeros = mu.positions_of(0)
    ee = mu.ee()
    bottom = set(mu.ea())
    out: list[TwoLineQueue] = []
    for s in range(0, len(ee) + 1):
        for chained in itertools.combinations(ee, s):
            if s > 0 and not zeros:
                continue
            self_matched = [c for c in ee if c not in chained]
            for owner in itertools.product(zeros, repeat=s):
                groups: dict[int, list[int]] = {d: [] for d in zeros}
                for c, d in zip(chained, owner):
                    groups[d].append(c)
                for chains in itertools.product(
                    *(itertools.permutations(groups[d]) for d in zeros)
                ):
                    top = set(self_matched)
                    matching = [(c, c) for c in self_matched]
                    for d, chain in zip(zeros, chains):
                        if not chain:
                            continue
                        top.add(d)
                        matching.append((d, chain[0]))
                        for a, b in zip(chain, chain[1:]):
                            top.add(a)
                            matching.append((a, b))
                    out.append(TwoLineQueue.make(mu.n, top, bottom, matching))
    return out
