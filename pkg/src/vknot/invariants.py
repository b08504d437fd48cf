"""Arc labelings, crossing indices, n-writhes and the one-variable index polynomials.

Arcs are numbered by the pass they leave: arc ``i`` runs from pass ``i`` to
pass ``i + 1`` (cyclically).  The label of an arc is the signed number of
crossings whose first pass, travelling forward from that arc, is the over
pass.  Consequently, crossing an over pass lowers the label by ``sgn(c)`` and
crossing an under pass raises it by ``sgn(c)``; for a positive crossing this
is the familiar ``a -> a-1`` along the over strand, ``b -> b+1`` along the
under strand.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .codec import GaussCode
from .laurent import LaurentPoly2


class LabelingError(AssertionError):
    """The arc labeling violates the local rule at some crossing (internal bug)."""


@dataclass(frozen=True)
class ArcLabeling:
    code: GaussCode
    labels: tuple[int, ...]

    def __getitem__(self, arc: int) -> int:
        return self.labels[arc % len(self.labels)]

    def incoming(self, position: int) -> int:
        """Label of the arc that enters the pass at ``position``."""
        return self[position - 1]


@dataclass(frozen=True)
class IndexedCrossing:
    """A crossing with its sign and index.

    ``a`` and ``b`` are the labels of the two incoming arcs laid out so that
    ``index == sign * (a - b - 1)``: for a positive crossing ``a`` is the
    incoming over arc and ``b`` the incoming under arc; for a negative one
    the roles swap.
    """

    label: int
    sign: int
    index: int
    a: int
    b: int


@dataclass(frozen=True)
class WritheTable:
    """Signed index counts of a diagram.

    ``buckets`` maps every index value that occurs (0 included) to the signed
    count of crossings carrying it; values with zero count are dropped.
    """

    buckets: dict[int, int]
    support: frozenset[int]
    writhe: int
    dwrithes: dict[int, int] = field(default_factory=dict)

    def J(self, n: int) -> int:
        return self.buckets.get(n, 0)

    def dwrithe(self, n: int) -> int:
        """``J_n - J_{-n}``; zero outside the support."""
        return self.buckets.get(n, 0) - self.buckets.get(-n, 0)

    @property
    def nonzero_J(self) -> dict[int, int]:
        return {n: v for n, v in self.buckets.items() if n != 0}


def cheng_labeling(code: GaussCode) -> ArcLabeling:
    """Label every arc by the signed count of crossings first met as over passes."""
    m = len(code)
    if m == 0:
        return ArcLabeling(code, (0,))
    records = [(c.over_position, c.under_position, c.sign) for c in code.crossings.values()]
    labels = []
    for arc in range(m):
        start = arc + 1
        total = 0
        for o, u, s in records:
            if (o - start) % m < (u - start) % m:
                total += s
        labels.append(total)
    labeling = ArcLabeling(code, tuple(labels))
    _check_local_rule(labeling)
    return labeling


def _check_local_rule(labeling: ArcLabeling) -> None:
    code = labeling.code
    for c in code.crossings.values():
        o, u, s = c.over_position, c.under_position, c.sign
        if labeling[o] != labeling.incoming(o) - s or labeling[u] != labeling.incoming(u) + s:
            raise LabelingError(f"local labeling rule fails at crossing {c.label} of {code}")


def index_crossings(code: GaussCode, labeling: ArcLabeling | None = None) -> list[IndexedCrossing]:
    labeling = labeling or cheng_labeling(code)
    out = []
    for c in code.crossings.values():
        o_in = labeling.incoming(c.over_position)
        u_in = labeling.incoming(c.under_position)
        a, b = (o_in, u_in) if c.sign > 0 else (u_in, o_in)
        out.append(IndexedCrossing(c.label, c.sign, c.sign * (a - b - 1), a, b))
    return out


def indices(code: GaussCode) -> dict[int, int]:
    return {ic.label: ic.index for ic in index_crossings(code)}


def writhe_table(code: GaussCode, crossings: list[IndexedCrossing] | None = None) -> WritheTable:
    crossings = index_crossings(code) if crossings is None else crossings
    counts: Counter[int] = Counter()
    for ic in crossings:
        counts[ic.index] += ic.sign
    buckets = {n: v for n, v in sorted(counts.items()) if v}
    support = frozenset(abs(ic.index) for ic in crossings) - {0}
    w = sum(ic.sign for ic in crossings)
    dw = {n: buckets.get(n, 0) - buckets.get(-n, 0) for n in sorted(support)}
    return WritheTable(buckets, support, w, dw)


def affine_index_poly(code: GaussCode, crossings: list[IndexedCrossing] | None = None) -> LaurentPoly2:
    """Sum of ``sgn(c) * (t^Ind(c) - 1)``."""
    crossings = index_crossings(code) if crossings is None else crossings
    terms: Counter[tuple[int, int]] = Counter()
    for ic in crossings:
        terms[(ic.index, 0)] += ic.sign
        terms[(0, 0)] -= ic.sign
    return LaurentPoly2(terms)


def writhe_poly(code: GaussCode, crossings: list[IndexedCrossing] | None = None) -> LaurentPoly2:
    """Sum of ``sgn(c) * t^(Ind(c) + 1)`` over crossings with nonzero index.

    Equivalently ``t * sum_{n != 0} J_n t^n``.
    """
    crossings = index_crossings(code) if crossings is None else crossings
    terms: Counter[tuple[int, int]] = Counter()
    for ic in crossings:
        if ic.index:
            terms[(ic.index + 1, 0)] += ic.sign
    return LaurentPoly2(terms)
