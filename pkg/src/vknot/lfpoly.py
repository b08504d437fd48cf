"""Two-variable L- and F-polynomials, the invariant bundle, and what is built on it.

For each crossing ``c`` the diagram ``D_c`` is the smoothing against
orientation at ``c``.  With ``dw_n(X) = J_n(X) - J_{-n}(X)``::

    L^n = sum_c sgn(c) (t^Ind(c) l^|dw_n(D_c)| - l^|dw_n(D)|)
    F^n = sum_c sgn(c) t^Ind(c) l^dw_n(D_c)
          - sum_{c in T_n} sgn(c) l^dw_n(D_c)
          - sum_{c not in T_n} sgn(c) l^dw_n(D)

where ``T_n = {c : dw_n(D_c) = +-dw_n(D)}``.  Outside the set ``nset(D)`` of
index magnitudes occurring in ``D`` or any ``D_c``, every dwrithe vanishes and
both families collapse to the affine index polynomial ``P``.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .codec import GaussCode
from .invariants import (
    IndexedCrossing,
    WritheTable,
    affine_index_poly,
    index_crossings,
    writhe_poly,
    writhe_table,
)
from .laurent import LaurentPoly2
from .transforms import mirror, reverse, smooth_against

NOT_COSMETIC = "not_cosmetic"
INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class _Data:
    crossings: list[IndexedCrossing]
    table: WritheTable
    smoothed: dict[int, WritheTable]
    nset: frozenset[int]


def _data(code: GaussCode) -> _Data:
    crossings = index_crossings(code)
    table = writhe_table(code, crossings)
    smoothed = {ic.label: writhe_table(smooth_against(code, ic.label).result) for ic in crossings}
    ns = set(table.support)
    for t in smoothed.values():
        ns |= t.support
    return _Data(crossings, table, smoothed, frozenset(ns))


def nset(code: GaussCode) -> frozenset[int]:
    return _data(code).nset


def stable_bound(code: GaussCode) -> int:
    return 2 * code.n_crossings + 1


def _l(d: _Data, n: int) -> LaurentPoly2:
    base = abs(d.table.dwrithe(n))
    terms: Counter[tuple[int, int]] = Counter()
    for ic in d.crossings:
        terms[(ic.index, abs(d.smoothed[ic.label].dwrithe(n)))] += ic.sign
        terms[(0, base)] -= ic.sign
    return LaurentPoly2(terms)


def _t(d: _Data, n: int) -> frozenset[int]:
    base = d.table.dwrithe(n)
    return frozenset(
        ic.label for ic in d.crossings if d.smoothed[ic.label].dwrithe(n) in (base, -base)
    )


def _f(d: _Data, n: int) -> LaurentPoly2:
    base = d.table.dwrithe(n)
    tn = _t(d, n)
    terms: Counter[tuple[int, int]] = Counter()
    for ic in d.crossings:
        e = d.smoothed[ic.label].dwrithe(n)
        terms[(ic.index, e)] += ic.sign
        terms[(0, e if ic.label in tn else base)] -= ic.sign
    return LaurentPoly2(terms)


def _check_n(n: int) -> None:
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")


def l_poly(code: GaussCode, n: int) -> LaurentPoly2:
    _check_n(n)
    return _l(_data(code), n)


def f_poly(code: GaussCode, n: int) -> LaurentPoly2:
    _check_n(n)
    return _f(_data(code), n)


def t_set(code: GaussCode, n: int) -> frozenset[int]:
    _check_n(n)
    return _t(_data(code), n)


@dataclass(frozen=True)
class CosmeticVerdict:
    status: str
    reason: str

    @property
    def proven(self) -> bool:
        return self.status == NOT_COSMETIC


@dataclass(frozen=True)
class InvariantBundle:
    """Every invariant computed for one diagram.

    ``L``, ``F`` and ``T`` are stored only for ``n`` in ``nset``; use
    :meth:`L_at` / :meth:`F_at` for arbitrary ``n``.
    """

    code: GaussCode
    crossings: tuple[IndexedCrossing, ...]
    writhes: WritheTable
    P: LaurentPoly2
    W: LaurentPoly2
    nset: frozenset[int]
    L: dict[int, LaurentPoly2]
    F: dict[int, LaurentPoly2]
    T: dict[int, frozenset[int]]
    smoothed_dwrithes: dict[tuple[int, int], int]
    stable_bound: int
    cosmetic: dict[int, CosmeticVerdict]

    @property
    def writhe(self) -> int:
        return self.writhes.writhe

    def L_at(self, n: int) -> LaurentPoly2:
        _check_n(n)
        return self.L.get(n, self.P)

    def F_at(self, n: int) -> LaurentPoly2:
        _check_n(n)
        return self.F.get(n, self.P)

    def signature(self) -> tuple:
        """The part of the bundle that is a virtual-knot invariant.

        Crossing labels, the writhe, ``nset`` and ``T`` depend on the diagram;
        ``P``, ``W``, the nonzero-index writhes and the families ``L``/``F``
        (recorded where they differ from ``P``) do not.
        """
        return (
            self.P,
            self.W,
            tuple(sorted(self.writhes.nonzero_J.items())),
            tuple((n, p) for n, p in sorted(self.L.items()) if p != self.P),
            tuple((n, p) for n, p in sorted(self.F.items()) if p != self.P),
        )


def _cosmetic(d: _Data) -> dict[int, CosmeticVerdict]:
    out = {}
    for ic in d.crossings:
        if ic.index != 0:
            out[ic.label] = CosmeticVerdict(NOT_COSMETIC, f"Ind={ic.index}")
            continue
        verdict = CosmeticVerdict(INCONCLUSIVE, "index 0 and smoothed dwrithes match")
        for n in sorted(d.nset):
            here, there = d.table.dwrithe(n), d.smoothed[ic.label].dwrithe(n)
            if there not in (here, -here):
                verdict = CosmeticVerdict(NOT_COSMETIC, f"dwrithe_{n}: smoothed {there} vs {here}")
                break
        out[ic.label] = verdict
    return out


def bundle(code: GaussCode) -> InvariantBundle:
    d = _data(code)
    P = affine_index_poly(code, d.crossings)
    ns = sorted(d.nset)
    L = {n: _l(d, n) for n in ns}
    F = {n: _f(d, n) for n in ns}
    for n in ns:
        if F[n].fold_abs_l() != L[n] or L[n].set_l_to_one() != P:
            raise AssertionError(f"inconsistent polynomials at n={n} for {code}")
    return InvariantBundle(
        code=code,
        crossings=tuple(d.crossings),
        writhes=d.table,
        P=P,
        W=writhe_poly(code, d.crossings),
        nset=d.nset,
        L=L,
        F=F,
        T={n: _t(d, n) for n in ns},
        smoothed_dwrithes={
            (lab, n): t.dwrithe(n) for lab, t in d.smoothed.items() for n in ns
        },
        stable_bound=stable_bound(code),
        cosmetic=_cosmetic(d),
    )


def cosmetic_verdicts(code: GaussCode) -> dict[int, CosmeticVerdict]:
    """One-sided test: ``not_cosmetic`` is a proof, ``inconclusive`` is not."""
    return _cosmetic(_data(code))


@dataclass(frozen=True)
class Verdict:
    distinguished: bool
    witness: str | None = None

    def __str__(self) -> str:
        if self.distinguished:
            return f"distinguished by {self.witness}"
        return "indistinguishable by computed invariants"


def distinguish(b1: InvariantBundle, b2: InvariantBundle) -> Verdict:
    """Name the first invariant that differs, in the order P, W, L^n, F^n."""
    if b1.P != b2.P:
        return Verdict(True, "P")
    if b1.W != b2.W:
        return Verdict(True, "W")
    ns = sorted(b1.nset | b2.nset)
    for n in ns:
        if b1.L_at(n) != b2.L_at(n):
            return Verdict(True, f"L^{n}")
    for n in ns:
        if b1.F_at(n) != b2.F_at(n):
            return Verdict(True, f"F^{n}")
    return Verdict(False)


@dataclass(frozen=True)
class MirrorReverseReport:
    mirror_ok: dict[int, bool]
    reverse_ok: dict[int, bool]

    @property
    def passed(self) -> bool:
        return all(self.mirror_ok.values()) and all(self.reverse_ok.values())


def mirror_reverse_check(code: GaussCode) -> MirrorReverseReport:
    """Check ``L^n(D*) = -L^n(D)(1/t)`` and ``L^n(D^-) = L^n(D)(1/t)``."""
    b = bundle(code)
    bm = bundle(mirror(code))
    br = bundle(reverse(code))
    ns = sorted(b.nset | bm.nset | br.nset)
    mirror_ok = {n: bm.L_at(n) == -b.L_at(n).invert_t() for n in ns}
    reverse_ok = {n: br.L_at(n) == b.L_at(n).invert_t() for n in ns}
    return MirrorReverseReport(mirror_ok, reverse_ok)


def bundle_to_json(b: InvariantBundle) -> dict:
    ns = sorted(b.nset)
    return {
        "code": b.code.to_string(),
        "writhe": b.writhe,
        "crossings": [
            {"label": ic.label, "sign": ic.sign, "index": ic.index} for ic in b.crossings
        ],
        "nset": ns,
        "dwrithe": {str(n): b.writhes.dwrithe(n) for n in ns},
        "P": b.P.to_json(),
        "W": b.W.to_json(),
        "L": {str(n): b.L[n].to_json() for n in ns},
        "F": {str(n): b.F[n].to_json() for n in ns},
        "T": {str(n): sorted(b.T[n]) for n in ns},
        "cosmetic": {str(lab): v.status for lab, v in b.cosmetic.items()},
    }

