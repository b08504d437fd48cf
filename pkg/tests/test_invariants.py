from collections import Counter

import pytest

from vknot.codec import parse
from vknot.corpus import fixture
from vknot.invariants import (
    affine_index_poly,
    cheng_labeling,
    index_crossings,
    writhe_poly,
    writhe_table,
)
from vknot.laurent import LaurentPoly2
from vknot.transforms import crossing_change, mirror, reverse

from conftest import random_codes

P = LaurentPoly2.parse


def walk_labels(code):
    """Reference labeling: for each arc, travel forward and note first-met passes."""
    m = len(code)
    if m == 0:
        return [0]
    out = []
    for arc in range(m):
        seen, total = set(), 0
        for k in range(1, m + 1):
            p = code[(arc + k) % m]
            if p.label not in seen:
                seen.add(p.label)
                if p.is_over:
                    total += p.sign
        out.append(total)
    return out


def test_labeling_virtual_trefoil():
    assert cheng_labeling(parse("O1+O2+U1+U2+")).labels == (1, 0, 1, 2)


def test_labeling_empty():
    assert cheng_labeling(parse("")).labels == (0,)


def test_kink_has_index_zero():
    (ic,) = index_crossings(parse("O1+U1+"))
    assert ic.index == 0


@pytest.mark.parametrize("code", random_codes(150, max_crossings=8, seed=3))
def test_labeling_matches_reference_and_local_rule(code):
    lab = cheng_labeling(code)
    assert list(lab.labels) == walk_labels(code)
    for c in code.crossings.values():
        s = c.sign
        assert lab[c.over_position] == lab.incoming(c.over_position) - s
        assert lab[c.under_position] == lab.incoming(c.under_position) + s


def test_positive_crossings_follow_textbook_rule():
    code = parse("O1+O2+U1+U2+")
    lab = cheng_labeling(code)
    for c in code.crossings.values():
        assert lab[c.over_position] == lab.incoming(c.over_position) - 1
        assert lab[c.under_position] == lab.incoming(c.under_position) + 1


def test_fig6_indices():
    ind = {ic.label: ic.index for ic in index_crossings(fixture("fig6").code)}
    assert ind == {1: 2, 2: -2, 3: 1, 4: 1}


def test_virtual_trefoil_indices():
    ind = {ic.label: ic.index for ic in index_crossings(parse("O1+O2+U1+U2+"))}
    assert ind == {1: 1, 2: -1}


def test_classical_trefoil_indices_vanish():
    assert all(ic.index == 0 for ic in index_crossings(parse("O1+U2+O3+U1+O2+U3+")))


@pytest.mark.parametrize("code", random_codes(60, seed=5))
def test_index_formula_uses_a_and_b(code):
    for ic in index_crossings(code):
        assert ic.index == ic.sign * (ic.a - ic.b - 1)


def test_fig6_writhe_table():
    wt = writhe_table(fixture("fig6").code)
    assert wt.J(1) == 0 and wt.J(2) == -1 and wt.J(-2) == -1
    assert wt.dwrithe(1) == 0 and wt.dwrithe(2) == 0
    assert wt.support == {1, 2}
    assert wt.writhe == -2


def test_empty_writhe_table():
    wt = writhe_table(parse(""))
    assert wt.buckets == {} and wt.support == frozenset() and wt.writhe == 0
    assert wt.dwrithe(5) == 0


@pytest.mark.parametrize("code", random_codes(100, seed=8))
def test_writhe_table_properties(code):
    wt = writhe_table(code)
    assert sum(wt.buckets.values()) == wt.writhe
    inds = [ic.index for ic in index_crossings(code)]
    span = max((abs(i) for i in inds), default=0) + 2
    for n in range(1, span + 1):
        if n not in wt.support:
            assert wt.dwrithe(n) == 0
    for n, v in wt.dwrithes.items():
        assert v == wt.J(n) - wt.J(-n)


@pytest.mark.parametrize("code", random_codes(100, seed=9))
def test_dwrithe_is_flat_and_mirror_reverse_behaviour(code):
    wt = writhe_table(code)
    ns = range(1, 2 * code.n_crossings + 2)
    for label in code.crossings:
        changed = writhe_table(crossing_change(code, label))
        assert all(changed.dwrithe(n) == wt.dwrithe(n) for n in ns)
    wm, wr = writhe_table(mirror(code)), writhe_table(reverse(code))
    assert all(wm.dwrithe(n) == wt.dwrithe(n) for n in ns)
    assert all(wr.dwrithe(n) == -wt.dwrithe(n) for n in ns)


def test_affine_index_poly_examples():
    assert affine_index_poly(fixture("fig6").code) == P("2 - t^2 - t^-2")
    assert affine_index_poly(fixture("fig13-K").code).is_zero()
    assert affine_index_poly(parse("O1+O2+U1+U2+")) == P("t + t^-1 - 2")


@pytest.mark.parametrize("code", random_codes(50, seed=10))
def test_affine_index_poly_has_no_l_and_vanishes_at_one(code):
    p = affine_index_poly(code)
    assert p.set_l_to_one() == p
    assert p.evaluate(1) == 0


def test_writhe_poly_examples():
    assert writhe_poly(fixture("fig20-K").code) == P("-2*t^2 - t^-2 + 1")
    assert writhe_poly(parse("O1+U2+O3+U1+O2+U3+")).is_zero()
    assert writhe_poly(parse("")).is_zero()


def test_writhe_poly_is_shifted_nonzero_index_sum():
    code = fixture("fig20-K").code
    counts = Counter()
    for ic in index_crossings(code):
        counts[ic.index] += ic.sign
    expected = LaurentPoly2({(n + 1, 0): v for n, v in counts.items() if n})
    assert writhe_poly(code) == expected
