import pytest

from vknot.codec import serialize
from vknot.corpus import (
    UnknownFixture,
    family_kn,
    family_labels,
    fixture,
    fixture_names,
)
from vknot.invariants import index_crossings, writhe_table
from vknot.lfpoly import bundle
from vknot.transforms import smooth_against


def test_fixture_names():
    names = fixture_names()
    for name in ("fig6", "fig13-K", "fig13-Kstar", "fig17-K", "fig17-MK", "fig20-K",
                 "fig20-Kprime", "trefoil-classical", "virtual-trefoil", "kink", "unknot"):
        assert name in names


def test_unknown_fixture():
    with pytest.raises(UnknownFixture):
        fixture("fig99")


def test_fig6_fixture_vectors():
    f = fixture("fig6")
    assert f.code.n_crossings == 4
    ics = index_crossings(f.code)
    by_name = {f.names()[ic.label]: (ic.sign, ic.index) for ic in ics}
    assert by_name == {"alpha": (-1, 2), "beta": (-1, -2), "gamma": (-1, 1), "delta": (1, 1)}


def test_classical_trefoil_fixture():
    f = fixture("trefoil-classical")
    assert f.code.to_string() == "O1+U2+O3+U1+O2+U3+"
    assert all(ic.index == 0 for ic in index_crossings(f.code))


@pytest.mark.parametrize("name", fixture_names())
def test_fixture_expectations_match(name):
    f = fixture(name)
    b = bundle(f.code)
    exp = f.expected
    if "writhe" in exp:
        assert b.writhe == exp["writhe"]
    if "crossings" in exp:
        got = {(ic.label, ic.sign, ic.index) for ic in b.crossings}
        assert got == {(c["label"], c["sign"], c["index"]) for c in exp["crossings"]}
    if "nset" in exp:
        assert sorted(b.nset) == exp["nset"]
    for n, v in exp.get("dwrithe", {}).items():
        assert b.writhes.dwrithe(int(n)) == v
    for n, v in exp.get("J", {}).items():
        assert b.writhes.J(int(n)) == v
    for key in ("P", "W"):
        if key in exp:
            assert getattr(b, key) == f.poly(key)
    for n in exp.get("L", {}):
        assert b.L_at(int(n)) == f.poly("L", int(n))
    for n in exp.get("F", {}):
        assert b.F_at(int(n)) == f.poly("F", int(n))
    for n, labels in exp.get("T", {}).items():
        assert sorted(b.T[int(n)]) == labels
    for label, status in exp.get("cosmetic", {}).items():
        assert b.cosmetic[int(label)].status == status
    for label, data in exp.get("smoothings", {}).items():
        d = smooth_against(f.code, int(label)).result
        if "crossings" in data:
            got = {(ic.label, ic.sign, ic.index) for ic in index_crossings(d)}
            assert got == {(c["label"], c["sign"], c["index"]) for c in data["crossings"]}
        wt = writhe_table(d)
        for n, v in data["dwrithe"].items():
            assert wt.dwrithe(int(n)) == v


def test_family_base_case_is_fig17():
    assert serialize(family_kn(1)) == serialize(fixture("fig17-K").code)
    assert serialize(family_kn(1, mutant=True)) == serialize(fixture("fig17-MK").code)


@pytest.mark.parametrize("n", range(1, 9))
def test_family_mutant_sanity(n):
    k, mk = family_kn(n), family_kn(n, mutant=True)
    assert k.n_crossings == mk.n_crossings == n + 3
    assert sorted(c.sign for c in k.crossings.values()) == sorted(c.sign for c in mk.crossings.values())
    assert set(family_labels(n).values()) == set(k.crossings)


def test_family_rejects_bad_n():
    with pytest.raises(ValueError):
        family_kn(0)
