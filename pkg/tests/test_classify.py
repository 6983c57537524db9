import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles as O
from ringlab import jacobson_radical, sqrt_jacobson, units
from ringlab.classify import (
    CLEAN_PROPERTIES,
    STRUCTURAL,
    DecompKind,
    DecompMode,
    classify_all,
    decomposition_counts,
    decompositions,
    has_clean_property,
    property_name,
    witness_set,
)
from ringlab.subsets import idempotents, nilpotents

CORPUS = O.corpus()
UP_TO_64 = [n for n, r in CORPUS.items() if r.order <= 64]
UP_TO_1024 = [n for n, r in CORPUS.items() if r.order <= 1024]


def oracle_witness(ring, kind):
    J = O.quasi_regular_radical(ring)
    return {
        DecompKind.UNIT: O.units_bijection(ring),
        DecompKind.NIL: O.nilpotents(ring),
        DecompKind.J: J,
        DecompKind.SQRTJ: O.sqrt_radical(ring, J),
    }[kind]


def test_decomposition_examples():
    z4 = O.ring("Z(4)")
    assert [(d.e, d.z) for d in decompositions(z4, 3, DecompKind.SQRTJ)] == [(1, 2)]
    z2 = O.ring("Z(2)")
    assert [(d.e, d.z) for d in decompositions(z2, 0, DecompKind.SQRTJ)] == [(0, 0)]
    m = O.ring("M(2,GF(2))")
    ds = decompositions(m, m.one, DecompKind.SQRTJ)
    assert [(d.e, d.z) for d in ds] == [(m.one, m.zero)]
    assert ds[0].commutes


def test_decomposition_out_of_range():
    with pytest.raises(IndexError):
        decompositions(O.ring("Z(4)"), 4, DecompKind.UNIT)


def test_witness_set_map():
    r = O.ring("Z(8)xZ(9)")
    assert np.array_equal(witness_set(r, DecompKind.UNIT), units(r).mask)
    assert np.array_equal(witness_set(r, DecompKind.NIL), nilpotents(r).mask)
    assert np.array_equal(witness_set(r, DecompKind.J), jacobson_radical(r).mask)
    assert np.array_equal(witness_set(r, DecompKind.SQRTJ), sqrt_jacobson(r).mask)


@pytest.mark.parametrize("name", UP_TO_64)
@pytest.mark.parametrize("kind", list(DecompKind))
def test_decompositions_match_brute_force(name, kind):
    r = CORPUS[name]
    W = oracle_witness(r, kind)
    for a in range(r.order):
        got = [(d.e, d.z, d.commutes) for d in decompositions(r, a, kind)]
        assert got == O.decompositions(r, a, W)
        for d in decompositions(r, a, kind):
            assert int(r.add(d.e, d.z)) == a and d.kind is kind


@pytest.mark.parametrize("name", UP_TO_64)
@pytest.mark.parametrize("kind", list(DecompKind))
def test_verdicts_and_least_witness(name, kind):
    r = CORPUS[name]
    W = oracle_witness(r, kind)
    per = [O.decompositions(r, a, W) for a in range(r.order)]
    rules = {
        DecompMode.ANY: lambda ds: len(ds) > 0,
        DecompMode.STRONG: lambda ds: any(c for _, _, c in ds),
        DecompMode.UNIQUE: lambda ds: len(ds) == 1,
    }
    for mode, ok in rules.items():
        failing = [a for a, ds in enumerate(per) if not ok(ds)]
        v = has_clean_property(r, kind, mode)
        assert bool(v) == (not failing)
        if failing:
            assert v.witness["element"] == failing[0]
            if mode is DecompMode.UNIQUE and len(per[failing[0]]) >= 2:
                assert v.witness["decompositions"] == [list(p[:2]) for p in per[failing[0]][:2]]
        else:
            assert v.witness is None


def test_clean_examples():
    z9, m = O.ring("Z(9)"), O.ring("M(2,GF(2))")
    assert not has_clean_property(z9, DecompKind.SQRTJ)
    assert has_clean_property(m, DecompKind.SQRTJ)
    assert has_clean_property(z9, DecompKind.UNIT)
    assert has_clean_property(O.ring("Z(8)"), DecompKind.J)


def test_classify_examples():
    r = classify_all(O.ring("Z(4)"))
    assert r["j_clean"] and r["sqrtj_clean"] and r["clean"] and not r["boolean"]
    g = classify_all(O.ring("GF(3)"))
    assert g["clean"] and not g["sqrtj_clean"]
    z2 = classify_all(O.ring("Z(2)"))
    for key in ("boolean", "j_clean", "sqrtj_clean", "clean", "uniquely_clean", "uniquely_j_clean", "uniquely_sqrtj_clean", "uniquely_nil_clean"):
        assert z2[key], key


def test_structural_examples():
    z2 = classify_all(O.ring("Z(2)"))
    assert z2["boolean"] and z2["local"]
    assert not classify_all(O.ring("Z(9)"))["two_in_J"]
    m = O.ring("M(2,GF(2))")
    rep = classify_all(m)
    assert not rep["sqrtJU"]
    u = rep.witnesses["sqrtJU"]["unit"]
    assert int(m.power(u, 3)) == m.one and u != m.one


@pytest.mark.parametrize("name", UP_TO_64)
def test_structural_predicates_match_definitions(name):
    r = CORPUS[name]
    add, mul = O.tables(r)
    n = r.order
    U = O.units_bijection(r)
    N = O.nilpotents(r)
    J = O.quasi_regular_radical(r, U)
    S = O.sqrt_radical(r, J)
    Id = O.idempotents(r)
    C = O.center(r)
    one_plus = lambda Z: {add[r.one][z] for z in Z}  # noqa: E731
    nonunits = [x for x in range(n) if x not in U]
    expected = {
        "boolean": all(mul[a][a] == a for a in range(n)),
        "sqrtJU": U <= one_plus(S),
        "JU": U <= one_plus(J),
        "UU": U <= one_plus(N),
        "local": all(add[a][b] not in U for a in nonunits for b in nonunits),
        "abelian": Id <= C,
        "dedekind_finite": all(mul[b][a] == r.one for a in range(n) for b in range(n) if mul[a][b] == r.one),
        "reduced": N == {r.zero},
        "semisimple_J0": J == {r.zero},
        "two_in_J": add[r.one][r.one] in J,
    }
    rep = classify_all(r)
    for key, val in expected.items():
        assert rep[key] == val, key
    assert rep["dedekind_finite"]


def check_lattice(rep):
    p = rep.properties
    imp = lambda a, b: (not p[a]) or p[b]  # noqa: E731
    assert imp("boolean", "j_clean")
    assert imp("j_clean", "sqrtj_clean")
    assert imp("sqrtj_clean", "clean")
    assert imp("nil_clean", "sqrtj_clean")
    assert imp("sqrtj_clean", "two_in_J")
    for kind in DecompKind:
        any_ = property_name(kind, DecompMode.ANY)
        assert imp(property_name(kind, DecompMode.STRONG), any_)
        assert imp(property_name(kind, DecompMode.UNIQUE), any_)
    assert imp("strongly_sqrtj_clean", "sqrtJU")
    assert imp("strongly_j_clean", "strongly_sqrtj_clean")
    assert imp("strongly_sqrtj_clean", "strongly_clean")
    assert imp("uniquely_sqrtj_clean", "abelian")
    assert p["uniquely_sqrtj_clean"] == (p["sqrtj_clean"] and p["abelian"]) == p["uniquely_clean"]


@pytest.mark.parametrize("name", UP_TO_1024)
def test_implication_lattice(name):
    check_lattice(classify_all(CORPUS[name]))


@pytest.mark.parametrize("name", UP_TO_1024)
def test_sqrt_radical_equals_radical_for_abelian_sqrtj_clean(name):
    r = CORPUS[name]
    rep = classify_all(r)
    if rep["abelian"] and rep["sqrtj_clean"]:
        assert jacobson_radical(r).members == sqrt_jacobson(r).members


@pytest.mark.parametrize("name", UP_TO_1024)
def test_unit_commuting_decomposition_iff_minus_one_in_sqrt_radical(name):
    r = CORPUS[name]
    S = sqrt_jacobson(r).mask
    for u in units(r).members[:200]:
        has = any(d.commutes for d in decompositions(r, u, DecompKind.SQRTJ))
        assert has == bool(S[int(r.sub(u, r.one))])


@pytest.mark.parametrize("name", UP_TO_1024)
def test_strongly_sqrtj_clean_consequences(name):
    r = CORPUS[name]
    rep = classify_all(r)
    if not rep["strongly_sqrtj_clean"]:
        return
    x = r.elements
    S = sqrt_jacobson(r).mask
    assert S[r.sub(r.mul(x, x), x)].all()
    only_trivial = set(idempotents(r).members) == {r.zero, r.one}
    assert rep["local"] == only_trivial
    q_order = r.order // len(jacobson_radical(r))
    assert rep["local"] == (q_order == 2)
    assert (rep["semisimple_J0"]) == rep["boolean"]


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 40), st.integers(2, 12))
def test_lattice_holds_on_random_products(a, b):
    check_lattice(classify_all(O.ring(f"Z({a})xZ({b})")))


@settings(max_examples=20, deadline=None)
@given(st.sampled_from(["Z(2)", "Z(4)", "Z(3)", "Z(8)", "GF(4)", "Z(9)"]), st.sampled_from(["Z(2)", "Z(4)", "GF(3)", "Z(2)xZ(2)"]))
def test_sqrtj_clean_of_product_is_conjunction(a, b):
    ra, rb = O.ring(a), O.ring(b)
    prod = O.ring(f"{a}x{b}")
    lhs = bool(has_clean_property(prod, DecompKind.SQRTJ))
    assert lhs == (bool(has_clean_property(ra, DecompKind.SQRTJ)) and bool(has_clean_property(rb, DecompKind.SQRTJ)))


def test_counts_cover_strong_flags():
    r = O.ring("T(2,Z(4))")
    counts, strong = decomposition_counts(r, DecompKind.SQRTJ)
    for a in range(r.order):
        ds = decompositions(r, a, DecompKind.SQRTJ)
        assert counts[a] == len(ds)
        assert strong[a] == any(d.commutes for d in ds)


def test_report_json_schema():
    rep = classify_all(O.ring("Z(9)"))
    data = json.loads(rep.to_json())
    assert set(data) == {"ring", "order", "properties", "witnesses"}
    assert data["ring"] == "Z(9)" and data["order"] == 9
    keys = list(data["properties"])
    assert keys == sorted(keys)
    assert set(keys) == set(CLEAN_PROPERTIES) | set(STRUCTURAL)
    assert all(isinstance(v, bool) for v in data["properties"].values())
    assert set(data["witnesses"]) == {k for k, v in data["properties"].items() if not v}
    assert rep.to_json() == classify_all(O.ring("Z(9)")).to_json()
    text = rep.to_text()
    assert text.splitlines()[0].startswith("ring Z(9)")
