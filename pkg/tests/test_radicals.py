import numpy as np
import pytest

import oracles as O
from ringlab import (
    idempotents,
    idempotents_lift_mod,
    ideal_closure,
    inverse,
    jacobson_data,
    jacobson_quotient,
    jacobson_radical,
    nilpotents,
    sqrt_jacobson,
    units,
)
from ringlab.classify import DecompKind, decompositions, has_clean_property
from ringlab.ideals import is_ideal
from ringlab.subsets import center

CORPUS = O.corpus()
UP_TO_256 = [n for n, r in CORPUS.items() if r.order <= 256]
ALL = list(CORPUS)


def test_jacobson_examples():
    j9 = jacobson_radical(O.ring("Z(9)"))
    assert j9.members == (0, 3, 6)
    assert 2 not in j9
    assert jacobson_radical(O.ring("GF(4)")).members == (0,)


def test_jacobson_of_m2_z4_is_even_matrices():
    r = O.ring("M(2,Z(4))")
    J = jacobson_radical(r)
    assert len(J) == 16
    assert set(J.members) == O.max_left_ideal_radical(r)
    for x in J.members:
        digits = [(x >> (2 * k)) & 3 for k in range(4)]
        assert all(d % 2 == 0 for d in digits)


def test_sqrt_jacobson_examples():
    d = jacobson_data(O.ring("Z(9)"))
    assert d.sqrt_jacobson.members == (0, 3, 6)
    assert d.witness_powers == {0: 1, 3: 1, 6: 1}
    m = O.ring("M(2,GF(2))")
    s = sqrt_jacobson(m)
    assert len(s) == 4
    assert s == nilpotents(m)
    assert all(int(m.mul(x, x)) == m.zero for x in s)
    assert sqrt_jacobson(O.ring("Z(2)")).members == (0,)


def test_witness_powers_are_least():
    r = O.ring("Z(16)")
    d = jacobson_data(r)
    J = set(d.jacobson.members)
    for x, k in d.witness_powers.items():
        pw = O.powers(r, x)
        assert pw[k - 1] in J
        assert all(p not in J for p in pw[: k - 1])


@pytest.mark.parametrize("name", UP_TO_256)
def test_jacobson_matches_quasi_regular_oracle(name):
    r = CORPUS[name]
    expected = O.quasi_regular_radical(r)
    assert set(jacobson_radical(r).members) == expected
    assert set(sqrt_jacobson(r).members) == O.sqrt_radical(r, expected)


@pytest.mark.parametrize("name", [n for n in UP_TO_256 if CORPUS[n].order <= 64])
def test_jacobson_matches_maximal_left_ideals(name):
    r = CORPUS[name]
    assert set(jacobson_radical(r).members) == O.max_left_ideal_radical(r)


@pytest.mark.parametrize("name", ALL)
def test_radical_invariants(name):
    r = CORPUS[name]
    d = jacobson_data(r)
    J, S = d.jacobson.mask, d.sqrt_jacobson.mask
    assert is_ideal(r, J)
    assert (S >= J).all() and (S >= nilpotents(r).mask).all()
    assert not (S & units(r).mask).any()
    assert set(np.flatnonzero(S & idempotents(r).mask)) == {r.zero}
    # quasi-regularity on both sides
    U = units(r).mask
    x = r.elements
    for j in np.flatnonzero(J)[:64]:
        assert U[r.sub(r.one, r.mul(x, j))].all()
        assert U[r.sub(r.one, r.mul(j, x))].all()
    # central multiples stay inside sqrt(J)
    xs = np.flatnonzero(S)
    for c in center(r).members:
        assert S[r.mul(xs, c)].all()


@pytest.mark.parametrize("name", [n for n in ALL if CORPUS[n].order <= 1024])
def test_sqrt_radical_is_preimage_of_quotient_sqrt_radical(name):
    r = CORPUS[name]
    q, qmap = jacobson_quotient(r)
    Sq = sqrt_jacobson(q).mask
    assert np.array_equal(Sq[qmap.projection], sqrt_jacobson(r).mask)


@pytest.mark.parametrize("name", ["Z(2)xZ(2)", "Z(2)xZ(9)", "Z(4)xZ(4)"])
def test_radical_of_product(name):
    r = CORPUS[name]
    left, right = (O.ring(t) for t in name.split("x", 1))
    expected = (jacobson_radical(left).mask[:, None] & jacobson_radical(right).mask[None, :]).ravel()
    assert np.array_equal(jacobson_radical(r).mask, expected)


@pytest.mark.parametrize("n,base", [(2, "Z(2)"), (2, "Z(4)"), (3, "Z(2)"), (2, "Z(9)")])
def test_radical_of_triangular_is_diagonal_in_radical(n, base):
    r = O.ring(f"T({n},{base})")
    b = O.ring(base)
    Jb = jacobson_radical(b).mask
    m = b.order
    free = n * (n + 1) // 2
    diag, pos = [], 0
    for i in range(n):
        diag.append(pos)
        pos += n - i
    expected = np.ones(r.order, dtype=bool)
    for x in range(r.order):
        digits = [(x // m ** (free - 1 - k)) % m for k in range(free)]
        expected[x] = all(Jb[digits[p]] for p in diag)
    assert np.array_equal(jacobson_radical(r).mask, expected)


def test_lifting_examples():
    z4 = O.ring("Z(4)")
    assert idempotents_lift_mod(z4, jacobson_radical(z4)).lifts
    m = O.ring("M(2,Z(4))")
    assert idempotents_lift_mod(m, jacobson_radical(m)).lifts
    z6 = O.ring("Z(6)")
    rep = idempotents_lift_mod(z6, ideal_closure(z6, [3]))
    assert rep.lifts
    assert len(rep.idempotent_cosets) == 2


@pytest.mark.parametrize("name", [n for n in ALL if CORPUS[n].order <= 16])
def test_idempotents_lift_modulo_every_ideal(name):
    # finite rings are exchange rings, so lifting never fails
    r = CORPUS[name]
    for ideal in O.two_sided_ideals(r):
        if len(ideal) == r.order:
            continue
        rep = idempotents_lift_mod(r, ideal_closure(r, sorted(ideal)))
        assert rep.lifts and rep.missing == ()


@pytest.mark.parametrize("name", [n for n in ALL if CORPUS[n].order <= 1024])
def test_conjugated_idempotent_lifts(name):
    # in a sqrt(J)-clean ring, if x - x^2 lies in J and x = f + z, then
    # e = u^-1 f u with u = 1 - z is an idempotent with x - e in J
    r = CORPUS[name]
    if not has_clean_property(r, DecompKind.SQRTJ):
        pytest.skip("not sqrtJ-clean")
    J = jacobson_radical(r).mask
    x = r.elements
    cand = np.flatnonzero(J[r.sub(x, r.mul(x, x))])
    for a in cand[:100]:
        d = decompositions(r, int(a), DecompKind.SQRTJ)[0]
        u = int(r.sub(r.one, d.z))
        e = int(r.mul(r.mul(inverse(r, u), d.e), u))
        assert int(r.mul(e, e)) == e
        assert J[int(r.sub(int(a), e))]
