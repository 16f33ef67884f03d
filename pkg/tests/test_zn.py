import math

import pytest
from hypothesis import given, settings, strategies as st

from isodual.errors import Mismatch, NotCoprime, NotQTranslation, NotUnit
from isodual.zn import (
    all_qperms,
    coset_fixed_by,
    coset_fixed_direct,
    coset_fixed_congruence,
    coset_orbits,
    cyclotomic_cosets,
    is_invariant,
    nu2,
    q_translations,
    qperm_apply,
    qperm_compose,
    qperm_inverse,
    qperm_make,
    units,
)

QS = (3, 5, 7, 9, 11, 13)
GRID = [(q, n) for q in QS for n in range(1, 25) if math.gcd(q, n) == 1]


def test_nu2():
    assert nu2(8) == 3
    assert nu2(0) == math.inf
    assert nu2(5 - 1) == 2
    assert nu2(-12) == 2 and nu2(7) == 0


def test_qperm_validation():
    rho = qperm_make(1, 2, 8, 5)
    assert (rho.s, rho.t) == (1, 2)
    with pytest.raises(NotQTranslation):
        qperm_make(1, 1, 8, 3)
    with pytest.raises(NotUnit):
        qperm_make(2, 0, 8, 3)
    assert qperm_make(-1, 10, 8, 5) == qperm_make(7, 2, 8, 5)


def test_qperm_apply():
    assert all(qperm_apply(qperm_make(1, 0, 8, 5), i) == i for i in range(8))
    assert qperm_apply(qperm_make(1, 2, 8, 5), 0) == 2
    assert qperm_apply(qperm_make(1, 5, 10, 3), 7) == 2


def test_compose_and_inverse_examples():
    r = qperm_make(1, 2, 8, 5)
    assert qperm_compose(r, r) == qperm_make(1, 4, 8, 5)
    m = qperm_make(-1, 2, 8, 5)
    inv = qperm_inverse(m)
    assert (inv.s, inv.t) == (7, 2)
    assert all(inv(m(i)) == i for i in range(8))
    assert qperm_compose(m, inv) == qperm_make(1, 0, 8, 5)
    with pytest.raises(Mismatch):
        qperm_compose(r, qperm_make(1, 0, 8, 3))


@pytest.mark.parametrize("q,n", [(q, n) for q, n in GRID if n <= 16])
def test_compose_pointwise(q, n):
    perms = list(all_qperms(q, n))
    for a in perms:
        inv = qperm_inverse(a)
        assert all(inv(a(i)) == i for i in range(n))
        for b in perms:
            ab = qperm_compose(a, b)
            assert all(ab(i) == a(b(i)) for i in range(n))


def _cosets_as_sets(cp):
    return {frozenset(c) for c in cp.cosets}


def test_coset_examples():
    assert _cosets_as_sets(cyclotomic_cosets(3, 8)) == {frozenset(s) for s in [{0}, {4}, {1, 3}, {2, 6}, {5, 7}]}
    assert _cosets_as_sets(cyclotomic_cosets(5, 8)) == {
        frozenset(s) for s in [{0}, {4}, {2}, {6}, {1, 5}, {3, 7}]
    }
    cp = cyclotomic_cosets(3, 10)
    assert cp.cosets == ((0,), (1, 3, 7, 9), (2, 4, 6, 8), (5,))
    assert cp.coset_of(13) == 1
    with pytest.raises(NotCoprime):
        cyclotomic_cosets(3, 9)


def _orbit_sets(rho, cp):
    return [[set(cp.cosets[c]) for c in o] for o in coset_orbits(rho, cp)]


def test_orbit_examples():
    cp = cyclotomic_cosets(5, 8)
    assert all(len(o) == 1 for o in coset_orbits(qperm_make(1, 0, 8, 5), cp))
    assert _orbit_sets(qperm_make(1, 2, 8, 5), cp) == [[{0}, {2}, {4}, {6}], [{1, 5}, {3, 7}]]
    cp = cyclotomic_cosets(3, 10)
    assert _orbit_sets(qperm_make(1, 5, 10, 3), cp) == [[{0}, {5}], [{1, 3, 7, 9}, {2, 4, 6, 8}]]


def test_fixed_coset_examples():
    cp = cyclotomic_cosets(3, 8)
    assert all(coset_fixed_by(qperm_make(1, 0, 8, 3), c, cp) for c in range(len(cp)))
    assert not coset_fixed_by(qperm_make(1, 4, 8, 3), cp.coset_of(0), cp)
    cp = cyclotomic_cosets(5, 8)
    assert not coset_fixed_by(qperm_make(1, 2, 8, 5), cp.coset_of(1), cp)


@pytest.mark.parametrize("q,n", GRID)
def test_coset_partition_properties(q, n):
    cp = cyclotomic_cosets(q, n)
    seen = sorted(i for c in cp.cosets for i in c)
    assert seen == list(range(n))
    assert [c[0] for c in cp.cosets] == sorted(c[0] for c in cp.cosets)
    for c in cp.cosets:
        assert list(c) == sorted(c) and is_invariant(c, q, n)
        assert {c[0] * pow(q, j, n) % n for j in range(n)} == set(c)


@pytest.mark.parametrize("q,n", GRID)
def test_permutations_map_cosets_to_cosets(q, n):
    cp = cyclotomic_cosets(q, n)
    cosets = _cosets_as_sets(cp)
    for rho in all_qperms(q, n):
        for cid, c in enumerate(cp.cosets):
            img = rho.image(c)
            assert img in cosets
            assert coset_fixed_direct(rho, cid, cp) == coset_fixed_congruence(rho, cid, cp)
        orbits = coset_orbits(rho, cp)
        assert sum(len(o) for o in orbits) == len(cp)
        assert [o[0] for o in orbits] == sorted(o[0] for o in orbits)
        for o in orbits:
            assert o[0] == min(o)
            for a, b in zip(o, o[1:] + o[:1]):
                assert cp.image_id(rho, a) == b


def test_group_listing():
    assert units(8) == [1, 3, 5, 7] and units(1) == [1]
    assert q_translations(5, 8) == [0, 2, 4, 6]
    perms = list(all_qperms(5, 8))
    assert len(perms) == 16
    assert [(r.t, r.s) for r in perms] == sorted((r.t, r.s) for r in perms)


@settings(max_examples=300, deadline=None)
@given(st.sampled_from(QS), st.integers(1, 60), st.data())
def test_compose_is_associative(q, n, data):
    if math.gcd(q, n) != 1:
        return
    perms = list(all_qperms(q, n))
    a, b, c = (data.draw(st.sampled_from(perms)) for _ in range(3))
    assert qperm_compose(qperm_compose(a, b), c) == qperm_compose(a, qperm_compose(b, c))
