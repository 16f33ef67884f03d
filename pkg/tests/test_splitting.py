import itertools
import math

import pytest

from isodual.errors import NoSplitting, NotCoprime
from isodual.splitting import (
    build_splitting,
    choose_u,
    enumerate_splittings,
    exists_splitting,
    orbits_all_even,
    splitting_given_by,
    translation_for,
)
from isodual.zn import all_qperms, coset_orbits, cyclotomic_cosets, nu2, qperm_make

QS = (3, 5, 7, 9, 11, 13)
GRID = [(q, n) for q in QS for n in range(1, 25) if math.gcd(q, n) == 1]


def brute_splittings(q, n, s, t):
    """Every q-invariant P with Z_n = P + rho_{s,t}(P), by subset enumeration of Z_n."""
    closed = []
    for mask in range(1 << n):
        P = {i for i in range(n) if mask >> i & 1}
        if all(i * q % n in P for i in P):
            closed.append(P)
    out = []
    for P in closed:
        img = {s * (i + t) % n for i in P}
        if not P & img and P | img == set(range(n)):
            out.append(tuple(sorted(P)))
    return sorted(out)


def test_existence_examples():
    ex = exists_splitting(3, 8)
    assert not ex.exists and ex.nu2_n == 3 and 2 * ex.nu2_q1 == 2
    ex = exists_splitting(5, 8)
    assert ex.exists and (ex.u, ex.t) == (1, 2)
    ex = exists_splitting(3, 10)
    assert ex.exists and (ex.u, ex.t) == (0, 5)
    assert not exists_splitting(3, 5).exists
    with pytest.raises(NotCoprime):
        exists_splitting(3, 6)
    with pytest.raises(ValueError):
        exists_splitting(6, 5)


def test_choose_u():
    assert choose_u(5, 8) == 1
    assert choose_u(3, 10) == 0
    assert choose_u(13, 4) == 0
    with pytest.raises(NoSplitting):
        choose_u(3, 8)
    assert translation_for(13, 4, 1) == 2
    with pytest.raises(ValueError):
        translation_for(5, 8, 0)


def test_u_override():
    ex = exists_splitting(13, 4, u=1)
    assert (ex.u, ex.t) == (1, 2)
    assert splitting_given_by(13, 4, qperm_make(1, 2, 4, 13))


def test_given_by_examples():
    for s in (1, 3, 5, 7):
        assert not splitting_given_by(5, 8, qperm_make(s, 0, 8, 5))
    assert splitting_given_by(5, 8, qperm_make(1, 2, 8, 5))
    assert splitting_given_by(3, 10, qperm_make(1, 5, 10, 3))
    assert not splitting_given_by(3, 8, qperm_make(1, 4, 8, 3))


@pytest.mark.parametrize("q,n", GRID)
def test_valuation_test_matches_orbit_parity(q, n):
    for rho in all_qperms(q, n):
        assert splitting_given_by(q, n, rho) == orbits_all_even(q, n, rho), rho


@pytest.mark.parametrize("q,n", GRID)
def test_existence_gives_translation_splittings(q, n):
    ex = exists_splitting(q, n)
    if not ex.exists:
        return
    v, w = nu2(n), nu2(q - 1)
    for u in range(max(0, v - w), min(v, w)):
        t = translation_for(q, n, u)
        assert splitting_given_by(q, n, qperm_make(1, t, n, q))


@pytest.mark.parametrize("q,n", GRID)
def test_translation_part_is_enough(q, n):
    for rho in all_qperms(q, n):
        if splitting_given_by(q, n, rho):
            assert splitting_given_by(q, n, qperm_make(1, rho.t, n, q))


@pytest.mark.parametrize(
    "q,n,t,P",
    [(5, 8, 2, (0, 1, 4, 5)), (3, 10, 5, (0, 1, 3, 7, 9)), (5, 6, 3, (0, 1, 5))],
)
def test_build_examples(q, n, t, P):
    sp = build_splitting(q, n)
    assert sp.rho == qperm_make(1, t, n, q)
    assert sp.P == P and sp.is_valid()
    assert sp.image == tuple(i for i in range(n) if i not in P)


def test_build_rejects():
    with pytest.raises(NoSplitting):
        build_splitting(3, 8)
    with pytest.raises(NoSplitting):
        build_splitting(5, 8, rho=qperm_make(1, 0, 8, 5))


@pytest.mark.parametrize("q,n", [(q, n) for q, n in GRID if n <= 16])
def test_built_splittings_are_valid(q, n):
    for rho in all_qperms(q, n):
        if splitting_given_by(q, n, rho):
            sp = build_splitting(q, n, rho)
            assert sp.is_valid() and 2 * len(sp.P) == n


def test_enumerate_counts():
    sps = list(enumerate_splittings(3, 10))
    assert len(sps) == 4
    assert sps[0].P == build_splitting(3, 10).P
    assert sorted(sp.P for sp in sps) == brute_splittings(3, 10, 1, 5)
    sps = list(enumerate_splittings(5, 8))
    assert sorted(sp.P for sp in sps) == brute_splittings(5, 8, 1, 2)
    assert len(sps) == 4
    assert list(enumerate_splittings(3, 8)) == []
    assert len(list(enumerate_splittings(3, 10, cap=3))) == 3


@pytest.mark.parametrize("q,n", [(q, n) for q, n in GRID if n <= 14])
def test_enumeration_matches_brute_force(q, n):
    for rho in all_qperms(q, n):
        got = sorted(sp.P for sp in enumerate_splittings(q, n, rho))
        if splitting_given_by(q, n, rho):
            assert all(sp.is_valid() for sp in enumerate_splittings(q, n, rho))
        assert got == brute_splittings(q, n, rho.s, rho.t), rho


@pytest.mark.parametrize("q", [3, 5, 7, 9, 11, 13])
def test_half_translation_orbits_have_length_two(q):
    for n in range(2, 51, 4):  # n = 2 n' with n' odd
        if math.gcd(q, n) != 1:
            continue
        rho = qperm_make(1, n // 2, n, q)
        assert {len(o) for o in coset_orbits(rho, cyclotomic_cosets(q, n))} == {2}


def test_orbit_choices_record_provenance():
    sp = build_splitting(5, 8)
    cp = cyclotomic_cosets(5, 8)
    assert sorted(itertools.chain.from_iterable(cp.cosets[c] for ch in sp.orbit_choices for c in ch)) == list(sp.P)
