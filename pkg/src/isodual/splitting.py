"""Existence and construction of Type-I duadic splittings ``Z_n = P + rho(P)``
given by q-permutations.
"""

from __future__ import annotations

import itertools
import logging
import math
from dataclasses import dataclass
from typing import Iterator

from .errors import NoSplitting, NotCoprime
from .gf import prime_power
from .zn import (
    CosetPartition,
    QPermutation,
    coset_orbits,
    cyclotomic_cosets,
    is_invariant,
    nu2,
    qperm_make,
)

log = logging.getLogger(__name__)

DEFAULT_SPLITTING_CAP = 2**16


@dataclass(frozen=True)
class Existence:
    q: int
    n: int
    exists: bool
    nu2_n: int
    nu2_q1: int | float
    u: int | None = None
    t: int | None = None
    reason: str = ""


def _u_interval(q: int, n: int) -> tuple[int, int]:
    """Half-open interval of admissible exponents ``u``."""
    v, w = nu2(n), nu2(q - 1)
    return max(0, v - w), min(v, w)


def choose_u(q: int, n: int) -> int:
    """Smallest ``u`` with ``max(0, v2(n) - v2(q-1)) <= u < min(v2(n), v2(q-1))``."""
    lo, hi = _u_interval(q, n)
    if lo >= hi:
        raise NoSplitting(f"no Type-I duadic splitting of Z_{n} over GF({q})")
    return lo


def translation_for(q: int, n: int, u: int) -> int:
    """``t = 2^u n'`` with ``n'`` the odd part of ``n``; checks ``u`` is admissible."""
    lo, hi = _u_interval(q, n)
    if not lo <= u < hi:
        raise ValueError(f"u={u} outside the admissible range [{lo}, {hi}) for q={q}, n={n}")
    odd = n >> nu2(n)
    return (2**u) * odd


def exists_splitting(q: int, n: int, u: int | None = None) -> Existence:
    """Decide existence by ``0 < v2(n) < 2 v2(q - 1)``; on success pick ``u`` and ``t``."""
    prime_power(q)
    if math.gcd(q, n) != 1:
        raise NotCoprime(f"gcd({q}, {n}) != 1")
    v, w = nu2(n), nu2(q - 1)
    if not 0 < v < 2 * w:
        if v == 0:
            reason = f"v2(n)=0: n={n} is odd"
        else:
            reason = f"v2(n)={v} >= {2 * w} = 2*v2(q-1)"
        return Existence(q, n, False, v, w, reason=reason)
    if u is None:
        u = choose_u(q, n)
    t = translation_for(q, n, u)
    return Existence(q, n, True, v, w, u=u, t=t, reason=f"0 < v2(n)={v} < {2 * w} = 2*v2(q-1)")


def splitting_given_by(q: int, n: int, rho: QPermutation) -> bool:
    """Whether some ``P`` gives a Type-I splitting ``Z_n = P + rho(P)``.

    Works on the 2-part of ``n``: with ``v = v2(n)`` and ``t`` reduced mod
    ``2^v``, a splitting exists iff ``t != 0`` there and ``v2(q^j - s) > v2(t)``
    for all ``j``.  The latter depends on ``q^j mod 2^(v2(t)+1)`` only, so one
    period of ``q`` modulo that power of two is enough.
    """
    rho = qperm_make(rho.s, rho.t, n, q)
    v = nu2(n)
    if v == 0:
        return False
    t2 = rho.t % (1 << v)
    if t2 == 0:
        return False
    mod = 1 << (nu2(t2) + 1)
    s = rho.s % mod
    x = 1
    while True:
        if x != s:
            return False
        x = x * q % mod
        if x == 1:
            return True


def orbits_all_even(q: int, n: int, rho: QPermutation) -> bool:
    """The orbit-parity form of the same question."""
    cp = cyclotomic_cosets(q, n)
    return all(len(o) % 2 == 0 for o in coset_orbits(rho, cp))


@dataclass(frozen=True)
class Splitting:
    q: int
    n: int
    rho: QPermutation
    P: tuple[int, ...]
    orbit_choices: tuple[tuple[int, ...], ...]

    @property
    def image(self) -> tuple[int, ...]:
        return tuple(sorted(self.rho.image(self.P)))

    def is_valid(self) -> bool:
        P = set(self.P)
        img = set(self.image)
        return (
            is_invariant(P, self.q, self.n)
            and not P & img
            and P | img == set(range(self.n))
            and 2 * len(P) == self.n
        )


def _orbits_or_raise(q: int, n: int, rho: QPermutation) -> tuple[CosetPartition, list[list[int]]]:
    cp = cyclotomic_cosets(q, n)
    orbits = coset_orbits(rho, cp)
    if not splitting_given_by(q, n, rho) or any(len(o) % 2 for o in orbits):
        raise NoSplitting(f"{rho!r} gives no Type-I duadic splitting")
    return cp, orbits


def _resolve_rho(q: int, n: int, rho: QPermutation | None, u: int | None) -> QPermutation:
    if rho is not None:
        return qperm_make(rho.s, rho.t, n, q)
    ex = exists_splitting(q, n, u)
    if not ex.exists:
        raise NoSplitting(ex.reason)
    return qperm_make(1, ex.t, n, q)


def build_splitting(q: int, n: int, rho: QPermutation | None = None, u: int | None = None) -> Splitting:
    """Take every other coset along each ``rho``-orbit, starting at the orbit's first coset.

    Without ``rho`` the translation ``tau_{2^u n'}`` from :func:`exists_splitting` is used.
    """
    rho = _resolve_rho(q, n, rho, u)
    cp, orbits = _orbits_or_raise(q, n, rho)
    choices = tuple(tuple(o[0::2]) for o in orbits)
    sp = Splitting(q, n, rho, cp.union(c for ch in choices for c in ch), choices)
    assert sp.is_valid(), sp
    return sp


def enumerate_splittings(
    q: int,
    n: int,
    rho: QPermutation | None = None,
    cap: int = DEFAULT_SPLITTING_CAP,
) -> Iterator[Splitting]:
    """All ``P`` with ``Z_n = P + rho(P)``, deterministic order, at most ``cap`` of them.

    On an orbit of even length where ``rho`` acts as one cycle, ``S + rho(S)``
    covers the orbit exactly when ``S`` is one of the two alternating halves,
    so each orbit contributes a factor of 2.  The first splitting yielded is
    the one :func:`build_splitting` returns.
    """
    try:
        rho = _resolve_rho(q, n, rho, None)
        cp, orbits = _orbits_or_raise(q, n, rho)
    except NoSplitting:
        return
    per_orbit = [(tuple(o[0::2]), tuple(o[1::2])) for o in orbits]
    total = 2 ** len(per_orbit)
    if total > cap:
        log.warning("%d splittings for %r; yielding the first %d", total, rho, cap)
    for choices in itertools.islice(itertools.product(*per_orbit), cap):
        yield Splitting(q, n, rho, cp.union(c for ch in choices for c in ch), tuple(choices))
