"""Arithmetic of Z_n: 2-adic valuations, q-cyclotomic cosets, q-permutations
``i -> s(i + t)`` and their orbits on the set of cosets.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import Mismatch, NotCoprime, NotQTranslation, NotUnit


def nu2(m: int) -> int | float:
    """2-adic valuation; ``nu2(0)`` is ``math.inf``."""
    if m == 0:
        return math.inf
    m = abs(m)
    return (m & -m).bit_length() - 1


def units(n: int) -> list[int]:
    if n == 1:
        return [1]
    return [s for s in range(1, n) if math.gcd(s, n) == 1]


def q_translations(q: int, n: int) -> list[int]:
    """All ``t`` in ``[0, n)`` with ``q t == t (mod n)``."""
    return [t for t in range(n) if (q - 1) * t % n == 0]


@dataclass(frozen=True)
class QPermutation:
    s: int
    t: int
    n: int
    q: int

    def __call__(self, i: int) -> int:
        return self.s * (i + self.t) % self.n

    def image(self, S: Iterable[int]) -> frozenset[int]:
        return frozenset(self(i) for i in S)

    def __repr__(self) -> str:
        return f"rho[s={self.s}, t={self.t}; n={self.n}, q={self.q}]"


def qperm_make(s: int, t: int, n: int, q: int) -> QPermutation:
    """Validated ``rho_{s,t}``; residues are normalised into ``[0, n)``."""
    s, t = s % n, t % n
    if math.gcd(s, n) != 1:
        raise NotUnit(f"{s} is not a unit mod {n}")
    if (q * t - t) % n:
        raise NotQTranslation(f"{q}*{t} != {t} (mod {n})")
    if n == 1:
        s = 1
    return QPermutation(s, t, n, q)


def qperm_apply(rho: QPermutation, i: int) -> int:
    return rho(i)


def _same_group(a: QPermutation, b: QPermutation) -> None:
    if (a.n, a.q) != (b.n, b.q):
        raise Mismatch(f"permutations of different groups: {a!r}, {b!r}")


def qperm_compose(outer: QPermutation, inner: QPermutation) -> QPermutation:
    """``outer o inner`` via ``rho_{s',t'} rho_{s,t} = rho_{s's, t + s^-1 t'}``."""
    _same_group(outer, inner)
    n = inner.n
    s_inv = pow(inner.s, -1, n) if n > 1 else 0
    return qperm_make(outer.s * inner.s, inner.t + s_inv * outer.t, n, inner.q)


def qperm_inverse(rho: QPermutation) -> QPermutation:
    """``rho_{s,t}^-1 = rho_{s^-1, -s t}``."""
    n = rho.n
    s_inv = pow(rho.s, -1, n) if n > 1 else 1
    return qperm_make(s_inv, -rho.s * rho.t, n, rho.q)


def all_qperms(q: int, n: int) -> Iterator[QPermutation]:
    """Every element of G_{q,n}, ascending ``t`` then ascending ``s``."""
    for t in q_translations(q, n):
        for s in units(n):
            yield QPermutation(s, t, n, q)


@dataclass(frozen=True)
class CosetPartition:
    n: int
    q: int
    cosets: tuple[tuple[int, ...], ...]
    index: tuple[int, ...]  # residue -> coset id

    def coset_of(self, i: int) -> int:
        return self.index[i % self.n]

    def image_id(self, rho: QPermutation, cid: int) -> int:
        """Id of ``rho(Q)``; well defined because ``rho`` commutes with ``mu_q``."""
        return self.index[rho(self.cosets[cid][0])]

    def union(self, ids: Iterable[int]) -> tuple[int, ...]:
        return tuple(sorted(i for c in ids for i in self.cosets[c]))

    def __len__(self) -> int:
        return len(self.cosets)


def cyclotomic_cosets(q: int, n: int) -> CosetPartition:
    """The q-cyclotomic cosets of Z_n, each sorted, listed by smallest element."""
    if math.gcd(q, n) != 1:
        raise NotCoprime(f"gcd({q}, {n}) != 1")
    index = [-1] * n
    cosets = []
    for i in range(n):
        if index[i] >= 0:
            continue
        orbit = []
        j = i
        while index[j] < 0:
            index[j] = len(cosets)
            orbit.append(j)
            j = j * q % n
        cosets.append(tuple(sorted(orbit)))
    return CosetPartition(n, q, tuple(cosets), tuple(index))


def is_invariant(P: Iterable[int], q: int, n: int) -> bool:
    S = {i % n for i in P}
    return all(i * q % n in S for i in S)


def coset_orbits(rho: QPermutation, cp: CosetPartition) -> list[list[int]]:
    """Orbits of ``rho`` on the cosets, as coset-id lists in application order."""
    if (rho.n, rho.q) != (cp.n, cp.q):
        raise Mismatch("permutation and coset partition disagree on (n, q)")
    seen = [False] * len(cp)
    orbits = []
    for start in range(len(cp)):
        if seen[start]:
            continue
        orbit = []
        c = start
        while not seen[c]:
            seen[c] = True
            orbit.append(c)
            c = cp.image_id(rho, c)
        orbits.append(orbit)
    return orbits


def coset_fixed_direct(rho: QPermutation, cid: int, cp: CosetPartition) -> bool:
    Q = cp.cosets[cid]
    return rho.image(Q) == frozenset(Q)


def coset_fixed_congruence(rho: QPermutation, cid: int, cp: CosetPartition) -> bool:
    """Fixed iff ``(q^j - s) k == s t (mod n)`` for some ``k`` in Q and ``0 <= j < |Q|``."""
    Q = cp.cosets[cid]
    n, q, s, t = rho.n, rho.q, rho.s, rho.t
    rhs = s * t % n
    for j in range(len(Q)):
        c = pow(q, j, n) - s
        if any(c * k % n == rhs for k in Q):
            return True
    return False


def coset_fixed_by(rho: QPermutation, cid: int, cp: CosetPartition) -> bool:
    direct = coset_fixed_direct(rho, cid, cp)
    if direct != coset_fixed_congruence(rho, cid, cp):  # pragma: no cover - would be a bug
        raise AssertionError(f"fixed-coset criteria disagree for {rho!r}, coset {cp.cosets[cid]}")
    return direct
