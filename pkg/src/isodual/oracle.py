"""Brute-force cross-checks for the constructive modules.

Nothing here reuses the coset, orbit, splitting or dual-code machinery it
verifies: cosets and orbits are recomputed from scratch, duals come from a
null space computed by row reduction, and weight distributions from plain
enumeration of message vectors.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .errors import TooLarge
from .gf import Field, field_of_order

DEFAULT_MAX_N = 24
DEFAULT_ORACLE_ENUM_BOUND = 2**20
GRID_QS = (3, 5, 7, 9, 11, 13)


@dataclass
class OracleReport:
    claim: str
    instances_checked: int = 0
    failures: list[dict] = field(default_factory=list)
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> str:
        return json.dumps(
            {
                "claim": self.claim,
                "verdict": "pass" if self.passed else "fail",
                "instances_checked": self.instances_checked,
                "failures": self.failures,
                **self.details,
            },
            sort_keys=True,
        )


# -- linear algebra over GF(q) ------------------------------------------------------

def rref(M: Iterable[Iterable[int]], F: Field) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form and pivot columns, exact over ``F``."""
    rows = [list(r) for r in M]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = F.inv(rows[r][c])
        rows[r] = [F.mul(inv, x) for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rank(M, F: Field) -> int:
    return len(rref(M, F)[0])


def nullspace(M, F: Field, ncols: int) -> list[list[int]]:
    """Basis of ``{x : M x = 0}``."""
    R, pivots = rref(M, F)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fcol in free:
        x = [0] * ncols
        x[fcol] = 1
        for row, pc in zip(R, pivots):
            x[pc] = F.neg(row[fcol])
        basis.append(x)
    return basis


def same_row_space(A, B, F: Field) -> bool:
    A, B = [list(r) for r in A], [list(r) for r in B]
    ra, rb = rank(A, F), rank(B, F)
    return ra == rb and rank(A + B, F) == ra


def shift_matrix(gen: Iterable[int], n: int, k: int) -> list[list[int]]:
    """Rows ``X^i g(X)``, ``i < k``, as length-``n`` vectors."""
    g = list(gen)
    return [[0] * i + g + [0] * (n - i - len(g)) for i in range(k)]


def oracle_dual_basis(C, max_n: int = 256) -> OracleReport:
    """Dual computed as a null space versus ``C_{-complement(P)}``."""
    from .codes import code_from_support

    n, F = C.n, C.field
    if n > max_n:
        raise TooLarge(f"n = {n} exceeds {max_n}")
    G = shift_matrix(C.gen_poly.coeffs, n, C.dimension)
    N = nullspace(G, F, n) if G else [[int(i == j) for j in range(n)] for i in range(n)]
    support = sorted({-i % n for i in range(n) if i not in set(C.P)})
    D = code_from_support(C.q, n, support, C.root)
    expected = shift_matrix(D.gen_poly.coeffs, n, D.dimension)
    report = OracleReport("dual_basis", 1, details={"q": C.q, "n": n, "P": list(C.P)})
    if not expected:
        ok = not N
    else:
        ok = bool(N) and same_row_space(N, expected, F)
    if not ok:
        report.failures.append({"P": list(C.P), "dual_support": support, "nullspace_dim": len(N)})
    return report


# -- exhaustive splitting search --------------------------------------------------------

def _mul_orbits(q: int, n: int) -> list[list[int]]:
    out, seen = [], set()
    for i in range(n):
        if i in seen:
            continue
        orb, j = [], i
        while j not in orb:
            orb.append(j)
            j = j * q % n
        seen.update(orb)
        out.append(orb)
    return out


def _subset_masks(masks: list[int]) -> np.ndarray:
    out = np.zeros(1, dtype=np.uint64)
    for m in masks:
        out = np.concatenate([out, out | np.uint64(m)])
    return out


def oracle_splitting_search(q: int, n: int, max_n: int = DEFAULT_MAX_N) -> OracleReport:
    """Try every q-invariant ``P`` against every ``rho_{s,t}``, compare with the valuation test."""
    from .splitting import exists_splitting

    if n > max_n or n > 63:
        raise TooLarge(f"n = {n} exceeds {min(max_n, 63)}")
    orbits = _mul_orbits(q, n)
    if len(orbits) > 22:
        raise TooLarge(f"{len(orbits)} cosets: 2^{len(orbits)} subsets is too many")
    full = np.uint64((1 << n) - 1)
    P_masks = _subset_masks([sum(1 << i for i in o) for o in orbits])
    units = [s for s in range(1, n + 1) if math.gcd(s, n) == 1]
    translations = [t for t in range(n) if (q * t - t) % n == 0]
    witnesses = []
    checked = 0
    for t in translations:
        for s in units:
            img = _subset_masks([sum(1 << (s * (i + t) % n) for i in o) for o in orbits])
            hit = ((P_masks & img) == 0) & ((P_masks | img) == full)
            checked += len(P_masks)
            if hit.any():
                witnesses.append([s % n, t])
    found = bool(witnesses)
    ex = exists_splitting(q, n)
    report = OracleReport(
        "splitting_existence",
        checked,
        details={"q": q, "n": n, "found": found, "predicted": ex.exists, "witness_count": len(witnesses)},
    )
    if found != ex.exists:
        report.failures.append({"q": q, "n": n, "found": found, "predicted": ex.exists})
    if ex.exists:
        report.details["translation"] = [1, ex.t]
        if [1, ex.t % n] not in witnesses:
            report.failures.append({"q": q, "n": n, "missing_translation": ex.t})
    return report


def oracle_orbit_parity(q: int, n: int, rho) -> OracleReport:
    """Orbit lengths of ``rho`` on the cosets versus :func:`splitting_given_by`."""
    from .splitting import splitting_given_by

    orbits = _mul_orbits(q, n)
    which = {i: c for c, o in enumerate(orbits) for i in o}
    seen, lengths = set(), []
    for c in range(len(orbits)):
        if c in seen:
            continue
        length, d = 0, c
        while d not in seen:
            seen.add(d)
            length += 1
            d = which[rho.s * (orbits[d][0] + rho.t) % n]
        lengths.append(length)
    all_even = all(x % 2 == 0 for x in lengths)
    predicted = splitting_given_by(q, n, rho)
    report = OracleReport(
        "orbit_parity",
        1,
        details={"q": q, "n": n, "s": rho.s, "t": rho.t, "orbit_lengths": lengths, "all_even": all_even},
    )
    if all_even != predicted:
        report.failures.append({"q": q, "n": n, "s": rho.s, "t": rho.t, "all_even": all_even, "predicted": predicted})
    return report


# -- weight distributions ----------------------------------------------------------------

def brute_weight_distribution(G: list[list[int]], F: Field, n: int, bound: int = DEFAULT_ORACLE_ENUM_BOUND) -> list[int]:
    """Weight distribution of the row space of ``G`` (rows assumed independent)."""
    k = len(G)
    q = F.order
    if q**k > bound:
        raise TooLarge(f"{q}^{k} words exceeds {bound}")
    dist = [0] * (n + 1)
    if k == 0:
        dist[0] = 1
        return dist
    Gm = np.asarray(G, dtype=np.int64)
    msgs = np.array(list(itertools.product(range(q), repeat=k)), dtype=np.int64)
    if F.k == 1:
        words = (msgs @ Gm) % F.p
    else:
        mul, add = F.mul_table, F.add_table
        words = np.zeros((len(msgs), n), dtype=np.int64)
        for r in range(k):
            words = add[words, mul[msgs[:, r][:, None], Gm[r][None, :]]]
    for w in np.count_nonzero(words, axis=1):
        dist[int(w)] += 1
    return dist


def oracle_weight_equality(C, bound: int = DEFAULT_ORACLE_ENUM_BOUND) -> OracleReport:
    """Compare the weight distributions of ``C`` and its null-space dual."""
    n, F = C.n, C.field
    G = shift_matrix(C.gen_poly.coeffs, n, C.dimension)
    D = nullspace(G, F, n) if G else [[int(i == j) for j in range(n)] for i in range(n)]
    a = brute_weight_distribution(G, F, n, bound)
    b = brute_weight_distribution(D, F, n, bound)
    report = OracleReport("weight_equality", 1, details={"q": C.q, "n": n, "P": list(C.P), "distribution": a})
    if a != b:
        report.failures.append({"P": list(C.P), "code": a, "dual": b})
    return report


def oracle_grid(qs: Iterable[int] = GRID_QS, max_n: int = DEFAULT_MAX_N) -> list[OracleReport]:
    """Splitting search over every coprime ``(q, n)`` with ``1 <= n <= max_n``."""
    reports = []
    for q in qs:
        field_of_order(q)  # validates q
        for n in range(1, max_n + 1):
            if math.gcd(q, n) == 1:
                reports.append(oracle_splitting_search(q, n, max_n))
    return reports
