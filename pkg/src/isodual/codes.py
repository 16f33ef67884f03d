"""Cyclic codes ``C_P`` keyed by their q-invariant support ``P``.

``f_P`` is the check polynomial and ``f_{complement(P)}`` the generator
polynomial; ``dim C_P = |P|``.  The support is the source of truth, the
polynomials are derived from it with a fixed root of unity.
"""

from __future__ import annotations

import itertools
import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import (
    BadResidue,
    DegreeTooHigh,
    DimensionMismatch,
    LengthMismatch,
    Mismatch,
    NotInvariant,
    NotIsoSelfDual,
    TooLarge,
)
from .gf import RootOfUnity, field_of_order, prime_power, root_of_unity
from .polyring import Polynomial, defining_polynomial, x_n_minus_1
from .zn import all_qperms, is_invariant, qperm_make

log = logging.getLogger(__name__)

DEFAULT_ENUM_BOUND = 2**26
PROGRESS_THRESHOLD = 2**20


@dataclass(frozen=True, eq=False)
class CyclicCode:
    q: int
    n: int
    P: tuple[int, ...]
    check_poly: Polynomial
    gen_poly: Polynomial
    root: RootOfUnity

    @property
    def dimension(self) -> int:
        return len(self.P)

    @property
    def field(self):
        return self.root.base

    @property
    def complement(self) -> tuple[int, ...]:
        S = set(self.P)
        return tuple(i for i in range(self.n) if i not in S)

    def generator_matrix(self) -> np.ndarray:
        """Rows ``X^i g(X)`` for ``0 <= i < k``."""
        k, n = self.dimension, self.n
        G = np.zeros((k, n), dtype=np.int64)
        g = self.gen_poly.coeffs
        for i in range(k):
            G[i, i : i + len(g)] = g
        return G

    def contains(self, word: Sequence[int]) -> bool:
        if len(word) != self.n:
            raise LengthMismatch(f"word of length {len(word)}, code length {self.n}")
        return (Polynomial(self.field, word) % self.gen_poly).is_zero()

    def __repr__(self) -> str:
        return f"CyclicCode(q={self.q}, n={self.n}, P={list(self.P)})"


def code_from_support(q: int, n: int, P: Sequence[int], root: RootOfUnity) -> CyclicCode:
    if (root.q, root.n) != (q, n):
        raise Mismatch(f"root of unity is for (q={root.q}, n={root.n}), not ({q}, {n})")
    S = sorted({i % n for i in P})
    if not is_invariant(S, q, n):
        raise NotInvariant(f"{S} is not closed under multiplication by {q} mod {n}")
    comp = [i for i in range(n) if i not in set(S)]
    check = defining_polynomial(S, root)
    gen = defining_polynomial(comp, root)
    assert check * gen == x_n_minus_1(root.base, n)
    return CyclicCode(q, n, tuple(S), check, gen, root)


def dual_code(C: CyclicCode) -> CyclicCode:
    """The Euclidean dual, which is ``C_{-complement(P)}``."""
    return code_from_support(C.q, C.n, [-i % C.n for i in C.complement], C.root)


def isometry_image(C: CyclicCode, s: int, t: int) -> CyclicCode:
    """``phi_{s,t}(C_P) = C_{rho_{s,t}(P)}``."""
    rho = qperm_make(s, t, C.n, C.q)
    return code_from_support(C.q, C.n, sorted(rho.image(C.P)), C.root)


def isometry_apply_word(w: Sequence[int], s: int, t: int, root: RootOfUnity) -> list[int]:
    """Apply ``a(X) -> a(theta^-t X^(s^-1)) mod (X^n - 1)`` to a word.

    Coordinate ``i`` moves to ``i * s^-1 mod n`` and is scaled by ``theta^(-t i)``.
    """
    n = root.n
    if len(w) != n:
        raise LengthMismatch(f"word of length {len(w)}, expected {n}")
    qperm_make(s, t, n, root.q)
    F = root.base
    s_inv = pow(s % n, -1, n) if n > 1 else 1
    scale = root.to_base(root.power(-t))
    out = [0] * n
    factor = 1
    for i, c in enumerate(w):
        out[i * s_inv % n] = F.mul(c, factor)
        factor = F.mul(factor, scale)
    return out


@dataclass(frozen=True, eq=False)
class IsoSelfDualCertificate:
    """``rho_{s,t}(P)`` is the complement of ``P``, hence ``phi_{-s,t}(C_P)`` is the dual."""

    code: CyclicCode
    s: int
    t: int
    dual_check_poly: Polynomial

    def problems(self) -> list[str]:
        C = self.code
        n = C.n
        out = []
        try:
            rho = qperm_make(self.s, self.t, n, C.q)
            rho_neg = qperm_make(-self.s, self.t, n, C.q)
        except ValueError as exc:
            return [f"invalid permutation: {exc}"]
        if set(rho.image(C.P)) != set(C.complement):
            out.append("rho_{s,t}(P) is not the complement of P")
        minus_comp = {-i % n for i in C.complement}
        if set(rho_neg.image(C.P)) != minus_comp:
            out.append("rho_{-s,t}(P) differs from -complement(P)")
        if self.dual_check_poly != defining_polynomial(sorted(minus_comp), C.root):
            out.append("dual check polynomial is not f_{-complement(P)}")
        return out

    def is_valid(self) -> bool:
        return not self.problems()


def certificate_for(C: CyclicCode, s: int, t: int) -> IsoSelfDualCertificate:
    """Certificate for a known ``(s, t)``; raises if it does not certify ``C``."""
    n = C.n
    dual_check = defining_polynomial(sorted({-i % n for i in C.complement}), C.root)
    cert = IsoSelfDualCertificate(C, s % n, t % n, dual_check)
    issues = cert.problems()
    if issues:
        raise NotIsoSelfDual(f"(s={s}, t={t}) does not certify {C!r}: {'; '.join(issues)}")
    return cert


def certify_iso_self_dual(C: CyclicCode) -> IsoSelfDualCertificate:
    """First ``(s, t)`` (ascending ``t``, then ``s``) with ``Z_n = P + rho_{s,t}(P)``."""
    if 2 * C.dimension != C.n:
        raise DimensionMismatch(f"|P| = {C.dimension} but n/2 = {C.n / 2}")
    P = frozenset(C.P)
    comp = frozenset(C.complement)
    for rho in all_qperms(C.q, C.n):
        if rho.image(P) == comp:
            return certificate_for(C, rho.s, rho.t)
    raise NotIsoSelfDual(f"{C!r} is not iso-self-dual")


def encode(C: CyclicCode, message: Sequence[int]) -> list[int]:
    """Codeword of ``m(X) g(X)``; the product already has degree below ``n``."""
    if len(message) != C.dimension:
        raise LengthMismatch(f"message of length {len(message)}, dimension {C.dimension}")
    return (Polynomial(C.field, message) * C.gen_poly).vector(C.n)


# -- exhaustive weight enumeration -------------------------------------------------

def _low_block(G_low: np.ndarray, q: int, mul_table: np.ndarray, add_table: np.ndarray | None, p: int) -> np.ndarray:
    """All ``q^r`` combinations of the given rows, as a uint8/int array."""
    n = G_low.shape[1]
    block = np.zeros((1, n), dtype=np.int64)
    for row in G_low:
        multiples = mul_table[:, row]  # (q, n)
        if add_table is None:
            block = (block[None, :, :] + multiples[:, None, :]) % p
        else:
            block = add_table[block[None, :, :], multiples[:, None, :]]
        block = block.reshape(-1, n)
    return block


def _high_vectors(G_high: np.ndarray, F, indices: range) -> list[list[int]]:
    """Negated high-part vectors for message indices in ``indices``."""
    q = F.order
    r, n = G_high.shape
    out = []
    for idx in indices:
        coeffs = []
        x = idx
        for _ in range(r):
            x, c = divmod(x, q)
            coeffs.append(c)
        vec = [0] * n
        for c, row in zip(coeffs, G_high):
            if c:
                for j in range(n):
                    if row[j]:
                        vec[j] = F.add(vec[j], F.mul(c, int(row[j])))
        out.append([F.neg(v) for v in vec])
    return out


def _weight_chunk(args) -> np.ndarray:
    q, p, k_field, G_low, G_high, start, stop = args
    from .gf import field_build

    F = field_build(p, k_field)
    add_table = None if k_field == 1 else F.add_table
    low = _low_block(G_low, q, F.mul_table, add_table, p)
    dtype = np.uint8 if q <= 256 else np.uint16
    low = np.ascontiguousarray(low.astype(dtype))
    n = low.shape[1]
    hist = np.zeros(n + 1, dtype=np.int64)
    total = stop - start
    report_every = max(1, total // 16)
    for done, neg in enumerate(_high_vectors(G_high, F, range(start, stop))):
        weights = np.count_nonzero(low != np.asarray(neg, dtype=dtype), axis=1)
        hist += np.bincount(weights, minlength=n + 1)
        if total * len(low) > PROGRESS_THRESHOLD and done % report_every == 0:
            log.info("weight enumeration: %d/%d blocks", done, total)
    return hist


def weight_distribution(C: CyclicCode, bound: int = DEFAULT_ENUM_BOUND, workers: int = 1) -> list[int]:
    """``[A_0, ..., A_n]`` by enumerating all ``q^k`` messages.

    The messages are split into a low part, materialised as one array, and a
    high part iterated block by block; a codeword coordinate vanishes iff the
    low-part entry equals the negated high-part entry.  Blocks may be spread
    over ``workers`` processes; the histogram sum does not depend on the split.
    """
    q, n, k = C.q, C.n, C.dimension
    if q**k > bound:
        raise TooLarge(f"{q}^{k} = {q**k} codewords exceeds bound {bound}")
    if k == 0:
        return [1] + [0] * n
    p, k_field = prime_power(q)
    G = C.generator_matrix()
    k_low = k
    while k_low > 1 and q**k_low * n > 2**19:
        k_low -= 1
    G_low, G_high = G[:k_low], G[k_low:]
    high_count = q ** (k - k_low)
    if workers <= 1 or high_count < 2 * workers:
        hist = _weight_chunk((q, p, k_field, G_low, G_high, 0, high_count))
    else:
        step = math.ceil(high_count / workers)
        jobs = [
            (q, p, k_field, G_low, G_high, lo, min(lo + step, high_count))
            for lo in range(0, high_count, step)
        ]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            hist = sum(pool.map(_weight_chunk, jobs))
    return [int(x) for x in hist]


def min_distance(C: CyclicCode, bound: int = DEFAULT_ENUM_BOUND, workers: int = 1) -> int | None:
    """Least nonzero weight; ``None`` for the zero code."""
    dist = weight_distribution(C, bound, workers)
    return next((i for i, a in enumerate(dist) if i > 0 and a), None)


# -- the MDS family and its GRS description -------------------------------------------------

def mds_support(q: int) -> tuple[int, ...]:
    n = q + 1
    ell = (n - 2) // 4
    return tuple(sorted({i % n for i in range(-ell, ell + 1)}))


def mds_construct(
    q: int, root: RootOfUnity | None = None, pin: tuple[int, int] | None = None
) -> tuple[CyclicCode, IsoSelfDualCertificate]:
    """The ``[q+1, (q+1)/2, (q+3)/2]`` iso-self-dual code for ``q = 1 (mod 4)``."""
    prime_power(q)
    if q % 4 != 1:
        raise BadResidue(f"q = {q} is not 1 mod 4")
    n = q + 1
    if root is None:
        root = root_of_unity(field_of_order(q), n, pin)
    C = code_from_support(q, n, mds_support(q), root)
    return C, certificate_for(C, 1, n // 2)


def _check_grs_setting(root: RootOfUnity) -> int:
    q, n = root.q, root.n
    if q % 4 != 1 or n != q + 1:
        raise BadResidue(f"GRS description needs q = 1 (mod 4) and n = q + 1, got q={q}, n={n}")
    return (n - 2) // 4


def grs_codeword(a: Polynomial, root: RootOfUnity, ell: int | None = None) -> list[int]:
    """``(theta^(i ell) a(theta^-i))_i`` over GF(q^2)."""
    default_ell = _check_grs_setting(root)
    ell = default_ell if ell is None else ell
    if a.field is not root.ext:
        raise Mismatch("GRS message polynomial must live in the extension field")
    if a.degree >= root.n // 2:
        raise DegreeTooHigh(f"deg a = {a.degree} >= n/2 = {root.n // 2}")
    E = root.ext
    return [E.mul(root.power(i * ell), a(root.power(-i))) for i in range(root.n)]


def word_evaluate(word: Sequence[int], x: int, field) -> int:
    """Evaluate ``sum_i word[i] x^i`` in ``field``."""
    acc = 0
    for c in reversed(word):
        acc = field.add(field.mul(acc, x), c)
    return acc


def grs_interpolate(word: Sequence[int], root: RootOfUnity) -> Polynomial | None:
    """``a`` with ``deg a < n/2`` and ``grs_codeword(a) == word``, or ``None``.

    ``word`` holds extension-field codes.  The first ``n/2`` coordinates fix
    ``a`` by Lagrange interpolation; the rest are checked against it.
    """
    ell = _check_grs_setting(root)
    E = root.ext
    n, half = root.n, root.n // 2
    xs = [root.power(-i) for i in range(half)]
    ys = [E.mul(word[i], root.power(-i * ell)) for i in range(half)]
    a = Polynomial.zero(E)
    for j in range(half):
        basis = Polynomial.one(E)
        denom = 1
        for m in range(half):
            if m != j:
                basis = basis * Polynomial(E, (E.neg(xs[m]), 1))
                denom = E.mul(denom, E.sub(xs[j], xs[m]))
        a = a + basis.scale(E.div(ys[j], denom))
    return a if grs_codeword(a, root) == list(word) else None


# -- descriptor JSON -----------------------------------------------------------------

def pin_text(pin: tuple[int, int] | None) -> str | None:
    return None if pin is None else f"theta^{pin[0]}={pin[1]}"


def code_descriptor(
    C: CyclicCode,
    cert: IsoSelfDualCertificate | None = None,
    extra: dict | None = None,
) -> dict:
    out = {
        "q": C.q,
        "n": C.n,
        "P": list(C.P),
        "dimension": C.dimension,
        "check_poly": list(C.check_poly.coeffs),
        "gen_poly": list(C.gen_poly.coeffs),
        "theta_pin": pin_text(C.root.pin),
    }
    if cert is not None:
        out["certificate"] = {"s": cert.s, "t": cert.t}
        out["dual_check_poly"] = list(cert.dual_check_poly.coeffs)
    if extra:
        out.update(extra)
    return out

