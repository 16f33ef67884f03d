"""Exact arithmetic in GF(p) and GF(p^k), and primitive n-th roots of unity.

Elements are encoded as integers in ``[0, p^k)``: the base-``p`` digits of the
code, least significant first, are the coefficients of the element in the
polynomial basis ``1, y, ..., y^(k-1)`` modulo the field's defining polynomial.
All scalar arithmetic goes through exp/log/Zech tables built once per field.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass, field as dc_field
from functools import cached_property, lru_cache

import numpy as np

from .errors import (
    CoefficientNotInBaseField,
    DivisionByZero,
    NonPrimeCharacteristic,
    NotCoprime,
    PinUnsatisfiable,
    SizeBoundExceeded,
)

DEFAULT_FIELD_BOUND = 2**20


def is_prime(m: int) -> bool:
    if m < 2:
        return False
    if m % 2 == 0:
        return m == 2
    r = 3
    while r * r <= m:
        if m % r == 0:
            return False
        r += 2
    return True


def prime_factors(m: int) -> list[int]:
    """Distinct prime factors of ``m >= 1`` in increasing order."""
    out = []
    r = 2
    while r * r <= m:
        if m % r == 0:
            out.append(r)
            while m % r == 0:
                m //= r
        r += 1
    if m > 1:
        out.append(m)
    return out


def prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, k)`` with ``q == p**k``; raise if ``q`` is not a prime power."""
    if q < 2:
        raise NonPrimeCharacteristic(f"{q} is not a prime power")
    factors = prime_factors(q)
    if len(factors) != 1:
        raise NonPrimeCharacteristic(f"{q} is not a prime power")
    p = factors[0]
    k = round(math.log(q, p))
    while p**k < q:
        k += 1
    while p**k > q:
        k -= 1
    return p, k


def multiplicative_order(q: int, n: int) -> int:
    """Least ``d >= 1`` with ``q**d == 1 (mod n)``."""
    if n < 1:
        raise ValueError("modulus must be positive")
    if math.gcd(q, n) != 1:
        raise NotCoprime(f"gcd({q}, {n}) != 1")
    if n == 1:
        return 1
    d, x = 1, q % n
    while x != 1:
        x = x * q % n
        d += 1
    return d


# Dense polynomials over GF(p) as ascending int lists; only used while a field
# is being set up (modulus search, generator search).

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a: list[int], m: list[int], p: int) -> list[int]:
    a = _trim(list(a))
    dm = len(m) - 1
    inv_lead = pow(m[-1], -1, p)
    while len(a) - 1 >= dm and a:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - dm
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mi) % p
        _trim(a)
    return a


def _pmul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _trim(out)


def _ppowmod(a: list[int], e: int, m: list[int], p: int) -> list[int]:
    result = [1]
    base = _pmod(a, m, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, base, p), m, p)
        base = _pmod(_pmul(base, base, p), m, p)
        e >>= 1
    return result


def _pgcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def is_irreducible(f: list[int], p: int) -> bool:
    """Rabin's test for a monic ``f`` over GF(p)."""
    k = len(f) - 1
    if k < 1:
        return False
    if k == 1:
        return True
    if f[0] == 0:
        return False
    for a in range(p):
        acc = 0
        for c in reversed(f):
            acc = (acc * a + c) % p
        if acc == 0:
            return False
    x = [0, 1]
    xp = x
    for _ in range(k):
        xp = _ppowmod(xp, p, f, p)
    if _trim(list(xp)) != x:
        return False
    for r in prime_factors(k):
        y = x
        for _ in range(k // r):
            y = _ppowmod(y, p, f, p)
        diff = list(y) + [0] * max(0, 2 - len(y))
        diff[1] = (diff[1] - 1) % p
        if len(_pgcd(f, _trim(diff), p)) != 1:
            return False
    return True


def smallest_irreducible(p: int, k: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree ``k`` (low degree compared first)."""
    for low in itertools.product(range(p), repeat=k):
        f = list(low) + [1]
        if is_irreducible(f, p):
            return tuple(f)
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


class Field:
    """The finite field GF(p^k) with a canonical modulus and generator.

    Build instances with :func:`field_build`, which caches them so that two
    requests for the same field return the same object.
    """

    def __init__(self, p: int, k: int):
        self.p = p
        self.k = k
        self.order = p**k
        self.modulus: tuple[int, ...] = smallest_irreducible(p, k) if k > 1 else ()
        self._qm1 = self.order - 1
        self.generator = self._find_generator()
        self._build_tables()

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.k})" if self.k > 1 else f"GF({self.p})"

    # -- construction -------------------------------------------------------

    def _has_full_order(self, digits: list[int]) -> bool:
        qm1 = self._qm1
        if self.k == 1:
            g = digits[0]
            return g != 0 and all(pow(g, qm1 // r, self.p) != 1 for r in prime_factors(qm1))
        m = list(self.modulus)
        if not _trim(list(digits)):
            return False
        return all(_ppowmod(digits, qm1 // r, m, self.p) != [1] for r in prime_factors(qm1))

    def _find_generator(self) -> int:
        if self.order == 2:
            return 1
        for digits in itertools.product(range(self.p), repeat=self.k):
            if self._has_full_order(list(digits)):
                return self.from_digits(digits)
        raise AssertionError("field has no generator")  # pragma: no cover

    def _build_tables(self) -> None:
        p, k, qm1 = self.p, self.k, self._qm1
        weights = p ** np.arange(k, dtype=np.int64)
        # matrix of multiplication by the generator on digit vectors
        m = list(self.modulus)
        g = list(self.digits(self.generator))
        mul_g = np.zeros((k, k), dtype=np.int64)
        for j in range(k):
            col = _pmod(_pmul(g, [0] * j + [1], p), m, p) if k > 1 else [g[0] * 1 % p]
            mul_g[: len(col), j] = col
        powers = np.zeros((1, k), dtype=np.int64)
        powers[0, 0] = 1
        step = mul_g
        while len(powers) < qm1:
            powers = np.vstack([powers, (powers @ step.T) % p])
            step = (step @ step) % p
        powers = powers[:qm1]
        codes = powers @ weights
        log = np.full(self.order, -1, dtype=np.int64)
        log[codes] = np.arange(qm1)
        shifted = powers.copy()
        shifted[:, 0] = (shifted[:, 0] + 1) % p
        zech = log[shifted @ weights]
        self._exp: list[int] = codes.tolist() * 2
        self._log: list[int] = log.tolist()
        self._zech: list[int] = zech.tolist()
        self._half = qm1 // 2 if p != 2 else 0

    # -- encoding -----------------------------------------------------------

    def digits(self, a: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.k):
            a, r = divmod(a, self.p)
            out.append(r)
        return tuple(out)

    def from_digits(self, digits) -> int:
        code = 0
        for c in reversed(list(digits)):
            code = code * self.p + (c % self.p)
        return code

    def from_int(self, c: int) -> int:
        """Image of the integer ``c`` under Z -> GF(p^k)."""
        return c % self.p

    def element(self, code: int) -> FieldElement:
        return FieldElement(self, code)

    # -- scalar arithmetic on codes ----------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        if a == 0:
            return b
        if b == 0:
            return a
        la = self._log[a]
        m = self._log[b] - la
        if m < 0:
            m += self._qm1
        z = self._zech[m]
        if z < 0:
            return 0
        return self._exp[la + z]

    def neg(self, a: int) -> int:
        if self.k == 1:
            return -a % self.p
        if a == 0 or self.p == 2:
            return a
        return self._exp[self._log[a] + self._half]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.k == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return self._exp[(self._qm1 - self._log[a]) % self._qm1]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise DivisionByZero("zero to a negative power")
            return 1 if e == 0 else 0
        return self._exp[(self._log[a] * e) % self._qm1]

    def log(self, a: int) -> int:
        """Discrete logarithm to the base of the canonical generator."""
        if a == 0:
            raise DivisionByZero("log of zero")
        return self._log[a]

    def exp(self, e: int) -> int:
        return self._exp[e % self._qm1]

    def mult_order(self, a: int) -> int:
        return self._qm1 // math.gcd(self._qm1, self.log(a))

    # -- vectorised tables (small fields only) ------------------------------

    @cached_property
    def add_table(self) -> np.ndarray:
        q = self.order
        if q > 4096:
            raise SizeBoundExceeded("addition table only built for fields with at most 4096 elements")
        return np.array([[self.add(a, b) for b in range(q)] for a in range(q)], dtype=np.int64)

    @cached_property
    def mul_table(self) -> np.ndarray:
        q = self.order
        if q > 4096:
            raise SizeBoundExceeded("multiplication table only built for fields with at most 4096 elements")
        return np.array([[self.mul(a, b) for b in range(q)] for a in range(q)], dtype=np.int64)

    @cached_property
    def op_rows(self) -> tuple[list[list[int]], list[list[int]], list[list[int]]] | None:
        """``(add, sub, mul)`` tables as nested lists for scalar loops; ``None`` above 256 elements."""
        q = self.order
        if q > 256:
            return None
        add = [[self.add(a, b) for b in range(q)] for a in range(q)]
        sub = [[self.sub(a, b) for b in range(q)] for a in range(q)]
        mul = [[self.mul(a, b) for b in range(q)] for a in range(q)]
        return add, sub, mul


@dataclass(frozen=True)
class FieldElement:
    field: Field
    value: int

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.field.digits(self.value)

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field is not self.field:
                raise ValueError("elements of different fields")
            return other.value
        return self.field.from_int(other)

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.value, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.value, self._other(other)))

    def __rsub__(self, other):
        return FieldElement(self.field, self.field.sub(self._other(other), self.value))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElement(self.field, self.field.div(self.value, self._other(other)))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.value, e))

    def __bool__(self) -> bool:
        return self.value != 0

    def __repr__(self) -> str:
        return f"{self.field!r}({self.value})"


@lru_cache(maxsize=None)
def _cached_field(p: int, k: int) -> Field:
    return Field(p, k)


def field_build(p: int, k: int = 1, bound: int = DEFAULT_FIELD_BOUND) -> Field:
    """Return GF(p^k) with its canonical modulus and generator."""
    if not is_prime(p):
        raise NonPrimeCharacteristic(f"characteristic {p} is not prime")
    if k < 1:
        raise ValueError("extension degree must be >= 1")
    if p**k > bound:
        raise SizeBoundExceeded(f"GF({p}^{k}) has {p**k} elements, bound is {bound}")
    return _cached_field(p, k)


def field_of_order(q: int, bound: int = DEFAULT_FIELD_BOUND) -> Field:
    p, k = prime_power(q)
    return field_build(p, k, bound)


def in_base_field(x: FieldElement, q: int) -> bool:
    """True iff ``x`` lies in the subfield of order ``q`` (i.e. ``x**q == x``)."""
    return x.field.pow(x.value, q) == x.value


@dataclass(frozen=True, eq=False)
class RootOfUnity:
    """A primitive ``n``-th root of unity in GF(q^d), with the embedding GF(q) -> GF(q^d)."""

    base: Field
    ext: Field
    n: int
    d: int
    theta: FieldElement
    embedding: tuple[int, ...]
    pin: tuple[int, int] | None = None
    _powers: tuple[int, ...] = dc_field(default=(), repr=False)
    _projection: dict[int, int] = dc_field(default_factory=dict, repr=False)
    cache: dict = dc_field(default_factory=dict, repr=False)

    @property
    def q(self) -> int:
        return self.base.order

    def power(self, e: int) -> int:
        """Code of ``theta**e`` in the extension field."""
        return self._powers[e % self.n]

    def embed(self, c: int) -> int:
        return self.embedding[c]

    def to_base(self, code: int) -> int:
        try:
            return self._projection[code]
        except KeyError:
            raise CoefficientNotInBaseField(
                f"{self.ext!r} element {code} is not in the subfield of order {self.q}"
            ) from None

    def in_base(self, code: int) -> bool:
        return code in self._projection


def _subfield_embedding(base: Field, ext: Field) -> tuple[int, ...]:
    """Embedding of ``base`` into ``ext`` sending y to the smallest root of base's modulus."""
    if base is ext:
        return tuple(range(base.order))
    if base.k == 1:
        return tuple(range(base.order))
    q = base.order
    step = (ext.order - 1) // (q - 1)
    candidates = sorted(ext.exp(j * step) for j in range(q - 1))
    m = base.modulus
    for r in candidates:
        acc = 0
        for c in reversed(m):
            acc = ext.add(ext.mul(acc, r), ext.from_int(c))
        if acc == 0:
            break
    else:  # pragma: no cover
        raise AssertionError("modulus has no root in extension")
    out = []
    for code in range(q):
        acc = 0
        for c in reversed(base.digits(code)):
            acc = ext.add(ext.mul(acc, r), ext.from_int(c))
        out.append(acc)
    return tuple(out)


def root_of_unity(
    field_q: Field,
    n: int,
    pin: tuple[int, int] | None = None,
    bound: int = DEFAULT_FIELD_BOUND,
) -> RootOfUnity:
    """Primitive ``n``-th root of unity over ``field_q``.

    Without ``pin`` this is ``g**((q^d - 1)/n)`` for the canonical generator
    ``g`` of GF(q^d).  ``pin=(e, c)`` selects instead the first ``theta**r``
    (``r`` a unit mod ``n``, ascending) with ``(theta**r)**e == c``, where
    ``c`` is a code of ``field_q``.
    """
    q = field_q.order
    d = multiplicative_order(q, n)
    ext = field_build(field_q.p, field_q.k * d, bound)
    embedding = _subfield_embedding(field_q, ext)
    canonical = ext.exp((ext.order - 1) // n)
    theta = canonical
    if pin is not None:
        e, c = pin
        target = embedding[c]
        for r in range(1, n + 1):
            if math.gcd(r, n) != 1:
                continue
            cand = ext.pow(canonical, r)
            if ext.pow(cand, e) == target:
                theta = cand
                break
        else:
            raise PinUnsatisfiable(f"no primitive {n}-th root satisfies theta^{e} = {c}")
    powers = [1]
    for _ in range(n - 1):
        powers.append(ext.mul(powers[-1], theta))
    return RootOfUnity(
        base=field_q,
        ext=ext,
        n=n,
        d=d,
        theta=ext.element(theta),
        embedding=embedding,
        pin=pin,
        _powers=tuple(powers),
        _projection={v: i for i, v in enumerate(embedding)},
    )


_PIN_RE = re.compile(r"^\s*theta\s*\^\s*(\d+)\s*=\s*(-?\d+)\s*$")


def parse_pin(expr: str, field_q: Field) -> tuple[int, int]:
    """Parse ``"theta^E=C"`` into ``(E, code)``; ``C`` is read as an integer of GF(q).

    Negative ``C`` is taken as the additive inverse of ``|C|``.
    """
    m = _PIN_RE.match(expr)
    if not m:
        raise ValueError(f"cannot parse pin {expr!r}; expected theta^E=C")
    e, c = int(m.group(1)), int(m.group(2))
    if field_q.k == 1:
        return e, c % field_q.p
    if not -field_q.order < c < field_q.order:
        raise ValueError(f"pin value {c} outside GF({field_q.order})")
    return e, field_q.neg(-c) if c < 0 else c
