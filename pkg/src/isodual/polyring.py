"""Polynomials over a finite field, the coset factorisation of X^n - 1, and the
transforms used by the construction: isometry substitution, the alternating
polynomial and the monic reciprocal polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DivisionByZero, FieldMismatch, NotInvariant, NotMonic, ZeroConstantTerm
from .gf import Field, RootOfUnity


def _normalize(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class Polynomial:
    """Dense polynomial, ascending coefficient codes, no trailing zeros."""

    field: Field
    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _normalize(self.coeffs))

    # construction helpers
    @classmethod
    def from_ints(cls, field: Field, values: Iterable[int]) -> Polynomial:
        return cls(field, tuple(field.from_int(v) for v in values))

    @classmethod
    def monomial(cls, field: Field, degree: int, coeff: int = 1) -> Polynomial:
        return cls(field, (0,) * degree + (coeff,))

    @classmethod
    def one(cls, field: Field) -> Polynomial:
        return cls(field, (1,))

    @classmethod
    def zero(cls, field: Field) -> Polynomial:
        return cls(field, ())

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.leading == 1

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def _check(self, other: Polynomial) -> None:
        if other.field is not self.field:
            raise FieldMismatch(f"{self.field!r} vs {other.field!r}")

    def __add__(self, other: Polynomial) -> Polynomial:
        self._check(other)
        F = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = F.add(out[i], c)
        return Polynomial(F, out)

    def __neg__(self) -> Polynomial:
        F = self.field
        return Polynomial(F, [F.neg(c) for c in self.coeffs])

    def __sub__(self, other: Polynomial) -> Polynomial:
        return self + (-other)

    def __mul__(self, other: Polynomial) -> Polynomial:
        self._check(other)
        F = self.field
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial(F, ())
        out = [0] * (len(a) + len(b) - 1)
        rows = F.op_rows
        if rows is not None:
            add, _, mul_rows = rows
            for i, ai in enumerate(a):
                if ai:
                    ma = mul_rows[ai]
                    for j, bj in enumerate(b):
                        if bj:
                            out[i + j] = add[out[i + j]][ma[bj]]
            return Polynomial(F, out)
        add, mul = F.add, F.mul
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        out[i + j] = add(out[i + j], mul(ai, bj))
        return Polynomial(F, out)

    def scale(self, c: int) -> Polynomial:
        F = self.field
        return Polynomial(F, [F.mul(c, x) for x in self.coeffs])

    def __divmod__(self, other: Polynomial) -> tuple[Polynomial, Polynomial]:
        self._check(other)
        if other.is_zero():
            raise DivisionByZero("polynomial division by zero")
        F = self.field
        rem = list(self.coeffs)
        db = other.degree
        inv_lead = F.inv(other.leading)
        quot = [0] * max(0, len(rem) - db)
        rows = F.op_rows
        b = other.coeffs
        for shift in range(len(rem) - 1 - db, -1, -1):
            c = rem[shift + db]
            if c == 0:
                continue
            c = F.mul(c, inv_lead)
            quot[shift] = c
            if rows is not None:
                sub, mc = rows[1], rows[2][c]
                for i, bi in enumerate(b):
                    if bi:
                        rem[shift + i] = sub[rem[shift + i]][mc[bi]]
            else:
                for i, bi in enumerate(b):
                    rem[shift + i] = F.sub(rem[shift + i], F.mul(c, bi))
        return Polynomial(F, quot), Polynomial(F, rem[:db] if db > 0 else [])

    def __floordiv__(self, other: Polynomial) -> Polynomial:
        return divmod(self, other)[0]

    def __mod__(self, other: Polynomial) -> Polynomial:
        return divmod(self, other)[1]

    def monic(self) -> Polynomial:
        if self.is_zero():
            return self
        return self.scale(self.field.inv(self.leading))

    def __call__(self, x: int) -> int:
        """Evaluate at the field element with code ``x`` (Horner)."""
        F = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, x), c)
        return acc

    def weight(self) -> int:
        return sum(1 for c in self.coeffs if c)

    def vector(self, n: int) -> list[int]:
        """Coefficient vector padded to length ``n``."""
        if len(self.coeffs) > n:
            raise ValueError(f"degree {self.degree} does not fit in length {n}")
        return list(self.coeffs) + [0] * (n - len(self.coeffs))

    def __repr__(self) -> str:
        return f"Polynomial({self.field!r}, {format_poly(self)})"


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd; ``gcd(0, 0) = 0``."""
    a._check(b)
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def poly_arith(a: Polynomial, b: Polynomial, op: str):
    """Dispatch one of ``add, sub, mul, divmod, gcd``."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "divmod":
        return divmod(a, b)
    if op == "gcd":
        return poly_gcd(a, b)
    raise ValueError(f"unknown operation {op!r}")


def x_n_minus_1(field: Field, n: int) -> Polynomial:
    return Polynomial(field, (field.neg(1),) + (0,) * (n - 1) + (1,))


def poly_mod_xn1(a: Polynomial, n: int) -> Polynomial:
    """Reduce modulo X^n - 1 by folding exponents."""
    F = a.field
    out = [0] * n
    for i, c in enumerate(a.coeffs):
        if c:
            out[i % n] = F.add(out[i % n], c)
    return Polynomial(F, out)


# -- coset factorisation -------------------------------------------------------

def _cosets_of(P: Iterable[int], q: int, n: int) -> list[tuple[int, ...]]:
    remaining = sorted(set(x % n for x in P))
    members = set(remaining)
    out = []
    seen: set[int] = set()
    for i in remaining:
        if i in seen:
            continue
        orbit = []
        j = i
        while j not in orbit:
            orbit.append(j)
            j = j * q % n
        for j in orbit:
            if j not in members:
                raise NotInvariant(f"{sorted(members)} is not closed under multiplication by {q} mod {n}")
        seen.update(orbit)
        out.append(tuple(sorted(orbit)))
    return out


def coset_polynomial(Q: Sequence[int], root: RootOfUnity) -> Polynomial:
    """``prod_{i in Q} (X - theta^i)`` projected to a polynomial over GF(q).

    Raises :class:`CoefficientNotInBaseField` if a coefficient of the product
    is outside GF(q), which happens when ``Q`` is not a union of q-cosets.
    """
    key = ("coset", tuple(sorted(Q)))
    cached = root.cache.get(key)
    if cached is not None:
        return cached
    E = root.ext
    prod = [1]
    for i in Q:
        r = E.neg(root.power(i))
        nxt = [0] * (len(prod) + 1)
        for j, c in enumerate(prod):
            nxt[j + 1] = E.add(nxt[j + 1], c)
            nxt[j] = E.add(nxt[j], E.mul(c, r))
        prod = nxt
    result = Polynomial(root.base, [root.to_base(c) for c in prod])
    root.cache[key] = result
    return result


def defining_polynomial(P: Iterable[int], root: RootOfUnity) -> Polynomial:
    """``f_P = prod_{i in P} (X - theta^i)`` for a q-invariant ``P``."""
    result = Polynomial.one(root.base)
    for Q in _cosets_of(P, root.q, root.n):
        result = result * coset_polynomial(Q, root)
    return result


# -- transforms -----------------------------------------------------------------

def _inverse_rep(s: int, n: int) -> int:
    """Least positive representative of ``s^-1`` mod ``n``."""
    if n == 1:
        return 1
    return pow(s, -1, n)


def isometry_substitute(a: Polynomial, s: int, t: int, root: RootOfUnity) -> Polynomial:
    """``a(theta^-t X^(s^-1)) mod (X^n - 1)`` as a polynomial over GF(q)."""
    from .zn import qperm_make

    n = root.n
    qperm_make(s, t, n, root.q)
    s_inv = _inverse_rep(s % n, n)
    F = root.base
    scale = root.to_base(root.power(-t))
    out = [0] * n
    factor = 1
    for i, c in enumerate(a.coeffs):
        if c:
            pos = i * s_inv % n
            out[pos] = F.add(out[pos], F.mul(c, factor))
        factor = F.mul(factor, scale)
    return Polynomial(F, out)


def image_defining_polynomial(fP: Polynomial, s: int, t: int, root: RootOfUnity) -> Polynomial:
    """``f_{rho_{s,t}(P)}`` recovered as ``gcd(a(theta^-t X^(s^-1)), X^n - 1)``."""
    return poly_gcd(isometry_substitute(fP, s, t, root), x_n_minus_1(root.base, root.n))


def alternating(a: Polynomial) -> Polynomial:
    """``(-1)^deg(a) * a(-X)`` for monic ``a``."""
    if not a.is_monic():
        raise NotMonic("alternating polynomial needs a monic input")
    F = a.field
    d = a.degree
    return Polynomial(F, [c if (d - i) % 2 == 0 else F.neg(c) for i, c in enumerate(a.coeffs)])


def monic_reciprocal(a: Polynomial) -> Polynomial:
    """``a_0^-1 X^deg(a) a(1/X)`` for monic ``a`` with ``a_0 != 0``."""
    if not a.is_monic():
        raise NotMonic("monic reciprocal needs a monic input")
    if a.coeffs[0] == 0:
        raise ZeroConstantTerm("monic reciprocal needs a nonzero constant term")
    return Polynomial(a.field, reversed(a.coeffs)).scale(a.field.inv(a.coeffs[0]))


# -- text formats -----------------------------------------------------------------

def parse_coeffs(text: str, field: Field) -> Polynomial:
    """Parse ``"2,0,2,0,1"`` (ascending codes) into a polynomial."""
    text = text.strip()
    if not text:
        return Polynomial.zero(field)
    values = [int(tok) for tok in text.split(",")]
    for v in values:
        if not 0 <= v < field.order:
            raise ValueError(f"coefficient {v} outside [0, {field.order})")
    return Polynomial(field, values)


def format_coeffs(a: Polynomial) -> str:
    return ",".join(str(c) for c in a.coeffs)


def _coeff_text(F: Field, c: int, balanced: bool) -> tuple[int, str]:
    """Sign and magnitude text of one coefficient."""
    if F.k == 1:
        v = c
        if balanced and v > F.p // 2:
            return -1, str(F.p - v)
        return 1, str(v)
    digits = F.digits(c)
    terms = []
    for i in range(len(digits) - 1, -1, -1):
        d = digits[i]
        if d == 0:
            continue
        if i == 0:
            terms.append(str(d))
        else:
            base = "w" if i == 1 else f"w^{i}"
            terms.append(base if d == 1 else f"{d}{base}")
    body = "+".join(terms)
    return 1, body if len(terms) == 1 else f"({body})"


def format_poly(a: Polynomial, balanced: bool = True, var: str = "X") -> str:
    """Human-readable form, highest degree first.

    With ``balanced`` prime-field coefficients are printed in
    ``{-(p-1)/2, ..., (p-1)/2}``; extension-field coefficients are printed as
    polynomials in ``w``, the class of ``y`` modulo the field's modulus.
    """
    if a.is_zero():
        return "0"
    F = a.field
    parts = []
    for i in range(a.degree, -1, -1):
        c = a.coeffs[i]
        if c == 0:
            continue
        sign, mag = _coeff_text(F, c, balanced)
        if i == 0:
            term = mag
        else:
            mono = var if i == 1 else f"{var}^{i}"
            term = mono if mag == "1" else f"{mag}{mono}" if F.k == 1 else f"{mag}*{mono}"
        parts.append((sign, term))
    out = ("-" if parts[0][0] < 0 else "") + parts[0][1]
    for sign, term in parts[1:]:
        out += (" - " if sign < 0 else " + ") + term
    return out


def factor_xn1(root: RootOfUnity) -> list[Polynomial]:
    """Monic irreducible factors of X^n - 1 over GF(q), one per q-coset in canonical order."""
    from .zn import cyclotomic_cosets

    return [coset_polynomial(Q, root) for Q in cyclotomic_cosets(root.q, root.n).cosets]

