"""Exact arithmetic in cyclotomic fields Q(zeta_m).

An element of Q(zeta_m) is stored as an integer numerator vector of length
phi(m) over a common positive denominator, reduced modulo the m-th
cyclotomic polynomial.  The reduced form is canonical, so equality is a
coefficient comparison.  Values of different orders are lifted to the least
common order before combining.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from numbers import Rational

__all__ = [
    "CyclotomicScalar",
    "cyclotomic_polynomial",
    "euler_phi",
    "zeta",
    "as_scalar",
    "ZERO",
    "ONE",
]


@lru_cache(maxsize=None)
def euler_phi(m: int) -> int:
    result, k, p = m, m, 2
    while p * p <= k:
        if k % p == 0:
            while k % p == 0:
                k //= p
            result -= result // p
        p += 1
    if k > 1:
        result -= result // k
    return result


def _divisors(m: int) -> list[int]:
    return [d for d in range(1, m + 1) if m % d == 0]


def _poly_divexact(num: list[int], den: list[int]) -> list[int]:
    """Exact division of integer polynomials (low-to-high coefficients, den monic)."""
    num = list(num)
    q = [0] * (len(num) - len(den) + 1)
    for k in range(len(q) - 1, -1, -1):
        c = num[k + len(den) - 1]
        q[k] = c
        if c:
            for j, d in enumerate(den):
                num[k + j] -= c * d
    if any(num[: len(den) - 1]):
        raise ArithmeticError("inexact polynomial division")
    return q


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_m, lowest degree first (monic)."""
    if m < 1:
        raise ValueError("cyclotomic order must be positive")
    p = [-1] + [0] * (m - 1) + [1]
    for d in _divisors(m)[:-1]:
        p = _poly_divexact(p, list(cyclotomic_polynomial(d)))
    return tuple(p)


@lru_cache(maxsize=None)
def _power_table(m: int) -> tuple[tuple[int, ...], ...]:
    """Reduced integer coordinates of zeta_m^k for k = 0..m-1."""
    phi = euler_phi(m)
    cyc = cyclotomic_polynomial(m)
    table = []
    cur = [1] + [0] * (phi - 1)
    for _ in range(m):
        table.append(tuple(cur))
        # multiply by zeta: shift up, fold the x^phi term back
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            for j in range(phi):
                cur[j] -= top * cyc[j]
    return tuple(table)


@lru_cache(maxsize=None)
def _trace_table(m: int) -> tuple[int, ...]:
    # trace of each basis element zeta^k, k < phi(m), down to Q
    phi = euler_phi(m)
    table = _power_table(m)
    acc = [[0] * phi for _ in range(phi)]
    for a in range(1, m + 1):
        if gcd(a, m) != 1:
            continue
        for k in range(phi):
            row = table[(a * k) % m]
            for j in range(phi):
                acc[k][j] += row[j]
    # the sum of all conjugates is rational, so only coordinate 0 survives
    return tuple(acc[k][0] for k in range(phi))


def _normalize(num: list[int], den: int) -> tuple[tuple[int, ...], int]:
    if den < 0:
        num = [-c for c in num]
        den = -den
    g = den
    for c in num:
        if c:
            g = gcd(g, c)
            if g == 1:
                break
    if not any(num):
        return tuple(0 for _ in num), 1
    if g != 1:
        num = [c // g for c in num]
        den //= g
    return tuple(num), den


class CyclotomicScalar:
    """Immutable element of Q(zeta_order) in reduced canonical form."""

    __slots__ = ("order", "_num", "_den", "_rat")

    def __init__(self, order: int, coeffs=(0,)):
        if order < 1:
            raise ValueError("order must be a positive integer")
        phi = euler_phi(order)
        fracs = [Fraction(c) for c in coeffs]
        den = 1
        for f in fracs:
            den = den * f.denominator // gcd(den, f.denominator)
        ints = [int(f * den) for f in fracs]
        if len(ints) > phi:
            ints = _reduce(order, ints)
        ints += [0] * (phi - len(ints))
        num, den = _normalize(ints, den)
        self._set(order, num, den)

    def _set(self, order, num, den):
        self.order = order
        self._num = num
        self._den = den
        self._rat = not any(num[1:])

    @classmethod
    def _make(cls, order: int, num, den: int) -> "CyclotomicScalar":
        obj = cls.__new__(cls)
        num, den = _normalize(list(num), den)
        obj._set(order, num, den)
        return obj

    @classmethod
    def rational(cls, q, order: int = 1) -> "CyclotomicScalar":
        q = Fraction(q)
        num = [q.numerator] + [0] * (euler_phi(order) - 1)
        obj = cls.__new__(cls)
        obj._set(order, tuple(num), q.denominator)
        return obj

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self._den) for c in self._num)

    def is_zero(self) -> bool:
        return self._rat and self._num[0] == 0

    def is_rational(self) -> bool:
        return self._rat

    def to_fraction(self) -> Fraction:
        if not self._rat:
            raise ValueError(f"{self} is not rational")
        return Fraction(self._num[0], self._den)

    def lift(self, order: int) -> "CyclotomicScalar":
        if order == self.order:
            return self
        if order % self.order:
            raise ValueError(f"cannot lift order {self.order} to {order}")
        if self._rat:
            return CyclotomicScalar.rational(Fraction(self._num[0], self._den), order)
        step = order // self.order
        table = _power_table(order)
        out = [0] * euler_phi(order)
        for k, c in enumerate(self._num):
            if c:
                row = table[(k * step) % order]
                for j, r in enumerate(row):
                    if r:
                        out[j] += c * r
        return CyclotomicScalar._make(order, out, self._den)

    def galois(self, a: int) -> "CyclotomicScalar":
        """Image under zeta -> zeta^a (a coprime to the order)."""
        m = self.order
        if gcd(a, m) != 1:
            raise ValueError("Galois exponent must be coprime to the order")
        if self._rat:
            return self
        table = _power_table(m)
        out = [0] * len(self._num)
        for k, c in enumerate(self._num):
            if c:
                row = table[(a * k) % m]
                for j, r in enumerate(row):
                    if r:
                        out[j] += c * r
        return CyclotomicScalar._make(m, out, self._den)

    def conjugate(self) -> "CyclotomicScalar":
        return self.galois(-1 % self.order if self.order > 1 else 1)

    def trace(self) -> Fraction:
        """Field trace Q(zeta_m) -> Q."""
        tr = _trace_table(self.order)
        return Fraction(sum(c * t for c, t in zip(self._num, tr)), self._den)

    def norm(self) -> Fraction:
        prod = self
        for a in range(2, self.order):
            if gcd(a, self.order) == 1:
                prod = prod * self.galois(a)
        return prod.to_fraction()

    def inverse(self) -> "CyclotomicScalar":
        if self.is_zero():
            raise ZeroDivisionError("division by zero in Q(zeta_%d)" % self.order)
        if self._rat:
            return CyclotomicScalar._make(self.order, [self._den] + [0] * (len(self._num) - 1), self._num[0])
        # x^-1 = (product of the other conjugates) / N(x)
        others = None
        for a in range(2, self.order):
            if gcd(a, self.order) == 1:
                c = self.galois(a)
                others = c if others is None else others * c
        n = (self * others).to_fraction()
        return others * CyclotomicScalar.rational(1 / n)

    # arithmetic -----------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, CyclotomicScalar):
            if other.order == self.order:
                return self, other
            if other._rat:
                return self, _rat_make(self.order, other._num[0], other._den)
            if self._rat:
                return _rat_make(other.order, self._num[0], self._den), other
            order = self.order * other.order // gcd(self.order, other.order)
            return self.lift(order), other.lift(order)
        if isinstance(other, int):
            return self, _rat_make(self.order, other, 1)
        if isinstance(other, Rational):
            return self, _rat_make(self.order, other.numerator, other.denominator)
        return None, None

    def __add__(self, other):
        if type(other) is CyclotomicScalar and other.order == self.order:
            a, b = self, other
        else:
            a, b = self._coerce(other)
            if a is None:
                return NotImplemented
        if a._rat and b._rat:
            if a._den == b._den:
                return _rat_make(a.order, a._num[0] + b._num[0], a._den)
            return _rat_make(a.order, a._num[0] * b._den + b._num[0] * a._den, a._den * b._den)
        if a._den == b._den:
            return CyclotomicScalar._make(a.order, [x + y for x, y in zip(a._num, b._num)], a._den)
        return CyclotomicScalar._make(
            a.order, [x * b._den + y * a._den for x, y in zip(a._num, b._num)], a._den * b._den
        )

    __radd__ = __add__

    def __neg__(self):
        obj = CyclotomicScalar.__new__(CyclotomicScalar)
        obj.order = self.order
        obj._num = tuple(-c for c in self._num)
        obj._den = self._den
        obj._rat = self._rat
        return obj

    def __sub__(self, other):
        if type(other) is CyclotomicScalar and other.order == self.order:
            a, b = self, other
        else:
            a, b = self._coerce(other)
            if a is None:
                return NotImplemented
        if a._rat and b._rat:
            if a._den == b._den:
                return _rat_make(a.order, a._num[0] - b._num[0], a._den)
            return _rat_make(a.order, a._num[0] * b._den - b._num[0] * a._den, a._den * b._den)
        return a + (-b)

    def __rsub__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return b + (-a)

    def __mul__(self, other):
        if type(other) is CyclotomicScalar and other.order == self.order:
            a, b = self, other
        else:
            a, b = self._coerce(other)
            if a is None:
                return NotImplemented
        if b._rat:
            s = b._num[0]
            if a._rat:
                return _rat_make(a.order, a._num[0] * s, a._den * b._den)
            if s == 0:
                return _rat_make(a.order, 0, 1)
            return CyclotomicScalar._make(a.order, [s * c for c in a._num], a._den * b._den)
        if a._rat:
            s = a._num[0]
            if s == 0:
                return _rat_make(a.order, 0, 1)
            return CyclotomicScalar._make(a.order, [s * c for c in b._num], a._den * b._den)
        phi = len(a._num)
        conv = [0] * (2 * phi - 1)
        for i, x in enumerate(a._num):
            if x:
                for j, y in enumerate(b._num):
                    if y:
                        conv[i + j] += x * y
        return CyclotomicScalar._make(a.order, _reduce(a.order, conv), a._den * b._den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return a * b.inverse()

    def __rtruediv__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return b * a.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        result = CyclotomicScalar.rational(1, self.order)
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Rational)):
            return self._rat and Fraction(self._num[0], self._den) == other
        if not isinstance(other, CyclotomicScalar):
            return NotImplemented
        if other.order != self.order:
            a, b = self._coerce(other)
            return a._num == b._num and a._den == b._den
        return self._num == other._num and self._den == other._den

    def __hash__(self):
        # normalized trace and rational flag are invariant under lifting
        if self._rat:
            return hash(Fraction(self._num[0], self._den))
        return hash(("cyc", self.trace() / euler_phi(self.order)))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return f"CyclotomicScalar({self.order}, {self.to_literal()!r})"

    def __str__(self):
        return self.to_literal()

    def to_literal(self, var: str = "z") -> str:
        """Render in the literal grammar, e.g. ``1/2*z^3 - 2``."""
        terms = []
        for k in range(len(self._num) - 1, -1, -1):
            c = Fraction(self._num[k], self._den)
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            c = abs(c)
            if k == 0:
                body = str(c)
            else:
                mono = var if k == 1 else f"{var}^{k}"
                body = mono if c == 1 else f"{c}*{mono}"
            terms.append((sign, body))
        if not terms:
            return "0"
        out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def _reduce(order: int, conv: list[int]) -> list[int]:
    phi = euler_phi(order)
    cyc = cyclotomic_polynomial(order)
    conv = list(conv)
    for k in range(len(conv) - 1, phi - 1, -1):
        c = conv[k]
        if c:
            base = k - phi
            for j in range(phi):
                if cyc[j]:
                    conv[base + j] -= c * cyc[j]
    return conv[:phi] + [0] * (phi - len(conv[:phi]))


@lru_cache(maxsize=None)
@lru_cache(maxsize=None)
def _zero_tail(order: int) -> tuple:
    return (0,) * (euler_phi(order) - 1)


def _rat_make(order: int, n: int, d: int) -> CyclotomicScalar:
    if d < 0:
        n, d = -n, -d
    g = gcd(n, d)
    if g != 1:
        n //= g
        d //= g
    if n == 0:
        d = 1
    obj = CyclotomicScalar.__new__(CyclotomicScalar)
    obj.order = order
    obj._num = (n,) + _zero_tail(order)
    obj._den = d
    obj._rat = True
    return obj


def zeta(m: int, k: int = 1) -> CyclotomicScalar:
    """zeta_m^k as an element of Q(zeta_m)."""
    row = _power_table(m)[k % m]
    obj = CyclotomicScalar.__new__(CyclotomicScalar)
    obj._set(m, row, 1)
    return obj


def as_scalar(x, order: int = 1) -> CyclotomicScalar:
    if isinstance(x, CyclotomicScalar):
        return x
    return CyclotomicScalar.rational(x, order)


ZERO = CyclotomicScalar.rational(0)
ONE = CyclotomicScalar.rational(1)
