"""Sparse polynomials in x0..xn over CyclotomicScalar, and polynomial matrices."""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations_with_replacement

from .scalar import CyclotomicScalar, ONE, ZERO, as_scalar


@lru_cache(maxsize=None)
def monomials(nvars: int, d: int) -> tuple[tuple[int, ...], ...]:
    """Exponent vectors of degree d, x0^d first (descending lex order)."""
    if d < 0:
        return ()
    if nvars == 0:
        return ((),) if d == 0 else ()
    out = []
    for combo in combinations_with_replacement(range(nvars), d):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    out.sort(reverse=True)
    return tuple(out)


@lru_cache(maxsize=None)
def monomial_index(nvars: int, d: int) -> dict:
    return {m: i for i, m in enumerate(monomials(nvars, d))}


class Polynomial:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        clean = {}
        if terms:
            for e, c in terms.items():
                c = as_scalar(c)
                if not c.is_zero():
                    clean[tuple(e)] = c
        self.terms = clean

    @classmethod
    def _raw(cls, nvars, terms):
        p = cls.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        return p

    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls._raw(nvars, {})

    @classmethod
    def constant(cls, nvars: int, c) -> "Polynomial":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, nvars: int, i: int) -> "Polynomial":
        e = [0] * nvars
        e[i] = 1
        return cls._raw(nvars, {tuple(e): ONE})

    @classmethod
    def monomial(cls, exps, c=1) -> "Polynomial":
        return cls(len(exps), {tuple(exps): c})

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> set[int]:
        return {sum(e) for e in self.terms}

    def is_homogeneous(self, d: int) -> bool:
        return all(sum(e) == d for e in self.terms)

    def homogeneous_part(self, d: int) -> "Polynomial":
        return Polynomial._raw(self.nvars, {e: c for e, c in self.terms.items() if sum(e) == d})

    def constant_term(self) -> CyclotomicScalar:
        return self.terms.get((0,) * self.nvars, ZERO)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def coefficient_vector(self, d: int) -> list:
        idx = monomial_index(self.nvars, d)
        v = [ZERO] * len(idx)
        for e, c in self.terms.items():
            if sum(e) != d:
                raise ValueError(f"polynomial is not homogeneous of degree {d}")
            v[idx[e]] = c
        return v

    @classmethod
    def from_vector(cls, nvars: int, d: int, vec) -> "Polynomial":
        return cls(nvars, {m: c for m, c in zip(monomials(nvars, d), vec)})

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            return other
        return Polynomial.constant(self.nvars, other)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e)
            if s is None:
                out[e] = c
            else:
                s = s + c
                if s.is_zero():
                    del out[e]
                else:
                    out[e] = s
        return Polynomial._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            c = as_scalar(other)
            if c.is_zero():
                return Polynomial.zero(self.nvars)
            return Polynomial._raw(self.nvars, {e: c * v for e, v in self.terms.items()})
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = c1 * c2
                s = out.get(e)
                out[e] = v if s is None else s + v
        return Polynomial._raw(self.nvars, {e: c for e, c in out.items() if not c.is_zero()})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = Polynomial.constant(self.nvars, 1)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(self.nvars, other)
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def substitute_linear(self, images: list["Polynomial"]) -> "Polynomial":
        """Replace x_i by images[i] (each a polynomial)."""
        out = Polynomial.zero(self.nvars)
        powers: dict = {}
        for e, c in self.terms.items():
            term = Polynomial.constant(self.nvars, c)
            for i, k in enumerate(e):
                if k:
                    key = (i, k)
                    if key not in powers:
                        powers[key] = images[i] ** k
                    term = term * powers[key]
            out = out + term
        return out

    def to_literal(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=lambda e: (-sum(e), tuple(-x for x in e))):
            c = self.terms[e]
            mono = "*".join(f"x{i}" if k == 1 else f"x{i}^{k}" for i, k in enumerate(e) if k)
            lit = c.to_literal()
            sign = ""
            if lit.startswith("-") and " " not in lit:
                sign, lit = "-", lit[1:]
            if not mono:
                parts.append(sign + lit)
            elif lit == "1":
                parts.append(sign + mono)
            elif " " not in lit:
                parts.append(f"{sign}{lit}*{mono}")
            else:
                parts.append(f"{sign}({lit})*{mono}")
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    def __repr__(self):
        return f"Polynomial({self.to_literal()!r})"

    __str__ = to_literal


# polynomial matrices -----------------------------------------------------------

def poly_zeros(nvars: int, rows: int, cols: int) -> list:
    return [[Polynomial.zero(nvars) for _ in range(cols)] for _ in range(rows)]


def poly_identity(nvars: int, n: int) -> list:
    return [[Polynomial.constant(nvars, 1) if i == j else Polynomial.zero(nvars) for j in range(n)]
            for i in range(n)]


def constant_matrix(nvars: int, m) -> list:
    return [[Polynomial.constant(nvars, x) for x in row] for row in m]


def poly_matmul(a: list, b: list, nvars: int) -> list:
    inner = len(b)
    cols = len(b[0]) if b else 0
    out = []
    for row in a:
        acc = [Polynomial.zero(nvars) for _ in range(cols)]
        for k in range(inner):
            x = row[k]
            if x.is_zero():
                continue
            for j in range(cols):
                y = b[k][j]
                if not y.is_zero():
                    acc[j] = acc[j] + x * y
        out.append(acc)
    return out


def poly_matrix_equal(a: list, b: list) -> bool:
    return len(a) == len(b) and all(
        len(r) == len(s) and all(x == y for x, y in zip(r, s)) for r, s in zip(a, b))


def poly_matrix_is_zero(a: list) -> bool:
    return all(x.is_zero() for row in a for x in row)


def poly_matrix_add(a: list, b: list) -> list:
    return [[x + y for x, y in zip(r, s)] for r, s in zip(a, b)]


def poly_matrix_scale(c, a: list) -> list:
    return [[x * c for x in row] for row in a]


def poly_det(a: list, nvars: int) -> Polynomial:
    """Determinant by cofactor expansion; matrices here are at most ~6x6."""
    n = len(a)
    if n == 0:
        return Polynomial.constant(nvars, 1)
    if n == 1:
        return a[0][0]
    total = Polynomial.zero(nvars)
    for j in range(n):
        if a[0][j].is_zero():
            continue
        minor = [row[:j] + row[j + 1:] for row in a[1:]]
        term = a[0][j] * poly_det(minor, nvars)
        total = total + term if j % 2 == 0 else total - term
    return total


def poly_inverse_unimodular(a: list, nvars: int) -> list:
    """Inverse of a polynomial matrix whose determinant is a nonzero constant."""
    n = len(a)
    d = poly_det(a, nvars)
    if d.is_zero() or not d.is_constant():
        raise ValueError("matrix is not invertible over the polynomial ring")
    dinv = d.constant_term().inverse()
    out = poly_zeros(nvars, n, n)
    for i in range(n):
        for j in range(n):
            minor = [row[:j] + row[j + 1:] for k, row in enumerate(a) if k != i]
            cof = poly_det(minor, nvars)
            if (i + j) % 2:
                cof = -cof
            out[j][i] = cof * dinv
    return out
