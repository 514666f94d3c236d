"""Dense exact linear algebra over CyclotomicScalar.

Matrices are lists of rows (lists).  Everything is exact Gaussian
elimination; sizes in this package stay in the tens to low hundreds.
"""
from __future__ import annotations

from .scalar import CyclotomicScalar, ONE, ZERO, as_scalar

Matrix = list  # list[list[CyclotomicScalar]]


def zeros(rows: int, cols: int) -> Matrix:
    return [[ZERO] * cols for _ in range(rows)]


def identity(n: int) -> Matrix:
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def to_matrix(rows) -> Matrix:
    return [[as_scalar(x) for x in row] for row in rows]


def transpose(a: Matrix) -> Matrix:
    return [list(col) for col in zip(*a)] if a else []


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if not a:
        return []
    inner = len(b)
    cols = len(b[0]) if b else 0
    out = []
    for row in a:
        acc = [ZERO] * cols
        for k in range(inner):
            x = row[k]
            if x.is_zero():
                continue
            brow = b[k]
            for j in range(cols):
                y = brow[j]
                if not y.is_zero():
                    acc[j] = acc[j] + x * y
        out.append(acc)
    return out


def matvec(a: Matrix, v: list) -> list:
    out = []
    for row in a:
        acc = ZERO
        for x, y in zip(row, v):
            if not x.is_zero() and not y.is_zero():
                acc = acc + x * y
        out.append(acc)
    return out


def add(a: Matrix, b: Matrix) -> Matrix:
    return [[x + y for x, y in zip(r, s)] for r, s in zip(a, b)]


def sub(a: Matrix, b: Matrix) -> Matrix:
    return [[x - y for x, y in zip(r, s)] for r, s in zip(a, b)]


def scale(c, a: Matrix) -> Matrix:
    c = as_scalar(c)
    return [[c * x for x in row] for row in a]


def kron(a: Matrix, b: Matrix) -> Matrix:
    out = []
    for arow in a:
        for brow in b:
            out.append([x * y for x in arow for y in brow])
    return out


def direct_sum(*mats: Matrix) -> Matrix:
    n = sum(len(m) for m in mats)
    out = zeros(n, n)
    off = 0
    for m in mats:
        for i, row in enumerate(m):
            for j, x in enumerate(row):
                out[off + i][off + j] = x
        off += len(m)
    return out


def is_zero_matrix(a: Matrix) -> bool:
    return all(x.is_zero() for row in a for x in row)


def trace(a: Matrix) -> CyclotomicScalar:
    acc = ZERO
    for i in range(len(a)):
        acc = acc + a[i][i]
    return acc


def rref(a: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot columns."""
    m = [list(row) for row in a]
    if not m:
        return m, []
    rows, cols = len(m), len(m[0])
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        p = next((i for i in range(r, rows) if not m[i][c].is_zero()), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        if m[r][c] != ONE:
            inv = m[r][c].inverse()
            m[r] = [x * inv if not x.is_zero() else x for x in m[r]]
        for i in range(rows):
            if i != r and not m[i][c].is_zero():
                f = m[i][c]
                m[i] = [x - f * y if not y.is_zero() else x for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m, pivots


def rank(a: Matrix) -> int:
    if not a or not a[0]:
        return 0
    return len(rref(a)[1])


def nullspace(a: Matrix, ncols: int | None = None) -> list[list]:
    """Basis of {v : a v = 0} as a list of vectors."""
    if ncols is None:
        ncols = len(a[0]) if a else 0
    if not a:
        return [[ONE if i == j else ZERO for i in range(ncols)] for j in range(ncols)]
    red, pivots = rref(a)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [ZERO] * ncols
        v[f] = ONE
        for r, p in enumerate(pivots):
            v[p] = -red[r][f]
        basis.append(v)
    return basis


def row_space_basis(rows: list[list]) -> list[list]:
    if not rows:
        return []
    red, pivots = rref(rows)
    return red[: len(pivots)]


def inverse(a: Matrix) -> Matrix:
    n = len(a)
    aug = [list(row) + idrow for row, idrow in zip(a, identity(n))]
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in red]


def det(a: Matrix) -> CyclotomicScalar:
    m = [list(row) for row in a]
    n = len(m)
    result = ONE
    for c in range(n):
        p = next((i for i in range(c, n) if not m[i][c].is_zero()), None)
        if p is None:
            return ZERO
        if p != c:
            m[c], m[p] = m[p], m[c]
            result = -result
        result = result * m[c][c]
        inv = m[c][c].inverse()
        for i in range(c + 1, n):
            if not m[i][c].is_zero():
                f = m[i][c] * inv
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return result


def solve_in_span(basis: list[list], v: list) -> list | None:
    """Coordinates of v in the span of the given vectors, or None."""
    if not basis:
        return [] if all(x.is_zero() for x in v) else None
    cols = transpose(basis)  # rows = coordinates, cols = basis vectors
    aug = [row + [x] for row, x in zip(cols, v)]
    red, pivots = rref(aug)
    k = len(basis)
    if k in pivots:
        return None
    coords = [ZERO] * k
    for r, p in enumerate(pivots):
        coords[p] = red[r][k]
    return coords


class Echelon:
    """Incrementally built echelon basis; each row is reduced against earlier ones."""

    def __init__(self):
        self.rows: list[tuple[int, list]] = []

    def reduce(self, v: list) -> list:
        v = list(v)
        for p, row in self.rows:
            c = v[p]
            if not c.is_zero():
                v = [x - c * y if not y.is_zero() else x for x, y in zip(v, row)]
        return v

    def add(self, v: list) -> bool:
        """Insert v; return False if it was already in the span."""
        v = self.reduce(v)
        p = next((i for i, x in enumerate(v) if not x.is_zero()), None)
        if p is None:
            return False
        inv = v[p].inverse()
        self.rows.append((p, [x * inv if not x.is_zero() else x for x in v]))
        return True

    def __len__(self):
        return len(self.rows)


def complement_basis(sub: list[list], ambient: list[list]) -> list[list]:
    """Vectors of `ambient` extending a basis of span(sub) to span(sub + ambient)."""
    ech = Echelon()
    for v in sub:
        ech.add(v)
    return [v for v in ambient if ech.add(v)]
