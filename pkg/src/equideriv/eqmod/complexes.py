"""Bounded complexes of block modules (cohomological: d maps position p to p+1)."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .. import linalg as la
from ..errors import ValidationError
from ..poly import (Polynomial, monomials, poly_identity, poly_matmul, poly_matrix_add,
                    poly_matrix_is_zero, poly_matrix_scale, poly_zeros)
from ..rep import Representation, ext_power_rep, sym_power_rep
from .hom import equivariant_maps, flatten_map, is_equivariant_map
from .modules import BlockModule, check_degrees, zero_module


@dataclass(frozen=True, eq=False)
class EquivariantComplex:
    action: Representation
    terms: dict  # position -> BlockModule
    differentials: dict = field(default_factory=dict)  # position p -> matrix C^p -> C^{p+1}

    def term(self, p: int) -> BlockModule:
        return self.terms.get(p) or zero_module(self.action)

    def d(self, p: int) -> list:
        src, tgt = self.term(p), self.term(p + 1)
        m = self.differentials.get(p)
        if m is None:
            return poly_zeros(self.action.dim, tgt.rank, src.rank)
        return m

    def positions(self) -> list[int]:
        return sorted(p for p, M in self.terms.items() if M.rank)

    def validate(self, exhaustive: bool = True) -> None:
        n = self.action.dim
        for p, M in self.terms.items():
            if M.action is not self.action:
                raise ValidationError(f"term at position {p} uses a different variable action")
            M.validate()
        for p, m in self.differentials.items():
            src, tgt = self.term(p), self.term(p + 1)
            check_degrees(m, src.degrees, tgt.degrees, f"differential at position {p}")
            elems = None if exhaustive else self.action.group.generators
            if not is_equivariant_map(m, src, tgt, elems):
                raise ValidationError(f"differential at position {p} is not equivariant")
        for p in self.differentials:
            if p + 1 in self.differentials:
                sq = poly_matmul(self.d(p + 1), self.d(p), n)
                if not poly_matrix_is_zero(sq):
                    raise ValidationError(f"d o d != 0 at position {p}")

    def __repr__(self):
        body = ", ".join(f"{p}: {self.terms[p]!r}" for p in self.positions())
        return f"EquivariantComplex({body})"


def single_term(M: BlockModule, position: int = 0) -> EquivariantComplex:
    return EquivariantComplex(M.action, {position: M}, {})


@dataclass(frozen=True, eq=False)
class ChainMap:
    source: EquivariantComplex
    target: EquivariantComplex
    components: dict  # position -> matrix source^p -> target^p

    def component(self, p: int) -> list:
        m = self.components.get(p)
        if m is None:
            return poly_zeros(self.source.action.dim, self.target.term(p).rank, self.source.term(p).rank)
        return m

    def validate(self) -> None:
        C, D = self.source, self.target
        if C.action is not D.action:
            raise ValidationError("chain map between complexes over different actions")
        n = C.action.dim
        for p, m in self.components.items():
            check_degrees(m, C.term(p).degrees, D.term(p).degrees, f"chain map at position {p}")
            if not is_equivariant_map(m, C.term(p), D.term(p)):
                raise ValidationError(f"chain map component at {p} is not equivariant")
        for p in set(C.positions()) | set(D.positions()):
            lhs = poly_matmul(D.d(p), self.component(p), n)
            rhs = poly_matmul(self.component(p + 1), C.d(p), n)
            if any(x != y for r, s in zip(lhs, rhs) for x, y in zip(r, s)):
                raise ValidationError(f"not a chain map: d f != f d at position {p}")


def identity_map(C: EquivariantComplex) -> ChainMap:
    n = C.action.dim
    return ChainMap(C, C, {p: poly_identity(n, C.term(p).rank) for p in C.positions()})


def zero_complex(action: Representation) -> EquivariantComplex:
    return EquivariantComplex(action, {}, {})


def shift(C: EquivariantComplex, k: int) -> EquivariantComplex:
    """C[k]: term p is C^{p+k}, differential (-1)^k d."""
    sign = -1 if k % 2 else 1
    terms = {p - k: M for p, M in C.terms.items()}
    diffs = {p - k: poly_matrix_scale(sign, m) for p, m in C.differentials.items()}
    return EquivariantComplex(C.action, terms, diffs)


def cone(f: ChainMap) -> EquivariantComplex:
    """Cone^p = C^{p+1} + D^p with d = [[-d_C, 0], [f, d_D]]."""
    f.validate()
    C, D = f.source, f.target
    n = C.action.dim
    positions = {p - 1 for p in C.positions()} | set(D.positions())
    terms = {p: C.term(p + 1).direct_sum(D.term(p)) for p in positions}
    diffs = {}
    for p in positions:
        if p + 1 not in positions:
            continue
        a, b = C.term(p + 1).rank, D.term(p).rank
        a2, b2 = C.term(p + 2).rank, D.term(p + 1).rank
        m = poly_zeros(n, a2 + b2, a + b)
        dc = C.d(p + 1)
        fp = f.component(p + 1)
        dd = D.d(p)
        for r in range(a2):
            for c in range(a):
                m[r][c] = -dc[r][c]
        for r in range(b2):
            for c in range(a):
                m[a2 + r][c] = fp[r][c]
            for c in range(b):
                m[a2 + r][a + c] = dd[r][c]
        diffs[p] = m
    return EquivariantComplex(C.action, terms, diffs)


def koszul_complex(action: Representation) -> EquivariantComplex:
    """Lambda^k(A_1) (x) A(-k) at position -k, k = 0..n+1, contraction differentials.

    The wedge generators transform like the variables x_i themselves, i.e.
    by A_1 = sym_power_rep(action, 1); this is what makes e_i -> x_i
    equivariant.
    """
    n = action.dim
    if n < 1:
        raise ValidationError("Koszul complex needs at least one variable")
    lin = sym_power_rep(action, 1).with_label("A_1")
    terms = {}
    diffs = {}
    for k in range(n + 1):
        rep = ext_power_rep(lin, k).with_label(f"L^{k}")
        terms[-k] = BlockModule(action, ((k, rep),))
    for k in range(1, n + 1):
        src = list(combinations(range(n), k))
        tgt = {S: i for i, S in enumerate(combinations(range(n), k - 1))}
        m = poly_zeros(n, len(tgt), len(src))
        for c, S in enumerate(src):
            for t, s in enumerate(S):
                T = S[:t] + S[t + 1:]
                x = Polynomial.var(n, s)
                m[tgt[T]][c] = x if t % 2 == 0 else -x
        diffs[-k] = m
    return EquivariantComplex(action, terms, diffs)


# graded slices and homology -------------------------------------------------------------

def _sym_cache(action: Representation):
    cache = {}

    def get(d):
        if d not in cache:
            cache[d] = sym_power_rep(action, d)
        return cache[d]
    return get


def slice_basis(M: BlockModule, d: int) -> list:
    """(generator, monomial) pairs spanning the degree-d part, generator-major."""
    out = []
    for gen, a in enumerate(M.degrees):
        for m in monomials(M.nvars, d - a):
            out.append((gen, m))
    return out


def slice_matrix(D: list, src: BlockModule, tgt: BlockModule, d: int) -> list:
    """Matrix over k of the degree-d part of a graded map."""
    sb = slice_basis(src, d)
    tb = {b: i for i, b in enumerate(slice_basis(tgt, d))}
    out = la.zeros(len(tb), len(sb))
    for col, (c, m) in enumerate(sb):
        mono = Polynomial.monomial(m)
        for r in range(tgt.rank):
            f = D[r][c]
            if f.is_zero():
                continue
            for e, coef in (f * mono).terms.items():
                out[tb[(r, e)]][col] = coef
    return out


def slice_action(M: BlockModule, d: int, g: int, sym) -> list:
    mats = []
    for a, rep in M.blocks:
        if d - a < 0:
            continue
        mats.append(la.kron(rep.matrices[g], sym(d - a).matrices[g]))
    return la.direct_sum(*mats) if mats else []


@dataclass(frozen=True)
class HomologyPiece:
    position: int
    dimension: int
    rep: Representation


def graded_homology(C: EquivariantComplex, d: int) -> list[HomologyPiece]:
    if d < 0:
        raise ValidationError("internal degree must be non-negative")
    G = C.action.group
    sym = _sym_cache(C.action)
    out = []
    positions = C.positions()
    for p in positions:
        M = C.term(p)
        dim = len(slice_basis(M, d))
        if dim == 0:
            out.append(HomologyPiece(p, 0, Representation(G, 0, tuple([] for _ in range(G.order)), "0")))
            continue
        outgoing = slice_matrix(C.d(p), M, C.term(p + 1), d)
        incoming = slice_matrix(C.d(p - 1), C.term(p - 1), M, d)
        cycles = la.nullspace(outgoing, dim) if outgoing else la.nullspace([], dim)
        bounds = la.row_space_basis(la.transpose(incoming)) if incoming and incoming[0] else []
        # boundaries lie inside the cycles, so equal dimensions mean no homology
        extra = la.complement_basis(bounds, cycles) if len(cycles) > len(bounds) else []
        k = len(extra)
        mats = []
        for g in range(G.order):
            if k == 0:
                mats.append([])
                continue
            act = slice_action(M, d, g, sym)
            cols = []
            basis = bounds + extra
            for v in extra:
                coords = la.solve_in_span(basis, la.matvec(act, v))
                cols.append(coords[len(bounds):])
            mats.append(la.transpose(cols))
        out.append(HomologyPiece(p, k, Representation(G, k, tuple(mats), f"H^{p}_{d}")))
    return out


def slice_dimension(C: EquivariantComplex, p: int, d: int) -> int:
    return len(slice_basis(C.term(p), d))


# Hom in the homotopy category -------------------------------------------------------------

def hom_complexes(C: EquivariantComplex, D: EquivariantComplex, l: int) -> int:
    """dim H^l of the equivariant Hom complex (chain maps of degree l modulo homotopy)."""
    if C.action is not D.action:
        if C.action.group is not D.action.group or C.action.matrices != D.action.matrices:
            raise ValidationError("complexes over different groups or variable actions")
    n = C.action.dim

    def hom_basis(k):
        pieces = []
        for p in C.positions():
            if D.term(p + k).rank:
                for b in equivariant_maps(C.term(p), D.term(p + k)):
                    pieces.append({p: b})
        return pieces

    def delta(f: dict, k: int) -> dict:
        # (delta f)^p = d_D f^p - (-1)^k f^{p+1} d_C
        out = {}
        sign = -1 if k % 2 else 1
        for p in C.positions():
            tgt = D.term(p + k + 1)
            if not tgt.rank:
                continue
            acc = poly_zeros(n, tgt.rank, C.term(p).rank)
            if p in f:
                acc = poly_matrix_add(acc, poly_matmul(D.d(p + k), f[p], n))
            if p + 1 in f:
                acc = poly_matrix_add(acc, poly_matrix_scale(-sign, poly_matmul(f[p + 1], C.d(p), n)))
            out[p] = acc
        return out

    def flat(f: dict, k: int) -> list:
        vec = []
        for p in C.positions():
            tgt = D.term(p + k)
            if tgt.rank:
                vec.extend(flatten_map(f[p], C.term(p), tgt))
        return vec

    def delta_rank(k: int, basis: list) -> int:
        if not basis:
            return 0
        rows = [flat(delta(b, k), k + 1) for b in basis]
        if not rows[0]:
            return 0
        return la.rank(rows)

    basis_l = hom_basis(l)
    basis_prev = hom_basis(l - 1)
    return len(basis_l) - delta_rank(l, basis_l) - delta_rank(l - 1, basis_prev)
