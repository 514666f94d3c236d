"""Graded equivariant free modules over A = k[x0..xn].

A BlockModule is sum_a V_a (x) A(-a): generators come block by block, each
block carrying the constant matrices of its representation.  A raw module
has arbitrary generator degrees and a polynomial action matrix per group
element; ``normalize_module`` puts it in block form.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .. import linalg as la
from ..errors import InternalConsistencyError, ValidationError
from ..poly import (Polynomial, constant_matrix, poly_det, poly_identity, poly_matmul,
                    poly_matrix_equal, poly_zeros)
from ..rep import Representation, act_on_polynomial
from ..scalar import ZERO


@dataclass(frozen=True, eq=False)
class BlockModule:
    action: Representation  # linear action on the variables
    blocks: tuple  # ((shift, Representation), ...)

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple((int(a), r) for a, r in self.blocks))

    @property
    def group(self):
        return self.action.group

    @property
    def nvars(self) -> int:
        return self.action.dim

    @property
    def rank(self) -> int:
        return sum(r.dim for _, r in self.blocks)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(a for a, r in self.blocks for _ in range(r.dim))

    @cached_property
    def offsets(self) -> tuple[int, ...]:
        out, k = [], 0
        for _, r in self.blocks:
            out.append(k)
            k += r.dim
        return tuple(out)

    def action_matrix(self, g: int) -> list:
        """Constant block-diagonal matrix of g on the generators."""
        if not self.blocks:
            return []
        return la.direct_sum(*(r.matrices[g] for _, r in self.blocks))

    def validate(self) -> None:
        for a, r in self.blocks:
            if a < 0:
                raise ValidationError("block shifts must be non-negative")
            if r.group is not self.group:
                raise ValidationError(f"block rep {r.label} lives on a different group")

    def direct_sum(self, other: "BlockModule") -> "BlockModule":
        if other.action is not self.action:
            raise ValidationError("direct sum of modules over different actions")
        return BlockModule(self.action, self.blocks + other.blocks)

    def describe(self) -> list:
        return [{"shift": a, "rep": r.label, "dim": r.dim} for a, r in self.blocks]

    def __repr__(self):
        return "BlockModule(" + " + ".join(f"{r.label}(x)A(-{a})" for a, r in self.blocks) + ")"


def zero_module(action: Representation) -> BlockModule:
    return BlockModule(action, ())


@dataclass(frozen=True, eq=False)
class RawEquivariantModule:
    action: Representation
    degrees: tuple  # generator degrees
    matrices: tuple  # matrices[g][j][i]: coefficient of e_j in g . e_i

    @property
    def group(self):
        return self.action.group

    @property
    def nvars(self) -> int:
        return self.action.dim

    @property
    def rank(self) -> int:
        return len(self.degrees)

    def validate(self, exhaustive: bool = False) -> None:
        G, n, r = self.group, self.nvars, self.rank
        if len(self.matrices) != G.order:
            raise ValidationError("raw module needs one action matrix per group element")
        if any(d < 0 for d in self.degrees):
            raise ValidationError("generator degrees must be non-negative")
        for g, m in enumerate(self.matrices):
            if len(m) != r or any(len(row) != r for row in m):
                raise ValidationError(f"action matrix of element {g} has the wrong shape")
            check_degrees(m, self.degrees, self.degrees, f"action of element {g}")
        if not poly_matrix_equal(self.matrices[G.identity], poly_identity(n, r)):
            raise ValidationError("identity element does not act trivially")
        second = range(G.order) if exhaustive else G.generators
        for a in range(G.order):
            for b in second:
                # R(ab) = R(a) . (a . R(b))
                lhs = self.matrices[G.mul(a, b)]
                rhs = poly_matmul(self.matrices[a], act_on_matrix(self.action, a, self.matrices[b]), n)
                if not poly_matrix_equal(lhs, rhs):
                    raise ValidationError(f"action is not a homomorphism at elements ({a}, {b})")


def check_degrees(m: list, source_degrees, target_degrees, what: str = "matrix") -> None:
    """Entry (j, i) must be homogeneous of degree src[i] - tgt[j] (zero if negative)."""
    if len(m) != len(target_degrees) or any(len(row) != len(source_degrees) for row in m):
        raise ValidationError(f"{what}: shape {len(m)}x{len(m[0]) if m else 0} does not match "
                              f"{len(target_degrees)}x{len(source_degrees)}")
    for j, row in enumerate(m):
        for i, f in enumerate(row):
            if f.is_zero():
                continue
            d = source_degrees[i] - target_degrees[j]
            if d < 0 or not f.is_homogeneous(d):
                raise ValidationError(f"{what}: entry ({j},{i}) is not homogeneous of degree {d}")


def act_on_matrix(action: Representation, g: int, m: list) -> list:
    return [[act_on_polynomial(action, g, f) if not f.is_zero() else f for f in row] for row in m]


def block_module_as_raw(M: BlockModule) -> RawEquivariantModule:
    mats = tuple(constant_matrix(M.nvars, M.action_matrix(g)) for g in range(M.group.order))
    return RawEquivariantModule(M.action, M.degrees, mats)


# normalization ---------------------------------------------------------------------

def normalize_module(M: RawEquivariantModule, validate: bool = True):
    """Return (BlockModule, P) with R(g) (g.P) = P B(g) for every g.

    Columns of P are the new generators written in the old ones.  Works by
    descending induction on the top generator degree: the quotient by the
    lower-degree generators is split equivariantly by averaging the naive
    section over G, which already lands in the top degree.
    """
    if validate:
        M.validate()
    G, n, r = M.group, M.nvars, M.rank
    order = sorted(range(r), key=lambda i: (M.degrees[i], i))
    P = poly_zeros(n, r, r)
    blocks = []
    remaining = list(order)
    while remaining:
        top = max(M.degrees[i] for i in remaining)
        I = [i for i in remaining if M.degrees[i] == top]
        # rho_top(g) = R(g)[I, I], constant since degrees agree
        rho_top = []
        for g in range(G.order):
            rho_top.append([[_constant(M.matrices[g][j][i]) for i in I] for j in I])
        rep = Representation(G, len(I), tuple(rho_top), f"V_{top}")
        rep.validate()
        # s(e_i) = 1/|G| sum_g R(g)[:, I] R(g^-1)[I, i]
        for col, i in enumerate(I):
            acc = [Polynomial.zero(n) for _ in range(r)]
            for g in range(G.order):
                coeffs = rho_top[G.inv(g)]
                for kcol, k in enumerate(I):
                    c = coeffs[kcol][col]
                    if c.is_zero():
                        continue
                    for j in range(r):
                        f = M.matrices[g][j][k]
                        if not f.is_zero():
                            acc[j] = acc[j] + f * c
            for j in range(r):
                P[j][i] = acc[j] * Fraction(1, G.order)
        blocks.append((top, rep, I))
        remaining = [i for i in remaining if M.degrees[i] != top]
    blocks.reverse()
    perm = [i for _, _, I in blocks for i in I]
    P = [[P[j][i] for i in perm] for j in range(r)]
    B = BlockModule(M.action, tuple((a, rep) for a, rep, _ in blocks))
    check_normal_form(M, B, P)
    return B, P


def _constant(f: Polynomial):
    if not f.is_constant():
        raise ValidationError("action between generators of equal degree must be constant")
    return f.constant_term() if not f.is_zero() else ZERO


def check_normal_form(M: RawEquivariantModule, B: BlockModule, P: list) -> None:
    n = M.nvars
    det = poly_det(P, n)
    if det.is_zero() or not det.is_constant():
        raise InternalConsistencyError("change of basis is not invertible over A")
    check_degrees(P, B.degrees, M.degrees, "change of basis")
    for g in range(M.group.order):
        lhs = poly_matmul(M.matrices[g], act_on_matrix(M.action, g, P), n)
        rhs = poly_matmul(P, constant_matrix(n, B.action_matrix(g)), n)
        if not poly_matrix_equal(lhs, rhs):
            raise InternalConsistencyError(f"normal form fails to intertwine at element {g}")
