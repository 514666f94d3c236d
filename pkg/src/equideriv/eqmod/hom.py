"""Equivariant graded maps between block modules, and Hom in the homotopy category."""
from __future__ import annotations

from dataclasses import dataclass

from .. import linalg as la
from ..errors import ValidationError
from ..poly import Polynomial, monomials, poly_matmul, poly_zeros
from ..rep import (Representation, act_on_polynomial, character, inner_product, is_irreducible,
                   sym_power_character)
from ..scalar import ZERO
from .modules import BlockModule


def _ambient(S: BlockModule, T: BlockModule):
    """Unknown slots (row, col, monomial) of a degree-0 graded map S -> T."""
    slots = []
    n = S.nvars
    for r, dt in enumerate(T.degrees):
        for c, ds in enumerate(S.degrees):
            d = ds - dt
            for m in monomials(n, d):
                slots.append((r, c, m))
    return slots


def flatten_map(D: list, S: BlockModule, T: BlockModule) -> list:
    """Coefficient vector of a graded map in the ambient slot order."""
    out = []
    n = S.nvars
    for r, dt in enumerate(T.degrees):
        for c, ds in enumerate(S.degrees):
            d = ds - dt
            if d < 0:
                continue
            f = D[r][c]
            if f.is_zero():
                out.extend([ZERO] * len(monomials(n, d)))
            else:
                out.extend(f.coefficient_vector(d))
    return out


def unflatten_map(vec: list, S: BlockModule, T: BlockModule) -> list:
    D = poly_zeros(S.nvars, T.rank, S.rank)
    terms: dict = {}
    for (r, c, m), x in zip(_ambient(S, T), vec):
        if not x.is_zero():
            terms.setdefault((r, c), {})[m] = x
    for (r, c), t in terms.items():
        D[r][c] = Polynomial(S.nvars, t)
    return D


def equivariant_maps(S: BlockModule, T: BlockModule, elements=None) -> list:
    """Basis of G-equivariant degree-0 graded maps S -> T (brute force).

    Solves rho_T(g) (g.D) = D rho_S(g) coefficientwise, with g.D computed by
    substituting the variables.  ``elements`` defaults to the group's
    generators, which is equivalent to imposing it for every g.
    """
    if S.action is not T.action:
        raise ValidationError("modules over different variable actions")
    slots = _ambient(S, T)
    if not slots:
        return []
    G = S.group
    elements = list(G.generators) if elements is None else list(elements)
    index = {s: k for k, s in enumerate(slots)}
    image_cache: dict = {}
    columns = []
    for (r, c, m) in slots:
        col = []
        for g in elements:
            key = (g, m)
            if key not in image_cache:
                image_cache[key] = act_on_polynomial(S.action, g, Polynomial.monomial(m))
            gm = image_cache[key]
            rhoT = T.action_matrix(g)
            rhoS = S.action_matrix(g)
            # rho_T(g) (g.E_rc m) - E_rc m rho_S(g)
            eq: dict = {}
            for rr in range(T.rank):
                a = rhoT[rr][r]
                if a.is_zero():
                    continue
                for mm, coef in gm.terms.items():
                    k = (rr, c, mm)
                    eq[k] = eq.get(k, ZERO) + a * coef
            for cc in range(S.rank):
                b = rhoS[c][cc]
                if b.is_zero():
                    continue
                k = (r, cc, m)
                eq[k] = eq.get(k, ZERO) - b
            vec = [ZERO] * len(slots)
            for k, v in eq.items():
                vec[index[k]] = v
            col.extend(vec)
        columns.append(col)
    system = la.transpose(columns)
    system = [row for row in system if any(not x.is_zero() for x in row)]
    basis = la.nullspace(system, len(slots))
    return [unflatten_map(v, S, T) for v in basis]


def is_equivariant_map(D: list, S: BlockModule, T: BlockModule, elements=None) -> bool:
    G = S.group
    n = S.nvars
    for g in (range(G.order) if elements is None else elements):
        gD = [[act_on_polynomial(S.action, g, f) if not f.is_zero() else f for f in row] for row in D]
        lhs = poly_matmul([[Polynomial.constant(n, x) for x in row] for row in T.action_matrix(g)], gD, n)
        rhs = poly_matmul(D, [[Polynomial.constant(n, x) for x in row] for row in S.action_matrix(g)], n)
        if any(x != y for r1, r2 in zip(lhs, rhs) for x, y in zip(r1, r2)):
            return False
    return True


@dataclass(frozen=True)
class HomResult:
    dimension: int
    basis: tuple = ()


def hom_generators(V: Representation, i: int, W: Representation, j: int,
                   action: Representation, with_basis: bool = False) -> HomResult:
    """dim Hom(V (x) A(-i), W (x) A(-j)) from the case table.

    0 if j > i; [V = W] if i = j; <chi_V, chi_{A_{i-j}} chi_W> if j < i.
    With ``with_basis`` an explicit basis is attached from the brute-force
    solver.
    """
    if V.group is not action.group or W.group is not action.group:
        raise ValidationError("representations and action must share the group")
    if i < 0 or j < 0:
        raise ValidationError("shifts must be non-negative")
    for r in (V, W):
        if not is_irreducible(r):
            raise ValidationError(f"{r.label or 'rep'} is not irreducible")
    chiV, chiW = character(V), character(W)
    if j > i:
        dim = 0
    elif i == j:
        dim = 1 if inner_product(chiV, chiW) == 1 else 0
    else:
        m = inner_product(chiV, sym_power_character(action, i - j) * chiW)
        dim = int(m.to_fraction())
    basis = ()
    if with_basis:
        basis = tuple(equivariant_maps(BlockModule(action, ((i, V),)), BlockModule(action, ((j, W),))))
    return HomResult(dim, basis)


def hom_generators_bruteforce(V: Representation, i: int, W: Representation, j: int,
                              action: Representation, elements=None) -> int:
    return len(equivariant_maps(BlockModule(action, ((i, V),)), BlockModule(action, ((j, W),)), elements))
