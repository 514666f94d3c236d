"""Descent of equivariant objects along X -> X/G for linear actions.

X is affine space (the vector space the variable action acts on) or its
projectivization.  For each subgroup H, considered up to conjugacy, the
fixed locus X^H is a linear subspace in the affine case.  In the
projective case it is a disjoint union of projectivized eigenspaces V_chi,
one for each linear character chi of H.  An object descends iff at every
such stratum the fiber representation of H is trivial-isotypic.

``invariant_oracle`` is an independent check.  It never looks at strata.
Instead it asks whether the invariant sections generate the module
degree by degree.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import linalg as la
from .errors import InternalConsistencyError, ValidationError
from .group import Subgroup, linear_characters, subgroups_up_to_conjugacy
from .poly import Polynomial, monomials
from .rep import (Representation, character, direct_sum_rep, inner_product, is_trivial_isotypic,
                  linear_character_rep, restrict_rep, tensor_rep, trivial_character, trivial_rep)
from .scalar import ONE, ZERO, zeta
from .eqmod.complexes import EquivariantComplex, _sym_cache, slice_action, slice_basis
from .eqmod.hom import is_equivariant_map
from .eqmod.modules import BlockModule

AFFINE = "affine"
PROJECTIVE = "projective"
MODES = (AFFINE, PROJECTIVE)


def _check_mode(mode: str) -> None:
    if mode not in MODES:
        raise ValidationError(f"space must be 'affine' or 'projective', got {mode!r}")


def _char_scalar(value):
    k, e = value
    return ONE if k % e == 0 else zeta(e, k)


@dataclass(frozen=True, eq=False)
class FixedStratum:
    subgroup: Subgroup
    mode: str
    basis: tuple  # spanning vectors of X^H (affine) or of V_chi (projective)
    character: dict | None = None  # element -> (k, e), projective mode only
    character_index: int = 0  # position in linear_characters(H)

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def is_empty(self) -> bool:
        # the origin is always fixed, so only projective strata can be empty
        return self.mode == PROJECTIVE and not self.basis

    def describe(self) -> dict:
        out = {"mode": self.mode, "dimension": self.dimension}
        if self.mode == PROJECTIVE:
            out["character"] = _character_name(self.subgroup, self.character_index)
            out["character_values"] = _character_values(self.subgroup, self.character)
        return out


def _character_name(H: Subgroup, index: int) -> str:
    return "triv" if index == 0 else f"chi_{index}"


def _character_values(H: Subgroup, chi: dict) -> dict:
    return {str(g): _char_scalar(chi[g]).to_literal() for g in H.members}


def _eigenspace(action: Representation, H: Subgroup, chi: dict | None) -> list:
    n = action.dim
    rows = []
    for h in H.generators():
        m = action.matrices[h]
        c = ONE if chi is None else _char_scalar(chi[h])
        for i in range(n):
            rows.append([m[i][j] - (c if i == j else ZERO) for j in range(n)])
    rows = [r for r in rows if any(not x.is_zero() for x in r)]
    return la.nullspace(rows, n)


def fixed_strata(action: Representation, H: Subgroup, mode: str = AFFINE) -> list[FixedStratum]:
    """Fixed subspace (affine) or the nonzero character eigenspaces (projective)."""
    _check_mode(mode)
    if H.parent is not action.group:
        raise ValidationError("subgroup does not belong to the action's group")
    if mode == AFFINE:
        return [FixedStratum(H, AFFINE, tuple(tuple(v) for v in _eigenspace(action, H, None)))]
    out = []
    for k, chi in enumerate(linear_characters(H)):
        basis = _eigenspace(action, H, chi)
        if basis:
            out.append(FixedStratum(H, PROJECTIVE, tuple(tuple(v) for v in basis), chi, k))
    total = sum(s.dimension for s in out)
    if total > action.dim:
        raise InternalConsistencyError("character eigenspaces exceed the ambient dimension")
    return out


def _local_character_rep(H: Subgroup, chi: dict, power: int) -> Representation:
    values = {}
    for i, g in enumerate(H.members):
        k, e = chi[g]
        values[i] = ((k * power) % e, e)
    return linear_character_rep(H.as_group, values, f"chi^{power}")


def _block_fiber(V: Representation, shift: int, stratum: FixedStratum) -> Representation:
    res = restrict_rep(V, stratum.subgroup)
    if stratum.mode == PROJECTIVE and shift % max(1, stratum.subgroup.exponent()):
        return tensor_rep(res, _local_character_rep(stratum.subgroup, stratum.character, shift))
    return res


def fiber_rep(E: BlockModule, stratum: FixedStratum) -> Representation:
    """The H-representation on the fiber of E at a point of the stratum.

    Affine: sum of Res V_a.  Projective at chi: sum of Res V_a (x) chi^a.
    An empty stratum yields the trivial representation by convention.
    """
    H = stratum.subgroup
    if E.group is not H.parent:
        raise ValidationError("module and stratum live over different groups")
    if stratum.is_empty() or not E.blocks:
        return trivial_rep(H.as_group, E.rank)
    pieces = [_block_fiber(V, a, stratum) for a, V in E.blocks]
    return direct_sum_rep(*pieces, label="fiber") if len(pieces) > 1 else pieces[0]


@dataclass(frozen=True)
class Witness:
    subgroup: tuple
    stratum: dict
    block: int
    component: str
    multiplicity: int
    position: int | None = None
    nontrivial_dimension: int = 0

    def as_dict(self) -> dict:
        out = {"subgroup": list(self.subgroup), "stratum": self.stratum, "block": self.block,
               "component": self.component, "multiplicity": self.multiplicity}
        if self.position is not None:
            out["position"] = self.position
        if self.component == "nonlinear":
            out["nontrivial_dimension"] = self.nontrivial_dimension
        return out


@dataclass(frozen=True)
class DescentCertificate:
    verdict: str  # "descends" or "fails"
    mode: str
    witness: Witness | None = None
    checked: int = 0  # number of (subgroup, stratum, block) triples examined

    @property
    def descends(self) -> bool:
        return self.verdict == "descends"

    def as_dict(self) -> dict:
        out = {"verdict": self.verdict, "space": self.mode, "checked": self.checked}
        if self.witness is not None:
            out["witness"] = self.witness.as_dict()
        return out


def _name_component(rep: Representation, H: Subgroup, irreps) -> tuple[str, int, int]:
    """Label one nontrivial irreducible constituent of a non-trivial-isotypic rep of H."""
    chi = character(rep)
    Hg = rep.group
    if irreps is not None and H.order == H.parent.order:
        for V in irreps:
            if V.dim == 0 or is_trivial_isotypic(V):
                continue
            m = inner_product(chi, character(restrict_rep(V, H)))
            if not m.is_zero():
                return V.label, int(m.to_fraction()), V.dim * int(m.to_fraction())
    nontrivial = rep.dim - int(inner_product(chi, trivial_character(Hg)).to_fraction())
    for k, lam in enumerate(linear_characters(H)):
        if k == 0:
            continue
        m = inner_product(chi, character(_local_character_rep(H, lam, 1)))
        if not m.is_zero():
            return f"chi_{k}", int(m.to_fraction()), nontrivial
    return "nonlinear", 1, nontrivial


def _blocks_in_order(E: BlockModule):
    return sorted(((a, idx, V) for idx, (a, V) in enumerate(E.blocks)), key=lambda t: (t[0], t[1]))


def descends(E, mode: str = AFFINE, irreps=None) -> DescentCertificate:
    """Trivial-isotypic fiber test over every nontrivial subgroup and stratum.

    Subgroups come one per conjugacy class, ordered by (order, members).
    Strata follow the linear-character order with the trivial one first.
    Blocks go by ascending shift.  A complex is checked term by term, in
    increasing position.  The first offending block is returned as the
    witness.
    """
    _check_mode(mode)
    if isinstance(E, EquivariantComplex):
        terms = [(p, E.term(p)) for p in E.positions()]
        action = E.action
    elif isinstance(E, BlockModule):
        E.validate()
        terms = [(None, E)]
        action = E.action
    else:
        raise ValidationError("descends expects a BlockModule or an EquivariantComplex")
    G = action.group
    checked = 0
    subgroups = sorted(subgroups_up_to_conjugacy(G), key=lambda S: (S.order, S.members))
    for H in subgroups:
        if H.is_trivial():
            continue
        for stratum in fixed_strata(action, H, mode):
            if stratum.is_empty():
                continue
            for position, M in terms:
                for a, _, V in _blocks_in_order(M):
                    checked += 1
                    fib = _block_fiber(V, a, stratum)
                    if is_trivial_isotypic(fib):
                        continue
                    name, mult, nontriv = _name_component(fib, H, irreps)
                    w = Witness(tuple(H.members), stratum.describe(), a, name, mult, position, nontriv)
                    return DescentCertificate("fails", mode, w, checked)
    return DescentCertificate("descends", mode, None, checked)


def witness_fiber(E, certificate: DescentCertificate) -> Representation:
    """Recompute the fiber representation named by a failure witness."""
    w = certificate.witness
    if w is None:
        raise ValidationError("certificate has no witness")
    M = E.term(w.position) if isinstance(E, EquivariantComplex) else E
    action = M.action
    H = Subgroup(action.group, w.subgroup)
    strata = fixed_strata(action, H, certificate.mode)
    if certificate.mode == PROJECTIVE:
        strata = [s for s in strata if _character_name(H, s.character_index) == w.stratum["character"]]
    stratum = strata[0]
    pieces = [_block_fiber(V, a, stratum) for a, V in M.blocks if a == w.block]
    return direct_sum_rep(*pieces) if len(pieces) > 1 else pieces[0]


# morphisms ----------------------------------------------------------------------------

def is_invariant_polynomial(action: Representation, f: Polynomial) -> bool:
    from .rep import act_on_polynomial
    return all(act_on_polynomial(action, g, f) == f for g in action.group.generators)


def descend_morphism(phi: list, S: BlockModule, T: BlockModule, irreps=None) -> list:
    """Verify that an equivariant map between descending modules has invariant entries.

    Affine mode only.  The map is returned unchanged, since it already is
    the pullback of its invariant-entry descent.
    """
    for name, M in (("source", S), ("target", T)):
        cert = descends(M, AFFINE, irreps)
        if not cert.descends:
            raise ValidationError(f"{name} module does not descend")
    if len(phi) != T.rank or any(len(row) != S.rank for row in phi):
        raise ValidationError("morphism has the wrong shape")
    if not is_equivariant_map(phi, S, T):
        raise ValidationError("morphism is not equivariant")
    for r, row in enumerate(phi):
        for c, f in enumerate(row):
            if not f.is_zero() and not is_invariant_polynomial(S.action, f):
                raise InternalConsistencyError(
                    f"entry ({r},{c}) of an equivariant map between descending modules is not invariant")
    return phi


# invariant oracle -----------------------------------------------------------------------

@dataclass(frozen=True)
class OracleDegree:
    degree: int
    dimension: int  # dim E_d
    invariant_dimension: int  # dim of E_d^G (only counted degrees in projective mode)
    span_dimension: int  # dim of (A . E^G)_d

    @property
    def deficit(self) -> int:
        return self.dimension - self.span_dimension

    def as_dict(self) -> dict:
        return {"degree": self.degree, "dimension": self.dimension,
                "invariants": self.invariant_dimension, "span": self.span_dimension,
                "deficit": self.deficit}


@dataclass(frozen=True)
class OracleReport:
    mode: str
    bound: int
    degrees: tuple
    window: tuple  # degrees whose deficit decides the verdict

    @property
    def first_deficit(self) -> int | None:
        for row in self.degrees:
            if row.degree in self.window and row.deficit:
                return row.degree
        return None

    @property
    def consistent(self) -> bool:
        return self.first_deficit is None

    def as_dict(self) -> dict:
        d = self.first_deficit
        summary = f"consistent up to {self.bound}" if d is None else f"deficit at degree {d}"
        return {"space": self.mode, "degree_bound": self.bound, "window": list(self.window),
                "summary": summary, "degrees": [r.as_dict() for r in self.degrees]}


def default_degree_bound(E: BlockModule) -> int:
    top = max((a for a, _ in E.blocks), default=0)
    return 2 * top + E.group.order


def _invariants(M: BlockModule, d: int, sym) -> list:
    basis = slice_basis(M, d)
    if not basis:
        return []
    G = M.group
    acc = None
    for g in range(G.order):
        m = slice_action(M, d, g, sym)
        acc = m if acc is None else la.add(acc, m)
    # columns of the Reynolds operator span the invariants
    return la.row_space_basis(la.transpose(acc))


def invariant_oracle(E: BlockModule, bound: int | None = None, mode: str = AFFINE) -> OracleReport:
    """Compare (A . E^G)_d with E_d for d <= bound.

    Affine: every degree counts and any deficit certifies non-descent.
    Projective: only invariants in degrees divisible by |G| are used (these
    are the sections that survive localization at invariant forms), and
    the verdict is read off the top window (bound - |G|, bound], where low
    degree gaps caused by the grading are no longer visible.
    """
    _check_mode(mode)
    E.validate()
    if bound is None:
        bound = default_degree_bound(E)
    if bound < 0:
        raise ValidationError("degree bound must be non-negative")
    G = E.group
    n = E.nvars
    step = G.order if mode == PROJECTIVE else 1
    sym = _sym_cache(E.action)
    inv_by_degree = {}
    rows = []
    for d in range(bound + 1):
        target = {b: i for i, b in enumerate(slice_basis(E, d))}
        inv = _invariants(E, d, sym) if d % step == 0 else []
        inv_by_degree[d] = inv
        ech = la.Echelon()
        for e in range(d + 1):
            src = slice_basis(E, e)
            for v in inv_by_degree[e]:
                for m in monomials(n, d - e):
                    w = [ZERO] * len(target)
                    for (gen, mono), x in zip(src, v):
                        if not x.is_zero():
                            w[target[(gen, tuple(p + q for p, q in zip(mono, m)))]] = x
                    ech.add(w)
                    if len(ech) == len(target):
                        break
        rows.append(OracleDegree(d, len(target), len(inv), len(ech)))
    if mode == AFFINE:
        window = tuple(range(bound + 1))
    else:
        window = tuple(range(max(0, bound - G.order + 1), bound + 1))
    return OracleReport(mode, bound, tuple(rows), window)
