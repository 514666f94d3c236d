"""Representations of finite groups over cyclotomic fields.

A representation stores one matrix per group element (indexed like the
group's element table).  Characters are class functions stored per
conjugacy class.  Isotypic projectors are the usual character-weighted
group averages.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from fractions import Fraction
from itertools import combinations
from math import comb

from . import linalg as la
from .errors import ValidationError
from .group import FiniteGroup, Subgroup
from .poly import Polynomial, monomials
from .scalar import CyclotomicScalar, ONE, ZERO, as_scalar, zeta


@dataclass(frozen=True, eq=False)
class Representation:
    group: FiniteGroup
    dim: int
    matrices: tuple  # matrices[g] is a dim x dim list-of-rows matrix
    label: str = ""

    def __call__(self, g: int):
        return self.matrices[g]

    def validate(self, exhaustive: bool = False) -> None:
        """Check rho(e) = I and the homomorphism law.

        By default the law is checked on (element, generator) pairs, which
        implies it for all pairs; ``exhaustive=True`` checks every pair.
        """
        G = self.group
        if len(self.matrices) != G.order:
            raise ValidationError(f"{self.label or 'rep'}: need one matrix per group element")
        for m in self.matrices:
            if len(m) != self.dim or any(len(r) != self.dim for r in m):
                raise ValidationError(f"{self.label or 'rep'}: matrices must be {self.dim}x{self.dim}")
        if self.matrices[G.identity] != la.identity(self.dim):
            raise ValidationError(f"{self.label or 'rep'}: identity element does not act trivially")
        second = range(G.order) if exhaustive else (G.generators or ())
        for a in range(G.order):
            for b in second:
                if la.matmul(self.matrices[a], self.matrices[b]) != self.matrices[G.mul(a, b)]:
                    raise ValidationError(
                        f"{self.label or 'rep'}: not a homomorphism at elements ({a}, {b})")

    def with_label(self, label: str) -> "Representation":
        return Representation(self.group, self.dim, self.matrices, label)

    def __repr__(self):
        return f"Representation({self.label or '?'}, dim={self.dim}, group={self.group.name})"


@dataclass(frozen=True, eq=False)
class Character:
    group: FiniteGroup
    values: tuple  # one CyclotomicScalar per conjugacy class (group.classes order)

    def at(self, g: int) -> CyclotomicScalar:
        return self.values[self.group.class_index[g]]

    @property
    def degree(self) -> int:
        v = self.at(self.group.identity)
        return int(v.to_fraction())

    def __mul__(self, other: "Character") -> "Character":
        _same_group(self.group, other.group)
        return Character(self.group, tuple(a * b for a, b in zip(self.values, other.values)))

    def __add__(self, other: "Character") -> "Character":
        _same_group(self.group, other.group)
        return Character(self.group, tuple(a + b for a, b in zip(self.values, other.values)))

    def dual(self) -> "Character":
        G = self.group
        return Character(G, tuple(self.at(G.inv(cls[0])) for cls in G.classes))

    def __eq__(self, other):
        return isinstance(other, Character) and self.group is other.group and self.values == other.values

    __hash__ = None


def _same_group(G, H):
    if G is not H:
        raise ValidationError(f"group mismatch: {G.name} vs {H.name}")


# constructors ------------------------------------------------------------------

def rep_from_generators(G: FiniteGroup, images: dict, label: str = "") -> Representation:
    """Extend generator images along the Cayley graph and validate."""
    if not images and G.order > 1:
        raise ValidationError("no generator images given")
    dim = len(next(iter(images.values()))) if images else 1
    if not images:
        return trivial_rep(G, 1, label)
    imgs = {g: la.to_matrix(m) for g, m in images.items()}
    gens = list(G.generators)
    missing = [g for g in gens if g not in imgs]
    if missing:
        raise ValidationError(f"missing images for generators {missing}")
    mats: dict[int, list] = {G.identity: la.identity(dim)}
    frontier = deque([G.identity])
    while frontier:
        x = frontier.popleft()
        for s in gens:
            y = G.mul(x, s)
            if y not in mats:
                mats[y] = la.matmul(mats[x], imgs[s])
                frontier.append(y)
    if len(mats) != G.order:
        raise ValidationError("generator images do not reach every element")
    rho = Representation(G, dim, tuple(mats[g] for g in range(G.order)), label)
    rho.validate()
    for g, m in imgs.items():
        if rho.matrices[g] != m:
            raise ValidationError(f"generator images are inconsistent at element {g}")
    return rho


def rep_from_matrices(G: FiniteGroup, matrices: dict, label: str = "") -> Representation:
    if set(matrices) != set(range(G.order)):
        raise ValidationError("matrices must be given for every element index")
    mats = tuple(la.to_matrix(matrices[g]) for g in range(G.order))
    rho = Representation(G, len(mats[G.identity]), mats, label)
    rho.validate()
    return rho


def trivial_rep(G: FiniteGroup, dim: int = 1, label: str = "triv") -> Representation:
    m = la.identity(dim)
    return Representation(G, dim, tuple(m for _ in range(G.order)), label)


def regular_rep(G: FiniteGroup) -> Representation:
    n = G.order
    mats = []
    for g in range(n):
        m = la.zeros(n, n)
        for x in range(n):
            m[G.mul(g, x)][x] = ONE
        mats.append(m)
    return Representation(G, n, tuple(mats), "regular")


def permutation_rep(G: FiniteGroup) -> Representation:
    """Natural action on coordinates for a permutation group: g e_i = e_{g(i)}."""
    if not all(isinstance(p, tuple) for p in G.elements):
        raise ValidationError("permutation representation needs a permutation group")
    n = len(G.elements[0])
    mats = []
    for p in G.elements:
        m = la.zeros(n, n)
        for i in range(n):
            m[p[i]][i] = ONE
        mats.append(m)
    return Representation(G, n, tuple(mats), "perm")


def linear_character_rep(H: FiniteGroup, values: dict, label: str = "") -> Representation:
    """1-dim rep from {element: (k, e)} meaning zeta_e^k."""
    mats = tuple([[zeta(values[g][1], values[g][0]) if values[g][0] % values[g][1] else ONE]]
                 for g in range(H.order))
    return Representation(H, 1, mats, label)


# characters and inner products --------------------------------------------------------

def character(rho: Representation) -> Character:
    # memoized on the (immutable) representation object
    cached = rho.__dict__.get("_character")
    if cached is None:
        cached = _compute_character(rho)
        object.__setattr__(rho, "_character", cached)
    return cached


def _compute_character(rho: Representation) -> Character:
    G = rho.group
    traces = [la.trace(m) for m in rho.matrices]
    values = []
    for cls in G.classes:
        v = traces[cls[0]]
        if any(traces[x] != v for x in cls[1:]):
            raise ValidationError(f"{rho.label or 'rep'}: trace is not constant on a conjugacy class")
        values.append(v)
    return Character(G, tuple(values))


def inner_product(chi: Character, psi: Character) -> CyclotomicScalar:
    """(1/|G|) sum_g chi(g) psi(g^-1)."""
    _same_group(chi.group, psi.group)
    G = chi.group
    total = ZERO
    for c, cls in enumerate(G.classes):
        g = cls[0]
        total = total + chi.values[c] * psi.at(G.inv(g)) * len(cls)
    return total * Fraction(1, G.order)


def trivial_character(G: FiniteGroup) -> Character:
    return Character(G, tuple(ONE for _ in G.classes))


def multiplicity(chi: Character, irreducible: Character) -> int:
    m = inner_product(chi, irreducible)
    if not m.is_rational() or m.to_fraction().denominator != 1 or m.to_fraction() < 0:
        raise ValidationError(f"multiplicity {m} is not a non-negative integer")
    return int(m.to_fraction())


def is_irreducible(rho: Representation) -> bool:
    chi = character(rho)
    return inner_product(chi, chi) == 1


def is_trivial_isotypic(rho: Representation) -> bool:
    if rho.dim == 0:
        return True
    return inner_product(character(rho), trivial_character(rho.group)) == rho.dim


# isotypic decomposition ----------------------------------------------------------

@dataclass(frozen=True)
class Decomposition:
    labels: tuple
    multiplicities: tuple
    projectors: tuple = field(repr=False)

    def as_dict(self) -> dict:
        return dict(zip(self.labels, self.multiplicities))


def validate_irreps(irreps: list[Representation]) -> None:
    if not irreps:
        raise ValidationError("empty irreducible list")
    G = irreps[0].group
    chars = []
    for r in irreps:
        _same_group(G, r.group)
        r.validate()
        chars.append(character(r))
    if sum(r.dim ** 2 for r in irreps) != G.order:
        raise ValidationError("irreducible list is incomplete: sum of squared dimensions != |G|")
    for i, a in enumerate(chars):
        for j, b in enumerate(chars[i:], start=i):
            ip = inner_product(a, b)
            want = 1 if i == j else 0
            if ip != want:
                what = "reducible (or Schur index > 1)" if i == j else "isomorphic to another entry"
                raise ValidationError(f"{irreps[i].label or i}: irreducible list entry is {what}")


def isotypic_projector(rho: Representation, irrep: Representation) -> list:
    """(dim sigma/|G|) sum_g chi_sigma(g^-1) rho(g)."""
    G = rho.group
    chi = character(irrep)
    n = rho.dim
    acc = la.zeros(n, n)
    for g in range(G.order):
        w = chi.at(G.inv(g))
        if w.is_zero():
            continue
        m = rho.matrices[g]
        acc = [[a + w * x if not x.is_zero() else a for a, x in zip(ra, rm)] for ra, rm in zip(acc, m)]
    return la.scale(Fraction(irrep.dim, G.order), acc)


def decompose(rho: Representation, irreps: list[Representation], validate: bool = True) -> Decomposition:
    _same_group(rho.group, irreps[0].group)
    if validate:
        validate_irreps(irreps)
    chi = character(rho)
    mults = []
    projs = []
    for s in irreps:
        m = multiplicity(chi, character(s))
        mults.append(m)
        projs.append(isotypic_projector(rho, s) if m else la.zeros(rho.dim, rho.dim))
    if sum(m * s.dim for m, s in zip(mults, irreps)) != rho.dim:
        raise ValidationError("multiplicities do not account for the full dimension")
    return Decomposition(tuple(s.label for s in irreps), tuple(mults), tuple(projs))


# constructions --------------------------------------------------------------------

def restrict_rep(rho: Representation, H: Subgroup) -> Representation:
    if H.parent is not rho.group:
        raise ValidationError("subgroup does not belong to the representation's group")
    return Representation(H.as_group, rho.dim, tuple(rho.matrices[m] for m in H.members),
                          f"Res({rho.label})")


def tensor_rep(rho: Representation, sigma: Representation) -> Representation:
    _same_group(rho.group, sigma.group)
    mats = tuple(la.kron(a, b) for a, b in zip(rho.matrices, sigma.matrices))
    return Representation(rho.group, rho.dim * sigma.dim, mats, f"{rho.label}*{sigma.label}")


def dual_rep(rho: Representation) -> Representation:
    G = rho.group
    mats = tuple(la.transpose(rho.matrices[G.inv(g)]) for g in range(G.order))
    return Representation(G, rho.dim, mats, f"{rho.label}^*")


def direct_sum_rep(*reps: Representation, label: str = "") -> Representation:
    G = reps[0].group
    for r in reps:
        _same_group(G, r.group)
    mats = tuple(la.direct_sum(*(r.matrices[g] for r in reps)) for g in range(G.order))
    return Representation(G, sum(r.dim for r in reps), mats, label or "+".join(r.label for r in reps))


def conjugate_rep(rho: Representation, P: list) -> Representation:
    """Change of basis: g -> P^-1 rho(g) P."""
    Pinv = la.inverse(P)
    mats = tuple(la.matmul(Pinv, la.matmul(m, P)) for m in rho.matrices)
    return Representation(rho.group, rho.dim, mats, rho.label)


def variable_images(action: Representation, g: int) -> list[Polynomial]:
    """g . x_i under (g f)(x) = f(rho(g)^-1 x): the images of the variables."""
    n = action.dim
    inv = action.matrices[action.group.inv(g)]
    out = []
    for i in range(n):
        out.append(Polynomial(n, {tuple(1 if k == j else 0 for k in range(n)): inv[i][j] for j in range(n)}))
    return out


def act_on_polynomial(action: Representation, g: int, f: Polynomial) -> Polynomial:
    return f.substitute_linear(variable_images(action, g))


def sym_power_rep(action: Representation, d: int) -> Representation:
    """G acting on A_d (monomial basis, x0^d first) by (g f)(x) = f(rho(g)^-1 x)."""
    n = action.dim
    basis = monomials(n, d)
    mats = []
    for g in range(action.group.order):
        images = variable_images(action, g)
        cols = [Polynomial.monomial(m).substitute_linear(images).coefficient_vector(d) for m in basis]
        mats.append(la.transpose(cols) if cols else [])
    return Representation(action.group, len(basis), tuple(mats), f"A_{d}")


@lru_cache(maxsize=None)
def sym_power_character(action: Representation, d: int) -> Character:
    """Character of A_d by Newton's identity h_d = (1/d) sum_k p_k h_{d-k}.

    Here p_k(g) = tr(g^k on A_1) = chi_action(g^-k); no polynomial arithmetic.
    """
    G = action.group
    chi = character(action)
    vals = []
    for cls in G.classes:
        g = cls[0]
        powers = [G.identity]
        for _ in range(d):
            powers.append(G.mul(powers[-1], g))
        p = [None] + [chi.at(G.inv(powers[k])) for k in range(1, d + 1)]
        h = [ONE]
        for k in range(1, d + 1):
            acc = ZERO
            for j in range(1, k + 1):
                acc = acc + p[j] * h[k - j]
            h.append(acc * Fraction(1, k))
        vals.append(h[d])
    return Character(G, tuple(vals))


def ext_power_rep(rho: Representation, k: int) -> Representation:
    """Lambda^k on the wedge basis e_S, S ranging over k-subsets in lex order."""
    n = rho.dim
    if not 0 <= k <= n:
        raise ValidationError(f"exterior power {k} out of range for dimension {n}")
    subsets = list(combinations(range(n), k))
    mats = []
    for m in rho.matrices:
        out = la.zeros(len(subsets), len(subsets))
        for c, S in enumerate(subsets):
            for r, T in enumerate(subsets):
                out[r][c] = la.det([[m[i][j] for j in S] for i in T]) if k else ONE
        mats.append(out)
    assert len(subsets) == comb(n, k)
    return Representation(rho.group, len(subsets), tuple(mats), f"L^{k}({rho.label})")


def scalar_rep(G: FiniteGroup, values: list, label: str = "") -> Representation:
    return Representation(G, 1, tuple([[as_scalar(v)]] for v in values), label)
