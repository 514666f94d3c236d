"""Seeded random instances for property tests and experiment scripts.

Random representations are direct sums of built-in irreducibles hidden by a
rational change of basis.  Random raw modules are block modules disguised
by a degree-unipotent polynomial change of basis and a generator
permutation, so the normalizer has real work to do.
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from .builtins import builtin_action, builtin_irreps
from .eqmod.modules import BlockModule, RawEquivariantModule, act_on_matrix
from .group import BUILTIN_GROUP_NAMES, FiniteGroup, builtin_group
from .poly import Polynomial, constant_matrix, monomials, poly_identity, poly_inverse_unimodular, poly_matmul
from .rep import Representation, conjugate_rep, direct_sum_rep
from .scalar import CyclotomicScalar, ONE, ZERO


@dataclass(frozen=True)
class RepSampleConfig:
    max_dim: int = 12
    entry_bound: int = 2  # change-of-basis entries are drawn from [-b, b]
    mixing_steps: int = 6


@dataclass(frozen=True)
class ModuleSampleConfig:
    max_group_order: int = 8
    max_generators: int = 5
    max_degree: int = 3
    max_vars: int = 2
    entry_bound: int = 2


def small_groups(max_order: int = 64) -> list[FiniteGroup]:
    return [G for G in (builtin_group(n) for n in BUILTIN_GROUP_NAMES) if G.order <= max_order]


def random_invertible(rng: random.Random, n: int, bound: int, steps: int) -> list:
    """Product of a random permutation and rational elementary matrices."""
    perm = list(range(n))
    rng.shuffle(perm)
    m = [[ONE if perm[i] == j else ZERO for j in range(n)] for i in range(n)]
    for _ in range(steps if n > 1 else 0):
        i, j = rng.sample(range(n), 2)
        c = rng.randint(-bound, bound) or 1
        m[i] = [x + CyclotomicScalar.rational(c) * y for x, y in zip(m[i], m[j])]
    return m


def random_rep(rng: random.Random, G: FiniteGroup, cfg: RepSampleConfig = RepSampleConfig()) -> tuple[Representation, dict]:
    """A random rep of G with dim <= cfg.max_dim and its true multiplicities."""
    irreps = builtin_irreps(G)
    dim = rng.randint(1, cfg.max_dim)
    pieces, mult = [], {r.label: 0 for r in irreps}
    while True:
        choices = [r for r in irreps if r.dim <= dim - sum(p.dim for p in pieces)]
        if not choices:
            break
        r = rng.choice(choices)
        pieces.append(r)
        mult[r.label] += 1
        if rng.random() < 0.2:
            break
    rho = direct_sum_rep(*pieces, label="random") if len(pieces) > 1 else pieces[0]
    P = random_invertible(rng, rho.dim, cfg.entry_bound, cfg.mixing_steps)
    return conjugate_rep(rho, P).with_label("random"), mult


def random_block_module(rng: random.Random, G: FiniteGroup, action: Representation,
                        cfg: ModuleSampleConfig) -> BlockModule:
    irreps = builtin_irreps(G)
    budget = rng.randint(1, cfg.max_generators)
    blocks = []
    while budget > 0:
        options = [r for r in irreps if r.dim <= budget]
        r = rng.choice(options)
        if r.dim > 1:
            P = random_invertible(rng, r.dim, cfg.entry_bound, 3)
            r = conjugate_rep(r, P).with_label(r.label)
        blocks.append((rng.randint(0, cfg.max_degree), r))
        budget -= r.dim
    blocks.sort(key=lambda b: b[0])
    return BlockModule(action, tuple(blocks))


def _random_poly(rng: random.Random, n: int, d: int, bound: int) -> Polynomial:
    terms = {}
    for m in monomials(n, d):
        c = rng.randint(-bound, bound)
        if c:
            terms[m] = CyclotomicScalar.rational(c)
    return Polynomial(n, terms)


def random_raw_module(rng: random.Random, cfg: ModuleSampleConfig = ModuleSampleConfig()):
    """A raw module together with the block module it was built from.

    R(g) = Q B(g) (g . Q^-1), which satisfies the cocycle law because B is
    constant.  Q is unipotent with respect to the degree filtration, and a
    random permutation of generators is applied last.
    """
    G = rng.choice(small_groups(cfg.max_group_order))
    n = rng.randint(1, cfg.max_vars)
    action = builtin_action(G, n)
    B = random_block_module(rng, G, action, cfg)
    r, degs = B.rank, B.degrees
    Q = poly_identity(n, r)
    for j in range(r):
        for i in range(r):
            if degs[j] < degs[i]:
                Q[j][i] = _random_poly(rng, n, degs[i] - degs[j], cfg.entry_bound)
    Qinv = poly_inverse_unimodular(Q, n)
    perm = list(range(r))
    rng.shuffle(perm)  # new generator k is old generator perm[k]
    mats = []
    for g in range(G.order):
        R = poly_matmul(Q, poly_matmul(constant_matrix(n, B.action_matrix(g)),
                                        act_on_matrix(action, g, Qinv), n), n)
        mats.append([[R[perm[j]][perm[i]] for i in range(r)] for j in range(r)])
    raw = RawEquivariantModule(action, tuple(degs[perm[k]] for k in range(r)), tuple(mats))
    return raw, B
