import random
from math import comb

import pytest
from hypothesis import given, strategies as st

from equideriv.builtins import builtin_action, builtin_irreps
from equideriv.eqmod import (BlockModule, ChainMap, RawEquivariantModule, block_module_as_raw, cone,
                             equivariant_maps, graded_homology, hom_complexes, hom_generators,
                             hom_generators_bruteforce, identity_map, is_equivariant_map,
                             koszul_complex, normalize_module, shift, single_term, slice_dimension,
                             zero_complex)
from equideriv.eqmod.complexes import EquivariantComplex
from equideriv.eqmod.modules import act_on_matrix
from equideriv.errors import ValidationError
from equideriv.group import builtin_group
from equideriv.literal import parse_polynomial
from equideriv.poly import Polynomial, constant_matrix, poly_det, poly_matmul
from equideriv.rep import is_trivial_isotypic, permutation_rep, character, trivial_rep
from equideriv.sampling import ModuleSampleConfig, random_raw_module


def _irr(G, label):
    return next(r for r in builtin_irreps(G) if r.label == label)


def _p(text, n=1):
    return parse_polynomial(text, n)


# normal form -------------------------------------------------------------------------

def test_normalize_c2_example():
    C2 = builtin_group("C2")
    act = trivial_rep(C2, 1)
    g = C2.generators[0]
    mats = [[[_p("1"), _p("0")], [_p("0"), _p("1")]], [[_p("1"), _p("x0")], [_p("0"), _p("-1")]]]
    M = RawEquivariantModule(act, (0, 1), tuple(mats))
    B, P = normalize_module(M)
    assert [(a, r.dim) for a, r in B.blocks] == [(0, 1), (1, 1)]
    assert is_trivial_isotypic(B.blocks[0][1])
    assert B.blocks[1][1].matrices[g] == [[-1]]
    # new generator e1' = e1 - (x/2) e0
    assert P[0][1] == _p("-1/2*x0") and P[1][1] == _p("1")
    # and g . e1' = -e1'
    col = [[P[0][1]], [P[1][1]]]
    moved = poly_matmul(M.matrices[g], act_on_matrix(act, g, col), 1)
    assert moved == [[-P[0][1]], [-P[1][1]]]


def test_normalize_block_input_is_identity():
    S3 = builtin_group("S3")
    act = permutation_rep(S3)
    B0 = BlockModule(act, ((0, _irr(S3, "triv")), (1, _irr(S3, "std")), (2, _irr(S3, "sign"))))
    B, P = normalize_module(block_module_as_raw(B0))
    assert [(a, r.dim) for a, r in B.blocks] == [(0, 1), (1, 2), (2, 1)]
    assert all(P[i][j] == (Polynomial.constant(3, 1) if i == j else Polynomial.zero(3))
               for i in range(4) for j in range(4))


def test_normalize_trivial_group_groups_by_degree():
    T = builtin_group("trivial")
    act = trivial_rep(T, 2)
    degs = (2, 0, 2, 1)
    ident = [[Polynomial.constant(2, 1) if i == j else Polynomial.zero(2) for j in range(4)] for i in range(4)]
    B, P = normalize_module(RawEquivariantModule(act, degs, (ident,)))
    assert [(a, r.dim) for a, r in B.blocks] == [(0, 1), (1, 1), (2, 2)]


def test_raw_module_validation():
    C2 = builtin_group("C2")
    act = trivial_rep(C2, 1)
    bad = [[[_p("1")]], [[_p("2")]]]  # g acts by 2: g^2 != 1
    with pytest.raises(ValidationError):
        RawEquivariantModule(act, (0,), tuple(bad)).validate()
    wrong_degree = [[[_p("1"), _p("0")], [_p("0"), _p("1")]], [[_p("1"), _p("x0^2")], [_p("0"), _p("-1")]]]
    with pytest.raises(ValidationError):
        RawEquivariantModule(act, (0, 1), tuple(wrong_degree)).validate()


@given(st.integers(0, 10 ** 6))
def test_normalize_round_trip(seed):
    raw, B0 = random_raw_module(random.Random(seed), ModuleSampleConfig())
    B, P = normalize_module(raw)
    n = raw.nvars
    det = poly_det(P, n)
    assert det.is_constant() and not det.is_zero()
    assert sorted(B.degrees) == sorted(B0.degrees)
    assert list(B.degrees) == sorted(B.degrees)
    for g in range(raw.group.order):
        lhs = poly_matmul(raw.matrices[g], act_on_matrix(raw.action, g, P), n)
        assert lhs == poly_matmul(P, constant_matrix(n, B.action_matrix(g)), n)
    for a, rep in B.blocks:
        same = [r for b, r in B0.blocks if b == a]
        want = character(same[0]) if len(same) == 1 else None
        if want is not None and rep.dim == same[0].dim:
            assert character(rep) == want


# Hom between generators ----------------------------------------------------------------

def test_hom_examples():
    S2 = builtin_group("S2")
    swap = permutation_rep(S2)
    triv, sign = builtin_irreps(S2)
    assert hom_generators(triv, 0, triv, 1, swap).dimension == 0
    assert hom_generators(sign, 2, sign, 2, swap).dimension == 1
    res = hom_generators(triv, 1, triv, 0, swap, with_basis=True)
    assert res.dimension == 1
    (D,) = res.basis
    assert D[0][0] == _p("x0 + x1", 2) or D[0][0] * 2 == _p("x0 + x1", 2) * D[0][0].terms[(1, 0)] * 2


def test_hom_rejects_reducible():
    S2 = builtin_group("S2")
    swap = permutation_rep(S2)
    with pytest.raises(ValidationError):
        hom_generators(swap, 0, swap, 0, swap)


@pytest.mark.parametrize("name", ["S3", "D4", "C4", "V4"])
def test_hom_formula_matches_solver(name):
    G = builtin_group(name)
    act = builtin_action(G, 2)
    irr = builtin_irreps(G)
    for i in range(3):
        for j in range(i + 1):
            for V in irr:
                for W in irr:
                    f = hom_generators(V, i, W, j, act).dimension
                    assert f == hom_generators_bruteforce(V, i, W, j, act)
                    # imposing the identity for every element gives the same space
                    if i - j == 1:
                        S = BlockModule(act, ((i, V),))
                        T = BlockModule(act, ((j, W),))
                        assert f == len(equivariant_maps(S, T, range(G.order)))


def test_equivariant_maps_are_equivariant():
    S3 = builtin_group("S3")
    act = permutation_rep(S3)
    S = BlockModule(act, ((2, _irr(S3, "std")),))
    T = BlockModule(act, ((0, _irr(S3, "std")), (1, _irr(S3, "sign"))))
    basis = equivariant_maps(S, T)
    assert basis
    for D in basis:
        assert is_equivariant_map(D, S, T)


# complexes --------------------------------------------------------------------------------

def _koszul_one_var():
    C2 = builtin_group("C2")
    return koszul_complex(_irr(C2, "sign"))


def test_koszul_one_variable():
    K = _koszul_one_var()
    K.validate()
    assert K.positions() == [-1, 0]
    (a, rep), = K.term(-1).blocks
    assert a == 1 and character(rep) == character(_irr(K.action.group, "sign"))
    assert K.d(-1) == [[_p("x0")]]


def test_koszul_ranks_and_top_term():
    S3 = builtin_group("S3")
    K = koszul_complex(permutation_rep(S3))
    assert [K.term(-k).rank for k in range(4)] == [1, 3, 3, 1]
    S2 = builtin_group("S2")
    K2 = koszul_complex(permutation_rep(S2))
    (a, top), = K2.term(-2).blocks
    assert a == 2 and character(top) == character(_irr(S2, "sign"))


@pytest.mark.parametrize("name,n", [("C2", 1), ("S2", 2), ("S3", 3), ("V4", 2), ("C3", 2)])
def test_koszul_homology(name, n):
    G = builtin_group(name)
    K = koszul_complex(builtin_action(G, n))
    K.validate(exhaustive=True)
    for k in range(n + 1):
        assert K.term(-k).rank == comb(n, k)
    h0 = [h for h in graded_homology(K, 0) if h.dimension]
    assert [(h.position, h.dimension) for h in h0] == [(0, 1)]
    assert is_trivial_isotypic(h0[0].rep)
    for d in range(1, 4):
        assert all(h.dimension == 0 for h in graded_homology(K, d))


def test_euler_characteristic():
    S3 = builtin_group("S3")
    K = koszul_complex(permutation_rep(S3))
    C = cone(ChainMap(zero_complex(K.action), K, {}))
    for X in (K, C):
        for d in range(4):
            chi_terms = sum((-1) ** (p % 2) * slice_dimension(X, p, d) for p in X.positions())
            chi_h = sum((-1) ** (h.position % 2) * h.dimension for h in graded_homology(X, d))
            assert chi_terms == chi_h


def test_shift_round_trip():
    K = _koszul_one_var()
    back = shift(shift(K, 1), -1)
    assert back.positions() == K.positions()
    for p in K.positions():
        assert back.term(p) is K.term(p)
    for p in K.differentials:
        assert back.d(p) == K.d(p)


def test_cone_identity_is_contractible():
    K = _koszul_one_var()
    C = cone(identity_map(K))
    C.validate()
    for d in range(4):
        assert all(h.dimension == 0 for h in graded_homology(C, d))


def test_cone_of_zero_map():
    K = _koszul_one_var()
    C = cone(ChainMap(zero_complex(K.action), K, {}))
    C.validate()
    assert C.positions() == K.positions()
    for p in K.positions():
        assert C.term(p).rank == K.term(p).rank
    for d in range(3):
        a = [(h.position, h.dimension) for h in graded_homology(C, d)]
        b = [(h.position, h.dimension) for h in graded_homology(K, d)]
        assert a == b


def test_cone_rejects_non_chain_map():
    K = _koszul_one_var()
    bad = ChainMap(K, K, {0: [[_p("1")]]})
    with pytest.raises(ValidationError):
        cone(bad)


def test_hom_complexes_examples():
    S3 = builtin_group("S3")
    act = permutation_rep(S3)
    V = single_term(BlockModule(act, ((1, _irr(S3, "std")),)))
    assert hom_complexes(V, V, 0) == 1
    assert hom_complexes(V, V, 1) == 0
    K = _koszul_one_var()
    assert hom_complexes(K, shift(K, 1), -1) == 1


@pytest.mark.parametrize("name", ["S2", "C3", "V4"])
def test_ext_vanishing_between_generators(name):
    G = builtin_group(name)
    act = builtin_action(G, 2)
    irr = builtin_irreps(G)
    for i in range(2):
        for j in range(2):
            for V in irr:
                for W in irr:
                    C = single_term(BlockModule(act, ((i, V),)))
                    D = single_term(BlockModule(act, ((j, W),)))
                    for l in (-2, -1, 1, 2):
                        assert hom_complexes(C, D, l) == 0
                    assert hom_complexes(C, D, 0) == hom_generators(V, i, W, j, act).dimension


def test_complex_validation_catches_errors():
    C2 = builtin_group("C2")
    act = builtin_irreps(C2)[1]
    triv, sign = builtin_irreps(C2)
    # x : triv(-1) -> triv is not equivariant when g x = -x
    C = EquivariantComplex(act, {-1: BlockModule(act, ((1, triv),)), 0: BlockModule(act, ((0, triv),))},
                           {-1: [[_p("x0")]]})
    with pytest.raises(ValidationError):
        C.validate()
    D = EquivariantComplex(act, {-1: BlockModule(act, ((2, sign),)), 0: BlockModule(act, ((0, triv),))},
                           {-1: [[_p("x0")]]})
    with pytest.raises(ValidationError):
        D.validate()
