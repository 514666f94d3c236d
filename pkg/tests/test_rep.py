import random

import pytest
from hypothesis import given, strategies as st

from equideriv import linalg as la
from equideriv.builtins import builtin_action, builtin_irreps
from equideriv.errors import ValidationError
from equideriv.group import BUILTIN_GROUP_NAMES, builtin_group
from equideriv.poly import monomials
from equideriv.rep import (Representation, character, decompose, dual_rep, ext_power_rep, inner_product,
                           is_irreducible, is_trivial_isotypic, permutation_rep, regular_rep,
                           restrict_rep, sym_power_character, sym_power_rep, tensor_rep,
                           trivial_character, trivial_rep, validate_irreps)
from equideriv.sampling import RepSampleConfig, random_rep
from equideriv.scalar import CyclotomicScalar, ONE, ZERO, zeta


def _irrep(G, label):
    return next(r for r in builtin_irreps(G) if r.label == label)


def _std_from_permutation(S3):
    """Standard rep built independently: permutation action on the sum-zero plane.

    Basis f0 = e0 - e1, f1 = e1 - e2; coordinates are read off directly.
    """
    perm = permutation_rep(S3)
    mats = []
    for g in range(S3.order):
        cols = []
        for f in ([1, -1, 0], [0, 1, -1]):
            v = la.matvec(perm.matrices[g], [CyclotomicScalar.rational(x) for x in f])
            # v = a f0 + b f1 = (a, b - a, -b)
            a, b = v[0], -v[2]
            cols.append([a, b])
        mats.append(la.transpose(cols))
    return Representation(S3, 2, tuple(mats), "std'")


def test_character_examples():
    C2 = builtin_group("C2")
    assert [character(trivial_rep(C2)).at(g) for g in range(2)] == [ONE, ONE]
    reg = character(regular_rep(C2))
    assert [reg.at(g) for g in range(2)] == [2, 0]
    S3 = builtin_group("S3")
    std = character(_std_from_permutation(S3))
    assert std == character(_irrep(S3, "std"))
    # values 2 on e, -1 on 3-cycles, 0 on transpositions
    for g, p in enumerate(S3.elements):
        fixed = sum(p[i] == i for i in range(3))
        assert std.at(g) == fixed - 1


def test_character_rejects_bad_homomorphism():
    S3 = builtin_group("S3")
    mats = list(regular_rep(S3).matrices)
    mats[1] = la.identity(6)
    with pytest.raises(ValidationError):
        character(Representation(S3, 6, tuple(mats), "bad"))


def test_inner_product_examples():
    S3 = builtin_group("S3")
    triv = trivial_character(S3)
    assert inner_product(triv, triv) == 1
    assert inner_product(character(regular_rep(S3)), triv) == 1
    std = character(_std_from_permutation(S3))
    assert inner_product(std, std) == 1


def test_decompose_examples():
    S3 = builtin_group("S3")
    irr = builtin_irreps(S3)
    assert decompose(regular_rep(S3), irr).as_dict() == {"triv": 1, "sign": 1, "std": 2}
    assert decompose(permutation_rep(S3), irr).as_dict() == {"triv": 1, "sign": 0, "std": 1}
    T = builtin_group("trivial")
    assert decompose(trivial_rep(T, 5), builtin_irreps(T)).as_dict() == {"triv": 5}


def test_decompose_rejects_incomplete_list():
    S3 = builtin_group("S3")
    irr = builtin_irreps(S3)
    with pytest.raises(ValidationError):
        decompose(regular_rep(S3), irr[:2])
    with pytest.raises(ValidationError):
        validate_irreps([irr[0], irr[1], tensor_rep(irr[1], irr[1]), irr[2]])


def test_trivial_isotypic_examples():
    C2 = builtin_group("C2")
    assert is_trivial_isotypic(trivial_rep(C2, 3))
    assert not is_trivial_isotypic(_irrep(builtin_group("S2"), "sign"))
    assert not is_trivial_isotypic(regular_rep(C2))


def test_restriction_examples():
    S3 = builtin_group("S3")
    std = _irrep(S3, "std")
    triv_sub = S3.trivial_subgroup()
    res = restrict_rep(std, triv_sub)
    assert is_trivial_isotypic(res) and res.dim == 2
    rot = next(H for H in _subgroups(S3) if H.order == 3)
    C3chars = _linear_chars_of(rot)
    mult = [inner_product(character(restrict_rep(std, rot)), c) for c in C3chars]
    assert mult == [0, 1, 1]
    flip = next(H for H in _subgroups(S3) if H.order == 2)
    sign = restrict_rep(_irrep(S3, "sign"), flip)
    assert [sign.matrices[i][0][0] for i in range(2)] == [1, -1]


def _subgroups(G):
    from equideriv.group import all_subgroups
    return all_subgroups(G)


def _linear_chars_of(H):
    from equideriv.group import linear_characters
    from equideriv.rep import linear_character_rep
    out = []
    for chi in linear_characters(H):
        values = {i: chi[g] for i, g in enumerate(H.members)}
        out.append(character(linear_character_rep(H.as_group, values)))
    return out


def test_tensor_and_dual_examples():
    S2 = builtin_group("S2")
    sign = _irrep(S2, "sign")
    assert is_trivial_isotypic(tensor_rep(sign, sign))
    S3 = builtin_group("S3")
    std = _irrep(S3, "std")
    sq = tensor_rep(std, std)
    assert decompose(sq, builtin_irreps(S3)).as_dict() == {"triv": 1, "sign": 1, "std": 1}
    assert sorted(int(v.to_fraction()) for v in character(sq).values) == [0, 1, 4]
    C4 = builtin_group("C4")
    chi = _irrep(C4, "chi1")
    assert character(dual_rep(chi)) == character(_irrep(C4, "chi3"))
    assert character(dual_rep(chi)) == character(chi).dual()


def test_sym_power_examples():
    C2 = builtin_group("C2")
    neg = _irrep(C2, "sign")
    assert sym_power_rep(neg, 0).dim == 1
    for d in range(6):
        assert character(sym_power_rep(neg, d)).at(1) == (-1) ** d
    S2 = builtin_group("S2")
    swap = permutation_rep(S2)
    assert character(sym_power_rep(swap, 1)).at(1) == 0


def test_sym_power_rep_is_a_representation():
    S3 = builtin_group("S3")
    act = permutation_rep(S3)
    for d in range(4):
        rho = sym_power_rep(act, d)
        rho.validate(exhaustive=True)
        assert rho.dim == len(monomials(3, d))


def test_ext_power_examples():
    S2 = builtin_group("S2")
    swap = permutation_rep(S2)
    assert is_trivial_isotypic(ext_power_rep(swap, 0))
    top = ext_power_rep(swap, 2)
    assert character(top) == character(_irrep(S2, "sign"))
    assert character(ext_power_rep(swap, 1)) == character(swap)
    with pytest.raises(ValidationError):
        ext_power_rep(swap, 3)


@pytest.mark.parametrize("name", BUILTIN_GROUP_NAMES)
def test_orthogonality(name):
    G = builtin_group(name)
    irr = builtin_irreps(G)
    validate_irreps(irr)
    for i, a in enumerate(irr):
        assert is_irreducible(a)
        for j, b in enumerate(irr):
            assert inner_product(character(a), character(b)) == (1 if i == j else 0)


@pytest.mark.parametrize("name", ["S3", "D4", "C4", "V4", "C3"])
def test_sym_power_character_identity(name):
    """Newton-identity characters agree with traces on the monomial basis."""
    G = builtin_group(name)
    for n in (1, 2, 3):
        act = builtin_action(G, n)
        for d in range(5):
            assert sym_power_character(act, d) == character(sym_power_rep(act, d))


def test_sym_power_character_is_complete_homogeneous():
    # C3 acting by diag(z, z^2): on A_1 the generator acts by the inverses z^2, z
    C3 = builtin_group("C3")
    irr = builtin_irreps(C3)
    from equideriv.rep import direct_sum_rep
    act = direct_sum_rep(irr[1], irr[2])
    g = C3.generators[0]
    eig = [zeta(3, 2), zeta(3, 1)]
    for d in range(5):
        h = sum((eig[0] ** a * eig[1] ** (d - a) for a in range(d + 1)), ZERO)
        assert sym_power_character(act, d).at(g) == h


groups = st.sampled_from([n for n in BUILTIN_GROUP_NAMES])


@given(groups, st.integers(0, 10 ** 6))
def test_projector_algebra(name, seed):
    G = builtin_group(name)
    rho, mult = random_rep(random.Random(seed), G, RepSampleConfig(max_dim=8))
    irr = builtin_irreps(G)
    dec = decompose(rho, irr)
    assert dec.as_dict() == mult
    assert sum(m * r.dim for m, r in zip(dec.multiplicities, irr)) == rho.dim
    total = la.zeros(rho.dim, rho.dim)
    for i, p in enumerate(dec.projectors):
        assert la.matmul(p, p) == p
        for j, q in enumerate(dec.projectors):
            if i != j:
                assert la.is_zero_matrix(la.matmul(p, q))
        total = la.add(total, p)
    assert total == la.identity(rho.dim)


@given(groups, st.integers(0, 10 ** 6))
def test_character_multiplicativity(name, seed):
    G = builtin_group(name)
    rng = random.Random(seed)
    a, _ = random_rep(rng, G, RepSampleConfig(max_dim=4))
    b, _ = random_rep(rng, G, RepSampleConfig(max_dim=4))
    t = character(tensor_rep(a, b))
    assert t == character(a) * character(b)
