from itertools import chain, combinations, permutations

import pytest

from equideriv.errors import LimitError, ValidationError
from equideriv.group import (BUILTIN_GROUP_NAMES, all_subgroups, are_conjugate, builtin_group,
                             conjugacy_classes, generate_group, group_from_table, linear_characters,
                             subgroups_up_to_conjugacy, validate_group)


def _brute_subgroups(G):
    """Closures of every subset: slow but independent of the join strategy."""
    seen = set()
    for subset in chain.from_iterable(combinations(range(G.order), k) for k in range(3)):
        seen.add(G.closure(subset))
    # the closure of any subset equals the closure of at most log2|G| elements,
    # and for these orders two-element generating sets already suffice
    return seen


def test_generate_s3_matches_full_symmetric_group():
    G = generate_group([(1, 0, 2), (1, 2, 0)])
    assert G.order == 6
    assert set(G.elements) == set(permutations(range(3)))
    validate_group(G)


def test_empty_generators_give_trivial_group():
    assert generate_group([]).order == 1


def test_four_cycle_generates_c4():
    G = generate_group([(1, 2, 3, 0)])
    assert G.order == 4 and G.is_abelian


def test_closure_limit():
    with pytest.raises(LimitError):
        generate_group([(1, 0, 2, 3, 4), (1, 2, 3, 4, 0)])  # S5, order 120


def test_bad_permutation_rejected():
    with pytest.raises(ValidationError):
        generate_group([(0, 0, 1)])


def test_table_validation():
    with pytest.raises(ValidationError):
        group_from_table([[0, 1], [1, 1]])
    G = group_from_table([[0, 1, 2], [1, 2, 0], [2, 0, 1]])
    assert G.order == 3 and G.exponent == 3


def test_class_sizes():
    S3 = builtin_group("S3")
    assert sorted(len(c) for c in conjugacy_classes(S3)) == [1, 2, 3]
    assert [len(c) for c in conjugacy_classes(builtin_group("trivial"))] == [1]
    assert [len(c) for c in conjugacy_classes(builtin_group("C4"))] == [1, 1, 1, 1]


@pytest.mark.parametrize("name,count", [("S3", 4), ("trivial", 1), ("V4", 5), ("D4", 8), ("C6", 4)])
def test_subgroup_classes(name, count):
    G = builtin_group(name)
    reps = subgroups_up_to_conjugacy(G)
    assert len(reps) == count
    orders = {H.order for H in reps}
    assert 1 in orders and G.order in orders


@pytest.mark.parametrize("name", BUILTIN_GROUP_NAMES)
def test_group_invariants(name):
    G = builtin_group(name)
    validate_group(G)
    assert sum(len(c) for c in G.classes) == G.order
    subs = all_subgroups(G)
    for H in subs:
        H.validate()
        assert G.order % H.order == 0
    reps = subgroups_up_to_conjugacy(G)
    for a, b in combinations(reps, 2):
        assert not are_conjugate(a, b)
    for H in subs:
        assert sum(are_conjugate(H, R) for R in reps) == 1
    if G.order <= 12:
        assert {H._member_set for H in subs} == _brute_subgroups(G)


def test_klein_subgroups_all_normal():
    G = builtin_group("V4")
    for H in all_subgroups(G):
        assert all(H.conjugate(g)._member_set == H._member_set for g in range(G.order))


@pytest.mark.parametrize("name,count", [("S3", 2), ("C6", 6), ("D4", 4), ("V4", 4), ("trivial", 1)])
def test_linear_character_count(name, count):
    G = builtin_group(name)
    chars = linear_characters(G.whole())
    assert len(chars) == count
    assert all(v == (0, v[1]) for v in chars[0].values())
