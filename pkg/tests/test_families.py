"""Family-specific deciders and whole-group classification."""

import pytest

from sumgraph import (
    BadParameterError,
    NotAbelianError,
    NotASubgroupError,
    NotDedekindError,
    NotNormalError,
    abelian,
    abelian_2group_perfect_code,
    abelian_isomorphism_types,
    abelian_total_perfect_code,
    all_subgroups,
    coordinate_product_form,
    cyclic,
    cyclic_perfect_code,
    decide_perfect_code,
    decide_total_perfect_code,
    dicyclic,
    dicyclic_perfect_code,
    dihedral,
    dihedral_perfect_code,
    direct_product,
    elementary_abelian_2,
    is_code_perfect,
    normal_subgroups,
    order_three_coset_scan,
    quaternion,
    subgroup,
    subgroup_generated,
    whole_group,
)

from helpers import sweep_groups


def test_cyclic_rule_known_values():
    assert not cyclic_perfect_code(60, 2)
    assert cyclic_perfect_code(60, 5)  # o(5)=12 even >= 4, 5 odd
    failing = [a for a in range(1, 61) if 60 % a == 0 and not cyclic_perfect_code(60, a)]
    assert failing == [2, 6, 10]

    # powers of two: works only for |H| in {1, 2, 2^k}
    for k in (2, 3, 4, 5):
        n = 2 ** k
        for a in range(1, n + 1):
            if n % a:
                continue
            expected = (n // a) in (1, 2, n)
            assert cyclic_perfect_code(n, a) == expected

    with pytest.raises(BadParameterError):
        cyclic_perfect_code(12, 5)
    with pytest.raises(BadParameterError):
        cyclic_perfect_code(12, 0)


def test_cyclic_rule_matches_generic_decider():
    for n in range(1, 61):
        G = cyclic(n)
        for a in range(1, n + 1):
            if n % a:
                continue
            H = subgroup_generated(G, [a % n])
            assert cyclic_perfect_code(n, a) == decide_perfect_code(G, H).exists, (n, a)


def test_abelian_2group_examples():
    # Z2 x Z4, the order-8 counterexample subgroup {(0,0),(0,2),(1,0),(1,2)}
    assert not abelian_2group_perfect_code((2, 4), [0, 2, 4, 6])
    # {0} x Z4 splits into trivial-or-full factors
    assert abelian_2group_perfect_code((2, 4), [0, 1, 2, 3])
    # Z4 x Z4 axis and non-split cases
    assert abelian_2group_perfect_code((4, 4), [0, 4, 8, 12])
    assert not abelian_2group_perfect_code((4, 4), [0, 2, 8, 10])
    # the diagonal <(1,1)> is not a coordinate product but admits a code
    assert abelian_2group_perfect_code((4, 4), [0, 5, 10, 15])

    G = direct_product(cyclic(2), cyclic(4))
    K = subgroup(G, [0, 2, 4, 6])
    assert not abelian_2group_perfect_code((2, 4), K)

    with pytest.raises(BadParameterError):
        abelian_2group_perfect_code((2, 4), [0, 2])  # |K| < 3
    with pytest.raises(BadParameterError):
        abelian_2group_perfect_code((8,), [0, 2, 4, 6])  # ambient cyclic
    with pytest.raises(BadParameterError):
        abelian_2group_perfect_code((2, 6), [0, 1, 2])  # not a 2-group
    with pytest.raises(NotASubgroupError):
        abelian_2group_perfect_code((2, 4), [0, 1, 2])  # not closed


def test_abelian_2group_matches_generic_decider():
    for factors in abelian_isomorphism_types(32):
        if len(factors) < 2 or any(f & (f - 1) for f in factors):
            continue
        G = abelian(factors)
        for K in all_subgroups(G):
            if len(K) < 3:
                continue
            assert (
                abelian_2group_perfect_code(factors, K)
                == decide_perfect_code(G, K).exists
            ), (factors, K.members)


def test_coordinate_product_form():
    assert coordinate_product_form((4, 4), [0, 4, 8, 12]) == (4, 1)
    assert coordinate_product_form((2, 4), [0, 2, 4, 6]) == (2, 2)
    assert coordinate_product_form((4, 4), [0, 5, 10, 15]) is None


def test_dihedral_catalogue():
    G = dihedral(3)
    for H in normal_subgroups(G):
        assert dihedral_perfect_code(G, H)

    G = dihedral(4)
    H = subgroup_generated(G, [2, 4])  # <a^2, b>
    assert dihedral_perfect_code(G, H)
    H = subgroup_generated(G, [2, 5])  # <a^2, ab>
    assert dihedral_perfect_code(G, H)
    with pytest.raises(NotNormalError):
        dihedral_perfect_code(G, subgroup(G, [0, 4]))

    G = dihedral(12)
    H = subgroup_generated(G, [2])  # <a^2>, order 6, even steps
    assert not dihedral_perfect_code(G, H)
    with pytest.raises(BadParameterError):
        dihedral_perfect_code(cyclic(6), whole_group(cyclic(6)))


def test_dihedral_matches_generic_decider():
    for n in range(3, 13):
        G = dihedral(n)
        for H in normal_subgroups(G):
            assert dihedral_perfect_code(G, H) == decide_perfect_code(G, H).exists, (
                n,
                H.members,
            )


def test_dicyclic_catalogue():
    G = dicyclic(2)
    assert not dicyclic_perfect_code(G, subgroup_generated(G, [1]))  # <a>, order 4
    assert dicyclic_perfect_code(G, whole_group(G))

    G = dicyclic(3)
    assert dicyclic_perfect_code(G, subgroup_generated(G, [2]))  # <a^2>, 6/2=3 odd
    assert dicyclic_perfect_code(G, subgroup_generated(G, [3]))  # <a^3>, order 2

    for n in (2, 3, 4, 5):
        G = dicyclic(n)
        H = subgroup_generated(G, [n])  # <a^n>, the unique involution
        assert len(H) == 2
        assert dicyclic_perfect_code(G, H)

    with pytest.raises(NotNormalError):
        G = dicyclic(3)
        dicyclic_perfect_code(G, subgroup_generated(G, [G.order - 1]))  # <b>
    with pytest.raises(BadParameterError):
        dicyclic_perfect_code(cyclic(8), whole_group(cyclic(8)))


def test_dicyclic_matches_generic_decider():
    for n in range(2, 9):
        G = dicyclic(n)
        for H in normal_subgroups(G):
            assert dicyclic_perfect_code(G, H) == decide_perfect_code(G, H).exists, (
                n,
                H.members,
            )


def test_abelian_total_known_values():
    G = direct_product(cyclic(2), cyclic(5))
    two = [g for g in range(10) if g and G.mul(g, g) == 0]
    assert len(two) == 1
    assert abelian_total_perfect_code(G, subgroup(G, [0] + two))

    G = cyclic(4)
    assert not abelian_total_perfect_code(G, subgroup(G, [0, 2]))

    G = cyclic(6)
    assert abelian_total_perfect_code(G, subgroup(G, [0, 2, 4]))
    # H = {0, 3}: nothing doubles to 3 in Z6, so the graph is a perfect
    # matching and the whole vertex set is a total perfect code
    assert abelian_total_perfect_code(G, subgroup(G, [0, 3]))
    G = cyclic(8)
    assert not abelian_total_perfect_code(G, subgroup(G, [0, 4]))

    with pytest.raises(NotAbelianError):
        abelian_total_perfect_code(dihedral(3), whole_group(dihedral(3)))


def test_abelian_total_matches_generic_decider_up_to_48():
    for factors in abelian_isomorphism_types(48):
        G = abelian(factors) if factors else cyclic(1)
        for H in normal_subgroups(G):
            assert (
                abelian_total_perfect_code(G, H)
                == decide_total_perfect_code(G, H).exists
            ), (factors, H.members)


def test_order_three_coset_scan():
    G = cyclic(6)
    assert order_three_coset_scan(G, subgroup(G, [0, 2, 4]))

    G = dihedral(3)
    assert not order_three_coset_scan(G, subgroup_generated(G, [1]))

    G = cyclic(3)
    assert order_three_coset_scan(G, whole_group(G))

    with pytest.raises(BadParameterError):
        order_three_coset_scan(cyclic(6), subgroup(cyclic(6), [0, 3]))


def test_order_three_scan_equivalent_to_total_code_existence():
    # the scan conditions recognize exactly the groups Z2^n x Z3 with H the
    # order-3 subgroup, which by the total-code catalogue are exactly the
    # |H|=3 cases admitting a total perfect code
    for _, G in sweep_groups(24):
        for H in normal_subgroups(G):
            if len(H) != 3:
                continue
            assert order_three_coset_scan(G, H) == decide_total_perfect_code(G, H).exists


def test_is_code_perfect_bruteforce():
    assert is_code_perfect(cyclic(4))
    assert not is_code_perfect(cyclic(8))
    for n in range(1, 33):
        expected = n % 2 == 1 or (n % 2 == 0 and (n // 2 == 2 or n // 2 % 2 == 1))
        assert is_code_perfect(cyclic(n)) == expected, n

    # odd abelian groups and elementary abelian 2-groups are code-perfect
    assert is_code_perfect(abelian((9, 3)))
    assert is_code_perfect(abelian((5, 5)))
    assert is_code_perfect(elementary_abelian_2(4))
    # dihedral groups of order 6, 10, 14 are code-perfect
    for n in (3, 5, 7):
        assert is_code_perfect(dihedral(n))

    with pytest.raises(BadParameterError):
        is_code_perfect(cyclic(4), method="guess")


def test_is_code_perfect_dedekind():
    assert is_code_perfect(cyclic(4), method="dedekind")
    assert not is_code_perfect(quaternion(), method="dedekind")
    assert not is_code_perfect(dicyclic(2), method="dedekind")
    assert is_code_perfect(direct_product(cyclic(2), cyclic(5)), method="dedekind")
    with pytest.raises(NotDedekindError):
        is_code_perfect(dihedral(3), method="dedekind")

    # agreement with brute force on abelian groups
    for factors in abelian_isomorphism_types(24):
        G = abelian(factors) if factors else cyclic(1)
        assert is_code_perfect(G, method="dedekind") == is_code_perfect(G), factors

    # a Dedekind group that fails does so because a concrete subgroup fails
    G = cyclic(8)
    failing = [
        H.members for H in normal_subgroups(G) if not decide_perfect_code(G, H).exists
    ]
    assert failing == [(0, 2, 4, 6)]
    assert not is_code_perfect(G, method="dedekind")
