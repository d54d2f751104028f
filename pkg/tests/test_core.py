import numpy as np
import pytest

from conftest import relabel
from deltacert.catalog import standard
from deltacert.core import (FiniteGroup, SubgroupRef, direct_product,
                            element_order, from_generators, from_table,
                            semidirect_product)
from deltacert.errors import (InvalidAction, NotAGroup, SizeLimitExceeded)
from deltacert.perm import Permutation
from deltacert.structure import are_isomorphic, conjugacy_classes
from oracles import oracle_associative


def test_trivial_table():
    g = from_table(1, [[0]])
    assert g.order == 1 and g.identity == 0 and g.inv(0) == 0


def test_order_two_table():
    g = from_table(2, [[0, 1], [1, 0]])
    assert g.mul(1, 1) == 0
    assert g.inv(1) == 1


def test_mod3_addition_is_a_group():
    table = [[(i + j) % 3 for j in range(3)] for i in range(3)]
    assert oracle_associative(table)  # all 27 triples
    g = from_table(3, table)
    assert element_order(g, 1) == 3


def test_identity_gets_renumbered_to_zero():
    # addition mod 3 written with the identity at index 2
    sigma = [2, 0, 1]
    table = [[0] * 3 for _ in range(3)]
    for i in range(3):
        for j in range(3):
            table[sigma[i]][sigma[j]] = sigma[(i + j) % 3]
    g = from_table(3, table)
    assert g.identity == 0
    assert np.array_equal(np.sort(g.table[0]), np.arange(3))
    assert g.mul(0, 1) == 1 and g.mul(1, 0) == 1


def test_rejects_non_latin_row():
    with pytest.raises(NotAGroup) as err:
        from_table(2, [[0, 0], [1, 0]])
    assert err.value.kind == "row"


def test_rejects_missing_identity():
    # subtraction mod 3: latin, right identity only
    table = [[(i - j) % 3 for j in range(3)] for i in range(3)]
    with pytest.raises(NotAGroup) as err:
        from_table(3, table)
    assert err.value.kind == "identity"


def test_rejects_non_associative_loop():
    table = [[0, 1, 2, 3, 4],
             [1, 0, 3, 4, 2],
             [2, 4, 0, 1, 3],
             [3, 2, 4, 0, 1],
             [4, 3, 1, 2, 0]]
    assert not oracle_associative(table)
    with pytest.raises(NotAGroup) as err:
        from_table(5, table)
    assert err.value.kind == "associativity"
    assert err.value.witness == (1, 1, 2)


def test_rejects_bad_shape_and_range():
    with pytest.raises(NotAGroup):
        from_table(2, [[0, 1]])
    with pytest.raises(NotAGroup):
        from_table(2, [[0, 2], [2, 0]])


def test_from_generators_empty_gives_trivial_group():
    g = from_generators([])
    assert g.order == 1


def test_from_generators_three_cycle():
    g = from_generators([Permutation.parse("(0 1 2)", 3)])
    assert g.order == 3
    assert element_order(g, 1) == 3


def test_from_generators_symmetric_five():
    gens = [Permutation.parse("(0 1)", 5), Permutation.parse("(0 1 2 3 4)", 5)]
    g = from_generators(gens)
    assert g.order == 120
    assert g.labels is not None and g.labels[0] == Permutation.identity(5)


def test_from_generators_size_limit():
    gens = [Permutation.parse("(0 1)", 5), Permutation.parse("(0 1 2 3 4)", 5)]
    with pytest.raises(SizeLimitExceeded):
        from_generators(gens, size_limit=50)


def test_from_generators_table_round_trip(rng):
    g = from_generators([Permutation.parse("(0 1)", 4),
                         Permutation.parse("(0 1 2 3)", 4)])
    rebuilt = from_table(g.order, g.table.tolist())
    assert are_isomorphic(g, rebuilt) is not None


def test_direct_product_with_trivial_factor():
    s3 = standard("symmetric", 3)
    one = from_table(1, [[0]])
    left = direct_product(one, s3)
    assert left.order == 6
    assert are_isomorphic(left, s3) is not None


def test_direct_product_of_two_order_two_groups():
    c2 = standard("cyclic", 2)
    k4 = direct_product(c2, c2)
    assert k4.order == 4
    assert all(k4.mul(i, i) == 0 for i in range(4))


def test_direct_product_class_sizes():
    g = direct_product(standard("symmetric", 3), standard("cyclic", 2))
    sizes = sorted(c.size for c in conjugacy_classes(g))
    assert sizes == [1, 1, 2, 2, 3, 3]


def test_direct_product_class_count_multiplies():
    s3 = standard("symmetric", 3)
    s4 = standard("symmetric", 4)
    prod = direct_product(s3, s4)
    assert len(conjugacy_classes(prod)) == 3 * 5


def test_direct_product_size_limit(monkeypatch):
    monkeypatch.setenv("DELTA_MAX_ORDER", "100")
    with pytest.raises(SizeLimitExceeded):
        direct_product(standard("cyclic", 11), standard("cyclic", 11))


def _trivial_action(n_group, h_order):
    return [list(range(n_group.order)) for _ in range(h_order)]


def test_semidirect_with_trivial_action_matches_direct():
    c3 = standard("cyclic", 3)
    c4 = standard("cyclic", 4)
    twisted = semidirect_product(c3, c4, _trivial_action(c3, 4))
    plain = direct_product(c3, c4)
    assert np.array_equal(twisted.table, plain.table)


def test_semidirect_c4_by_inversion_is_dihedral():
    c4 = standard("cyclic", 4)
    c2 = standard("cyclic", 2)
    action = [[0, 1, 2, 3], [0, 3, 2, 1]]
    g = semidirect_product(c4, c2, action)
    assert g.order == 8
    assert len(conjugacy_classes(g)) == 5
    assert are_isomorphic(g, standard("dihedral", 4)) is not None


def test_semidirect_frobenius_20_has_trivial_center():
    c5 = standard("cyclic", 5)
    c4 = standard("cyclic", 4)
    mult2 = [0, 2, 4, 1, 3]
    action = [list(range(5)), mult2,
              [mult2[m] for m in mult2],
              [mult2[mult2[m]] for m in mult2]]
    g = semidirect_product(c5, c4, action)
    assert g.order == 20
    center = [x for x in range(20)
              if all(g.mul(x, y) == g.mul(y, x) for y in range(20))]
    assert center == [0]


def test_semidirect_rejects_non_homomorphism_action():
    c3 = standard("cyclic", 3)
    c4 = standard("cyclic", 4)
    # order-2 twist on a generator of an order-4 quotient: phi^2 != id at step 2
    action = [[0, 1, 2], [0, 2, 1], [0, 1, 2], [0, 1, 2]]
    with pytest.raises(InvalidAction):
        semidirect_product(c3, c4, action)


def test_semidirect_rejects_non_automorphism():
    c3 = standard("cyclic", 3)
    c2 = standard("cyclic", 2)
    action = [[0, 1, 2], [1, 0, 2]]  # swaps identity away
    with pytest.raises(InvalidAction):
        semidirect_product(c3, c2, action)


def test_element_orders_divide_group_order():
    for g in (standard("symmetric", 4), standard("dicyclic", 3)):
        for x in range(g.order):
            assert g.order % element_order(g, x) == 0


def test_element_order_examples():
    s5 = from_generators([Permutation.parse("(0 1)", 5),
                          Permutation.parse("(0 1 2 3 4)", 5)])
    assert element_order(s5, 0) == 1
    c2 = standard("cyclic", 2)
    assert element_order(c2, 1) == 2
    five_cycles = [i for i in range(120)
                   if len(s5.labels[i].cycle_string().split()) == 5
                   and s5.labels[i].cycle_string().count("(") == 1]
    assert five_cycles and all(element_order(s5, i) == 5 for i in five_cycles)


def test_table_is_immutable():
    g = standard("cyclic", 3)
    with pytest.raises(ValueError):
        g.table[0, 0] = 1


def test_subgroup_ref_validates():
    s3 = standard("symmetric", 3)
    with pytest.raises(NotAGroup):
        SubgroupRef(s3, (1, 2))  # no identity
    whole = SubgroupRef(s3, tuple(range(6)))
    assert whole.index == 1


def test_group_json_round_trip():
    g = standard("symmetric", 3)
    doc = g.to_json_dict()
    back = FiniteGroup.from_json_dict(doc)
    assert np.array_equal(back.table, g.table)
    assert back.labels == g.labels


def test_relabeled_copy_is_isomorphic(rng):
    g = standard("dihedral", 6)
    h = relabel(g, rng)
    assert are_isomorphic(g, h) is not None
