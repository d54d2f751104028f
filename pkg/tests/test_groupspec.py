import pytest

from conftest import relabel
from deltacert.canonical import expected_group
from deltacert.catalog import standard
from deltacert.core import direct_product
from deltacert.errors import InvalidSpec, NotIndexTwo, UnsupportedC
from deltacert.groupspec import (SpecialSpec, builtin_spec, certify,
                                 check_refinement, product_spec)
from deltacert.structure import derived_subgroup, index2_subgroups


def test_supported_orders():
    for c in (1, 2, 4, 8, 1024, 8192, 6, 24, 120):
        assert builtin_spec(c).c == c


def test_unsupported_orders_rejected():
    for c in (0, 3, 5, 12, 60, 720, 5040, 16384):
        with pytest.raises(UnsupportedC):
            builtin_spec(c)
    with pytest.raises(UnsupportedC, match="720"):
        builtin_spec(720)


def test_builtin_class_size_lists():
    assert builtin_spec(6).class_sizes == (1, 2, 3)
    assert builtin_spec(24).class_sizes == (1, 3, 6, 6, 8)
    assert builtin_spec(8).class_sizes == (1,) * 8
    assert builtin_spec(120).class_sizes == (1, 10, 15, 20, 20, 24, 30)


def test_builtin_sizes_sum_to_c():
    for c in (1, 2, 4, 8, 16, 6, 24, 120):
        assert sum(builtin_spec(c).class_sizes) == c


def test_builtin_parity_split():
    s24 = builtin_spec(24)
    assert s24.even_sizes() == (1, 3, 8)
    assert s24.odd_sizes() == (6, 6)
    s120 = builtin_spec(120)
    assert s120.even_sizes() == (1, 15, 20, 24)
    assert s120.odd_sizes() == (10, 20, 30)
    assert builtin_spec(16).parities is None


def test_spec_invariants_enforced():
    with pytest.raises(InvalidSpec):
        SpecialSpec(6, (1, 2, 2))  # wrong sum
    with pytest.raises(InvalidSpec):
        SpecialSpec(6, (2, 4))  # no identity class
    with pytest.raises(InvalidSpec):
        SpecialSpec(24, (1, 3, 4, 7, 9))  # 7 and 9 do not divide 24
    with pytest.raises(InvalidSpec):
        SpecialSpec(6, (1, 2, 3), parities=((1, 0), (2, 0), (4, 1)))


def test_spec_json_round_trip():
    spec = builtin_spec(24)
    back = SpecialSpec.from_json_dict(spec.to_json_dict())
    assert back == spec


def test_certify_passes_on_reference_groups():
    for c in (1, 2, 4, 8, 16, 32, 64, 6, 24, 120):
        cert = certify(expected_group(c), builtin_spec(c))
        assert cert.overall, (c, cert.to_json_dict())
        if c == 1:
            assert cert.d.status == "not-applicable"


def test_certify_cyclic4_fails_exactly_ambivalence():
    cert = certify(standard("cyclic", 4), builtin_spec(4))
    assert cert.a.status == "pass"
    assert cert.c.status == "pass"
    assert cert.d.status == "pass"
    assert cert.b.status == "fail"
    assert cert.b.details["witness"] in (1, 3)  # an order-4 element
    assert not cert.overall


def test_certify_sl25_fails_class_list_and_index2():
    cert = certify(standard("special-linear-2-p", 5), builtin_spec(120))
    assert cert.a.status == "pass"
    assert cert.c.status == "fail"
    assert cert.d.status == "fail"
    assert sorted(cert.c.details["computed"]) != sorted(cert.c.details["expected"])
    assert cert.d.details["count"] == 0


def test_certify_reports_all_verdicts_without_short_circuit():
    cert = certify(standard("cyclic", 6), builtin_spec(6))
    assert cert.b.status == "fail" and cert.c.status == "fail"
    assert cert.a.status == "pass" and cert.d.status == "pass"


def test_certify_is_isomorphism_invariant(rng):
    spec = builtin_spec(24)
    for group in (standard("symmetric", 4), standard("cyclic", 24)):
        base = certify(group, spec)
        for _ in range(3):
            copy = certify(relabel(group, rng), spec)
            assert [v.status for v in (copy.a, copy.b, copy.c, copy.d)] == \
                   [v.status for v in (base.a, base.b, base.c, base.d)]


def test_power_of_two_passers_have_exponent_two():
    # whenever (a), (b), (c) hold at a 2-power order, every square is trivial
    for group in (expected_group(4), expected_group(8), standard("cyclic", 4)):
        spec = builtin_spec(group.order)
        cert = certify(group, spec)
        if cert.a.status == cert.b.status == cert.c.status == "pass":
            assert all(group.mul(x, x) == 0 for x in range(group.order))


def test_refinement_on_symmetric_four():
    s4 = standard("symmetric", 4)
    verdict = check_refinement(s4, builtin_spec(24), derived_subgroup(s4))
    assert verdict.passed
    assert verdict.inside_sizes == (1, 3, 8)
    assert verdict.outside_sizes == (6, 6)


def test_refinement_on_symmetric_five():
    s5 = standard("symmetric", 5)
    alt = index2_subgroups(s5)[0]
    verdict = check_refinement(s5, builtin_spec(120), alt)
    assert verdict.passed
    assert verdict.inside_sizes == (1, 15, 20, 24)


def test_refinement_fails_on_all_even_klein_spec():
    k4 = standard("elementary-abelian-2", 2)
    spec = SpecialSpec(4, (1, 1, 1, 1),
                       parities=((1, 0), (1, 0), (1, 0), (1, 0)))
    sub = index2_subgroups(k4)[0]
    verdict = check_refinement(k4, spec, sub)
    assert not verdict.passed
    assert verdict.outside_sizes == (1, 1)
    assert verdict.expected_outside == ()


def test_refinement_requires_index_two():
    s4 = standard("symmetric", 4)
    from deltacert.core import SubgroupRef
    whole = SubgroupRef(s4, tuple(range(24)))
    with pytest.raises(NotIndexTwo):
        check_refinement(s4, builtin_spec(24), whole)


def test_refinement_requires_parities():
    s4 = standard("symmetric", 4)
    spec = SpecialSpec(24, (1, 3, 6, 6, 8))
    with pytest.raises(InvalidSpec):
        check_refinement(s4, spec, derived_subgroup(s4))


def test_product_spec_identity_case():
    prod = product_spec(builtin_spec(1), builtin_spec(24))
    assert prod.c == 24
    assert prod.class_sizes == builtin_spec(24).class_sizes


def test_product_spec_of_two_order_two():
    prod = product_spec(builtin_spec(2), builtin_spec(2))
    assert prod.c == 4 and prod.class_sizes == (1, 1, 1, 1)


def test_product_spec_matches_builtin_eight():
    prod = product_spec(builtin_spec(2), builtin_spec(4))
    assert prod.c == 8
    assert prod.class_sizes == builtin_spec(8).class_sizes


def test_product_spec_adds_parities_mod_two():
    s = product_spec(builtin_spec(24), builtin_spec(1))
    assert s.parities is None  # one factor has no parities
    both = product_spec(SpecialSpec(2, (1, 1), parities=((1, 0), (1, 1))),
                        SpecialSpec(2, (1, 1), parities=((1, 0), (1, 1))))
    assert both.parities == ((1, 0), (1, 0), (1, 1), (1, 1))


def test_product_spec_rejects_unsupported_product():
    with pytest.raises(UnsupportedC):
        product_spec(builtin_spec(2), builtin_spec(6))  # 12 unsupported
    with pytest.raises(UnsupportedC):
        product_spec(builtin_spec(24), builtin_spec(24))


def test_mixed_product_four_six_certifies():
    spec = product_spec(builtin_spec(4), builtin_spec(6))
    group = direct_product(expected_group(4), expected_group(6))
    assert certify(group, spec).overall
