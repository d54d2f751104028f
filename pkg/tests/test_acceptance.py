"""Acceptance suite: one test per criterion, each timed against its limit.

Run with ``pytest tests/test_acceptance.py -v -s`` to see one line per
criterion. Kernel JIT warmup happens in a session fixture, so the timed
sections measure steady-state work.
"""

import itertools
import time

import numpy as np
import pytest

from conftest import relabel
from deltacert.canonical import (canonical_isomorphism, expected_group,
                                 proof_replay)
from deltacert.catalog import build_catalog, standard, verify_uniqueness
from deltacert.core import direct_product
from deltacert.groupspec import (builtin_spec, certify, check_refinement,
                                 product_spec)
from deltacert.structure import (are_isomorphic, conjugacy_classes,
                                 derived_subgroup, index2_subgroups,
                                 is_ambivalent)
from oracles import oracle_conjugacy_partition, oracle_is_ambivalent


class Timer:
    def __init__(self, label, limit_s):
        self.label = label
        self.limit_s = limit_s

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.start
        status = "PASS" if exc_type is None else "FAIL"
        print(f"\n[acceptance] {self.label}: {status} ({elapsed:.2f}s, "
              f"limit {self.limit_s:g}s)")
        if exc_type is None and elapsed >= self.limit_s:
            raise AssertionError(
                f"{self.label} took {elapsed:.2f}s, over the {self.limit_s}s "
                "limit")


PAPER_CLASS_DATA = {
    6: [(1, 6), (2, 3), (3, 2)],
    24: [(1, 24), (3, 8), (6, 4), (6, 4), (8, 3)],
    120: [(1, 120), (10, 12), (15, 8), (20, 6), (20, 6), (24, 5), (30, 4)],
}

CERTIFIED_ORDERS = (1, 2, 4, 8, 16, 6, 24, 120)


def test_criterion_01_class_data_reproduction():
    with Timer("1 class-data reproduction", 1.0):
        for c, expected in PAPER_CLASS_DATA.items():
            got = sorted((cls.size, cls.centralizer_order)
                         for cls in conjugacy_classes(expected_group(c)))
            assert got == sorted(expected), (c, got)


def test_criterion_02_certification_of_reference_groups():
    with Timer("2 certification", 1.0):
        for c in CERTIFIED_ORDERS:
            cert = certify(expected_group(c), builtin_spec(c))
            assert cert.overall, (c, cert.to_json_dict())


def test_criterion_03_uniqueness_at_6_and_24():
    with Timer("3 uniqueness at orders 6 and 24", 30.0):
        report6 = verify_uniqueness(6, builtin_spec(6))
        assert report6.passers == ("S3",)
        assert len(report6.entry_names) == 2

        entries = build_catalog(24, dedup=False)
        assert len(entries) == 15
        for a, b in itertools.combinations(entries, 2):
            assert are_isomorphic(a.group, b.group) is None, (a.name, b.name)
        report24 = verify_uniqueness(24, builtin_spec(24))
        assert report24.passers == ("S4",)
        assert len(report24.entry_names) == 15


def test_criterion_04_uniqueness_at_120():
    with Timer("4 uniqueness at order 120", 300.0):
        entries = build_catalog(120, dedup=False)
        names = {e.name for e in entries}
        assert {"SL(2,5)", "A5 x C2", "C120", "S5"} <= names
        assert len(entries) >= 12
        for a, b in itertools.combinations(entries, 2):
            assert are_isomorphic(a.group, b.group) is None, (a.name, b.name)
        report = verify_uniqueness(120, builtin_spec(120))
        assert report.passers == ("S5",)


def test_criterion_05_proof_replay():
    with Timer("5 proof replay", 1.0):
        rep24 = proof_replay(expected_group(24), builtin_spec(24))
        assert rep24.all_passed
        assert [a.name for a in rep24.assertions] == [
            "order3-conjugator-squares-to-identity",
            "conjugator-coset-is-one-class",
            "size3-class-not-inside-kernel",
        ]

        rep120 = proof_replay(expected_group(120), builtin_spec(120))
        assert rep120.all_passed
        by_name = {a.name: a for a in rep120.assertions}
        assert by_name["square-centralizer-has-order-8"].witnesses[
            "centralizer_order"] == 8
        assert "order4-elements-fill-size30-class" in by_name
        assert "marking-fibers-have-size-3" in by_name
        assert by_name["complement-classes-have-sizes-30-20-10"].witnesses[
            "outside_sizes"] == [10, 20, 30]


def test_criterion_06_canonical_isomorphism_robustness():
    rng = np.random.default_rng(1637357)
    with Timer("6 canonical isomorphism under relabeling", 60.0):
        for c in (6, 24, 120):
            spec = builtin_spec(c)
            reference = expected_group(c)
            target_table = expected_group(c).table
            for _ in range(100):
                g = relabel(reference, rng)
                iso = canonical_isomorphism(g, spec)
                m = iso.mapping
                # independent full n^2-pair homomorphism re-check
                assert np.array_equal(m[g.table],
                                      target_table[m[:, None], m[None, :]])
                assert np.unique(m).size == c


def test_criterion_07_product_rule():
    with Timer("7 product rule", 10.0):
        from deltacert.errors import UnsupportedC
        checked = 0
        for c1 in CERTIFIED_ORDERS:
            for c2 in CERTIFIED_ORDERS:
                try:
                    spec = product_spec(builtin_spec(c1), builtin_spec(c2))
                except UnsupportedC:
                    continue
                g = direct_product(expected_group(c1), expected_group(c2))
                assert certify(g, spec).overall, (c1, c2)
                checked += 1
        assert checked >= 20  # all (1, x) pairs plus 2-power and 4*6 mixes


def test_criterion_08_refinement():
    with Timer("8 refinement", 1.0):
        s4 = expected_group(24)
        v24 = check_refinement(s4, builtin_spec(24), derived_subgroup(s4))
        assert v24.passed and v24.inside_sizes == (1, 3, 8)

        s5 = expected_group(120)
        alternating = index2_subgroups(s5)[0]
        v120 = check_refinement(s5, builtin_spec(120), alternating)
        assert v120.passed and v120.inside_sizes == (1, 15, 20, 24)


def test_criterion_09_negative_suite():
    with Timer("9 negative suite", 1.0):
        c4 = certify(standard("cyclic", 4), builtin_spec(4))
        assert (c4.a.status, c4.c.status, c4.d.status) == ("pass",) * 3
        assert c4.b.status == "fail" and "witness" in c4.b.details

        sl = certify(standard("special-linear-2-p", 5), builtin_spec(120))
        assert sl.c.status == "fail" and sl.d.status == "fail"
        assert sl.c.details["computed"] != sl.c.details["expected"]
        assert sl.d.details["count"] == 0

        a5c2 = certify(direct_product(standard("alternating", 5),
                                      standard("cyclic", 2)),
                       builtin_spec(120))
        assert a5c2.c.status == "fail"
        assert sorted(a5c2.c.details["computed"]) != \
            sorted(a5c2.c.details["expected"])
        assert a5c2.b.status == "pass" and a5c2.d.status == "pass"


def test_criterion_10_oracle_equivalence():
    with Timer("10 oracle equivalence", 10.0):
        groups = [e for e in build_catalog(6)] + [e for e in build_catalog(24)]
        assert len(groups) == 17
        for entry in groups:
            table = entry.group.table.tolist()
            ours = {frozenset(c.members)
                    for c in conjugacy_classes(entry.group)}
            assert ours == set(oracle_conjugacy_partition(table)), entry.name
            assert is_ambivalent(entry.group)[0] == \
                oracle_is_ambivalent(table)[0], entry.name
