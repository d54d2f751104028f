"""Canonical identification of certified groups and proof replay.

For a group that passes certification, this module constructs the
explicit isomorphism onto the reference group of its order: the trivial
group, an elementary abelian 2-group, or the symmetric group on 3, 4 or
5 letters. For the symmetric-group cases the map comes from a canonical
3/4/5-element marking set on which the group acts by conjugation:

  order 6:   the three elements of order 2;
  order 24:  the four pairs {y, y^-1} of elements of order 3;
  order 120: the five triples Z(z) intersected with the 15-element class,
             z running over that class.

``proof_replay`` re-verifies, step by step, the intermediate structural
facts that make the construction work, and reports them with witnesses.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable

import numpy as np

from . import structure
from .core import FiniteGroup, SubgroupRef, element_order, from_generators, from_table
from .errors import NotStable, PropertyViolation, UnsupportedC
from .groupspec import SpecialSpec, certify, supported_c
from .perm import Permutation
from .structure import Isomorphism

CASES = ("power-of-two", "six", "twenty-four", "one-twenty")
_CASE_BY_C = {6: "six", 24: "twenty-four", 120: "one-twenty"}


@dataclass(frozen=True)
class MarkingSet:
    """The canonical block family; blocks are sorted and listed in
    ascending order of their smallest element, which fixes the labeling."""

    case: str
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.case not in CASES:
            raise ValueError(f"unknown case {self.case!r}")
        blocks = tuple(tuple(sorted(b)) for b in self.blocks)
        blocks = tuple(sorted(blocks, key=lambda b: b[0]))
        object.__setattr__(self, "blocks", blocks)

    @property
    def size(self) -> int:
        return len(self.blocks)


@dataclass(frozen=True)
class ReplayAssertion:
    name: str
    passed: bool
    witnesses: dict[str, Any]

    def to_json_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed,
                "witnesses": self.witnesses}


@dataclass(frozen=True)
class ReplayReport:
    """Ordered assertion outcomes plus which certified properties the
    replayed argument actually consumed."""

    assertions: tuple[ReplayAssertion, ...]
    properties_used: tuple[str, ...]
    blocks: tuple[tuple[int, ...], ...]

    @property
    def all_passed(self) -> bool:
        return all(a.passed for a in self.assertions)

    def to_json_dict(self) -> dict:
        return {"assertions": [a.to_json_dict() for a in self.assertions],
                "properties_used": list(self.properties_used),
                "blocks": [list(b) for b in self.blocks],
                "all_passed": self.all_passed}


def expected_group(c: int) -> FiniteGroup:
    """The reference group of order c, deterministically numbered."""
    if not supported_c(c):
        raise UnsupportedC(f"no reference group for c={c}")
    if c == 1:
        return from_table(1, [[0]])
    if c in _CASE_BY_C:
        m = {6: 3, 24: 4, 120: 5}[c]
        transposition = Permutation.parse("(0 1)", m)
        cycle = Permutation(tuple(list(range(1, m)) + [0]))
        return from_generators([transposition, cycle])
    # power of two: bitwise xor on 0..c-1
    idx = np.arange(c, dtype=np.int32)
    return from_table(c, np.bitwise_xor(idx[:, None], idx[None, :]))


def _require_certified(group: FiniteGroup, spec: SpecialSpec) -> None:
    cert = certify(group, spec)
    if not cert.overall:
        raise PropertyViolation(
            f"group does not satisfy the spec for c={spec.c}: "
            f"property {cert.first_failing()!r} fails")


def build_marking_set(group: FiniteGroup, spec: SpecialSpec) -> MarkingSet:
    """Construct the canonical marking set of a certified group."""
    _require_certified(group, spec)
    if spec.c not in _CASE_BY_C:
        raise UnsupportedC(f"marking sets exist only for c in 6, 24, 120; "
                           f"got {spec.c}")
    case = _CASE_BY_C[spec.c]
    classes = structure.conjugacy_classes(group)

    if spec.c == 6:
        involutions = [g for g in range(group.order)
                       if element_order(group, g) == 2]
        if len(involutions) != 3:
            raise PropertyViolation(
                f"expected 3 elements of order 2, found {len(involutions)}")
        blocks = [(g,) for g in involutions]
    elif spec.c == 24:
        order3 = [g for g in range(group.order)
                  if element_order(group, g) == 3]
        pairs = {tuple(sorted((g, group.inv(g)))) for g in order3}
        if len(order3) != 8 or len(pairs) != 4:
            raise PropertyViolation(
                f"expected 8 elements of order 3 in 4 inverse pairs, found "
                f"{len(order3)} in {len(pairs)} pairs")
        blocks = sorted(pairs)
    else:
        fifteen = [c for c in classes
                   if c.size == 15 and c.centralizer_order == 8]
        if len(fifteen) != 1:
            raise PropertyViolation(
                "expected exactly one class of size 15 with centralizer "
                f"order 8, found {len(fifteen)}")
        members = set(fifteen[0].members)
        seen = set()
        for z in sorted(members):
            zmask = structure.centralizer_mask(group, z)
            block = tuple(sorted(x for x in members if zmask[x]))
            if len(block) != 3:
                raise PropertyViolation(
                    f"centralizer slice of element {z} has {len(block)} "
                    "members, expected 3")
            seen.add(block)
        blocks = sorted(seen)
        if len(blocks) != 5:
            raise PropertyViolation(
                f"expected 5 blocks, found {len(blocks)}")
        flat = [x for b in blocks for x in b]
        if len(set(flat)) != 15 or set(flat) != members:
            raise PropertyViolation("blocks do not partition the class")

    # blocks must jointly cover one conjugacy class
    flat = sorted(x for b in blocks for x in b)
    if not any(tuple(flat) == c.members for c in classes):
        raise PropertyViolation("blocks do not cover a single conjugacy class")
    return MarkingSet(case=case, blocks=tuple(blocks))


def conjugation_action(group: FiniteGroup, marking: MarkingSet
                       ) -> tuple[tuple[Permutation, ...], SubgroupRef]:
    """Block permutation induced by conjugation, per group element.

    Returns one permutation of the block labels per element together with
    the kernel of the action.
    """
    n = group.order
    block_of = {}
    for b, block in enumerate(marking.blocks):
        for x in block:
            block_of[x] = b
    m = marking.size
    perms = []
    kernel_members = []
    for g in range(n):
        images = []
        for block in marking.blocks:
            targets = {block_of.get(group.conjugate(x, g)) for x in block}
            if len(targets) != 1 or None in targets:
                raise NotStable(
                    f"element {g} does not permute the block family")
            images.append(targets.pop())
        if sorted(images) != list(range(m)):
            raise NotStable(f"element {g} collapses two blocks")
        perm = Permutation(tuple(images))
        perms.append(perm)
        if perm.images == tuple(range(m)):
            kernel_members.append(g)
    return tuple(perms), SubgroupRef(group, tuple(kernel_members))


def _two_group_basis_map(group: FiniteGroup) -> np.ndarray:
    """Map an exponent-2 group onto the xor group via a greedy basis."""
    n = group.order
    mapping = np.full(n, -1, dtype=np.int64)
    mapping[0] = 0
    bit = 0
    for g in range(1, n):
        if mapping[g] >= 0:
            continue
        known = np.nonzero(mapping >= 0)[0]
        mapping[group.table[known, g]] = mapping[known] | (1 << bit)
        bit += 1
    if (1 << bit) != n:
        raise PropertyViolation("group is not elementary abelian of "
                                "2-power order")
    return mapping.astype(np.int32)


def canonical_isomorphism(group: FiniteGroup, spec: SpecialSpec) -> Isomorphism:
    """Explicit isomorphism from a certified group onto its reference group.

    The result is re-verified against the full homomorphism identity
    before being returned.
    """
    _require_certified(group, spec)
    target = expected_group(spec.c)
    blocks = None
    if spec.c == 1:
        mapping = np.zeros(1, dtype=np.int32)
    elif spec.c in _CASE_BY_C:
        marking = build_marking_set(group, spec)
        blocks = marking.blocks
        perms, kernel = conjugation_action(group, marking)
        if kernel.order != 1:
            raise PropertyViolation(
                f"conjugation action has kernel of order {kernel.order}")
        assert target.labels is not None
        label_index = {p.images: i for i, p in enumerate(target.labels)}
        mapping = np.empty(group.order, dtype=np.int32)
        seen = set()
        for g, perm in enumerate(perms):
            idx = label_index.get(perm.images)
            if idx is None or idx in seen:
                raise PropertyViolation(
                    "conjugation action is not bijective onto the "
                    "reference group")
            seen.add(idx)
            mapping[g] = idx
    else:
        mapping = _two_group_basis_map(group)

    try:
        return Isomorphism(group, target, mapping, blocks=blocks)
    except ValueError as exc:
        raise PropertyViolation(f"canonical map failed re-verification: {exc}")


def _conjugator_candidates(group: FiniteGroup, base: int, want: int) -> list[int]:
    """All x with x * base * x^-1 == want."""
    return [x for x in range(group.order)
            if group.conjugate(base, x) == want]


def _class_of(classes, g: int):
    for c in classes:
        if g in c.members:
            return c
    raise AssertionError("element missing from every class")


def proof_replay(group: FiniteGroup, spec: SpecialSpec) -> ReplayReport:
    """Replay the structural argument for the group's canonical shape.

    Each intermediate fact is evaluated as a named assertion, in argument
    order, with the elements it is about recorded as witnesses. Raises
    PropertyViolation at the first failed assertion.
    """
    _require_certified(group, spec)
    if spec.c not in _CASE_BY_C:
        raise UnsupportedC(
            f"replay is defined for c in 6, 24, 120; got {spec.c}")

    marking = build_marking_set(group, spec)
    assertions: list[ReplayAssertion] = []

    def check(name: str, passed: bool, **witnesses: Any) -> None:
        assertions.append(ReplayAssertion(name, bool(passed), witnesses))
        if not passed:
            raise PropertyViolation(f"replay assertion {name!r} failed "
                                    f"(witnesses {witnesses})")

    if spec.c == 6:
        _replay_six(group, marking, check)
        used = ("a", "c")
    elif spec.c == 24:
        _replay_twenty_four(group, marking, check)
        used = ("a", "c")
    else:
        _replay_one_twenty(group, marking, check)
        used = ("a", "c", "d")
    return ReplayReport(assertions=tuple(assertions), properties_used=used,
                        blocks=marking.blocks)


def _replay_six(group: FiniteGroup, marking: MarkingSet,
                check: Callable[..., None]) -> None:
    classes = structure.conjugacy_classes(group)
    involutions = [b[0] for b in marking.blocks]
    cls = _class_of(classes, involutions[0])
    check("three-involutions-form-one-class",
          len(involutions) == 3 and cls.members == tuple(involutions),
          involutions=involutions)
    for s in involutions:
        z = structure.centralizer(group, s)
        check("involution-centralizer-is-pair",
              z.members == tuple(sorted((0, s))),
              element=s, centralizer=list(z.members))
    _, kernel = conjugation_action(group, marking)
    check("action-kernel-trivial", kernel.members == (0,),
          kernel=list(kernel.members))


def _replay_twenty_four(group: FiniteGroup, marking: MarkingSet,
                        check: Callable[..., None]) -> None:
    classes = structure.conjugacy_classes(group)
    ids = structure.class_id_array(group)
    orders = [element_order(group, g) for g in range(group.order)]

    u = min(g for g in range(group.order) if orders[g] == 3)
    u2 = group.mul(u, u)
    conjugators = _conjugator_candidates(group, u, u2)
    check("order3-conjugator-squares-to-identity",
          bool(conjugators) and all(group.mul(x, x) == 0 for x in conjugators),
          u=u, conjugators=conjugators)
    s = conjugators[0]

    us = group.mul(u, s)
    uus = group.mul(u2, s)
    check("conjugator-coset-is-one-class",
          ids[s] == ids[us] == ids[uus]
          and orders[s] == orders[us] == orders[uus] == 2,
          s=s, us=us, uus=uus)

    _, kernel = conjugation_action(group, marking)
    size3 = next(c for c in classes if c.size == 3)
    kernel_set = set(kernel.members)
    check("size3-class-not-inside-kernel",
          any(g not in kernel_set for g in size3.members),
          class_members=list(size3.members), kernel=list(kernel.members))


def _replay_one_twenty(group: FiniteGroup, marking: MarkingSet,
                       check: Callable[..., None]) -> None:
    classes = structure.conjugacy_classes(group)
    ids = structure.class_id_array(group)
    sizes = np.bincount(ids)
    orders = [element_order(group, g) for g in range(group.order)]

    u = min(g for g in range(group.order) if orders[g] == 5)
    u2 = group.mul(u, u)
    conjugators = _conjugator_candidates(group, u, u2)
    check("order5-conjugator-has-order-4",
          bool(conjugators) and all(orders[x] == 4 for x in conjugators),
          u=u, conjugators=conjugators)
    s = conjugators[0]

    order4 = [g for g in range(group.order) if orders[g] == 4]
    check("order4-elements-fill-size30-class",
          all(sizes[ids[g]] == 30 for g in order4),
          count=len(order4))

    s_inv = group.inv(s)
    inverters = _conjugator_candidates(group, s, s_inv)
    check("inverting-element-is-involution",
          bool(inverters) and all(group.mul(x, x) == 0 for x in inverters),
          s=s, inverters=inverters)
    w = inverters[0]

    s2 = group.mul(s, s)
    z_s2 = structure.centralizer(group, s2)
    check("square-centralizer-has-order-8",
          z_s2.order == 8 and sizes[ids[s2]] == 15,
          s2=s2, centralizer_order=z_s2.order,
          class_size=int(sizes[ids[s2]]))

    sw = group.mul(s, w)
    span = structure.generated_subgroup(group, [w, sw])
    check("square-centralizer-is-dihedral-8",
          orders[w] == 2 and orders[sw] == 2
          and orders[group.mul(w, sw)] == 4
          and span.members == z_s2.members,
          generators=[w, sw], product_order=orders[group.mul(w, sw)])

    ws = group.mul(w, s)
    zw = int(structure.centralizer_mask(group, w).sum())
    zws = int(structure.centralizer_mask(group, ws).sum())
    check("inverter-pair-splits-15-10",
          {zw, zws} == {8, 12},
          w=w, ws=ws, centralizer_orders=[zw, zws])
    if zw == 12:
        w, ws = ws, w  # keep w in the 15-element class, as the argument does

    block_of = {}
    for block in marking.blocks:
        for x in block:
            block_of[x] = block
    fifteen = next(c for c in classes
                   if c.size == 15 and c.centralizer_order == 8)
    fibers_ok = True
    for z in fifteen.members:
        zmask = structure.centralizer_mask(group, z)
        fiber = tuple(sorted(x for x in fifteen.members if zmask[x]))
        if len(fiber) != 3 or fiber != block_of[z]:
            fibers_ok = False
            break
    check("marking-fibers-have-size-3",
          fibers_ok and len(marking.blocks) == 5,
          block_count=len(marking.blocks))

    subs = structure.index2_subgroups(group)
    check("unique-index-2-subgroup", len(subs) == 1, count=len(subs))
    mask = subs[0].member_mask()
    outside = sorted(c.size for c in classes if not mask[c.representative])
    check("complement-classes-have-sizes-30-20-10",
          outside == [10, 20, 30],
          outside_sizes=outside)
