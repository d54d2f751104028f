"""Structural analysis: conjugacy data, distinguished subgroups, isomorphism.

All functions are pure and operate on immutable ``FiniteGroup`` values.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels, limits
from .core import FiniteGroup, SubgroupRef
from .errors import SearchBudgetExceeded


@dataclass(frozen=True)
class ConjugacyClass:
    """One conjugacy class: sorted members, their common order, |Z(rep)|."""

    representative: int
    members: tuple[int, ...]
    centralizer_order: int
    element_order: int

    @property
    def size(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class ClassProfile:
    """Multiset of (class size, centralizer order, element order) triples."""

    entries: tuple[tuple[int, int, int], ...]

    @classmethod
    def of(cls, group: FiniteGroup) -> "ClassProfile":
        classes = conjugacy_classes(group)
        return cls(tuple(sorted((c.size, c.centralizer_order, c.element_order)
                                for c in classes)))

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(sorted(size for size, _, _ in self.entries))

    def to_json_list(self) -> list[dict]:
        return [{"size": s, "centralizer": z, "element_order": o}
                for s, z, o in self.entries]


@dataclass(frozen=True)
class Isomorphism:
    """A verified multiplication-preserving bijection between two groups.

    ``blocks`` carries the marking-set structure when the map came out of
    the canonical construction, so the correspondence can be audited.
    """

    source: FiniteGroup
    target: FiniteGroup
    mapping: np.ndarray
    blocks: tuple[tuple[int, ...], ...] | None = None

    def __post_init__(self):
        m = np.ascontiguousarray(np.asarray(self.mapping, dtype=np.int32))
        m.flags.writeable = False
        object.__setattr__(self, "mapping", m)
        n = self.source.order
        if self.target.order != n or m.shape != (n,):
            raise ValueError("isomorphism shape mismatch")
        if m[0] != 0:
            raise ValueError("isomorphism must fix the identity")
        if np.unique(m).size != n:
            raise ValueError("isomorphism mapping is not a bijection")
        i, j = kernels.hom_defect(self.source.table, self.target.table, m)
        if i >= 0:
            raise ValueError(f"not a homomorphism: fails at pair ({i},{j})")

    def apply(self, g: int) -> int:
        return int(self.mapping[g])

    def to_json_dict(self) -> dict:
        doc = {"source_order": self.source.order,
               "target_order": self.target.order,
               "mapping": self.mapping.tolist()}
        if self.blocks is not None:
            doc["blocks"] = [list(b) for b in self.blocks]
        return doc


def conjugacy_classes(group: FiniteGroup) -> list[ConjugacyClass]:
    """Partition into conjugacy classes, sorted by (size, order, rep).

    The orbit-stabilizer identity size * |Z(rep)| = |G| is recomputed from
    an explicit centralizer on every call and asserted.
    """
    n = group.order
    ids = kernels.class_ids(group.table, group.inverse)
    orders = kernels.element_orders(group.table)
    classes = []
    for cid in range(int(ids.max()) + 1):
        members = np.nonzero(ids == cid)[0]
        rep = int(members[0])
        zorder = int(centralizer_mask(group, rep).sum())
        if len(members) * zorder != n:
            raise AssertionError(
                f"orbit-stabilizer violated for class of {rep}: "
                f"{len(members)} * {zorder} != {n}")
        classes.append(ConjugacyClass(
            representative=rep,
            members=tuple(int(m) for m in members),
            centralizer_order=zorder,
            element_order=int(orders[rep])))
    classes.sort(key=lambda c: (c.size, c.element_order, c.representative))
    return classes


def class_id_array(group: FiniteGroup) -> np.ndarray:
    """Raw per-element class ids (discovery order, not the sorted order)."""
    return kernels.class_ids(group.table, group.inverse)


def centralizer_mask(group: FiniteGroup, g: int) -> np.ndarray:
    return group.table[:, g] == group.table[g, :]


def centralizer(group: FiniteGroup, g: int) -> SubgroupRef:
    """All elements commuting with g."""
    members = np.nonzero(centralizer_mask(group, g))[0]
    return SubgroupRef(group, tuple(int(m) for m in members))


def is_ambivalent(group: FiniteGroup) -> tuple[bool, int | None]:
    """Whether every element is conjugate to its inverse.

    Returns (True, None) or (False, witness) with the smallest witness.
    """
    ids = kernels.class_ids(group.table, group.inverse)
    bad = np.nonzero(ids != ids[group.inverse])[0]
    if bad.size:
        return False, int(bad[0])
    return True, None


def generated_subgroup(group: FiniteGroup, seeds) -> SubgroupRef:
    """Subgroup generated by the seed elements."""
    seed_arr = np.asarray(sorted(set(int(s) for s in seeds)), dtype=np.int32)
    mask = kernels.generated_mask(group.table, seed_arr)
    return SubgroupRef(group, tuple(int(m) for m in np.nonzero(mask)[0]))


def derived_subgroup(group: FiniteGroup) -> SubgroupRef:
    """Subgroup generated by all commutators."""
    n = group.order
    t = group.table
    inv = group.inverse
    x = np.arange(n)
    xy = t
    x_inv = inv[x]
    comms = t[t[xy, x_inv[:, None]], inv[None, :]]  # x*y*x^-1*y^-1
    return generated_subgroup(group, np.unique(comms))


def _squares(group: FiniteGroup) -> np.ndarray:
    idx = np.arange(group.order)
    return np.unique(group.table[idx, idx])


def index2_subgroups(group: FiniteGroup) -> list[SubgroupRef]:
    """All index-2 subgroups.

    These are exactly the kernels of surjections onto the 2-element group,
    i.e. the pullbacks of hyperplanes in the quotient by the subgroup
    generated by commutators and squares (an elementary abelian 2-group).
    """
    n = group.order
    t = group.table
    comm = derived_subgroup(group)
    seeds = np.unique(np.concatenate([np.array(comm.members, dtype=np.int64),
                                      _squares(group)]))
    base = generated_subgroup(group, seeds)
    m = base.order
    q = n // m
    if q == 1:
        return []

    # Label cosets in ascending order of their smallest element.
    coset_id = np.full(n, -1, dtype=np.int64)
    reps = []
    base_members = np.array(base.members, dtype=np.int64)
    for x in range(n):
        if coset_id[x] < 0:
            coset_id[t[x, base_members]] = len(reps)
            reps.append(x)
    qtable = coset_id[t[np.ix_(reps, reps)]]

    # The quotient has exponent 2; extract a basis by greedy span growth.
    dim = q.bit_length() - 1
    if q != 1 << dim:
        raise AssertionError(f"quotient by commutators and squares has "
                             f"non-2-power order {q}")
    vec = np.full(q, -1, dtype=np.int64)
    vec[0] = 0
    bit = 0
    for c in range(1, q):
        if vec[c] >= 0:
            continue
        known = np.nonzero(vec >= 0)[0]
        vec[qtable[known, c]] = vec[known] | (1 << bit)
        bit += 1
    if bit != dim:
        raise AssertionError("independent coset count does not match rank")

    elem_vec = vec[coset_id]
    subgroups = []
    for functional in range(1, q):
        parity = np.bitwise_count(elem_vec & functional) & 1
        members = np.nonzero(parity == 0)[0]
        subgroups.append(SubgroupRef(group, tuple(int(x) for x in members)))
    subgroups.sort(key=lambda s: s.members)
    return subgroups


def generating_set(group: FiniteGroup) -> list[int]:
    """Greedy generating set: repeatedly take the largest-order element
    outside the current closure (smallest index on ties)."""
    n = group.order
    orders = kernels.element_orders(group.table)
    gens: list[int] = []
    mask = kernels.generated_mask(group.table, np.empty(0, dtype=np.int32))
    while int(mask.sum()) < n:
        outside = np.nonzero(~mask)[0]
        g = int(outside[np.argmax(orders[outside])])
        gens.append(g)
        mask = kernels.generated_mask(group.table,
                                      np.asarray(gens, dtype=np.int32))
    return gens


def _signatures(group: FiniteGroup) -> np.ndarray:
    """Per-element (order, class size) invariants, packed as order*n + size."""
    ids = kernels.class_ids(group.table, group.inverse)
    orders = kernels.element_orders(group.table)
    sizes = np.bincount(ids)[ids]
    return orders.astype(np.int64) * (group.order + 1) + sizes


def are_isomorphic(g: FiniteGroup, h: FiniteGroup, *,
                   node_budget: int | None = None) -> Isomorphism | None:
    """Search for an isomorphism g -> h; None when provably absent.

    Backtracks over images of a greedy generating set of ``g``; candidate
    images must match element order and class size, and every partial
    assignment must extend consistently over the subgroup generated so
    far. Any map found is re-verified on all pairs before being returned.
    """
    if g.order != h.order:
        return None
    if ClassProfile.of(g) != ClassProfile.of(h):
        return None
    n = g.order
    budget = limits.DEFAULT_NODE_BUDGET if node_budget is None else node_budget

    gens = generating_set(g)
    if not gens:
        return Isomorphism(g, h, np.zeros(1, dtype=np.int32))

    sig_g = _signatures(g)
    sig_h = _signatures(h)
    candidates = [np.nonzero(sig_h == sig_g[gen])[0] for gen in gens]
    gen_arr = np.asarray(gens, dtype=np.int32)

    images = np.zeros(len(gens), dtype=np.int32)
    nodes_left = budget

    def search(level: int) -> np.ndarray | None:
        nonlocal nodes_left
        for cand in candidates[level]:
            if nodes_left <= 0:
                raise SearchBudgetExceeded(
                    f"isomorphism search exceeded {budget} nodes")
            nodes_left -= 1
            images[level] = cand
            ok, size, mapping = kernels.try_extend(
                g.table, h.table, gen_arr[:level + 1], images[:level + 1])
            if not ok:
                continue
            if level + 1 == len(gens):
                if size != n:
                    raise AssertionError("generating set failed to generate")
                return mapping
            found = search(level + 1)
            if found is not None:
                return found
        return None

    mapping = search(0)
    if mapping is None:
        return None
    return Isomorphism(g, h, mapping)
