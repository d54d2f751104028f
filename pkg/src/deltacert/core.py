"""Concrete finite groups as validated multiplication tables.

A group of order n lives on element indices 0..n-1 with element 0 always
the identity; constructors renumber their output to enforce that. Tables
are immutable int32 numpy arrays, so groups can be shared freely.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import kernels, limits
from .errors import InvalidAction, NotAGroup, SizeLimitExceeded
from .perm import Permutation


@dataclass(frozen=True)
class FiniteGroup:
    """A finite group given by its multiplication table.

    ``table[i, j]`` is the index of the product i*j, ``identity`` is always
    0, and ``inverse[i]`` is the index of the inverse of i. ``labels``
    optionally names each element by a permutation (present for groups
    built from permutation generators).
    """

    order: int
    table: np.ndarray
    inverse: np.ndarray
    labels: tuple[Permutation, ...] | None = None
    identity: int = 0

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def inv(self, a: int) -> int:
        return int(self.inverse[a])

    def conjugate(self, g: int, x: int) -> int:
        """x * g * x^-1."""
        return int(self.table[self.table[x, g], self.inverse[x]])

    def commutator(self, x: int, y: int) -> int:
        """x * y * x^-1 * y^-1."""
        t = self.table
        return int(t[t[t[x, y], self.inverse[x]], self.inverse[y]])

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    def to_json_dict(self) -> dict:
        doc = {"order": self.order, "table": self.table.tolist()}
        if self.labels is not None:
            doc["labels"] = [p.cycle_string() for p in self.labels]
        return doc

    @classmethod
    def from_json_dict(cls, doc: dict) -> "FiniteGroup":
        if not isinstance(doc, dict) or "order" not in doc or "table" not in doc:
            raise NotAGroup("group JSON needs 'order' and 'table' fields",
                            kind="shape")
        labels = None
        if doc.get("labels") is not None:
            parsed = [Permutation.parse(s) for s in doc["labels"]]
            degree = max((p.degree for p in parsed), default=1)
            labels = [Permutation.parse(s, degree) for s in doc["labels"]]
        return from_table(doc["order"], doc["table"], labels=labels)


@dataclass(frozen=True)
class SubgroupRef:
    """A subgroup of ``parent`` given by its sorted member indices."""

    parent: FiniteGroup
    members: tuple[int, ...]

    def __post_init__(self):
        members = tuple(sorted(int(m) for m in self.members))
        object.__setattr__(self, "members", members)
        table = self.parent.table
        inside = np.zeros(self.parent.order, dtype=bool)
        inside[list(members)] = True
        if not inside[0]:
            raise NotAGroup("subgroup misses the identity", kind="identity")
        idx = np.array(members, dtype=np.int32)
        if not inside[table[np.ix_(idx, idx)]].all():
            raise NotAGroup("subgroup not closed under multiplication",
                            kind="row", witness=members)
        if not inside[self.parent.inverse[idx]].all():
            raise NotAGroup("subgroup not closed under inversion",
                            kind="inverse", witness=members)

    @property
    def order(self) -> int:
        return len(self.members)

    @property
    def index(self) -> int:
        return self.parent.order // len(self.members)

    def member_mask(self) -> np.ndarray:
        mask = np.zeros(self.parent.order, dtype=bool)
        mask[list(self.members)] = True
        return mask


def _as_table(order: int, table) -> np.ndarray:
    if order < 1:
        raise NotAGroup("order must be positive", kind="shape")
    arr = np.asarray(table, dtype=np.int64)
    if arr.ndim != 2 or arr.shape != (order, order):
        raise NotAGroup(f"table must be {order}x{order}, got shape {arr.shape}",
                        kind="shape")
    if arr.min() < 0 or arr.max() >= order:
        raise NotAGroup("table entries out of range", kind="shape")
    return np.ascontiguousarray(arr, dtype=np.int32)


def relabeled_table(table: np.ndarray, relabeling: np.ndarray) -> np.ndarray:
    """Table of the same group under the renaming i -> relabeling[i]."""
    out = np.empty_like(table)
    out[relabeling[:, None], relabeling[None, :]] = relabeling[table]
    return out


def from_table(order: int, table, *, labels: Sequence[Permutation] | None = None,
               validate: bool = True) -> FiniteGroup:
    """Validate a multiplication table and wrap it as a group.

    Runs the full cubic associativity scan unless ``validate`` is False
    (reserved for trusted internal constructions). The identity is moved
    to index 0 when it sits elsewhere.
    """
    arr = _as_table(order, table)
    n = order
    ref = np.arange(n, dtype=np.int32)

    if validate:
        for i in range(n):
            if not np.array_equal(np.sort(arr[i]), ref):
                raise NotAGroup(f"row {i} is not a permutation", kind="row",
                                witness=i)
            if not np.array_equal(np.sort(arr[:, i]), ref):
                raise NotAGroup(f"column {i} is not a permutation",
                                kind="column", witness=i)

    is_id = (arr == ref[None, :]).all(axis=1) & (arr == ref[:, None]).all(axis=0)
    hits = np.nonzero(is_id)[0]
    if hits.size == 0:
        raise NotAGroup("table has no two-sided identity", kind="identity")
    e = int(hits[0])
    if e != 0:
        swap = ref.copy()
        swap[0], swap[e] = e, 0
        arr = relabeled_table(arr, swap)
        if labels is not None:
            labels = list(labels)
            labels[0], labels[e] = labels[e], labels[0]

    if validate:
        i, j, k = kernels.assoc_defect(arr)
        if i >= 0:
            raise NotAGroup(
                f"associativity fails at ({i},{j},{k}): "
                f"({i}*{j})*{k} != {i}*({j}*{k})",
                kind="associativity", witness=(int(i), int(j), int(k)))

    inverse = np.empty(n, dtype=np.int32)
    rows, cols = np.nonzero(arr == 0)
    inverse[rows] = cols
    if not (arr[inverse, np.arange(n)] == 0).all():
        raise NotAGroup("left and right inverses disagree", kind="inverse")

    arr.flags.writeable = False
    inverse.flags.writeable = False
    return FiniteGroup(order=n, table=arr, inverse=inverse,
                       labels=tuple(labels) if labels is not None else None)


def from_generators(generators: Iterable[Permutation],
                    *, size_limit: int | None = None) -> FiniteGroup:
    """Close a list of permutations under composition.

    Elements are numbered in breadth-first discovery order starting from
    the identity, so the numbering is deterministic in the generator list.
    """
    gens = list(generators)
    if gens:
        degree = gens[0].degree
        if any(g.degree != degree for g in gens):
            raise NotAGroup("generators must share one degree", kind="shape")
    else:
        degree = 1
    limit = limits.max_order() if size_limit is None else size_limit

    identity = Permutation.identity(degree)
    elements = [identity]
    index = {identity.images: 0}
    head = 0
    while head < len(elements):
        base = elements[head]
        head += 1
        for g in gens:
            p = base.compose(g)
            if p.images not in index:
                if len(elements) >= limit:
                    raise SizeLimitExceeded(
                        f"closure exceeds the size bound {limit}")
                index[p.images] = len(elements)
                elements.append(p)

    n = len(elements)
    table = np.empty((n, n), dtype=np.int32)
    for i, p in enumerate(elements):
        for j, q in enumerate(elements):
            table[i, j] = index[p.compose(q).images]
    return from_table(n, table, labels=elements)


def direct_product(g: FiniteGroup, h: FiniteGroup) -> FiniteGroup:
    """Product group on pairs, numbered g-major: (a, b) -> a*|H| + b."""
    n = g.order * h.order
    if n > limits.max_order():
        raise SizeLimitExceeded(
            f"product order {n} exceeds the size bound {limits.max_order()}")
    nh = h.order
    table = (g.table[:, None, :, None].astype(np.int64) * nh
             + h.table[None, :, None, :]).reshape(n, n)
    return from_table(n, table)


def semidirect_product(n_group: FiniteGroup, h_group: FiniteGroup,
                       action: Sequence[Sequence[int]]) -> FiniteGroup:
    """Twisted product on pairs (a, b) -> a*|H| + b.

    ``action[b]`` must be an automorphism of ``n_group`` for every b, with
    action[0] the identity map and action[b1*b2] = action[b1] o action[b2];
    multiplication is (a1,b1)*(a2,b2) = (a1*action[b1](a2), b1*b2).
    """
    nn, nh = n_group.order, h_group.order
    total = nn * nh
    if total > limits.max_order():
        raise SizeLimitExceeded(
            f"product order {total} exceeds the size bound {limits.max_order()}")
    act = np.asarray(action, dtype=np.int64)
    if act.shape != (nh, nn):
        raise InvalidAction(f"action must be {nh}x{nn}, got shape {act.shape}")
    act = np.ascontiguousarray(act, dtype=np.int32)

    ref = np.arange(nn, dtype=np.int32)
    if not np.array_equal(act[0], ref):
        raise InvalidAction("action at the identity is not the identity map")
    for b in range(nh):
        phi = act[b]
        if not np.array_equal(np.sort(phi), ref):
            raise InvalidAction(f"action[{b}] is not a bijection")
        i, j = kernels.hom_defect(n_group.table, n_group.table, phi)
        if i >= 0:
            raise InvalidAction(
                f"action[{b}] is not an automorphism: fails at ({i},{j})")
    for b1 in range(nh):
        for b2 in range(nh):
            if not np.array_equal(act[h_group.table[b1, b2]],
                                  act[b1][act[b2]]):
                raise InvalidAction(
                    f"action is not a homomorphism at ({b1},{b2})")

    # twisted[a1, b1, a2] = a1 * phi_{b1}(a2)
    twisted = n_group.table[:, act]
    table = (twisted[:, :, :, None].astype(np.int64) * nh
             + h_group.table[None, :, None, :]).reshape(total, total)
    return from_table(total, table)


def element_order(group: FiniteGroup, g: int) -> int:
    """Least k >= 1 with g^k equal to the identity."""
    if not 0 <= g < group.order:
        raise IndexError(f"element {g} out of range")
    k = 1
    x = g
    while x != 0:
        x = int(group.table[x, g])
        k += 1
    return k
