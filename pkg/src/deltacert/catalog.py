"""Libraries of concrete groups and the extensional uniqueness sweep.

Catalogs live in JSON-lines data files, one entry per line with a
human-readable name, a structured construction recipe, and the sha256 of
the resulting table. Tables are always rebuilt from the recipes; the
hash pins the construction down so coverage can grow without silently
renumbering existing entries.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from importlib import resources

import numpy as np

from . import structure
from .canonical import expected_group
from .core import (FiniteGroup, direct_product, from_generators, from_table,
                   semidirect_product)
from .errors import InputError, InvalidAction, InvalidSpec, UniquenessViolated, UnsupportedParams
from .groupspec import SpecialSpec, certify
from .perm import Permutation

_CATALOG_ORDERS = (6, 24, 120)


def _cyclic_table(n: int) -> np.ndarray:
    idx = np.arange(n, dtype=np.int64)
    return (idx[:, None] + idx[None, :]) % n


def _dihedral_table(n: int) -> np.ndarray:
    """Order 2n on pairs (rotation, flip) numbered 2r+f."""
    size = 2 * n
    table = np.empty((size, size), dtype=np.int64)
    for r1 in range(n):
        for f1 in range(2):
            for r2 in range(n):
                for f2 in range(2):
                    r = (r1 - r2) % n if f1 else (r1 + r2) % n
                    table[2 * r1 + f1, 2 * r2 + f2] = 2 * r + (f1 ^ f2)
    return table


def _dicyclic_table(n: int) -> np.ndarray:
    """Order 4n on pairs (i, j) with i < 2n, j < 2, numbered 2i+j."""
    size = 4 * n
    table = np.empty((size, size), dtype=np.int64)
    for i1 in range(2 * n):
        for j1 in range(2):
            for i2 in range(2 * n):
                for j2 in range(2):
                    if j1 == 0:
                        i, j = (i1 + i2) % (2 * n), j2
                    elif j2 == 0:
                        i, j = (i1 - i2) % (2 * n), 1
                    else:
                        i, j = (i1 - i2 + n) % (2 * n), 0
                    table[2 * i1 + j1, 2 * i2 + j2] = 2 * i + j
    return table


def _sl2_table(p: int) -> np.ndarray:
    mats = [(a, b, c, d)
            for a in range(p) for b in range(p)
            for c in range(p) for d in range(p)
            if (a * d - b * c) % p == 1]
    index = {m: i for i, m in enumerate(mats)}
    size = len(mats)
    table = np.empty((size, size), dtype=np.int64)
    for i, (a1, b1, c1, d1) in enumerate(mats):
        for j, (a2, b2, c2, d2) in enumerate(mats):
            prod = ((a1 * a2 + b1 * c2) % p, (a1 * b2 + b1 * d2) % p,
                    (c1 * a2 + d1 * c2) % p, (c1 * b2 + d1 * d2) % p)
            table[i, j] = index[prod]
    return table


def standard(name: str, param: int) -> FiniteGroup:
    """Build a named standard group.

    Supported: cyclic(n), dihedral(n) of order 2n, dicyclic(n) of order
    4n, symmetric(m), alternating(m), elementary-abelian-2(k), and
    special-linear-2-p for p in {3, 5}.
    """
    if param < 1:
        raise UnsupportedParams(f"parameter must be positive, got {param}")
    if name == "cyclic":
        return from_table(param, _cyclic_table(param))
    if name == "dihedral":
        return from_table(2 * param, _dihedral_table(param))
    if name == "dicyclic":
        return from_table(4 * param, _dicyclic_table(param))
    if name == "symmetric":
        if param < 2:
            raise UnsupportedParams("symmetric needs at least 2 points")
        transposition = Permutation.parse("(0 1)", param)
        cycle = Permutation(tuple(list(range(1, param)) + [0]))
        return from_generators([transposition, cycle])
    if name == "alternating":
        if param < 3:
            raise UnsupportedParams("alternating needs at least 3 points")
        three = Permutation.parse("(0 1 2)", param)
        if param % 2 == 1:
            big = Permutation(tuple(list(range(1, param)) + [0]))
        else:
            big = Permutation((0,) + tuple(list(range(2, param)) + [1]))
        return from_generators([three, big])
    if name == "elementary-abelian-2":
        idx = np.arange(1 << param, dtype=np.int64)
        return from_table(1 << param, np.bitwise_xor(idx[:, None], idx[None, :]))
    if name == "special-linear-2-p":
        if param not in (3, 5):
            raise UnsupportedParams(f"special-linear-2-p supports p in (3, 5), "
                                    f"got {param}")
        return from_table({3: 24, 5: 120}[param], _sl2_table(param))
    raise UnsupportedParams(f"unknown standard construction {name!r}")


def _extend_action(quotient: FiniteGroup, gen_images: list[dict],
                   normal_order: int) -> np.ndarray:
    """Grow generator images into a full action table over the quotient."""
    nh = quotient.order
    act = np.full((nh, normal_order), -1, dtype=np.int64)
    act[0] = np.arange(normal_order)
    gens = [(int(spec["generator"]), np.asarray(spec["image"], dtype=np.int64))
            for spec in gen_images]
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for g, img in gens:
                y = quotient.mul(x, g)
                composed = act[x][img]  # apply img first, then act[x]
                if act[y][0] < 0:
                    act[y] = composed
                    nxt.append(y)
                elif not np.array_equal(act[y], composed):
                    raise InvalidAction(
                        "generator images are inconsistent over the quotient")
        frontier = nxt
    if (act < 0).any():
        raise InvalidAction("action generators do not generate the quotient")
    return act


def build_recipe(recipe: dict) -> FiniteGroup:
    """Interpret a structured construction recipe."""
    kind = recipe.get("kind")
    if kind == "standard":
        return standard(recipe["ctor"], int(recipe["param"]))
    if kind == "direct":
        return direct_product(build_recipe(recipe["left"]),
                              build_recipe(recipe["right"]))
    if kind == "semidirect":
        normal = build_recipe(recipe["normal"])
        quotient = build_recipe(recipe["quotient"])
        action = _extend_action(quotient, recipe["action"], normal.order)
        return semidirect_product(normal, quotient, action)
    raise UnsupportedParams(f"unknown recipe kind {kind!r}")


def table_hash(group: FiniteGroup) -> str:
    payload = f"{group.order}:" + ",".join(map(str, group.table.ravel()))
    return hashlib.sha256(payload.encode()).hexdigest()


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    group: FiniteGroup
    construction: dict
    table_sha256: str


def _load_lines(order: int) -> list[dict]:
    if order not in _CATALOG_ORDERS:
        raise UnsupportedParams(f"no catalog for order {order}; "
                                f"available: {_CATALOG_ORDERS}")
    text = (resources.files("deltacert") / "data"
            / f"catalog_{order}.jsonl").read_text(encoding="utf-8")
    return [json.loads(line) for line in text.splitlines() if line.strip()]


def build_catalog(order: int, *, verify_hashes: bool = True,
                  dedup: bool = True) -> list[CatalogEntry]:
    """Build every committed entry of the given order.

    Entries are constructed from their recipes in name order; with
    ``verify_hashes`` each rebuilt table must match its committed sha256,
    and with ``dedup`` only the first entry of each isomorphism type is
    kept.
    """
    entries = []
    for doc in sorted(_load_lines(order), key=lambda d: d["name"]):
        group = build_recipe(doc["recipe"])
        if group.order != order:
            raise InputError(f"catalog entry {doc['name']!r} has order "
                             f"{group.order}, expected {order}")
        digest = table_hash(group)
        if verify_hashes and digest != doc.get("table_sha256"):
            raise InputError(
                f"catalog entry {doc['name']!r} rebuilt with hash {digest}, "
                f"expected {doc.get('table_sha256')}")
        entries.append(CatalogEntry(name=doc["name"], group=group,
                                    construction=doc["recipe"],
                                    table_sha256=digest))
    if dedup:
        kept: list[CatalogEntry] = []
        for entry in entries:
            if all(structure.are_isomorphic(entry.group, seen.group) is None
                   for seen in kept):
                kept.append(entry)
        entries = kept
    return entries


@dataclass(frozen=True)
class UniquenessReport:
    order: int
    entry_names: tuple[str, ...]
    passers: tuple[str, ...]
    first_failures: dict[str, str]
    expected_match: bool

    @property
    def holds(self) -> bool:
        return len(self.passers) == 1 and self.expected_match

    def to_json_dict(self) -> dict:
        return {"order": self.order,
                "entries": list(self.entry_names),
                "passers": list(self.passers),
                "first_failures": dict(sorted(self.first_failures.items())),
                "expected_match": self.expected_match,
                "holds": self.holds}


def verify_uniqueness(order: int, spec: SpecialSpec) -> UniquenessReport:
    """Certify every catalog entry; demand exactly one passer, isomorphic
    to the reference group. Raises UniquenessViolated otherwise."""
    if order != spec.c:
        raise InvalidSpec(f"catalog order {order} does not match spec c={spec.c}")
    entries = build_catalog(order)
    passers = []
    failures: dict[str, str] = {}
    for entry in entries:
        cert = certify(entry.group, spec)
        if cert.overall:
            passers.append(entry.name)
        else:
            failures[entry.name] = cert.first_failing() or "?"
    expected_match = False
    if len(passers) == 1:
        winner = next(e.group for e in entries if e.name == passers[0])
        expected_match = structure.are_isomorphic(
            winner, expected_group(spec.c)) is not None
    report = UniquenessReport(order=order,
                              entry_names=tuple(e.name for e in entries),
                              passers=tuple(passers),
                              first_failures=failures,
                              expected_match=expected_match)
    if not report.holds:
        raise UniquenessViolated(
            f"expected exactly one certified entry isomorphic to the "
            f"reference group at order {order}; passers: {passers}")
    return report
