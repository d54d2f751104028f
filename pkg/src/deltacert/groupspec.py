"""Target specs and the four-property certification of candidate groups.

A ``SpecialSpec`` prescribes what the distinguished group of a given order
must look like: the order ``c``, the multiset of conjugacy-class sizes,
and optionally a parity label per class size that pins down how classes
split across the index-2 subgroup. ``certify`` checks a concrete group
against a spec and reports one verdict per property:

  a: the group order equals c
  b: every element is conjugate to its inverse
  c: the class-size multiset matches the spec
  d: an index-2 subgroup exists (not applicable when c = 1)
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from . import limits, structure
from .core import FiniteGroup, SubgroupRef
from .errors import InvalidSpec, NotIndexTwo, UnsupportedC

_SMALL_FACTORIALS = (6, 24, 120)


def supported_c(c: int) -> bool:
    if c in _SMALL_FACTORIALS or c == 1:
        return True
    return c >= 2 and (c & (c - 1)) == 0 and c <= limits.max_order()


def _require_supported(c: int) -> None:
    if not supported_c(c):
        if c == 720:
            raise UnsupportedC("c=720 is rejected: the supported orders "
                               "stop at 120")
        raise UnsupportedC(
            f"unsupported c={c}; expected 1, a power of 2 up to "
            f"{limits.max_order()}, or one of {_SMALL_FACTORIALS}")


@dataclass(frozen=True)
class SpecialSpec:
    """Prescription of the target group: order, class sizes, parities.

    ``parities`` pairs each class size with 0 (class inside the index-2
    subgroup) or 1 (outside); it is optional and never required by
    certification.
    """

    c: int
    class_sizes: tuple[int, ...]
    parities: tuple[tuple[int, int], ...] | None = None

    def __post_init__(self):
        _require_supported(self.c)
        sizes = tuple(sorted(int(s) for s in self.class_sizes))
        object.__setattr__(self, "class_sizes", sizes)
        if sum(sizes) != self.c:
            raise InvalidSpec(f"class sizes sum to {sum(sizes)}, not c={self.c}")
        if 1 not in sizes:
            raise InvalidSpec("class sizes must contain 1 (the identity class)")
        for s in sizes:
            if s < 1 or self.c % s != 0:
                raise InvalidSpec(f"class size {s} does not divide c={self.c}")
        if self.parities is not None:
            pairs = tuple(sorted((int(s), int(p)) for s, p in self.parities))
            object.__setattr__(self, "parities", pairs)
            if any(p not in (0, 1) for _, p in pairs):
                raise InvalidSpec("parities must be 0 or 1")
            if tuple(sorted(s for s, _ in pairs)) != sizes:
                raise InvalidSpec("parity sizes must match the class sizes")

    def even_sizes(self) -> tuple[int, ...]:
        if self.parities is None:
            raise InvalidSpec("spec carries no parities")
        return tuple(sorted(s for s, p in self.parities if p == 0))

    def odd_sizes(self) -> tuple[int, ...]:
        if self.parities is None:
            raise InvalidSpec("spec carries no parities")
        return tuple(sorted(s for s, p in self.parities if p == 1))

    def to_json_dict(self) -> dict:
        doc: dict[str, Any] = {"c": self.c, "class_sizes": list(self.class_sizes)}
        if self.parities is not None:
            doc["parities"] = [list(p) for p in self.parities]
        return doc

    @classmethod
    def from_json_dict(cls, doc: dict) -> "SpecialSpec":
        if not isinstance(doc, dict) or "c" not in doc or "class_sizes" not in doc:
            raise InvalidSpec("spec JSON needs 'c' and 'class_sizes' fields")
        parities = doc.get("parities")
        if parities is not None:
            parities = tuple((int(s), int(p)) for s, p in parities)
        return cls(c=int(doc["c"]),
                   class_sizes=tuple(int(s) for s in doc["class_sizes"]),
                   parities=parities)


_BUILTIN_SIZES = {6: (1, 2, 3), 24: (1, 3, 6, 6, 8), 120: (1, 10, 15, 20, 20, 24, 30)}
_BUILTIN_PARITIES = {
    24: ((1, 0), (3, 0), (8, 0), (6, 1), (6, 1)),
    120: ((1, 0), (15, 0), (20, 0), (24, 0), (10, 1), (20, 1), (30, 1)),
}


def builtin_spec(c: int) -> SpecialSpec:
    """The built-in spec for a supported order.

    Powers of two get all-singleton classes; 6, 24 and 120 get the known
    class lists, with parities filled in for 24 and 120.
    """
    _require_supported(c)
    if c in _BUILTIN_SIZES:
        return SpecialSpec(c, _BUILTIN_SIZES[c], _BUILTIN_PARITIES.get(c))
    return SpecialSpec(c, (1,) * c)


@dataclass(frozen=True)
class Verdict:
    status: str  # "pass" | "fail" | "not-applicable"
    details: dict[str, Any]

    @property
    def passed(self) -> bool:
        return self.status in ("pass", "not-applicable")

    def to_json_dict(self) -> dict:
        return {"status": self.status, **self.details}


@dataclass(frozen=True)
class RefinementVerdict:
    passed: bool
    inside_sizes: tuple[int, ...]
    outside_sizes: tuple[int, ...]
    expected_inside: tuple[int, ...]
    expected_outside: tuple[int, ...]

    def to_json_dict(self) -> dict:
        return {"status": "pass" if self.passed else "fail",
                "inside_sizes": list(self.inside_sizes),
                "outside_sizes": list(self.outside_sizes),
                "expected_inside": list(self.expected_inside),
                "expected_outside": list(self.expected_outside)}


@dataclass(frozen=True)
class Certificate:
    """Per-property verdicts with witnesses; nothing short-circuits."""

    a: Verdict
    b: Verdict
    c: Verdict
    d: Verdict
    refinement: RefinementVerdict | None = None

    @property
    def overall(self) -> bool:
        return (self.a.status == "pass" and self.b.status == "pass"
                and self.c.status == "pass" and self.d.passed)

    def first_failing(self) -> str | None:
        for name in "abcd":
            if not getattr(self, name).passed:
                return name
        return None

    def to_json_dict(self) -> dict:
        return {"overall": self.overall,
                "a": self.a.to_json_dict(),
                "b": self.b.to_json_dict(),
                "c": self.c.to_json_dict(),
                "d": self.d.to_json_dict(),
                "refinement": (None if self.refinement is None
                               else self.refinement.to_json_dict())}


def certify(group: FiniteGroup, spec: SpecialSpec) -> Certificate:
    """Evaluate all four properties of ``group`` against ``spec``.

    Failures are verdicts, never exceptions; every verdict is always
    reported.
    """
    a = Verdict("pass" if group.order == spec.c else "fail",
                {"expected": spec.c, "actual": group.order})

    ambivalent, witness = structure.is_ambivalent(group)
    b = Verdict("pass" if ambivalent else "fail",
                {} if ambivalent else {"witness": witness})

    computed = tuple(sorted(c.size for c in structure.conjugacy_classes(group)))
    c = Verdict("pass" if computed == spec.class_sizes else "fail",
                {"computed": list(computed), "expected": list(spec.class_sizes)})

    if spec.c == 1:
        d = Verdict("not-applicable", {})
    else:
        subs = structure.index2_subgroups(group)
        if subs:
            d = Verdict("pass", {"subgroup": list(subs[0].members),
                                 "count": len(subs)})
        else:
            d = Verdict("fail", {"count": 0})
    return Certificate(a=a, b=b, c=c, d=d)


def check_refinement(group: FiniteGroup, spec: SpecialSpec,
                     d_prime: SubgroupRef) -> RefinementVerdict:
    """Match the class split across ``d_prime`` against the spec parities.

    Passes iff the sizes of classes inside ``d_prime`` equal the even-part
    sizes and the outside sizes equal the odd part.
    """
    if spec.parities is None:
        raise InvalidSpec("refinement requires a spec with parities")
    if d_prime.parent is not group:
        raise NotIndexTwo("subgroup does not belong to the given group")
    if 2 * d_prime.order != group.order:
        raise NotIndexTwo(
            f"subgroup has index {group.order / d_prime.order:g}, not 2")
    mask = d_prime.member_mask()
    inside, outside = [], []
    for cls in structure.conjugacy_classes(group):
        hits = mask[list(cls.members)]
        if hits.all():
            inside.append(cls.size)
        elif not hits.any():
            outside.append(cls.size)
        else:
            # cannot happen for a genuine index-2 (hence normal) subgroup
            raise NotIndexTwo("subgroup is not a union of conjugacy classes")
    inside_t = tuple(sorted(inside))
    outside_t = tuple(sorted(outside))
    return RefinementVerdict(
        passed=(inside_t == spec.even_sizes()
                and outside_t == spec.odd_sizes()),
        inside_sizes=inside_t, outside_sizes=outside_t,
        expected_inside=spec.even_sizes(), expected_outside=spec.odd_sizes())


def product_spec(s1: SpecialSpec, s2: SpecialSpec) -> SpecialSpec:
    """Spec of a direct product: c multiplies, sizes multiply pairwise,
    parities add mod 2 when both factors carry them."""
    c = s1.c * s2.c
    _require_supported(c)
    sizes = tuple(a * b for a in s1.class_sizes for b in s2.class_sizes)
    parities = None
    if s1.parities is not None and s2.parities is not None:
        parities = tuple((a * b, (pa + pb) % 2)
                         for a, pa in s1.parities for b, pb in s2.parities)
    return SpecialSpec(c, sizes, parities)
