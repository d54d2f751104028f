#!/usr/bin/env python3
"""Regenerate the committed catalog data files.

Builds every recipe, stamps it with the sha256 of the rebuilt table, and
rewrites src/deltacert/data/catalog_<order>.jsonl sorted by entry name.
Run after adding recipes; the committed hashes pin the constructions.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from deltacert.catalog import build_recipe, table_hash  # noqa: E402


def std(ctor: str, param: int) -> dict:
    return {"kind": "standard", "ctor": ctor, "param": param}


def direct(left: dict, right: dict) -> dict:
    return {"kind": "direct", "left": left, "right": right}


def semidirect(normal: dict, quotient: dict, action: list[dict]) -> dict:
    return {"kind": "semidirect", "normal": normal, "quotient": quotient,
            "action": action}


# C5 : C4 with the quotient generator acting as multiplication by 2.
F20 = semidirect(std("cyclic", 5), std("cyclic", 4),
                 [{"generator": 1, "image": [0, 2, 4, 1, 3]}])

RECIPES: dict[int, dict[str, dict]] = {
    6: {
        "C6": std("cyclic", 6),
        "S3": std("symmetric", 3),
    },
    24: {
        "C24": std("cyclic", 24),
        "C12 x C2": direct(std("cyclic", 12), std("cyclic", 2)),
        "C6 x C2 x C2": direct(std("cyclic", 6), std("elementary-abelian-2", 2)),
        "C3 x D8": direct(std("cyclic", 3), std("dihedral", 4)),
        "C3 x Q8": direct(std("cyclic", 3), std("dicyclic", 2)),
        "S4": std("symmetric", 4),
        "SL(2,3)": std("special-linear-2-p", 3),
        "C2 x A4": direct(std("cyclic", 2), std("alternating", 4)),
        "D24": std("dihedral", 12),
        "Dic6": std("dicyclic", 6),
        # C8 generator inverts C3
        "C3 : C8": semidirect(std("cyclic", 3), std("cyclic", 8),
                              [{"generator": 1, "image": [0, 2, 1]}]),
        "C4 x S3": direct(std("cyclic", 4), std("symmetric", 3)),
        "C2 x C2 x S3": direct(std("elementary-abelian-2", 2),
                               std("symmetric", 3)),
        "C2 x Dic3": direct(std("cyclic", 2), std("dicyclic", 3)),
        # D8 rotation inverts C3, reflection acts trivially
        "C3 : D8": semidirect(std("cyclic", 3), std("dihedral", 4),
                              [{"generator": 2, "image": [0, 2, 1]},
                               {"generator": 1, "image": [0, 1, 2]}]),
    },
    120: {
        "C120": std("cyclic", 120),
        "S5": std("symmetric", 5),
        "SL(2,5)": std("special-linear-2-p", 5),
        "A5 x C2": direct(std("alternating", 5), std("cyclic", 2)),
        "C60 x C2": direct(std("cyclic", 60), std("cyclic", 2)),
        "C30 x C2 x C2": direct(std("cyclic", 30),
                                std("elementary-abelian-2", 2)),
        "D120": std("dihedral", 60),
        "Dic30": std("dicyclic", 30),
        "C5 x S4": direct(std("cyclic", 5), std("symmetric", 4)),
        "C5 x SL(2,3)": direct(std("cyclic", 5), std("special-linear-2-p", 3)),
        "C10 x A4": direct(std("cyclic", 10), std("alternating", 4)),
        "C15 x D8": direct(std("cyclic", 15), std("dihedral", 4)),
        "C15 x Q8": direct(std("cyclic", 15), std("dicyclic", 2)),
        "C6 x F20": direct(std("cyclic", 6), F20),
        "S3 x F20": direct(std("symmetric", 3), F20),
        "C3 x D40": direct(std("cyclic", 3), std("dihedral", 20)),
    },
}


def main() -> None:
    data_dir = Path(__file__).resolve().parents[1] / "src" / "deltacert" / "data"
    data_dir.mkdir(parents=True, exist_ok=True)
    for order, recipes in RECIPES.items():
        lines = []
        for name in sorted(recipes):
            recipe = recipes[name]
            group = build_recipe(recipe)
            if group.order != order:
                raise SystemExit(f"{name}: order {group.order} != {order}")
            lines.append(json.dumps(
                {"name": name, "recipe": recipe,
                 "table_sha256": table_hash(group)},
                sort_keys=True))
        path = data_dir / f"catalog_{order}.jsonl"
        path.write_text("\n".join(lines) + "\n", encoding="utf-8")
        print(f"wrote {path} ({len(lines)} entries)")


if __name__ == "__main__":
    main()
