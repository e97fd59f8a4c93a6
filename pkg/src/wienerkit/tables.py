"""Reference tables of extremal values and closed-form comparisons.

Each builder returns plain JSON-ready data; golden copies live in the
``golden`` package directory and ``check`` diffs a fresh build against them.
"""

from __future__ import annotations

import json
from importlib import resources

from .canon import canonical_code
from .enumeration import enumerate_by_blocks
from .errors import BadParameters
from .extremal import edge_minimal_classes, eq4_rows
from .families import build, closed_form_wiener, spec
from .graph6 import encode
from .metrics import wiener_index

TABLE_IDS = ("table1", "maxwi2", "eq4", "fig8", "fig9")


def table1() -> dict:
    """Edge-minimal graphs with 7 vertices, 2 cut vertices and diameter 3."""
    rows = [{"graph6": encode(g), "code": canonical_code(g).hex, "wiener": wiener_index(g)}
            for g in edge_minimal_classes(7, 2, 3)]
    return {"id": "table1", "n": 7, "cut_vertices": 2, "diameter": 3, "rows": rows}


def maxwi2() -> dict:
    """Maximum Wiener index with exactly two cut vertices, n = 6..10, with every maximiser."""
    rows = []
    for n in range(6, 11):
        graphs = enumerate_by_blocks(n, 2, minimal_blocks=True)
        ws = [wiener_index(g) for g in graphs]
        top = max(ws)
        wit = sorted((canonical_code(g).hex, encode(g)) for g, w in zip(graphs, ws) if w == top)
        rows.append({"n": n, "max_wiener": top, "witnesses": [g6 for _, g6 in wit]})
    return {"id": "maxwi2", "cut_vertices": 2, "rows": rows}


def eq4() -> dict:
    rows = [{"n1": a, "n2": b, "bound": w} for a, b, w in eq4_rows(11)]
    return {"id": "eq4", "n": 11, "rows": rows}


def _closed_form_rows(tags: list[str], ns: range) -> list[dict]:
    rows = []
    for n in ns:
        row: dict = {"n": n}
        for tag in tags:
            try:
                s = spec(tag, n=n)
                w = closed_form_wiener(s)
                assert w == wiener_index(build(s))
                row[tag] = w
            except BadParameters:
                row[tag] = None
        present = {t: row[t] for t in tags if row[t] is not None}
        top = max(present.values())
        row["maximisers"] = [t for t, w in present.items() if w == top]
        rows.append(row)
    return rows


def fig8() -> dict:
    """Candidates with diameter n-4."""
    return {"id": "fig8", "diameter": "n-4",
            "rows": _closed_form_rows([f"T{i}" for i in range(7, 11)], range(9, 21))}


def fig9() -> dict:
    """Candidates with diameter n-5."""
    return {"id": "fig9", "diameter": "n-5",
            "rows": _closed_form_rows([f"T{i}" for i in range(11, 21)], range(10, 21))}


BUILDERS = {"table1": table1, "maxwi2": maxwi2, "eq4": eq4, "fig8": fig8, "fig9": fig9}


def render(data: dict) -> str:
    return json.dumps(data, sort_keys=True, indent=2) + "\n"


def golden_text(table_id: str) -> str:
    return resources.files("wienerkit").joinpath("golden", f"{table_id}.json").read_text()


def fresh_text(table_id: str) -> str:
    if table_id not in BUILDERS:
        raise BadParameters(f"unknown table {table_id!r}; choose from {', '.join(TABLE_IDS)}")
    return render(BUILDERS[table_id]())


def check(table_id: str) -> tuple[bool, str]:
    """Rebuild a table; returns (matches golden, fresh rendering)."""
    fresh = fresh_text(table_id)
    return fresh == golden_text(table_id), fresh
