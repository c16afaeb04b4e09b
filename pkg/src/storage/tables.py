"""
Rendering of count tables as text, CSV or JSON.

Counts can exceed 2^63, so frames hold Python ints in object columns and
JSON carries them as decimal strings.
"""
import json
from typing import List

import pandas as pd

from src.enumeration.requests import CountTable

FORMATS = ("text", "csv", "json")


def table_to_frame(table: CountTable) -> pd.DataFrame:
    columns = list(table.keys) + ["count"]
    records = [list(key) + [count] for key, count in table.rows]
    return pd.DataFrame(records, columns=columns, dtype=object)


def _provenance_lines(table: CountTable) -> List[str]:
    return [f"# {key}: {value}" for key, value in table.provenance.items()]


def render_text(table: CountTable, provenance: bool = False) -> str:
    """
    Single-key tables: "# n = a..b" and one comma-separated line of counts,
    starting at the first nonzero row. Two-key tables: one line per n.
    """
    lines = _provenance_lines(table) if provenance else []
    frame = table_to_frame(table)
    if frame.empty:
        lines.append("# empty")
        return "\n".join(lines) + "\n"

    row_key = table.keys[0]
    if len(table.keys) == 1:
        nonzero = frame[frame["count"] != 0]
        start = nonzero[row_key].iloc[0] if not nonzero.empty else frame[row_key].iloc[0]
        shown = frame[frame[row_key] >= start]
        lines.append(f"# {row_key} = {start}..{shown[row_key].iloc[-1]}")
        lines.append(",".join(str(c) for c in shown["count"]))
    else:
        col_key = table.keys[1]
        grid = frame.pivot(index=row_key, columns=col_key, values="count").fillna(0)
        cols = list(grid.columns)
        lines.append(f"# rows {row_key}, columns {col_key} = {cols[0]}..{cols[-1]}")
        for n, row in grid.iterrows():
            lines.append(f"{n}: " + ",".join(str(int(v)) for v in row.tolist()))
    return "\n".join(lines) + "\n"


def render_csv(table: CountTable, provenance: bool = False) -> str:
    lines = _provenance_lines(table) if provenance else []
    body = table_to_frame(table).to_csv(index=False, lineterminator="\n")
    return "\n".join(lines + [body.rstrip("\n")]) + "\n"


def render_json(table: CountTable, provenance: bool = False) -> str:
    """
    A flat array of records such as {"n": 3, "k": 1, "count": "2"}. With
    provenance the array moves under "rows" next to a "provenance" object.
    """
    rows = []
    for key, count in table.rows:
        record = dict(zip(table.keys, key))
        record["count"] = str(count)
        rows.append(record)
    data = {"rows": rows, "provenance": table.provenance} if provenance else rows
    return json.dumps(data, indent=2) + "\n"


def render(table: CountTable, fmt: str = "text", provenance: bool = False) -> str:
    if fmt == "text":
        return render_text(table, provenance)
    if fmt == "csv":
        return render_csv(table, provenance)
    if fmt == "json":
        return render_json(table, provenance)
    raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")
