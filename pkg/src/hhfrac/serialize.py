"""JSON and CSV emitters with a fixed float format.

Floats are written with 17 significant digits so that every value
round-trips exactly and two runs with the same inputs produce identical
bytes.  Non-finite floats become ``null``.
"""

from __future__ import annotations

import csv
import io
import json
import math
from typing import Any, Iterable, Sequence

SCHEMA_VERSION = 1


def format_float(x: float) -> str:
    if not math.isfinite(x):
        return "null"
    s = format(x, ".17g")
    if "." not in s and "e" not in s and "n" not in s:
        s += ".0"
    return s


def _encode(obj: Any, indent: int, level: int, out: list[str]) -> None:
    pad = "\n" + " " * (indent * (level + 1)) if indent else ""
    end = "\n" + " " * (indent * level) if indent else ""
    sep = ": " if indent else ":"
    if obj is None or isinstance(obj, (bool, str)):
        out.append(json.dumps(obj))
    elif isinstance(obj, int):
        out.append(str(obj))
    elif isinstance(obj, float):
        out.append(format_float(obj))
    elif hasattr(obj, "item") and not isinstance(obj, (list, tuple, dict)):
        _encode(obj.item(), indent, level, out)  # numpy scalar
    elif isinstance(obj, dict):
        if not obj:
            out.append("{}")
            return
        out.append("{")
        for k, (key, val) in enumerate(obj.items()):
            out.append(("," if k else "") + pad + json.dumps(str(key)) + sep)
            _encode(val, indent, level + 1, out)
        out.append(end + "}")
    elif isinstance(obj, (list, tuple)):
        if not obj:
            out.append("[]")
            return
        out.append("[")
        for k, val in enumerate(obj):
            out.append(("," if k else "") + pad)
            _encode(val, indent, level + 1, out)
        out.append(end + "]")
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(obj: Any, indent: int = 2) -> str:
    out: list[str] = []
    _encode(obj, indent, 0, out)
    return "".join(out)


def suite_document(report) -> dict[str, Any]:
    body = report.to_dict()
    return {"schema_version": SCHEMA_VERSION, **body}


def write_csv(rows: Iterable[dict[str, Any]], columns: Sequence[str]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for row in rows:
        cells = []
        for c in columns:
            v = row.get(c)
            if v is None:
                cells.append("")
            elif isinstance(v, float):
                cells.append("" if not math.isfinite(v) else format_float(v))
            else:
                cells.append(str(v))
        w.writerow(cells)
    return buf.getvalue()
