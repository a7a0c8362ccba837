"""Serialization: canonical JSON text, CSV tables and the matching parsers.

JSON objects are printed with ``", "`` and ``": "`` separators while arrays
stay compact, e.g. ``{"hn": [[2,6]], "lambda": [[2]]}``.  Keys keep their
insertion order so output is byte-reproducible.
"""

from __future__ import annotations

import csv
import io
import json
from typing import Any, Iterable, Optional, Sequence

from .ccmap import CCBlock, TruncatedCCMatrix
from .components import ComponentLabel
from .errors import NilconeError
from .hn import HNType, as_hn, format_slope, slope, stratum_codim
from .jordan import JordanType
from .matrix import IntegerMatrix
from .partitions import Partition


class FormatError(NilconeError):
    """Malformed textual input (bad JSON, wrong nesting, non-integers)."""


def dumps(value: Any) -> str:
    if value is None or isinstance(value, (bool, int, str)):
        return json.dumps(value)
    if isinstance(value, dict):
        return "{" + ", ".join(f"{json.dumps(k)}: {dumps(v)}" for k, v in value.items()) + "}"
    if isinstance(value, (list, tuple)):
        return "[" + ",".join(dumps(v) for v in value) + "]"
    raise TypeError(f"cannot serialize {type(value).__name__}")


# --- to plain JSON values ----------------------------------------------------


def hn_json(h: HNType) -> list:
    return h.to_lists()


def hn_record(h: HNType) -> dict:
    return {"hn": hn_json(h), "codim": stratum_codim(h), "slopes": [format_slope(slope(f)) for f in h]}


def component_json(c: ComponentLabel) -> dict:
    return {"hn": hn_json(c.hn), "lambda": [list(p) for p in c.lam]}


def label_json(label) -> Any:
    """Matrix labels: partitions, multipartitions or component labels."""
    if isinstance(label, ComponentLabel):
        return component_json(label)
    if isinstance(label, Partition):
        return list(label)
    if isinstance(label, tuple):
        return [label_json(x) for x in label]
    raise TypeError(f"unsupported label {label!r}")


def matrix_json(m: IntegerMatrix) -> dict:
    return {"order": [label_json(x) for x in m.order], "rows": m.to_lists()}


def block_json(b: CCBlock) -> dict:
    return {"hn": hn_json(b.hn), "matrix": matrix_json(b.matrix)}


def truncated_json(m: TruncatedCCMatrix) -> dict:
    return {
        "components": [component_json(c) for c in m.order],
        "blocks": [block_json(b) for b in m.blocks],
        "unknown_mask": "lower-cross-stratum",
    }


def jordan_json(j: JordanType) -> list:
    return j.to_lists()


# --- parsers -----------------------------------------------------------------


def _load(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc.msg}") from None


def _int(x) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise FormatError(f"expected an integer, got {x!r}")
    return x


def _pairs(value) -> list[tuple[int, int]]:
    if not isinstance(value, list):
        raise FormatError("expected a list of [r,d] pairs")
    out = []
    for p in value:
        if not isinstance(p, list) or len(p) != 2:
            raise FormatError(f"expected an [r,d] pair, got {p!r}")
        out.append((_int(p[0]), _int(p[1])))
    return out


def parse_class(text: str) -> tuple[int, int]:
    """``"r,d"`` with optional whitespace; negative degrees allowed."""
    parts = text.split(",")
    if len(parts) != 2:
        raise FormatError(f"class must look like 'r,d', got {text!r}")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise FormatError(f"class must look like 'r,d', got {text!r}") from None


def parse_pairs(text: str) -> list[tuple[int, int]]:
    return _pairs(_load(text))


def parse_partitions(text: str) -> list[list[int]]:
    value = _load(text)
    if not isinstance(value, list) or not all(isinstance(p, list) for p in value):
        raise FormatError("expected a list of partitions such as [[2],[1,1]]")
    return [[_int(x) for x in p] for p in value]


def parse_matrix2(text: str) -> list[list[int]]:
    """A 2x2 integer matrix such as ``[[1,0],[1,1]]``; the determinant is checked later."""
    value = _load(text)
    if not (isinstance(value, list) and len(value) == 2 and all(isinstance(r, list) and len(r) == 2 for r in value)):
        raise FormatError("expected a 2x2 integer matrix such as [[1,0],[1,1]]")
    return [[_int(x) for x in r] for r in value]


def hn_from_json(value) -> HNType:
    return as_hn(_pairs(value))


def hn_record_from_json(value) -> HNType:
    h = hn_from_json(value["hn"])
    if value.get("codim") != stratum_codim(h):
        raise FormatError("recorded codimension does not match the HN type")
    return h


def component_from_json(value) -> ComponentLabel:
    if not isinstance(value, dict) or set(value) != {"hn", "lambda"}:
        raise FormatError('a component is {"hn": [...], "lambda": [...]}')
    return ComponentLabel(hn_from_json(value["hn"]), tuple(Partition(p) for p in value["lambda"]))


def _label_from_json(value):
    if isinstance(value, dict):
        return component_from_json(value)
    if value and all(isinstance(x, list) for x in value):
        return tuple(Partition(p) for p in value)
    return Partition(value)


def matrix_from_json(value) -> IntegerMatrix:
    return IntegerMatrix.from_rows([_label_from_json(x) for x in value["order"]], value["rows"])


def block_from_json(value) -> CCBlock:
    return CCBlock(hn_from_json(value["hn"]), matrix_from_json(value["matrix"]))


def truncated_from_json(value) -> TruncatedCCMatrix:
    order = tuple(component_from_json(c) for c in value["components"])
    return TruncatedCCMatrix(order, tuple(block_from_json(b) for b in value["blocks"]))


def jordan_from_json(value) -> list[tuple[int, int]]:
    return _pairs(value)


# --- CSV ---------------------------------------------------------------------


def csv_table(header: Optional[Sequence[str]], rows: Iterable[Sequence[Any]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if header is not None:
        writer.writerow(header)
    for row in rows:
        writer.writerow(["?" if x is None else x for x in row])
    return buf.getvalue()


def matrix_csv(m: IntegerMatrix) -> str:
    return csv_table([dumps(label_json(x)) for x in m.order], m.to_lists())


def truncated_csv(m: TruncatedCCMatrix) -> str:
    n = m.size
    rows = [[m.entry(i, j) for j in range(n)] for i in range(n)]
    return csv_table([dumps(component_json(c)) for c in m.order], rows)
