"""RINGFILE v1: a plain-text dump of a ring's addition and multiplication tables.

::

    RINGFILE v1
    name Z(4)          (optional)
    order 4
    zero 0
    one 1
    add
    <order rows of order indices>
    mul
    <order rows of order indices>
    end
"""

from __future__ import annotations

import io

import numpy as np

from .core import EXPORT_LIMIT, FiniteRing, RingError, TableRing, check_order, materialize, require_valid

MAGIC = "RINGFILE v1"


class RingFileError(RingError):
    """Malformed RINGFILE content."""


def _rows(table: np.ndarray) -> str:
    buf = io.StringIO()
    np.savetxt(buf, table, fmt="%d", delimiter=" ")
    return buf.getvalue()


def dumps(ring: FiniteRing) -> str:
    """Serialize; structured rings are materialized (refused above 4096 elements)."""
    dense = materialize(ring, limit=EXPORT_LIMIT)
    parts = [MAGIC + "\n"]
    if ring.name:
        parts.append(f"name {ring.name}\n")
    parts.append(f"order {ring.order}\nzero {ring.zero}\none {ring.one}\n")
    parts.append("add\n" + _rows(dense.add_tab))
    parts.append("mul\n" + _rows(dense.mul_tab))
    parts.append("end\n")
    return "".join(parts)


def dump(ring: FiniteRing, path) -> None:
    text = dumps(ring)
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(text)


def _table(lines: list[str], start: int, n: int, what: str) -> np.ndarray:
    rows = lines[start : start + n]
    if len(rows) < n:
        raise RingFileError(f"{what} table has {len(rows)} rows, expected {n}")
    try:
        flat = np.array(" ".join(rows).split(), dtype=np.int64)
    except ValueError as err:
        raise RingFileError(f"non-integer entry in {what} table") from err
    if flat.size != n * n:
        raise RingFileError(f"{what} table has {flat.size} entries, expected {n * n}")
    if flat.size and (flat.min() < 0 or flat.max() >= n):
        raise RingFileError(f"{what} table entry out of range 0..{n - 1}")
    return flat.reshape(n, n)


def loads(text: str, *, validate: bool = True) -> TableRing:
    """Parse and (by default) validate the ring axioms before returning."""
    lines = [ln.strip() for ln in text.splitlines()]
    while lines and not lines[-1]:
        lines.pop()
    if not lines or lines[0] != MAGIC:
        raise RingFileError(f"missing {MAGIC!r} header")
    i = 1
    name = None
    if i < len(lines) and lines[i].startswith("name"):
        name = lines[i][4:].strip() or None
        i += 1
    header = {}
    for key in ("order", "zero", "one"):
        if i >= len(lines):
            raise RingFileError(f"missing {key!r} line")
        parts = lines[i].split()
        if len(parts) != 2 or parts[0] != key or not parts[1].isdigit():
            raise RingFileError(f"expected '{key} <int>', got {lines[i]!r}")
        header[key] = int(parts[1])
        i += 1
    n = header["order"]
    check_order(n)
    for key in ("zero", "one"):
        if not 0 <= header[key] < max(n, 1):
            raise RingFileError(f"{key} index {header[key]} out of range")
    if i >= len(lines) or lines[i] != "add":
        raise RingFileError("missing 'add' section")
    add = _table(lines, i + 1, n, "add")
    i += 1 + n
    if i >= len(lines) or lines[i] != "mul":
        raise RingFileError("missing 'mul' section")
    mul = _table(lines, i + 1, n, "mul")
    i += 1 + n
    if i >= len(lines) or lines[i] != "end":
        raise RingFileError("missing 'end' line")
    if i != len(lines) - 1:
        raise RingFileError("trailing content after 'end'")
    ring = TableRing(add, mul, header["zero"], header["one"], name=name or "imported")
    if validate:
        require_valid(ring)
    return ring


def load(path, *, validate: bool = True) -> TableRing:
    with open(path, encoding="ascii") as fh:
        return loads(fh.read(), validate=validate)
