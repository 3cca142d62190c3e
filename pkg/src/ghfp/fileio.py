"""File formats: .cay Cayley tables, .coc cocycles, .ghm matrices.

Every format is line-oriented ASCII.  Field header lines read
    p=<p> m=<m> poly=<c_0>,<c_1>,...,<c_m>
and elements are serialized as their integer encodings.
"""

from __future__ import annotations

import hashlib
from pathlib import Path
from typing import Optional

import numpy as np

from .cocycles import Cocycle
from .errors import ParseError
from .fields import Field
from .ghmatrix import GHMatrix
from .groups import Group, elementary_abelian


def field_header(field: Field) -> str:
    poly = ",".join(str(c) for c in field.poly)
    return f"p={field.p} m={field.m} poly={poly}"


def parse_field_header(line: str, lineno: int) -> Field:
    try:
        parts = dict(tok.split("=", 1) for tok in line.split())
        return Field(int(parts["p"]), int(parts["m"]),
                     [int(c) for c in parts["poly"].split(",")])
    except (KeyError, ValueError) as e:
        raise ParseError(f"bad field header ({e})", line=lineno) from None


def _expect(cond: bool, msg: str, lineno: int, column: Optional[int] = None):
    if not cond:
        raise ParseError(msg, line=lineno, column=column)


def _parse_rows(lines, start_lineno: int, v: int, limit: int) -> np.ndarray:
    rows = []
    for k, line in enumerate(lines):
        lineno = start_lineno + k
        vals = line.split()
        _expect(len(vals) == v, f"expected {v} entries, got {len(vals)}", lineno)
        try:
            row = [int(x) for x in vals]
        except ValueError:
            bad = next(i for i, x in enumerate(vals) if not _is_int(x))
            raise ParseError("non-integer entry", line=lineno, column=bad + 1)
        _expect(all(0 <= x < limit for x in row),
                f"entry out of range [0, {limit})", lineno)
        rows.append(row)
    _expect(len(rows) == v, f"expected {v} rows, got {len(rows)}",
            start_lineno + len(rows))
    return np.array(rows, dtype=np.int64)


def _is_int(s: str) -> bool:
    try:
        int(s)
        return True
    except ValueError:
        return False


# -- .cay ------------------------------------------------------------------------

def write_cay(path, group: Group) -> None:
    lines = ["cay 1", f"v={group.order}"]
    lines += [" ".join(str(int(x)) for x in row) for row in group.table]
    Path(path).write_text("\n".join(lines) + "\n")


def read_cay(path) -> Group:
    lines = Path(path).read_text().splitlines()
    _expect(len(lines) >= 2 and lines[0].strip() == "cay 1",
            "missing 'cay 1' magic", 1)
    _expect(lines[1].startswith("v="), "missing v= line", 2)
    v = int(lines[1][2:])
    table = _parse_rows(lines[2:2 + v], 3, v, v)
    group = Group(table)
    group.check_associativity()
    return group


# -- .coc ------------------------------------------------------------------------

def write_coc(path, psi: Cocycle, group_path: Optional[str] = None) -> None:
    lines = [field_header(psi.field), f"v={psi.v}"]
    if group_path is not None:
        lines.append(f"group={group_path}")
    lines += [" ".join(str(int(x)) for x in row) for row in psi.table]
    Path(path).write_text("\n".join(lines) + "\n")


def read_coc(path) -> Cocycle:
    path = Path(path)
    lines = path.read_text().splitlines()
    _expect(len(lines) >= 2, "truncated file", max(1, len(lines)))
    field = parse_field_header(lines[0], 1)
    _expect(lines[1].startswith("v="), "missing v= line", 2)
    v = int(lines[1][2:])
    row_start = 2
    group: Optional[Group] = None
    if len(lines) > 2 and lines[2].startswith("group="):
        group = read_cay(path.parent / lines[2][len("group="):])
        row_start = 3
    if group is None:
        k = _power_exponent(v, field.p)
        _expect(k is not None,
                f"v={v} is not a power of p={field.p}; supply group=", 2)
        group = elementary_abelian(field.p, k)
    _expect(group.order == v, f"group order {group.order} != v={v}", 2)
    table = _parse_rows(lines[row_start:row_start + v], row_start + 1, v, field.q)
    from .cocycles import check_cocycle

    return check_cocycle(table, group, field)


def _power_exponent(v: int, p: int) -> Optional[int]:
    k = 0
    while v > 1 and v % p == 0:
        v //= p
        k += 1
    return k if v == 1 and k >= 1 else None


# -- .ghm ------------------------------------------------------------------------

def write_ghm(path, matrix: GHMatrix) -> None:
    lines = ["ghm 1", field_header(matrix.field), f"v={matrix.v}"]
    lines += [" ".join(str(int(x)) for x in row) for row in matrix.entries]
    Path(path).write_text("\n".join(lines) + "\n")


def read_ghm(path) -> GHMatrix:
    lines = Path(path).read_text().splitlines()
    _expect(len(lines) >= 3 and lines[0].strip() == "ghm 1",
            "missing 'ghm 1' magic", 1)
    field = parse_field_header(lines[1], 2)
    _expect(lines[2].startswith("v="), "missing v= line", 3)
    v = int(lines[2][2:])
    entries = _parse_rows(lines[3:3 + v], 4, v, field.q)
    return GHMatrix(field, entries)


def sha256_of(path) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()
