"""Plain-text matrix files in the layout used by 4ti2.

    rows cols
    a11 a12 ...
    ...

Single spaces, base-10 integers, newline-terminated, no comments.
"""
from __future__ import annotations

import io
from pathlib import Path
from typing import Iterable, Sequence


def format_matrix(rows: Sequence[Sequence[int]], ncols: int | None = None) -> str:
    rows = [list(r) for r in rows]
    if ncols is None:
        if not rows:
            raise ValueError("need ncols for an empty matrix")
        ncols = len(rows[0])
    out = io.StringIO()
    out.write(f"{len(rows)} {ncols}\n")
    for r in rows:
        if len(r) != ncols:
            raise ValueError("ragged matrix")
        out.write(" ".join(str(int(x)) for x in r) + "\n")
    return out.getvalue()


def parse_matrix(text: str) -> list[list[int]]:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty matrix file")
    header = lines[0].split()
    if len(header) != 2:
        raise ValueError(f"bad header line: {lines[0]!r}")
    nrows, ncols = int(header[0]), int(header[1])
    body = lines[1:]
    if len(body) != nrows:
        raise ValueError(f"expected {nrows} rows, found {len(body)}")
    rows = []
    for ln in body:
        vals = [int(tok) for tok in ln.split()]
        if len(vals) != ncols:
            raise ValueError(f"expected {ncols} entries in row {ln!r}")
        rows.append(vals)
    return rows


def write_matrix(path: str | Path, rows: Iterable[Sequence[int]], ncols: int | None = None) -> None:
    Path(path).write_text(format_matrix(list(rows), ncols))


def read_matrix(path: str | Path) -> list[list[int]]:
    return parse_matrix(Path(path).read_text())
