"""Published Graver counts of small scrolls and the code that re-derives them.

``PUBLISHED`` is transcribed by hand from the published table of Graver
basis sizes (computed there with 4ti2), keyed by S-notation.  It is data,
not a computation; :func:`reproduce_table` recomputes every row and diffs.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Iterable

from .graver import BudgetExceeded, degree_table, graver
from .scroll import ScrollSpec, build_config

# transcribed: S-notation -> {degree: count}
PUBLISHED: dict[tuple[int, ...], dict[int, int]] = {
    (2, 2): {2: 7, 3: 4},
    (2, 2, 2): {2: 18, 3: 24},
    (4,): {2: 7, 3: 7, 4: 2},
    (3, 2): {2: 12, 3: 16, 4: 4, 5: 1},
    (3, 2, 2): {2: 26, 3: 58, 4: 22, 5: 4},
    (3, 3): {2: 20, 3: 40, 4: 18, 5: 4},
    (3, 3, 2, 2): {2: 59, 3: 242, 4: 208, 5: 36},
    (4, 2): {2: 19, 3: 39, 4: 20, 5: 4},
    (4, 3): {2: 30, 3: 86, 4: 58, 5: 15, 6: 2, 7: 1},
    (4, 4): {2: 44, 3: 166, 4: 146, 5: 52, 6: 12, 7: 4},
    (4, 3, 2, 2): {2: 75, 3: 391, 4: 524, 5: 176, 6: 6, 7: 1},
    (5, 2): {2: 28, 3: 83, 4: 72, 5: 32, 6: 4, 7: 1},
    (6, 2): {2: 40, 3: 157, 4: 182, 5: 95, 6: 28, 7: 4},
    (5, 3): {2: 42, 3: 166, 4: 174, 5: 78, 6: 16, 7: 6, 8: 1},
    (6, 3): {2: 57, 3: 290, 4: 412, 5: 210, 6: 62, 7: 14, 8: 2},
    (7, 2): {2: 55, 3: 280, 4: 432, 5: 294, 6: 130, 7: 46, 8: 4, 9: 1},
    (5, 5, 5): {2: 204, 3: 2526, 4: 10002, 5: 10404, 6: 5088, 7: 1764, 8: 444, 9: 78},
    (6, 5): {2: 105, 3: 813, 4: 1678, 5: 1136, 6: 454, 7: 149, 8: 42, 9: 12, 10: 2, 11: 1},
}

CORE_ROWS = [(2, 2), (2, 2, 2), (4,), (3, 2), (3, 2, 2), (3, 3), (3, 3, 2, 2), (4, 2),
             (4, 3), (4, 4), (4, 3, 2, 2), (5, 2)]
STRETCH_ROWS = [(6, 2), (5, 3), (6, 3), (7, 2), (6, 5), (5, 5, 5)]


def row_name(s: tuple[int, ...]) -> str:
    return "S(" + ",".join(map(str, s)) + ")"


@dataclass
class RowResult:
    scroll: tuple[int, ...]
    expected: dict[int, int]
    computed: dict[int, int] | None
    seconds: float
    status: str  # PASS, FAIL or SKIPPED

    @property
    def mismatches(self) -> list[tuple[int, int, int]]:
        """``(degree, expected, computed)`` for every differing cell."""
        if self.computed is None:
            return []
        degs = sorted(set(self.expected) | set(self.computed))
        return [(d, self.expected.get(d, 0), self.computed.get(d, 0)) for d in degs
                if self.expected.get(d, 0) != self.computed.get(d, 0)]

    def line(self) -> str:
        head = f"{row_name(self.scroll):<12} {self.status:<8} {self.seconds:8.2f}s"
        if self.status == "FAIL":
            cells = ", ".join(f"deg {d}: expected {e}, got {c}" for d, e, c in self.mismatches)
            return f"{head}  {cells}"
        return head


@dataclass
class TableReport:
    rows: list[RowResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.status != "FAIL" for r in self.rows)

    def lines(self) -> list[str]:
        return [r.line() for r in self.rows]


def reproduce_row(s: tuple[int, ...], budget: float | None = None) -> RowResult:
    expected = PUBLISHED[tuple(s)]
    config = build_config(ScrollSpec.from_s_notation(s))
    t = time.monotonic()
    try:
        computed = degree_table(graver(config, budget=budget))
    except BudgetExceeded:
        return RowResult(tuple(s), expected, None, time.monotonic() - t, "SKIPPED")
    status = "PASS" if computed == expected else "FAIL"
    return RowResult(tuple(s), expected, computed, time.monotonic() - t, status)


def reproduce_table(rows: Iterable[tuple[int, ...]] | None = None,
                    budget: float | None = None) -> TableReport:
    """Recompute the selected rows (all published rows by default).

    With ``budget`` (seconds per row) a row that does not finish in time is
    reported as ``SKIPPED``.
    """
    rows = list(PUBLISHED) if rows is None else [tuple(r) for r in rows]
    for r in rows:
        if r not in PUBLISHED:
            raise KeyError(f"{row_name(r)} is not a published row")
    return TableReport([reproduce_row(r, budget) for r in rows])
