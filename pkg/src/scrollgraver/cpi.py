"""Colored partition identities (cpi's).

A cpi over a scroll with blocks ``n_1, ..., n_c`` is an equation between two
sums of colored parts; a part of color ``p`` lies in ``1..n_p``.  Color-
homogeneous cpi's (same number of parts of every color on both sides) are
exactly the binomials of the scroll ideal, and the primitive ones are its
Graver basis.  :func:`enumerate_pcpi` lists them directly from this
description, without any lattice completion, so it can serve as an
independent check on :func:`scrollgraver.graver.graver`.

Text form: ``"1:1+1:3=1:2+1:2"`` (``color:part`` tokens).
"""
from __future__ import annotations

import json
import re
from collections import Counter
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Sequence

import numpy as np

from . import _pcpi_kernel
from .scroll import ScrollSpec

Part = tuple[int, int]  # (color, part)


@dataclass(frozen=True)
class Cpi:
    left: tuple[Part, ...]
    right: tuple[Part, ...]
    spec: ScrollSpec

    def __post_init__(self):
        left = tuple(sorted((int(p), int(a)) for p, a in self.left))
        right = tuple(sorted((int(p), int(a)) for p, a in self.right))
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "right", right)
        if not left or not right:
            raise ValueError("both sides of an identity must be nonempty")
        for p, a in left + right:
            if not 1 <= p <= self.spec.colors or not 1 <= a <= self.spec.blocks[p - 1]:
                raise ValueError(f"part {a} of color {p} is out of range for {self.spec}")
        if sum(a for _, a in left) != sum(a for _, a in right):
            raise ValueError(f"not an identity: {format_cpi(self)}")

    @property
    def side_degree(self) -> int:
        return max(len(self.left), len(self.right))

    def __str__(self):
        return format_cpi(self)


@dataclass(frozen=True)
class DifferenceData:
    differences: tuple[tuple[int, int], ...]  # (color, a - b)
    d_plus_max: int
    d_minus_max: int
    colors_of_extremes: tuple[int, int]  # (P, Q); 0 when the extreme is absent


def format_cpi(c: Cpi) -> str:
    side = lambda parts: "+".join(f"{p}:{a}" for p, a in parts)
    return f"{side(c.left)}={side(c.right)}"


_TOKEN = re.compile(r"^(\d+):(\d+)$")


def parse_cpi(text: str, spec: ScrollSpec) -> Cpi:
    text = re.sub(r"\s+", "", text)
    if text.count("=") != 1:
        raise ValueError(f"expected exactly one '=' in {text!r}")
    sides = []
    for chunk in text.split("="):
        parts = []
        for tok in chunk.split("+"):
            m = _TOKEN.match(tok)
            if not m:
                raise ValueError(f"bad token {tok!r}")
            parts.append((int(m.group(1)), int(m.group(2))))
        sides.append(parts)
    return Cpi(tuple(sides[0]), tuple(sides[1]), spec)


def cpi_to_json(c: Cpi) -> str:
    return json.dumps({"left": [list(x) for x in c.left], "right": [list(x) for x in c.right]})


def cpi_from_json(text: str, spec: ScrollSpec) -> Cpi:
    obj = json.loads(text)
    return Cpi(tuple(map(tuple, obj["left"])), tuple(map(tuple, obj["right"])), spec)


def degree_summands(c: Cpi) -> int:
    return len(c.left) + len(c.right)


def is_homogeneous(c: Cpi) -> bool:
    return len(c.left) == len(c.right)


def _color_counts(parts) -> Counter:
    return Counter(p for p, _ in parts)


def is_color_homogeneous(c: Cpi) -> bool:
    return _color_counts(c.left) == _color_counts(c.right)


def cpi_to_vector(c: Cpi) -> tuple[int, ...]:
    if not is_color_homogeneous(c):
        raise ValueError("only color-homogeneous identities give kernel vectors")
    u = [0] * c.spec.n
    for p, a in c.left:
        u[c.spec.column(p, a)] += 1
    for p, b in c.right:
        u[c.spec.column(p, b)] -= 1
    return tuple(u)


def vector_to_cpi(spec: ScrollSpec, u: Sequence[int]) -> Cpi:
    if len(u) != spec.n:
        raise ValueError(f"vector length {len(u)} != {spec.n}")
    labels = spec.labels()
    left, right = [], []
    for (p, e), x in zip(labels, u):
        if x > 0:
            left += [(p, e)] * x
        elif x < 0:
            right += [(p, e)] * (-x)
    if not left or not _balanced(left, right):
        raise ValueError("vector is not in the kernel of the scroll configuration")
    return Cpi(tuple(left), tuple(right), spec)


def _balanced(left, right) -> bool:
    return (sum(a for _, a in left) == sum(a for _, a in right)
            and _color_counts(left) == _color_counts(right))


def _sub_sums(parts, colors: int, track_colors: bool) -> dict:
    """Map (sum, per-color counts) -> set of sizes over all sub-multisets."""
    mult = Counter(parts)
    items = list(mult.items())
    out: dict = {}
    for choice in product(*(range(m + 1) for _, m in items)):
        total = 0
        size = 0
        counts = [0] * colors
        for ((p, a), _), k in zip(items, choice):
            total += k * a
            size += k
            counts[p - 1] += k
        key = (total, tuple(counts)) if track_colors else (total, ())
        out.setdefault(key, set()).add(size)
    return out


def is_primitive_cpi(c: Cpi) -> bool:
    """True iff no proper pair of sub-multisets forms a sub-identity.

    For a color-homogeneous identity the sub-identity must itself be color-
    homogeneous (it then corresponds to a binomial dividing this one side by
    side).  For any other identity only the numeric sums are compared.
    Left and right sub-multisets are tabulated separately and matched on
    their sums.
    """
    track = is_color_homogeneous(c)
    total = degree_summands(c)
    lsubs = _sub_sums(c.left, c.spec.colors, track)
    rsubs = _sub_sums(c.right, c.spec.colors, track)
    for key, lsizes in lsubs.items():
        rsizes = rsubs.get(key)
        if not rsizes:
            continue
        for i in lsizes:
            for j in rsizes:
                if 0 < i + j < total:
                    return False
    return True


def difference_data(c: Cpi) -> DifferenceData:
    """Pair the j-th smallest left and right parts of each color."""
    if not is_color_homogeneous(c):
        raise ValueError("differences need a color-homogeneous identity")
    diffs = []
    for p in range(1, c.spec.colors + 1):
        ls = sorted(a for q, a in c.left if q == p)
        rs = sorted(b for q, b in c.right if q == p)
        diffs += [(p, a - b) for a, b in zip(ls, rs)]
    plus = [(d, p) for p, d in diffs if d > 0]
    minus = [(-d, p) for p, d in diffs if d < 0]
    dp = max((d for d, _ in plus), default=0)
    dm = max((d for d, _ in minus), default=0)
    cp = min((p for d, p in plus if d == dp), default=0)
    cm = min((p for d, p in minus if d == dm), default=0)
    return DifferenceData(tuple(diffs), dp, dm, (cp, cm))


def sum_difference_walk(dd: DifferenceData) -> list[int]:
    """Running value ``x`` of the sum-difference walk over the nonzero differences.

    While ``x >= 0`` a negative difference is consumed, otherwise a positive
    one; the largest remaining element is always taken.
    """
    pos = sorted((d for _, d in dd.differences if d > 0), reverse=True)
    neg = sorted((-d for _, d in dd.differences if d < 0), reverse=True)
    x = 0
    walk = []
    while pos or neg:
        if x >= 0:
            x -= neg.pop(0)
        else:
            x += pos.pop(0)
        walk.append(x)
    return walk


class _Enumerator:
    """Degree-by-degree search for primitive color-homogeneous identities.

    Candidates are exponent vectors ``u`` over the columns ``(color, part)``
    in canonical order, with first nonzero entry positive.  A partial vector
    is abandoned as soon as it conformally contains an identity of lower
    degree found earlier (such a ``u`` has a proper sub-identity), or when the
    remaining columns can no longer balance the colors or the part sums.
    The search itself lives in :mod:`scrollgraver._pcpi_kernel`.
    """

    def __init__(self, spec: ScrollSpec, jit: bool = True):
        self.spec = spec
        labels = spec.labels()
        self.n = n = spec.n

        self.parts = np.array([e for _, e in labels], dtype=np.int64)
        self.color = np.array([p - 1 for p, _ in labels], dtype=np.int64)
        last = {p: t for t, (p, _) in enumerate(labels)}
        self.last = np.array([last[p] == t for t, (p, _) in enumerate(labels)], dtype=np.int64)
        # part range left in the column's own color, and the widest later block
        rest = [[e for q, e in labels[t:] if q == p] for t, (p, _) in enumerate(labels)]
        self.cmin = np.array([min(r) for r in rest], dtype=np.int64)
        self.cmax = np.array([max(r) for r in rest], dtype=np.int64)
        blocks = spec.blocks
        self.spread = np.array([max([b - 1 for b in blocks[p:]], default=0)
                                for p, _ in labels], dtype=np.int64)
        self.later = (self.spread > 0).astype(np.int64)
        self.search = _pcpi_kernel.search_jit if jit and n <= 62 else _pcpi_kernel.search_py
        self.found: list[tuple[int, ...]] = []

    def _index(self):
        # found identities grouped by their last support column
        lastcol = [max(j for j, x in enumerate(v) if x) for v in self.found]
        order = sorted(range(len(self.found)), key=lambda i: lastcol[i])
        G = np.zeros((max(len(order), 1), self.n), dtype=np.int64)
        GP = np.zeros(len(G), dtype=np.int64)
        GN = np.zeros(len(G), dtype=np.int64)
        start = np.zeros(self.n, dtype=np.int64)
        stop = np.zeros(self.n, dtype=np.int64)
        for r, i in enumerate(order):
            v = self.found[i]
            G[r] = v
            GP[r] = sum(1 << j for j, x in enumerate(v) if x > 0)
            GN[r] = sum(1 << j for j, x in enumerate(v) if x < 0)
        for t in range(self.n):
            start[t] = sum(1 for i in order if lastcol[i] < t)
            stop[t] = sum(1 for i in order if lastcol[i] <= t)
        return G, GP, GN, start, stop

    def run(self, max_side_degree: int) -> list[tuple[int, ...]]:
        cap = 1024
        for k in range(1, max_side_degree + 1):
            index = self._index()
            while True:
                out = np.zeros((cap, self.n), dtype=np.int64)
                got = self.search(k, self.parts, self.color, self.last, self.cmin, self.cmax,
                                  self.spread, self.later, self.spec.colors, *index, out)
                if got != _pcpi_kernel.FULL:
                    break
                cap *= 4
            self.found += [tuple(int(x) for x in row) for row in out[:got]]
        return self.found


def enumerate_pcpi(spec: ScrollSpec, max_side_degree: int) -> list[Cpi]:
    """All primitive color-homogeneous cpi's of side degree <= ``max_side_degree``.

    One identity per sign pair; the side holding the smallest ``(color, part)``
    is the left side.  Output is sorted by side degree, then by the exponent
    vector in decreasing lexicographic order.
    """
    if max_side_degree < 1:
        raise ValueError("max_side_degree must be >= 1")
    vecs = _Enumerator(spec).run(max_side_degree)
    vecs.sort(key=lambda v: (sum(x for x in v if x > 0), tuple(-x for x in v)))
    return [vector_to_cpi(spec, v) for v in vecs]


def enumerate_pcpi_vectors(spec: ScrollSpec, max_side_degree: int) -> list[tuple[int, ...]]:
    return [cpi_to_vector(c) for c in enumerate_pcpi(spec, max_side_degree)]


def pcpis_from_strings(lines: Iterable[str], spec: ScrollSpec) -> list[Cpi]:
    return [parse_cpi(s, spec) for s in lines]
