"""Point configurations of rational normal scrolls and their degree bounds.

A scroll is described by its block sizes ``n_1, ..., n_c``; in the
``S(a_1, ..., a_c)`` notation the blocks are ``n_j = a_j + 1``.  The library
always works with block sizes; :meth:`ScrollSpec.from_s_notation` converts.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, gcd
from typing import Mapping, Sequence

from . import linalg


@dataclass(frozen=True)
class ScrollSpec:
    blocks: tuple[int, ...]

    def __post_init__(self):
        blocks = tuple(int(b) for b in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        if not blocks:
            raise ValueError("a scroll needs at least one block")
        if any(b < 1 for b in blocks):
            raise ValueError(f"block sizes must be >= 1, got {blocks}")

    @classmethod
    def from_s_notation(cls, a: Sequence[int]) -> "ScrollSpec":
        if any(int(x) < 0 for x in a):
            raise ValueError(f"S-notation entries must be >= 0, got {tuple(a)}")
        return cls(tuple(int(x) + 1 for x in a))

    @property
    def colors(self) -> int:
        return len(self.blocks)

    @property
    def n(self) -> int:
        return sum(self.blocks)

    def s_notation(self) -> tuple[int, ...]:
        return tuple(b - 1 for b in self.blocks)

    def __str__(self):
        return "S(" + ",".join(str(a) for a in self.s_notation()) + ")"

    def labels(self) -> tuple[tuple[int, int], ...]:
        return tuple((p, i) for p, nb in enumerate(self.blocks, start=1)
                     for i in range(1, nb + 1))

    def column(self, color: int, exponent: int) -> int:
        """0-based column index of variable ``x_{color, exponent}``."""
        if not 1 <= color <= self.colors or not 1 <= exponent <= self.blocks[color - 1]:
            raise ValueError(f"no column ({color}, {exponent}) in {self}")
        return sum(self.blocks[:color - 1]) + exponent - 1


@dataclass(frozen=True)
class PointConfig:
    """An integer matrix whose columns are the points of the configuration.

    ``labels[j]`` is ``(color, exponent)`` of column ``j`` for scroll-derived
    configurations and ``None`` for arbitrary matrices.
    """
    matrix: tuple[tuple[int, ...], ...]
    labels: tuple[tuple[int, int], ...] | None = None
    origin: ScrollSpec | None = None

    def __post_init__(self):
        mat = tuple(tuple(int(x) for x in row) for row in self.matrix)
        object.__setattr__(self, "matrix", mat)
        linalg.shape(mat)
        if self.labels is not None:
            labels = tuple((int(p), int(e)) for p, e in self.labels)
            object.__setattr__(self, "labels", labels)
            if len(labels) != self.n:
                raise ValueError("one label per column required")

    @classmethod
    def from_matrix(cls, rows: Sequence[Sequence[int]]) -> "PointConfig":
        return cls(tuple(tuple(r) for r in rows))

    @property
    def d(self) -> int:
        return len(self.matrix)

    @property
    def n(self) -> int:
        return len(self.matrix[0]) if self.matrix else 0

    def rank(self) -> int:
        return linalg.rank(self.matrix)

    def is_homogeneous(self) -> bool:
        """True when the all-ones vector lies in the row space."""
        if self.n == 0:
            return True
        r = self.rank()
        return linalg.rank(list(self.matrix) + [[1] * self.n]) == r

    def contains(self, u: Sequence[int]) -> bool:
        return len(u) == self.n and not any(linalg.mat_vec(self.matrix, u))

    def colors_of(self, u: Sequence[int]) -> set[int]:
        if self.labels is None:
            raise ValueError("configuration has no color labels")
        return {self.labels[j][0] for j, x in enumerate(u) if x}


@dataclass(frozen=True)
class Binomial:
    """``x^plus - x^minus``; for kernel vectors the two sides have disjoint support."""
    plus: tuple[int, ...]
    minus: tuple[int, ...]

    @classmethod
    def from_vector(cls, u: Sequence[int]) -> "Binomial":
        return cls(tuple(max(x, 0) for x in u), tuple(max(-x, 0) for x in u))

    @property
    def vector(self) -> tuple[int, ...]:
        return tuple(a - b for a, b in zip(self.plus, self.minus))

    @property
    def degree(self) -> int:
        return max(sum(self.plus), sum(self.minus))


@dataclass(frozen=True)
class BoundReport:
    naive_bound: int
    sharp_bound: int
    witness: tuple[tuple[int, int], tuple[int, int]]  # ((color_u, u), (color_v, v))
    reduction_trail: tuple[tuple[int, int], ...] = field(default=())

    @property
    def u(self) -> int:
        return self.witness[0][1]

    @property
    def v(self) -> int:
        return self.witness[1][1]


def build_config(spec: ScrollSpec) -> PointConfig:
    c = spec.colors
    labels = spec.labels()
    rows = [tuple(1 for _ in labels)]
    for p in range(1, c):
        rows.append(tuple(1 if color > p else 0 for color, _ in labels))
    rows.append(tuple(e for _, e in labels))
    return PointConfig(tuple(rows), labels, spec)


def minor_generators(spec: ScrollSpec) -> list[Binomial]:
    """The 2-minors ``x_{i,k} x_{j,l+1} - x_{j,l} x_{i,k+1}`` of the catalecticant.

    One binomial per unordered pair of columns of the concatenated ``2 x
    (n_j - 1)`` blocks.
    """
    cols = [(p, k) for p, nb in enumerate(spec.blocks, start=1) for k in range(1, nb)]
    n = spec.n
    out = []
    seen = set()
    for a in range(len(cols)):
        for b in range(a + 1, len(cols)):
            (i, k), (j, l) = cols[a], cols[b]
            u = [0] * n
            u[spec.column(i, k)] += 1
            u[spec.column(j, l + 1)] += 1
            u[spec.column(j, l)] -= 1
            u[spec.column(i, k + 1)] -= 1
            if not any(u):
                continue
            key = linalg.sign_normalize(u)
            if key in seen:
                continue
            seen.add(key)
            out.append(Binomial.from_vector(u))
    return out


def scroll_degree(spec: ScrollSpec) -> int:
    return spec.n - spec.colors


def sharp_degree_bound(spec: ScrollSpec) -> BoundReport:
    """Largest ``u + v - 2`` over two distinct blocks with ``gcd(u-1, v-1) = 1``.

    ``u`` ranges over ``2..n_i`` and ``v`` over ``2..n_j`` for blocks
    ``i != j``.  Ties prefer the larger ``u``, then the smaller ``i``, then the
    smaller ``j``.
    """
    blocks = spec.blocks
    if spec.colors < 2:
        raise ValueError("the two-block bound needs at least two colors")
    if sum(1 for b in blocks if b >= 2) < 2:
        raise ValueError(f"{spec} has fewer than two blocks of size >= 2")
    top = sorted(blocks, reverse=True)
    naive = top[0] + top[1] - 2
    best = None
    for i, ni in enumerate(blocks, start=1):
        for j, nj in enumerate(blocks, start=1):
            if i == j:
                continue
            for u in range(2, ni + 1):
                for v in range(2, nj + 1):
                    if gcd(u - 1, v - 1) != 1:
                        continue
                    key = (u + v, u, -i, -j)
                    if best is None or key > best[0]:
                        best = (key, (i, u), (j, v))
    _, wu, wv = best
    trail = tuple((color, blocks[color - 1] - size) for color, size in (wu, wv)
                  if blocks[color - 1] != size)
    return BoundReport(naive, wu[1] + wv[1] - 2, (wu, wv), trail)


def general_toric_bound(config: PointConfig, exact: bool = False) -> int | Fraction:
    """The generic toric-ideal degree bound ``(c+2)(n-c-1) D(A) / 2``.

    ``D(A)`` is the largest absolute ``(c+1)``-minor.  Returns the ceiling,
    or the exact rational value when ``exact`` is set.
    """
    spec = config.origin
    if spec is None:
        raise ValueError("bound is defined for scroll-derived configurations")
    c = spec.colors
    dmax = linalg.max_abs_minor(config.matrix, c + 1)
    value = Fraction((c + 2) * (spec.n - c - 1) * dmax, 2)
    return value if exact else ceil(value)


def project_config(config: PointConfig,
                   keep: Mapping[int, Sequence[int]] | Sequence[Sequence[int]]) -> PointConfig:
    """Delete the columns whose ``(color, exponent)`` label is not kept.

    ``keep`` maps each color (1-based) to the exponents to retain; a plain
    sequence is read as colors ``1, 2, ...``.  Every kept set must contain
    both ``1`` and ``n_k`` of the parent scroll.
    """
    spec = config.origin
    if spec is None or config.labels is None:
        raise ValueError("projection needs a scroll-derived configuration")
    if not isinstance(keep, Mapping):
        keep = {p: ks for p, ks in enumerate(keep, start=1)}
    keep = {int(p): {int(e) for e in ks} for p, ks in keep.items()}
    if set(keep) != set(range(1, spec.colors + 1)):
        raise ValueError(f"need a kept set for every color 1..{spec.colors}")
    present = {}
    for p, e in config.labels:
        present.setdefault(p, set()).add(e)
    for p, ks in keep.items():
        nk = spec.blocks[p - 1]
        if not ks:
            raise ValueError(f"color {p}: kept set is empty")
        if 1 not in ks or nk not in ks:
            raise ValueError(f"color {p}: kept set must contain 1 and {nk}")
        if not ks <= present[p]:
            raise ValueError(f"color {p}: exponents {sorted(ks - present[p])} not in config")
    cols = [j for j, (p, e) in enumerate(config.labels) if e in keep[p]]
    matrix = tuple(tuple(row[j] for j in cols) for row in config.matrix)
    labels = tuple(config.labels[j] for j in cols)
    return PointConfig(matrix, labels, spec)


def state_polytope_dim(config: PointConfig) -> int:
    return config.n - config.rank()
