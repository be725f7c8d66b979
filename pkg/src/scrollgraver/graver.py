"""Graver bases, circuits and primitivity tests for integer point configurations.

The Graver basis is computed by project-and-lift completion.  Columns are
ordered so that the first ``k = n - rank`` coordinates already determine a
lattice vector.  Starting from a set with the positive sum property on those
coordinates, one more coordinate is added at a time; for each new coordinate
only pairs that agree in sign on the old coordinates and disagree on the new
one need to be completed.  After the last coordinate the set is inter-reduced,
which leaves exactly the conformally minimal lattice vectors.
"""
from __future__ import annotations

import random
import time
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from . import _kernels, linalg
from .scroll import PointConfig

INT64_LIMIT = 1 << 40
MAX_FAST_COLUMNS = 62
MAX_CIRCUIT_COLUMNS = 24


class BudgetExceeded(TimeoutError):
    pass


@dataclass(frozen=True, order=True)
class KernelVector:
    vector: tuple[int, ...]

    @property
    def plus(self) -> tuple[int, ...]:
        return tuple(max(x, 0) for x in self.vector)

    @property
    def minus(self) -> tuple[int, ...]:
        return tuple(max(-x, 0) for x in self.vector)

    @property
    def degree(self) -> int:
        return sum(x for x in self.vector if x > 0)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(j for j, x in enumerate(self.vector) if x)

    def __neg__(self):
        return KernelVector(tuple(-x for x in self.vector))

    def __len__(self):
        return len(self.vector)

    def __iter__(self):
        return iter(self.vector)


def canonical_key(v: KernelVector):
    return (v.degree, tuple(-x for x in v.vector))


def canonical(vectors: Iterable[Sequence[int]]) -> tuple[KernelVector, ...]:
    """Sign-normalize, deduplicate and sort (by degree, then lexicographically descending)."""
    seen = {linalg.sign_normalize(v) for v in vectors}
    seen.discard(tuple(0 for _ in next(iter(seen), ())))
    return tuple(sorted((KernelVector(v) for v in seen if any(v)), key=canonical_key))


@dataclass(frozen=True)
class GraverBasis:
    config: PointConfig
    elements: tuple[KernelVector, ...]

    @property
    def degree_histogram(self) -> dict[int, int]:
        return dict(sorted(Counter(e.degree for e in self.elements).items()))

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, v) -> bool:
        return linalg.sign_normalize(tuple(v)) in self._index

    @property
    def _index(self) -> frozenset:
        idx = self.__dict__.get("_idx")
        if idx is None:
            idx = frozenset(e.vector for e in self.elements)
            object.__setattr__(self, "_idx", idx)
        return idx

    def max_degree(self) -> int:
        return max((e.degree for e in self.elements), default=0)


def conformally_below(g: Sequence[int], v: Sequence[int]) -> bool:
    """``g ⊑ v``: g+ <= v+ and g- <= v- componentwise."""
    for a, b in zip(g, v):
        if a > 0 and (b < a):
            return False
        if a < 0 and (b > a):
            return False
    return True


def conformal_reduce(v: Sequence[int], basis: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Subtract elements of ``basis`` lying conformally below ``v`` until none does.

    The basis is scanned in the given order and the first applicable element is
    always used.
    """
    v = list(v)
    while any(v):
        for g in basis:
            if any(g) and conformally_below(g, v):
                v = [a - b for a, b in zip(v, g)]
                break
        else:
            break
    return tuple(v)


class _Store:
    """Growable arrays of vectors plus sign masks, int64 or Python-int backed."""

    def __init__(self, rows: list[list[int]], exact: bool):
        self.exact = exact
        self.n = len(rows[0])
        self.count = 0
        cap = max(64, 2 * len(rows))
        self._alloc(cap)
        for r in rows:
            self.push(r)

    def _alloc(self, cap):
        dt = object if self.exact else np.int64
        self.R = np.zeros((cap, self.n), dtype=dt)
        self.P = np.zeros(cap, dtype=dt)
        self.N = np.zeros(cap, dtype=dt)
        if self.exact:
            self.R[:] = 0
            self.P[:] = 0
            self.N[:] = 0

    def push(self, row):
        if self.count == self.R.shape[0]:
            self.grow()
        row = linalg.sign_normalize(row)
        pm = sum(1 << t for t, x in enumerate(row) if x > 0)
        nm = sum(1 << t for t, x in enumerate(row) if x < 0)
        self.R[self.count] = row
        self.P[self.count] = pm
        self.N[self.count] = nm
        self.count += 1

    def grow(self):
        R, P, N, c = self.R, self.P, self.N, self.count
        self._alloc(2 * R.shape[0])
        self.R[:c] = R[:c]
        self.P[:c] = P[:c]
        self.N[:c] = N[:c]

    def to_exact(self):
        rows = self.rows()
        self.exact = True
        cap = self.R.shape[0]
        self.count = 0
        self._alloc(cap)
        for r in rows:
            self.push(r)

    def rows(self) -> list[list[int]]:
        return [[int(x) for x in self.R[i]] for i in range(self.count)]

    def keep(self, mask):
        idx = np.flatnonzero(mask[:self.count])
        norms = [sum(abs(int(x)) for x in self.R[i]) for i in idx]
        idx = idx[np.argsort(norms, kind="stable")]
        c = len(idx)
        self.R[:c] = self.R[idx]
        self.P[:c] = self.P[idx]
        self.N[:c] = self.N[idx]
        self.count = c


def _fits_int64(rows) -> bool:
    return all(abs(x) <= INT64_LIMIT for r in rows for x in r)


def _run(store: _Store, d: int, mode: int, deadline, max_degree: int):
    a, b = 0, 0
    while True:
        if store.exact:
            s = np.zeros(store.n, dtype=object)
            s[:] = 0
            status, a, b, count = _kernels.complete_py(
                store.R, store.P, store.N, store.count, a, b, d, mode,
                1 << 4096, 1 << 12, s, max_degree)
        else:
            s = np.zeros(store.n, dtype=np.int64)
            status, a, b, count = _kernels.complete_jit(
                store.R, store.P, store.N, store.count, a, b, d, mode,
                INT64_LIMIT, 1 << 20, s, max_degree)
        store.count = count
        if status == _kernels.DONE:
            break
        if status == _kernels.GROW:
            store.grow()
        elif status == _kernels.OVERFLOW:
            store.to_exact()
        if deadline is not None and time.monotonic() > deadline:
            raise BudgetExceeded(f"Graver completion exceeded its time budget at coordinate {d}")
    keep = np.zeros(store.count, dtype=np.int64)
    if store.exact:
        _kernels.minimal_py(store.R, store.P, store.N, store.count, d, keep)
    else:
        _kernels.minimal_jit(store.R, store.P, store.N, store.count, d, keep)
    store.keep(keep)


def _lift_order(basis, n, rng):
    pivots = []
    for row in basis:
        pivots.append(next(j for j, x in enumerate(row) if x))
    unimodular = all(basis[i][p] == 1 for i, p in enumerate(pivots))
    rest = [j for j in range(n) if j not in set(pivots)]
    if rng is not None:
        rng.shuffle(rest)
    return pivots + rest, unimodular


def _compute(config: PointConfig, budget, degree_bound, shuffle) -> tuple[KernelVector, ...]:
    n = config.n
    basis = [list(v) for v in linalg.kernel_basis(config.matrix)]
    if not basis:
        return ()
    rng = random.Random(shuffle) if shuffle is not None else None
    if rng is not None:
        rng.shuffle(basis)
    hnf = linalg.hermite_rows(basis)
    order, unimodular = _lift_order(hnf, n, rng)
    k = len(hnf)
    seed = [[row[j] for j in order] for row in (hnf if unimodular else basis)]
    if rng is not None:
        rng.shuffle(seed)
    exact = n > MAX_FAST_COLUMNS or not _fits_int64(seed)
    store = _Store(seed, exact)
    deadline = None if budget is None else time.monotonic() + budget
    max_degree = int(degree_bound or 0)
    if not unimodular:
        _run(store, k, 1, deadline, max_degree)
    for d in range(k + 1, n + 1):
        _run(store, d, 0, deadline, max_degree)
    inverse = [0] * n
    for pos, j in enumerate(order):
        inverse[j] = pos
    rows = [[r[inverse[j]] for j in range(n)] for r in store.rows()]
    return canonical(rows)


@lru_cache(maxsize=64)
def _graver_cached(config: PointConfig) -> tuple[KernelVector, ...]:
    return _compute(config, None, None, None)


def graver(config: PointConfig, *, budget: float | None = None,
           degree_bound: int | None = None, shuffle: int | None = None) -> GraverBasis:
    """Graver basis of the integer kernel of ``config.matrix``.

    ``budget`` is a wall-clock limit in seconds (raises :class:`BudgetExceeded`).
    ``degree_bound`` discards intermediate vectors of larger degree; this is an
    optimization that is only safe when cross-checked, so it is off by default.
    ``shuffle`` seeds a random permutation of the seed basis and lifting
    order; the result must not depend on it.
    """
    if budget is None and degree_bound is None and shuffle is None:
        elements = _graver_cached(config)
    else:
        elements = _compute(config, budget, degree_bound, shuffle)
    return GraverBasis(config, elements)


def is_primitive_vector(config: PointConfig, v: Sequence[int]) -> bool:
    v = tuple(int(x) for x in v)
    if not any(v):
        raise ValueError("the zero vector is not a binomial")
    if not config.contains(v):
        raise ValueError("vector is not in the kernel of the configuration")
    key = linalg.sign_normalize(v)
    neg = tuple(-x for x in v)
    for g in graver(config).elements:
        if g.vector == key:
            continue
        if conformally_below(g.vector, v) or conformally_below(g.vector, neg):
            return False
    return True


def circuits(config: PointConfig) -> tuple[KernelVector, ...]:
    """Support-minimal kernel vectors, one per sign class, canonically sorted."""
    n = config.n
    if n > MAX_CIRCUIT_COLUMNS:
        raise ValueError(f"circuit enumeration is capped at {MAX_CIRCUIT_COLUMNS} columns")
    rows = [config.matrix[i] for i in linalg.independent_rows(config.matrix)]
    r = len(rows)
    if r == n:
        return ()
    found = set()
    for J in combinations(range(n), r + 1):
        sub = [[row[j] for j in J] for row in rows]
        if r and linalg.rank(sub) < r:
            continue
        v = [0] * n
        for pos, j in enumerate(J):
            minor = [[row[q] for q in range(r + 1) if q != pos] for row in sub]
            v[j] = (-1) ** pos * linalg.det(minor)
        if any(v):
            found.add(linalg.sign_normalize(linalg.primitive_part(v)))
    return canonical(found)


def degree_table(basis: GraverBasis) -> dict[int, int]:
    if not basis.config.is_homogeneous():
        raise ValueError("degree table needs a homogeneous configuration")
    return basis.degree_histogram


def is_pairwise_irreducible(elements: Sequence[KernelVector]) -> bool:
    vecs = [e.vector for e in elements]
    for i, v in enumerate(vecs):
        neg = tuple(-x for x in v)
        for k, g in enumerate(vecs):
            if k != i and (conformally_below(g, v) or conformally_below(g, neg)):
                return False
    return True
