"""Reduced Gröbner bases of binomial ideals under weight term orders.

Every polynomial handled here is a binomial ``x^a - x^b`` with coefficients
``+1, -1``; S-polynomials and reductions of such binomials are again
binomials, so a binomial is stored as its two exponent vectors with the
leading one first.
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass
from typing import Sequence

from .graver import graver
from .linalg import sign_normalize
from .scroll import Binomial, PointConfig

Mono = tuple[int, ...]


@dataclass(frozen=True)
class TermOrder:
    """Compare by ``weights . m``, then lexicographically (larger entry first wins)."""
    weights: tuple[int, ...]

    def __post_init__(self):
        w = tuple(int(x) for x in self.weights)
        if any(x < 0 for x in w):
            raise ValueError("weights must be nonnegative")
        object.__setattr__(self, "weights", w)

    def key(self, m: Sequence[int]):
        return (sum(w * e for w, e in zip(self.weights, m)), tuple(m))


def compare(order: TermOrder, m1: Sequence[int], m2: Sequence[int]) -> int:
    """-1, 0 or 1 as ``m1`` is smaller than, equal to or larger than ``m2``."""
    if len(m1) != len(m2):
        raise ValueError("monomials of different length")
    k1, k2 = order.key(m1), order.key(m2)
    return (k1 > k2) - (k1 < k2)


@dataclass(frozen=True)
class ReducedGB:
    order: TermOrder
    elements: tuple[Binomial, ...]  # plus = leading term
    config: PointConfig | None = None

    def vectors(self) -> list[tuple[int, ...]]:
        return [b.vector for b in self.elements]

    def leading_signs(self) -> list[int]:
        """+1 when the positive part of the sign-normalized row is the leading term."""
        return [1 if sign_normalize(b.vector) == b.vector else -1 for b in self.elements]

    def max_degree(self) -> int:
        return max((b.degree for b in self.elements), default=0)


def _mask(m: Mono) -> int:
    return sum(1 << i for i, e in enumerate(m) if e)


class _Basis:
    """Marked binomials with support masks for quick divisibility rejection."""

    def __init__(self, order: TermOrder):
        self.order = order
        self.lead: list[Mono] = []
        self.trail: list[Mono] = []
        self.lmask: list[int] = []

    def add(self, lead: Mono, trail: Mono):
        self.lead.append(lead)
        self.trail.append(trail)
        self.lmask.append(_mask(lead))

    def __len__(self):
        return len(self.lead)

    def divisor(self, m: Mono, skip: int = -1) -> int:
        mm = _mask(m)
        for i, (lm, lead) in enumerate(zip(self.lmask, self.lead)):
            if i != skip and lm & ~mm == 0 and all(a >= b for a, b in zip(m, lead)):
                return i
        return -1

    def reduce_mono(self, m: Mono, skip: int = -1) -> Mono:
        while True:
            i = self.divisor(m, skip)
            if i < 0:
                return m
            m = tuple(a - b + c for a, b, c in zip(m, self.lead[i], self.trail[i]))


def _orient(order: TermOrder, a: Mono, b: Mono) -> tuple[Mono, Mono] | None:
    c = compare(order, a, b)
    if c == 0:
        return None
    return (a, b) if c > 0 else (b, a)


def _check_binomial(a: Mono, b: Mono):
    # The all-ones grading is preserved by every rewrite in a homogeneous ideal.
    if sum(a) != sum(b):
        raise AssertionError("non-homogeneous binomial produced; coefficient closure violated")


def _nf(basis: _Basis, a: Mono, b: Mono, skip: int = -1):
    """Fully reduce ``x^a - x^b``; returns the oriented pair or None for zero."""
    order = basis.order
    pair = _orient(order, a, b)
    while pair is not None:
        lead, trail = pair
        i = basis.divisor(lead, skip)
        if i >= 0:
            lead = tuple(x - y + z for x, y, z in zip(lead, basis.lead[i], basis.trail[i]))
            pair = _orient(order, lead, trail)
            continue
        j = basis.divisor(trail, skip)
        if j >= 0:
            trail = tuple(x - y + z for x, y, z in zip(trail, basis.lead[j], basis.trail[j]))
            pair = _orient(order, lead, trail)
            continue
        return pair
    return None


def normal_form(b: Binomial, gb: Sequence[Binomial], order: TermOrder) -> Binomial | None:
    """Normal form of ``b`` modulo ``gb`` (each marked with ``plus`` leading)."""
    basis = _Basis(order)
    for g in gb:
        basis.add(g.plus, g.minus)
    pair = _nf(basis, b.plus, b.minus)
    if pair is None:
        return None
    return Binomial(*pair)


def _interreduce(basis: _Basis) -> _Basis:
    """Replace each element by its normal form modulo the others; drop zeros."""
    changed = True
    while changed:
        changed = False
        i = 0
        while i < len(basis):
            before = (basis.lead[i], basis.trail[i])
            pair = _nf(basis, *before, skip=i)
            if pair == before:
                i += 1
                continue
            changed = True
            if pair is None:
                for lst in (basis.lead, basis.trail, basis.lmask):
                    lst.pop(i)
            else:
                basis.lead[i], basis.trail[i] = pair
                basis.lmask[i] = _mask(pair[0])
                i += 1
    return basis


def buchberger(gens: Sequence[Binomial], order: TermOrder,
               config: PointConfig | None = None) -> ReducedGB:
    """Reduced Gröbner basis of the ideal generated by ``gens``.

    Generators are inter-reduced first, then S-pairs are completed, skipping
    pairs with coprime leading terms.  The result is made reduced and sorted,
    so it depends only on the ideal and the order.
    """
    basis = _Basis(order)
    for g in gens:
        _check_binomial(g.plus, g.minus)
        pair = _orient(order, tuple(g.plus), tuple(g.minus))
        if pair is not None and pair not in zip(basis.lead, basis.trail):
            basis.add(*pair)
    basis = _interreduce(basis)
    pairs = [(i, j) for j in range(len(basis)) for i in range(j)]
    while pairs:
        i, j = pairs.pop()
        li, lj = basis.lead[i], basis.lead[j]
        if not any(a and b for a, b in zip(li, lj)):
            continue
        lcm = tuple(max(a, b) for a, b in zip(li, lj))
        s1 = tuple(l - a + t for l, a, t in zip(lcm, li, basis.trail[i]))
        s2 = tuple(l - a + t for l, a, t in zip(lcm, lj, basis.trail[j]))
        _check_binomial(s1, s2)
        pair = _nf(basis, s1, s2)
        if pair is not None:
            basis.add(*pair)
            k = len(basis) - 1
            pairs.extend((m, k) for m in range(k))
    # minimal: drop elements whose leading term is divisible by another's
    keep = []
    for i in range(len(basis)):
        dominated = False
        for k in range(len(basis)):
            if k == i:
                continue
            if all(a >= b for a, b in zip(basis.lead[i], basis.lead[k])):
                if basis.lead[i] != basis.lead[k] or k < i:
                    dominated = True
                    break
        if not dominated:
            keep.append(i)
    minimal = _Basis(order)
    for i in keep:
        minimal.add(basis.lead[i], basis.trail[i])
    elements = []
    for i in range(len(minimal)):
        trail = minimal.reduce_mono(minimal.trail[i], skip=i)
        _check_binomial(minimal.lead[i], trail)
        elements.append(Binomial(minimal.lead[i], trail))
    elements.sort(key=lambda b: (sum(b.plus), order.key(b.plus), b.minus))
    return ReducedGB(order, tuple(elements), config)


def reduced_gb_of_config(config: PointConfig, order: TermOrder) -> ReducedGB:
    """Reduced Gröbner basis of the toric ideal, seeded with its Graver basis."""
    if not config.is_homogeneous():
        raise ValueError("reduced_gb_of_config needs a homogeneous configuration")
    if len(order.weights) != config.n:
        raise ValueError("weight vector length must match the number of columns")
    gens = [Binomial.from_vector(e.vector) for e in graver(config).elements]
    return buchberger(gens, order, config)


def weight_box(config: PointConfig) -> int:
    """Upper end ``W = 4 n D`` of the weight range used for random orders (D = max Graver degree)."""
    return 4 * config.n * max(graver(config).max_degree(), 1)


def random_orders(config: PointConfig, trials: int, seed: int) -> list[TermOrder]:
    """``trials`` weight vectors drawn uniformly from ``{0..W}^n``."""
    rng = random.Random(seed)
    w = weight_box(config)
    return [TermOrder(tuple(rng.randint(0, w) for _ in range(config.n))) for _ in range(trials)]


def universal_sample(config: PointConfig, trials: int, seed: int) -> dict:
    """Union of reduced Gröbner bases over random weight orders, against the Graver basis."""
    gr = graver(config)
    union: set[tuple[int, ...]] = set()
    max_deg = 0
    for order in random_orders(config, trials, seed):
        gb = reduced_gb_of_config(config, order)
        max_deg = max(max_deg, gb.max_degree())
        union.update(sign_normalize(v) for v in gb.vectors())
    graver_set = {e.vector for e in gr.elements}
    uncovered = [list(e.vector) for e in gr.elements if e.vector not in union]
    return {
        "graver": len(graver_set),
        "covered": len(union & graver_set),
        "union": len(union),
        "outside_graver": len(union - graver_set),
        "uncovered_rows": uncovered,
        "trials": trials,
        "seed": seed,
        "weight_box": weight_box(config) if trials else 0,
        "max_gb_degree": max_deg,
    }


def coverage_json(report: dict) -> str:
    return json.dumps(report)
