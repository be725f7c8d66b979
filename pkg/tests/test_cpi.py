import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import block_specs
from oracles import fiber_graver, has_sub_identity, scroll_matrix, sign_normalize
from scrollgraver import cpi
from scrollgraver.graver import graver, is_primitive_vector
from scrollgraver.scroll import ScrollSpec, build_config, sharp_degree_bound, scroll_degree

S33 = ScrollSpec((3, 3))
S56 = ScrollSpec((6, 7))
RB = ScrollSpec((4, 5))  # red = color 1, blue = color 2

# the eleven identities for two colors with n_1 = n_2 = 3, in color:part form
LISTED_33 = [
    "1:1+1:3=1:2+1:2",
    "1:1+2:2=1:2+2:1",
    "1:1+1:1+2:3=1:2+1:2+2:1",
    "1:1+2:3=1:2+2:2",
    "1:2+2:3=1:3+2:2",
    "1:2+2:2=1:3+2:1",
    "1:1+2:3=1:3+2:1",
    "2:1+2:3=2:2+2:2",
    "1:1+2:3+2:3=1:3+2:2+2:2",
    "1:1+2:2+2:2=1:3+2:1+2:1",
    "1:2+1:2+2:3=1:3+1:3+2:1",
]
MAXIMAL_56 = "1:1+1:1+1:1+1:1+1:1+1:1+2:7+2:7+2:7+2:7+2:7=1:6+1:6+1:6+1:6+1:6+1:6+2:1+2:1+2:1+2:1+2:1"


def oracle_bound(spec):
    try:
        return sharp_degree_bound(spec).sharp_bound
    except ValueError:
        return max(scroll_degree(spec), 1)


def test_parse_and_format():
    c = cpi.parse_cpi(" 1:3 + 1:1 = 1:2+1:2 ", S33)
    assert c.left == ((1, 1), (1, 3)) and c.right == ((1, 2), (1, 2))
    assert cpi.format_cpi(c) == "1:1+1:3=1:2+1:2"
    assert cpi.cpi_from_json(cpi.cpi_to_json(c), S33) == c
    assert cpi.cpi_to_json(c) == '{"left": [[1, 1], [1, 3]], "right": [[1, 2], [1, 2]]}'


@pytest.mark.parametrize("text", ["1:1=1:2", "1:4=1:4", "1:1+1:3", "1:1=", "a:1=1:1", "3:1=3:1"])
def test_parse_rejects(text):
    with pytest.raises(ValueError):
        cpi.parse_cpi(text, S33)


def test_degree_summands():
    assert cpi.degree_summands(cpi.parse_cpi("1:1+1:3=1:2+1:2", S33)) == 4
    assert cpi.degree_summands(cpi.parse_cpi(MAXIMAL_56, S56)) == 22


def test_homogeneity_examples():
    c = cpi.parse_cpi("1:1+1:1+2:3=1:2+1:2+2:1", S33)
    assert cpi.is_homogeneous(c) and cpi.is_color_homogeneous(c)
    rb = cpi.parse_cpi("1:1+1:4+2:3=2:5+2:1+1:2", RB)
    assert cpi.is_homogeneous(rb) and not cpi.is_color_homogeneous(rb)
    same = cpi.parse_cpi("1:1=1:1", S33)
    assert cpi.is_homogeneous(same) and cpi.is_color_homogeneous(same)


def test_vector_conversion_examples():
    c = cpi.parse_cpi("1:1+1:3=1:2+1:2", S33)
    assert cpi.cpi_to_vector(c) == (1, -2, 1, 0, 0, 0)
    assert cpi.vector_to_cpi(S33, (1, -2, 1, 0, 0, 0)) == c
    u = cpi.cpi_to_vector(cpi.parse_cpi(MAXIMAL_56, S56))
    assert u == (6, 0, 0, 0, 0, -6, -5, 0, 0, 0, 0, 0, 5)
    flipped = cpi.vector_to_cpi(S33, (-1, 2, -1, 0, 0, 0))
    assert flipped.left == c.right and flipped.right == c.left
    with pytest.raises(ValueError):
        cpi.cpi_to_vector(cpi.parse_cpi("1:1+1:4+2:3=2:5+2:1+1:2", RB))
    with pytest.raises(ValueError):
        cpi.vector_to_cpi(S33, (1, -1, 0, 0, 0, 0))


def test_minor_generators_as_identities():
    from scrollgraver.scroll import minor_generators
    for g in minor_generators(S33):
        c = cpi.vector_to_cpi(S33, g.vector)
        assert cpi.degree_summands(c) == 4 and cpi.is_primitive_cpi(c)


def test_primitivity_examples():
    for text in LISTED_33:
        assert cpi.is_primitive_cpi(cpi.parse_cpi(text, S33))
    assert not cpi.is_primitive_cpi(cpi.parse_cpi("1:1+1:4+2:3=2:5+2:1+1:2", RB))
    assert cpi.is_primitive_cpi(cpi.parse_cpi(MAXIMAL_56, S56))
    assert not cpi.is_primitive_cpi(cpi.parse_cpi("1:1+1:1+1:3+1:3=1:2+1:2+1:2+1:2", S33))


def test_enumerate_examples():
    found = cpi.enumerate_pcpi(S33, 3)
    assert {cpi.format_cpi(c) for c in found} == {cpi.format_cpi(cpi.parse_cpi(t, S33)) for t in LISTED_33}
    assert len(found) == 11
    assert cpi.enumerate_pcpi(ScrollSpec((2,)), 5) == []
    curve = cpi.enumerate_pcpi(ScrollSpec((5,)), 4)
    hist = {}
    for c in curve:
        hist[c.side_degree] = hist.get(c.side_degree, 0) + 1
    assert hist == {2: 7, 3: 7, 4: 2}
    with pytest.raises(ValueError):
        cpi.enumerate_pcpi(S33, 0)


def test_enumerate_orientation_and_order():
    found = cpi.enumerate_pcpi(ScrollSpec((4, 3)), 5)
    for c in found:
        assert min(c.left) < min(c.right)
    keys = [(c.side_degree, tuple(-x for x in cpi.cpi_to_vector(c))) for c in found]
    assert keys == sorted(keys)


def test_difference_examples():
    dd = cpi.difference_data(cpi.parse_cpi("1:1+1:3=1:2+1:2", S33))
    assert sorted(d for _, d in dd.differences) == [-1, 1]
    assert (dd.d_plus_max, dd.d_minus_max) == (1, 1)
    assert cpi.sum_difference_walk(dd) == [-1, 0]
    dd = cpi.difference_data(cpi.parse_cpi(MAXIMAL_56, S56))
    assert sorted(dd.differences) == [(1, -5)] * 6 + [(2, 6)] * 5
    assert (dd.d_plus_max, dd.d_minus_max, dd.colors_of_extremes) == (6, 5, (2, 1))
    # D_+ repeated D_- times equals D_- repeated D_+ times
    assert dd.d_plus_max * dd.d_minus_max == dd.d_minus_max * dd.d_plus_max
    walk = cpi.sum_difference_walk(dd)
    assert len(walk) == 11 and walk[-1] == 0 and len(set(walk)) == 11
    zero = cpi.difference_data(cpi.parse_cpi("1:1+2:2=1:1+2:2", S33))
    assert all(d == 0 for _, d in zero.differences)
    assert (zero.d_plus_max, zero.d_minus_max) == (0, 0)
    assert cpi.sum_difference_walk(zero) == []
    with pytest.raises(ValueError):
        cpi.difference_data(cpi.parse_cpi("1:1+1:4+2:3=2:5+2:1+1:2", RB))


def test_pcpis_from_strings():
    assert len(cpi.pcpis_from_strings(LISTED_33, S33)) == 11


@st.composite
def small_cpis(draw, max_parts=4):
    blocks = draw(block_specs(7, max_colors=2))
    spec = ScrollSpec(blocks)
    part = st.integers(1, len(blocks)).flatmap(
        lambda p: st.tuples(st.just(p), st.integers(1, blocks[p - 1])))
    left = draw(st.lists(part, min_size=1, max_size=max_parts))
    right = draw(st.lists(part, min_size=1, max_size=max_parts))
    total = sum(a for _, a in left) - sum(a for _, a in right)
    if total > 0:
        right += [(1, 1)] * total
    elif total < 0:
        left += [(1, 1)] * (-total)
    return cpi.Cpi(tuple(left), tuple(right), spec)


@given(small_cpis())
def test_primitivity_matches_subset_oracle(c):
    colored = cpi.is_color_homogeneous(c)
    assert cpi.is_primitive_cpi(c) == (not has_sub_identity(list(c.left), list(c.right), colored))


@given(small_cpis())
def test_color_homogeneous_implies_homogeneous(c):
    if cpi.is_color_homogeneous(c):
        assert cpi.is_homogeneous(c)
        assert cpi.degree_summands(c) == 2 * c.side_degree


@given(block_specs(7))
def test_enumerate_matches_fiber_oracle(blocks):
    spec = ScrollSpec(blocks)
    bound = oracle_bound(spec)
    expected = set().union(*fiber_graver(scroll_matrix(blocks), bound).values())
    got = {sign_normalize(v) for v in cpi.enumerate_pcpi_vectors(spec, bound)}
    assert got == expected


@given(block_specs(10))
def test_enumerated_identities_invariants(blocks):
    spec = ScrollSpec(blocks)
    cfg = build_config(spec)
    for c in cpi.enumerate_pcpi(spec, oracle_bound(spec)):
        assert cpi.is_color_homogeneous(c) and cpi.is_primitive_cpi(c)
        assert cfg.contains(cpi.cpi_to_vector(c))
        assert cpi.vector_to_cpi(spec, cpi.cpi_to_vector(c)) == c
        if c.side_degree >= 2:
            for p in range(1, spec.colors + 1):
                assert not {a for q, a in c.left if q == p} & {b for q, b in c.right if q == p}
        dd = cpi.difference_data(c)
        assert sum(d for _, d in dd.differences) == 0
        nonzero = [d for _, d in dd.differences if d]
        assert len(nonzero) <= dd.d_plus_max + dd.d_minus_max
        walk = cpi.sum_difference_walk(dd)
        assert len(walk) == len(nonzero) and (not walk or walk[-1] == 0)
        pos = [(1, d) for d in nonzero if d > 0]
        neg = [(1, -d) for d in nonzero if d < 0]
        if pos and not has_sub_identity(pos, neg, colored=False):
            assert len(set(walk)) == len(walk)


@given(block_specs(10), st.integers(0, 2 ** 32))
def test_primitivity_consistency(blocks, seed):
    # random kernel vectors: signed sums of one or two Graver elements
    spec = ScrollSpec(blocks)
    cfg = build_config(spec)
    elems = [e.vector for e in graver(cfg).elements]
    if not elems:
        return
    rng = random.Random(seed)
    for _ in range(10):
        u = list(rng.choice(elems))
        if rng.random() < 0.7:
            sign = rng.choice((1, -1))
            u = [a + sign * b for a, b in zip(u, rng.choice(elems))]
        if not any(u):
            continue
        c = cpi.vector_to_cpi(spec, u)
        assert cpi.is_primitive_cpi(c) == is_primitive_vector(cfg, u)
