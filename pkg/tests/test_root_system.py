import itertools
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from iwahori_whittaker.errors import ConfigurationError, DomainError
from iwahori_whittaker.root_system import (
    CartanType,
    Coweight,
    act_on_coweight,
    act_on_root,
    build_root_system,
    cartan_matrix,
    compose,
    enumerate_weyl_group,
    inversion_set,
    length,
    longest_element,
    pairing,
    supported_types,
)

ALL_TYPES = [str(t) for t in supported_types()]
WEYL_ORDERS = {"A1": 2, "A2": 6, "A3": 24, "A4": 120, "B2": 8, "B3": 48, "C2": 8, "C3": 48, "D4": 192, "G2": 12}


def _euclidean_simple_roots(name):
    family, n = name[0], int(name[1:])
    e = lambda i, dim: tuple(Fraction(int(k == i)) for k in range(dim))
    sub = lambda u, v: tuple(a - b for a, b in zip(u, v))
    if family == "A":
        return [sub(e(i, n + 1), e(i + 1, n + 1)) for i in range(n)]
    if family == "B":
        return [sub(e(i, n), e(i + 1, n)) for i in range(n - 1)] + [e(n - 1, n)]
    if family == "C":
        return [sub(e(i, n), e(i + 1, n)) for i in range(n - 1)] + [tuple(2 * x for x in e(n - 1, n))]
    if family == "D":
        # branch node second, matching the Bourbaki labelling
        return [sub(e(0, 4), e(1, 4)), sub(e(1, 4), e(2, 4)), sub(e(2, 4), e(3, 4)),
                tuple(a + b for a, b in zip(e(2, 4), e(3, 4)))]
    if family == "G":
        return [(Fraction(1), Fraction(-1), Fraction(0)), (Fraction(-2), Fraction(1), Fraction(1))]
    raise AssertionError(name)


@pytest.mark.parametrize("name", ALL_TYPES)
def test_cartan_matrix_matches_euclidean_realization(name):
    simple = _euclidean_simple_roots(name)
    dot = lambda u, v: sum(a * b for a, b in zip(u, v))
    expected = tuple(
        tuple(int(2 * dot(simple[j], simple[i]) / dot(simple[i], simple[i])) for j in range(len(simple)))
        for i in range(len(simple))
    )
    assert cartan_matrix(CartanType.parse(name)) == expected


def test_examples():
    a2 = build_root_system("A2")
    assert a2.positive_roots == frozenset({(1, 0), (0, 1), (1, 1)}) or set(a2.positive_roots) == {(1, 0), (0, 1), (1, 1)}
    assert len(build_root_system("G2").positive_roots) == 6
    assert build_root_system("B2").two_rho == (3, 4)
    s1, s2 = a2.simple_reflections
    assert act_on_root(a2.identity, (1, 0)) == (1, 0)
    assert act_on_root(s1, (1, 0)) == (-1, 0)
    assert act_on_root(s1, (0, 1)) == (1, 1)
    assert compose(a2.identity, s2) == s2
    assert compose(s1, s1) == a2.identity
    assert length(compose(s1, s2)) == 2
    assert length(a2.w0) == 3
    assert inversion_set(a2.identity) == frozenset()
    assert inversion_set(s1) == {(1, 0)}
    assert inversion_set(a2.w0) == set(a2.positive_roots)


def test_longest_element_and_group_orders():
    a1, a2, b2 = (build_root_system(t) for t in ("A1", "A2", "B2"))
    assert longest_element(a1) == a1.s(1)
    assert longest_element(a2) == a2.word([1, 2, 1])
    assert longest_element(b2) == b2.word([1, 2, 1, 2]) and length(b2.w0) == 4
    for name, order in WEYL_ORDERS.items():
        assert len(enumerate_weyl_group(build_root_system(name))) == order


def test_pairing_and_coweight_action():
    a1, a2 = build_root_system("A1"), build_root_system("A2")
    w1 = Coweight.fundamental(1, 2)
    assert pairing((1, 0), w1) == 1
    assert pairing((1, 1), w1) == 1
    assert pairing(a2.two_rho, w1) == 2
    lam = Coweight((3, -1))
    assert act_on_coweight(a2.identity, lam) == lam
    assert act_on_coweight(a1.s(1), Coweight((1,))) == Coweight((-1,))
    assert act_on_coweight(a2.w0, w1) == -Coweight.fundamental(2, 2)


@pytest.mark.parametrize("name", ALL_TYPES)
def test_group_invariants(name):
    rs = build_root_system(name)
    assert len(rs.roots) == 2 * len(rs.positive_roots)
    for w in rs.elements:
        assert all(act_on_root(w, r) in rs.roots for r in rs.roots)
        for s in rs.simple_reflections:
            assert abs(length(compose(s, w)) - length(w)) == 1
        assert len(inversion_set(w)) == length(w) == length(w.inverse)
        assert rs.word(w.reduced_word) == w and len(w.reduced_word) == w.length
        assert w * w.inverse == rs.identity
    assert rs.w0.length == len(rs.positive_roots)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_type_a_length_is_permutation_inversion_count(n):
    rs = build_root_system(f"A{n}")
    counts = {}
    for perm in itertools.permutations(range(n + 1)):
        inv = sum(perm[i] > perm[j] for i, j in itertools.combinations(range(n + 1), 2))
        counts[inv] = counts.get(inv, 0) + 1
    lengths = {}
    for w in rs.elements:
        lengths[w.length] = lengths.get(w.length, 0) + 1
    assert lengths == counts


@pytest.mark.parametrize("name", ["A3", "B3", "G2", "D4"])
@given(data=st.data())
def test_pairing_invariance(name, data):
    rs = build_root_system(name)
    w = data.draw(st.sampled_from(rs.elements))
    alpha = data.draw(st.sampled_from(sorted(rs.roots)))
    lam = Coweight(tuple(data.draw(st.lists(st.integers(-5, 5), min_size=rs.rank, max_size=rs.rank))))
    assert pairing(act_on_root(w, alpha), act_on_coweight(w, lam)) == pairing(alpha, lam)


def test_errors():
    with pytest.raises(ConfigurationError):
        build_root_system("Z9")
    with pytest.raises(ConfigurationError):
        build_root_system("E6")
    with pytest.raises(DomainError):
        act_on_root(build_root_system("A2").s(1), (2, 0))


def test_word_serialization():
    rs = build_root_system("B2")
    assert rs.parse_word("") == rs.identity
    assert rs.parse_word("1,2,1").word_string() == "1,2,1"
    assert Coweight.parse("1,0,-2").serialize() == "1,0,-2"
