import itertools

import pytest
from hypothesis import given, strategies as st

from semigroup_forge import pperm as pp
from semigroup_forge.pperm import PartialPerm

from conftest import as_dict, compose_oracle, partial_perms


def P(graph, n=3):
    return PartialPerm(n, graph)


def all_pperms(n):
    pts = range(1, n + 1)
    for k in range(n + 1):
        for A in itertools.combinations(pts, k):
            for B in itertools.permutations(pts, k):
                yield PartialPerm(n, zip(A, B))


def test_identity_and_empty():
    assert as_dict(pp.identity(3)) == {1: 1, 2: 2, 3: 3}
    assert as_dict(pp.identity(1)) == {1: 1}
    assert pp.dom(pp.identity(4)) == pp.im(pp.identity(4)) == (1, 2, 3, 4)
    assert pp.empty(3).graph == ()
    assert len(pp.dom(pp.empty(5))) == 0
    with pytest.raises(ValueError):
        pp.identity(0)


def test_invalid_graphs_rejected():
    with pytest.raises(ValueError):
        P({1: 4})
    with pytest.raises(ValueError):
        P([(1, 2), (1, 3)])
    with pytest.raises(ValueError):
        P({1: 2, 2: 2})


def test_empty_absorbs():
    e = pp.empty(3)
    for s in all_pperms(3):
        assert pp.compose(e, s) == e
        assert pp.compose(s, e) == e


@pytest.mark.parametrize("s, t, expected", [
    ({1: 2, 2: 3}, {2: 1, 3: 2}, {1: 1, 2: 2}),
    ({1: 2}, {3: 1}, {}),
])
def test_compose_examples(s, t, expected):
    assert compose_oracle(P(s), P(t)) == expected
    assert as_dict(pp.compose(P(s), P(t))) == expected
    assert as_dict(P(s) * P(t)) == expected


def test_compose_chain_mismatch():
    with pytest.raises(pp.ChainSizeMismatch):
        pp.compose(pp.identity(3), pp.identity(4))


def test_compose_matches_oracle_exhaustively():
    elems = list(all_pperms(3))
    for s in elems:
        assert pp.compose(pp.identity(3), s) == s
        for t in elems:
            assert as_dict(pp.compose(s, t)) == compose_oracle(s, t)


def test_compose_associative_n3():
    elems = list(all_pperms(3))
    for s, t, r in itertools.product(elems, repeat=3):
        assert pp.compose(pp.compose(s, t), r) == pp.compose(s, pp.compose(t, r))


def test_inverse_examples():
    assert as_dict(pp.inverse(P({1: 2}))) == {2: 1}
    assert pp.inverse(pp.identity(3)) == pp.identity(3)
    s = P({1: 3, 2: 1})
    assert as_dict(pp.compose(s, pp.inverse(s))) == {1: 1, 2: 2}


def test_apply():
    assert pp.apply(P({1: 2}), 1) == 2
    assert pp.apply(P({1: 2}), 2) is None
    assert pp.apply(pp.identity(5), 4) == 4
    assert P({1: 2})(1) == 2
    with pytest.raises(ValueError):
        pp.apply(P({1: 2}), 4)


def test_dom_im():
    s = P({2: 1, 3: 2})
    assert pp.dom(s) == (2, 3) and pp.im(s) == (1, 2)
    assert pp.dom(pp.empty(3)) == ()
    assert pp.im(P({1: 3, 2: 1})) == (1, 3)


def test_order_iso():
    assert as_dict(pp.order_iso({1, 3}, {1, 2}, 3)) == {1: 1, 3: 2}
    assert pp.order_iso(set(), set(), 3) == pp.empty(3)
    assert as_dict(pp.order_iso({2, 3}, {1, 3}, 3)) == {2: 1, 3: 3}
    with pytest.raises(pp.SizeMismatch):
        pp.order_iso({1}, {1, 2}, 3)


def test_reversal():
    assert as_dict(pp.reversal(3)) == {1: 3, 2: 2, 3: 1}
    assert pp.reversal(1) == pp.identity(1)
    for n in range(1, 7):
        assert pp.compose(pp.reversal(n), pp.reversal(n)) == pp.identity(n)


def test_predicates():
    s = P({1: 2, 3: 3})
    assert pp.is_order_preserving(s) and not pp.is_order_reversing(s)
    assert pp.is_isometry(P({1: 1, 3: 3}))
    assert not pp.is_isometry(P({1: 1, 3: 2}))
    assert pp.is_extensive(P({1: 2, 2: 3}))
    assert pp.is_coextensive(P({2: 1, 3: 2}))
    e = pp.empty(3)
    assert pp.is_order_reversing(e) and pp.is_order_preserving(e)
    assert pp.is_isometry(e) and pp.is_partial_identity(e)
    assert pp.is_partial_identity(P({1: 1, 3: 3})) and not pp.is_partial_identity(s)


def test_canonical_order():
    elems = sorted(all_pperms(3))
    assert elems[0] == pp.empty(3)
    ranks = [e.rank for e in elems]
    assert ranks == sorted(ranks)
    assert P({1: 2}) < P({1: 3}) < P({2: 1})


@pytest.mark.parametrize("text, graph", [
    ("[1 3 / 2 1]", {1: 2, 3: 1}),
    ("∅", {}),
    ("[1 2 3 / 3 2 1]", {1: 3, 2: 2, 3: 1}),
])
def test_render_parse(text, graph):
    s = P(graph)
    assert pp.render(s) == text
    assert pp.parse(text, 3) == s


@pytest.mark.parametrize("bad", ["[1 2 / 3]", "1 -> 2", "[1 / 5]", "[1 1 / 2 3]"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        pp.parse(bad, 3)


@given(partial_perms())
def test_render_roundtrip(s):
    assert pp.parse(pp.render(s), s.n) == s


@given(partial_perms())
def test_inverse_gives_partial_identities(s):
    left = pp.compose(s, pp.inverse(s))
    right = pp.compose(pp.inverse(s), s)
    assert as_dict(left) == {i: i for i in pp.dom(s)}
    assert as_dict(right) == {j: j for j in pp.im(s)}


@given(partial_perms())
def test_odp_characterisation(s):
    g = s.graph
    shifts = all(a - b == i - j for (i, a), (j, b) in itertools.combinations(g, 2))
    assert (pp.is_isometry(s) and pp.is_order_preserving(s)) == shifts


@given(partial_perms())
def test_order_iso_recovers_order_preserving(s):
    if pp.is_order_preserving(s):
        assert pp.order_iso(pp.dom(s), pp.im(s), s.n) == s


@given(partial_perms())
def test_reversal_swaps_monotonicity(s):
    h = pp.reversal(s.n)
    assert pp.is_order_preserving(s) == pp.is_order_reversing(pp.compose(h, s))
    assert pp.is_order_preserving(s) == pp.is_order_reversing(pp.compose(s, h))


@given(partial_perms(), partial_perms())
def test_hash_eq_consistent(s, t):
    if s == t:
        assert hash(s) == hash(t)
    assert (s == t) == (not (s < t) and not (t < s))


def test_immutable():
    s = pp.identity(3)
    with pytest.raises(AttributeError):
        s.n = 4
