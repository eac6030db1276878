import itertools
import json

import numpy as np
import pytest

from semigroup_forge import monoid_core as mc
from semigroup_forge import pperm as pp
from semigroup_forge.constructions import family_monoid
from semigroup_forge.families import Family, enumerate_family
from semigroup_forge.pperm import PartialPerm


@pytest.fixture(scope="module")
def poi3():
    return family_monoid(Family.POI, 3)


@pytest.fixture(scope="module")
def c2():
    return family_monoid(Family.C2, 3)


def ideal_oracle(M):
    """Principal right, left and two-sided ideals as frozensets, by brute force."""
    els = range(len(M))
    right = [frozenset(M.mul(x, m) for m in els) for x in els]
    left = [frozenset(M.mul(m, x) for m in els) for x in els]
    two = [frozenset(M.mul(M.mul(a, x), b) for a in els for b in els) for x in els]
    return right, left, two


def small_monoids():
    yield family_monoid(Family.POI, 3)
    yield family_monoid(Family.C2, 3)
    yield family_monoid(Family.POI_MINUS, 3)
    yield family_monoid(Family.ODP, 3)
    yield family_monoid(Family.PODI, 3)
    yield family_monoid(Family.DP, 3)
    yield family_monoid(Family.I, 3)


def test_build_poi3(poi3):
    assert len(poi3) == 20
    assert poi3.elements[poi3.identity] == pp.identity(3)
    assert poi3.table.shape == (20, 20)


def test_build_c2(c2):
    assert len(c2) == 2
    one, h = c2.index(pp.identity(3)), c2.index(pp.reversal(3))
    assert c2.mul(h, h) == one and c2.mul(one, h) == h == c2.mul(h, one)


def test_closure_violation():
    with pytest.raises(mc.ClosureViolation) as info:
        mc.build([pp.identity(3), PartialPerm(3, {1: 2})])
    assert info.value.pair == (PartialPerm(3, {1: 2}), PartialPerm(3, {1: 2}))


def test_generic_mult_path():
    M = mc.build([0, 1, 2, 3], mult=lambda a, b: (a * b) % 4)
    assert M.elements[M.identity] == 1
    assert sorted(M.elements[i] for i in mc.idempotents(M)) == [0, 1]


def test_not_a_monoid():
    with pytest.raises(mc.NotAMonoid):
        mc.build([0, 1], mult=lambda a, b: 0)
    # a non-associative magma with identity 0: a*b = a - b mod 3 would lack identity,
    # use the Cayley table of a loop that is not a group instead
    table = [[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3], [3, 2, 4, 0, 1], [4, 3, 1, 2, 0]]
    with pytest.raises(mc.NotAMonoid):
        mc.build(range(5), mult=lambda a, b: table[a][b])


def test_call_based_mode_matches_table(monkeypatch, poi3):
    monkeypatch.setattr(mc, "TABLE_LIMIT", 5)
    M = mc.build(enumerate_family(Family.POI, 3))
    assert M.table is None
    a, b = np.divmod(np.arange(400), 20)
    assert np.array_equal(M.mul_many(a, b), poi3.table[a, b])
    G1, G2 = mc.green(M), mc.green(poi3)
    for rel in "RLHDJ":
        assert np.array_equal(getattr(G1, rel), getattr(G2, rel))


def test_idempotents(poi3, c2):
    E = [poi3.elements[i] for i in mc.idempotents(poi3)]
    assert len(E) == 8
    assert all(pp.is_partial_identity(e) for e in E)
    assert [c2.elements[i] for i in mc.idempotents(c2)] == [pp.identity(3)]


def test_green_examples(poi3, c2):
    G = mc.green(poi3)
    a, b = poi3.index(PartialPerm(3, {1: 2})), poi3.index(PartialPerm(3, {1: 3}))
    assert G.related("R", a, b)
    assert not G.related("L", a, b)
    assert all(len(c) == 1 for c in G.classes("H"))
    assert mc.green(c2).classes("H") == [[0, 1]]


def test_green_r_is_same_domain_in_poi3(poi3):
    G = mc.green(poi3)
    for x, y in itertools.product(range(20), repeat=2):
        same_dom = pp.dom(poi3.elements[x]) == pp.dom(poi3.elements[y])
        same_im = pp.im(poi3.elements[x]) == pp.im(poi3.elements[y])
        assert G.related("R", x, y) == same_dom
        assert G.related("L", x, y) == same_im


@pytest.mark.parametrize("M", list(small_monoids()), ids=lambda M: M.name)
def test_green_matches_ideal_oracle(M):
    right, left, two = ideal_oracle(M)
    G = mc.green(M)
    for x, y in itertools.product(range(len(M)), repeat=2):
        assert G.related("R", x, y) == (right[x] == right[y])
        assert G.related("L", x, y) == (left[x] == left[y])
        assert G.related("J", x, y) == (two[x] == two[y])
        assert G.related("H", x, y) == (right[x] == right[y] and left[x] == left[y])


@pytest.mark.parametrize("M", list(small_monoids()), ids=lambda M: M.name)
def test_green_refinements(M):
    G = mc.green(M)
    N = len(M)
    for x, y in itertools.product(range(N), repeat=2):
        if G.related("H", x, y):
            assert G.related("R", x, y) and G.related("L", x, y)
        if G.related("R", x, y) or G.related("L", x, y):
            assert G.related("D", x, y)
        assert G.related("D", x, y) == G.related("J", x, y)
    assert mc.is_aperiodic(M).holds == mc.is_h_trivial(M).holds


def test_aperiodic(poi3, c2):
    assert mc.is_aperiodic(poi3).holds
    rep = mc.is_aperiodic(c2)
    assert not rep.holds and rep.witness == (pp.reversal(3),)


def test_j_trivial(poi3, c2):
    assert mc.is_j_trivial(family_monoid(Family.POI_MINUS, 3)).holds
    assert not mc.is_j_trivial(c2).holds
    rep = mc.is_j_trivial(poi3)
    assert not rep.holds
    x, y = rep.witness
    G = mc.green(poi3)
    assert G.related("J", poi3.index(x), poi3.index(y)) and x != y


@pytest.mark.parametrize("n", [3, 4])
@pytest.mark.parametrize("f", [Family.POI_MINUS, Family.POI_PLUS, Family.ODP_MINUS, Family.ODP_PLUS])
def test_plus_minus_monoids(f, n):
    M = family_monoid(f, n)
    assert mc.is_j_trivial(M).holds
    E = {M.elements[i] for i in mc.idempotents(M)}
    assert E == {s for s in M.elements if pp.is_partial_identity(s)}


@pytest.mark.parametrize("f", [Family.POI, Family.PODI, Family.ODP, Family.DP, Family.I])
def test_family_monoids_are_inverse(f):
    assert mc.is_inverse(family_monoid(f, 3)).holds


def test_regular(poi3):
    assert mc.is_regular(poi3).holds
    for e in mc.idempotents(poi3):
        assert mc.is_regular_element(poi3, e)
    inv = mc.inverse_table(poi3)
    for x in range(20):
        assert poi3.elements[inv[x]] == pp.inverse(poi3.elements[x])


def test_non_inverse_detected():
    M = mc.build([0, 1, 2], mult=lambda a, b: a if a != 0 else b)  # left-zero band with identity 0
    rep = mc.idempotents_commute(M)
    assert not rep.holds
    x, y = rep.witness
    assert M.multiply(x, y) != M.multiply(y, x)
    assert not mc.is_inverse(M).holds
    with pytest.raises(ValueError):
        mc.inverse_table(M)


def test_verify_hom_and_failure_is_recheckable(poi3):
    ident = mc.MonoidMap.from_function(poi3, poi3, lambda s: s, name="id")
    assert mc.verify_hom(ident).holds
    assert mc.is_injective(ident).holds and mc.is_surjective(ident).holds
    inv = mc.MonoidMap.from_function(poi3, poi3, pp.inverse, name="inv")
    rep = mc.verify_hom(inv)
    assert not rep.holds
    x, y = rep.witness
    assert pp.inverse(pp.compose(x, y)) != pp.compose(pp.inverse(x), pp.inverse(y))


def test_map_failures(poi3, c2):
    const = mc.MonoidMap.from_function(poi3, c2, lambda s: pp.identity(3), name="const")
    assert mc.verify_hom(const).holds
    assert not mc.is_surjective(const).holds
    rep = mc.is_injective(const)
    assert not rep.holds and len(rep.witness) == 2
    assert not mc.separates_idempotents(const).holds
    with pytest.raises(ValueError):
        mc.MonoidMap.from_function(poi3, c2, lambda s: s)


def test_hom_identity_failure(poi3):
    m = mc.MonoidMap(poi3, poi3, np.zeros(20, dtype=int), name="zero")
    rep = mc.verify_hom(m)
    assert not rep.holds and rep.note == "identity not preserved"


def test_direct_product(c2):
    podi = family_monoid(Family.PODI, 3)
    P = mc.direct_product(podi, c2)
    assert len(P) == 60
    assert P.elements[P.identity] == (pp.identity(3), pp.identity(3))
    triv = mc.trivial_monoid("e")
    Q = mc.direct_product(podi, triv)
    proj = mc.MonoidMap.from_function(Q, podi, lambda p: p[0], name="proj")
    assert mc.verify_hom(proj).holds and mc.is_injective(proj).holds and mc.is_surjective(proj).holds


def test_report_json():
    rep = mc.is_aperiodic(family_monoid(Family.C2, 3))
    d = json.loads(json.dumps(rep.to_dict()))
    assert d == {"law": "aperiodic", "holds": False, "mode": "exhaustive", "checked": 2,
                 "counterexample": ["[1 2 3 / 3 2 1]"]}
    ok = mc.is_aperiodic(family_monoid(Family.POI, 3)).to_dict()
    assert "counterexample" not in ok


def test_associativity_sampled_records_seed():
    M = family_monoid(Family.POI, 4)
    rep = mc.check_associative(M, mode="sampled", samples=1000, seed=7)
    assert rep.holds and rep.mode == "sampled(7)" and rep.checked == 1000
