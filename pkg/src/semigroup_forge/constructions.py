"""Concrete actions on monoids of partial permutations and their quotient maps.

Four constructions are provided:

* ``poi-bilateral``:   POI⁻ ⋈ POI⁺ → POI,  (s, u) ↦ su
* ``odp-bilateral``:   ODP⁻ ⋈ ODP⁺ → ODP,  (s, u) ↦ su
* ``podi-semidirect``: POI ⋊ C2 → PODI,    (s, x) ↦ sx
* ``dp-semidirect``:   ODP ⋊ C2 → DP,      (s, x) ↦ sx
"""
from __future__ import annotations

from enum import Enum
from functools import lru_cache
from typing import Callable, Iterable

import numpy as np

from . import pperm as pp
from .bilateral import ActionPair, build_bilateral, trivial_right
from .families import Family, enumerate_family, member
from .monoid_core import FiniteMonoid, MonoidMap, build, direct_product
from .pperm import PartialPerm
from .reports import VerificationReport, sweep


class Construction(str, Enum):
    POI_BILATERAL = "poi-bilateral"
    ODP_BILATERAL = "odp-bilateral"
    PODI_SEMIDIRECT = "podi-semidirect"
    DP_SEMIDIRECT = "dp-semidirect"

    def __str__(self):
        return self.value


def construction(tag) -> Construction:
    if isinstance(tag, Construction):
        return tag
    try:
        return Construction(str(tag).lower().replace("_", "-"))
    except ValueError:
        known = ", ".join(c.value for c in Construction)
        raise ValueError(f"unknown construction {tag!r}; expected one of {known}") from None


# (S family, T family, target family)
_FAMILIES = {
    Construction.POI_BILATERAL: (Family.POI_MINUS, Family.POI_PLUS, Family.POI),
    Construction.ODP_BILATERAL: (Family.ODP_MINUS, Family.ODP_PLUS, Family.ODP),
    Construction.PODI_SEMIDIRECT: (Family.POI, Family.C2, Family.PODI),
    Construction.DP_SEMIDIRECT: (Family.ODP, Family.C2, Family.DP),
}


def _require(f, s, what):
    if not member(f, s):
        raise ValueError(f"{what} = {s} is not in {f.value.upper()}_{s.n}")


def _is_one(s):
    return s == pp.identity(s.n)


# ----------------------------------------------------------------------------
# POI actions

def poi_left(u: PartialPerm, s: PartialPerm) -> PartialPerm:
    """u◁s for u in POI⁺, s in POI⁻: domain Dom(us), image {1..|Dom(us)|}."""
    _require(Family.POI_PLUS, u, "u")
    _require(Family.POI_MINUS, s, "s")
    if _is_one(u):
        return s
    if _is_one(s):
        return s
    us = pp.compose(u, s)
    d = pp.dom(us)
    return pp.order_iso(d, range(1, len(d) + 1), u.n)


def poi_right(u: PartialPerm, s: PartialPerm) -> PartialPerm:
    """u^s for u in POI⁺, s in POI⁻: domain {1..|Im(us)|}, image Im(us)."""
    _require(Family.POI_PLUS, u, "u")
    _require(Family.POI_MINUS, s, "s")
    if _is_one(s):
        return u
    if _is_one(u):
        return u
    us = pp.compose(u, s)
    i = pp.im(us)
    return pp.order_iso(range(1, len(i) + 1), i, u.n)


# ----------------------------------------------------------------------------
# ODP actions: images keep the gaps of Dom(us)

def _offsets(points):
    return [1 + p - points[0] for p in points]


def odp_left(u: PartialPerm, s: PartialPerm) -> PartialPerm:
    """u◁s for u in ODP⁺, s in ODP⁻: domain Dom(us) shifted down to start at 1."""
    _require(Family.ODP_PLUS, u, "u")
    _require(Family.ODP_MINUS, s, "s")
    if _is_one(u) or _is_one(s):
        return s
    d = pp.dom(pp.compose(u, s))
    if not d:
        return pp.empty(u.n)
    return pp.order_iso(d, _offsets(d), u.n)


def odp_right(u: PartialPerm, s: PartialPerm) -> PartialPerm:
    """u^s for u in ODP⁺, s in ODP⁻: image Im(us), domain Im(us) shifted to start at 1."""
    _require(Family.ODP_PLUS, u, "u")
    _require(Family.ODP_MINUS, s, "s")
    if _is_one(u) or _is_one(s):
        return u
    us = pp.compose(u, s)
    d = pp.dom(us)
    if not d:
        return pp.empty(u.n)
    # Dom(u^s) = {1 + i_j us - i_1 us}, indexed by the domain points of us
    imgs = [us.images[i - 1] for i in d]
    return pp.order_iso(_offsets(imgs), imgs, u.n)


# ----------------------------------------------------------------------------
# conjugation by the reversal

def conj_left(x: PartialPerm, s: PartialPerm) -> PartialPerm:
    """x◁s = xsx for x in C2 = {1, h}."""
    if not member(Family.C2, x):
        raise ValueError(f"x = {x} is not in C2")
    return pp.compose(pp.compose(x, s), x)


_LEFT = {
    Construction.POI_BILATERAL: poi_left,
    Construction.ODP_BILATERAL: odp_left,
    Construction.PODI_SEMIDIRECT: conj_left,
    Construction.DP_SEMIDIRECT: conj_left,
}
_RIGHT = {
    Construction.POI_BILATERAL: poi_right,
    Construction.ODP_BILATERAL: odp_right,
    Construction.PODI_SEMIDIRECT: trivial_right,
    Construction.DP_SEMIDIRECT: trivial_right,
}


def actions(c) -> tuple[Callable, Callable]:
    c = construction(c)
    return _LEFT[c], _RIGHT[c]


@lru_cache(maxsize=None)
def family_monoid(f, n: int) -> FiniteMonoid:
    f = Family(f)
    return build(enumerate_family(f, n), name=f"{f.value.upper()}_{n}")


def factor_monoids(c, n: int) -> tuple[FiniteMonoid, FiniteMonoid]:
    fs, ft, _ = _FAMILIES[construction(c)]
    return family_monoid(fs, n), family_monoid(ft, n)


def target_family(c) -> Family:
    return _FAMILIES[construction(c)][2]


def target_monoid(c, n: int) -> FiniteMonoid:
    return family_monoid(target_family(c), n)


def action_pair(c, n: int, left: Callable | None = None, right: Callable | None = None) -> ActionPair:
    """The construction's action pair at chain size ``n``; ``left``/``right`` override for mutation tests."""
    c = construction(c)
    S, T = factor_monoids(c, n)
    dl, dr = actions(c)
    return ActionPair(S, T, left or dl, right or dr, name=c.value)


def product_monoid(c, n: int, check: bool = True, **kw) -> FiniteMonoid:
    c = construction(c)
    return _product_monoid(c, n, check, tuple(sorted(kw.items())))


@lru_cache(maxsize=None)
def _product_monoid(c, n, check, kw):
    return build_bilateral(action_pair(c, n), check=check, name=f"{c.value}_{n}", **dict(kw))


# ----------------------------------------------------------------------------
# quotient maps and their sections

def mu(c, pair) -> PartialPerm:
    """The quotient map: (s, u) ↦ su."""
    s, u = pair
    return pp.compose(s, u)


def mu_map(c, n: int, source: FiniteMonoid | None = None) -> MonoidMap:
    c = construction(c)
    source = source if source is not None else product_monoid(c, n)
    return MonoidMap.from_function(source, target_monoid(c, n), lambda p: mu(c, p), name=f"{c.value}.mu")


def decompose(c, t: PartialPerm) -> tuple[PartialPerm, PartialPerm]:
    """A preimage of ``t`` under ``mu``, built by the factorisation recipe of each construction."""
    c = construction(c)
    n = t.n
    _require(target_family(c), t, "t")
    d, i = pp.dom(t), pp.im(t)
    if c is Construction.POI_BILATERAL:
        mid = range(1, len(d) + 1)
        return pp.order_iso(d, mid, n), pp.order_iso(mid, i, n)
    if c is Construction.ODP_BILATERAL:
        mid = _offsets(d) if d else []
        return pp.order_iso(d, mid, n), pp.order_iso(mid, i, n)
    base = Family.POI if c is Construction.PODI_SEMIDIRECT else Family.ODP
    if member(base, t):
        return t, pp.identity(n)
    h = pp.reversal(n)
    return pp.compose(t, h), h


def embed_podi(pair) -> tuple[PartialPerm, PartialPerm]:
    """(s, x) ↦ (sx, x), from POI ⋊ C2 into PODI × C2."""
    s, x = pair
    return pp.compose(s, x), x


def inverse_in_semidirect(pair) -> tuple[PartialPerm, PartialPerm]:
    """The inverse (x s⁻¹ x, x) of (s, x) in POI ⋊ C2."""
    s, x = pair
    return conj_left(x, pp.inverse(s)), x


def embedding_map(n: int) -> MonoidMap:
    src = product_monoid(Construction.PODI_SEMIDIRECT, n)
    tgt = direct_product(family_monoid(Family.PODI, n), family_monoid(Family.C2, n),
                         name=f"PODI_{n} x C2")
    return MonoidMap.from_function(src, tgt, embed_podi, name="podi-semidirect.embedding")


def _elements(X):
    return list(X.elements) if isinstance(X, FiniteMonoid) else list(X)


def restriction_check(S1, S2, T1, T2, left: Callable, target: Iterable) -> VerificationReport:
    """Whether ``left`` restricts to an action of T2 on T1 and T1·T2 equals ``target``.

    Arguments are FiniteMonoids or plain element collections.
    """
    S1, S2, T1, T2 = (_elements(X) for X in (S1, S2, T1, T2))
    target = set(_elements(target))
    if not set(T1) <= set(S1) or not set(T2) <= set(S2):
        raise ValueError("T1 and T2 must be subsets of S1 and S2")
    law = "restriction"
    T1set = set(T1)
    checked = 0
    for u in T2:
        for s in T1:
            checked += 1
            if left(u, s) not in T1set:
                return VerificationReport.failed(law, (s, u), checked, note="action leaves T1")
    products = {pp.compose(s, u) for s in T1 for u in T2}
    checked += len(T1) * len(T2)
    extra = sorted(products - target)
    if extra:
        return VerificationReport.failed(law, (extra[0],), checked, note="T1·T2 has an element outside the target")
    missing = sorted(target - products)
    if missing:
        return VerificationReport.failed(law, (missing[0],), checked, note="target element not in T1·T2")
    return VerificationReport.passed(law, checked)


# ----------------------------------------------------------------------------
# laws specific to the bilateral constructions

def factorization_law(a: ActionPair, mode=None, seed: int = 0) -> VerificationReport:
    """(u◁s) u^s = us for all u in T, s in S."""
    S, T = a.S, a.T
    ok = np.empty((len(T), len(S)), dtype=bool)
    for iu, u in enumerate(T.elements):
        for js, s in enumerate(S.elements):
            lhs = pp.compose(S.elements[a.act_left(iu, js)], T.elements[a.act_right(iu, js)])
            ok[iu, js] = lhs == pp.compose(u, s)
    return sweep(f"{a.name}.factorization", ok.shape, lambda u, s: ok[u, s],
                 lambda t: (T.elements[t[0]], S.elements[t[1]]), mode=mode, seed=seed)


def image_domain_law(a: ActionPair) -> VerificationReport:
    """Im(u◁s) = Dom(u^s) for all non-identity u in T, s in S.

    Identity arguments are excluded: there the overrides apply and, e.g.,
    u◁1 = 1 while ∅^1 = ∅.
    """
    S, T = a.S, a.T
    ok = np.ones((len(T), len(S)), dtype=bool)
    for iu in range(len(T)):
        for js in range(len(S)):
            if iu == T.identity or js == S.identity:
                continue
            ok[iu, js] = pp.im(S.elements[a.act_left(iu, js)]) == pp.dom(T.elements[a.act_right(iu, js)])
    return sweep(f"{a.name}.image-equals-domain", ok.shape, lambda u, s: ok[u, s],
                 lambda t: (T.elements[t[0]], S.elements[t[1]]), mode="exhaustive")


def section_law(c, n: int) -> VerificationReport:
    """mu(decompose(t)) = t, with both factors in the right families, for every target t."""
    c = construction(c)
    fs, ft, _ = _FAMILIES[c]
    law = f"{c.value}.mu-decompose"
    targets = target_monoid(c, n).elements
    for k, t in enumerate(targets, 1):
        s, u = decompose(c, t)
        if mu(c, (s, u)) != t or not member(fs, s) or not member(ft, u):
            return VerificationReport.failed(law, (t,), k)
    return VerificationReport.passed(law, len(targets))


def override_disagreements(c, n: int) -> VerificationReport:
    """Informational: identity-argument inputs where the generic formula differs from the override.

    Always ``holds``; the note counts disagreements and the witness lists them.
    """
    c = construction(c)
    if c not in (Construction.POI_BILATERAL, Construction.ODP_BILATERAL):
        raise ValueError("only the bilateral constructions have identity overrides")
    S, T = factor_monoids(c, n)
    left, right = actions(c)
    one = pp.identity(n)
    odp = c is Construction.ODP_BILATERAL

    def generic_left(u, s):
        d = pp.dom(pp.compose(u, s))
        mid = _offsets(d) if (odp and d) else range(1, len(d) + 1)
        return pp.order_iso(d, mid, n)

    def generic_right(u, s):
        us = pp.compose(u, s)
        d = pp.dom(us)
        imgs = [us.images[i - 1] for i in d]
        mid = _offsets(imgs) if (odp and imgs) else range(1, len(imgs) + 1)
        return pp.order_iso(mid, sorted(imgs), n)

    cases = [(one, s) for s in S.elements] + [(u, one) for u in T.elements if u != one]
    diffs = []
    for u, s in cases:
        if generic_left(u, s) != left(u, s):
            diffs.append(("left", u, s))
        if generic_right(u, s) != right(u, s):
            diffs.append(("right", u, s))
    rep = VerificationReport.passed(f"{c.value}.override-disagreements", 2 * len(cases),
                                    note=f"{len(diffs)} of {2 * len(cases)} identity-argument "
                                         f"evaluations differ from the generic formula")
    rep.witness = tuple(diffs)
    return rep
