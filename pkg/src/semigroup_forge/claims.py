"""The full battery of structural laws for one chain size, as a list of reports."""
from __future__ import annotations

from math import comb

from . import pperm as pp
from .bilateral import InvalidAction, build_bilateral, check_axioms, mutate_action
from .constructions import (
    Construction, action_pair, embedding_map, factorization_law, family_monoid,
    image_domain_law, inverse_in_semidirect, conj_left, mu_map, poi_right,
    product_monoid, restriction_check, section_law,
)
from .families import Family, enumerate_brute_force, enumerate_family
from .monoid_core import (
    idempotents, idempotents_commute, inverse_table, is_aperiodic, is_inverse,
    is_j_trivial, is_regular_element, is_surjective, is_injective,
    separates_idempotents, verify_hom,
)
from .reports import DEFAULT_SAMPLES, VerificationReport


def default_mode(n: int) -> str:
    return "exhaustive" if n <= 4 else "sampled"


def mutation_site(n: int):
    """Arguments (u, s) and replacement value used to corrupt ``poi_right``.

    The first pair (canonical order) of non-identity arguments with ``us``
    non-empty; its output is replaced by the empty map.
    """
    one = pp.identity(n)
    S, T = family_monoid(Family.POI_MINUS, n), family_monoid(Family.POI_PLUS, n)
    for u in T.elements:
        for s in S.elements:
            if u != one and s != one and pp.compose(u, s).rank:
                return (u, s), pp.empty(n)
    raise ValueError("no mutation site")


def corrupted_poi_right(n: int):
    at, value = mutation_site(n)
    return mutate_action(poi_right, at, value)


def _family_laws(n):
    out = []
    for f in (Family.I, Family.POI, Family.PODI, Family.ODP, Family.DP,
              Family.POI_MINUS, Family.POI_PLUS, Family.ODP_MINUS, Family.ODP_PLUS):
        fast, slow = enumerate_family(f, n), enumerate_brute_force(f, n)
        law = f"families.{f.value}.enumeration-agrees"
        if fast == slow:
            out.append(VerificationReport.passed(law, len(slow), note=f"|{f.value}| = {len(slow)}"))
        else:
            diff = sorted(set(fast) ^ set(slow))
            out.append(VerificationReport.failed(law, (diff[0],), len(slow)))
    poi = len(enumerate_family(Family.POI, n))
    law = "families.poi.central-binomial"
    if poi == comb(2 * n, n):
        out.append(VerificationReport.passed(law, 1, note=f"{poi} = C({2 * n},{n})"))
    else:
        out.append(VerificationReport.failed(law, (poi,), 1, note=f"expected {comb(2 * n, n)}"))
    odp = set(enumerate_family(Family.ODP, n))
    dp, poiset = set(enumerate_family(Family.DP, n)), set(enumerate_family(Family.POI, n))
    podi = set(enumerate_family(Family.PODI, n))
    out.append(_set_law("families.odp-equals-dp-cap-poi", odp, dp & poiset))
    out.append(_subset_law("families.dp-subset-podi", dp, podi))
    for f in (Family.POI, Family.PODI, Family.ODP, Family.DP):
        out.append(is_inverse(family_monoid(f, n)).renamed(f"families.{f.value}.inverse"))
    for f in (Family.POI_MINUS, Family.POI_PLUS, Family.ODP_MINUS, Family.ODP_PLUS):
        out.append(is_j_trivial(family_monoid(f, n)).renamed(f"families.{f.value}.j-trivial"))
    return out


def _set_law(law, a, b):
    if a == b:
        return VerificationReport.passed(law, len(a | b))
    return VerificationReport.failed(law, (sorted(a ^ b)[0],), len(a | b))


def _subset_law(law, a, b):
    extra = sorted(a - b)
    if not extra:
        return VerificationReport.passed(law, len(a))
    return VerificationReport.failed(law, (extra[0],), len(a))


def _bilateral_laws(c, n, kw, right=None):
    a = action_pair(c, n, right=right)
    out = check_axioms(a, **kw)
    out.append(factorization_law(a, mode=kw["mode"], seed=kw["seed"]))
    out.append(image_domain_law(a))
    try:
        M = build_bilateral(a, name=f"{c.value}_{n}", **kw) if right else product_monoid(c, n, **kw)
    except InvalidAction as exc:
        out.append(exc.report.renamed(f"{c.value}.product"))
        return out
    m = mu_map(c, n, source=M)
    out += [verify_hom(m, **kw), is_surjective(m), section_law(c, n)]
    out.append(is_aperiodic(M).renamed(f"{c.value}.aperiodic"))
    out += _non_inverse_witnesses(c, n, M)
    return out


def _non_inverse_witnesses(c, n, M):
    """(e, ∅) is not regular; (1, e) and (f, f) are idempotents that do not commute."""
    one, nil = pp.identity(n), pp.empty(n)
    e, f = pp.PartialPerm(n, {1: 1}), pp.PartialPerm(n, {1: 1, 2: 2})
    out = []
    law = f"{c.value}.nonregular-witness"
    x = M.index((e, nil))
    if is_regular_element(M, x):
        out.append(VerificationReport.failed(law, ((e, nil),), len(M), note="element is regular"))
    else:
        out.append(VerificationReport.passed(law, len(M), note="(e, ∅) has no y with xyx = x"))

    law = f"{c.value}.noncommuting-idempotents-witness"
    p, q = (one, e), (f, f)
    pq, qp = M.multiply(p, q), M.multiply(q, p)
    if M.multiply(p, p) != p or M.multiply(q, q) != q:
        out.append(VerificationReport.failed(law, (p, q), 2, note="not both idempotent"))
    elif pq != (e, e) or qp != (f, e) or pq == qp:
        out.append(VerificationReport.failed(law, (pq, qp), 4, note="products differ from (e,e) vs (f,e)"))
    else:
        out.append(VerificationReport.passed(law, 4, note="(1,e)(f,f) = (e,e) != (f,e) = (f,f)(1,e)"))
    return out


def _podi_laws(n, kw):
    c = Construction.PODI_SEMIDIRECT
    out = check_axioms(action_pair(c, n), **kw)
    M = product_monoid(c, n, **kw)
    out.append(is_inverse(M).renamed(f"{c.value}.inverse"))

    law = f"{c.value}.idempotent-shape"
    one = pp.identity(n)
    E = {M.elements[i] for i in idempotents(M)}
    P = family_monoid(Family.POI, n)
    expected = {(P.elements[i], one) for i in idempotents(P)}
    out.append(_set_law(law, E, expected))

    law = f"{c.value}.inverse-formula"
    inv = inverse_table(M)
    bad = [x for x in range(len(M)) if M.elements[inv[x]] != inverse_in_semidirect(M.elements[x])]
    if bad:
        out.append(VerificationReport.failed(law, (M.elements[bad[0]],), len(M)))
    else:
        out.append(VerificationReport.passed(law, len(M)))

    m = mu_map(c, n)
    out += [verify_hom(m, **kw), is_surjective(m), separates_idempotents(m), section_law(c, n)]
    emb = embedding_map(n)
    out += [verify_hom(emb, **kw), is_injective(emb)]
    return out


def _dp_laws(n, kw):
    c = Construction.DP_SEMIDIRECT
    out = check_axioms(action_pair(c, n), **kw)
    out.append(restriction_check(
        family_monoid(Family.POI, n), family_monoid(Family.C2, n),
        family_monoid(Family.ODP, n), family_monoid(Family.C2, n),
        conj_left, family_monoid(Family.DP, n),
    ).renamed(f"{c.value}.restriction"))
    m = mu_map(c, n)
    out += [verify_hom(m, **kw), is_surjective(m), section_law(c, n)]
    return out


def run_claims(n: int, mode: str | None = None, samples: int = DEFAULT_SAMPLES, seed: int = 0,
               mutate: bool = False) -> list[VerificationReport]:
    """Every law for chain size ``n``, sorted by law name.

    ``mutate`` corrupts one output of ``poi_right`` (a self-test: some
    poi-bilateral laws must then fail).
    """
    kw = dict(mode=mode or default_mode(n), samples=samples, seed=seed)
    reports = _family_laws(n)
    right = corrupted_poi_right(n) if mutate else None
    reports += _bilateral_laws(Construction.POI_BILATERAL, n, kw, right=right)
    reports += _bilateral_laws(Construction.ODP_BILATERAL, n, kw)
    reports += _podi_laws(n, kw)
    reports += _dp_laws(n, kw)
    return sorted(reports, key=lambda r: r.law)
