"""The named monoids of partial permutations, realised extensionally."""
from __future__ import annotations

from enum import Enum
from functools import lru_cache
from itertools import combinations, permutations, product

from . import pperm as pp
from .monoid_core import ClosureViolation, _pperm_table
from .pperm import PartialPerm


class Family(str, Enum):
    I = "i"
    POI = "poi"
    PODI = "podi"
    ODP = "odp"
    DP = "dp"
    POI_MINUS = "poi-minus"
    POI_PLUS = "poi-plus"
    ODP_MINUS = "odp-minus"
    ODP_PLUS = "odp-plus"
    C2 = "c2"

    def __str__(self):
        return self.value


def _is_odp(s):
    return pp.is_isometry(s) and pp.is_order_preserving(s)


_PREDICATES = {
    Family.I: lambda s: True,
    Family.POI: pp.is_order_preserving,
    Family.PODI: pp.is_monotone,
    Family.ODP: _is_odp,
    Family.DP: pp.is_isometry,
    Family.POI_MINUS: lambda s: pp.is_order_preserving(s) and pp.is_coextensive(s),
    Family.POI_PLUS: lambda s: pp.is_order_preserving(s) and pp.is_extensive(s),
    Family.ODP_MINUS: lambda s: _is_odp(s) and pp.is_coextensive(s),
    Family.ODP_PLUS: lambda s: _is_odp(s) and pp.is_extensive(s),
    Family.C2: lambda s: s == pp.identity(s.n) or s == pp.reversal(s.n),
}

# families whose members are all order-preserving, hence fixed by (Dom, Im)
_ORDER_PRESERVING = {
    Family.POI, Family.ODP, Family.POI_MINUS, Family.POI_PLUS, Family.ODP_MINUS, Family.ODP_PLUS,
}


def family(tag) -> Family:
    """Look up a family by tag (``"poi"``, ``"odp-minus"``, ...) or pass one through."""
    if isinstance(tag, Family):
        return tag
    try:
        return Family(str(tag).lower().replace("_", "-"))
    except ValueError:
        known = ", ".join(f.value for f in Family)
        raise ValueError(f"unknown family {tag!r}; expected one of {known}") from None


def member(f, s: PartialPerm) -> bool:
    return _PREDICATES[family(f)](s)


def _subset_pairs(n):
    for k in range(n + 1):
        subsets = list(combinations(range(1, n + 1), k))
        for A in subsets:
            for B in subsets:
                yield A, B


@lru_cache(maxsize=None)
def enumerate_family(f, n: int, check: bool = True) -> tuple[PartialPerm, ...]:
    """All members of family ``f`` on ``X_n``, in canonical order.

    Order-preserving families are generated from (Dom, Im) pairs; monotone
    ones add the order-reversing bijections; ``I`` assigns injective images
    to every domain subset.  With ``check`` the result is verified to be a
    submonoid of ``I_n``.
    """
    f = family(f)
    if n < 1:
        raise ValueError(f"chain size must be >= 1, got {n}")
    pred = _PREDICATES[f]
    if f is Family.C2:
        found = {pp.identity(n), pp.reversal(n)}
    elif f is Family.I:
        found = set()
        pts = range(1, n + 1)
        for k in range(n + 1):
            for A in combinations(pts, k):
                for B in permutations(pts, k):
                    found.add(PartialPerm(n, zip(A, B)))
    elif f in _ORDER_PRESERVING:
        found = {s for A, B in _subset_pairs(n) if pred(s := pp.order_iso(A, B, n))}
    else:
        found = set()
        for A, B in _subset_pairs(n):
            for s in (pp.order_iso(A, B, n), pp.order_anti_iso(A, B, n)):
                if pred(s):
                    found.add(s)
    elements = tuple(sorted(found))
    if check:
        _check_submonoid(f, elements, n)
    return elements


def _check_submonoid(f, elements, n):
    if pp.identity(n) not in set(elements):
        raise AssertionError(f"{f} on X_{n} is missing the identity")
    try:
        _pperm_table(elements, store=False)
    except ClosureViolation as exc:
        raise AssertionError(f"{f} on X_{n} not closed: {exc}") from None


def enumerate_brute_force(f, n: int) -> tuple[PartialPerm, ...]:
    """Slow oracle: filter every partial map of ``X_n`` by the family predicate."""
    f = family(f)
    pred = _PREDICATES[f]
    out = []
    for images in product(range(n + 1), repeat=n):
        used = [j for j in images if j]
        if len(used) != len(set(used)):
            continue
        s = PartialPerm.from_images(images)
        if pred(s):
            out.append(s)
    return tuple(sorted(out))
