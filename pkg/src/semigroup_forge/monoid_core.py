"""Finite monoids on indexed element lists, Green's relations and law checks."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Sequence

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .pperm import PartialPerm, compose
from .reports import DEFAULT_SAMPLES, VerificationReport, render_element, sweep

TABLE_LIMIT = 4096
ASSOC_EXHAUSTIVE_LIMIT = 300


class ClosureViolation(ValueError):
    def __init__(self, x, y, product):
        self.pair = (x, y)
        super().__init__(f"{render_element(x)} * {render_element(y)} = "
                         f"{render_element(product)} is not in the element list")


class NotAMonoid(ValueError):
    pass


class FiniteMonoid:
    """A monoid on ``elements`` with multiplication on indices.

    Small monoids (at most ``TABLE_LIMIT`` elements) carry a full Cayley
    table; larger ones multiply through ``mul_many``, a vectorised function
    of two index arrays.
    """

    def __init__(self, elements: Sequence, identity: int, *, table=None,
                 mul_many: Callable | None = None, name: str = ""):
        self.elements = tuple(elements)
        self.identity = int(identity)
        self.table = table
        self._mul_many = mul_many
        self.name = name
        self._index = None
        self._green = None
        if table is None and mul_many is None:
            raise ValueError("need either a table or a mul_many function")

    def __len__(self):
        return len(self.elements)

    def __repr__(self):
        return f"<FiniteMonoid {self.name or '?'} of order {len(self)}>"

    @property
    def order(self) -> int:
        return len(self.elements)

    def index(self, x) -> int:
        if self._index is None:
            self._index = {e: i for i, e in enumerate(self.elements)}
        return self._index[x]

    def __contains__(self, x):
        try:
            self.index(x)
        except KeyError:
            return False
        return True

    def mul(self, i: int, j: int) -> int:
        if self.table is not None:
            return int(self.table[i, j])
        return int(self._mul_many(np.array([i]), np.array([j]))[0])

    def mul_many(self, a, b) -> np.ndarray:
        if self.table is not None:
            return self.table[a, b]
        a, b = np.broadcast_arrays(np.asarray(a), np.asarray(b))
        return np.asarray(self._mul_many(a.ravel(), b.ravel())).reshape(a.shape)

    def multiply(self, x, y):
        """Multiply element values rather than indices."""
        return self.elements[self.mul(self.index(x), self.index(y))]

    def render(self, i: int) -> str:
        return render_element(self.elements[i])

    @classmethod
    def from_vectorized(cls, elements, mul_many, identity=None, name="", check=True, seed=0):
        """Build from a vectorised index multiplication, materialising the table when small."""
        N = len(elements)
        table = None
        if N <= TABLE_LIMIT:
            a, b = np.divmod(np.arange(N * N, dtype=np.int64), N)
            table = np.asarray(mul_many(a, b), dtype=np.int32).reshape(N, N)
            if table.min() < 0 or table.max() >= N:
                raise NotAMonoid(f"{name}: products fall outside the element list")
            M = cls(elements, 0 if identity is None else identity, table=table, name=name)
        else:
            M = cls(elements, 0 if identity is None else identity, mul_many=mul_many, name=name)
        if identity is None:
            M.identity = _find_identity(M)
        elif check:
            _assert_identity(M, M.identity)
        if check:
            _assert_associative(M, seed)
        return M


def _find_identity(M):
    N = len(M)
    ar = np.arange(N)
    if M.table is not None:
        rows = np.all(M.table == ar[None, :], axis=1)
        cols = np.all(M.table == ar[:, None], axis=0)
        hits = np.flatnonzero(rows & cols)
        if hits.size:
            return int(hits[0])
    else:
        for e in range(N):
            if np.array_equal(M.mul_many(e, ar), ar) and np.array_equal(M.mul_many(ar, e), ar):
                return e
    raise NotAMonoid(f"{M.name or 'monoid'}: no two-sided identity")


def _assert_identity(M, e):
    ar = np.arange(len(M))
    if not (np.array_equal(M.mul_many(e, ar), ar) and np.array_equal(M.mul_many(ar, e), ar)):
        raise NotAMonoid(f"{M.name or 'monoid'}: element {M.render(e)} is not an identity")


def _assert_associative(M, seed=0):
    rep = check_associative(M, seed=seed)
    if not rep.holds:
        raise NotAMonoid(f"{M.name or 'monoid'}: not associative at {rep.counterexample}")


def check_associative(M: FiniteMonoid, mode=None, samples=DEFAULT_SAMPLES, seed=0) -> VerificationReport:
    N = len(M)
    if mode is None:
        mode = "exhaustive" if N <= ASSOC_EXHAUSTIVE_LIMIT else "sampled"

    def pred(x, y, z):
        return M.mul_many(M.mul_many(x, y), z) == M.mul_many(x, M.mul_many(y, z))

    return sweep("associativity", (N, N, N), pred, lambda t: tuple(M.elements[i] for i in t),
                 mode=mode, samples=samples, seed=seed)


def _pperm_table(elements, store=True):
    """Cayley table of a list of same-size partial permutations, vectorised by rows.

    With ``store=False`` only closure is checked and ``None`` is returned.
    """
    n = elements[0].n
    img = np.array([(0,) + e.images for e in elements], dtype=np.int64)  # column 0: undefined
    N = len(elements)
    weights = (n + 1) ** np.arange(n, dtype=np.int64)
    codes = img[:, 1:] @ weights
    # dense code -> index lookup; codes are < (n+1)**n
    lookup = np.full((n + 1) ** n, -1, dtype=np.int32)
    lookup[codes] = np.arange(N, dtype=np.int32)
    table = np.empty((N, N), dtype=np.int32) if store else None
    for i in range(N):
        # row j: images of 1..n under e_i then e_j
        row = lookup[img[:, img[i, 1:]] @ weights]
        if row.min() < 0:
            j = int(np.flatnonzero(row < 0)[0])
            raise ClosureViolation(elements[i], elements[j], compose(elements[i], elements[j]))
        if store:
            table[i] = row
    return table


def build(elements: Sequence, mult: Callable = compose, name: str = "", seed: int = 0) -> FiniteMonoid:
    """Monoid on ``elements`` under ``mult``.

    Checks closure, locates the identity and checks associativity
    (exhaustively up to 300 elements, else on 10**6 sampled triples).
    Raises ``ClosureViolation`` or ``NotAMonoid``.
    """
    elements = tuple(elements)
    if not elements:
        raise ValueError("a monoid needs at least one element")
    if len(set(elements)) != len(elements):
        raise ValueError("elements are not pairwise distinct")
    N = len(elements)
    index = {e: i for i, e in enumerate(elements)}

    if (mult is compose and isinstance(elements[0], PartialPerm)
            and N <= TABLE_LIMIT and len({e.n for e in elements}) == 1):
        table = _pperm_table(elements)
        M = FiniteMonoid(elements, 0, table=table, name=name)
    elif N <= TABLE_LIMIT:
        table = np.empty((N, N), dtype=np.int32)
        for i, x in enumerate(elements):
            for j, y in enumerate(elements):
                p = mult(x, y)
                k = index.get(p)
                if k is None:
                    raise ClosureViolation(x, y, p)
                table[i, j] = k
        M = FiniteMonoid(elements, 0, table=table, name=name)
    else:
        cache: dict = {}

        def one(i, j):
            key = (i, j)
            if key not in cache:
                x, y = elements[i], elements[j]
                p = mult(x, y)
                k = index.get(p)
                if k is None:
                    raise ClosureViolation(x, y, p)
                cache[key] = k
            return cache[key]

        def mul_many(a, b):
            return np.fromiter((one(int(i), int(j)) for i, j in zip(a, b)), dtype=np.int64, count=len(a))

        M = FiniteMonoid(elements, 0, mul_many=mul_many, name=name)
    M._index = index
    M.identity = _find_identity(M)
    _assert_associative(M, seed)
    return M


def trivial_monoid(element=None, name="1") -> FiniteMonoid:
    return FiniteMonoid([element], 0, table=np.zeros((1, 1), dtype=np.int32), name=name)


def direct_product(M: FiniteMonoid, N: FiniteMonoid, name: str = "") -> FiniteMonoid:
    """Componentwise product on pairs, ordered lexicographically."""
    m, k = len(M), len(N)
    elements = [(x, y) for x in M.elements for y in N.elements]

    def mul_many(a, b):
        a1, a2 = np.divmod(a, k)
        b1, b2 = np.divmod(b, k)
        return M.mul_many(a1, b1).astype(np.int64) * k + N.mul_many(a2, b2)

    return FiniteMonoid.from_vectorized(elements, mul_many, identity=M.identity * k + N.identity,
                                        name=name or f"{M.name} x {N.name}", check=False)


# ----------------------------------------------------------------------------
# generators and Green's relations

def generators(M: FiniteMonoid) -> list[int]:
    """A (greedy, not necessarily minimal) generating set, in index order."""
    N = len(M)
    gens: list[int] = []
    reached = np.zeros(N, dtype=bool)
    reached[M.identity] = True
    for x in range(N):
        if reached[x]:
            continue
        gens.append(x)
        # new products: everything reached so far times the new generator, then closure
        frontier = np.flatnonzero(reached)
        todo = [(frontier, np.array([x]))]
        while todo:
            src, gs = todo.pop()
            prods = np.unique(M.mul_many(src[:, None], gs[None, :]).ravel())
            new = prods[~reached[prods]]
            if new.size:
                reached[new] = True
                todo.append((new, np.array(gens)))
    return gens


def _scc(N, src, dst):
    g = coo_matrix((np.ones(len(src), dtype=np.int8), (src, dst)), shape=(N, N)).tocsr()
    _, labels = connected_components(g, directed=True, connection="strong")
    return _canonical(labels)


def _canonical(labels):
    # relabel by first occurrence so results do not depend on scipy internals
    _, first, inv = np.unique(labels, return_index=True, return_inverse=True)
    rank = np.argsort(np.argsort(first))
    return rank[inv]


@dataclass
class Green:
    R: np.ndarray
    L: np.ndarray
    H: np.ndarray
    D: np.ndarray
    J: np.ndarray

    def classes(self, rel: str) -> list[list[int]]:
        labels = getattr(self, rel)
        out: dict[int, list[int]] = {}
        for i, c in enumerate(labels):
            out.setdefault(int(c), []).append(i)
        return list(out.values())

    def related(self, rel: str, x: int, y: int) -> bool:
        labels = getattr(self, rel)
        return bool(labels[x] == labels[y])


def green(M: FiniteMonoid) -> Green:
    """R, L, H, D and J as class-label arrays over element indices."""
    if M._green is not None:
        return M._green
    N = len(M)
    gens = np.arange(N) if M.table is not None else np.array(generators(M))
    src = np.repeat(np.arange(N), len(gens))
    g = np.tile(gens, N)
    right = M.mul_many(src, g)
    left = M.mul_many(g, src)
    R = _scc(N, src, right)
    L = _scc(N, src, left)
    J = _scc(N, np.concatenate([src, src]), np.concatenate([right, left]))
    H = _canonical(R.astype(np.int64) * N + L)
    # D: join of R and L, via components of the graph x - rep_R(x), x - rep_L(x)
    rep_R = np.unique(R, return_index=True)[1][R]
    rep_L = np.unique(L, return_index=True)[1][L]
    ar = np.arange(N)
    g2 = coo_matrix((np.ones(2 * N, dtype=np.int8),
                     (np.concatenate([ar, ar]), np.concatenate([rep_R, rep_L]))), shape=(N, N))
    _, D = connected_components(g2, directed=False)
    M._green = Green(R, L, H, _canonical(D), J)
    return M._green


# ----------------------------------------------------------------------------
# structural properties

def idempotents(M: FiniteMonoid) -> list[int]:
    ar = np.arange(len(M))
    return [int(i) for i in np.flatnonzero(M.mul_many(ar, ar) == ar)]


def is_aperiodic(M: FiniteMonoid) -> VerificationReport:
    """Every x has x^k = x^(k+1) for some k <= |M|."""
    N = len(M)
    x = np.arange(N)
    power = x.copy()
    done = np.zeros(N, dtype=bool)
    for _ in range(N):
        nxt = M.mul_many(power, x)
        done |= nxt == power
        if done.all():
            break
        power = nxt
    if done.all():
        return VerificationReport.passed("aperiodic", N)
    bad = int(np.flatnonzero(~done)[0])
    return VerificationReport.failed("aperiodic", (M.elements[bad],), N)


def _trivial_classes(M, rel, law):
    labels = getattr(green(M), rel)
    N = len(M)
    _, first, counts = np.unique(labels, return_index=True, return_counts=True)
    if (counts == 1).all():
        return VerificationReport.passed(law, N)
    c = labels[first[np.flatnonzero(counts > 1)[0]]]
    x, y = np.flatnonzero(labels == c)[:2]
    return VerificationReport.failed(law, (M.elements[x], M.elements[y]), N)


def is_j_trivial(M: FiniteMonoid) -> VerificationReport:
    return _trivial_classes(M, "J", "j-trivial")


def is_h_trivial(M: FiniteMonoid) -> VerificationReport:
    return _trivial_classes(M, "H", "h-trivial")


def is_regular_element(M: FiniteMonoid, x: int) -> bool:
    ys = np.arange(len(M))
    return bool(np.any(M.mul_many(M.mul_many(x, ys), x) == x))


def is_regular(M: FiniteMonoid) -> VerificationReport:
    for x in range(len(M)):
        if not is_regular_element(M, x):
            return VerificationReport.failed("regular", (M.elements[x],), x + 1)
    return VerificationReport.passed("regular", len(M))


def idempotents_commute(M: FiniteMonoid) -> VerificationReport:
    E = np.array(idempotents(M))
    k = len(E)

    def pred(i, j):
        return M.mul_many(E[i], E[j]) == M.mul_many(E[j], E[i])

    return sweep("idempotents-commute", (k, k), pred,
                 lambda t: (M.elements[E[t[0]]], M.elements[E[t[1]]]), mode="exhaustive")


def is_inverse(M: FiniteMonoid) -> VerificationReport:
    reg = is_regular(M)
    if not reg.holds:
        return reg.renamed("inverse")
    com = idempotents_commute(M)
    if not com.holds:
        return com.renamed("inverse")
    return VerificationReport.passed("inverse", reg.checked + com.checked)


def generalized_inverses(M: FiniteMonoid, x: int) -> list[int]:
    """All y with xyx = x and yxy = y."""
    ys = np.arange(len(M))
    xy = M.mul_many(x, ys)
    ok = (M.mul_many(xy, x) == x) & (M.mul_many(M.mul_many(ys, x), ys) == ys)
    return [int(y) for y in np.flatnonzero(ok)]


def inverse_table(M: FiniteMonoid) -> np.ndarray:
    """The unique inverse of every element; ``ValueError`` if M is not an inverse monoid."""
    out = np.empty(len(M), dtype=np.int64)
    for x in range(len(M)):
        ys = generalized_inverses(M, x)
        if len(ys) != 1:
            raise ValueError(f"{M.render(x)} has {len(ys)} inverses")
        out[x] = ys[0]
    return out


# ----------------------------------------------------------------------------
# homomorphisms

@dataclass
class MonoidMap:
    source: FiniteMonoid
    target: FiniteMonoid
    images: np.ndarray
    name: str = "map"

    def __post_init__(self):
        self.images = np.asarray(self.images, dtype=np.int64)
        if self.images.shape != (len(self.source),):
            raise ValueError("map must be total on the source")
        if len(self.images) and (self.images.min() < 0 or self.images.max() >= len(self.target)):
            raise ValueError("map sends an element outside the target")

    @classmethod
    def from_function(cls, source, target, f: Callable[[Any], Any], name="map") -> MonoidMap:
        images = []
        for x in source.elements:
            y = f(x)
            if y not in target:
                raise ValueError(f"{name}: image {render_element(y)} of {render_element(x)} "
                                 f"is not in {target.name or 'the target'}")
            images.append(target.index(y))
        return cls(source, target, np.array(images), name)

    def __call__(self, x):
        return self.target.elements[self.images[self.source.index(x)]]


def verify_hom(m: MonoidMap, mode=None, samples=DEFAULT_SAMPLES, seed=0) -> VerificationReport:
    """(xy)m = (xm)(ym) for all pairs, and the identity goes to the identity."""
    S, T, f = m.source, m.target, m.images
    law = f"{m.name}.homomorphism"
    if f[S.identity] != T.identity:
        return VerificationReport.failed(law, (S.elements[S.identity],), 1,
                                         note="identity not preserved")

    def pred(x, y):
        return f[S.mul_many(x, y)] == T.mul_many(f[x], f[y])

    return sweep(law, (len(S), len(S)), pred, lambda t: tuple(S.elements[i] for i in t),
                 mode=mode, samples=samples, seed=seed)


def is_surjective(m: MonoidMap) -> VerificationReport:
    law = f"{m.name}.surjective"
    hit = np.zeros(len(m.target), dtype=bool)
    hit[m.images] = True
    if hit.all():
        return VerificationReport.passed(law, len(m.target))
    miss = int(np.flatnonzero(~hit)[0])
    return VerificationReport.failed(law, (m.target.elements[miss],), len(m.target),
                                     note="target element with no preimage")


def _injective_on(m, xs, law):
    seen: dict[int, int] = {}
    for x in xs:
        y = int(m.images[x])
        if y in seen:
            return VerificationReport.failed(law, (m.source.elements[seen[y]], m.source.elements[x]),
                                             len(seen) + 1, note="distinct elements with equal image")
        seen[y] = x
    return VerificationReport.passed(law, len(xs))


def is_injective(m: MonoidMap) -> VerificationReport:
    return _injective_on(m, range(len(m.source)), f"{m.name}.injective")


def separates_idempotents(m: MonoidMap) -> VerificationReport:
    return _injective_on(m, idempotents(m.source), f"{m.name}.separates-idempotents")
