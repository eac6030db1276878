"""Bilateral semidirect products ``S ⋈ T`` of finite monoids.

An :class:`ActionPair` couples a left action of ``T`` on ``S`` (``left(u, s)``,
written u◁s) with a right action of ``S`` on ``T`` (``right(u, s)``, written
u^s).  The product lives on ``S × T`` with

    (s, u)(r, v) = (s (u◁r), u^r v).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .monoid_core import FiniteMonoid
from .reports import DEFAULT_SAMPLES, VerificationReport, sweep

ACTION_TABLE_LIMIT = 10**6


class InvalidAction(ValueError):
    def __init__(self, report: VerificationReport):
        self.report = report
        super().__init__(f"action axiom {report.law!r} fails at {report.counterexample}")


def trivial_left(u, s):
    return s


def trivial_right(u, s):
    return u


@dataclass
class ActionPair:
    S: FiniteMonoid
    T: FiniteMonoid
    left: Callable = trivial_left
    right: Callable = trivial_right
    name: str = "action"
    _left_table: np.ndarray | None = field(default=None, init=False, repr=False)
    _right_table: np.ndarray | None = field(default=None, init=False, repr=False)

    def __post_init__(self):
        self._memo_left: dict = {}
        self._memo_right: dict = {}
        if len(self.S) * len(self.T) <= ACTION_TABLE_LIMIT:
            nt, ns = len(self.T), len(self.S)
            self._left_table = np.empty((nt, ns), dtype=np.int64)
            self._right_table = np.empty((nt, ns), dtype=np.int64)
            for u in range(nt):
                for s in range(ns):
                    self._left_table[u, s] = self._left_one(u, s)
                    self._right_table[u, s] = self._right_one(u, s)

    def _left_one(self, u, s):
        key = (u, s)
        if key not in self._memo_left:
            val = self.left(self.T.elements[u], self.S.elements[s])
            if val not in self.S:
                raise ValueError(f"{self.name}: left action leaves S at "
                                 f"u={self.T.render(u)}, s={self.S.render(s)}")
            self._memo_left[key] = self.S.index(val)
        return self._memo_left[key]

    def _right_one(self, u, s):
        key = (u, s)
        if key not in self._memo_right:
            val = self.right(self.T.elements[u], self.S.elements[s])
            if val not in self.T:
                raise ValueError(f"{self.name}: right action leaves T at "
                                 f"u={self.T.render(u)}, s={self.S.render(s)}")
            self._memo_right[key] = self.T.index(val)
        return self._memo_right[key]

    def act_left(self, u, s) -> np.ndarray:
        """Index of u◁s, vectorised over index arrays."""
        if self._left_table is not None:
            return self._left_table[u, s]
        return np.vectorize(self._left_one, otypes=[np.int64])(u, s)

    def act_right(self, u, s) -> np.ndarray:
        """Index of u^s, vectorised over index arrays."""
        if self._right_table is not None:
            return self._right_table[u, s]
        return np.vectorize(self._right_one, otypes=[np.int64])(u, s)


def _decode(a, kinds):
    def decode(t):
        return tuple((a.S if k == "S" else a.T).elements[i] for i, k in zip(t, kinds))
    return decode


def _identity_laws(a, law, which):
    S, T = a.S, a.T
    reports = []
    if "left-id" in which:  # 1◁s = s
        s = np.arange(len(S))
        ok = a.act_left(T.identity, s) == s
        reports.append((ok, lambda i: (T.elements[T.identity], S.elements[i]), "1◁s = s"))
    if "right-id" in which:  # u^1 = u
        u = np.arange(len(T))
        ok = a.act_right(u, S.identity) == u
        reports.append((ok, lambda i: (T.elements[i], S.elements[S.identity]), "u^1 = u"))
    if "left-monoidal" in which:  # u◁1 = 1
        u = np.arange(len(T))
        ok = a.act_left(u, S.identity) == S.identity
        reports.append((ok, lambda i: (T.elements[i], S.elements[S.identity]), "u◁1 = 1"))
    if "right-monoidal" in which:  # 1^s = 1
        s = np.arange(len(S))
        ok = a.act_right(T.identity, s) == T.identity
        reports.append((ok, lambda i: (T.elements[T.identity], S.elements[i]), "1^s = 1"))
    checked = 0
    for ok, decode, note in reports:
        bad = np.flatnonzero(~ok)
        if bad.size:
            return VerificationReport.failed(law, decode(int(bad[0])), checked + int(bad[0]) + 1,
                                             note=f"{note} fails")
        checked += len(ok)
    return VerificationReport.passed(law, checked)


def _combine(first: VerificationReport, second: VerificationReport) -> VerificationReport:
    if not first.holds:
        return first
    second.checked += first.checked
    return second


def check_monoidal(a: ActionPair) -> VerificationReport:
    """1◁s = s, u^1 = u, u◁1 = 1 and 1^s = 1."""
    return _identity_laws(a, f"{a.name}.monoidal",
                          ("left-id", "right-id", "left-monoidal", "right-monoidal"))


def check_left_antihom(a: ActionPair, mode=None, samples=DEFAULT_SAMPLES, seed=0) -> VerificationReport:
    """(uv)◁s = u◁(v◁s) and 1◁s = s."""
    law = f"{a.name}.left-antihom"
    S, T = a.S, a.T

    def pred(u, v, s):
        return a.act_left(T.mul_many(u, v), s) == a.act_left(u, a.act_left(v, s))

    return _combine(_identity_laws(a, law, ("left-id",)),
                    sweep(law, (len(T), len(T), len(S)), pred, _decode(a, "TTS"),
                          mode=mode, samples=samples, seed=seed))


def check_right_hom(a: ActionPair, mode=None, samples=DEFAULT_SAMPLES, seed=0) -> VerificationReport:
    """u^(sr) = (u^s)^r and u^1 = u."""
    law = f"{a.name}.right-hom"
    S, T = a.S, a.T

    def pred(u, s, r):
        return a.act_right(u, S.mul_many(s, r)) == a.act_right(a.act_right(u, s), r)

    return _combine(_identity_laws(a, law, ("right-id",)),
                    sweep(law, (len(T), len(S), len(S)), pred, _decode(a, "TSS"),
                          mode=mode, samples=samples, seed=seed))


def check_spr(a: ActionPair, mode=None, samples=DEFAULT_SAMPLES, seed=0) -> VerificationReport:
    """Sequential processing: (uv)^s = u^(v◁s) v^s."""
    S, T = a.S, a.T

    def pred(u, v, s):
        lhs = a.act_right(T.mul_many(u, v), s)
        rhs = T.mul_many(a.act_right(u, a.act_left(v, s)), a.act_right(v, s))
        return lhs == rhs

    return sweep(f"{a.name}.spr", (len(T), len(T), len(S)), pred, _decode(a, "TTS"),
                 mode=mode, samples=samples, seed=seed)


def check_scr(a: ActionPair, mode=None, samples=DEFAULT_SAMPLES, seed=0) -> VerificationReport:
    """Serial composition: u◁(sr) = (u◁s)(u^s◁r)."""
    S, T = a.S, a.T

    def pred(u, s, r):
        lhs = a.act_left(u, S.mul_many(s, r))
        rhs = S.mul_many(a.act_left(u, s), a.act_left(a.act_right(u, s), r))
        return lhs == rhs

    return sweep(f"{a.name}.scr", (len(T), len(S), len(S)), pred, _decode(a, "TSS"),
                 mode=mode, samples=samples, seed=seed)


def check_axioms(a: ActionPair, mode=None, samples=DEFAULT_SAMPLES, seed=0) -> list[VerificationReport]:
    """All five axiom reports, cheapest first."""
    kw = dict(mode=mode, samples=samples, seed=seed)
    return [
        check_monoidal(a),
        check_left_antihom(a, **kw),
        check_right_hom(a, **kw),
        check_spr(a, **kw),
        check_scr(a, **kw),
    ]


def build_bilateral(a: ActionPair, check: bool = True, mode=None, samples=DEFAULT_SAMPLES,
                    seed: int = 0, name: str = "") -> FiniteMonoid:
    """The monoid ``S ⋈ T``; raises :class:`InvalidAction` when an axiom fails.

    Elements are pairs ``(s, u)`` ordered with the S-component first.
    """
    if check:
        for rep in check_axioms(a, mode=mode, samples=samples, seed=seed):
            if not rep.holds:
                raise InvalidAction(rep)
    S, T = a.S, a.T
    k = len(T)
    elements = [(s, u) for s in S.elements for u in T.elements]

    def mul_many(x, y):
        s, u = np.divmod(x, k)
        r, v = np.divmod(y, k)
        first = S.mul_many(s, a.act_left(u, r))
        second = T.mul_many(a.act_right(u, r), v)
        return first.astype(np.int64) * k + second

    return FiniteMonoid.from_vectorized(elements, mul_many, identity=S.identity * k + T.identity,
                                        name=name or f"{S.name} ⋈ {T.name}", seed=seed)


def build_semidirect(S: FiniteMonoid, T: FiniteMonoid, left: Callable, name: str = "", **kw) -> FiniteMonoid:
    """``S ⋊ T``: the bilateral product with the right action trivial."""
    a = ActionPair(S, T, left, trivial_right, name=name or "semidirect")
    return build_bilateral(a, name=name or f"{S.name} ⋊ {T.name}", **kw)


def build_reverse_semidirect(S: FiniteMonoid, T: FiniteMonoid, right: Callable, name: str = "", **kw) -> FiniteMonoid:
    """``S ⋉ T``: the bilateral product with the left action trivial."""
    a = ActionPair(S, T, trivial_left, right, name=name or "reverse-semidirect")
    return build_bilateral(a, name=name or f"{S.name} ⋉ {T.name}", **kw)


def mutate_action(fn: Callable, at: tuple, value) -> Callable:
    """Copy of ``fn`` with the output at arguments ``at`` replaced by ``value``."""
    def mutated(u, s):
        if (u, s) == at:
            return value
        return fn(u, s)
    return mutated
