"""Law-check results and the tuple sweeps that produce them."""
from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Sequence

import numpy as np

EXHAUSTIVE_LIMIT = 10**8
DEFAULT_SAMPLES = 10**6
CHUNK = 1 << 20


def render_element(x) -> str:
    if isinstance(x, tuple):
        return "(" + ", ".join(render_element(y) for y in x) + ")"
    return str(x)


@dataclass
class VerificationReport:
    law: str
    holds: bool
    checked: int
    mode: str = "exhaustive"
    counterexample: tuple[str, ...] | None = None
    # raw element values behind ``counterexample``; not serialised
    witness: tuple[Any, ...] | None = field(default=None, repr=False, compare=False)
    note: str | None = None

    def __bool__(self):
        return self.holds

    def to_dict(self) -> dict:
        d = {"law": self.law, "holds": self.holds, "mode": self.mode, "checked": self.checked}
        if self.counterexample is not None:
            d["counterexample"] = list(self.counterexample)
        if self.note:
            d["note"] = self.note
        return d

    def renamed(self, law: str) -> VerificationReport:
        return VerificationReport(law, self.holds, self.checked, self.mode,
                                  self.counterexample, self.witness, self.note)

    @classmethod
    def passed(cls, law, checked, mode="exhaustive", note=None):
        return cls(law, True, checked, mode, note=note)

    @classmethod
    def failed(cls, law, witness, checked, mode="exhaustive", note=None):
        witness = tuple(witness)
        return cls(law, False, checked, mode,
                   tuple(render_element(w) for w in witness), witness, note)


def worker_count() -> int:
    env = os.environ.get("SEMIGROUP_FORGE_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def resolve_mode(mode: str | None, total: int) -> str:
    if mode in (None, "auto"):
        return "exhaustive" if total <= EXHAUSTIVE_LIMIT else "sampled"
    if mode not in ("exhaustive", "sampled"):
        raise ValueError(f"unknown mode {mode!r}")
    return mode


def sweep(
    law: str,
    sizes: Sequence[int],
    predicate: Callable[..., np.ndarray],
    decode: Callable[[tuple[int, ...]], tuple],
    mode: str | None = None,
    samples: int = DEFAULT_SAMPLES,
    seed: int = 0,
) -> VerificationReport:
    """Evaluate ``predicate`` over index tuples drawn from ``range(sizes[k])``.

    ``predicate`` receives one int array per tuple position and returns a
    boolean array (True where the law holds).  Exhaustive sweeps walk the
    tuples in lexicographic order; sampled sweeps draw ``samples`` tuples from
    ``numpy.random.default_rng(seed)``.  The first failing tuple in that order
    becomes the counterexample, decoded into element values by ``decode``.
    """
    sizes = tuple(int(k) for k in sizes)
    total = math.prod(sizes)
    mode = resolve_mode(mode, total)
    if total == 0:
        return VerificationReport.passed(law, 0, mode)

    if mode == "exhaustive":
        label = "exhaustive"
        bounds = [(lo, min(lo + CHUNK, total)) for lo in range(0, total, CHUNK)]

        def run(bound):
            lo, hi = bound
            idx = np.unravel_index(np.arange(lo, hi, dtype=np.int64), sizes)
            ok = np.asarray(predicate(*idx), dtype=bool)
            bad = np.flatnonzero(~ok)
            if bad.size:
                k = int(bad[0])
                return lo + k + 1, tuple(int(a[k]) for a in idx)
            return None
    else:
        label = f"sampled({seed})"
        rng = np.random.default_rng(seed)
        draws = [rng.integers(0, k, size=samples) for k in sizes]
        total = samples
        bounds = [(lo, min(lo + CHUNK, samples)) for lo in range(0, samples, CHUNK)]

        def run(bound):
            lo, hi = bound
            idx = [d[lo:hi] for d in draws]
            ok = np.asarray(predicate(*idx), dtype=bool)
            bad = np.flatnonzero(~ok)
            if bad.size:
                k = int(bad[0])
                return lo + k + 1, tuple(int(a[k]) for a in idx)
            return None

    failure = None
    workers = min(worker_count(), len(bounds))
    if workers <= 1:
        for b in bounds:
            failure = run(b)
            if failure:
                break
    else:
        with ThreadPoolExecutor(workers) as pool:
            # map preserves chunk order, so the earliest failure wins
            for result in pool.map(run, bounds):
                if result:
                    failure = result
                    break
    if failure is None:
        return VerificationReport.passed(law, total, label)
    checked, tup = failure
    return VerificationReport.failed(law, decode(tup), checked, label)
