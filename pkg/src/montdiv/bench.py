"""Throughput of remainder-only and full division across folding factors."""
from __future__ import annotations

import statistics
import time
from dataclasses import dataclass

import numpy as np

from .biguint import BigUint
from .inverse import make_ctx
from .quotient import div_rem
from .remainder import FOLDS, remainder


@dataclass(frozen=True)
class BenchRow:
    op: str
    fold: int
    words: int
    trials: int
    median_s: float

    @property
    def ns_per_word(self) -> float:
        return self.median_s * 1e9 / self.words

    @property
    def words_per_sec(self) -> float:
        return self.words / self.median_s


CSV_HEADER = "op,fold,words,trials,median_ns_per_word,words_per_sec"


def to_csv(row: BenchRow) -> str:
    return f"{row.op},{row.fold},{row.words},{row.trials},{row.ns_per_word:.4f},{row.words_per_sec:.1f}"


def random_operands(words: int, seed: int) -> tuple[BigUint, int]:
    rng = np.random.default_rng(seed)
    x = BigUint(rng.integers(0, 2**64, size=words, dtype=np.uint64, endpoint=False))
    q = int(rng.integers(0, 2**63, dtype=np.uint64)) | (1 << 63) | 1
    return x, q


def _median_time(fn, trials: int) -> float:
    fn()  # JIT warm-up and cache load
    times = []
    for _ in range(trials):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return statistics.median(times)


def run_bench(words: int = 1 << 20, trials: int = 5, seed: int = 0,
              q: int | None = None, folds=FOLDS) -> list[BenchRow]:
    x, q_default = random_operands(words, seed)
    ctx = make_ctx(q if q is not None else q_default)
    rows = []
    for f in folds:
        t = _median_time(lambda: remainder(x, ctx, fold=f), trials)
        rows.append(BenchRow("rem", f, words, trials, t))
        t = _median_time(lambda: div_rem(x, ctx, fold=f), trials)
        rows.append(BenchRow("divmod", f, words, trials, t))
    return rows
