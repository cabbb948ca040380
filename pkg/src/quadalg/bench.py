"""Operation counts and timings for the P_m engines."""
from __future__ import annotations

import logging
import time
from dataclasses import asdict, dataclass
from typing import Iterable

from .quadratic import Engine, QuadParams, p_m
from .ring import INTEGERS, CountingRing, Ring

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class BenchRecord:
    subcommand: str
    engine: str
    m: int
    ring: str
    multiplications: int
    additions: int
    wall_time: int  # nanoseconds, best of ``repeats``

    def to_json(self) -> dict:
        return {k: str(v) for k, v in asdict(self).items()}


def count_ops(params_t: int, params_d: int, m: int, engine: Engine | str, ring: Ring = INTEGERS):
    """Run one P_m computation over a counting wrapper of ``ring``; return the counter."""
    counting = CountingRing(ring)
    params = QuadParams(counting.from_int(params_t), counting.from_int(params_d))
    counting.counter.reset()
    p_m(params, m, engine)
    return counting.counter


def bench_suite(
    ms: Iterable[int],
    engines: Iterable[Engine | str] = (Engine.ITERATIVE, Engine.DOUBLING),
    ring: Ring = INTEGERS,
    t: int = 1,
    d: int = -1,
    repeats: int = 3,
) -> list[BenchRecord]:
    ms = list(ms)
    if not ms:
        raise ValueError("bench needs at least one m")
    if repeats < 1:
        raise ValueError(f"repeats must be >= 1, got {repeats}")
    engines = [Engine(e) for e in engines]
    params = QuadParams.of(t, d, ring)
    records = []
    for m in ms:
        if m < 0:
            raise ValueError(f"m must be >= 0, got {m}")
        for engine in engines:
            if engine is Engine.BINOMIAL and m == 0:
                log.warning("skipping binomial engine at m=0 (closed sum starts at m=1)")
                continue
            counter = count_ops(t, d, m, engine, ring)
            best = None
            for _ in range(repeats):
                start = time.perf_counter_ns()
                p_m(params, m, engine)
                elapsed = time.perf_counter_ns() - start
                best = elapsed if best is None else min(best, elapsed)
            records.append(
                BenchRecord(
                    subcommand="pm",
                    engine=engine.value,
                    m=m,
                    ring=ring.name,
                    multiplications=counter.multiplications,
                    additions=counter.additions,
                    wall_time=max(best, 1),
                )
            )
    return records
