"""Run configuration, resolved parameters, and per-run reports.

Auto-resolved values (field width, run count, unlabeled-arc budget) are
recorded next to the verdict so a report is reproducible from its own
contents.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

ENGINES = ("table", "streaming")
PRESETS = ("fast", "safe")

VERDICT_HAM = "hamiltonian"
VERDICT_NONE = "not-detected"


@dataclass
class DetectionConfig:
    """Knobs for the randomized detectors; None means auto-resolve."""

    seed: int = 2024
    k: int | None = None
    runs: int | None = None
    m_max: int | None = None
    engine: str = "table"
    preset: str = "fast"
    threads: int = 1

    def __post_init__(self):
        if self.engine not in ENGINES:
            raise ValueError(f"engine must be one of {ENGINES}")
        if self.preset not in PRESETS:
            raise ValueError(f"preset must be one of {PRESETS}")
        if self.threads < 1:
            raise ValueError("threads must be >= 1")


def auto_k(n: int, max_labels: int) -> int:
    """Smallest k with 2^k > max(64 n, labels * n): a comfortable
    single-evaluation failure probability and room for the interpolation
    ladder."""
    need = max(64 * n, max_labels * n, 2)
    return need.bit_length()  # smallest k with 2^k > need


def general_m_max(n: int, preset: str) -> int:
    if preset == "safe":
        return min(math.ceil(n / 4), math.ceil(n / 2))
    return min(max(int(0.205 * n), 1), math.ceil(n / 2))


def general_runs(n: int, preset: str) -> int:
    if preset == "safe":
        return n * n
    return math.ceil(n * n * 2 ** (0.024 * n))


@dataclass
class RunReport:
    """Outcome of one run: the partition used, which unlabeled-arc counts m
    were tried, and the fingerprint value each produced."""

    run_index: int
    part1: tuple
    part2: tuple
    m_values: list
    fingerprints: list

    @property
    def hit(self) -> bool:
        return any(fp != 0 for fp in self.fingerprints)


@dataclass
class DetectionResult:
    verdict: str
    runs: list
    resolved: dict = field(default_factory=dict)
    elapsed_ms: float = 0.0

    @property
    def is_hamiltonian(self) -> bool:
        return self.verdict == VERDICT_HAM


def run_until_hit(total: int, threads: int, fn) -> list:
    """Execute fn(0), fn(1), ... collecting reports, stopping at the first
    report whose .hit is true.  With threads > 1 the runs execute in chunks;
    the returned list is still truncated at the first hit by index, so the
    output is identical to the sequential one."""
    if total <= 0:
        return []
    if threads <= 1:
        reports = []
        for i in range(total):
            rep = fn(i)
            reports.append(rep)
            if rep.hit:
                break
        return reports
    done: dict[int, object] = {}
    hit_at: int | None = None
    with ThreadPoolExecutor(max_workers=threads) as ex:
        nxt = 0
        while nxt < total and hit_at is None:
            chunk = list(range(nxt, min(nxt + threads, total)))
            for idx, rep in zip(chunk, ex.map(fn, chunk)):
                done[idx] = rep
            for idx in chunk:
                if done[idx].hit:
                    hit_at = idx
                    break
            nxt = chunk[-1] + 1
    last = hit_at if hit_at is not None else total - 1
    return [done[i] for i in range(last + 1)]
