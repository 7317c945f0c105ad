"""Experiment drivers: single specs, partition sweeps, random samples, perturbations."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

import numpy as np

from boxpoly.invariants import DEFAULT_CAP
from boxpoly.simplex import DegenerateRowError, OneRowSimplex, parse_spec, row_modulus

from .parallel import ordered_map
from .records import DegenerateEntry, ExperimentRecord, build_record

RNG_ALGORITHM = "numpy.random.PCG64"

# (d, k) pairs for the perturbed constant rows.
PERTURBATION_PAIRS = (
    (8, 1), (8, 4), (8, 7), (8, 10),
    (11, 1), (11, 4), (11, 7), (11, 10),
    (14, 1), (14, 4), (14, 7),
)

Entry = ExperimentRecord | DegenerateEntry


@dataclass(frozen=True)
class Summary:
    total: int = 0
    degenerate: int = 0
    unimodal: int = 0
    strictly_unimodal: int = 0
    idp_checked: int = 0
    idp_witnesses: int = 0
    truncated: bool = False

    @property
    def records(self) -> int:
        return self.total - self.degenerate

    @property
    def unimodal_fraction(self) -> Fraction:
        return Fraction(self.unimodal, self.records) if self.records else Fraction(0)

    @property
    def witness_fraction(self) -> Fraction:
        return Fraction(self.idp_witnesses, self.idp_checked) if self.idp_checked else Fraction(0)

    def to_json(self) -> dict:
        uf, wf = self.unimodal_fraction, self.witness_fraction
        return {
            "total": self.total,
            "degenerate": self.degenerate,
            "unimodal": self.unimodal,
            "strictly_unimodal": self.strictly_unimodal,
            "unimodal_fraction": f"{uf.numerator}/{uf.denominator}",
            "idp_checked": self.idp_checked,
            "idp_witnesses": self.idp_witnesses,
            "witness_fraction": f"{wf.numerator}/{wf.denominator}",
            "truncated": self.truncated,
        }


def summarize(entries: Iterable[Entry], truncated: bool = False) -> Summary:
    total = degenerate = uni = strict = checked = yes = 0
    for e in entries:
        total += 1
        if isinstance(e, DegenerateEntry):
            degenerate += 1
            continue
        uni += e.unimodal
        strict += e.strictly_unimodal
        if e.idp_witness_found != "skipped":
            checked += 1
            yes += e.idp_witness_found == "yes"
    return Summary(total, degenerate, uni, strict, checked, yes, truncated)


@dataclass(frozen=True)
class RunResult:
    entries: list[Entry]
    summary: Summary
    meta: dict = field(default_factory=dict)


# -- tasks --------------------------------------------------------------------
#
# A task is a picklable tuple (a, N, idp, cap); N is None for "use M + 1".


def _run_task(task) -> Entry:
    a, N, idp, cap = task
    if N is None:
        try:
            N = row_modulus(a) + 1
        except DegenerateRowError as exc:
            return DegenerateEntry(tuple(a), str(exc))
    return build_record(OneRowSimplex.reduced(a, N), idp, cap)


def task_spec(task) -> str | None:
    """Spec string a task will produce, or ``None`` if it is degenerate."""
    a, N, _, _ = task
    if N is None:
        try:
            N = row_modulus(a) + 1
        except DegenerateRowError:
            return None
    return OneRowSimplex.reduced(a, N).spec()


def run_tasks(tasks: Sequence, jobs: int = 1, skip: frozenset[str] = frozenset()) -> list[Entry]:
    if skip:
        tasks = [t for t in tasks if task_spec(t) not in skip]
    return list(ordered_map(_run_task, tasks, jobs))


def run_compute(spec: str, idp: str = "skip", cap: int = DEFAULT_CAP) -> ExperimentRecord:
    return build_record(parse_spec(spec), idp, cap)


# -- partitions ---------------------------------------------------------------


def partitions(n: int, distinct: bool = False) -> Iterator[tuple[int, ...]]:
    """Partitions of ``n`` as non-increasing tuples, in reverse lexicographic order."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")

    def rec(rest: int, largest: int) -> Iterator[tuple[int, ...]]:
        if rest == 0:
            yield ()
            return
        for part in range(min(rest, largest), 0, -1):
            nxt = part - 1 if distinct else part
            for tail in rec(rest - part, nxt):
                yield (part,) + tail

    yield from rec(n, n)


@dataclass(frozen=True)
class SweepConfig:
    n: int
    N: int | None = None  # fixed volume; None means N = M + 1
    d: int | None = None  # keep only partitions with d - 1 parts
    distinct: bool = False
    jobs: int = 1
    seed: int = 0
    budget: int | None = None  # maximum number of partitions visited
    idp: str = "skip"
    cap: int = DEFAULT_CAP


def sweep_tasks(config: SweepConfig) -> tuple[list, bool]:
    tasks = []
    truncated = False
    for part in partitions(config.n, config.distinct):
        if config.d is not None and len(part) != config.d - 1:
            continue
        if config.budget is not None and len(tasks) >= config.budget:
            truncated = True
            break
        tasks.append((part, config.N, config.idp, config.cap))
    return tasks, truncated


def sweep_partitions(config: SweepConfig, skip: frozenset[str] = frozenset()) -> RunResult:
    tasks, truncated = sweep_tasks(config)
    entries = run_tasks(tasks, config.jobs, skip)
    meta = {"command": "sweep-partitions", "n": config.n, "distinct": config.distinct,
            "N": "m_plus_one" if config.N is None else str(config.N)}
    return RunResult(entries, summarize(entries, truncated), meta)


# -- random samples -----------------------------------------------------------


@dataclass(frozen=True)
class SampleConfig:
    d: int
    N: int
    count: int
    seed: int = 0
    jobs: int = 1
    idp: str = "height2"
    cap: int = DEFAULT_CAP


def draw_rows(d: int, N: int, count: int, seed: int) -> list[tuple[int, ...]]:
    """``count`` rows uniform on ``[0, N-1]^(d-1)``, rejecting ``sum(a) <= 1``."""
    if d < 2 or N < 1:
        raise ValueError(f"need d >= 2 and N >= 1, got d={d}, N={N}")
    if N == 1 or (N == 2 and d == 2):
        if count:
            raise ValueError(f"no row in [0, {N - 1}]^{d - 1} has sum >= 2")
        return []
    rng = np.random.Generator(np.random.PCG64(seed))
    rows: list[tuple[int, ...]] = []
    while len(rows) < count:
        a = tuple(int(x) for x in rng.integers(0, N, size=d - 1))
        if sum(a) > 1:
            rows.append(a)
    return rows


def sample_tasks(config: SampleConfig) -> list:
    rows = draw_rows(config.d, config.N, config.count, config.seed)
    return [(a, config.N, config.idp, config.cap) for a in rows]


def sample_random(config: SampleConfig, skip: frozenset[str] = frozenset()) -> RunResult:
    entries = run_tasks(sample_tasks(config), config.jobs, skip)
    meta = {"command": "sample-random", "rng": RNG_ALGORITHM, "seed": config.seed,
            "d": config.d, "N": str(config.N), "count": config.count}
    return RunResult(entries, summarize(entries), meta)


# -- perturbed constant rows --------------------------------------------------


def perturbation_offsets(d: int, seed: int, samples: int = 10) -> list[tuple[int, ...]]:
    """``samples`` offset vectors, entries i.i.d. uniform on ``{0, 1, 2, 3, 4}``."""
    rng = np.random.Generator(np.random.PCG64(seed))
    return [tuple(int(x) for x in rng.integers(0, 5, size=d - 1)) for _ in range(samples)]


def perturbation_tasks(
    d: int,
    k_const: int,
    offsets_seed: int = 0,
    samples: int = 10,
    offsets: Sequence[Sequence[int]] | None = None,
    idp: str = "skip",
    cap: int = DEFAULT_CAP,
) -> list:
    if d < 2 or k_const < 1:
        raise ValueError(f"need d >= 2 and k >= 1, got d={d}, k={k_const}")
    if offsets is None:
        offsets = perturbation_offsets(d, offsets_seed, samples)
    rows = [(k_const,) * (d - 1)]
    for off in offsets:
        if len(off) != d - 1:
            raise ValueError(f"offset vector {tuple(off)} must have {d - 1} entries")
        rows.append(tuple(k_const + int(x) for x in off))
    return [(a, None, idp, cap) for a in rows]


def perturbation_experiment(
    d: int,
    k_const: int,
    offsets_seed: int = 0,
    samples: int = 10,
    offsets: Sequence[Sequence[int]] | None = None,
    jobs: int = 1,
    idp: str = "skip",
    cap: int = DEFAULT_CAP,
    skip: frozenset[str] = frozenset(),
) -> RunResult:
    """Constant row ``a_i = k_const`` followed by perturbed rows, each at ``N = M + 1``."""
    tasks = perturbation_tasks(d, k_const, offsets_seed, samples, offsets, idp, cap)
    entries = run_tasks(tasks, jobs, skip)
    meta = {"command": "perturb", "rng": RNG_ALGORITHM, "seed": offsets_seed,
            "d": d, "k": k_const, "samples": samples}
    return RunResult(entries, summarize(entries), meta)

