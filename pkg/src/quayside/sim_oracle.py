"""Discrete-event simulation oracle for the single-server queue.

Covers non-preemptive M|G|1 under FIFO or LIFO order and the
preemptive-priority queue under the resume / loss / repeat disciplines.
Every run is driven by numpy substreams derived from one master seed
(separate streams per class for interarrivals and service draws), so a
given SimConfig always reproduces bit-identical results and adding a
class does not perturb the other classes' draws.

Discipline semantics, fixed here once:

* resume -- a preempted job keeps its remaining work and waits at the
  head of its class queue.
* loss   -- only the job in service is discarded on preemption; queued
  jobs are never dropped.
* repeat -- a preempted job re-enters at the head of its class with a
  freshly resampled service time (repeat-different).

Ties between an arrival and a completion at the same instant resolve
completion-first, so a job with zero remaining work is never preempted.
"""

import math
from collections import deque
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np
from scipy import stats

from .errors import StationarityError
from .traffic import traffic_coefficients
from .waiting_time import FIFO, LIFO

__all__ = ["SimConfig", "SimResult", "simulate_mg1", "simulate_priority"]

_CHUNK = 1 << 16


@dataclass(frozen=True)
class SimConfig:
    seed: int
    total_arrivals: int                  # measured (post-warmup) arrivals
    warmup_arrivals: Optional[int] = None  # default: 10% of total
    ecdf_grid: Tuple[float, ...] = ()

    def __post_init__(self):
        if self.total_arrivals < 1:
            raise ValueError("total_arrivals must be >= 1")
        object.__setattr__(self, "ecdf_grid", tuple(sorted(self.ecdf_grid)))

    @property
    def warmup(self):
        if self.warmup_arrivals is None:
            return self.total_arrivals // 10
        return self.warmup_arrivals


@dataclass(frozen=True)
class SimResult:
    mean_wait: float
    ci_half_width: float                 # 95% batch-means CI, 20 batches
    ecdf: Tuple[float, ...]              # empirical W(x) on the config grid
    utilization_prefix: Tuple[float, ...]  # busy fraction of classes 1..k
    completed: Tuple[int, ...]
    lost: Tuple[int, ...]
    idle_at_arrival: float               # fraction of measured arrivals finding idle
    horizon: float
    total_busy_time: float
    seed: int


class _Stream:
    """Chunked draws from one substream; extends itself on demand."""

    def __init__(self, rng, draw):
        self._rng = rng
        self._draw = draw
        self._buf = draw(rng, _CHUNK)
        self._i = 0

    def take(self):
        if self._i == len(self._buf):
            self._buf = self._draw(self._rng, _CHUNK)
            self._i = 0
        v = self._buf[self._i]
        self._i += 1
        return v


class _ArrivalStream(_Stream):
    """Arrival epochs for one Poisson class."""

    def __init__(self, rng, rate):
        self._t = 0.0
        super().__init__(rng, lambda r, n: r.exponential(1.0 / rate, n))

    def take(self):
        self._t += super().take()
        return self._t


def _substream(seed, group, index):
    return np.random.default_rng(np.random.SeedSequence(entropy=seed, spawn_key=(group, index)))


def _batch_means_ci(waits, n_batches=20):
    waits = np.asarray(waits)
    if len(waits) < n_batches:
        return float(np.mean(waits)), math.inf
    usable = (len(waits) // n_batches) * n_batches
    batches = waits[:usable].reshape(n_batches, -1).mean(axis=1)
    half = stats.t.ppf(0.975, n_batches - 1) * batches.std(ddof=1) / math.sqrt(n_batches)
    return float(np.mean(waits)), float(half)


def _ecdf(waits, grid):
    if not grid:
        return ()
    srt = np.sort(np.asarray(waits))
    return tuple(float(np.searchsorted(srt, x, side="right")) / len(srt) for x in grid)


def simulate_mg1(d, a, order, cfg):
    """Non-preemptive single-class queue; `order` is "fifo" or "lifo"."""
    if order not in (FIFO, LIFO):
        raise ValueError("order must be fifo or lifo, got %r" % (order,))
    rho = a * d.moment1()
    if rho >= 1.0:
        raise StationarityError(
            "oracle only runs stationary cases: traffic coefficient %.6g >= 1" % rho
        )
    arrivals = _ArrivalStream(_substream(cfg.seed, 0, 0), a)
    services = _Stream(_substream(cfg.seed, 1, 0), lambda r, n: d.sample(r, n))

    n_all = cfg.total_arrivals + cfg.warmup
    warm = cfg.warmup
    waits = np.empty(cfg.total_arrivals)
    queue = deque()              # (arrival_time, arrival_index)
    t = 0.0
    completion = math.inf
    busy_time = 0.0
    idle_found = 0
    made = 0
    next_arr = arrivals.take()

    def start(arrival_time, idx):
        nonlocal completion, busy_time
        svc = services.take()
        busy_time += svc
        completion = t + svc
        if idx >= warm:
            waits[idx - warm] = t - arrival_time

    while made < n_all or completion < math.inf or queue:
        if completion <= next_arr or made >= n_all:
            t = completion
            completion = math.inf
            if queue:
                at, idx = queue.popleft() if order == FIFO else queue.pop()
                start(at, idx)
        else:
            t = next_arr
            if completion == math.inf:
                if made >= warm:
                    idle_found += 1
                start(t, made)
            else:
                queue.append((t, made))
            made += 1
            next_arr = arrivals.take() if made < n_all else math.inf

    mean, half = _batch_means_ci(waits)
    return SimResult(
        mean_wait=mean,
        ci_half_width=half,
        ecdf=_ecdf(waits, cfg.ecdf_grid),
        utilization_prefix=(busy_time / t,),
        completed=(n_all,),
        lost=(0,),
        idle_at_arrival=idle_found / cfg.total_arrivals,
        horizon=t,
        total_busy_time=busy_time,
        seed=cfg.seed,
    )


def simulate_priority(sc, cfg):
    """Preemptive-priority queue; higher class interrupts immediately."""
    report = traffic_coefficients(sc)
    if not report.stationary:
        raise StationarityError(
            "scenario not stationary under %s: class %d has rho=%.4g >= 1"
            % (sc.discipline, report.first_overloaded_class,
               report.rho[report.first_overloaded_class - 1]),
            first_overloaded_class=report.first_overloaded_class,
        )
    K = len(sc.classes)
    arr = [_ArrivalStream(_substream(cfg.seed, 0, k), sc.classes[k].lam) for k in range(K)]
    svc = [
        _Stream(_substream(cfg.seed, 1, k),
                (lambda dist: lambda r, n: dist.sample(r, n))(sc.classes[k].service))
        for k in range(K)
    ]
    next_arr = [arr[k].take() for k in range(K)]

    n_all = cfg.total_arrivals + cfg.warmup
    warm = cfg.warmup
    waits = []
    queues = [deque() for _ in range(K)]   # entries: [remaining|None, arrival_t, first_start|None, idx]
    busy = [0.0] * K
    completed = [0] * K
    lost = [0] * K
    t = 0.0
    made = 0
    idle_found = 0
    serving = None  # [class, remaining, arrival_t, first_start, idx]

    def dispatch():
        nonlocal serving
        for k in range(K):
            if queues[k]:
                remaining, at, fs, idx = queues[k].popleft()
                if remaining is None:
                    remaining = svc[k].take()
                if fs is None:
                    fs = t
                    if idx >= warm:
                        waits.append(t - at)
                serving = [k, remaining, at, fs, idx]
                return

    while True:
        na = min(next_arr) if made < n_all else math.inf
        nc = t + serving[1] if serving is not None else math.inf
        if nc == math.inf and na == math.inf:
            break
        if nc <= na:
            # completion first on ties
            k = serving[0]
            busy[k] += serving[1]
            t = nc
            completed[k] += 1
            serving = None
        else:
            if serving is not None:
                serving[1] -= na - t
                busy[serving[0]] += na - t
            t = na
            k = next_arr.index(na)
            next_arr[k] = arr[k].take() if made + 1 < n_all else math.inf
            if serving is None and made >= warm:
                idle_found += 1
            queues[k].append([None, t, None, made])
            made += 1
            if serving is not None and serving[0] > k:
                pk, remaining, at, fs, idx = serving
                if sc.discipline == "resume":
                    queues[pk].appendleft([remaining, at, fs, idx])
                elif sc.discipline == "repeat":
                    queues[pk].appendleft([None, at, fs, idx])
                else:
                    lost[pk] += 1
                serving = None
        if serving is None:
            dispatch()

    waits = np.asarray(waits)
    mean, half = _batch_means_ci(waits)
    total_busy = float(np.sum(busy))
    return SimResult(
        mean_wait=mean,
        ci_half_width=half,
        ecdf=_ecdf(waits, cfg.ecdf_grid),
        utilization_prefix=tuple(float(v) for v in np.cumsum(busy) / t),
        completed=tuple(completed),
        lost=tuple(lost),
        idle_at_arrival=idle_found / cfg.total_arrivals,
        horizon=t,
        total_busy_time=total_busy,
        seed=cfg.seed,
    )
