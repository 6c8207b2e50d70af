"""Cumulative traffic coefficients for the preemptive-priority queue.

Classes are ordered with index 1 = highest priority; class k sees the
cumulative arrival rate sigma_{k-1} of everything that can interrupt it.
Three disciplines are supported for the fate of an interrupted job:

* resume -- it keeps its remaining work: per-class term lambda_k * beta_k1
* loss   -- it is discarded: term (lambda_k/sigma_{k-1}) * (1 - beta_k(sigma_{k-1}))
* repeat -- it restarts with a fresh draw: term
            (lambda_k/sigma_{k-1}) * (1/beta_k(sigma_{k-1}) - 1)

For the top class all three coincide at lambda_1 * beta_11.  The system
is viable while the cumulative coefficient stays below 1.
"""

from dataclasses import dataclass
from typing import Optional, Tuple

from .errors import NumericOverflowError

__all__ = [
    "RESUME",
    "LOSS",
    "REPEAT",
    "DISCIPLINES",
    "PriorityClass",
    "PriorityScenario",
    "TrafficReport",
    "StationarityVerdict",
    "traffic_coefficients",
    "stationarity_verdict",
]

RESUME = "resume"
LOSS = "loss"
REPEAT = "repeat"
DISCIPLINES = (RESUME, LOSS, REPEAT)


@dataclass(frozen=True)
class PriorityClass:
    lam: float              # arrival rate
    service: object         # ServiceDistribution

    def __post_init__(self):
        if not self.lam > 0:
            raise ValueError("arrival rate must be positive, got %r" % (self.lam,))


@dataclass(frozen=True)
class PriorityScenario:
    classes: Tuple[PriorityClass, ...]   # index 0 = highest priority
    discipline: str

    def __post_init__(self):
        if len(self.classes) < 1:
            raise ValueError("scenario needs at least one class")
        if self.discipline not in DISCIPLINES:
            raise ValueError("unknown discipline %r" % (self.discipline,))
        object.__setattr__(self, "classes", tuple(self.classes))


@dataclass(frozen=True)
class TrafficReport:
    discipline: str
    sigma: Tuple[float, ...]        # cumulative arrival rates
    rho: Tuple[float, ...]          # cumulative traffic coefficients
    stationary_flags: Tuple[bool, ...]

    @property
    def stationary(self):
        return all(self.stationary_flags)

    @property
    def first_overloaded_class(self):
        """1-based index of the first class with rho >= 1, or None."""
        for i, ok in enumerate(self.stationary_flags):
            if not ok:
                return i + 1
        return None

    def increments(self):
        """Per-class contributions, derived from the cumulative values."""
        prev = 0.0
        out = []
        for r in self.rho:
            out.append(r - prev)
            prev = r
        return tuple(out)


@dataclass(frozen=True)
class StationarityVerdict:
    stationary: bool
    stationary_prefix: int               # classes 1..m have rho_m < 1
    first_overloaded_class: Optional[int]


def _class_term(cls, discipline, sigma_prev, index):
    """Expected server time consumed per unit time by class `index` (1-based)."""
    if index == 1 or discipline == RESUME:
        return cls.lam * cls.service.moment1()
    beta = cls.service.lst(sigma_prev)
    if discipline == LOSS:
        return (cls.lam / sigma_prev) * (1.0 - beta)
    # repeat-different: mean effective service (1/beta - 1)/sigma_prev
    if beta <= 0.0:
        raise NumericOverflowError(
            "repeat-discipline term for class %d overflows: beta(sigma=%g) underflowed to 0"
            % (index, sigma_prev),
            class_index=index,
        )
    return (cls.lam / sigma_prev) * (1.0 / beta - 1.0)


def traffic_coefficients(sc):
    """Cumulative sigma_k and rho_k for every class of the scenario."""
    sigma = []
    rho = []
    total_rate = 0.0
    total_rho = 0.0
    for i, cls in enumerate(sc.classes, start=1):
        term = _class_term(cls, sc.discipline, total_rate, i)
        total_rate += cls.lam
        total_rho += term
        sigma.append(total_rate)
        rho.append(total_rho)
    return TrafficReport(
        discipline=sc.discipline,
        sigma=tuple(sigma),
        rho=tuple(rho),
        stationary_flags=tuple(r < 1.0 for r in rho),
    )


def stationarity_verdict(report):
    """Largest stationary prefix and the first class that overloads, if any."""
    prefix = 0
    for ok in report.stationary_flags:
        if not ok:
            break
        prefix += 1
    return StationarityVerdict(
        stationary=report.stationary,
        stationary_prefix=prefix,
        first_overloaded_class=report.first_overloaded_class,
    )
