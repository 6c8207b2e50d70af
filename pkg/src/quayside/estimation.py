"""Method-of-moments estimators for arrival and service parameters.

Observation files are plain text: one nonnegative number per line,
blank lines and `#` comments ignored.  Whether arrival observations are
per-period counts or interarrival times is up to the user; the estimator
is the sample mean either way, only its interpretation changes.
"""

from dataclasses import dataclass
from typing import Tuple

__all__ = [
    "ObservationSample",
    "empirical_moment",
    "estimate_arrival_rate",
    "estimate_service_rate",
    "load_observations",
]

ARRIVALS = "arrival_counts_or_interarrivals"
SERVICE = "service_durations"


@dataclass(frozen=True)
class ObservationSample:
    values: Tuple[float, ...]
    kind: str = ARRIVALS

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(float(v) for v in self.values))
        if len(self.values) == 0:
            raise ValueError("observation sample must not be empty")
        for v in self.values:
            if not (v >= 0) or v != v or v == float("inf"):
                raise ValueError("observations must be finite and >= 0, got %r" % (v,))


def empirical_moment(sample, k):
    """Empirical moment of order k: mean of X_i^k."""
    if k < 1:
        raise ValueError("moment order must be >= 1, got %r" % (k,))
    return sum(v**k for v in sample.values) / len(sample.values)


def estimate_arrival_rate(sample):
    """Sample mean; the unbiased moment estimator of the Poisson rate."""
    return empirical_moment(sample, 1)


def estimate_service_rate(sample):
    """Exponential rate b = 1 / sample mean.

    Note 1/mean is biased for small n; no correction is applied, the
    estimator is used exactly as defined.
    """
    mean = empirical_moment(sample, 1)
    if mean <= 0:
        raise ValueError("all-zero service sample: rate estimate is degenerate")
    return 1.0 / mean


def load_observations(path, kind=ARRIVALS):
    """Read a one-number-per-line observation file."""
    values = []
    with open(path) as fh:
        for lineno, line in enumerate(fh, start=1):
            text = line.split("#", 1)[0].strip()
            if not text:
                continue
            try:
                values.append(float(text))
            except ValueError:
                raise ValueError("%s:%d: not a number: %r" % (path, lineno, text))
    return ObservationSample(tuple(values), kind=kind)
