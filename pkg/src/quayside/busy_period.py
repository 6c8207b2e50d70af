"""Busy-period transform via the Kendall functional equation.

The busy-period LST pi(s) solves pi = beta(s + a - a*pi) where beta is
the service-time transform and a the Poisson arrival rate.  The map is
monotone increasing in pi, so plain iteration from 0 climbs to the least
fixed point, which is the probabilistically meaningful branch (it stays
correct even when the queue is overloaded).
"""

from dataclasses import dataclass

from .errors import ConvergenceError

__all__ = ["BusyPeriodSolution", "busy_period_lst"]

DEFAULT_TOL = 1e-12
DEFAULT_MAX_ITER = 10**6


@dataclass(frozen=True)
class BusyPeriodSolution:
    value: float      # pi(s), in [0, 1]
    iterations: int
    residual: float   # |pi - beta(s + a - a*pi)|


def busy_period_lst(d, a, s, tol=DEFAULT_TOL, max_iter=DEFAULT_MAX_ITER):
    """Least fixed point of pi -> lst(d, s + a - a*pi) in [0, 1].

    Raises ConvergenceError (carrying the last iterate and residual) if
    the residual is still above `tol` after `max_iter` iterations.
    """
    if s <= 0:
        raise ValueError("s must be positive, got %r" % (s,))
    if a <= 0:
        raise ValueError("arrival rate must be positive, got %r" % (a,))
    if tol <= 0:
        raise ValueError("tol must be positive, got %r" % (tol,))

    pi = 0.0
    for it in range(1, max_iter + 1):
        arg = s + a - a * pi
        # pi <= 1 keeps the argument >= s > 0 throughout
        assert arg > 0.0
        nxt = d.lst(arg)
        if nxt < pi:
            # monotone iterates can only stall on floating-point noise
            nxt = pi
        residual = abs(nxt - d.lst(s + a - a * nxt))
        if residual <= tol:
            return BusyPeriodSolution(value=nxt, iterations=it, residual=residual)
        pi = nxt
    raise ConvergenceError(
        "Kendall iteration did not reach tol=%g in %d iterations (residual %g)"
        % (tol, max_iter, residual),
        last_value=pi,
        residual=residual,
        iterations=max_iter,
    )
