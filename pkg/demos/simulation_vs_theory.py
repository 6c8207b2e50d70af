"""Seeded discrete-event simulation cross-checked against the formulas.

One run each: an M|M|1 queue under FIFO and LIFO (same mean wait, by
work conservation), and a five-class preemptive-loss priority queue
whose long-run utilization prefixes should land on the analytic rho_k.
Everything is driven by one seed, so reruns are bit-identical.
"""

import math

from quayside import (
    Exponential,
    PriorityClass,
    PriorityScenario,
    SimConfig,
    simulate_mg1,
    simulate_priority,
    traffic_coefficients,
)

LAMBDAS = (0.3, 0.2, 0.4, 0.5, 0.8)
RATES = (7, 3, 4, 2, 5)


def main():
    d, a = Exponential(5), 4.0
    cfg = SimConfig(seed=2016, total_arrivals=2 * 10**5, ecdf_grid=(0.0, 1.0, 3.0))

    fifo = simulate_mg1(d, a, "fifo", cfg)
    lifo = simulate_mg1(d, a, "lifo", cfg)
    print("M|M|1, a=4, b=5, %d arrivals, seed %d" % (cfg.total_arrivals, cfg.seed))
    print("  analytic mean wait  0.8")
    print("  fifo  %.4f +/- %.4f" % (fifo.mean_wait, fifo.ci_half_width))
    print("  lifo  %.4f +/- %.4f" % (lifo.mean_wait, lifo.ci_half_width))
    print("  W(3): simulated %.4f   closed form %.4f"
          % (fifo.ecdf[2], 1 - 0.8 * math.exp(-3)))
    print("  idle at arrival %.4f  (PASTA: 1 - rho = 0.2)" % fifo.idle_at_arrival)

    sc = PriorityScenario(
        tuple(PriorityClass(l, Exponential(b)) for l, b in zip(LAMBDAS, RATES)),
        "loss",
    )
    exact = traffic_coefficients(sc).rho
    res = simulate_priority(sc, cfg)
    print("\nfive-class preemptive loss")
    print("  k  simulated  analytic rho_k")
    for k, (u, r) in enumerate(zip(res.utilization_prefix, exact), 1):
        print("  %d  %.4f     %.4f" % (k, u, r))
    print("  jobs lost to preemption per class:", res.lost)


if __name__ == "__main__":
    main()
