"""Waiting-time transforms and distributions for a single-server queue.

For an M|M|1 queue (Poisson arrivals at rate a, exponential service at
rate b) the FIFO waiting-time distribution has the closed form
W(x) = 1 - rho * exp(-(b - a) x) with rho = a/b, which gives an exact
yardstick for the numerical pipeline: evaluate the transform w(s),
divide by s, invert.
"""

import math

from quayside import (
    Exponential,
    InversionSpec,
    Uniform,
    fifo_wait_lst,
    lifo_wait_lst,
    wait_cdf,
)


def main():
    d, a = Exponential(5), 4.0
    rho = a * d.moment1()
    print("M|M|1, a=4, b=5, rho=%.2f" % rho)

    print("\ntransform values w(s)")
    for s in (0.5, 1.0, 2.0, 5.0):
        fifo = fifo_wait_lst(d, a, s).value
        lifo = lifo_wait_lst(d, a, s).value
        print("  s=%-4g fifo %.6f   lifo %.6f" % (s, fifo, lifo))

    spec = InversionSpec(order=18)
    print("\nFIFO W(x) recovered by inversion vs closed form")
    for x in (0.5, 1.0, 2.0, 3.0):
        got = wait_cdf("fifo", d, a, x, spec).value
        closed = 1 - rho * math.exp(-(5 - 4) * x)
        print("  x=%-4g inverted %.6f   closed %.6f   diff %.1e"
              % (x, got, closed, abs(got - closed)))

    print("\nLIFO W(x) (same mean wait, heavier tail)")
    for x in (0.5, 1.0, 2.0, 3.0):
        print("  x=%-4g %.6f" % (x, wait_cdf("lifo", d, a, x, spec).value))

    print("\nuniform service, Uniform(0.05, 0.2), a=4")
    du = Uniform(0.05, 0.2)
    for x in (0.5, 1.0, 2.0):
        print("  x=%-4g fifo %.6f" % (x, wait_cdf("fifo", du, a, x, spec).value))


if __name__ == "__main__":
    main()
