"""Closed forms for the gamma-ratio series.

The sequence a_n = [Gamma(n)/Gamma(n+1/2)]^2/(n+1/2) telescopes:
s_n = 4 n^2 a_n - 3 a_1, so the infinite sum is exactly 4 - 8/pi.
The two-parameter generalization b_n(m, k) closes the same way.
"""

import math

from wallisqm.wallis_series import (GeneralizedParams, b_seq, sum_a_direct,
                                    sum_a_recurrence, sum_b_closed,
                                    sum_b_partial)

limit = 4.0 - 8.0 / math.pi
print(f"target: 4 - 8/pi = {limit:.15f}\n")
print(f"{'N':>6}  {'telescoped s_N':<20} {'direct sum':<20} {'remainder':<10}")
for n in (1, 10, 100, 1000, 10_000):
    ps = sum_a_recurrence(n)
    print(f"{n:>6}  {ps.value:<20.15f} {sum_a_direct(n):<20.15f} {ps.tail_bound:<10.2e}")

# the generalized sum, for a few (m, k) shifts
print(f"\n{'(m, k)':>12}  {'closed sum':<22} {'partial N=2000':<22} {'tail':<10}")
for m, k in ((0.0, 0.0), (0.5, 0.5), (1.0, 0.0), (-0.4, 2.3)):
    p = GeneralizedParams(m, k)
    closed = sum_b_closed(p)
    part = sum_b_partial(p, 2000)
    print(f"({m:>4}, {k:>4})  {closed:<22.15f} {part.value:<22.15f} {part.tail_bound:<10.2e}")

# special values worth knowing by heart
print("\nsum at (m, k) = (0.5, 0.5) is exactly 4 - pi:",
      abs(sum_b_closed(GeneralizedParams(0.5, 0.5)) - (4.0 - math.pi)))
print("first term b_1(0.5, 0.5) is pi/8:",
      abs(b_seq(GeneralizedParams(0.5, 0.5), 1) - math.pi / 8.0))
