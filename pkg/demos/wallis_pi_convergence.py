"""How fast the Wallis product closes in on pi.

Doubling the number of factors halves the error: the partial product P_n
sits inside (pi/2)(1 - 1/(4n+2)) < P_n < pi/2, so 2*P_n approximates pi
with an error below pi/(4n+2).
"""

import math

from wallisqm.wallis_series import scaled_a, wallis_partial_product

print(f"{'n':>8}  {'2*P_n':<20} {'pi - 2*P_n':<12} {'envelope pi/(4n+2)':<20}")
for n in (1, 10, 100, 1000, 10_000, 100_000, 1_000_000):
    approx = 2.0 * wallis_partial_product(n)
    err = math.pi - approx
    env = math.pi / (4.0 * n + 2.0)
    print(f"{n:>8}  {approx:<20.15f} {err:<12.3e} {env:<20.3e}")

# The same numbers fall out of the scaled gamma-ratio sequence: n^2 a_n is
# exactly (2/pi) P_n, so the hydrogen-atom energy ratio *is* the Wallis
# product in disguise.
print("\nmax |n^2 a_n - (2/pi) P_n| over n <= 2000:",
      max(abs(scaled_a(n) - 2.0 / math.pi * wallis_partial_product(n))
          for n in range(1, 2001)))
