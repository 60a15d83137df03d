"""Immutable exact tables built once at import."""
from fractions import Fraction
from math import comb, factorial

BERNOULLI_CAP = 64
EULER_CAP = 60


def _bernoulli_table(cap):
    # sum_{k=0}^{m} C(m+1, k) B_k = 0
    table = [Fraction(1)]
    for m in range(1, cap + 1):
        acc = sum(comb(m + 1, k) * table[k] for k in range(m))
        table.append(-acc / (m + 1))
    return tuple(table)


def _euler_table(cap):
    # sum_{k=0}^{n/2} C(n, 2k) E_{2k} = 0 for even n > 0
    table = {0: 1}
    for n in range(2, cap + 1, 2):
        table[n] = -sum(comb(n, 2 * k) * table[2 * k] for k in range(n // 2))
    return table


BERNOULLI = _bernoulli_table(BERNOULLI_CAP)
EULER = _euler_table(EULER_CAP)

# B_{2k} / (2k)! as floats, k = 0..32
B2K_OVER_FACT = tuple(float(BERNOULLI[2 * k] / factorial(2 * k)) for k in range(BERNOULLI_CAP // 2 + 1))
