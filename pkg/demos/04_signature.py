# coding: utf-8

# # Reading k, j, l off a known series
#
# The reverse problem: given a series that sums to 1/pi^m, recover the
# numbers that label it.  Normalizing the jet of the left-hand side by
# P_X (uz)^X leaves a jet whose even components are k, j and l.

import mpmath
from fractions import Fraction as F

from ramanujan_jets import SeriesFamily, extract_signature, make_context

ctx = make_context(256)

# ## A 1/pi^3 series
#
# sum_n (1/2)_n^7 / n!^7 (1 + 14n + 76n^2 + 168n^3) / 32 / 64^n = 1/pi^3

sig = extract_signature(SeriesFamily.f76(), F(1, 64), 1, [F(1, 32), F(14, 32), F(76, 32), F(168, 32)], ctx)
print("k =", mpmath.nstr(sig.k, 25))
print("j =", mpmath.nstr(sig.j, 25))
print("l =", mpmath.nstr(sig.l, 25))
print("odd components:", {n: mpmath.nstr(v, 3) for n, v in sig.odd.items()})

# ## A 1/pi^2 series
#
# The k = 1 instance from the solver demo.

sig = extract_signature(SeriesFamily.f54("1/2", "1/2"), F(-1, 4), -1, [F(1, 8), 1, F(5, 2)], ctx)
print(sig.to_json(20))
