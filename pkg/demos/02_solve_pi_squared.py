# coding: utf-8

# # Solving for 1/pi^2 series
#
# Give the solver a family and a value of k.  It finds z, then a, b and c,
# so that
#
#     sum_n P_n(z) (a + b n + c n^2) z^n = 1/pi^2
#
# and then tries to recognize each number as a small rational or quadratic
# irrational.

import mpmath

from ramanujan_jets import make_context, scalar_series_sum, solve_5f4, SeriesFamily

ctx = make_context(256)

# ## k = 1
#
# The root lies on the negative real axis, so u = -1.

sol = solve_5f4("1/2", "1/2", 1, -1, ctx)
for name in ("tau2", "j", "z", "a", "b", "c"):
    print(f"{name:>5} = {sol.exact(name)}")
print("largest jet residual:", mpmath.nstr(sol.max_residual(), 3))

# The recognized numbers give a series you can sum directly.

with ctx.workprec():
    family = SeriesFamily.f54("1/2", "1/2")
    total = scalar_series_sum(family, mpmath.mpf(-1) / 4, (mpmath.mpf(1) / 8, 1, mpmath.mpf(5) / 2), ctx)
    print("sum - 1/pi^2 =", mpmath.nstr(total - 1 / mpmath.pi ** 2, 3))

# ## k = 5
#
# A larger k pushes the nome closer to zero and the series converges faster.

sol = solve_5f4("1/2", "1/2", 5, -1, ctx)
print({name: sol.exact(name) for name in ("tau2", "j", "z", "a", "b", "c")})
print("q =", mpmath.nstr(sol.q, 6))

# ## Full record
#
# ``to_json`` gives every value as a decimal string plus its exact form.

print(sol.to_json(20)["z"])
