# coding: utf-8

# # 1/pi series from theta functions
#
# For the 3F2 family with all parameters 1/2, the solution at each k has a
# closed form in Jacobi theta functions at the nome q = exp(-pi sqrt(k+1)).

import mpmath

from ramanujan_jets import closed_form_3f2_half, make_context, solve_3f2, theta

ctx = make_context(256)

# ## Theta values and their identities
#
# The Jacobi identity theta3^4 = theta2^4 + theta4^4 holds to working precision.

th = theta(mpmath.mpf("0.01"), ctx)
print("theta3 =", mpmath.nstr(th.theta3, 30))
print("identity residual:", mpmath.nstr(th.identity_residual(), 3))

# ## Solver against closed form
#
# The solver never looks at theta functions.  It works from the series alone.

for k in (1, 2, 3):
    sol = solve_3f2("1/2", k, 1, ctx)
    cf = closed_form_3f2_half(k, ctx)
    with ctx.workprec():
        dz = abs(sol.z - cf["z"])
    print(f"k={k}: z={sol.exact('z') or mpmath.nstr(sol.z, 15)}  a={sol.exact('a')}  "
          f"b={sol.exact('b')}  |z - theta z| = {mpmath.nstr(dz, 3)}")

# k = 2 is the classical series with z = 1/4.
