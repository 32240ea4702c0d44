# coding: utf-8

# # Mirror map and the T-series
#
# Every family of hypergeometric series carries a mirror map z(q): the
# logarithmic solutions of its differential equation, divided by the
# holomorphic one, give a canonical coordinate q.  The package builds these
# expansions with exact rational arithmetic.

from ramanujan_jets import SeriesFamily, mirror_map, picard_fuchs_residual, t_u_k_series

family = SeriesFamily.f54("1/2", "1/2")
print(family.label)

# ## The mirror map
#
# ``exp_h`` is exp(H2) as a series in z; ``z_of_q`` is its inverse.
# Rescaling by powers of 1024 makes every coefficient an integer.

qe = mirror_map(family, 6)
print("e^H2 scaled:", [str(qe.exp_h[n] * 1024 ** n) for n in range(5)])
print("z(q)/1024:  ", [str(c / 1024) for c in qe.z_of_q.coeffs[1:7]])

# ## T and U
#
# T(q) and U(q) are the two q-series that pin down a 1/pi^2 formula.
# U must equal q dT/dq, and with exact fractions the check is equality.

qe = t_u_k_series(family, 8)
print("T n^3/160:", [str(qe.T[n] * n ** 3 / 160) for n in range(1, 7)])
print("U == q dT/dq:", qe.U == qe.U_from_T)

# ## The differential equation
#
# The holomorphic series is annihilated by its differential operator.
# The residual through z^15 is an exact zero.

print("operator residual:", picard_fuchs_residual(family, 15))
print("7F6 operator residual:", picard_fuchs_residual(SeriesFamily.f76(), 15))
