"""The variational bicomplex at work: differentials, field equations,
Lepage forms and Noether currents for a free field.

Run:  python demos/02_variational_bicomplex.py
"""

from fractions import Fraction

from gvc import (
    ContactDerivation,
    Context,
    EVEN,
    Lagrangian,
    d_h,
    d_v,
    euler_lagrange,
    interior,
    lepage_equivalent,
    lie_derivative,
    noether_current,
    variational_delta,
)
from gvc.bicomplex import Form

ctx = Context(1)
ctx.add_generator("s", "even-field", EVEN)

print("The two differentials are nilpotent and anticommute:")
phi = Form.theta(ctx, "s", (0,)).times_poly(ctx.var("s"))
print("  phi          =", phi.render())
print("  d_H d_H phi  =", d_h(d_h(phi)).render())
print("  d_V d_V phi  =", d_v(d_v(phi)).render())
print("  {d_H, d_V}   =", (d_h(d_v(phi)) + d_v(d_h(phi))).render())

print()
print("Free field density L = 1/2 (s;0)^2 on one dimension:")
L = Lagrangian(Fraction(1, 2) * ctx.var("s", 0) * ctx.var("s", 0))
el = euler_lagrange(L)
print("  field equation      ->", el.component("s").render())
print("  delta L             ->", variational_delta(L.form).render())
print("  two routes agree    ->", variational_delta(L.form) == el.as_form())

print()
print("The Lepage form stores the momentum next to the density:")
print("  Xi_L =", lepage_equivalent(L).render())

print()
print("The constant shift is an exact symmetry; its current is conserved")
print("off shell up to the field equation:")
shift = ContactDerivation(ctx, {"s": ctx.one()}, EVEN)
print("  Lie_shift L =", lie_derivative(shift, L.form).render())
J = noether_current(shift, L)
print("  current     =", J.render())
residual = d_h(J) - interior(shift, variational_delta(L.form))
print("  d_H J - shift | delta L =", residual.render())
