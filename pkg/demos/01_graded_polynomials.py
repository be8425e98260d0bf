"""Graded polynomial arithmetic: normal ordering, Koszul signs and
graded derivatives.

Run:  python demos/01_graded_polynomials.py
"""

from gvc import Context, EVEN, ODD, normalize

ctx = Context(2)
for name in ("c1", "c2", "c3"):
    ctx.add_generator(name, "odd-field", ODD)
ctx.add_generator("s", "even-field", EVEN)

print("Anticommuting variables square to zero and order themselves:")
print("  c1*c1      ->", normalize(ctx, 1, [ctx.jet("c1"), ctx.jet("c1")]).render())
print("  c2*c1      ->", normalize(ctx, 1, [ctx.jet("c2"), ctx.jet("c1")]).render())
print("  c3*c1*c2   ->", normalize(ctx, 1, [ctx.jet("c3"), ctx.jet("c1"), ctx.jet("c2")]).render())

print()
print("Products follow the sign rule a*b = (-1)^{[a][b]} b*a:")
a, b = ctx.var("c1"), ctx.var("c2")
print("  c1*c2      ->", (a * b).render())
print("  c2*c1      ->", (b * a).render())
u = ctx.one() + a * b
print("  (1+c1c2)^2 ->", (u * u).render())

print()
print("Left and right derivatives differ by the position they peel from:")
p = a * b
print("  d_left/dc2 (c1 c2)  ->", p.deriv(ctx.jet("c2")).render())
print("  d_right/dc2 (c1 c2) ->", p.deriv(ctx.jet("c2"), side="right").render())

print()
print("Jet variables carry symmetric multi-indices; even powers are free:")
s = ctx.var("s")
q = s * s * ctx.var("s", 0, 1)
print("  s^2 * s;01          ->", q.render())
print("  d/ds of it          ->", q.deriv(ctx.jet("s")).render())
