"""Graded Yang-Mills over the 3|2 orthosymplectic superalgebra: odd
gauge fields, even ghosts for the odd directions, and the graded BRST
extension solving the master equation.

Run:  python demos/04_graded_yang_mills.py
"""

from gvc.presets import osp12_algebra, preset_model

alg = osp12_algebra()
print("Superalgebra basis and parities:")
for lab, par in zip(alg.labels, alg.parities):
    print("  %s : %s" % (lab, "odd" if par else "even"))
print("Nonzero canonical brackets (r, i, j, value):")
for row in alg.stored_constants():
    print("  c^%s_{%s %s} = %s" % (alg.labels[row[0]], alg.labels[row[1]],
                                   alg.labels[row[2]], row[3]))

model = preset_model("osp12")
print()
print("Roster gradings flip against the algebra parity:")
for r in range(alg.dim):
    print("  a%d parity %d | ghost %s parity %d" % (
        r + 1, model.field[r][0].parity,
        model.ghost[r].name, model.ghost[r].parity))

print()
print("A strength with two odd directions keeps its symmetric-constant")
print("quadratic term (odd fields anticommute against it):")
f_idx = alg.index("f")
print("  F[f]_{01} =", model.strength(f_idx, 0, 1).render())

print()
print("Verification report:")
print(model.full_verification(deterministic=True).render())
