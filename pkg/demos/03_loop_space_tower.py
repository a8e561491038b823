"""The word-length tower and the loop-space homology comparison.

Reduced chains of the 2-sphere generate a tensor algebra whose homology is
Z in every even degree: the homology of the based loops on the 3-sphere.
The word-length filtration has fibers the tensor powers, and its stages
stabilize below degree 2k - 2.  Cofibrant replacement of the truncated
polynomial ring exhibits the first non-linear attachment in degree 2n + 1.
"""

from crx import dga
from crx import simplicial as sx

s2 = sx.sphere_ssx(2)
ch = s2.reduced_chains()
print("Reduced chains of the 2-sphere:", {d: b for d, b in ch.bases.items() if b})

rep = dga.james_compare(ch.bases, ch.diff, 8)
print("\nTensor-algebra homology vs summed tensor-power homology:")
for d in sorted(rep.degrees):
    left, right = rep.degrees[d]
    print(f"  degree {d}: {left} vs {right}  {'ok' if rep.equal[d] else 'MISMATCH'}")

t = dga.tensor_algebra([("x", 2)])
print("\nTower of T(x), |x| = 2:")
for stage in dga.tower(t, 4, 12):
    print(f"  stage {stage.k}: ranks {stage.ranks}, iso below degree {stage.iso_below}")
print("tower checks:", dga.tower_checks(t, 4, 12) or "all hold")

for n in (2, 3):
    a = dga.truncated_polynomial_dga(n)
    repl, report = dga.cofibrant_replacement(a, 2 * n + 4)
    ind = dga.indecomposables(repl.dga)
    print(f"\nZ<x>/x^2 with |x| = {n}: attachments {report.generators}")
    print(f"  quasi-isomorphism verified: {report.ok}")
    print(f"  indecomposables have homology {ind.homology(2 * n + 1)} "
          f"in degree {2 * n + 1}")
