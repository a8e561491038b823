"""Global strictification of the three-object composite.

The composite of two suspended intervals has a tensor-square hom between its
outer objects.  Strictifying reinterprets the same cells cartesianly; the
hom becomes the commuting square, and the kernel log records the collapsed
composite.  The quotient description is recomputed independently and must
agree.
"""

from crx import complex as cx
from crx import enriched as en
from crx import strictify as st

p11 = en.p11()
print("P has objects", p11.objects, "and cells", list(p11.cells))

rh = en.realize_hom(p11, "0", "2", 4, 4)
print("\nhom(0,2) of the tensor-flavored P:")
for d in sorted(rh.presentation.gens):
    for g in rh.presentation.gens_of(d):
        print(f"  deg {d}: {g.name}")

res = st.stglo(p11)
rh2 = en.realize_hom(res.output, "0", "2", 4, 4)
print("\nhom(0,2) after strictification:",
      {d: len(rh2.presentation.gens_of(d)) for d in sorted(rh2.presentation.gens)})
print("kernel log:", {f"{x}->{y}": w for (x, y), w in res.kernel_log.items()})

from crx import monoidal as mo
cp = mo.cartesian(cx.disk(1), cx.disk(1))
iso = cx.find_isomorphism(rh2.presentation, cp.presentation)
print("strictified hom is the cartesian square:", iso is not None)

print("\nDual-path agreement (reinterpretation vs explicit quotient):")
for a in st.stglo_agreement(p11, max_len=4, max_deg=3):
    print(f"  hom {a.hom}: {a.verdict.value}")
