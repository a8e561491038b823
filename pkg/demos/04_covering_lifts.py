"""A local fibration that lifts no invertibility witness.

Two objects joined by inverse isomorphisms; upstairs the endomorphism homs
are contractible groupoids on the integers, downstairs a single object with
automorphism group Z, mapped by the covering.  The functor is a local
fibration and an isofibration, but asking the walking-isomorphism generator
to hit a nontrivial automorphism has no lift: the endpoints force the unique
arrow 0 -> 0 upstairs, which covers 0.
"""

from crx import enriched as en
from crx import lifting as lf
from crx.enriched import CellImage

up, down, F = lf.covering_pair()
diag = lf.fibration_diagnostics(F)
print("local fibration:     ", diag.local_fibration.value)
print("isofibration:        ", diag.isofibration.value)
print("acyclic fibration:   ", diag.acyclic_fibration.value)
print("DK weak equivalence: ", diag.dk_weak_equivalence.value)

interval = en.interval()
bottom = en.EnrichedFunctor(
    interval, down, {"0": "0", "1": "1"},
    {"f": CellImage.of_symbol(0, ("pt", "0", "1")),
     "g": CellImage.of_symbol(0, ("pt", "1", "0")),
     "l1": CellImage.of_symbol(1, ("grp", 1)),
     "l2": CellImage.of_symbol(1, ("grp", 1))},
    name="bottom")
unitf = lf.unit_into_interval()
top = en.EnrichedFunctor(unitf.source, up, {"0": "0"}, {}, name="top")
out = lf.search_lift(lf.LiftingSquare(i=unitf, f=F, top=top, bottom=bottom))
print("\nlift of the interval against the covering:", out.status)
print(out.obstruction)

col = lf.interval_collapse()
th = lf.theta()
out2 = lf.search_lift(lf.LiftingSquare(i=th, f=col, top=th, bottom=col))
print("\nlift of theta against the interval collapse:", out2.status)
