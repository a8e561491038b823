"""The weakly and strictly commuting squares.

Tensor the interval with itself: four edges and one free 2-cell whose
boundary runs once around the square.  The cartesian product is the same
square with the commutativity imposed and a diagonal instead of a 2-cell.
The collapse map between them kills exactly the 2-cell.
"""

from crx import complex as cx
from crx import monoidal as mo

d1 = cx.disk(1)
print("The interval:", d1.objects, [g.name for g in d1.gens_of(1)])

res = mo.collapse(d1, d1)
square = res.tensor.presentation
print("\nTensor square generators:")
for d in sorted(square.gens):
    for g in square.gens_of(d):
        extra = f"  boundary {g.boundary}" if g.boundary else \
            f"  {g.source} -> {g.target}"
        print(f"  deg {d}: {g.name}{extra}")

print("\nValidation:", "ok" if cx.validate(square).ok else "BROKEN")

cart = res.cartesian.presentation
print("\nCartesian square relations:")
for r in cart.relations:
    print(f"  {r.lhs} = {r.rhs}")

print("\nCollapse kills:", res.killed)
print("Kernel generators in degree 1:",
      [str(w) for w in mo.kernel_generators(d1, d1, 1)])

from crx import invariants as inv
rep = inv.is_weak_equivalence(res.morphism)
print("\nCollapse is a weak equivalence:", rep.yes)
