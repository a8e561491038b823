"""Randomized stress tests for the tensor boundary calculus.

The dd = 0 validator is the oracle that pinned every sign and factor-order
convention; here it runs over randomized presentations with multi-letter
boundaries and nontrivial actors, and over morphism functoriality."""

import random

import pytest

from crx import complex as cx
from crx import monoidal as mo
from crx.complex import CrxMorphism, CrxPresentation, Verdict, validate
from crx.words import ActionedTerm, CrxWord, PathWord


def random_complex(rng: random.Random, tag: str) -> CrxPresentation:
    """A random valid free presentation with loops, multi-letter degree-2
    boundaries, and degree-3 generators whose boundaries are transported
    cancelling pairs (so dd = 0 holds by construction)."""
    c = CrxPresentation(f"R{tag}", objects=("p", "q")[: rng.randint(1, 2)])
    n_edges = rng.randint(1, 3)
    edges = []
    for i in range(n_edges):
        src = rng.choice(c.objects)
        tgt = rng.choice(c.objects)
        name = f"e{i}"
        c.add_gen1(name, src, tgt)
        edges.append((name, src, tgt))

    def random_loop(at: str, max_len=4):
        for _attempt in range(30):
            letters = []
            cur = at
            for _ in range(rng.randint(1, max_len)):
                options = [(nm, 1, s, t) for nm, s, t in edges if s == cur]
                options += [(nm, -1, t, s) for nm, s, t in edges if t == cur]
                if not options:
                    break
                nm, sgn, _a, b = rng.choice(options)
                letters.append((nm, sgn))
                cur = b
            if cur == at and letters:
                try:
                    return c.path(letters)
                except Exception:
                    continue
        return PathWord.identity(at)

    n2 = rng.randint(1, 2)
    deg2 = []
    for i in range(n2):
        base = rng.choice(c.objects)
        c.add_gen(f"v{i}", 2, base, CrxWord.of_path(random_loop(base)))
        deg2.append((f"v{i}", base))
    if rng.random() < 0.7 and deg2:
        nm, base = rng.choice(deg2)
        actor = random_loop(base, 2)
        t1 = ActionedTerm(nm, 1, actor)
        t2 = ActionedTerm(nm, -1, actor)
        c.add_gen("w0", 3, actor.start,
                  CrxWord.of_terms(2, [t1, t2], actor.start))
    return c


@pytest.mark.parametrize("seed", range(24))
def test_random_products_satisfy_dd_zero(seed):
    rng = random.Random(1000 + seed)
    a = random_complex(rng, "a")
    b = random_complex(rng, "b")
    assert validate(a).ok and validate(b).ok
    for build in (mo.tensor, mo.cartesian):
        prod = build(a, b, bound=6)
        rep = validate(prod.presentation)
        assert rep.ok, (seed, build.__name__, rep.failures()[:3])


@pytest.mark.parametrize("seed", range(8))
def test_product_map_functoriality(seed):
    """f (x) g must be a morphism: boundaries commute on every generator."""
    rng = random.Random(2000 + seed)
    g2, d2 = cx.globe(2), cx.disk(2)
    # a morphism G2 -> D2: both 1-cells to the loop, the 2-cell to the
    # trivial element (boundary u v^-1 maps to u u^-1 = id = d(identity))
    u_loop = CrxWord.of_path(PathWord((("u", 1),), "p", "p"))
    f = CrxMorphism(
        g2, d2, {"0": "p", "1": "p"},
        {(1, "u1"): u_loop, (1, "v1"): u_loop,
         (2, "w"): CrxWord.identity(2, "p")},
        name="fold",
    )
    ok, fails, _ = f.check()
    assert ok, fails
    g = CrxMorphism.identity(random_complex(rng, "t"))
    for flavor in ("tensor", "cartesian"):
        mor, _src, _tgt = mo.product_map(f, g, flavor, bound=5)
        ok, fails, obl = mor.check()
        assert ok, (seed, flavor, fails[:3])


def test_triple_tensor_bracketings_agree():
    d1 = cx.disk(1)
    left = mo.tensor(mo.tensor(d1, d1).presentation, d1, bound=6).presentation
    right = mo.tensor(d1, mo.tensor(d1, d1).presentation, bound=6).presentation
    assert left.gen_counts() == right.gen_counts() == {0: 8, 1: 12, 2: 6, 3: 1}
    assert validate(left).ok and validate(right).ok
    # both bracketings are contractible cubes
    from crx import invariants as inv

    for p in (left, right):
        x = p.objects[0]
        assert inv.pi1(p, x).is_trivial
        for n in (2, 3):
            r = inv.pi_n(p, x, n)
            assert r.decided and r.group.is_trivial()


def test_unit_laws_after_randomization():
    rng = random.Random(31)
    for k in range(6):
        c = random_complex(rng, str(k))
        t = mo.tensor(cx.point(), c)
        assert t.presentation.gen_counts() == c.gen_counts()
        iso = cx.find_isomorphism(t.presentation, c)
        assert iso is not None, f"unit law failed on seed {k}"
