"""crx: exact computational algebra for finitely presented crossed complexes.

Subpackages by concern:

- ``words`` / ``intmat``: free-groupoid words and exact integer linear algebra
  (Smith normal form is the engine behind every abelian invariant).
- ``complex``: the central presentation type, validation, standard cells,
  pushouts, and stratified element equality.
- ``monoidal``: the tensor and cartesian products, the collapse map and its
  kernel, pushout-products, and the interval-homotopy machinery.
- ``invariants``: pi0 / pi1 / pi_n, weak-equivalence and truncation checkers.
- ``enriched`` / ``strictify``: categories enriched in crossed complexes over
  either product, lifting diagnostics, and the global strictification.
- ``dga`` / ``simplicial``: the one-object 1-reduced pipeline (tensor
  algebras, cofibrant replacement, indecomposables, towers, the loop-space
  comparison) and finite simplicial sets.
- ``formats`` / ``cli``: the .crx / .encat / .dga / .ssx formats and the
  command-line surface.
"""

from .words import (
    ActionedTerm,
    CompositionError,
    CrxWord,
    DomainError,
    GeneratorSymbol,
    PathWord,
    UnknownGenerator,
)
from .intmat import AbelianGroup, SmithDecomposition, cokernel_structure, smith_normal_form
from .complex import (
    CrxMorphism,
    CrxPresentation,
    Regime,
    Verdict,
    coproduct,
    disk,
    empty,
    find_isomorphism,
    gen_word,
    globe,
    j1,
    point,
    pushout,
    sphere,
    standard,
    validate,
)

__version__ = "0.1.0"
