"""Building algebras and modules, and measuring Hom spaces.

Everything is exact arithmetic over a prime field GF(p): algebras are given
by structure constants (or presented by a quiver with monomial relations),
modules by action tensors, and every question reduces to integer linear
algebra mod p.
"""

from homres import (
    QuiverPresentation,
    from_quiver,
    direct_sum,
    hom_basis,
    is_isomorphic,
    regular_module,
    simple_modules,
)

# ---------------------------------------------------------------------------
# The dual numbers GF(2)[x]/(x^2): one vertex, one loop, relation x^2 = 0.
# ---------------------------------------------------------------------------
dual = from_quiver(QuiverPresentation(vertices=1, arrows=[(0, 0)],
                                      relations=[(0, 0)]), p=2)
print("dual numbers: dim =", dual.dim, "basis =", dual.labels)

reg = regular_module(dual)           # A as a left module over itself
(k,) = simple_modules(dual)          # the unique simple, A/(x)
print("regular module dim:", reg.dim, "| simple module dim:", k.dim)

# Hom spaces are computed exactly as intertwiner kernels.
print("dim Hom(A, A) =", len(hom_basis(reg, reg)))
print("dim Hom(A, k) =", len(hom_basis(reg, k)))
print("dim Hom(k, A) =", len(hom_basis(k, reg)), "(the socle embedding)")

# Direct sums come with injections/projections; isomorphism testing is exact
# and three-valued (True / False / UNDECIDED beyond the search cap).
m = direct_sum([reg, k]).module
print("M = A + k has dim", m.dim)
print("M iso to A + k again?", is_isomorphic(m, direct_sum([reg, k]).module))
print("M iso to k^3?", is_isomorphic(m, direct_sum([k, k, k]).module))

# ---------------------------------------------------------------------------
# A hereditary example: the two-vertex line quiver 0 -> 1 over GF(2).
# ---------------------------------------------------------------------------
line = from_quiver(QuiverPresentation(vertices=2, arrows=[(0, 1)],
                                      relations=[]), p=2)
print("\npath algebra of 0 -> 1: dim =", line.dim, "basis =", line.labels)
s0, s1 = simple_modules(line)
print("simples: dims", s0.dim, "and", s1.dim)
print("dim Hom(S0, S1) =", len(hom_basis(s0, s1)), "(different vertices: zero)")
