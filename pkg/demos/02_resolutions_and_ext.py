"""Projective resolutions, Ext groups, and the bounded dimension functions.

All searches are bounded and return the sentinel EXCEEDS_BOUND instead of
running forever; over GF(2)[x]/(x^2) the simple module famously has a
1-dimensional Ext against itself in every degree.
"""

from homres import (
    EXCEEDS_BOUND,
    QuiverPresentation,
    ext_dims,
    from_quiver,
    gl_dim,
    inj_dim,
    is_projective,
    proj_dim,
    projective_resolution,
    regular_module,
    simple_modules,
    validate_resolution,
)

dual = from_quiver(QuiverPresentation(vertices=1, arrows=[(0, 0)],
                                      relations=[(0, 0)]), p=2)
reg = regular_module(dual)
(k,) = simple_modules(dual)

# k has the 2-periodic resolution ... -> A -> A -> A -> k -> 0.
res = validate_resolution(projective_resolution(k, 5))
print("resolution of k, term dims:", [t.dim for t in res.terms],
      "| complete:", res.complete)
print("is A projective?", is_projective(reg), "| is k projective?",
      is_projective(k))

print("Ext^i(k, k) for i = 0..10:", ext_dims(k, k, 10).dims)

# Dimension functions: a bounded search that either answers exactly or says
# the bound was not enough.
print("proj.dim k within bound 10:", proj_dim(k, 10))
print("gl.dim A within bound 10:", gl_dim(dual, 10))
assert gl_dim(dual, 10) == EXCEEDS_BOUND  # self-injective, not semisimple
print("inj.dim A as a module over itself:", inj_dim(reg, 10))

# The hereditary line quiver has global dimension exactly 1.
line = from_quiver(QuiverPresentation(vertices=2, arrows=[(0, 1)],
                                      relations=[]), p=2)
print("\nhereditary example: gl.dim =", gl_dim(line, 10),
      "| inj.dim of the regular module =", inj_dim(regular_module(line), 10))
