import numpy as np
import pytest

from homres import linalg
from homres.modules import (
    ModuleMap, direct_sum, hom_basis, is_isomorphic, map_kernel,
    regular_module, simple_modules, zero_module,
)
from homres.resolutions import (
    EXCEEDS_BOUND,
    ext_dims,
    free_cover,
    gl_dim,
    inj_dim,
    is_projective,
    proj_dim,
    projective_resolution,
    validate_resolution,
)

from test_algebra import dual_numbers, truncated_cubic, two_vertex_line


def test_is_projective_basics():
    a = dual_numbers(2)
    reg = regular_module(a)
    k = simple_modules(a)[0]
    assert is_projective(reg)
    assert not is_projective(k)
    assert is_projective(zero_module(a))
    assert is_projective(direct_sum([reg, reg]).module)


def test_free_cover_surjective_all_strategies():
    a = truncated_cubic(3)
    k = simple_modules(a)[0]
    for strat in ("evaluation", "doubled", "permuted"):
        f = free_cover(k, strategy=strat, seed=7)
        assert linalg.rank(f.matrix, 3) == k.dim


def test_resolution_of_regular_is_trivial():
    a = dual_numbers(2)
    reg = regular_module(a)
    res = projective_resolution(reg, 5)
    assert res.complete and res.length == 0
    validate_resolution(res)


def test_periodic_resolution_of_k_dual_numbers():
    # over GF(2)[x]/(x^2) every syzygy of k is again k: truncated at any length
    a = dual_numbers(2)
    k = simple_modules(a)[0]
    res = projective_resolution(k, 4)
    assert not res.complete
    assert [t.dim for t in res.terms] == [2, 2, 2, 2, 2]
    validate_resolution(res)
    for n in range(1, 5):
        assert is_isomorphic(res.syzygy(n), k) is True


def test_resolution_of_vertex_simple_hereditary():
    # S1 over 0 -> 1: free cover A -> S1 has projective kernel; complete at length 1
    a = two_vertex_line(2)
    s0, s1 = simple_modules(a)
    res = projective_resolution(s0, 10)
    assert res.complete and res.length == 1
    assert res.terms[1].dim == 2  # kernel e1, arrow: P2 ⊕ P2
    validate_resolution(res)
    # S2 = P2 is projective outright
    assert projective_resolution(s1, 10).length == 0


def test_ext_k_k_dual_numbers_periodic():
    a = dual_numbers(2)
    k = simple_modules(a)[0]
    table = ext_dims(k, k, 5)
    assert table.dims == [1, 1, 1, 1, 1, 1]


def test_ext_k_k_truncated_cubic():
    # hand Hom-complex oracle: minimal resolution of k over k[x]/(x^3)
    # alternates covers A --x--> A --x^2--> A ...; Ext^i(k,k) = 1 for all i
    a = truncated_cubic(3)
    k = simple_modules(a)[0]
    assert ext_dims(k, k, 4).dims == [1, 1, 1, 1, 1]


def test_ext_vanishes_for_projective_source():
    a = truncated_cubic(2)
    reg = regular_module(a)
    k = simple_modules(a)[0]
    assert ext_dims(reg, k, 4).dims == [1, 0, 0, 0, 0]


def test_ext1_hereditary():
    # Ext^1(S1, P2) = 1 over 0 -> 1
    a = two_vertex_line(2)
    s0, s1 = simple_modules(a)
    assert ext_dims(s0, s1, 3).dims == [0, 1, 0, 0]


def test_ext_schanuel_independence():
    # dims agree no matter which cover strategy built the resolution
    a = dual_numbers(3)
    k = simple_modules(a)[0]
    base = ext_dims(k, k, 3).dims
    for strat, seed in (("doubled", 0), ("permuted", 3)):
        res = projective_resolution(k, 2, strategy=strat, seed=seed)
        validate_resolution(res)
        # recompute Ext^1 by hand from this resolution: corank of delta^0
        from homres.resolutions import _hom_complex_delta
        homs = {i: hom_basis(res.terms[i], k) for i in range(min(3, res.length + 1))}
        d0 = _hom_complex_delta(res, k, 0, homs)
        d1 = _hom_complex_delta(res, k, 1, homs)
        ext1 = len(homs[1]) - linalg.rank(d1, 3) - linalg.rank(d0, 3)
        assert ext1 == base[1]


def test_proj_dim_values():
    a2 = two_vertex_line(2)
    s0, s1 = simple_modules(a2)
    assert proj_dim(regular_module(a2), 10) == 0
    assert proj_dim(s0, 10) == 1
    assert proj_dim(s1, 10) == 0
    dn = dual_numbers(2)
    assert proj_dim(simple_modules(dn)[0], 10) is EXCEEDS_BOUND


def test_inj_dim_self_injective():
    a = dual_numbers(2)
    assert inj_dim(regular_module(a), 5) == 0
    assert inj_dim(zero_module(a), 5) == 0


def test_inj_dim_hereditary():
    a = two_vertex_line(2)
    reg = regular_module(a)
    s0, s1 = simple_modules(a)
    assert inj_dim(reg, 5) == 1
    # S1 is the injective at vertex 0 (the arrow leaves 0), S2 = P2 is not injective
    assert inj_dim(s0, 5) == 0
    assert inj_dim(s1, 5) == 1


def test_inj_dim_simple_exceeds():
    a = dual_numbers(2)
    k = simple_modules(a)[0]
    assert inj_dim(k, 4) is EXCEEDS_BOUND


def test_gl_dim_values():
    assert gl_dim(two_vertex_line(2), 10) == 1
    assert gl_dim(dual_numbers(2), 10) is EXCEEDS_BOUND
    assert gl_dim(truncated_cubic(3), 10) is EXCEEDS_BOUND
    # a field is semisimple
    from homres.algebra import QuiverPresentation, from_quiver
    pt = from_quiver(QuiverPresentation(vertices=1, arrows=[], relations=[]), 5)
    assert gl_dim(pt, 10) == 0


def test_validate_resolution_catches_broken_exactness():
    a = dual_numbers(2)
    k = simple_modules(a)[0]
    res = projective_resolution(k, 2)
    res.maps[2] = ModuleMap(res.terms[2], res.terms[1],
                            linalg.zeros(res.terms[1].dim, res.terms[2].dim))
    with pytest.raises(Exception):
        validate_resolution(res)
