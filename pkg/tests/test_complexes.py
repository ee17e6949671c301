import itertools

import numpy as np
import pytest

from homres import linalg
from homres.approx import AddCategory
from homres.complexes import (
    ChainMap,
    Complex,
    acyclic_truncation_split,
    c_resolution,
    homology_dims,
    homotopy_hom_dim,
    homotopy_retraction,
    identity_chain_map,
    is_acyclic,
    is_c_acyclic,
    mapping_cone,
    perfect_test,
    shift,
    stalk,
)
from homres.errors import HypothesesNotSatisfied
from homres.modules import (
    Module, ModuleMap, direct_sum, regular_module, simple_modules, zero_module,
)

from test_algebra import dual_numbers, two_vertex_line


def socle_sequence(a):
    """0 -> k -> A -> k -> 0 (socle in, top out) over the dual numbers, degrees -1..1."""
    reg = regular_module(a)
    k = simple_modules(a)[0]
    soc = ModuleMap(k, reg, [[0], [1]])
    top = ModuleMap(reg, k, [[1, 0]])
    return Complex(a, -1, [k, reg, k], [soc, top]), reg, k


def test_complex_validation_and_window():
    a = dual_numbers(2)
    x, reg, k = socle_sequence(a)
    assert x.hi == 1
    assert x.term(5).dim == 0
    assert x.diff(1).target.dim == 0


def test_socle_sequence_acyclic():
    a = dual_numbers(2)
    x, reg, k = socle_sequence(a)
    assert is_acyclic(x)
    assert not is_acyclic(stalk(k))
    assert is_acyclic(Complex(a, 0, [zero_module(a)], []))


def test_c_acyclic_distinguishes():
    a = dual_numbers(2)
    x, reg, k = socle_sequence(a)
    assert is_c_acyclic(x, AddCategory([reg]))        # Hom(A, -) is exact
    assert not is_c_acyclic(x, AddCategory([reg, k]))  # Hom(k, -) loses exactness
    z = Complex(a, 0, [zero_module(a)], [])
    assert is_c_acyclic(z, AddCategory([reg, k]))


def test_cone_of_identity_contractible():
    a = dual_numbers(2)
    x, reg, k = socle_sequence(a)
    cone, inj, proj = mapping_cone(identity_chain_map(x))
    assert is_acyclic(cone)
    for n in range(-2, 3):
        assert homotopy_hom_dim(cone, stalk(k), n) == 0


def test_cone_of_zero_map_is_sum():
    a = dual_numbers(2)
    reg = regular_module(a)
    k = simple_modules(a)[0]
    f = ChainMap(stalk(k, 0), stalk(reg, 0), {})
    cone, inj, proj = mapping_cone(f)
    assert cone.term(-1).dim == k.dim
    assert cone.term(0).dim == reg.dim


def test_cone_of_quasi_iso_has_vanishing_window_homology():
    # free resolution A -> A -> A augmenting onto stalk k: cone homology
    # vanishes in degrees above the truncation
    a = dual_numbers(2)
    reg = regular_module(a)
    k = simple_modules(a)[0]
    mulx = ModuleMap(reg, reg, a.right_mult_matrices()[1])
    q = Complex(a, -2, [reg, reg, reg], [mulx, mulx])
    f = ChainMap(q, stalk(k, 0), {0: ModuleMap(reg, k, [[1, 0]])})
    cone, _, _ = mapping_cone(f)
    hom = homology_dims(cone)
    for i, d in hom.items():
        if i >= -2:
            assert d == 0


def test_homotopy_hom_dim_stalks():
    a = dual_numbers(2)
    k = simple_modules(a)[0]
    assert homotopy_hom_dim(stalk(k), stalk(k), 0) == 1
    # K(A)-Homs between stalks recover Ext over the hereditary algebra? No:
    # between stalks, negative shifts vanish
    assert homotopy_hom_dim(stalk(k), stalk(k), -1) == 0


def test_homotopy_hom_shift_consistency():
    a = dual_numbers(2)
    x, reg, k = socle_sequence(a)
    for n in (-1, 0, 1):
        assert homotopy_hom_dim(x, stalk(k), n) == homotopy_hom_dim(
            shift(x, -1), stalk(k), n - 1)


def brute_force_homotopy_dim(x, y, n, p):
    """Enumeration oracle: count chain maps x -> y[n] and their boundaries by
    brute force over all raw degreewise A-map tuples; dim = log_p(ratio)."""
    import math

    from homres.modules import hom_basis
    degs = list(range(x.lo, x.hi + 1))
    f_bases = {i: hom_basis(x.term(i), y.term(i + n)) for i in degs}
    h_bases = {i: hom_basis(x.term(i), y.term(i + n - 1)) for i in degs}
    sign = 1 if n % 2 == 0 else (p - 1)

    def tuples(bases, shape_of):
        pools = []
        for i in degs:
            combos = []
            bs = bases[i]
            for coeffs in itertools.product(range(p), repeat=len(bs)):
                mat = linalg.zeros(*shape_of(i))
                for c, b in zip(coeffs, bs):
                    mat = (mat + c * b.matrix) % p
                combos.append(mat)
            pools.append(combos)
        for tup in itertools.product(*pools):
            yield dict(zip(degs, tup))

    def f_shape(i):
        return (y.term(i + n).dim, x.term(i).dim)

    def h_shape(i):
        return (y.term(i + n - 1).dim, x.term(i).dim)

    def get(fs, i, shape):
        return fs[i] if i in fs else linalg.zeros(*shape)

    def is_chain(fs):
        # d_Y^{i+n} f^i = (-1)^n f^{i+1} d_X^i degreewise
        for i in degs:
            lhs = (y.diff(i + n).matrix @ fs[i]) % p
            nxt = get(fs, i + 1, f_shape(i + 1))
            rhs = (sign * (nxt @ x.diff(i).matrix)) % p
            if not np.array_equal(lhs, rhs):
                return False
        return True

    n_chain = sum(1 for fs in tuples(f_bases, f_shape) if is_chain(fs))
    # boundaries: f^i = d_Y h^i + (-1)^n h^{i+1} d_X
    boundaries = set()
    for hs in tuples(h_bases, h_shape):
        key = []
        for i in degs:
            hnext = get(hs, i + 1, h_shape(i + 1))
            b = (y.diff(i + n - 1).matrix @ hs[i]
                 + sign * (hnext @ x.diff(i).matrix)) % p
            key.append(b.tobytes())
        boundaries.add(tuple(key))
    n_bound = len(boundaries)
    return round(math.log(n_chain, p) - math.log(n_bound, p))


def test_homotopy_hom_dim_against_enumeration_oracle():
    a = dual_numbers(2)
    reg = regular_module(a)
    k = simple_modules(a)[0]
    soc = ModuleMap(k, reg, [[0], [1]])
    top = ModuleMap(reg, k, [[1, 0]])
    x1 = Complex(a, 0, [reg, k], [top])
    x2 = Complex(a, -1, [k, reg], [soc])
    y1 = stalk(k, 0)
    for x, y, n in [(x1, y1, 0), (x1, y1, 1), (x2, y1, 0), (x2, x1, 0),
                    (y1, x2, 0), (x1, x1, 0), (x1, x1, 1)]:
        assert homotopy_hom_dim(x, y, n) == brute_force_homotopy_dim(x, y, n, 2)


def test_c_resolution_stalk_of_summand():
    a = dual_numbers(2)
    reg = regular_module(a)
    k = simple_modules(a)[0]
    c = AddCategory([reg, k], generator=True)
    res = c_resolution(stalk(k, 0), c, 3)
    assert res.complete
    assert res.complex.total_dim() == k.dim


def test_c_resolution_stalk_by_projectives():
    a = dual_numbers(2)
    reg = regular_module(a)
    k = simple_modules(a)[0]
    c = AddCategory([reg], generator=True)
    res = c_resolution(stalk(k, 0), c, 3)
    assert not res.complete
    assert res.complex.lo == -3 and res.complex.hi == 0
    assert all(t.dim == 2 for t in res.complex.terms)
    cone, _, _ = mapping_cone(res.map)
    assert is_c_acyclic(cone, c, lo_check=res.safe_lo)


def test_c_resolution_two_term_complex():
    a = dual_numbers(2)
    reg = regular_module(a)
    k = simple_modules(a)[0]
    c = AddCategory([reg, k], generator=True)
    x = Complex(a, -1, [reg, k], [ModuleMap(reg, k, [[1, 0]])])
    res = c_resolution(x, c, 3)
    for t in res.complex.terms:
        if t.dim:
            from homres.approx import add_membership
            assert add_membership(t, c)
    cone, _, _ = mapping_cone(res.map)
    assert is_c_acyclic(cone, c, lo_check=res.safe_lo)


def test_c_resolution_wide_complex_projective_coefficients():
    a = dual_numbers(2)
    reg = regular_module(a)
    k = simple_modules(a)[0]
    c = AddCategory([reg], generator=True)
    x, _, _ = socle_sequence(a)
    res = c_resolution(x, c, 4)
    cone, _, _ = mapping_cone(res.map)
    assert is_c_acyclic(cone, c, lo_check=res.safe_lo)
    assert is_acyclic(cone) or not res.complete


def test_perfect_test_stalks():
    a = dual_numbers(2)
    reg = regular_module(a)
    k = simple_modules(a)[0]
    rep = perfect_test(stalk(reg, 0), 5)
    assert rep and rep.truncation_degree == 0
    rep2 = perfect_test(stalk(k, 0), 8)
    assert not rep2 and rep2.status == "not-within-bound"


def test_perfect_test_hereditary():
    a = two_vertex_line(2)
    s0, s1 = simple_modules(a)
    rep = perfect_test(stalk(s0, 0), 5)
    assert rep and rep.truncation_degree == -1
    assert perfect_test(stalk(s1, 0), 5).truncation_degree == 0


def test_homotopy_retraction_identity_like():
    a = dual_numbers(2)
    reg = regular_module(a)
    k = simple_modules(a)[0]
    c = AddCategory([reg, k])
    i_cx = stalk(reg, 0)
    t = identity_chain_map(i_cx)
    got = homotopy_retraction(t, AddCategory([reg]))
    assert got is not None
    s, h = got
    comp = s.component(0).compose(t.component(0))
    assert np.array_equal(comp.matrix, linalg.identity(reg.dim))


def test_homotopy_retraction_nontrivial():
    # quasi-iso from a projective stalk into a bigger contractible-padded
    # complex: stalk A -> (A --id--> A padded with A in a split way)
    a = dual_numbers(2)
    reg = regular_module(a)
    k = simple_modules(a)[0]
    i_cx = stalk(reg, 0)
    # target: 0 -> A --[id;0]--> A ⊕ A --[0 id]--> A -> 0 in degrees 0..2
    # then t: stalk A -> target embeds into the second factor at degree... use
    # simpler: target = cone(id_{A}) shifted ⊕ stalk A; embed into the stalk part
    pad = direct_sum([reg, reg])
    d0 = ModuleMap(reg, pad.module, pad.injections[0].matrix)
    d1 = ModuleMap(pad.module, reg, pad.projections[1].matrix)
    target = Complex(a, 0, [reg, pad.module, reg], [d0, d1])
    # target is A -> A⊕A -> A with H^0 = 0? d0 injective, H^0 = 0; not matching
    # stalk A. Instead test the retraction of the embedding A -> A⊕A part:
    emb = ChainMap(i_cx, Complex(a, 0, [pad.module], []),
                   {0: ModuleMap(reg, pad.module, pad.injections[0].matrix)})
    got = homotopy_retraction(emb, AddCategory([reg]))
    assert got is not None
    s, h = got
    comp = s.component(0).compose(emb.component(0))
    assert np.array_equal(comp.matrix, linalg.identity(reg.dim))


def test_homotopy_retraction_precondition():
    a = dual_numbers(2)
    reg = regular_module(a)
    k = simple_modules(a)[0]
    t = identity_chain_map(stalk(k, 0))
    with pytest.raises(HypothesesNotSatisfied):
        homotopy_retraction(t, AddCategory([k]))  # Ext^1(k, k) != 0


def test_acyclic_truncation_split_on_cone():
    a = dual_numbers(2)
    reg = regular_module(a)
    k = simple_modules(a)[0]
    c = AddCategory([reg, k], generator=True)
    cone, _, _ = mapping_cone(identity_chain_map(stalk(reg, 0)))
    rep = acyclic_truncation_split(cone, c)
    assert rep.all_split


def test_acyclic_truncation_split_refusal():
    a = dual_numbers(2)
    x, reg, k = socle_sequence(a)
    c = AddCategory([reg, k], generator=True)
    with pytest.raises(HypothesesNotSatisfied):
        acyclic_truncation_split(x, c)  # not C-acyclic


def test_acyclic_truncation_split_split_exact():
    a = two_vertex_line(3)
    reg = regular_module(a)
    c = AddCategory([reg], generator=True)
    ds = direct_sum([reg, reg])
    d0 = ModuleMap(reg, ds.module, ds.injections[0].matrix)
    d1 = ModuleMap(ds.module, reg, ds.projections[1].matrix)
    x = Complex(a, 0, [reg, ds.module, reg], [d0, d1])
    rep = acyclic_truncation_split(x, c)
    assert rep.all_split
