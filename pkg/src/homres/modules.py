"""Finitely generated left modules as matrix representations.

A module of dimension d over an algebra with basis b_0..b_{n-1} stores one
d x d matrix per basis element, acting on column vectors from the left.
Kernels, cokernels and images pick their bases deterministically from rref
pivots, so every construction is bit-reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import numpy as np

from . import linalg
from .algebra import Algebra, opposite, quotient_algebra, radical_basis, same_algebra
from .errors import InvalidInput, InternalError, SearchExhausted

EXHAUSTIVE_CAP = 1 << 16


class _Undecided:
    """Three-valued outcome for isomorphism tests; truthiness is an error."""

    def __bool__(self):
        raise SearchExhausted("isomorphism test was undecided; handle UNDECIDED explicitly")

    def __repr__(self):
        return "UNDECIDED"


UNDECIDED = _Undecided()


@dataclass(eq=False)
class Module:
    algebra: Algebra
    dim: int
    action: np.ndarray  # (algebra.dim, dim, dim)

    def __post_init__(self):
        self.action = np.asarray(self.action, dtype=np.int64) % self.algebra.p
        if self.action.shape != (self.algebra.dim, self.dim, self.dim):
            raise InvalidInput(
                f"action tensor shape {self.action.shape} != "
                f"{(self.algebra.dim, self.dim, self.dim)}")

    @property
    def p(self) -> int:
        return self.algebra.p

    def act(self, elem: np.ndarray) -> np.ndarray:
        """Matrix by which the algebra element (coordinate vector) acts."""
        elem = np.asarray(elem, dtype=np.int64) % self.p
        return np.einsum("i,ijk->jk", elem, self.action) % self.p


def validate_module(x: Module) -> Module:
    a = x.algebra
    p = a.p
    unit_act = x.act(a.unit)
    if not np.array_equal(unit_act, linalg.identity(x.dim)):
        raise InvalidInput("unit does not act as the identity")
    for i in range(a.dim):
        for j in range(a.dim):
            lhs = linalg.mat_mul(x.action[i], x.action[j], p)
            rhs = np.einsum("k,kab->ab", a.mult[i, j], x.action) % p
            if not np.array_equal(lhs, rhs):
                raise InvalidInput(f"action is not multiplicative at pair ({i}, {j})")
    return x


@dataclass(eq=False)
class ModuleMap:
    source: Module
    target: Module
    matrix: np.ndarray  # (target.dim, source.dim)

    def __post_init__(self):
        if not same_algebra(self.source.algebra, self.target.algebra):
            raise InvalidInput("map endpoints live over different algebras")
        self.matrix = linalg.as_matrix(
            self.matrix, self.source.p, rows=self.target.dim, cols=self.source.dim)
        p = self.source.p
        for i in range(self.source.algebra.dim):
            lhs = linalg.mat_mul(self.matrix, self.source.action[i], p)
            rhs = linalg.mat_mul(self.target.action[i], self.matrix, p)
            if not np.array_equal(lhs, rhs):
                raise InvalidInput(f"matrix does not intertwine basis element {i}")

    @property
    def p(self) -> int:
        return self.source.p

    def compose(self, other: "ModuleMap") -> "ModuleMap":
        """self after other (self ∘ other)."""
        if other.target is not self.source and not same_module(other.target, self.source):
            raise InvalidInput("composition endpoints do not match")
        return ModuleMap(other.source, self.target,
                         linalg.mat_mul(self.matrix, other.matrix, self.p))

    def is_zero(self) -> bool:
        return not np.any(self.matrix)


def zero_module(a: Algebra) -> Module:
    return Module(a, 0, np.zeros((a.dim, 0, 0), dtype=np.int64))


def regular_module(a: Algebra) -> Module:
    """A as a left module over itself (action by left multiplication)."""
    return Module(a, a.dim, a.left_mult_matrices().copy())


def identity_map(x: Module) -> ModuleMap:
    return ModuleMap(x, x, linalg.identity(x.dim))


def zero_map(x: Module, y: Module) -> ModuleMap:
    return ModuleMap(x, y, linalg.zeros(y.dim, x.dim))


def same_module(x: Module, y: Module) -> bool:
    return x is y or (same_algebra(x.algebra, y.algebra) and x.dim == y.dim
                      and np.array_equal(x.action, y.action))


# -- hom spaces -------------------------------------------------------------------


def hom_basis(x: Module, y: Module) -> List[ModuleMap]:
    """Basis of Hom_A(x, y), ordered deterministically by rref free columns.

    A matrix F is a map iff F @ rho_x(b_i) = rho_y(b_i) @ F for all i; with
    row-major vec this is (I kron X_i^T - Y_i kron I) vec(F) = 0.
    """
    if not same_algebra(x.algebra, y.algebra):
        raise InvalidInput("hom endpoints live over different algebras")
    p = x.p
    dx, dy = x.dim, y.dim
    if dx == 0 or dy == 0:
        return []
    blocks = []
    for i in range(x.algebra.dim):
        blocks.append((np.kron(linalg.identity(dy), x.action[i].T)
                       - np.kron(y.action[i], linalg.identity(dx))) % p)
    system = np.vstack(blocks)
    kern = linalg.kernel_basis(system, p)
    return [ModuleMap(x, y, row.reshape(dy, dx)) for row in kern]


def coords_in_basis(f: ModuleMap, basis: Sequence[ModuleMap]) -> Optional[np.ndarray]:
    """Coordinates of f in a spanning list of maps, or None if outside the span."""
    p = f.p
    if not basis:
        return np.zeros(0, dtype=np.int64) if f.is_zero() else None
    cols = np.stack([b.matrix.reshape(-1) for b in basis], axis=1) % p
    sol = linalg.solve_linear(cols, f.matrix.reshape(-1), p)
    return None if sol is None else sol.reshape(-1)


def is_isomorphic(x: Module, y: Module, seed: int = 0):
    """True / False / UNDECIDED: does an invertible intertwiner exist?

    Strategy: dimension check, hom basis elements, seeded random combinations,
    then exhaustive enumeration when p^{hom dim} fits under 2^16.  UNDECIDED is
    returned only when the search space is too large and randomization failed.
    """
    if not same_algebra(x.algebra, y.algebra):
        raise InvalidInput("isomorphism test endpoints live over different algebras")
    if x.dim != y.dim:
        return False
    if x.dim == 0:
        return True
    basis = hom_basis(x, y)
    if not basis:
        return False
    p = x.p
    for b in basis:
        if linalg.is_invertible(b.matrix, p):
            return True
    h = len(basis)
    stacked = np.stack([b.matrix for b in basis])
    if p ** h <= EXHAUSTIVE_CAP:
        coeffs = np.zeros(h, dtype=np.int64)
        for _ in range(p ** h - 1):
            k = 0
            while True:
                coeffs[k] += 1
                if coeffs[k] < p:
                    break
                coeffs[k] = 0
                k += 1
            cand = np.einsum("c,cab->ab", coeffs, stacked) % p
            if linalg.is_invertible(cand, p):
                return True
        return False
    rng = np.random.default_rng(seed)
    for _ in range(400):
        coeffs = rng.integers(0, p, size=h)
        cand = np.einsum("c,cab->ab", coeffs, stacked) % p
        if linalg.is_invertible(cand, p):
            return True
    return UNDECIDED


# -- sums, kernels, cokernels ------------------------------------------------------


@dataclass
class DirectSum:
    module: Module
    injections: List[ModuleMap]
    projections: List[ModuleMap]


def direct_sum(xs: Sequence[Module], algebra: Optional[Algebra] = None) -> DirectSum:
    """Block-diagonal sum with injection/projection maps (proj_i inj_j = delta_ij).

    The empty sum needs the algebra passed explicitly.
    """
    if not xs:
        if algebra is None:
            raise InvalidInput("empty direct sum needs an explicit algebra")
        z = zero_module(algebra)
        return DirectSum(z, [], [])
    a = xs[0].algebra
    for x in xs[1:]:
        if not same_algebra(x.algebra, a):
            raise InvalidInput("direct sum terms live over different algebras")
    total = sum(x.dim for x in xs)
    action = np.zeros((a.dim, total, total), dtype=np.int64)
    offs = []
    pos = 0
    for x in xs:
        offs.append(pos)
        action[:, pos:pos + x.dim, pos:pos + x.dim] = x.action
        pos += x.dim
    s = Module(a, total, action)
    injections, projections = [], []
    for x, off in zip(xs, offs):
        inj = linalg.zeros(total, x.dim)
        inj[off:off + x.dim, :] = linalg.identity(x.dim)
        injections.append(ModuleMap(x, s, inj))
        projections.append(ModuleMap(s, x, inj.T.copy()))
    return DirectSum(s, injections, projections)


def map_kernel(f: ModuleMap) -> Tuple[Module, ModuleMap]:
    """Kernel module and its inclusion; basis from rref free columns."""
    p = f.p
    kern = linalg.kernel_basis(f.matrix, p)  # rows span ker in source coords
    incl = kern.T.copy()                     # (source.dim, k)
    k = kern.shape[0]
    action = np.zeros((f.source.algebra.dim, k, k), dtype=np.int64)
    for i in range(f.source.algebra.dim):
        sol = linalg.solve_linear(incl, linalg.mat_mul(f.source.action[i], incl, p), p)
        if sol is None:
            raise InternalError("kernel is not action-stable; intertwiner law violated")
        action[i] = sol
    km = Module(f.source.algebra, k, action)
    return km, ModuleMap(km, f.source, incl)


def map_cokernel(f: ModuleMap) -> Tuple[Module, ModuleMap]:
    """Cokernel on the complement of the image's pivot columns, with projection."""
    p = f.p
    a = f.source.algebra
    rows, piv = linalg.rref(f.matrix.T, p)  # row space = image of f in target coords
    rows = rows[:len(piv)]
    pivot_set = set(piv)
    nonpiv = [c for c in range(f.target.dim) if c not in pivot_set]
    sel = linalg.zeros(len(piv), f.target.dim)
    for i, c in enumerate(piv):
        sel[i, c] = 1
    reducer = (linalg.identity(f.target.dim) - rows.T @ sel) % p
    proj = reducer[nonpiv, :]
    lift = linalg.identity(f.target.dim)[:, nonpiv]
    q = len(nonpiv)
    action = np.zeros((a.dim, q, q), dtype=np.int64)
    for i in range(a.dim):
        action[i] = (proj @ f.target.action[i] @ lift) % p
    cm = Module(a, q, action)
    return cm, ModuleMap(f.target, cm, proj)


def module_image(f: ModuleMap) -> Tuple[Module, ModuleMap, ModuleMap]:
    """Image of f as (module, inclusion into target, corestriction of f).

    inclusion ∘ corestriction == f.
    """
    p = f.p
    a = f.source.algebra
    rows, piv = linalg.rref(f.matrix.T, p)
    rows = rows[:len(piv)]
    incl = rows.T.copy()  # (target.dim, r)
    r = rows.shape[0]
    action = np.zeros((a.dim, r, r), dtype=np.int64)
    for i in range(a.dim):
        sol = linalg.solve_linear(incl, linalg.mat_mul(f.target.action[i], incl, p), p)
        if sol is None:
            raise InternalError("image is not action-stable; intertwiner law violated")
        action[i] = sol
    im = Module(a, r, action)
    cor = linalg.solve_linear(incl, f.matrix, p)
    if cor is None:
        raise InternalError("image basis fails to express the map")
    return im, ModuleMap(im, f.target, incl), ModuleMap(f.source, im, cor)


def dual_module(x: Module) -> Module:
    """Linear dual as a module over the opposite algebra (actions transposed)."""
    op = opposite(x.algebra)
    return Module(op, x.dim, np.transpose(x.action, (0, 2, 1)).copy())


# -- simple modules ---------------------------------------------------------------


def _spin_is_simple(x: Module) -> bool:
    """Exhaustive check: every nonzero vector generates the whole module."""
    p, d = x.p, x.dim
    if d == 0:
        return False
    if d == 1:
        return True
    if p ** d > EXHAUSTIVE_CAP:
        raise SearchExhausted(f"simplicity check needs p^dim <= {EXHAUSTIVE_CAP}")
    v = np.zeros(d, dtype=np.int64)
    for _ in range(p ** d - 1):
        k = 0
        while True:
            v[k] += 1
            if v[k] < p:
                break
            v[k] = 0
            k += 1
        orbit = (x.action @ v) % p  # rows = b_i . v
        if linalg.rank(orbit, p) < d:
            return False
    return True


def _submodule_on_rows(x: Module, rows: np.ndarray) -> Module:
    p = x.p
    incl = rows.T % p
    k = rows.shape[0]
    action = np.zeros((x.algebra.dim, k, k), dtype=np.int64)
    for i in range(x.algebra.dim):
        sol = linalg.solve_linear(incl, linalg.mat_mul(x.action[i], incl, p), p)
        if sol is None:
            raise InternalError("rows do not span a submodule")
        action[i] = sol
    return Module(x.algebra, k, action)


def _fitting_split(x: Module) -> Optional[Tuple[Module, Module]]:
    """Split x = ker(f^d) ⊕ im(f^d) for an endomorphism f that is neither
    nilpotent nor invertible; None if no such f is found in the search budget."""
    p, d = x.p, x.dim
    basis = hom_basis(x, x)
    h = len(basis)
    stacked = np.stack([b.matrix for b in basis])

    def try_candidate(mat):
        power = linalg.mat_pow(mat, d, p)
        r = linalg.rank(power, p)
        if 0 < r < d:
            im_rows, piv = linalg.rref(power.T, p)
            im_rows = im_rows[:len(piv)]
            ker_rows = linalg.kernel_basis(power, p)
            return (_submodule_on_rows(x, ker_rows), _submodule_on_rows(x, im_rows))
        return None

    for b in basis:
        got = try_candidate(b.matrix)
        if got:
            return got
    if p ** h <= EXHAUSTIVE_CAP:
        coeffs = np.zeros(h, dtype=np.int64)
        for _ in range(p ** h - 1):
            k = 0
            while True:
                coeffs[k] += 1
                if coeffs[k] < p:
                    break
                coeffs[k] = 0
                k += 1
            got = try_candidate(np.einsum("c,cab->ab", coeffs, stacked) % p)
            if got:
                return got
        return None
    rng = np.random.default_rng(0)
    for _ in range(500):
        coeffs = rng.integers(0, p, size=h)
        got = try_candidate(np.einsum("c,cab->ab", coeffs, stacked) % p)
        if got:
            return got
    return None


def simple_modules(a: Algebra) -> List[Module]:
    """Complete irredundant list of simple left modules.

    Quiver algebras carry their vertex simples directly; otherwise the
    semisimple quotient A/rad is split into simples by Fitting's lemma and
    each factor's simplicity is verified exhaustively.
    """
    if a.simple_actions is not None:
        out = []
        for acts in a.simple_actions:
            d = acts[0].shape[0]
            action = np.stack([np.asarray(m, dtype=np.int64) % a.p for m in acts])
            out.append(validate_module(Module(a, d, action)))
        return out
    rad = radical_basis(a)
    q, proj, _ = quotient_algebra(a, rad)
    reg = regular_module(q)

    def decompose(v: Module) -> List[Module]:
        if v.dim == 0:
            return []
        split = _fitting_split(v)
        if split is None:
            if not _spin_is_simple(v):
                raise SearchExhausted("failed to split a non-simple semisimple module")
            return [v]
        left, right = split
        return decompose(left) + decompose(right)

    factors = decompose(reg)
    # pull back along A -> A/rad: b_i acts via its image in the quotient
    pulled = []
    for f in factors:
        action = np.zeros((a.dim, f.dim, f.dim), dtype=np.int64)
        for i in range(a.dim):
            action[i] = f.act(proj[:, i])
        pulled.append(validate_module(Module(a, f.dim, action)))
    out: List[Module] = []
    for s in pulled:
        dup = False
        for t in out:
            verdict = is_isomorphic(s, t)
            if verdict is True:
                dup = True
                break
            if verdict is UNDECIDED:
                raise SearchExhausted("could not decide isomorphism between simple factors")
        if not dup:
            out.append(s)
    return out
