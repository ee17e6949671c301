"""Right add(M)-approximations and everything built from them.

add(M) is presented by an explicit list of summands (the user's candidate
indecomposables); approximations are full Hom-basis evaluations, so the
defining lifting property holds by construction and is still re-verified.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional

import numpy as np

from . import linalg
from .algebra import Algebra, same_algebra
from .errors import InvalidInput, InternalError, NeedsFiniteInjdim, NotAGenerator
from .modules import (
    Module,
    ModuleMap,
    direct_sum,
    hom_basis,
    identity_map,
    map_kernel,
    regular_module,
)
from .resolutions import EXCEEDS_BOUND, Resolution, ext_dims, is_projective


@dataclass
class AddCategory:
    """add(M) for M = the direct sum of the declared summands."""
    summands: List[Module]
    generator: bool = False  # caller asserts _AA ∈ add(M); verified on use

    def __post_init__(self):
        if not self.summands:
            raise InvalidInput("an add-category needs at least one summand")
        a = self.summands[0].algebra
        for s in self.summands:
            if not same_algebra(s.algebra, a):
                raise InvalidInput("add-category summands live over different algebras")
            if s.dim == 0:
                raise InvalidInput("add-category summands must be nonzero")
        self.algebra = a

    def sum_module(self) -> Module:
        return direct_sum(self.summands).module


@dataclass
class Approximation:
    """f: source -> x with source a named direct sum of add-category summands."""
    map: ModuleMap
    pieces: List[Module]        # the summand copies, in order
    piece_homs: List[ModuleMap]  # the Hom-basis element each copy evaluates


def right_approximation(x: Module, c: AddCategory) -> Approximation:
    """Evaluation of the whole Hom basis: M_0 = ⊕_j M_j^{dim Hom(M_j, x)}.

    The lifting contract — Hom(M_j, f) surjective for every summand — is
    re-verified before returning.
    """
    if not same_algebra(x.algebra, c.algebra):
        raise InvalidInput("module and add-category live over different algebras")
    pieces: List[Module] = []
    piece_homs: List[ModuleMap] = []
    blocks = []
    for m in c.summands:
        for h in hom_basis(m, x):
            pieces.append(m)
            piece_homs.append(h)
            blocks.append(h.matrix)
    if pieces:
        source = direct_sum(pieces).module
        matrix = np.hstack(blocks) % x.p
    else:
        source = direct_sum([], algebra=x.algebra).module
        matrix = linalg.zeros(x.dim, 0)
    f = ModuleMap(source, x, matrix)
    for m in c.summands:
        for h in hom_basis(m, x):
            if _factor_through(h, f) is None:
                raise InternalError("approximation lifting contract failed")
    return Approximation(f, pieces, piece_homs)


def _factor_through(h: ModuleMap, f: ModuleMap) -> Optional[ModuleMap]:
    """g with f ∘ g = h, or None; g is searched inside Hom(h.source, f.source)."""
    p = h.p
    basis = hom_basis(h.source, f.source)
    if not basis:
        return None if np.any(h.matrix) else ModuleMap(
            h.source, f.source, linalg.zeros(f.source.dim, h.source.dim))
    cols = np.stack([(f.matrix @ g.matrix).reshape(-1) % p for g in basis], axis=1)
    sol = linalg.solve_linear(cols, h.matrix.reshape(-1), p)
    if sol is None:
        return None
    mat = np.einsum("c,cab->ab", sol.reshape(-1),
                    np.stack([g.matrix for g in basis])) % p
    return ModuleMap(h.source, f.source, mat)


@dataclass
class Membership:
    """add-membership verdict with a splitting witness when true."""
    member: bool
    section: Optional[ModuleMap] = None       # s with approximation ∘ s = id
    approximation: Optional[Approximation] = None

    def __bool__(self) -> bool:
        return self.member


def add_membership(x: Module, c: AddCategory) -> Membership:
    """x ∈ add(M) iff the right approximation onto x splits."""
    if x.dim == 0:
        return Membership(True)
    approx = right_approximation(x, c)
    section = _factor_through(identity_map(x), approx.map)
    if section is None:
        return Membership(False, approximation=approx)
    return Membership(True, section=section, approximation=approx)


def addM_resolution(x: Module, c: AddCategory, length: int) -> Resolution:
    """Exact sequence M_L -> ... -> M_0 -> x -> 0 with terms in add(M).

    Each step approximates the previous kernel; a non-surjective step means M
    is not a generator and raises NotAGenerator.  The resolution completes
    early when a kernel itself lies in add(M): it becomes the final term.
    """
    if length < 0:
        raise InvalidInput("resolution length must be >= 0")
    if add_membership(x, c):
        return Resolution(x, [x], [identity_map(x)], "addM", True)
    approx = right_approximation(x, c)
    if linalg.rank(approx.map.matrix, x.p) != x.dim:
        raise NotAGenerator("right approximation is not surjective")
    terms = [approx.map.source]
    maps = [approx.map]
    syz, incl = map_kernel(approx.map)
    for _ in range(length):
        if add_membership(syz, c):
            terms.append(syz)
            maps.append(incl)
            return Resolution(x, terms, maps, "addM", True)
        approx = right_approximation(syz, c)
        if linalg.rank(approx.map.matrix, syz.p) != syz.dim:
            raise NotAGenerator("right approximation of a kernel is not surjective")
        terms.append(approx.map.source)
        maps.append(incl.compose(approx.map))
        syz, incl = map_kernel(approx.map)
    return Resolution(x, terms, maps, "addM", False)


def perp_membership(x: Module, t: Module, t_injdim: int) -> bool:
    """x ∈ ^⊥t: Ext^i(x, t) = 0 for 1 <= i <= t_injdim.

    Vanishing above the injective dimension is automatic, so the finite
    witness t_injdim makes the a-priori-infinite condition decidable.
    """
    if t_injdim is None or t_injdim == EXCEEDS_BOUND or t_injdim < 0:
        raise NeedsFiniteInjdim("perp membership needs a finite inj.dim witness")
    if t_injdim == 0:
        return True
    dims = ext_dims(x, t, t_injdim).dims
    return all(d == 0 for d in dims[1:])


@dataclass
class AuslanderBridgerReport:
    kernel1_in_add: bool
    kernel2_in_add: bool
    projectives_resolved: bool

    @property
    def agree(self) -> bool:
        return self.kernel1_in_add == self.kernel2_in_add


def auslander_bridger_check(res1: Resolution, res2: Resolution,
                            c: AddCategory, n: int) -> AuslanderBridgerReport:
    """n-th kernels of two add(M)-coefficient resolutions of the same module
    are add(M)-members together or not at all; disagreement is surfaced loudly.

    Preconditions checked here: shared target, terms 0..n-1 in add(M), and
    add(M) resolving in the tested instance (the regular module is a member).
    """
    from .modules import same_module
    if not same_module(res1.target, res2.target):
        raise InvalidInput("the two resolutions resolve different modules")
    if n < 1 or n > len(res1.maps) or n > len(res2.maps):
        raise InvalidInput(f"degree {n} not covered by both resolutions")
    for res in (res1, res2):
        for i in range(min(n, len(res.terms))):
            if not add_membership(res.terms[i], c):
                raise InvalidInput(f"resolution term {i} is not an add(M)-member")
    resolving = bool(add_membership(regular_module(c.algebra), c))
    if not resolving:
        raise InvalidInput("add(M) does not contain the projectives; hypotheses fail")
    k1 = res1.syzygy(n)
    k2 = res2.syzygy(n)
    m1 = bool(add_membership(k1, c))
    m2 = bool(add_membership(k2, c))
    report = AuslanderBridgerReport(m1, m2, resolving)
    if not report.agree:
        raise InternalError(
            "kernel add-membership verdicts disagree; invariance violated")
    return report
