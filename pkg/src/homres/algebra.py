"""Finite-dimensional associative algebras over GF(p).

An algebra is stored by its full structure-constant tensor
``mult[i, j, k]`` meaning  b_i * b_j = sum_k mult[i, j, k] * b_k.

Path algebras of quivers with monomial relations provide the convenient
input syntax; any other algebra enters through a raw table.  The basis of a
quiver algebra lists the trivial paths (one per vertex) first, then the
nonzero paths sorted by (length, arrow sequence).

Path composition convention: in a product q * q' the path q' is traversed
first, so the left projective at vertex v is A*e_v = span of paths starting
at v, and Hom(A e_i, A e_j) is identified with e_i A e_j.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from . import linalg
from .errors import InvalidInput, NotFiniteDimensional, UnsupportedField


@dataclass(eq=False)
class Algebra:
    p: int
    dim: int
    mult: np.ndarray                 # (dim, dim, dim)
    unit: np.ndarray                 # (dim,)
    radical: Optional[np.ndarray] = None          # rows spanning rad A
    simple_actions: Optional[list] = None          # list of [action matrix per basis elt]
    labels: Optional[List[str]] = None
    _left: Optional[np.ndarray] = field(default=None, repr=False)
    _right: Optional[np.ndarray] = field(default=None, repr=False)

    def __post_init__(self):
        linalg.check_modulus(self.p)
        self.mult = np.asarray(self.mult, dtype=np.int64) % self.p
        self.unit = np.asarray(self.unit, dtype=np.int64).reshape(-1) % self.p
        if self.mult.shape != (self.dim, self.dim, self.dim):
            raise InvalidInput(f"structure tensor shape {self.mult.shape} != {(self.dim,) * 3}")
        if self.unit.shape != (self.dim,):
            raise InvalidInput("unit vector has wrong length")
        if self.radical is not None:
            self.radical = linalg.as_matrix(self.radical, self.p, cols=self.dim)

    # -- multiplication helpers -------------------------------------------------

    def left_mult_matrices(self) -> np.ndarray:
        """L[i] acts on coordinate columns: L[i] @ v = coords of b_i * v."""
        if self._left is None:
            # (L_i)[k, j] = mult[i, j, k]
            self._left = np.transpose(self.mult, (0, 2, 1)).copy()
        return self._left

    def right_mult_matrices(self) -> np.ndarray:
        """R[j] @ v = coords of v * b_j."""
        if self._right is None:
            # (R_j)[k, i] = mult[i, j, k]
            self._right = np.transpose(self.mult, (1, 2, 0)).copy()
        return self._right

    def multiply(self, u: np.ndarray, v: np.ndarray) -> np.ndarray:
        u = np.asarray(u, dtype=np.int64) % self.p
        v = np.asarray(v, dtype=np.int64) % self.p
        return np.einsum("i,j,ijk->k", u, v, self.mult) % self.p

    def basis_label(self, i: int) -> str:
        return self.labels[i] if self.labels else f"b{i}"


def same_algebra(a: Algebra, b: Algebra) -> bool:
    return (
        a is b
        or (a.p == b.p and a.dim == b.dim
            and np.array_equal(a.mult, b.mult) and np.array_equal(a.unit, b.unit))
    )


def validate_algebra(a: Algebra) -> Algebra:
    """Check associativity and both unit laws; returns the algebra unchanged.

    Raises InvalidInput naming the offending triple or basis index.
    """
    p, n = a.p, a.dim
    left = a.left_mult_matrices()
    ident = linalg.identity(n)
    lu = np.einsum("i,ijk->jk", a.unit, left) % p
    if not np.array_equal(lu, ident):
        bad = int(np.argmax(np.any(lu != ident, axis=0)))
        raise InvalidInput(f"unit law fails: u * b{bad} != b{bad}")
    ru = np.einsum("j,ijk->ik", a.unit, a.mult) % p
    if not np.array_equal(ru, ident):
        bad = int(np.argmax(np.any(ru != ident, axis=1)))
        raise InvalidInput(f"unit law fails: b{bad} * u != b{bad}")
    for i in range(n):
        for j in range(n):
            lhs = linalg.mat_mul(left[i], left[j], p)
            rhs = np.einsum("k,kab->ab", a.mult[i, j], left) % p
            if not np.array_equal(lhs, rhs):
                for k in range(n):
                    lv = a.multiply(a.multiply(ident[i], ident[j]), ident[k])
                    rv = a.multiply(ident[i], a.multiply(ident[j], ident[k]))
                    if not np.array_equal(lv, rv):
                        raise InvalidInput(f"associativity fails at triple ({i}, {j}, {k})")
                raise InvalidInput(f"associativity fails at pair ({i}, {j})")
    if a.radical is not None:
        validate_radical(a, a.radical)
    return a


def from_table(p: int, dim: int, structure: Sequence[Tuple[int, int, int, int]],
               unit: Sequence[int], radical=None, labels=None) -> Algebra:
    """Build from a sparse (i, j, k, c) structure-constant list and validate."""
    mult = np.zeros((dim, dim, dim), dtype=np.int64)
    for i, j, k, c in structure:
        if not (0 <= i < dim and 0 <= j < dim and 0 <= k < dim):
            raise InvalidInput(f"structure entry ({i},{j},{k}) out of range for dim {dim}")
        mult[i, j, k] = (mult[i, j, k] + c) % p
    a = Algebra(p=p, dim=dim, mult=mult, unit=np.asarray(unit), radical=radical, labels=labels)
    return validate_algebra(a)


# -- quivers ---------------------------------------------------------------------


@dataclass
class QuiverPresentation:
    """A quiver with monomial (zero) relations.

    arrows are (source, target) vertex pairs; each relation is a composable
    sequence of arrow indices of length >= 2 declared to be zero.
    """
    vertices: int
    arrows: List[Tuple[int, int]]
    relations: List[Tuple[int, ...]]

    def __post_init__(self):
        self.arrows = [tuple(x) for x in self.arrows]
        self.relations = [tuple(r) for r in self.relations]
        for s, t in self.arrows:
            if not (0 <= s < self.vertices and 0 <= t < self.vertices):
                raise InvalidInput(f"arrow ({s},{t}) references a missing vertex")
        for r in self.relations:
            if len(r) < 2:
                raise InvalidInput(f"relation {r} has length < 2")
            for m in range(len(r) - 1):
                if self.arrows[r[m]][1] != self.arrows[r[m + 1]][0]:
                    raise InvalidInput(f"relation {r} is not a composable path")


def _path_is_nonzero(arrows_seq: Tuple[int, ...], relations) -> bool:
    for rel in relations:
        L = len(rel)
        for s in range(len(arrows_seq) - L + 1):
            if arrows_seq[s:s + L] == rel:
                return False
    return True


def from_quiver(q: QuiverPresentation, p: int) -> Algebra:
    """Path algebra modulo the monomial relations.

    Basis: trivial paths (one per vertex) first, then nonzero paths ordered by
    (length, arrow sequence).  Raises NotFiniteDimensional when the nonzero
    path set is infinite.
    """
    linalg.check_modulus(p)
    maxrel = max((len(r) for r in q.relations), default=1)
    # paths are (source_vertex, arrow index tuple in traversal order)
    paths: List[Tuple[int, Tuple[int, ...]]] = [(v, ()) for v in range(q.vertices)]
    level = list(paths)
    # Pumping bound: the behaviour of a path under extension depends only on
    # its last (maxrel - 1) arrows, so a nonzero path longer than the number
    # of such suffix states forces an infinite path set.
    state_bound = None
    length = 0
    while level:
        length += 1
        if state_bound is not None and length > state_bound:
            raise NotFiniteDimensional("the quiver admits infinitely many nonzero paths")
        nxt = []
        for src, seq in level:
            end = q.arrows[seq[-1]][1] if seq else src
            for ai, (s, t) in enumerate(q.arrows):
                if s != end:
                    continue
                cand = seq + (ai,)
                if _path_is_nonzero(cand[-maxrel:] if len(cand) > maxrel else cand, q.relations):
                    nxt.append((src, cand))
        nxt.sort()
        paths.extend(nxt)
        level = nxt
        if length == maxrel - 1 or (maxrel == 1 and length == 1):
            # all suffix states are now enumerated
            state_bound = len(paths)
    dim = len(paths)
    index = {pth: i for i, pth in enumerate(paths)}
    mult = np.zeros((dim, dim, dim), dtype=np.int64)
    for i, (src_i, seq_i) in enumerate(paths):
        end_i = q.arrows[seq_i[-1]][1] if seq_i else src_i
        for j, (src_j, seq_j) in enumerate(paths):
            end_j = q.arrows[seq_j[-1]][1] if seq_j else src_j
            if end_j != src_i:
                continue  # q_j then q_i must compose
            cand = (src_j, seq_j + seq_i)
            if _path_is_nonzero(cand[1], q.relations):
                mult[i, j, index[cand]] = 1
    unit = np.zeros(dim, dtype=np.int64)
    unit[:q.vertices] = 1
    radical = linalg.identity(dim)[q.vertices:, :]
    simple_actions = []
    for v in range(q.vertices):
        acts = [np.array([[1 if (i == v) else 0]], dtype=np.int64) for i in range(dim)]
        simple_actions.append(acts)
    labels = []
    for src, seq in paths:
        if not seq:
            labels.append(f"e{src}")
        else:
            labels.append("*".join(f"a{ai}" for ai in reversed(seq)))
    a = Algebra(p=p, dim=dim, mult=mult, unit=unit, radical=radical,
                simple_actions=simple_actions, labels=labels)
    return validate_algebra(a)


# -- opposite, radical, quotient --------------------------------------------------


def opposite(a: Algebra) -> Algebra:
    """Opposite algebra: structure constants transposed in (i, j).

    The radical subspace is the same and is carried over; 1-dimensional simple
    actions (scalars commute) are carried over as well.
    """
    simple_actions = None
    if a.simple_actions is not None and all(s[0].shape == (1, 1) for s in a.simple_actions):
        simple_actions = a.simple_actions
    return Algebra(p=a.p, dim=a.dim, mult=np.transpose(a.mult, (1, 0, 2)).copy(),
                   unit=a.unit.copy(),
                   radical=None if a.radical is None else a.radical.copy(),
                   simple_actions=simple_actions, labels=a.labels)


def _ideal_closure_step(a: Algebra, rows: np.ndarray, other: np.ndarray) -> np.ndarray:
    """Row basis of span{x*y : x in rows, y in other} (element products)."""
    prods = []
    for x in rows:
        for y in other:
            prods.append(a.multiply(x, y))
    if not prods:
        return linalg.zeros(0, a.dim)
    r, piv = linalg.rref(np.array(prods, dtype=np.int64), a.p)
    return r[:len(piv)]


def validate_radical(a: Algebra, rows: np.ndarray) -> None:
    """Check rows span a two-sided nilpotent ideal.

    When p > dim, additionally checks the quotient's trace form is
    nondegenerate (semisimplicity); otherwise quotient semisimplicity is
    verified downstream when simple modules are extracted.
    """
    p = a.p
    rows = linalg.as_matrix(rows, p, cols=a.dim)
    ident = linalg.identity(a.dim)
    for r in rows:
        for i in range(a.dim):
            if not linalg.row_space_contains(rows, a.multiply(ident[i], r), p):
                raise InvalidInput(f"radical rows are not a left ideal (b{i} * row escapes)")
            if not linalg.row_space_contains(rows, a.multiply(r, ident[i]), p):
                raise InvalidInput(f"radical rows are not a right ideal (row * b{i} escapes)")
    power = rows
    for _ in range(a.dim + 1):
        if power.shape[0] == 0:
            break
        nxt = _ideal_closure_step(a, power, rows)
        if nxt.shape[0] == power.shape[0]:
            # successive powers of an ideal shrink until zero; a nonzero
            # fixed point can never reach zero
            raise InvalidInput("radical rows do not span a nilpotent ideal")
        power = nxt
    if power.shape[0] != 0:
        raise InvalidInput("radical rows do not span a nilpotent ideal")
    qdim = a.dim - rows.shape[0]
    if p > a.dim and qdim > 0:
        q, _, _ = quotient_algebra(a, rows)
        if _trace_form_kernel(q).shape[0] != 0:
            raise InvalidInput("quotient by the supplied radical is not semisimple")


def _trace_form_kernel(a: Algebra) -> np.ndarray:
    left = a.left_mult_matrices()
    tr = np.trace(left, axis1=1, axis2=2) % a.p  # tr(L_k)
    gram = np.einsum("ijk,k->ij", a.mult, tr) % a.p
    return linalg.kernel_basis(gram, a.p)


def radical_basis(a: Algebra) -> np.ndarray:
    """Rows spanning rad A.

    Uses the supplied/quiver-derived basis when present; otherwise the trace
    form, which is only valid for p > dim - smaller characteristics raise
    UnsupportedField rather than risking a wrong answer.
    """
    if a.radical is not None:
        return a.radical
    if a.p <= a.dim:
        raise UnsupportedField(
            f"radical of a dim-{a.dim} algebra over GF({a.p}) needs a supplied basis")
    rows = _trace_form_kernel(a)
    validate_radical(a, rows)
    a.radical = rows
    return rows


def quotient_algebra(a: Algebra, ideal_rows: np.ndarray):
    """Quotient A / I on the non-pivot complement basis.

    Returns (Q, proj, lift): proj (qdim x dim) maps coordinates of A onto Q,
    lift (dim x qdim) is the section on the complement basis; proj @ lift = I.
    """
    p = a.p
    rows = linalg.as_matrix(ideal_rows, p, cols=a.dim)
    r, piv = linalg.rref(rows, p)
    r = r[:len(piv)]
    pivot_set = set(piv)
    nonpiv = [c for c in range(a.dim) if c not in pivot_set]
    sel = linalg.zeros(len(piv), a.dim)
    for i, c in enumerate(piv):
        sel[i, c] = 1
    reduce_full = (linalg.identity(a.dim) - r.T @ sel) % p
    proj = reduce_full[nonpiv, :] % p
    lift = linalg.identity(a.dim)[:, nonpiv]
    qdim = len(nonpiv)
    mult = np.zeros((qdim, qdim, qdim), dtype=np.int64)
    for i in range(qdim):
        for j in range(qdim):
            mult[i, j] = (proj @ a.multiply(lift[:, i], lift[:, j])) % p
    q = Algebra(p=p, dim=qdim, mult=mult, unit=(proj @ a.unit) % p)
    return validate_algebra(q), proj, lift
