"""Skew bilinear forms, compatibility identities, and star products.

A form is stored as its full Gram matrix W with omega(u, v) = u^T W v.
Nondegeneracy is a cached flag (det W != 0), recomputed whenever a form is
constructed; degenerate forms are legal objects so that solution spaces of
the compatibility equations can be inspected, but every predicate that needs
nondegeneracy fails them with an explicit witness.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence

from sympleib.algebra import (
    Algebra,
    IdentityReport,
    Witness,
    is_left_leibniz,
    is_right_leibniz,
    is_symmetric_leibniz,
    multiply,
    split,
)
from sympleib.exactlin import (
    HALF,
    ONE,
    ZERO,
    Matrix,
    Subspace,
    basis_vector,
    kernel,
    rat,
    solve_unique,
    span,
    vadd,
    vsub,
    vzero,
)


@dataclass(frozen=True)
class SkewForm:
    w: Matrix
    nondegenerate: bool = field(compare=False)

    def __init__(self, w: Matrix):
        if w.rows != w.cols:
            raise ValueError("form matrix must be square")
        for i in range(w.rows):
            for j in range(w.rows):
                if w.entries[i][j] != -w.entries[j][i]:
                    raise ValueError(f"form matrix is not skew at ({i}, {j})")
        object.__setattr__(self, "w", w)
        object.__setattr__(self, "nondegenerate", w.det() != 0)

    @property
    def dim(self) -> int:
        return self.w.rows

    def radical_vector(self) -> tuple[Fraction, ...]:
        """A nonzero kernel vector of a degenerate form."""
        ker = kernel(self.w)
        if ker.dim == 0:
            raise ValueError("form is nondegenerate")
        return ker.basis.entries[0]


def form_from_pairs(dim: int, pairs: Mapping[tuple[int, int], object],
                    one_based: bool = True) -> SkewForm:
    """Skew form from its strict upper-triangle entries, e.g. {(1, 4): 1}."""
    off = 1 if one_based else 0
    rows = [[ZERO] * dim for _ in range(dim)]
    for (i, j), v in pairs.items():
        i -= off
        j -= off
        if not (0 <= i < dim and 0 <= j < dim) or i == j:
            raise ValueError(f"invalid form index pair ({i + off}, {j + off})")
        x = rat(v)
        rows[i][j] += x
        rows[j][i] -= x
    return SkewForm(Matrix.from_rows(rows))


def omega(form: SkewForm, u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    return sum((a * b for a, b in zip(u, form.w.matvec(v), strict=True)), ZERO)


def omega_adjoint(form: SkewForm, m: Matrix) -> Matrix:
    """The adjoint m* with omega(m* u, v) = omega(u, m v).

    Because the form is skew, the same matrix also satisfies the mirrored
    convention omega(u, m* v) = omega(m u, v).
    """
    if not form.nondegenerate:
        raise ValueError("adjoint requires a nondegenerate form")
    if m.rows != form.dim or m.cols != form.dim:
        raise ValueError("operator shape does not match the form")
    return form.w.inverse() @ m.transpose() @ form.w


def _degenerate_report(name: str, form: SkewForm) -> IdentityReport:
    return IdentityReport(name, False,
                          Witness("degenerate-form", (), form.radical_vector()))


def _scalar_triple_report(name: str, kind: str, n: int, defect) -> IdentityReport:
    for i in range(n):
        for j in range(n):
            for k in range(n):
                d = defect(i, j, k)
                if d != 0:
                    return IdentityReport(name, False, Witness(kind, (i, j, k), (d,)))
    return IdentityReport(name, True)


def is_symplectic_left(a: Algebra, form: SkewForm) -> IdentityReport:
    """omega(u, v*w) - omega(v, u*w) = (1/2) omega(u*v, w) - (1/2) omega(v*u, w)."""
    if a.dim != form.dim:
        raise ValueError("dimension mismatch")
    if not form.nondegenerate:
        return _degenerate_report("left-symplectic", form)
    e = [basis_vector(a.dim, i) for i in range(a.dim)]

    def defect(i, j, k):
        return (omega(form, e[i], a.c[j][k]) - omega(form, e[j], a.c[i][k])
                - HALF * omega(form, a.c[i][j], e[k]) + HALF * omega(form, a.c[j][i], e[k]))
    return _scalar_triple_report("left-symplectic", "left-symplectic", a.dim, defect)


def is_symplectic_right(a: Algebra, form: SkewForm) -> IdentityReport:
    """omega(u, w*v) - omega(v, w*u) = (1/2) omega(v*u, w) - (1/2) omega(u*v, w)."""
    if a.dim != form.dim:
        raise ValueError("dimension mismatch")
    if not form.nondegenerate:
        return _degenerate_report("right-symplectic", form)
    e = [basis_vector(a.dim, i) for i in range(a.dim)]

    def defect(i, j, k):
        return (omega(form, e[i], a.c[k][j]) - omega(form, e[j], a.c[k][i])
                - HALF * omega(form, a.c[j][i], e[k]) + HALF * omega(form, a.c[i][j], e[k]))
    return _scalar_triple_report("right-symplectic", "right-symplectic", a.dim, defect)


def _d_omega(form: SkewForm, bracket: Algebra, i: int, j: int, k: int,
             e: list) -> Fraction:
    """Chevalley-Eilenberg differential of the form against a bracket."""
    return (omega(form, e[i], bracket.c[j][k])
            + omega(form, e[j], bracket.c[k][i])
            + omega(form, e[k], bracket.c[i][j]))


def is_symplectic_left_split(a: Algebra, form: SkewForm) -> IdentityReport:
    """Equivalent reformulation through the commutator/anticommutator split.

    d omega(u, v, w) = omega(v, u <> w) - omega(u, v <> w), where the bracket
    used inside d omega is half the antisymmetrized product.  Kept as a fully
    separate code path from is_symplectic_left so the two can be compared.
    """
    if a.dim != form.dim:
        raise ValueError("dimension mismatch")
    if not form.nondegenerate:
        return _degenerate_report("left-symplectic-split", form)
    bracket, diamond = split(a)
    e = [basis_vector(a.dim, i) for i in range(a.dim)]

    def defect(i, j, k):
        return (_d_omega(form, bracket, i, j, k, e)
                - omega(form, e[j], diamond.c[i][k])
                + omega(form, e[i], diamond.c[j][k]))
    return _scalar_triple_report("left-symplectic-split", "left-symplectic-split",
                                 a.dim, defect)


def is_symplectic_right_split(a: Algebra, form: SkewForm) -> IdentityReport:
    """d omega(u, v, w) = omega(u, v <> w) - omega(v, u <> w), mirror of the left case."""
    if a.dim != form.dim:
        raise ValueError("dimension mismatch")
    if not form.nondegenerate:
        return _degenerate_report("right-symplectic-split", form)
    bracket, diamond = split(a)
    e = [basis_vector(a.dim, i) for i in range(a.dim)]

    def defect(i, j, k):
        return (_d_omega(form, bracket, i, j, k, e)
                - omega(form, e[i], diamond.c[j][k])
                + omega(form, e[j], diamond.c[i][k]))
    return _scalar_triple_report("right-symplectic-split", "right-symplectic-split",
                                 a.dim, defect)


def is_bi_symplectic(a: Algebra, form: SkewForm) -> IdentityReport:
    """Both-sided compatibility, checked directly on the split product:

    the form is closed for the commutator bracket, and the anticommutator
    satisfies omega(u <> w, v) = omega(v <> w, u).
    """
    if a.dim != form.dim:
        raise ValueError("dimension mismatch")
    if not form.nondegenerate:
        return _degenerate_report("bi-symplectic", form)
    bracket, diamond = split(a)
    e = [basis_vector(a.dim, i) for i in range(a.dim)]
    for i in range(a.dim):
        for j in range(a.dim):
            for k in range(a.dim):
                d = _d_omega(form, bracket, i, j, k, e)
                if d != 0:
                    return IdentityReport("bi-symplectic", False,
                                          Witness("d-omega", (i, j, k), (d,)))
    for i in range(a.dim):
        for j in range(a.dim):
            for k in range(a.dim):
                d = omega(form, diamond.c[i][k], e[j]) - omega(form, diamond.c[j][k], e[i])
                if d != 0:
                    return IdentityReport("bi-symplectic", False,
                                          Witness("diamond-symmetry", (i, j, k), (d,)))
    return IdentityReport("bi-symplectic", True)


# ---------------------------------------------------------------------------
# solving for compatible forms

def upper_index(n: int, i: int, j: int) -> int:
    """Position of (i, j), i < j, in the lexicographic strict upper triangle."""
    if not (0 <= i < j < n):
        raise ValueError("need i < j inside range")
    return i * n - i * (i + 1) // 2 + (j - i - 1)


def _entry_coord(n: int, a: int, b: int) -> Optional[tuple[int, Fraction]]:
    """Map W[a][b] to (upper-triangle coordinate, sign)."""
    if a == b:
        return None
    if a < b:
        return upper_index(n, a, b), ONE
    return upper_index(n, b, a), -ONE


def form_from_coords(n: int, coords: Sequence[Fraction]) -> SkewForm:
    """Inverse of the strict upper-triangle coordinate encoding."""
    if len(coords) != n * (n - 1) // 2:
        raise ValueError("coordinate vector has wrong length")
    rows = [[ZERO] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            x = rat(coords[upper_index(n, i, j)])
            rows[i][j] = x
            rows[j][i] = -x
    return SkewForm(Matrix.from_rows(rows))


def form_coords(form: SkewForm) -> tuple[Fraction, ...]:
    n = form.dim
    return tuple(form.w.entries[i][j] for i in range(n) for j in range(i + 1, n))


def solve_symplectic_forms(a: Algebra, side: str = "left") -> Subspace:
    """All skew forms satisfying the chosen compatibility, as a subspace of
    strict upper-triangle coordinates.  Nondegeneracy is not imposed; use
    find_nondegenerate to look for an invertible representative.
    """
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    n = a.dim
    nvars = n * (n - 1) // 2
    rows = []

    def add_term(row, u_basis: int, vec: Sequence[Fraction], factor: Fraction):
        # contribution of factor * omega(e_u, vec)
        for b, x in enumerate(vec):
            if x == 0:
                continue
            loc = _entry_coord(n, u_basis, b)
            if loc is not None:
                row[loc[0]] += factor * x * loc[1]

    for i in range(n):
        for j in range(n):
            for k in range(n):
                row = [ZERO] * nvars
                if side == "left":
                    add_term(row, i, a.c[j][k], ONE)
                    add_term(row, j, a.c[i][k], -ONE)
                    add_term(row, k, a.c[i][j], HALF)    # -1/2 omega(uv, w)
                    add_term(row, k, a.c[j][i], -HALF)   # +1/2 omega(vu, w)
                else:
                    add_term(row, i, a.c[k][j], ONE)
                    add_term(row, j, a.c[k][i], -ONE)
                    add_term(row, k, a.c[j][i], HALF)    # -1/2 omega(vu, w)
                    add_term(row, k, a.c[i][j], -HALF)   # +1/2 omega(uv, w)
                rows.append(row)
    return kernel(Matrix.from_rows(rows))


def find_nondegenerate(space: Subspace, dim: int, seed: int = 0,
                       attempts: int = 128) -> Optional[SkewForm]:
    """Random integer combinations of the basis, first invertible one wins.

    The search is probabilistic on purpose: a None only means none was found
    with this seed, not that the space contains no nondegenerate form.
    """
    if space.ambient_dim != dim * (dim - 1) // 2:
        raise ValueError("coordinate space does not match the stated dimension")
    rng = random.Random(seed)
    for _ in range(attempts):
        coords = list(vzero(space.ambient_dim))
        for row in space.basis.entries:
            c = rng.randint(-10, 10)
            if c != 0:
                coords = [x + c * y for x, y in zip(coords, row)]
        form = form_from_coords(dim, coords)
        if form.nondegenerate:
            return form
    return None


# ---------------------------------------------------------------------------
# star products

def star_left(a: Algebra, form: SkewForm) -> Algebra:
    """Product defined by omega(u ⋆ v, w) = -omega(v, u * w).

    Each basis pair is resolved by one exact n x n solve against the Gram
    matrix; nondegeneracy makes the solution unique.
    """
    if not form.nondegenerate:
        raise ValueError("star product requires a nondegenerate form")
    n = a.dim
    e = [basis_vector(n, i) for i in range(n)]
    wt = form.w.transpose()
    c = []
    for i in range(n):
        row = []
        for j in range(n):
            rhs = [-omega(form, e[j], a.c[i][k]) for k in range(n)]
            row.append(solve_unique(wt, rhs))
        c.append(tuple(row))
    return Algebra(n, tuple(c), a.labels)


def star_right(a: Algebra, form: SkewForm) -> Algebra:
    """Product defined by omega(u ⋆ v, w) = -omega(v, w * u)."""
    if not form.nondegenerate:
        raise ValueError("star product requires a nondegenerate form")
    n = a.dim
    e = [basis_vector(n, i) for i in range(n)]
    wt = form.w.transpose()
    c = []
    for i in range(n):
        row = []
        for j in range(n):
            rhs = [-omega(form, e[j], a.c[k][i]) for k in range(n)]
            row.append(solve_unique(wt, rhs))
        c.append(tuple(row))
    return Algebra(n, tuple(c), a.labels)


# ---------------------------------------------------------------------------
# orthogonals

def orthogonal(form: SkewForm, s: Subspace) -> Subspace:
    """{v : omega(v, s) = 0}; computed from stacked constraint rows W b."""
    if s.ambient_dim != form.dim:
        raise ValueError("ambient dimension mismatch")
    if s.dim == 0:
        return span(form.dim, [basis_vector(form.dim, i) for i in range(form.dim)])
    rows = [form.w.matvec(b) for b in s.basis.entries]
    return kernel(Matrix.from_rows(rows))


def is_isotropic(form: SkewForm, s: Subspace) -> bool:
    return orthogonal(form, s).contains_subspace(s)


def is_lagrangian(form: SkewForm, s: Subspace) -> bool:
    return orthogonal(form, s) == s


# ---------------------------------------------------------------------------
# a checked bundle

@dataclass(frozen=True)
class SymplecticAlgebra:
    """An algebra plus a compatible nondegenerate skew form, checked on build."""

    algebra: Algebra
    form: SkewForm
    side: str = "left"

    def __post_init__(self):
        checks = {
            "left": (is_symplectic_left,),
            "right": (is_symplectic_right,),
            "bi": (is_bi_symplectic,),
        }
        if self.side not in checks:
            raise ValueError("side must be 'left', 'right', or 'bi'")
        for check in checks[self.side]:
            rep = check(self.algebra, self.form)
            if not rep.holds:
                w = rep.witness
                raise ValueError(
                    f"form is not {rep.name} compatible: {w.kind} fails at "
                    f"indices {w.indices} with defect {w.defect}")
