"""Exact linear algebra over the rationals.

Matrices are lists of row lists of ``Fraction``.  Everything here is small
and dense; the point is exactness (subspace equality and rank must be
decidable), not speed.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Vector = list[Fraction]
Matrix = list[Vector]


def parse_rational(value) -> Fraction:
    """Coerce ints, rational strings like ``"-3/4"``, and Fractions."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ValueError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise ValueError(f"cannot interpret {value!r} as an exact rational")


def format_rational(q: Fraction) -> str:
    return str(q)


def copy_matrix(rows: Sequence[Sequence[Fraction]]) -> Matrix:
    return [[Fraction(x) for x in row] for row in rows]


def zeros(nrows: int, ncols: int) -> Matrix:
    return [[Fraction(0)] * ncols for _ in range(nrows)]


def identity(n: int) -> Matrix:
    out = zeros(n, n)
    for i in range(n):
        out[i][i] = Fraction(1)
    return out


def transpose(rows: Sequence[Sequence[Fraction]]) -> Matrix:
    if not rows:
        return []
    return [list(col) for col in zip(*rows)]


def mat_vec(rows: Sequence[Sequence[Fraction]], v: Sequence[Fraction]) -> Vector:
    return [sum((a * b for a, b in zip(row, v)), Fraction(0)) for row in rows]


def mat_mul(a: Sequence[Sequence[Fraction]], b: Sequence[Sequence[Fraction]]) -> Matrix:
    bt = transpose(b)
    return [[sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt] for row in a]


def rref(rows: Sequence[Sequence[Fraction]]) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot column indices."""
    m = copy_matrix(rows)
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, nrows):
            if m[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        inv = Fraction(1) / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                factor = m[i][c]
                m[i] = [x - factor * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m, pivots


def rank(rows: Sequence[Sequence[Fraction]]) -> int:
    if not rows or not rows[0]:
        return 0
    return len(rref(rows)[1])


def nullspace(rows: Sequence[Sequence[Fraction]], ncols: int | None = None) -> list[Vector]:
    """Basis of ``{x : A x = 0}`` for the row matrix A.

    ``ncols`` must be given when A has no rows (then the nullspace is all
    of Q^ncols).
    """
    if not rows:
        if ncols is None:
            raise ValueError("ncols required for an empty row matrix")
        return [unit_vector(ncols, i) for i in range(ncols)]
    ncols = len(rows[0])
    red, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis: list[Vector] = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r, c in enumerate(pivots):
            v[c] = -red[r][f]
        basis.append(v)
    return basis


def unit_vector(n: int, i: int) -> Vector:
    v = [Fraction(0)] * n
    v[i] = Fraction(1)
    return v


def solve(rows: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]) -> Vector | None:
    """One solution of ``A x = rhs`` or None when inconsistent."""
    if not rows:
        if any(b != 0 for b in rhs):
            return None
        return []
    ncols = len(rows[0])
    aug = [list(row) + [b] for row, b in zip(rows, rhs)]
    red, pivots = rref(aug)
    if ncols in pivots:  # pivot in the rhs column: inconsistent
        return None
    x = [Fraction(0)] * ncols
    for r, c in enumerate(pivots):
        x[c] = red[r][ncols]
    return x


def column_space_basis(columns: Sequence[Sequence[Fraction]]) -> list[Vector]:
    """Canonical basis (rref rows) of the span of the given vectors."""
    if not columns:
        return []
    red, pivots = rref(columns)
    return [red[i] for i in range(len(pivots))]


def same_span(cols_a: Sequence[Sequence[Fraction]], cols_b: Sequence[Sequence[Fraction]]) -> bool:
    return column_space_basis(cols_a) == column_space_basis(cols_b)


def intersect_spans(cols_a: Sequence[Sequence[Fraction]], cols_b: Sequence[Sequence[Fraction]]) -> list[Vector]:
    """Basis of span(cols_a) ∩ span(cols_b)."""
    if not cols_a or not cols_b:
        return []
    n = len(cols_a[0])
    # Solve A c = B d; unknown (c, d).
    rows = []
    for i in range(n):
        rows.append([col[i] for col in cols_a] + [-col[i] for col in cols_b])
    sols = nullspace(rows)
    vecs = []
    for s in sols:
        c = s[: len(cols_a)]
        v = [sum((col[i] * ci for col, ci in zip(cols_a, c)), Fraction(0)) for i in range(n)]
        vecs.append(v)
    return column_space_basis(vecs)
