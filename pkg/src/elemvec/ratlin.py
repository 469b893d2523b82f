"""Exact rational linear algebra.

Vectors are plain tuples of :class:`fractions.Fraction`; matrices are
:class:`RatMat` values that remember their column count so that matrices
without rows still describe a map out of a known space.  Nothing in here
touches floating point.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Optional, Sequence

from .errors import DimensionError

RatVec = tuple  # tuple[Fraction, ...]


def as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floats are not accepted; pass int, str or Fraction")
    return Fraction(value)


def vec(values: Iterable) -> RatVec:
    return tuple(as_fraction(v) for v in values)


def zeros(n: int) -> RatVec:
    return (Fraction(0),) * n


def unit(n: int, i: int) -> RatVec:
    return tuple(Fraction(1 if j == i else 0) for j in range(n))


def support(v: Sequence[Fraction]) -> tuple[int, ...]:
    return tuple(i for i, a in enumerate(v) if a != 0)


def add(u: RatVec, v: RatVec) -> RatVec:
    _check_len(u, v)
    return tuple(a + b for a, b in zip(u, v))


def sub(u: RatVec, v: RatVec) -> RatVec:
    _check_len(u, v)
    return tuple(a - b for a, b in zip(u, v))


def scale(c, v: RatVec) -> RatVec:
    c = as_fraction(c)
    return tuple(c * a for a in v)


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    _check_len(u, v)
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def vsum(vectors: Iterable[RatVec], n: int) -> RatVec:
    total = [Fraction(0)] * n
    for v in vectors:
        if len(v) != n:
            raise DimensionError(f"expected length {n}, got {len(v)}")
        for i, a in enumerate(v):
            total[i] += a
    return tuple(total)


def _check_len(u, v):
    if len(u) != len(v):
        raise DimensionError(f"length mismatch: {len(u)} vs {len(v)}")


@dataclass(frozen=True)
class RatMat:
    """Row-major rational matrix with an explicit column count."""

    rows: tuple
    ncols: int

    def __post_init__(self):
        for row in self.rows:
            if len(row) != self.ncols:
                raise DimensionError(f"row of length {len(row)} in matrix with {self.ncols} columns")

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), self.ncols)

    def apply(self, v: Sequence[Fraction]) -> RatVec:
        if len(v) != self.ncols:
            raise DimensionError(f"matrix has {self.ncols} columns, vector has length {len(v)}")
        return tuple(dot(row, v) for row in self.rows)

    def column(self, j: int) -> RatVec:
        return tuple(row[j] for row in self.rows)

    def select_columns(self, cols: Sequence[int]) -> "RatMat":
        return RatMat(tuple(tuple(row[j] for j in cols) for row in self.rows), len(cols))

    def stack(self, other: "RatMat") -> "RatMat":
        if other.ncols != self.ncols:
            raise DimensionError("cannot stack matrices with different column counts")
        return RatMat(self.rows + other.rows, self.ncols)

    def append_rows(self, rows: Iterable[Sequence]) -> "RatMat":
        return RatMat(self.rows + tuple(vec(r) for r in rows), self.ncols)


def mat(rows: Iterable[Sequence], ncols: Optional[int] = None) -> RatMat:
    rows = tuple(vec(r) for r in rows)
    if ncols is None:
        if not rows:
            raise DimensionError("ncols is required for a matrix without rows")
        ncols = len(rows[0])
    return RatMat(rows, ncols)


def identity(n: int) -> RatMat:
    return RatMat(tuple(unit(n, i) for i in range(n)), n)


def hstack(*blocks: RatMat) -> RatMat:
    nrows = blocks[0].nrows
    if any(b.nrows != nrows for b in blocks):
        raise DimensionError("blocks must have equal row counts")
    rows = tuple(sum((b.rows[i] for b in blocks), ()) for i in range(nrows))
    return RatMat(rows, sum(b.ncols for b in blocks))


# -- fraction-free elimination -------------------------------------------------

def _integer_row(row: Sequence[Fraction]) -> list[int]:
    den = lcm(*(a.denominator for a in row)) if row else 1
    ints = [int(a * den) for a in row]
    return _primitive(ints)


def _primitive(ints: list[int]) -> list[int]:
    g = 0
    for a in ints:
        g = gcd(g, a)
    if g > 1:
        ints = [a // g for a in ints]
    return ints


def _integer_rref(m: RatMat) -> tuple[list[list[int]], list[int]]:
    """Gauss-Jordan on integer rows; each row is kept primitive after every update.

    Returns the nonzero rows and their pivot columns.
    """
    rows = [_integer_row(r) for r in m.rows]
    rows = [r for r in rows if any(r)]
    pivots: list[int] = []
    prow = 0
    for col in range(m.ncols):
        if prow == len(rows):
            break
        piv = next((i for i in range(prow, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[prow], rows[piv] = rows[piv], rows[prow]
        p_row = rows[prow]
        p = p_row[col]
        for i in range(len(rows)):
            a = rows[i][col]
            if i == prow or a == 0:
                continue
            rows[i] = _primitive([p * x - a * y for x, y in zip(rows[i], p_row)])
        pivots.append(col)
        prow += 1
    return rows[:prow], pivots


def rank(m: RatMat) -> int:
    return len(_integer_rref(m)[1])


def kernel_basis(m: RatMat) -> list[RatVec]:
    """Basis of {v : Mv = 0}, one primitive integer vector per free column."""
    rows, pivots = _integer_rref(m)
    pivot_set = set(pivots)
    basis = []
    for f in range(m.ncols):
        if f in pivot_set:
            continue
        v = [Fraction(0)] * m.ncols
        v[f] = Fraction(1)
        for row, p in zip(rows, pivots):
            v[p] = Fraction(-row[f], row[p])
        basis.append(normalize_primitive(tuple(v)))
    return basis


def restricted_kernel(m: RatMat, cols: Iterable[int]) -> list[RatVec]:
    """Basis of {v : Mv = 0, v_i = 0 for i outside ``cols``}, embedded in the full space."""
    cols = sorted(set(cols))
    for j in cols:
        if not 0 <= j < m.ncols:
            raise IndexError(f"column index {j} out of range for {m.ncols} columns")
    if not cols:
        return []
    basis = []
    for w in kernel_basis(m.select_columns(cols)):
        v = [Fraction(0)] * m.ncols
        for j, a in zip(cols, w):
            v[j] = a
        basis.append(tuple(v))
    return basis


def normalize_primitive(v: Sequence[Fraction]) -> RatVec:
    """Positive multiple of ``v`` with coprime integer entries."""
    v = vec(v)
    if not any(v):
        raise ValueError("cannot normalize the zero vector")
    den = lcm(*(a.denominator for a in v))
    ints = _primitive([int(a * den) for a in v])
    return tuple(Fraction(a) for a in ints)


def solve(m: RatMat, b: Sequence[Fraction]) -> Optional[RatVec]:
    """One solution of Mx = b (free variables set to zero), or None."""
    if len(b) != m.nrows:
        raise DimensionError("right-hand side length must equal the row count")
    aug = hstack(m, RatMat(tuple((as_fraction(x),) for x in b), 1))
    rows, pivots = _integer_rref(aug)
    if pivots and pivots[-1] == m.ncols:
        return None
    x = [Fraction(0)] * m.ncols
    for row, p in zip(rows, pivots):
        x[p] = Fraction(row[-1], row[p])
    return tuple(x)


# -- exact feasibility via simplex ---------------------------------------------

Constraint = tuple  # (coefficients, rhs)


def feasible(
    strict: Sequence[Constraint] = (),
    weak: Sequence[Constraint] = (),
    eq: Sequence[Constraint] = (),
    dim: int = 0,
) -> Optional[RatVec]:
    """Find x with a.x > c (strict), a.x >= c (weak), a.x = c (eq).

    Returns an exact witness or None when the system is infeasible.  Strict
    rows share one gap variable t in [0, 1] which phase 2 maximizes; the
    system is feasible iff the optimum gap is positive.
    """
    strict = [(vec(a), as_fraction(c)) for a, c in strict]
    weak = [(vec(a), as_fraction(c)) for a, c in weak]
    eq = [(vec(a), as_fraction(c)) for a, c in eq]
    for a, _ in (*strict, *weak, *eq):
        if len(a) != dim:
            raise DimensionError(f"constraint of length {len(a)} in dimension {dim}")

    # columns: p (dim) | q (dim) | slacks (weak + strict) | t | u
    n_slack = len(weak) + len(strict)
    has_gap = bool(strict)
    n = 2 * dim + n_slack + (2 if has_gap else 0)
    t_col = 2 * dim + n_slack
    rows, rhs = [], []

    def base_row(a):
        row = [Fraction(0)] * n
        for i, coef in enumerate(a):
            row[i] = coef
            row[dim + i] = -coef
        return row

    for a, c in eq:
        rows.append(base_row(a))
        rhs.append(c)
    for k, (a, c) in enumerate(weak):
        row = base_row(a)
        row[2 * dim + k] = Fraction(-1)
        rows.append(row)
        rhs.append(c)
    for k, (a, c) in enumerate(strict):
        row = base_row(a)
        row[2 * dim + len(weak) + k] = Fraction(-1)
        row[t_col] = Fraction(-1)
        rows.append(row)
        rhs.append(c)
    if has_gap:
        row = [Fraction(0)] * n
        row[t_col] = Fraction(1)
        row[t_col + 1] = Fraction(1)
        rows.append(row)
        rhs.append(Fraction(1))

    y = _simplex(rows, rhs, n, maximize=t_col if has_gap else None)
    if y is None:
        return None
    if has_gap and y[t_col] <= 0:
        return None
    x = tuple(y[i] - y[dim + i] for i in range(dim))
    assert all(dot(a, x) > c for a, c in strict)
    assert all(dot(a, x) >= c for a, c in weak)
    assert all(dot(a, x) == c for a, c in eq)
    return x


def _simplex(A: list[list[Fraction]], b: list[Fraction], n: int, maximize: Optional[int]):
    """Two-phase tableau simplex with Bland's rule for {Ay = b, y >= 0}.

    Returns a basic feasible solution (optimal for max y[maximize] when given),
    or None if infeasible.
    """
    m = len(A)
    T = []
    for i in range(m):
        row = list(A[i])
        bi = b[i]
        if bi < 0:
            row = [-a for a in row]
            bi = -bi
        art = [Fraction(0)] * m
        art[i] = Fraction(1)
        T.append(row + art + [bi])
    basis = list(range(n, n + m))
    width = n + m

    # phase 1: minimize the sum of artificials
    cost = [Fraction(0)] * n + [Fraction(1)] * m
    _run_bland(T, basis, cost, width, allowed=width)
    if sum((T[i][-1] for i in range(len(T)) if basis[i] >= n), Fraction(0)) > 0:
        return None

    # drive zero-level artificials out of the basis, dropping redundant rows
    i = 0
    while i < len(T):
        if basis[i] >= n:
            j = next((j for j in range(n) if T[i][j] != 0), None)
            if j is None:
                del T[i]
                del basis[i]
                continue
            _pivot(T, i, j)
            basis[i] = j
        i += 1

    if maximize is not None:
        cost = [Fraction(0)] * width
        cost[maximize] = Fraction(-1)
        _run_bland(T, basis, cost, width, allowed=n)

    y = [Fraction(0)] * n
    for i, j in enumerate(basis):
        if j < n:
            y[j] = T[i][-1]
    return y


def _pivot(T, r, c, z=None):
    prow = T[r]
    p = prow[c]
    if p != 1:
        prow = [a / p for a in prow]
        T[r] = prow
    nz = [(j, a) for j, a in enumerate(prow) if a != 0]
    for i, row in enumerate(T):
        if i == r:
            continue
        f = row[c]
        if f != 0:
            for j, a in nz:
                row[j] -= f * a
    if z is not None:
        f = z[c]
        if f != 0:
            for j, a in nz:
                z[j] -= f * a


def _run_bland(T, basis, cost, width, allowed):
    """Minimize cost.y over the tableau; only columns < ``allowed`` may enter."""
    # reduced-cost row, kept current through every pivot
    z = list(cost) + [Fraction(0)]
    for i, j in enumerate(basis):
        cb = cost[j]
        if cb != 0:
            for k, a in enumerate(T[i]):
                if a != 0:
                    z[k] -= cb * a
    while True:
        in_basis = set(basis)
        entering = next((j for j in range(allowed) if z[j] < 0 and j not in in_basis), None)
        if entering is None:
            return
        leave, best = None, None
        for i, row in enumerate(T):
            a = row[entering]
            if a > 0:
                ratio = row[-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    leave, best = i, ratio
        if leave is None:
            raise ArithmeticError("unbounded objective in a bounded feasibility program")
        _pivot(T, leave, entering, z)
        basis[leave] = entering
