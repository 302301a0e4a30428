"""Exact integer linear algebra.

Everything here works over Python's arbitrary-precision ``int`` (and
``fractions.Fraction`` where a rational solve is unavoidable).  Matrices are
immutable :class:`IntMatrix` values; the reduction routines copy into plain
lists of lists, mutate those, and wrap the result again.

Conventions
-----------
* ``smith_normal_form(A)`` returns ``(U, D, V)`` with ``A == U @ D @ V``.
* Lattice bases are stored as the *columns* of an ``IntMatrix``.
* Exterior powers index rows and columns by strictly increasing tuples in
  lexicographic order (``itertools.combinations`` order).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Iterable, Sequence

from .errors import CompositionNotZero


@dataclass(frozen=True)
class IntMatrix:
    """Dense integer matrix, row-major, possibly with zero rows or columns."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative matrix dimension")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} "
                f"entries, got {len(self.entries)}"
            )

    # -- construction -----------------------------------------------------
    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> IntMatrix:
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), cols, tuple(int(x) for r in rows for x in r))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], rows: int) -> IntMatrix:
        columns = [list(c) for c in columns]
        if any(len(c) != rows for c in columns):
            raise ValueError("columns must all have length %d" % rows)
        return cls(rows, len(columns), tuple(int(columns[j][i]) for i in range(rows) for j in range(len(columns))))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntMatrix:
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    @classmethod
    def diagonal(cls, diag: Sequence[int], rows: int, cols: int) -> IntMatrix:
        data = [[0] * cols for _ in range(rows)]
        for i, d in enumerate(diag):
            data[i][i] = d
        return cls.from_rows(data, cols)

    # -- access -----------------------------------------------------------
    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> tuple[int, ...]:
        return self.entries[j::self.cols] if self.cols else ()

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def columns(self) -> list[tuple[int, ...]]:
        return [self.column(j) for j in range(self.cols)]

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> IntMatrix:
        return IntMatrix(len(rows), len(cols), tuple(self[i, j] for i in rows for j in cols))

    def select_columns(self, cols: Sequence[int]) -> IntMatrix:
        return self.submatrix(range(self.rows), cols)

    @property
    def T(self) -> IntMatrix:
        return IntMatrix(self.cols, self.rows, tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)))

    def is_zero(self) -> bool:
        return not any(self.entries)

    def hstack(self, other: IntMatrix) -> IntMatrix:
        if self.rows != other.rows:
            raise ValueError("row mismatch in hstack")
        return IntMatrix.from_rows([self.row(i) + other.row(i) for i in range(self.rows)], self.cols + other.cols)

    def vstack(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.cols:
            raise ValueError("column mismatch in vstack")
        return IntMatrix(self.rows + other.rows, self.cols, self.entries + other.entries)

    # -- arithmetic -------------------------------------------------------
    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        ocols = other.columns()
        out = []
        for i in range(self.rows):
            r = self.row(i)
            for c in ocols:
                out.append(sum(a * b for a, b in zip(r, c) if a and b))
        return IntMatrix(self.rows, other.cols, tuple(out))

    def __mul__(self, k: int) -> IntMatrix:
        return IntMatrix(self.rows, self.cols, tuple(k * x for x in self.entries))

    __rmul__ = __mul__

    def __neg__(self) -> IntMatrix:
        return self * -1

    def __add__(self, other: IntMatrix) -> IntMatrix:
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return IntMatrix(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: IntMatrix) -> IntMatrix:
        return self + (-other)

    def apply(self, v: Sequence[int]) -> tuple[int, ...]:
        """Matrix-vector product."""
        if len(v) != self.cols:
            raise ValueError("vector length mismatch")
        return tuple(sum(a * b for a, b in zip(self.row(i), v)) for i in range(self.rows))

    def __repr__(self) -> str:
        return f"IntMatrix({self.to_rows()!r})" if self.rows else f"IntMatrix.zeros(0, {self.cols})"


@dataclass(frozen=True)
class FgAbGroup:
    """Finitely generated abelian group ``Z^rank + sum Z/d_i`` with ``d_i | d_{i+1}``."""

    rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if self.rank < 0:
            raise ValueError("rank must be nonnegative")
        t = tuple(self.torsion)
        if any(d < 2 for d in t):
            raise ValueError("torsion coefficients must be >= 2")
        if any(b % a for a, b in zip(t, t[1:])):
            raise ValueError(f"torsion {t} is not a divisibility chain")
        object.__setattr__(self, "torsion", t)

    @property
    def is_zero(self) -> bool:
        return self.rank == 0 and not self.torsion

    def __str__(self) -> str:
        parts = []
        if self.rank:
            parts.append("Z" if self.rank == 1 else f"Z^{self.rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " + ".join(parts) if parts else "0"

    def to_json(self) -> dict:
        return {"rank": self.rank, "torsion": list(self.torsion)}


# ---------------------------------------------------------------------------
# Smith normal form
# ---------------------------------------------------------------------------

def _identity_rows(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def _snf(A: IntMatrix):
    """Core Smith reduction.

    Returns ``(U, D, V, Uinv, Vinv)`` as lists of lists together with the
    rank, maintaining ``A == U D V`` and ``U Uinv == I``, ``Vinv V == I``.
    """
    m, n = A.rows, A.cols
    D = A.to_rows()
    U, Uinv = _identity_rows(m), _identity_rows(m)
    V, Vinv = _identity_rows(n), _identity_rows(n)

    # Elementary operations on D, compensated on the transforms so that
    # A == U D V holds after every step.
    def row_add(i, j, c):  # row_i += c row_j
        D[i] = [a + c * b for a, b in zip(D[i], D[j])]
        for r in U:
            r[j] -= c * r[i]
        Uinv[i] = [a + c * b for a, b in zip(Uinv[i], Uinv[j])]

    def row_swap(i, j):
        D[i], D[j] = D[j], D[i]
        for r in U:
            r[i], r[j] = r[j], r[i]
        Uinv[i], Uinv[j] = Uinv[j], Uinv[i]

    def row_neg(i):
        D[i] = [-a for a in D[i]]
        for r in U:
            r[i] = -r[i]
        Uinv[i] = [-a for a in Uinv[i]]

    def col_add(j, i, c):  # col_j += c col_i
        for r in D:
            r[j] += c * r[i]
        V[i] = [a - c * b for a, b in zip(V[i], V[j])]
        for r in Vinv:
            r[j] += c * r[i]

    def col_swap(i, j):
        for r in D:
            r[i], r[j] = r[j], r[i]
        V[i], V[j] = V[j], V[i]
        for r in Vinv:
            r[i], r[j] = r[j], r[i]

    t = 0
    while t < min(m, n):
        # smallest nonzero |entry| in the trailing block, row-major scan
        best = None
        for i in range(t, m):
            for j in range(t, n):
                a = D[i][j]
                if a and (best is None or abs(a) < best[0]):
                    best = (abs(a), i, j)
        if best is None:
            break
        _, i, j = best
        if i != t:
            row_swap(i, t)
        if j != t:
            col_swap(j, t)

        while True:
            p = D[t][t]
            dirty = False
            for i in range(t + 1, m):
                if D[i][t]:
                    q = D[i][t] // p
                    row_add(i, t, -q)
                    if D[i][t]:
                        dirty = True
            for j in range(t + 1, n):
                if D[t][j]:
                    q = D[t][j] // p
                    col_add(j, t, -q)
                    if D[t][j]:
                        dirty = True
            if dirty:
                # a remainder is now smaller than the pivot; re-pivot on it
                best = None
                for i in range(t, m):
                    if D[i][t] and (best is None or abs(D[i][t]) < best[0]):
                        best = (abs(D[i][t]), i, t)
                for j in range(t, n):
                    if D[t][j] and (best is None or abs(D[t][j]) < best[0]):
                        best = (abs(D[t][j]), t, j)
                _, i, j = best
                if i != t:
                    row_swap(i, t)
                if j != t:
                    col_swap(j, t)
                continue
            # row and column clear; enforce divisibility on the trailing block
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if D[i][j] % p),
                None,
            )
            if bad is None:
                break
            row_add(t, bad, 1)
        if D[t][t] < 0:
            row_neg(t)
        t += 1
    return U, D, V, Uinv, Vinv, t


def smith_normal_form(A: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Return ``(U, D, V)`` with ``A = U D V``, ``U``/``V`` unimodular.

    ``D`` has the shape of ``A``, nonnegative diagonal entries and the
    divisibility chain ``d_1 | d_2 | ...``.  Pivoting always picks the
    smallest nonzero absolute value, scanning row-major, so the transforms
    are reproducible.
    """
    U, D, V, _, _, _ = _snf(A)
    return (
        IntMatrix.from_rows(U, A.rows),
        IntMatrix.from_rows(D, A.cols),
        IntMatrix.from_rows(V, A.cols),
    )


def invariant_factors(A: IntMatrix) -> tuple[int, ...]:
    """Nonzero diagonal of the Smith form."""
    _, D, _, _, _, r = _snf(A)
    return tuple(D[i][i] for i in range(r))


def rank(A: IntMatrix) -> int:
    return _rank_rows(A.to_rows())


def _rank_rows(rows: list[list]) -> int:
    # fraction-free elimination; cheaper than a full Smith reduction
    M = [list(r) for r in rows]
    if not M:
        return 0
    ncols = len(M[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(M)) if M[i][c]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        for i in range(r + 1, len(M)):
            if M[i][c]:
                a, b = M[r][c], M[i][c]
                M[i] = [a * x - b * y for x, y in zip(M[i], M[r])]
        r += 1
        if r == len(M):
            break
    return r


def det(A: IntMatrix) -> int:
    """Determinant by Bareiss fraction-free elimination."""
    if A.rows != A.cols:
        raise ValueError("determinant of a non-square matrix")
    return _det_rows(A.to_rows())


def _det_rows(M: list[list[int]]) -> int:
    n = len(M)
    if n == 0:
        return 1
    if n == 1:
        return M[0][0]
    if n == 2:
        return M[0][0] * M[1][1] - M[0][1] * M[1][0]
    if n == 3:
        (a, b, c), (d, e, f), (g, h, i) = M
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
    M = [list(r) for r in M]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            piv = next((i for i in range(k + 1, n) if M[i][k]), None)
            if piv is None:
                return 0
            M[k], M[piv] = M[piv], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


# ---------------------------------------------------------------------------
# Hermite normal form, kernels, saturation
# ---------------------------------------------------------------------------

def _row_hnf(rows: list[list[int]], ncols: int) -> list[list[int]]:
    """Row-style HNF of the Z-span of ``rows``; zero rows dropped.

    Pivots are positive and entries above a pivot lie in ``[0, pivot)``.
    """
    M = [list(r) for r in rows if any(r)]
    out_rank = 0
    for c in range(ncols):
        if out_rank >= len(M):
            break
        # Euclid down column c over rows out_rank..
        while True:
            nz = [i for i in range(out_rank, len(M)) if M[i][c]]
            if not nz:
                break
            i0 = min(nz, key=lambda i: (abs(M[i][c]), i))
            M[out_rank], M[i0] = M[i0], M[out_rank]
            p = M[out_rank][c]
            done = True
            for i in range(out_rank + 1, len(M)):
                if M[i][c]:
                    q = M[i][c] // p
                    M[i] = [a - q * b for a, b in zip(M[i], M[out_rank])]
                    if M[i][c]:
                        done = False
            if done:
                break
        if out_rank < len(M) and M[out_rank][c]:
            if M[out_rank][c] < 0:
                M[out_rank] = [-a for a in M[out_rank]]
            p = M[out_rank][c]
            for i in range(out_rank):
                q = M[i][c] // p
                if q:
                    M[i] = [a - q * b for a, b in zip(M[i], M[out_rank])]
            out_rank += 1
        M = M[:out_rank] + [r for r in M[out_rank:] if any(r)]
    return M[:out_rank]


def hnf_of_columns(B: IntMatrix) -> IntMatrix:
    """Canonical basis (as columns) of the Z-span of the columns of ``B``."""
    rows = _row_hnf([list(c) for c in B.columns()], B.rows)
    return IntMatrix.from_columns(rows, B.rows)


def kernel_basis(A: IntMatrix) -> IntMatrix:
    """Z-basis of ``{x : A x = 0}`` as columns, in canonical Hermite form.

    The kernel of an integer matrix is saturated, so this is also a basis of
    the real kernel intersected with the lattice.
    """
    _, _, _, _, Vinv, r = _snf(A)
    n = A.cols
    cols = [[Vinv[i][j] for i in range(n)] for j in range(r, n)]
    return hnf_of_columns(IntMatrix.from_columns(cols, n))


def hnf_basis(vectors: Iterable[Sequence[int]], dim: int | None = None) -> IntMatrix:
    """Hermite basis (columns) of the saturation of the span of ``vectors``.

    ``dim`` is the ambient dimension; it is only needed when ``vectors`` is
    empty.
    """
    vectors = [list(v) for v in vectors]
    if dim is None:
        if not vectors:
            raise ValueError("ambient dimension needed for an empty vector list")
        dim = len(vectors[0])
    if not vectors:
        return IntMatrix.zeros(dim, 0)
    # annihilator in the dual lattice, then its annihilator
    ann = kernel_basis(IntMatrix.from_rows(vectors, dim))
    return kernel_basis(ann.T) if ann.cols else IntMatrix.identity(dim)


def solve_integer(A: IntMatrix, B: IntMatrix) -> IntMatrix | None:
    """Some integer ``X`` with ``A X = B``, or ``None`` if none exists."""
    if A.rows != B.rows:
        raise ValueError("row mismatch")
    _, D, _, Uinv, Vinv, r = _snf(A)
    m, n = A.rows, A.cols
    out_cols = []
    for col in B.columns():
        c = [sum(Uinv[i][k] * col[k] for k in range(m)) for i in range(m)]
        y = [0] * n
        for i in range(m):
            if i < r:
                if c[i] % D[i][i]:
                    return None
                y[i] = c[i] // D[i][i]
            elif c[i]:
                return None
        out_cols.append([sum(Vinv[i][k] * y[k] for k in range(n)) for i in range(n)])
    return IntMatrix.from_columns(out_cols, n)


def solve_rational(A: Sequence[Sequence], b: Sequence) -> list[Fraction] | None:
    """One rational solution of ``A x = b`` (free variables set to zero)."""
    m = len(A)
    n = len(A[0]) if m else 0
    M = [[Fraction(x) for x in A[i]] + [Fraction(b[i])] for i in range(m)]
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if M[i][c]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        p = M[r][c]
        M[r] = [x / p for x in M[r]]
        for i in range(m):
            if i != r and M[i][c]:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
    if any(M[i][n] for i in range(r, m)):
        return None
    x = [Fraction(0)] * n
    for i, c in enumerate(pivots):
        x[c] = M[i][n]
    return x


def primitive(v: Sequence[int]) -> tuple[int, ...]:
    """Divide an integer vector by the gcd of its entries."""
    g = 0
    for a in v:
        g = gcd(g, a)
    if g == 0:
        return tuple(v)
    return tuple(a // g for a in v)


def clear_denominators(v: Sequence[Fraction]) -> tuple[int, ...]:
    """Positive rescaling of a rational vector to a primitive integer one."""
    den = 1
    for x in v:
        den = den * Fraction(x).denominator // gcd(den, Fraction(x).denominator)
    return primitive([int(Fraction(x) * den) for x in v])


# ---------------------------------------------------------------------------
# Homology and exterior powers
# ---------------------------------------------------------------------------

def homology_at(d_in: IntMatrix, d_out: IntMatrix) -> FgAbGroup:
    """``ker(d_out) / im(d_in)`` for ``C' --d_in--> C --d_out--> C''``.

    Raises :class:`CompositionNotZero` unless ``d_out @ d_in == 0``.
    """
    if d_in.rows != d_out.cols:
        raise ValueError(f"incompatible shapes {d_in.shape} then {d_out.shape}")
    if not (d_out @ d_in).is_zero():
        raise CompositionNotZero("d_out . d_in != 0")
    n = d_in.rows
    factors = invariant_factors(d_in)
    free = n - rank(d_out) - len(factors)
    return FgAbGroup(free, tuple(d for d in factors if d > 1))


def wedge_power_matrix(A: IntMatrix, r: int) -> IntMatrix:
    """Matrix of the r-th exterior power: all r x r minors of ``A``.

    Entry ``(I, J)`` is ``det A[I, J]``, with ``I`` and ``J`` running over
    increasing index tuples in lexicographic order.
    """
    if r < 0:
        raise ValueError("negative exterior degree")
    row_sets = list(combinations(range(A.rows), r))
    col_sets = list(combinations(range(A.cols), r))
    if r == 1:
        return A
    rows = A.to_rows()
    data = []
    for I in row_sets:
        sub = [rows[i] for i in I]
        for J in col_sets:
            data.append(_det_rows([[r[j] for j in J] for r in sub]))
    return IntMatrix(len(row_sets), len(col_sets), tuple(data))
