"""Dense exact linear algebra over Q(i), plus a sparse row-reducer.

Matrices are small (dimension <= ~64 in practice) and dense; the sparse
machinery exists for the heavily structured linear systems that come out of
derivation computations (n^2 unknowns, n^3 equations, almost all zero).
Everything is exact: no rounding, no tolerances.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import DomainError, InputError, InternalInvariantError
from .scalars import ONE, ZERO, Scalar, as_scalar

Vector = tuple[Scalar, ...]


def vec(entries: Iterable) -> Vector:
    return tuple(as_scalar(x) for x in entries)


def unit_vector(n: int, index: int) -> Vector:
    return tuple(ONE if i == index else ZERO for i in range(n))


def vec_is_zero(v: Sequence[Scalar]) -> bool:
    return all(not x for x in v)


def vec_add(u: Sequence[Scalar], v: Sequence[Scalar]) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u: Sequence[Scalar], v: Sequence[Scalar]) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(c: Scalar, v: Sequence[Scalar]) -> Vector:
    return tuple(c * a for a in v)


class Matrix:
    """Immutable dense matrix of Scalars."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Sequence[Sequence]):
        grid = tuple(tuple(as_scalar(x) for x in row) for row in entries)
        if grid:
            width = len(grid[0])
            if any(len(r) != width for r in grid):
                raise InputError("ragged matrix rows")
        else:
            width = 0
        object.__setattr__(self, "entries", grid)
        object.__setattr__(self, "rows", len(grid))
        object.__setattr__(self, "cols", width)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> "Matrix":
        cols = rows if cols is None else cols
        return cls([[ZERO] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence]) -> "Matrix":
        cols = [vec(c) for c in columns]
        if not cols:
            return cls([])
        n = len(cols[0])
        return cls([[cols[j][i] for j in range(len(cols))] for i in range(n)])

    # -- accessors ----------------------------------------------------------

    def __getitem__(self, key):
        i, j = key
        return self.entries[i][j]

    def row(self, i: int) -> Vector:
        return self.entries[i]

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.entries)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return all(not x for r in self.entries for x in r)

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)])

    def __neg__(self) -> "Matrix":
        return Matrix([[-a for a in r] for r in self.entries])

    def scale(self, c) -> "Matrix":
        c = as_scalar(c)
        return Matrix([[c * a for a in r] for r in self.entries])

    def __mul__(self, other):
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                raise InputError(f"shape mismatch {self.rows}x{self.cols} * {other.rows}x{other.cols}")
            ot = other.entries
            out = []
            for r in self.entries:
                acc = [ZERO] * other.cols
                for k, a in enumerate(r):
                    if not a:
                        continue
                    row_k = ot[k]
                    acc = [acc[j] + a * row_k[j] for j in range(other.cols)]
                out.append(acc)
            return Matrix(out)
        return self.apply(other)

    def apply(self, v: Sequence[Scalar]) -> Vector:
        """Matrix times column vector."""
        if len(v) != self.cols:
            raise InputError("vector length mismatch")
        out = [ZERO] * self.rows
        for i, r in enumerate(self.entries):
            s = ZERO
            for a, x in zip(r, v):
                if a and x:
                    s = s + a * x
            out[i] = s
        return tuple(out)

    def __pow__(self, k: int) -> "Matrix":
        if not self.is_square():
            raise InputError("power of a non-square matrix")
        if k < 0:
            return self.inverse() ** (-k)
        result = Matrix.identity(self.rows)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def transpose(self) -> "Matrix":
        return Matrix([self.column(j) for j in range(self.cols)])

    def trace(self) -> Scalar:
        if not self.is_square():
            raise InputError("trace of a non-square matrix")
        t = ZERO
        for i in range(self.rows):
            t = t + self.entries[i][i]
        return t

    def inverse(self) -> "Matrix":
        if not self.is_square():
            raise InputError("inverse of a non-square matrix")
        n = self.rows
        aug = [list(self.entries[i]) + list(Matrix.identity(n).entries[i]) for i in range(n)]
        reduced, _rank, pivots = _rref_rows(aug)
        if len([p for p in pivots if p < n]) < n:
            raise InputError("matrix is singular")
        inv = [row[n:] for row in reduced]
        return Matrix(inv)

    def vectorize(self) -> Vector:
        """Row-major flattening; the canonical coordinates for matrix spaces."""
        return tuple(x for r in self.entries for x in r)

    @classmethod
    def from_vectorized(cls, flat: Sequence[Scalar], rows: int, cols: int) -> "Matrix":
        return cls([flat[i * cols : (i + 1) * cols] for i in range(rows)])

    # -- plumbing ------------------------------------------------------------

    def _same_shape(self, other: "Matrix"):
        if self.rows != other.rows or self.cols != other.cols:
            raise InputError("matrix shape mismatch")

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __str__(self):
        return "\n".join("[" + ", ".join(str(x) for x in r) + "]" for r in self.entries)

    def __repr__(self):
        return f"Matrix({self.rows}x{self.cols})"


def _rref_rows(rows: list[list[Scalar]]) -> tuple[list[list[Scalar]], int, list[int]]:
    """In-place Gauss-Jordan on a list of row lists; fully deterministic."""
    if not rows:
        return rows, 0, []
    nrows, ncols = len(rows), len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, nrows):
            if rows[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [inv * x for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows, r, pivots


def rref(m: Matrix) -> tuple[Matrix, int, tuple[int, ...]]:
    """Canonical reduced row-echelon form with rank and pivot columns."""
    rows = [list(r) for r in m.entries]
    reduced, rank, pivots = _rref_rows(rows)
    return Matrix(reduced), rank, tuple(pivots)


def rank(m: Matrix) -> int:
    return rref(m)[1]


def kernel(m: Matrix) -> "Subspace":
    """Right kernel {v : m v = 0}, with each basis vector re-verified."""
    reduced, rk, pivots = rref(m)
    pivot_set = set(pivots)
    free = [c for c in range(m.cols) if c not in pivot_set]
    basis = []
    for f in free:
        v = [ZERO] * m.cols
        v[f] = ONE
        for r_idx, c in enumerate(pivots):
            coeff = reduced[r_idx, f]
            if coeff:
                v[c] = -coeff
        basis.append(v)
    space = Subspace.from_vectors(m.cols, basis)
    for b in space.basis_rows():
        if not vec_is_zero(m.apply(b)):
            raise InternalInvariantError("kernel vector fails m*v = 0")
    if space.dim != m.cols - rk:
        raise InternalInvariantError("kernel dimension inconsistent with rank")
    return space


class Subspace:
    """A subspace of Q(i)^n held as a canonical RREF row basis."""

    __slots__ = ("ambient", "basis", "pivots")

    def __init__(self, ambient: int, basis: Matrix, pivots: tuple[int, ...]):
        object.__setattr__(self, "ambient", ambient)
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "pivots", pivots)

    def __setattr__(self, name, value):
        raise AttributeError("Subspace is immutable")

    @classmethod
    def from_vectors(cls, ambient: int, vectors: Iterable[Sequence]) -> "Subspace":
        rows = [[as_scalar(x) for x in v] for v in vectors]
        for row in rows:
            if len(row) != ambient:
                raise InputError("vector length differs from ambient dimension")
        reduced, rk, pivots = _rref_rows(rows)
        return cls(ambient, Matrix(reduced[:rk]), tuple(pivots))

    @classmethod
    def zero(cls, ambient: int) -> "Subspace":
        return cls.from_vectors(ambient, [])

    @classmethod
    def full(cls, ambient: int) -> "Subspace":
        return cls.from_vectors(ambient, Matrix.identity(ambient).entries)

    @property
    def dim(self) -> int:
        return self.basis.rows

    def basis_rows(self) -> tuple[Vector, ...]:
        return self.basis.entries

    def reduce(self, v: Sequence[Scalar]) -> Vector:
        """Residual of v after reduction modulo this subspace."""
        if len(v) != self.ambient:
            raise InputError("vector length differs from ambient dimension")
        w = [as_scalar(x) for x in v]
        for row, p in zip(self.basis.entries, self.pivots):
            f = w[p]
            if f:
                w = [a - f * b for a, b in zip(w, row)]
        return tuple(w)

    def contains_vector(self, v: Sequence[Scalar]) -> bool:
        return vec_is_zero(self.reduce(v))

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.ambient == other.ambient
            and self.basis == other.basis
        )

    def __hash__(self):
        return hash((self.ambient, self.basis))

    def __repr__(self):
        return f"Subspace(dim {self.dim} of {self.ambient})"


def _check_same_ambient(a: Subspace, b: Subspace):
    if a.ambient != b.ambient:
        raise InputError(f"ambient mismatch: {a.ambient} vs {b.ambient}")


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    _check_same_ambient(a, b)
    return Subspace.from_vectors(a.ambient, list(a.basis_rows()) + list(b.basis_rows()))


def subspace_intersect(a: Subspace, b: Subspace) -> Subspace:
    """Exact intersection via the stacked-kernel construction."""
    _check_same_ambient(a, b)
    if a.dim == 0 or b.dim == 0:
        return Subspace.zero(a.ambient)
    # columns of m are the transposed basis rows of a and -b; kernel vectors
    # (c, d) satisfy  c . A = d . B, an element of the intersection.
    rows = []
    for i in range(a.ambient):
        rows.append([r[i] for r in a.basis_rows()] + [-r[i] for r in b.basis_rows()])
    ker = kernel(Matrix(rows))
    vectors = []
    for z in ker.basis_rows():
        c = z[: a.dim]
        w = [ZERO] * a.ambient
        for coeff, row in zip(c, a.basis_rows()):
            if coeff:
                w = [x + coeff * y for x, y in zip(w, row)]
        vectors.append(w)
    result = Subspace.from_vectors(a.ambient, vectors)
    if a.dim + b.dim != subspace_sum(a, b).dim + result.dim:
        raise InternalInvariantError("dimension formula violated in intersection")
    return result


def subspace_contains(a: Subspace, b: Subspace) -> bool:
    """Whether a contains b."""
    _check_same_ambient(a, b)
    return all(a.contains_vector(v) for v in b.basis_rows())


def is_nilpotent_matrix(m: Matrix) -> bool:
    """True iff m^dim = 0, by exact repeated squaring."""
    if not m.is_square():
        raise InputError("nilpotency test needs a square matrix")
    if m.rows == 0:
        return True
    p = m
    e = 1
    while e < m.rows and not p.is_zero():
        p = p * p
        e *= 2
    return p.is_zero()


def jordan_block_sizes(m: Matrix) -> tuple[int, ...]:
    """Jordan block sizes of a nilpotent matrix, decreasing.

    Recovered from the rank sequence: the number of blocks of size >= k is
    rank(m^(k-1)) - rank(m^k).
    """
    if not m.is_square():
        raise InputError("jordan block sizes need a square matrix")
    if not is_nilpotent_matrix(m):
        raise DomainError("matrix is not nilpotent")
    n = m.rows
    ranks = [n]
    p = Matrix.identity(n)
    while ranks[-1] > 0:
        p = p * m
        ranks.append(rank(p))
    counts_ge = [ranks[k - 1] - ranks[k] for k in range(1, len(ranks))]
    sizes = []
    for k in range(len(counts_ge), 0, -1):
        exactly_k = counts_ge[k - 1] - (counts_ge[k] if k < len(counts_ge) else 0)
        sizes.extend([k] * exactly_k)
    sizes.sort(reverse=True)
    if sum(sizes) != n:
        raise InternalInvariantError("jordan block sizes do not sum to the dimension")
    return tuple(sizes)


class SparseSolver:
    """Incremental exact reduced row echelon over sparse rows (col -> Scalar).

    Pivot rows are kept mutually reduced, so each holds its pivot column plus
    free columns only.  Used for the big structured kernels (derivation
    spaces); the public dense rref stays the canonical-form reference.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.pivot_rows: dict[int, dict[int, Scalar]] = {}

    @property
    def rank(self) -> int:
        return len(self.pivot_rows)

    def reduce_row(self, row: dict[int, Scalar]) -> dict[int, Scalar]:
        row = {c: v for c, v in row.items() if v}
        pivots = self.pivot_rows
        while True:
            hit = None
            for c in row:
                if c in pivots and (hit is None or c < hit):
                    hit = c
            if hit is None:
                return row
            f = row.pop(hit)
            for c, v in pivots[hit].items():
                if c == hit:
                    continue
                acc = row.get(c, ZERO) - f * v
                if acc:
                    row[c] = acc
                else:
                    row.pop(c, None)

    def add_row(self, row: dict[int, Scalar]) -> bool:
        """Insert one equation row; returns True if the rank grew."""
        row = self.reduce_row(row)
        if not row:
            return False
        lead = min(row)
        inv = row[lead].inverse()
        new_row = {c: inv * v for c, v in row.items()}
        # keep existing pivot rows reduced against the new pivot column
        for prow in self.pivot_rows.values():
            f = prow.get(lead)
            if f:
                del prow[lead]
                for c, v in new_row.items():
                    if c == lead:
                        continue
                    acc = prow.get(c, ZERO) - f * v
                    if acc:
                        prow[c] = acc
                    else:
                        prow.pop(c, None)
        self.pivot_rows[lead] = new_row
        return True

    def kernel_basis(self) -> list[dict[int, Scalar]]:
        """Basis of the solution space, one sparse vector per free column."""
        pivots = self.pivot_rows
        basis = []
        for f in range(self.ncols):
            if f in pivots:
                continue
            v = {f: ONE}
            for c, prow in pivots.items():
                coeff = prow.get(f)
                if coeff:
                    v[c] = -coeff
            basis.append(v)
        return basis
