"""Structure-constant tensors and the structure theory built on them.

A bilinear bracket on Q(i)^n is stored as a sparse table of structure
constants: (i, j) -> [(t, coeff), ...] means [e_i, e_j] = sum coeff * e_t,
with 1-based indices matching the usual e_1 ... e_n notation.  On top of the
raw tensor this module provides the Leibniz-identity checker, lower central
and derived series, annihilators, ideals, the squares ideal, basis changes
and the natural grading.

The Leibniz checker runs over basis triples only: the identity defect is
trilinear, so vanishing on a basis is equivalent to vanishing everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .errors import DomainError, InputError, InternalInvariantError
from .linalg import (
    Matrix,
    Subspace,
    Vector,
    subspace_sum,
    vec_is_zero,
)
from .scalars import ONE, ZERO, Scalar, as_scalar

ProductTable = Mapping[tuple[int, int], Sequence[tuple[int, object]]]


class StructureTensor:
    """A bilinear algebra on Q(i)^dim given by sparse structure constants."""

    __slots__ = ("dim", "products", "basis_labels", "_zero")

    def __init__(self, dim: int, products: ProductTable, basis_labels: Sequence[str] | None = None):
        if dim < 0:
            raise InputError("negative dimension")
        table: dict[tuple[int, int], tuple[tuple[int, Scalar], ...]] = {}
        for (i, j), entries in products.items():
            if not (1 <= i <= dim and 1 <= j <= dim):
                raise InputError(f"product index ({i},{j}) outside 1..{dim}")
            acc: dict[int, Scalar] = {}
            for t, coeff in entries:
                if not 1 <= t <= dim:
                    raise InputError(f"target index {t} outside 1..{dim}")
                c = as_scalar(coeff)
                if t in acc:
                    c = acc[t] + c
                if c:
                    acc[t] = c
                else:
                    acc.pop(t, None)
            if acc:
                table[(i, j)] = tuple(sorted(acc.items()))
        if basis_labels is not None:
            basis_labels = tuple(basis_labels)
            if len(basis_labels) != dim:
                raise InputError("label count differs from dimension")
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "products", table)
        object.__setattr__(self, "basis_labels", basis_labels)
        object.__setattr__(self, "_zero", tuple([ZERO] * dim))

    def __setattr__(self, name, value):
        raise AttributeError("StructureTensor is immutable")

    # -- product access ------------------------------------------------------

    def product(self, i: int, j: int) -> Vector:
        """[e_i, e_j] as a dense coefficient vector."""
        out = list(self._zero)
        for t, c in self.products.get((i, j), ()):
            out[t - 1] = c
        return tuple(out)

    def entry(self, i: int, j: int, t: int) -> Scalar:
        for tt, c in self.products.get((i, j), ()):
            if tt == t:
                return c
        return ZERO

    def is_abelian(self) -> bool:
        return not self.products

    def label(self, i: int) -> str:
        if self.basis_labels is not None:
            return self.basis_labels[i - 1]
        return f"e{i}"

    # -- bracket -------------------------------------------------------------

    def bracket(self, u: Sequence, v: Sequence) -> Vector:
        """Bilinear extension of the table to coefficient vectors."""
        if len(u) != self.dim or len(v) != self.dim:
            raise InputError("vector length differs from algebra dimension")
        u = [as_scalar(x) for x in u]
        v = [as_scalar(x) for x in v]
        out = list(self._zero)
        for (i, j), entries in self.products.items():
            c = u[i - 1] * v[j - 1]
            if c:
                for t, coeff in entries:
                    out[t - 1] = out[t - 1] + c * coeff
        return tuple(out)

    def bracket_left_basis(self, i: int, v: Sequence[Scalar]) -> Vector:
        """[e_i, v] for a dense vector v."""
        out = list(self._zero)
        for t, x in enumerate(v, start=1):
            if x:
                for s, coeff in self.products.get((i, t), ()):
                    out[s - 1] = out[s - 1] + x * coeff
        return tuple(out)

    def bracket_right_basis(self, v: Sequence[Scalar], j: int) -> Vector:
        """[v, e_j] for a dense vector v."""
        out = list(self._zero)
        for t, x in enumerate(v, start=1):
            if x:
                for s, coeff in self.products.get((t, j), ()):
                    out[s - 1] = out[s - 1] + x * coeff
        return tuple(out)

    def right_mult_matrix(self, x: Sequence) -> Matrix:
        """Matrix of y -> [y, x] on coefficient columns."""
        x = [as_scalar(c) for c in x]
        cols = []
        for j in range(1, self.dim + 1):
            w = list(self._zero)
            for t, c in enumerate(x, start=1):
                if c:
                    for s, coeff in self.products.get((j, t), ()):
                        w[s - 1] = w[s - 1] + c * coeff
            cols.append(w)
        return Matrix.from_columns(cols)

    def left_mult_matrix(self, x: Sequence) -> Matrix:
        """Matrix of y -> [x, y] on coefficient columns."""
        x = [as_scalar(c) for c in x]
        cols = []
        for j in range(1, self.dim + 1):
            w = list(self._zero)
            for t, c in enumerate(x, start=1):
                if c:
                    for s, coeff in self.products.get((t, j), ()):
                        w[s - 1] = w[s - 1] + c * coeff
            cols.append(w)
        return Matrix.from_columns(cols)

    # -- editing (returns new tensors) ----------------------------------------

    def with_entry_bumped(self, i: int, j: int, t: int, delta=1) -> "StructureTensor":
        """Copy of the tensor with gamma_{i,j}^t shifted by delta."""
        table = {key: list(val) for key, val in self.products.items()}
        table.setdefault((i, j), [])
        table[(i, j)] = list(table[(i, j)]) + [(t, as_scalar(delta))]
        return StructureTensor(self.dim, table, self.basis_labels)

    def relabeled(self, labels: Sequence[str] | None) -> "StructureTensor":
        return StructureTensor(self.dim, self.products, labels)

    # -- equality --------------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, StructureTensor)
            and self.dim == other.dim
            and self.products == other.products
        )

    def __hash__(self):
        return hash((self.dim, tuple(sorted(self.products.items()))))

    def __repr__(self):
        return f"StructureTensor(dim={self.dim}, {len(self.products)} products)"


def bracket(t: StructureTensor, u: Sequence, v: Sequence) -> Vector:
    return t.bracket(u, v)


def leibniz_defect(t: StructureTensor, i: int, j: int, k: int) -> Vector:
    """LI(e_i, e_j, e_k) = [e_i,[e_j,e_k]] - [[e_i,e_j],e_k] + [[e_i,e_k],e_j]."""
    term1 = t.bracket_left_basis(i, t.product(j, k))
    term2 = t.bracket_right_basis(t.product(i, j), k)
    term3 = t.bracket_right_basis(t.product(i, k), j)
    return tuple(a - b + c for a, b, c in zip(term1, term2, term3))


@dataclass(frozen=True)
class LeibnizReport:
    ok: bool
    violations: tuple[tuple[tuple[int, int, int], Vector], ...]
    checked_triples: int

    def __bool__(self):
        return self.ok


def leibniz_check(t: StructureTensor, max_violations: int = 64) -> LeibnizReport:
    """Evaluate the Leibniz defect on all basis triples.

    Trilinearity makes basis coverage sufficient: the tensor is a Leibniz
    algebra iff every reported defect is zero.
    """
    n = t.dim
    violations = []
    checked = 0
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            for k in range(1, n + 1):
                checked += 1
                defect = leibniz_defect(t, i, j, k)
                if not vec_is_zero(defect):
                    if len(violations) < max_violations:
                        violations.append(((i, j, k), defect))
                    else:
                        return LeibnizReport(False, tuple(violations), checked)
    return LeibnizReport(not violations, tuple(violations), checked)


@dataclass(frozen=True)
class SeriesReport:
    kind: str
    terms: tuple[Subspace, ...]
    dims: tuple[int, ...]

    @property
    def stabilized_dim(self) -> int:
        return self.dims[-1]


def _product_span(t: StructureTensor, a: Subspace, b: Subspace) -> Subspace:
    vectors = []
    for u in a.basis_rows():
        for v in b.basis_rows():
            w = t.bracket(u, v)
            if not vec_is_zero(w):
                vectors.append(w)
    return Subspace.from_vectors(t.dim, vectors)


def series(t: StructureTensor, kind: str = "lower-central") -> SeriesReport:
    """Lower central series L^{k+1} = [L^k, L] or derived L^{[s+1]} = [L^[s], L^[s]]."""
    if kind not in ("lower-central", "derived"):
        raise InputError(f"unknown series kind {kind!r}")
    full = Subspace.full(t.dim)
    terms = [full]
    while True:
        current = terms[-1]
        nxt = _product_span(t, current, full if kind == "lower-central" else current)
        if nxt == current:
            break
        terms.append(nxt)
        if nxt.dim == 0:
            break
    return SeriesReport(kind, tuple(terms), tuple(s.dim for s in terms))


def is_nilpotent_algebra(t: StructureTensor) -> bool:
    return series(t, "lower-central").stabilized_dim == 0


def is_solvable_algebra(t: StructureTensor) -> bool:
    return series(t, "derived").stabilized_dim == 0


def nilindex(t: StructureTensor) -> int:
    """Smallest s with L^s = 0 (L^1 = L)."""
    rep = series(t, "lower-central")
    if rep.stabilized_dim != 0:
        raise DomainError("algebra is not nilpotent")
    return len(rep.terms)


def annihilators(t: StructureTensor) -> tuple[Subspace, Subspace]:
    """(Ann_r, Ann_l): kernels of the stacked left / right multiplications."""
    n = t.dim
    left_rows = []
    right_rows = []
    for i in range(1, n + 1):
        e_i = tuple(ONE if m == i - 1 else ZERO for m in range(n))
        left_rows.extend(t.left_mult_matrix(e_i).entries)
        right_rows.extend(t.right_mult_matrix(e_i).entries)
    from .linalg import kernel  # local import to avoid cycle at module load

    ann_r = kernel(Matrix(left_rows)) if left_rows else Subspace.full(n)
    ann_l = kernel(Matrix(right_rows)) if right_rows else Subspace.full(n)
    return ann_r, ann_l


def is_ideal(t: StructureTensor, u: Subspace) -> bool:
    """Two-sided ideal test: [u, L] and [L, u] land back in u."""
    if u.ambient != t.dim:
        raise InputError("subspace ambient differs from algebra dimension")
    for v in u.basis_rows():
        for i in range(1, t.dim + 1):
            if not u.contains_vector(t.bracket_right_basis(v, i)):
                return False
            if not u.contains_vector(t.bracket_left_basis(i, v)):
                return False
    return True


def is_lie(t: StructureTensor) -> bool:
    """Antisymmetry on basis pairs plus the Leibniz identity (= Jacobi)."""
    n = t.dim
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            s = tuple(a + b for a, b in zip(t.product(i, j), t.product(j, i)))
            if not vec_is_zero(s):
                return False
    return leibniz_check(t).ok


def squares_ideal(t: StructureTensor) -> Subspace:
    """Two-sided ideal closure of the span of all squares [x, x].

    The squares of single elements are not a subspace; by polarization their
    span equals span{[e_i,e_i]} + span{[e_i,e_j] + [e_j,e_i]}, which is then
    closed under multiplication to a fixpoint.
    """
    n = t.dim
    gens = []
    for i in range(1, n + 1):
        gens.append(t.product(i, i))
        for j in range(i + 1, n + 1):
            gens.append(tuple(a + b for a, b in zip(t.product(i, j), t.product(j, i))))
    current = Subspace.from_vectors(n, [g for g in gens if not vec_is_zero(g)])
    while True:
        extra = []
        for v in current.basis_rows():
            for i in range(1, n + 1):
                for w in (t.bracket_right_basis(v, i), t.bracket_left_basis(i, v)):
                    if not current.contains_vector(w):
                        extra.append(w)
        if not extra:
            return current
        current = subspace_sum(current, Subspace.from_vectors(n, extra))


def apply_basis_change(t: StructureTensor, p: Matrix) -> StructureTensor:
    """Tensor in the new basis whose vectors are the columns of p.

    bracket'(u, v) = p^{-1} . bracket(p u, p v); raises on singular p.
    """
    if p.rows != t.dim or p.cols != t.dim:
        raise InputError("basis change matrix has wrong shape")
    p_inv = p.inverse()  # raises InputError when singular
    n = t.dim
    cols = [p.column(j) for j in range(n)]
    table = {}
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            w = t.bracket(cols[a - 1], cols[b - 1])
            if vec_is_zero(w):
                continue
            coeffs = p_inv.apply(w)
            entries = [(s + 1, c) for s, c in enumerate(coeffs) if c]
            if entries:
                table[(a, b)] = entries
    return StructureTensor(n, table)


def is_isomorphism(a: StructureTensor, b: StructureTensor, p: Matrix) -> bool:
    """Whether p (columns = images of b-basis... ) carries a exactly onto b.

    Concretely: the tensor of a rewritten in the basis given by the columns
    of p must equal b entry-for-entry.
    """
    if a.dim != b.dim:
        raise InputError("dimension mismatch")
    return apply_basis_change(a, p) == b


@dataclass(frozen=True)
class GradedTensor:
    piece_dims: tuple[int, ...]
    tensor: StructureTensor
    representative_map: Matrix
    natural: bool
    piece_of: tuple[int, ...] = field(default=())


def natural_grading(t: StructureTensor) -> GradedTensor:
    """gr(L) on canonical coset representatives, with a naturality verdict.

    Representatives extend the canonical basis of L^{i+1} to L^i, so the
    construction is deterministic but basis-dependent: a False verdict only
    says this particular representative map is not an isomorphism.
    """
    rep = series(t, "lower-central")
    if rep.stabilized_dim != 0:
        raise DomainError("natural grading needs a nilpotent algebra")
    terms = list(rep.terms) + ([] if rep.terms[-1].dim == 0 else [Subspace.zero(t.dim)])
    reps: list[Vector] = []
    piece_of: list[int] = []
    piece_dims = []
    for i in range(len(terms) - 1):
        upper, lower = terms[i], terms[i + 1]
        chosen = []
        w = lower
        for row in upper.basis_rows():
            if not w.contains_vector(row):
                chosen.append(row)
                w = subspace_sum(w, Subspace.from_vectors(t.dim, [row]))
        if len(chosen) != upper.dim - lower.dim:
            raise InternalInvariantError("representative extension failed")
        piece_dims.append(len(chosen))
        for v in chosen:
            reps.append(v)
            piece_of.append(i + 1)
    p = Matrix.from_columns(reps)
    n = t.dim
    npieces = len(piece_dims)
    table = {}
    for a in range(n):
        for b in range(n):
            d = piece_of[a] + piece_of[b]
            w = t.bracket(reps[a], reps[b])
            if vec_is_zero(w):
                continue
            if d > npieces:
                raise DomainError("products do not respect the grading filtration")
            if not terms[d - 1].contains_vector(w):
                raise DomainError("products do not respect the grading filtration")
            # solve w = sum(coeff_m * rep_m over piece d) + element of L^{d+1}
            piece_idx = [m for m in range(n) if piece_of[m] == d]
            cols = [reps[m] for m in piece_idx] + list(terms[d].basis_rows())
            sol = _solve_exact(cols, w, t.dim)
            entries = [(piece_idx[k] + 1, sol[k]) for k in range(len(piece_idx)) if sol[k]]
            if entries:
                table[(a + 1, b + 1)] = entries
    gr = StructureTensor(n, table)
    natural = apply_basis_change(t, p) == gr
    return GradedTensor(tuple(piece_dims), gr, p, natural, tuple(piece_of))


def _solve_exact(columns: list[Vector], w: Vector, ambient: int) -> list[Scalar]:
    """Solve sum x_k columns[k] = w for independent columns, exactly."""
    aug = [[columns[k][i] for k in range(len(columns))] + [w[i]] for i in range(ambient)]
    reduced, rk, pivots = _rref_aug(aug)
    ncols = len(columns)
    if any(p == ncols for p in pivots):
        raise InternalInvariantError("inconsistent decomposition system")
    if rk != ncols:
        raise InternalInvariantError("decomposition columns are dependent")
    sol = [ZERO] * ncols
    for r_idx, c in enumerate(pivots):
        sol[c] = reduced[r_idx][ncols]
    return sol


def _rref_aug(rows):
    from .linalg import _rref_rows

    return _rref_rows(rows)


# -- JSON interchange ---------------------------------------------------------


def tensor_to_json(t: StructureTensor) -> dict:
    """Algebra JSON format; scalar coefficients in the canonical text format."""
    products = []
    for (i, j) in sorted(t.products):
        entries = [[tt, str(c)] for tt, c in t.products[(i, j)]]
        products.append([i, j, entries])
    doc = {"dim": t.dim, "products": products}
    if t.basis_labels is not None:
        doc["labels"] = list(t.basis_labels)
    return doc


def tensor_from_json(doc: Mapping) -> StructureTensor:
    try:
        dim = int(doc["dim"])
        raw = doc["products"]
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed algebra document: {exc}") from None
    table = {}
    for item in raw:
        i, j, entries = item
        table[(int(i), int(j))] = [(int(tt), Scalar.parse(c)) for tt, c in entries]
    labels = doc.get("labels")
    return StructureTensor(dim, table, labels)
