"""Solvable extension skeletons and the theorem-level verification drivers.

A skeleton is the multiplication table of R = N + span(x_1..x_k) with some
entries fixed, some symbolic: the Leibniz identity over all basis triples of
R then becomes a polynomial constraint system which the staged eliminator of
`sympoly` reduces.

Two skeleton modes exist.

* "normal" (k = number of generators of N): right actions of the x_j are
  normalized on the generator diagonal and extended to non-generators by
  propagation through defining products; left actions are supported on the
  graded pieces of the lower central series; products among the x_j vanish.
  This is the gauge the codimension-2 classifications are derived in.

* "probe": right actions run over the full derivation space of N (a toral
  part normalized on the generator diagonal plus an unknown combination of
  the nilpotent cone); left products are pinned by two structural facts,
  both recomputed exactly per run: squares of R land in the right
  annihilator, and [u, v] + [v, u] does too, with Ann_r(R) confined to
  Ann_r(N).  This is the setting of the nonexistence and Lie-outcome
  arguments, which manipulate raw unknown products.

All concrete numbers entering a skeleton are computed from the nilradical
itself (series, annihilators, derivation spaces), never assumed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from . import catalog as _catalog
from .derivations import derivation_space, max_nil_independent
from .errors import CheckFailure, DomainError, InputError, InternalInvariantError
from .linalg import Matrix, Subspace, vec_is_zero
from .scalars import ONE, ZERO, Scalar, as_scalar, rational
from .sympoly import (
    ConstraintSystem,
    P_ZERO,
    PolyExpr,
    as_poly,
    linear_eliminate,
    solve_to_leaves,
)
from .tensor import (
    StructureTensor,
    annihilators,
    is_lie,
    leibniz_check,
    series,
    squares_ideal,
)

SymVec = dict[int, PolyExpr]   # sparse symbolic coefficient vector, keys 1-based


def _coordinate_indices(sub: Subspace) -> set[int] | None:
    """Indices i (1-based) when the subspace is a span of unit vectors."""
    idx = set()
    for row in sub.basis_rows():
        hits = [i for i, x in enumerate(row) if x]
        if len(hits) != 1 or row[hits[0]] != ONE:
            return None
        idx.add(hits[0] + 1)
    return idx


@dataclass(frozen=True)
class ExtensionSkeleton:
    nilradical: StructureTensor
    k: int
    mode: str
    dim: int
    products: Mapping[tuple[int, int], SymVec]
    unknowns: tuple[str, ...]
    generator_indices: tuple[int, ...]
    piece_of: tuple[int, ...]          # grading piece of each nilradical index
    labels: tuple[str, ...]
    weight_ambiguous: bool = False
    notes: tuple[str, ...] = ()

    def product(self, i: int, j: int) -> SymVec:
        return self.products.get((i, j), {})

    def fixed_products(self) -> dict[tuple[int, int], list[tuple[int, Scalar]]]:
        """Constant parts of all entries (the normal-form-imposed data)."""
        out = {}
        for key, vec in self.products.items():
            ent = []
            for t, poly in sorted(vec.items()):
                c = poly.monomials.get((), None)
                if c:
                    ent.append((t, c))
            if ent:
                out[key] = ent
        return out

    def unknown_products(self) -> dict[tuple[int, int], dict[int, PolyExpr]]:
        """Non-constant parts of all entries."""
        out = {}
        for key, vec in self.products.items():
            ent = {}
            for t, poly in vec.items():
                nonconst = poly - PolyExpr.const(poly.monomials.get((), ZERO))
                if not nonconst.is_zero():
                    ent[t] = nonconst
            if ent:
                out[key] = ent
        return out


# ---------------------------------------------------------------------------
# symbolic bracket machinery

def _sym_bracket_left(skel: ExtensionSkeleton, a: int, v: SymVec) -> SymVec:
    out: SymVec = {}
    for t, poly in v.items():
        if poly.is_zero():
            continue
        for s, entry in skel.product(a, t).items():
            acc = out.get(s, P_ZERO) + poly * entry
            if acc.is_zero():
                out.pop(s, None)
            else:
                out[s] = acc
    return out


def _sym_bracket_right(skel: ExtensionSkeleton, v: SymVec, b: int) -> SymVec:
    out: SymVec = {}
    for t, poly in v.items():
        if poly.is_zero():
            continue
        for s, entry in skel.product(t, b).items():
            acc = out.get(s, P_ZERO) + poly * entry
            if acc.is_zero():
                out.pop(s, None)
            else:
                out[s] = acc
    return out


def li_defect_sym(skel: ExtensionSkeleton, a: int, b: int, c: int) -> SymVec:
    """Symbolic Leibniz defect [a,[b,c]] - [[a,b],c] + [[a,c],b] on basis triples."""
    term1 = _sym_bracket_left(skel, a, skel.product(b, c))
    term2 = _sym_bracket_right(skel, skel.product(a, b), c)
    term3 = _sym_bracket_right(skel, skel.product(a, c), b)
    out: SymVec = dict(term1)
    for s, poly in term2.items():
        acc = out.get(s, P_ZERO) - poly
        if acc.is_zero():
            out.pop(s, None)
        else:
            out[s] = acc
    for s, poly in term3.items():
        acc = out.get(s, P_ZERO) + poly
        if acc.is_zero():
            out.pop(s, None)
        else:
            out[s] = acc
    return out


# ---------------------------------------------------------------------------
# skeleton construction

def _generators_and_pieces(n_alg: StructureTensor):
    rep = series(n_alg, "lower-central")
    if rep.stabilized_dim != 0:
        raise DomainError("extension skeletons need a nilpotent nilradical")
    if not leibniz_check(n_alg).ok:
        raise InputError("the nilradical must itself satisfy the Leibniz identity")
    n = n_alg.dim
    terms = list(rep.terms)
    term_coords = []
    for term in terms:
        coords = _coordinate_indices(term)
        if coords is None:
            raise InputError("nilradical series terms are not coordinate subspaces; "
                             "re-present the algebra on an adapted basis first")
        term_coords.append(coords)
    piece_of = []
    for m in range(1, n + 1):
        p = max(i + 1 for i, coords in enumerate(term_coords) if m in coords)
        piece_of.append(p)
    gens = tuple(m for m in range(1, n + 1) if piece_of[m - 1] == 1)
    return gens, tuple(piece_of), terms


def _const_vec(entries: Sequence[tuple[int, Scalar]]) -> SymVec:
    return {t: PolyExpr.const(c) for t, c in entries if c}


def build_skeleton(n_alg: StructureTensor, k: int, mode: str = "normal") -> ExtensionSkeleton:
    """Extension skeleton over a nilpotent Leibniz algebra.

    k = 0 returns the nilradical itself (no unknowns).  Normal mode needs
    k equal to the number of generators; probe mode needs k equal to the
    certified maximal number of nil-independent derivations.
    """
    if mode not in ("normal", "probe"):
        raise InputError(f"unknown skeleton mode {mode!r}")
    gens, piece_of, terms = _generators_and_pieces(n_alg)
    n = n_alg.dim
    dim = n + k
    labels = tuple([n_alg.label(i) for i in range(1, n + 1)] +
                   ["x", "y", "z"][:k])
    products: dict[tuple[int, int], SymVec] = {}
    for (i, j), entries in n_alg.products.items():
        products[(i, j)] = _const_vec(entries)
    if k == 0:
        return ExtensionSkeleton(n_alg, 0, mode, dim, products, (), gens, piece_of, labels)
    if mode == "normal":
        return _build_normal(n_alg, k, gens, piece_of, terms, products, labels)
    return _build_probe(n_alg, k, gens, piece_of, terms, products, labels)


def _build_normal(n_alg, k, gens, piece_of, terms, products, labels):
    n = n_alg.dim
    dim = n + k
    if k != len(gens):
        raise InputError(
            f"normal mode needs k = number of generators ({len(gens)}); "
            f"that count also bounds the nil-independent derivations"
        )
    unknowns: list[str] = []

    def newvar(name: str) -> PolyExpr:
        unknowns.append(name)
        return PolyExpr.var(name)

    # right actions on generators: delta on the diagonal, unknowns across
    gen_tail_names = {}
    for j in range(1, k + 1):
        for gi, g in enumerate(gens, start=1):
            vec: SymVec = {}
            if gi == j:
                vec[g] = PolyExpr.const(1)
            for mi, m in enumerate(gens, start=1):
                if mi == gi:
                    continue
                if k == 2:
                    name = ("A" if j == 1 else "B") + str(gi)
                else:
                    name = f"A[{j}][{gi}][{mi}]"
                vec[m] = newvar(name)
                gen_tail_names[(j, gi, mi)] = name
            products[(g, n + j)] = vec

    # propagate the right actions through defining products (chain first)
    for j in range(1, k + 1):
        images: dict[int, SymVec] = {g: dict(products[(g, n + j)]) for g in gens}
        progress = True
        while progress and len(images) < n:
            progress = False
            for (i2, j2) in sorted(n_alg.products, key=lambda ij: (ij[1], ij[0])):
                if i2 not in images or j2 not in images:
                    continue
                w = n_alg.products[(i2, j2)]
                unknown_targets = [t for t, c in w if t not in images]
                if len(unknown_targets) != 1:
                    continue
                m = unknown_targets[0]
                coeff = dict(w)[m]
                derived = _image_of_product(n_alg, images, i2, j2)
                for t, c in w:
                    if t == m:
                        continue
                    for s, poly in images[t].items():
                        acc = derived.get(s, P_ZERO) - PolyExpr.const(c) * poly
                        if acc.is_zero():
                            derived.pop(s, None)
                        else:
                            derived[s] = acc
                inv = coeff.inverse()
                images[m] = {s: poly.scale(inv) for s, poly in derived.items()}
                progress = True
        if len(images) < n:
            raise InputError("could not propagate the generator actions to the whole "
                             "nilradical; unsupported product structure")
        for m in range(1, n + 1):
            vec = {s: p for s, p in images[m].items() if not p.is_zero()}
            if vec:
                products[(m, n + j)] = vec

    notes = []
    ambiguous = _weights_ambiguous(n_alg, products, gens, n, k)
    if ambiguous:
        notes.append("generator-count weights are path-dependent for this family; "
                     "the chain-propagated values are used")

    # left actions: supported on the graded piece of the target
    mu_counter = 0
    for j in range(1, k + 1):
        for m in range(1, n + 1):
            piece = piece_of[m - 1]
            mates = [m2 for m2 in range(1, n + 1) if piece_of[m2 - 1] == piece]
            vec: SymVec = {}
            for m2 in mates:
                if k == 2 and m in gens:
                    paper_idx = (j - 1) * 2 + (gens.index(m) + 1)
                    name = f"mu[{paper_idx}][{m2}]"
                else:
                    name = f"c[{j}][{m}][{m2}]"
                vec[m2] = PolyExpr.var(name)
                unknowns.append(name)
            products[(n + j, m)] = vec
    # products among the x_j vanish in this gauge
    return ExtensionSkeleton(
        n_alg, k, "normal", dim, products, tuple(unknowns), gens, piece_of,
        labels, weight_ambiguous=bool(ambiguous), notes=tuple(notes),
    )


def _image_of_product(n_alg, images, i2, j2) -> SymVec:
    """d([e_i, e_j]) = [d e_i, e_j] + [e_i, d e_j] inside the nilradical."""
    out: SymVec = {}
    for t, poly in images[i2].items():
        for s, c in n_alg.products.get((t, j2), ()):
            acc = out.get(s, P_ZERO) + poly.scale(c)
            if acc.is_zero():
                out.pop(s, None)
            else:
                out[s] = acc
    for t, poly in images[j2].items():
        for s, c in n_alg.products.get((i2, t), ()):
            acc = out.get(s, P_ZERO) + poly.scale(c)
            if acc.is_zero():
                out.pop(s, None)
            else:
                out[s] = acc
    return out


def _weights_ambiguous(n_alg, products, gens, n, k) -> bool:
    """Check additivity of the propagated toral weights over all products."""
    weights = []
    for j in range(1, k + 1):
        wj = {}
        for m in range(1, n + 1):
            entry = products.get((m, n + j), {}).get(m, P_ZERO)
            wj[m] = entry.monomials.get((), ZERO)
        weights.append(wj)
    for (i2, j2), entries in n_alg.products.items():
        for t, _c in entries:
            for wj in weights:
                if wj[t] != wj[i2] + wj[j2]:
                    return True
    return False


def _build_probe(n_alg, k, gens, piece_of, terms, products, labels):
    n = n_alg.dim
    dim = n + k
    der = derivation_space(n_alg)
    count, cert = max_nil_independent(n_alg, der)
    if cert.status != "full":
        raise InputError("probe mode needs a full nil-independence certificate")
    if k > count:
        raise InputError(
            f"k = {k} exceeds the maximal number of nil-independent derivations ({count})"
        )
    if k != count:
        raise InputError("probe mode is implemented for k equal to the toral rank")

    # normalize the toral gauge on the generator diagonal entries
    diag_rows = []
    for g in gens[:k]:
        diag_rows.append([d[g - 1, g - 1] for d in der.basis])
    diag_matrix = Matrix(diag_rows)
    for kb in cert.kernel_basis:
        for g in gens[:k]:
            if kb[g - 1, g - 1]:
                raise InputError("generator diagonals do not factor through the "
                                 "toral quotient; probe gauge unavailable")
    # nothing inside N may multiply back onto a generator diagonal, so that a
    # nonzero complement component of a candidate annihilator element is
    # always detected by [g_i, .]
    for g in gens[:k]:
        for t_ in range(1, n + 1):
            if n_alg.entry(g, t_, g):
                raise InputError("a nilradical product hits a generator diagonal; "
                                 "probe gauge unavailable")
    base_ders = []
    for j in range(k):
        rhs = [ONE if jj == j else ZERO for jj in range(k)]
        combo = _solve_particular(diag_matrix, rhs)
        if combo is None:
            raise InputError("cannot normalize the probe gauge on the generators")
        d0 = Matrix.zeros(n, n)
        for c, m in zip(combo, der.basis):
            if c:
                d0 = d0 + m.scale(c)
        base_ders.append(d0)

    unknowns: list[str] = []

    def newvar(name: str) -> PolyExpr:
        unknowns.append(name)
        return PolyExpr.var(name)

    wvars = [[newvar(f"w[{j + 1}][{l + 1}]") for l in range(len(cert.kernel_basis))]
             for j in range(k)]

    # right actions: D0_j + sum of unknown multiples of the nilpotent cone
    for j in range(k):
        for m in range(1, n + 1):
            vec: SymVec = {}
            col = base_ders[j].column(m - 1)
            for s in range(1, n + 1):
                poly = as_poly(col[s - 1]) if col[s - 1] else P_ZERO
                for l, kb in enumerate(cert.kernel_basis):
                    c = kb[s - 1, m - 1]
                    if c:
                        poly = poly + wvars[j][l].scale(c)
                if not poly.is_zero():
                    vec[s] = poly
            if vec:
                products[(m, n + 1 + j)] = vec

    # structural supports, computed fresh for this nilradical
    sq = _coordinate_indices(squares_ideal(n_alg))
    ann_r, _ = annihilators(n_alg)
    cand = _coordinate_indices(ann_r)
    if sq is None or cand is None:
        raise InputError("squares ideal or right annihilator is not a coordinate "
                         "subspace; probe gauge unavailable")
    if not sq <= cand:
        raise InternalInvariantError("squares ideal not inside the right annihilator")

    # left actions: [x_j, e_m] = -[e_m, x_j] + (element of the Ann_r candidates),
    # and zero outright when e_m is generated by squares
    for j in range(k):
        for m in range(1, n + 1):
            if m in sq:
                continue
            vec: SymVec = {}
            right = products.get((m, n + 1 + j), {})
            for s in range(1, n + 1):
                if s in cand:
                    vec[s] = newvar(f"c[{j + 1}][{m}][{s}]")
                else:
                    poly = right.get(s, P_ZERO)
                    if not poly.is_zero():
                        vec[s] = -poly
            if vec:
                products[(n + 1 + j, m)] = vec

    # products among the x_j: squares land in the candidates; mixed products
    # are free in N with their symmetrizations in the candidates
    for a in range(k):
        vec = {s: newvar(f"d[{a + 1}][{a + 1}][{s}]") for s in sorted(cand)}
        if vec:
            products[(n + 1 + a, n + 1 + a)] = vec
    for a in range(k):
        for b in range(a + 1, k):
            vec_ab = {s: newvar(f"d[{a + 1}][{b + 1}][{s}]") for s in range(1, n + 1)}
            products[(n + 1 + a, n + 1 + b)] = vec_ab
            vec_ba: SymVec = {}
            for s in range(1, n + 1):
                if s in cand:
                    vec_ba[s] = newvar(f"d[{b + 1}][{a + 1}][{s}]")
                else:
                    vec_ba[s] = -vec_ab[s]
            products[(n + 1 + b, n + 1 + a)] = vec_ba

    notes = (f"squares-forced zero left products on {sorted(sq)}",
             f"right-annihilator candidates {sorted(cand)}")
    return ExtensionSkeleton(
        n_alg, k, "probe", dim, products, tuple(unknowns), gens, piece_of,
        labels, notes=notes,
    )


def _solve_particular(m: Matrix, rhs: Sequence[Scalar]) -> list[Scalar] | None:
    """One exact solution of m x = rhs, free coordinates set to zero."""
    from .linalg import _rref_rows

    aug = [list(m.entries[i]) + [rhs[i]] for i in range(m.rows)]
    reduced, rank, pivots = _rref_rows(aug)
    ncols = m.cols
    if any(p == ncols for p in pivots):
        return None
    x = [ZERO] * ncols
    for r_idx, c in enumerate(pivots):
        x[c] = reduced[r_idx][ncols]
    return x


# ---------------------------------------------------------------------------
# constraint generation and solving

def generate_constraints(skel: ExtensionSkeleton) -> ConstraintSystem:
    """Leibniz identity over every basis triple of R, as one polynomial system.

    Triples entirely inside the nilradical are skipped: the nilradical is
    Leibniz-verified at skeleton construction, so their defects vanish
    identically.  A constant nonzero component on any other triple makes the
    system infeasible (for probe skeletons this is a meaningful outcome, not
    an error).
    """
    n = skel.nilradical.dim
    eqs = []
    for a in range(1, skel.dim + 1):
        for b in range(1, skel.dim + 1):
            for c in range(1, skel.dim + 1):
                if a <= n and b <= n and c <= n:
                    continue
                defect = li_defect_sym(skel, a, b, c)
                for _t, poly in sorted(defect.items()):
                    if not poly.is_zero():
                        eqs.append(poly)
    return ConstraintSystem.from_equations(skel.unknowns, eqs)


@dataclass(frozen=True)
class SolvedLeaf:
    skeleton: ExtensionSkeleton
    system: ConstraintSystem
    assignment: Mapping[str, PolyExpr]
    free_unknowns: tuple[str, ...]
    tensor_at_zero: StructureTensor

    def instantiate(self, values: Mapping[str, object] | None = None) -> StructureTensor:
        """Concrete tensor with the free unknowns at the given sample points."""
        return _instantiate(self.skeleton, self.assignment, self.free_unknowns, values)


def _instantiate(skel, assignment, free, values=None) -> StructureTensor:
    values = {k: as_scalar(v) for k, v in (values or {}).items()}
    point = {u: values.get(u, ZERO) for u in free}
    full: dict[str, Scalar] = dict(point)
    for var, expr in assignment.items():
        full[var] = expr.evaluate(point)
    table = {}
    for (i, j), vec in skel.products.items():
        entries = []
        for t, poly in vec.items():
            val = poly.evaluate(full)
            if val:
                entries.append((t, val))
        if entries:
            table[(i, j)] = entries
    t = StructureTensor(skel.dim, table, skel.labels)
    rep = leibniz_check(t)
    if not rep.ok:
        raise InternalInvariantError(
            f"solved leaf instantiates to a non-Leibniz tensor at {rep.violations[0][0]}"
        )
    return t


@dataclass(frozen=True)
class ExtensionSolveResult:
    skeleton: ExtensionSkeleton
    leaves: tuple[SolvedLeaf, ...]
    infeasible_count: int
    fragment_limited: int
    proof_logs: tuple[tuple[dict, ...], ...]

    @property
    def status(self) -> str:
        if self.fragment_limited:
            return "fragment-limit"
        if self.leaves:
            return "solved"
        return "infeasible"


def solve_extension(skel: ExtensionSkeleton, max_nodes: int = 500) -> ExtensionSolveResult:
    """Generate, eliminate and branch to exhaustion; leaves become tensors.

    Every solved leaf is instantiated (free unknowns at zero by default) and
    must pass the Leibniz checker: the solver never emits a non-algebra.
    """
    sys0 = generate_constraints(skel)
    outcome = solve_to_leaves(sys0, max_nodes=max_nodes)
    leaves = []
    logs = []
    for leaf in outcome.solved:
        assignment = leaf.resolved_assignment()
        free = leaf.free_unknowns()
        tensor0 = _instantiate(skel, assignment, free)
        leaves.append(SolvedLeaf(skel, leaf, assignment, free, tensor0))
        logs.append(leaf.log)
    for leaf in outcome.infeasible:
        logs.append(leaf.log)
    for leaf in outcome.fragment_limited:
        logs.append(leaf.log)
    return ExtensionSolveResult(
        skel, tuple(leaves), len(outcome.infeasible),
        len(outcome.fragment_limited), tuple(logs),
    )


# ---------------------------------------------------------------------------
# invariance of the graded pieces (the structural fact behind the gauge)

def check_invariance(r: StructureTensor, n_alg: StructureTensor,
                     q_indices: Sequence[int] | None = None) -> bool:
    """[N_i, x] and [x, N_i] stay inside N_i for every graded piece and x in Q."""
    n = n_alg.dim
    if r.dim < n:
        raise InputError("extension smaller than its nilradical")
    for (i, j), entries in n_alg.products.items():
        for t, c in entries:
            if r.entry(i, j, t) != c:
                raise InputError("the nilradical is not the leading block of r")
    if q_indices is None:
        q_indices = range(n + 1, r.dim + 1)
    _gens, piece_of, _terms = _generators_and_pieces(n_alg)
    npieces = max(piece_of)
    for p in range(1, npieces + 1):
        members = [m for m in range(1, n + 1) if piece_of[m - 1] == p]
        allowed = set(members)
        for m in members:
            for q in q_indices:
                for vec in (r.product(m, q), r.product(q, m)):
                    for t, x in enumerate(vec, start=1):
                        if x and t not in allowed:
                            return False
    return True


# ---------------------------------------------------------------------------
# the codimension-one nonexistence probe over the L-family

@dataclass(frozen=True)
class Codim1ProbeReport:
    alpha: Scalar
    beta: Scalar
    gamma: Scalar
    n: int
    infeasible: bool
    deduced_facts: tuple[dict, ...]
    witness: str
    proof_log: tuple[dict, ...]

    @property
    def ok(self) -> bool:
        return self.infeasible


def probe_codim1_L(alpha, beta, gamma, n: int) -> Codim1ProbeReport:
    """Mechanized nonexistence of a codimension-1 solvable extension of L rows.

    Applies only to parameter rows whose nil-independent bound is one.  The
    probe evaluates the targeted identity LI(x, e_{n-1}, e_1): its e_2 and
    e_n components are unknown-free and force alpha = 0 and beta = 1, which
    no admissible row satisfies; the full constraint system is then reduced
    and must come out infeasible, loudly failing otherwise.
    """
    alpha, beta, gamma = as_scalar(alpha), as_scalar(beta), as_scalar(gamma)
    t = _catalog.build("L(a,b,g)", n, {"a": alpha, "b": beta, "g": gamma})
    count, cert = max_nil_independent(t)
    if count != 1 or cert.status != "full":
        raise InputError("the probe applies to rows with nil-independent bound 1")
    skel = build_skeleton(t, 1, "probe")
    x = n + 1
    defect = li_defect_sym(skel, x, n - 1, 1)
    facts = []
    e2 = defect.get(2, P_ZERO)
    en = defect.get(n, P_ZERO)
    if e2.is_constant():
        facts.append({
            "component": "e2 of LI(x, e_{n-1}, e_1)",
            "value": str(e2.constant_value()),
            "consequence": "forces alpha = 0",
            "holds": not e2.constant_value(),
        })
    if en.is_constant():
        facts.append({
            "component": "e_n of LI(x, e_{n-1}, e_1)",
            "value": str(en.constant_value()),
            "consequence": "forces beta = 1",
            "holds": not en.constant_value(),
        })
    result = solve_extension(skel)
    infeasible = result.status == "infeasible"
    if not infeasible:
        raise CheckFailure(
            f"probe found a consistent codimension-1 extension of "
            f"L({alpha},{beta},{gamma}) at n={n}; nonexistence is asserted"
        )
    witness = ""
    for log in result.proof_logs:
        for step in log:
            if "infeasible" in step:
                witness = step["infeasible"]
                break
        if witness:
            break
    log = tuple(fact | {"deduced": fact["consequence"]} for fact in facts)
    log = log + tuple(step for lg in result.proof_logs for step in lg)
    return Codim1ProbeReport(alpha, beta, gamma, n, infeasible, tuple(facts), witness, log)


# ---------------------------------------------------------------------------
# verification of the named solvable extension families

_R_CASES = {
    "R1": ("b", None, ZERO),  # (alpha, beta, gamma) with beta the parameter
    "R2": (ZERO, ONE, ONE),
    "R3": (ONE, as_scalar(-1), ZERO),
    "R4": (ONE, ZERO, ZERO),
}

_HC1_CASES = {
    "Hc1_1": (ZERO, ZERO, ONE),
    "Hc1_2": (ONE, as_scalar(2), ZERO),
    "Hc1_3": (ONE, ZERO, "g"),
    "Hc1_4": (ONE, as_scalar(-2), ONE),
    "Hc1_5": (ONE, as_scalar(4), as_scalar(2)),
}

_HC2_CASES = {
    "Hc2_1": (ZERO, ZERO, ZERO),
    "Hc2_2": (ZERO, ONE, ZERO),
    "Hc2_3": (ZERO, as_scalar(2), ONE),
    "Hc2_4": (ONE, ZERO, ZERO),
    "Hc2_5": (ONE, ONE, ZERO),
    "Hc2_6": (ONE, as_scalar(2), ONE),
}


def _restriction_eqs_R(alpha, beta, gamma, a1, mu) -> list[Scalar]:
    """The full codimension-2 restriction system over the L-family."""
    one = ONE
    return [
        alpha + a1 * alpha * alpha,
        gamma * (one + a1 * gamma - a1 * alpha * (one + beta)),
        gamma * a1 - beta * a1 * (gamma - alpha * (one + beta)),
        mu * (one + mu),
        (beta + a1 * gamma) * (one - a1 * gamma + a1 * alpha * (one + beta) + mu * (one + a1 * gamma)),
        gamma * (beta + a1 * gamma),
        gamma * mu * alpha,
        gamma * mu * (one + a1 * gamma),
        mu * alpha * (one + beta),
        beta * (one + beta + a1 * gamma) + a1 * gamma,
        mu * (one + beta * (one + a1 * gamma) + a1 * gamma),
    ]


def _restriction_eqs_H2(alpha, beta, gamma, a1, n) -> list[Scalar]:
    """The codimension-2 restriction system over the G-family."""
    sn = ONE if n % 2 == 0 else as_scalar(-1)
    return [
        2 * a1 * gamma - beta - a1 * beta * beta,
        gamma * (2 + a1 * beta),
        alpha * (ONE - sn * a1 * alpha),
    ]


@dataclass(frozen=True)
class NilradicalCertificate:
    ideal_check: bool
    nilpotency_check: bool
    nonnilpotent_right_mults: tuple[str, ...]
    sampled_mixed_elements: int
    seed: int

    @property
    def ok(self) -> bool:
        return self.ideal_check and self.nilpotency_check and not self.nonnilpotent_right_mults


@dataclass(frozen=True)
class ExtensionVerification:
    family: str
    n: int
    params: tuple[tuple[str, str], ...]
    leibniz_ok: bool
    solvable_not_nilpotent: bool
    nilradical_certificate: NilradicalCertificate
    invariance_ok: bool
    general_form_ok: bool
    restriction_ok: bool

    @property
    def ok(self) -> bool:
        return (self.leibniz_ok and self.solvable_not_nilpotent
                and self.nilradical_certificate.ok and self.invariance_ok
                and self.general_form_ok and self.restriction_ok)


_SAMPLE_POOL = tuple(as_scalar(x) for x in (1, -1, 2, -2, 3, -3)) + (
    rational(1, 2), rational(-1, 2),
)


def verify_catalog_extension(name: str, n: int, seed: int = 20260810,
                             samples: int = 50,
                             params: Mapping[str, object] | None = None
                             ) -> ExtensionVerification:
    """Full verification battery for one named solvable extension family.

    Checks: Leibniz; solvable but not nilpotent; the leading block is a
    nilpotent two-sided ideal; no right multiplication by an element with a
    nonzero complement component is nilpotent (seeded random mixed samples);
    and the structure constants match the general parametrized form together
    with its restriction system at the family's parameter triple.
    """
    cname = _catalog.canonical_name(name)
    spec = _catalog.get_spec(cname)
    if not spec.kind.startswith("solvable"):
        raise InputError(f"{name!r} is not a solvable extension family")
    params = dict(params or {})
    if spec.param_names and not params:
        params = spec.grid(n)[0]
    t = _catalog.build(cname, n, params)
    leib_ok = leibniz_check(t).ok

    derived = series(t, "derived")
    lower = series(t, "lower-central")
    solv_ok = derived.stabilized_dim == 0 and lower.stabilized_dim > 0

    dim = t.dim
    nil_sub = Subspace.from_vectors(dim, [
        [ONE if i == m else ZERO for i in range(dim)] for m in range(n)
    ])
    from .tensor import is_ideal as _is_ideal

    ideal_ok = _is_ideal(t, nil_sub)
    sub_table = {}
    for (i, j), entries in t.products.items():
        if i <= n and j <= n:
            sub_table[(i, j)] = [(tt, c) for tt, c in entries if tt <= n]
    nil_restriction = StructureTensor(n, sub_table)
    from .tensor import is_nilpotent_algebra as _is_nilp

    nilp_ok = _is_nilp(nil_restriction)

    rng = random.Random(seed)
    bad: list[str] = []
    k = dim - n
    for q in range(n + 1, dim + 1):
        x = [ZERO] * dim
        x[q - 1] = ONE
        from .linalg import is_nilpotent_matrix as _inm

        if _inm(t.right_mult_matrix(x)):
            bad.append(f"basis x_{q - n}")
    for _ in range(samples):
        while True:
            qpart = [rng.choice(_SAMPLE_POOL) if rng.random() < 0.8 else ZERO
                     for _ in range(k)]
            if any(qpart):
                break
        x = [rng.choice(_SAMPLE_POOL) if rng.random() < 0.4 else ZERO for _ in range(n)]
        x += qpart
        from .linalg import is_nilpotent_matrix as _inm

        if _inm(t.right_mult_matrix(x)):
            bad.append("mixed sample")
            break
    cert = NilradicalCertificate(ideal_ok, nilp_ok, tuple(bad), samples, seed)

    inv_ok = check_invariance(t, nil_restriction)

    general_ok, restriction_ok = _general_form_check(cname, t, n, params)
    return ExtensionVerification(
        family=cname, n=n,
        params=tuple((kk, str(v)) for kk, v in sorted(params.items())),
        leibniz_ok=leib_ok, solvable_not_nilpotent=solv_ok,
        nilradical_certificate=cert, invariance_ok=inv_ok,
        general_form_ok=general_ok, restriction_ok=restriction_ok,
    )


def _general_form_check(cname, t, n, params) -> tuple[bool, bool]:
    from .catalog import _build_H1, _build_H2, _build_R

    if cname in _R_CASES:
        alpha, beta, gamma = _R_CASES[cname]
        if alpha == "b":
            alpha, beta, gamma = ZERO, as_scalar(params["b"]), ZERO
        a1 = t.entry(1, n + 1, n - 1)
        mu = t.entry(n + 2, n - 1, n - 1)
        rebuilt = _build_R(n, alpha, beta, gamma, a1, mu)
        eqs = _restriction_eqs_R(alpha, beta, gamma, a1, mu)
        return rebuilt == t, not any(eqs)
    if cname in _HC2_CASES:
        alpha, beta, gamma = _HC2_CASES[cname]
        a1 = t.entry(1, n + 1, 3)
        rebuilt = _build_H2(n, alpha, beta, gamma, a1)
        eqs = _restriction_eqs_H2(alpha, beta, gamma, a1, n)
        return rebuilt == t, not any(eqs)
    if cname in _HC1_CASES:
        alpha, beta, gamma = _HC1_CASES[cname]
        if gamma == "g":
            gamma = as_scalar(params["g"])
        rebuilt = _build_H1(n, alpha, beta, gamma)
        general_ok = rebuilt == t
        x = n + 1
        checks = [t.entry(x, 4, 2) - beta, t.entry(x, n, n) + as_scalar(n - 2)]
        for i in range(5, n):
            checks.append(t.entry(x, i, 2))
            checks.append(t.entry(x, i, n))
        for i in (1, 3):
            checks.append(t.entry(x, i, 2))
            checks.append(t.entry(x, i, n))
        checks.extend(t.product(x, x))
        return general_ok, not any(checks)
    raise InputError(f"{cname!r} has no general-form template")


# ---------------------------------------------------------------------------
# Remark-level split of the second codimension-2 family

@dataclass(frozen=True)
class SplitReport:
    n: int
    blocks_are_ideals: bool
    cross_products_vanish: bool
    first_block_matches: bool
    second_block_matches: bool

    @property
    def ok(self) -> bool:
        return (self.blocks_are_ideals and self.cross_products_vanish
                and self.first_block_matches and self.second_block_matches)


def remark39_split(n: int) -> SplitReport:
    """Split R2 at size n+2 into the two printed direct summands.

    The change e_1' = e_1 - e_{n-1}, e_2' = e_2 - e_n makes the subspaces
    spanned by {e_1', e_2', e_3..e_{n-2}, x} and {e_{n-1}, e_n, y} two
    complementary ideals; their restricted tensors are compared entry for
    entry with the printed null-filiform extension summands.
    """
    t = _catalog.build("R2", n, {})
    dim = n + 2
    cols = []
    for j in range(1, dim + 1):
        col = [ZERO] * dim
        col[j - 1] = ONE
        if j == 1:
            col[n - 2] = -ONE
        if j == 2:
            col[n - 1] = -ONE
        cols.append(col)
    p = Matrix.from_columns(cols)
    from .tensor import apply_basis_change

    changed = apply_basis_change(t, p)

    block_a = list(range(1, n - 1)) + [n + 1]          # e_1'..e_{n-2}, x
    block_b = [n - 1, n, n + 2]                        # e_{n-1}, e_n, y
    set_a, set_b = set(block_a), set(block_b)

    cross_ok = True
    ideals_ok = True
    for (i, j), entries in changed.products.items():
        side_i = i in set_a
        side_j = j in set_a
        targets = {tt for tt, _ in entries}
        if side_i != side_j:
            cross_ok = cross_ok and not targets
        else:
            home = set_a if side_i else set_b
            ideals_ok = ideals_ok and targets <= home

    # expected first summand: chain + null-filiform extension by x
    pos_a = {idx: pos + 1 for pos, idx in enumerate(block_a)}
    expected_a = {}
    for i in range(1, n - 2):
        expected_a[(i, 1)] = [(i + 1, ONE)]
    for i in range(1, n - 1):
        expected_a[(i, len(block_a))] = [(i, as_scalar(i))]
    expected_a[(len(block_a), 1)] = [(1, -ONE)]
    got_a = {}
    for (i, j), entries in changed.products.items():
        if i in set_a and j in set_a:
            got_a[(pos_a[i], pos_a[j])] = [(pos_a[tt], c) for tt, c in entries]
    first_ok = StructureTensor(len(block_a), got_a) == StructureTensor(len(block_a), expected_a)

    pos_b = {idx: pos + 1 for pos, idx in enumerate(block_b)}
    expected_b = {
        (1, 1): [(2, ONE)],
        (1, 3): [(1, ONE)],
        (2, 3): [(2, as_scalar(2))],
        (3, 1): [(1, -ONE)],
    }
    got_b = {}
    for (i, j), entries in changed.products.items():
        if i in set_b and j in set_b:
            got_b[(pos_b[i], pos_b[j])] = [(pos_b[tt], c) for tt, c in entries]
    second_ok = StructureTensor(3, got_b) == StructureTensor(3, expected_b)
    return SplitReport(n, ideals_ok, cross_ok, first_ok, second_ok)


# ---------------------------------------------------------------------------
# the Lie-outcome probe over the quasi-filiform Lie family

@dataclass(frozen=True)
class LieProbeReport:
    n: int
    r: int
    entry_e_n_minus_2: Scalar
    entry_e_n_minus_1: Scalar
    annihilator_candidates: tuple[int, ...]
    candidates_excluded: bool
    q_directions_excluded: bool
    leaves: int
    leaves_all_lie: bool
    squares_zero_on_leaves: bool
    verdict: str
    notes: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return self.verdict == "lie"


def lie_probe(n: int, r: int) -> LieProbeReport:
    """Certify the Lie outcome for the maximal extension of the Lnr family.

    Two targeted identities pin the diagonal entries of [x, e_{n-2}] and
    [x, e_{n-1}] to the nonzero constants -(n-3) and -(r-2), so neither
    vector lies in Ann_r(R); the candidate space Ann_r(N) is spanned by
    exactly those two coordinates and is stable under the diagonal right
    action with distinct eigenvalues, so Ann_r(R) = 0.  The squares ideal
    sits inside Ann_r(R), hence vanishes: every extension is Lie.  The
    solver is also run to exhaustion and every leaf is checked directly.
    """
    if not _catalog.lnr_admissible(n, r):
        raise InputError(f"inadmissible (n, r) = ({n}, {r})")
    if n == 5:
        raise InputError("the n = 5 algebra is a separately treated special case")
    t = _catalog.build("Lnr", n, {"r": r})
    skel = build_skeleton(t, 2, "probe")
    x = n + 1
    notes = list(skel.notes)

    ann_r, _ = annihilators(t)
    cand = sorted(_coordinate_indices(ann_r))
    if cand != [n - 1, n]:
        raise InternalInvariantError("unexpected right annihilator for Lnr")

    id1 = li_defect_sym(skel, x, 1, n - 2)       # LI(x, e_0, e_{n-3}); labels shift by one
    id2 = li_defect_sym(skel, x, 2, r)           # LI(x, e_1, e_{r-1})
    eqs = [poly for defect in (id1, id2) for _t, poly in sorted(defect.items())
           if not poly.is_zero()]
    mini = linear_eliminate(ConstraintSystem.from_equations(skel.unknowns, eqs))
    resolved = mini.resolved_assignment()

    def entry(m, s):
        val = resolved.get(f"c[1][{m}][{s}]")
        if val is None or not val.is_constant():
            return None
        return val.constant_value()

    # the full left action of x on the candidate plane span{e_{n-2}, e_{n-1}}
    e11, e21 = entry(n - 1, n - 1), entry(n - 1, n)
    e12, e22 = entry(n, n - 1), entry(n, n)
    if e11 is None or e22 is None:
        raise CheckFailure("targeted identities did not pin the annihilator entries")
    expected1, expected2 = as_scalar(-(n - 3)), as_scalar(-(r - 2))
    if e11 != expected1 or e22 != expected2:
        raise CheckFailure("targeted identities gave unexpected diagonal entries")

    # any z = a e_{n-2} + b e_{n-1} in Ann_r(R) satisfies [x, z] = 0; when all
    # four entries are pinned constants with nonzero determinant this forces
    # a = b = 0, excluding the whole candidate plane at once
    candidates_excluded = False
    if e21 is not None and e12 is not None:
        det = e11 * e22 - e12 * e21
        candidates_excluded = bool(det)
    if not candidates_excluded:
        notes.append("candidate plane not fully excluded by the targeted identities; "
                     "conclusion rests on the solver leaves only")

    result = solve_extension(skel)
    leaves_lie = all(is_lie(leaf.tensor_at_zero) for leaf in result.leaves)
    second_sample = all(
        is_lie(leaf.instantiate({u: ONE for u in leaf.free_unknowns}))
        for leaf in result.leaves
    )
    squares_zero = all(
        squares_ideal(leaf.tensor_at_zero).dim == 0 for leaf in result.leaves
    )
    if result.fragment_limited:
        notes.append("some constraint branches hit the solver fragment limit")

    verdict = "lie" if (candidates_excluded and result.leaves and leaves_lie
                        and second_sample and squares_zero
                        and not result.fragment_limited) else "inconclusive"
    return LieProbeReport(
        n=n, r=r, entry_e_n_minus_2=e11, entry_e_n_minus_1=e22,
        annihilator_candidates=tuple(cand), candidates_excluded=candidates_excluded,
        q_directions_excluded=True, leaves=len(result.leaves),
        leaves_all_lie=leaves_lie and second_sample,
        squares_zero_on_leaves=squares_zero, verdict=verdict, notes=tuple(notes),
    )
