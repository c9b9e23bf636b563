"""Characteristic sequences and isomorphism-invariant fingerprints.

The characteristic sequence of a nilpotent algebra is the lexicographic
maximum, over elements outside the derived span, of the Jordan block sizes
of the right multiplication operator.  Maximality over an infinite set is
not decidable by sampling, so the computed value is a certified lower bound
with the sampling evidence attached; it is never claimed to be the true
maximum.

Fingerprints collect basis-free quantities only, so equal algebras give
equal fingerprints under any basis change; unequal fingerprints separate
algebras, while collisions prove nothing and are reported as such.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from .derivations import derivation_space, inner_derivations
from .errors import DomainError, InputError
from .linalg import Subspace, jordan_block_sizes, subspace_intersect, vec_is_zero
from .scalars import ONE, ZERO, Scalar, as_scalar, rational
from .tensor import (
    StructureTensor,
    annihilators,
    is_lie,
    series,
    squares_ideal,
)

_SAMPLE_POOL = tuple(as_scalar(x) for x in (1, -1, 2, -2, 3)) + (
    rational(1, 2), rational(-1, 2), ZERO,
)


@dataclass(frozen=True)
class CharSequence:
    sequence: tuple[int, ...]
    witness: tuple[Scalar, ...]
    samples_tried: int
    certified_maximum: bool = False   # sampling gives a lower bound only

    def __str__(self):
        return "(" + ", ".join(str(k) for k in self.sequence) + ")"


def characteristic_sequence(t: StructureTensor, extra_samples: int = 0,
                            seed: int = 20260810) -> CharSequence:
    """Lexicographically maximal Jordan profile found over L \\ L^2.

    Evaluates every basis generator outside L^2 plus the requested number of
    seeded random rational combinations; the result is an exact value for
    each witness but only a lower bound for the algebra-wide maximum.
    """
    rep = series(t, "lower-central")
    if rep.stabilized_dim != 0:
        raise DomainError("characteristic sequences are computed for nilpotent algebras")
    l2 = rep.terms[1] if len(rep.terms) > 1 else Subspace.zero(t.dim)
    n = t.dim
    candidates = []
    for i in range(1, n + 1):
        v = tuple(ONE if m == i - 1 else ZERO for m in range(n))
        if not l2.contains_vector(v):
            candidates.append(v)
    if not candidates:
        raise DomainError("no basis generator outside the derived span")
    rng = random.Random(seed)
    tried = 0
    for _ in range(extra_samples):
        v = tuple(rng.choice(_SAMPLE_POOL) for _ in range(n))
        if not l2.contains_vector(v) and not vec_is_zero(v):
            candidates.append(v)
    best = None
    best_witness = None
    for v in candidates:
        m = t.right_mult_matrix(v)
        seqv = jordan_block_sizes(m)   # nilpotent since the algebra is
        tried += 1
        if best is None or seqv > best:
            best = seqv
            best_witness = v
    return CharSequence(best, best_witness, tried)


@dataclass(frozen=True)
class Fingerprint:
    dim: int
    lower_central_dims: tuple[int, ...]
    derived_dims: tuple[int, ...]
    dim_ann_r: int
    dim_ann_l: int
    dim_center: int
    dim_der: int
    dim_inner: int
    dim_squares_ideal: int
    is_lie_flag: bool

    FIELDS = (
        "dim", "lower_central_dims", "derived_dims", "dim_ann_r", "dim_ann_l",
        "dim_center", "dim_der", "dim_inner", "dim_squares_ideal", "is_lie_flag",
    )

    def as_tuple(self):
        return tuple(getattr(self, f) for f in self.FIELDS)

    def first_difference(self, other: "Fingerprint") -> str | None:
        for f in self.FIELDS:
            if getattr(self, f) != getattr(other, f):
                return f
        return None


def fingerprint(t: StructureTensor) -> Fingerprint:
    """All fields are basis-free, hence isomorphism invariants."""
    lower = series(t, "lower-central")
    derived = series(t, "derived")
    ann_r, ann_l = annihilators(t)
    center = subspace_intersect(ann_r, ann_l)
    der = derivation_space(t)
    inner = inner_derivations(t)
    return Fingerprint(
        dim=t.dim,
        lower_central_dims=lower.dims,
        derived_dims=derived.dims,
        dim_ann_r=ann_r.dim,
        dim_ann_l=ann_l.dim,
        dim_center=center.dim,
        dim_der=der.dim,
        dim_inner=inner.dim,
        dim_squares_ideal=squares_ideal(t).dim,
        is_lie_flag=is_lie(t),
    )


@dataclass(frozen=True)
class PairwiseEntry:
    first: str
    second: str
    distinguished_by: str | None     # None marks a collision

    @property
    def collision(self) -> bool:
        return self.distinguished_by is None


@dataclass(frozen=True)
class PairwiseReport:
    names: tuple[str, ...]
    fingerprints: tuple[Fingerprint, ...]
    entries: tuple[PairwiseEntry, ...]

    @property
    def collisions(self) -> tuple[PairwiseEntry, ...]:
        return tuple(e for e in self.entries if e.collision)


def pairwise_distinguish(tensors: Sequence[StructureTensor],
                         names: Sequence[str] | None = None) -> PairwiseReport:
    """Name the first differing fingerprint field for each pair.

    A collision entry means the invariants cannot separate the pair; it is
    explicitly not evidence of isomorphism.
    """
    if not tensors:
        raise InputError("empty list")
    dims = {t.dim for t in tensors}
    if len(dims) != 1:
        raise InputError("pairwise distinction needs equal dimensions")
    if names is None:
        names = [f"algebra{i + 1}" for i in range(len(tensors))]
    prints = tuple(fingerprint(t) for t in tensors)
    entries = []
    for i in range(len(tensors)):
        for j in range(i + 1, len(tensors)):
            entries.append(PairwiseEntry(
                names[i], names[j], prints[i].first_difference(prints[j])
            ))
    return PairwiseReport(tuple(names), prints, tuple(entries))
