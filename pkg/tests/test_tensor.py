import json
import random

import pytest

from leibnizalg import catalog
from leibnizalg.errors import DomainError, InputError
from leibnizalg.linalg import Matrix, Subspace
from leibnizalg.scalars import ONE, ZERO, as_scalar
from leibnizalg.tensor import (
    StructureTensor,
    annihilators,
    apply_basis_change,
    is_ideal,
    is_isomorphism,
    is_lie,
    is_nilpotent_algebra,
    is_solvable_algebra,
    leibniz_check,
    leibniz_defect,
    natural_grading,
    nilindex,
    series,
    squares_ideal,
    tensor_from_json,
    tensor_to_json,
)


def unit(n, i):
    return tuple(ONE if m == i - 1 else ZERO for m in range(n))


def test_bracket_published_products():
    t = catalog.build("L(a,b,g)", 6, {"a": 0, "b": 1, "g": 0})
    assert t.bracket(unit(6, 1), unit(6, 5)) == unit(6, 6)
    assert t.bracket([0] * 6, unit(6, 3)) == tuple([ZERO] * 6)
    g = catalog.build("G(a,b,g)", 7, {"a": 0, "b": 0, "g": 1})
    assert g.bracket(unit(7, 3), unit(7, 3)) == unit(7, 2)


def test_bracket_bilinear_random():
    t = catalog.build("G(a,b,g)", 7, {"a": 1, "b": 2, "g": 1})
    rng = random.Random(2)
    for _ in range(20):
        u = [as_scalar(rng.randint(-3, 3)) for _ in range(7)]
        v = [as_scalar(rng.randint(-3, 3)) for _ in range(7)]
        w = [as_scalar(rng.randint(-3, 3)) for _ in range(7)]
        lhs = t.bracket([a + b for a, b in zip(u, v)], w)
        rhs = tuple(a + b for a, b in zip(t.bracket(u, w), t.bracket(v, w)))
        assert lhs == rhs


def test_leibniz_check_passes_on_catalog_members():
    assert leibniz_check(catalog.build("L(a,b,g)", 7, {"a": 1, "b": 0, "g": 2})).ok
    assert leibniz_check(catalog.build("R4", 7, {})).ok


def test_leibniz_check_failure_with_defect():
    t = StructureTensor(3, {(1, 1): [(2, 1)], (1, 2): [(3, 1)]})
    rep = leibniz_check(t)
    assert not rep.ok
    assert rep.violations[0][0] == (1, 1, 1)
    assert rep.violations[0][1] == unit(3, 3)
    assert leibniz_defect(t, 1, 1, 1) == unit(3, 3)


def test_series_examples():
    t = catalog.build("L(a,b,g)", 6, {"a": 0, "b": 0, "g": 0})
    assert series(t, "lower-central").dims == (6, 4, 2, 1, 0)
    abelian = StructureTensor(4, {})
    assert series(abelian, "lower-central").dims == (4, 0)
    assert nilindex(abelian) == 2
    t8 = catalog.build("L(a,b,g)", 8, {"a": 1, "b": 1, "g": 1})
    dims = series(t8, "lower-central").dims
    assert dims[8 - 3] > 0 and dims[8 - 2] == 0  # quasi-filiform window


def test_solvable_vs_nilpotent():
    g = catalog.build("G(a,b,g)", 6, {"a": 0, "b": 1, "g": 0})
    assert is_nilpotent_algebra(g) and is_solvable_algebra(g)
    h = catalog.build("Hc1_1", 6, {})
    assert is_solvable_algebra(h) and not is_nilpotent_algebra(h)


def test_annihilators_examples():
    t = catalog.build("L(a,b,g)", 6, {"a": 0, "b": 1, "g": 0})
    ann_r, _ = annihilators(t)
    assert ann_r == Subspace.from_vectors(6, [unit(6, i) for i in (2, 3, 4, 6)])
    t0 = catalog.build("L(a,b,g)", 6, {"a": 0, "b": 0, "g": 0})
    ann_r0, _ = annihilators(t0)
    assert ann_r0.dim == 5  # e5 joins when the top-right product vanishes
    abelian = StructureTensor(3, {})
    ar, al = annihilators(abelian)
    assert ar.dim == al.dim == 3


def test_annihilator_membership_of_squares_random():
    rng = random.Random(9)
    for name, n, params in [("L(a,b,g)", 7, {"a": 1, "b": 1, "g": 1}),
                            ("G(a,b,g)", 7, {"a": 1, "b": 2, "g": 1}),
                            ("Hc2_3", 6, {})]:
        t = catalog.build(name, n, params)
        ann_r, _ = annihilators(t)
        for _ in range(200):
            x = [as_scalar(rng.randint(-2, 2)) for _ in range(t.dim)]
            y = [as_scalar(rng.randint(-2, 2)) for _ in range(t.dim)]
            assert ann_r.contains_vector(t.bracket(x, x))
            sym = tuple(a + b for a, b in zip(t.bracket(x, y), t.bracket(y, x)))
            assert ann_r.contains_vector(sym)


def test_is_ideal():
    t = catalog.build("L(a,b,g)", 6, {"a": 0, "b": 0, "g": 0})
    l2 = series(t).terms[1]
    assert is_ideal(t, l2)
    assert not is_ideal(t, Subspace.from_vectors(6, [unit(6, 1)]))
    assert is_ideal(t, Subspace.from_vectors(6, [unit(6, 6)]))


def test_is_lie():
    assert is_lie(catalog.build("Lnr", 7, {"r": 3}))
    assert not is_lie(catalog.build("L(a,b,g)", 6, {"a": 0, "b": 0, "g": 1}))
    assert is_lie(StructureTensor(3, {}))


def _squares_oracle(t):
    """Independent route: span of [v, v] over all 0/1 vectors with support
    up to 2 (enough by polarization), then a brute ideal closure."""
    n = t.dim
    vectors = []
    for i in range(1, n + 1):
        vectors.append(unit(n, i))
        for j in range(i + 1, n + 1):
            vectors.append(tuple(a + b for a, b in zip(unit(n, i), unit(n, j))))
    span = Subspace.from_vectors(n, [t.bracket(v, v) for v in vectors])
    while True:
        extra = []
        for v in span.basis_rows():
            for i in range(1, n + 1):
                for w in (t.bracket(v, unit(n, i)), t.bracket(unit(n, i), v)):
                    if not span.contains_vector(w):
                        extra.append(w)
        if not extra:
            return span
        from leibnizalg.linalg import subspace_sum

        span = subspace_sum(span, Subspace.from_vectors(n, extra))


@pytest.mark.parametrize("name,n,params", [
    ("L(a,b,g)", 6, {"a": 0, "b": 0, "g": 1}),
    ("L(a,b,g)", 6, {"a": 0, "b": 0, "g": 0}),
    ("G(a,b,g)", 7, {"a": 1, "b": 2, "g": 1}),
    ("Lnr", 7, {"r": 3}),
])
def test_squares_ideal_against_oracle(name, n, params):
    t = catalog.build(name, n, params)
    assert squares_ideal(t) == _squares_oracle(t)


def test_squares_ideal_values():
    # gamma != 0 puts e_n inside; the symmetric sum [e_1,e_5] + [e_5,e_1] = e_6
    # puts it inside even at (0,0,0)
    t1 = catalog.build("L(a,b,g)", 6, {"a": 0, "b": 0, "g": 1})
    assert squares_ideal(t1).contains_vector(unit(6, 6))
    t0 = catalog.build("L(a,b,g)", 6, {"a": 0, "b": 0, "g": 0})
    assert squares_ideal(t0) == Subspace.from_vectors(6, [unit(6, i) for i in (2, 3, 4, 6)])
    assert squares_ideal(catalog.build("Lnr", 7, {"r": 3})).dim == 0


def test_basis_change_and_isomorphism():
    t = catalog.build("G(a,b,g)", 6, {"a": 0, "b": 1, "g": 0})
    assert apply_basis_change(t, Matrix.identity(6)) == t
    rng = random.Random(13)
    for _ in range(10):
        p_rows = [[as_scalar(rng.randint(-2, 2)) if j > i else (ONE if i == j else ZERO)
                   for j in range(6)] for i in range(6)]
        p = Matrix(p_rows)
        q_rows = [[as_scalar(rng.randint(-2, 2)) if j < i else (ONE if i == j else ZERO)
                   for j in range(6)] for i in range(6)]
        q = Matrix(q_rows)
        a = apply_basis_change(t, p)
        b = apply_basis_change(a, q)
        assert is_isomorphism(t, a, p)
        assert is_isomorphism(a, b, q)
        assert is_isomorphism(t, b, p * q)   # transitivity of the verified maps
    with pytest.raises(InputError):
        apply_basis_change(t, Matrix.zeros(6))


def test_abelian_rescale_is_identity():
    abelian = StructureTensor(3, {})
    d = Matrix([[2, 0, 0], [0, 3, 0], [0, 0, as_scalar("1/2")]])
    assert apply_basis_change(abelian, d) == abelian


def test_natural_grading_on_catalog_family():
    t = catalog.build("L(a,b,g)", 7, {"a": 1, "b": 0, "g": 2})
    gr = natural_grading(t)
    assert gr.natural
    assert gr.piece_dims == (2, 2, 1, 1, 1)
    assert sum(gr.piece_dims) == 7
    abelian = StructureTensor(3, {})
    assert natural_grading(abelian).natural


def test_natural_grading_kills_filtration_tails():
    # a filiform-style chain with an extra tail term [e1,e2] = e4: the tail
    # lands two levels down and dies in the graded algebra
    n = 6
    table = {(i, 1): [(i + 1, 1)] for i in range(1, n)}
    table[(1, 2)] = [(4, 1)]
    t = StructureTensor(n, table)
    gr = natural_grading(t)
    assert not gr.natural
    assert gr.tensor.entry(1, 2, 4) == ZERO
    with pytest.raises(DomainError):
        natural_grading(catalog.build("Hc1_1", 6, {}))  # not nilpotent


def test_json_round_trip():
    for name, n, params in [("L(a,b,g)", 6, {"a": 1, "b": "1/2", "g": 0}),
                            ("R2", 6, {}), ("Lnr", 7, {"r": 3})]:
        t = catalog.build(name, n, params)
        doc = tensor_to_json(t)
        text = json.dumps(doc, sort_keys=True)
        back = tensor_from_json(json.loads(text))
        assert back == t
        assert back.basis_labels == t.basis_labels
        assert json.dumps(tensor_to_json(back), sort_keys=True) == text


def test_mutation_changes_leibniz_or_not():
    # a rigid two-sided chain entry flips the verdict; a pure family
    # parameter slot does not (the bump lands on another family member)
    g = catalog.build("G(a,b,g)", 7, {"a": 0, "b": 0, "g": 0})
    assert not leibniz_check(g.with_entry_bumped(3, 1, 4)).ok
    t = catalog.build("L(a,b,g)", 6, {"a": 0, "b": 0, "g": 0})
    assert leibniz_check(t.with_entry_bumped(1, 5, 6)).ok  # now L(0,1,0)
