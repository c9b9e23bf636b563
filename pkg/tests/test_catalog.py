import pytest

from leibnizalg import catalog
from leibnizalg.derivations import derivation_space, is_derivation
from leibnizalg.errors import InputError
from leibnizalg.scalars import ONE, ZERO, as_scalar
from leibnizalg.tensor import StructureTensor, is_lie, leibniz_check


def test_registry_size_and_kinds():
    specs = catalog.list_families()
    assert len(specs) == 31
    by_kind = {}
    for s in specs:
        by_kind.setdefault(s.kind, []).append(s.name)
    assert len(by_kind["type1"]) == 5
    assert len(by_kind["type2"]) == 8
    assert len(by_kind["solvable-R"]) == 4
    assert len(by_kind["solvable-H1"]) == 5
    assert len(by_kind["solvable-H2"]) == 6
    assert len(catalog.list_families("solvable-H2")) == 6


def test_published_sample_products():
    t = catalog.build("L(a,b,g)", 7, {"a": 1, "b": 0, "g": 2})
    assert t.product(6, 1) == (ZERO, ONE, ZERO, ZERO, ZERO, ZERO, ONE)  # e_7 + e_2
    t5 = catalog.build("Ltype2_5", 9, {})
    for i in range(3, 9):
        sign = ONE if i % 2 == 0 else -ONE
        assert t5.entry(i, 11 - i, 9) == sign
    r1 = catalog.build("R1", 6, {"b": -1})
    assert r1.product(8, 5) == tuple([ZERO] * 4 + [-ONE] + [ZERO] * 3)  # [y, e5] = -e5


def test_validators_reject_published_exclusions():
    with pytest.raises(InputError):
        catalog.build("G(a,b,g)", 6, {"a": 1, "b": 0, "g": 0})  # even n needs a = 0
    with pytest.raises(InputError):
        catalog.build("L4", 7, {"g": 0})
    with pytest.raises(InputError):
        catalog.build("L5", 7, {"b": 1, "g": 2})
    with pytest.raises(InputError):
        catalog.build("Ltype2_6", 7, {"b": 3})
    with pytest.raises(InputError):
        catalog.build("Ltype2_5", 8, {})     # odd n only
    with pytest.raises(InputError):
        catalog.build("Lnr", 7, {"r": 4})    # r must be odd
    with pytest.raises(InputError):
        catalog.build("Lnr", 7, {"r": 7})    # r <= 2 floor((n-1)/2) - 1
    with pytest.raises(InputError):
        catalog.build("Hc2_4", 8, {})        # alpha = 1 family needs odd n
    with pytest.raises(InputError):
        catalog.build("R1", 6, {"b": 2})
    with pytest.raises(InputError):
        catalog.build("no-such-family", 6, {})


def test_classical_and_unified_builds_agree():
    pairs = [
        (("L1", {"b": as_scalar("1/2")}), ("L(a,b,g)", {"a": 0, "b": "1/2", "g": 0})),
        (("L2", {"b": 1}), ("L(a,b,g)", {"a": 0, "b": 1, "g": 1})),
        (("L3", {"b": -1}), ("L(a,b,g)", {"a": 1, "b": -1, "g": 0})),
        (("L4", {"g": 2}), ("L(a,b,g)", {"a": 1, "b": 0, "g": 2})),
        (("L5", {"b": 2, "g": 4}), ("L(a,b,g)", {"a": 1, "b": 2, "g": 4})),
        (("Ltype2_1", {}), ("G(a,b,g)", {"a": 0, "b": 0, "g": 0})),
        (("Ltype2_4", {}), ("G(a,b,g)", {"a": 0, "b": 2, "g": 1})),
        (("Ltype2_7", {"g": 3}), ("G(a,b,g)", {"a": 1, "b": 0, "g": 3})),
        (("Ltype2_8", {"b": -2, "g": 1}), ("G(a,b,g)", {"a": 1, "b": -2, "g": 1})),
    ]
    for (cn, cp), (un, up) in pairs:
        n = 7
        assert catalog.build(cn, n, cp) == catalog.build(un, n, up)


def test_resolve_name_round_trip():
    cases = [
        ("L1", {"b": as_scalar(5)}),
        ("L2", {"b": ONE}),
        ("L3", {"b": as_scalar(-1)}),
        ("L4", {"g": as_scalar(3)}),
        ("L5", {"b": ONE, "g": ONE}),
        ("Ltype2_1", {}), ("Ltype2_2", {}), ("Ltype2_3", {}), ("Ltype2_4", {}),
        ("Ltype2_5", {}), ("Ltype2_6", {"b": as_scalar(2)}),
        ("Ltype2_7", {"g": as_scalar(7)}), ("Ltype2_8", {"b": as_scalar(4), "g": as_scalar(2)}),
    ]
    for name, params in cases:
        uname, uparams = catalog.resolve_name(name, params)
        back_name, back_params = catalog.resolve_name(uname, uparams)
        assert back_name == name
        assert back_params == params


def test_resolve_name_examples():
    # the classical domain is enforced when translating to a classical name
    with pytest.raises(InputError):
        catalog.resolve_name("L(a,b,g)", {"a": 1, "b": 7, "g": 0})
    name, params = catalog.resolve_name("G(a,b,g)", {"a": 0, "b": 2, "g": 1})
    assert name == "Ltype2_4" and params == {}
    name, params = catalog.resolve_name("G(a,b,g)", {"a": 1, "b": 1, "g": 0})
    assert name == "Ltype2_6" and params["b"] == ONE
    with pytest.raises(InputError):
        catalog.resolve_name("G(a,b,g)", {"a": 0, "b": 5, "g": 0})
    with pytest.raises(InputError):
        catalog.resolve_name("Lnr", {"r": as_scalar(3)})


def test_type2_misprint_corrected():
    # the fourth type-II family must agree with its unified form, which pins
    # the square of e_1 to e_2 (nilpotency also rules the printed e_1 out)
    t4 = catalog.build("Ltype2_4", 8, {})
    assert t4.entry(1, 1, 2) == ONE
    assert t4.entry(1, 1, 1) == ZERO
    printed_variant = t4.with_entry_bumped(1, 1, 1, 1).with_entry_bumped(1, 1, 2, -1)
    from leibnizalg.tensor import is_nilpotent_algebra

    assert not is_nilpotent_algebra(printed_variant)


def test_lnr_antisymmetric_completion_and_lie():
    t = catalog.build("Lnr", 9, {"r": 5})
    assert is_lie(t)
    assert t.entry(1, 2, 3) == ONE      # [e_0, e_1] = e_2 in label terms
    assert t.entry(2, 1, 3) == -ONE
    assert t.entry(2, 5, 9) == ONE      # [e_1, e_4] = e_8 = e_{n-1}
    assert t.entry(5, 2, 9) == -ONE


def test_lnr_derivation_table():
    for (n, r) in [(7, 3), (9, 5), (8, 3)]:
        table = dict(catalog.lnr_derivation_table(n, r))
        t = catalog.build("Lnr", n, {"r": r})
        der = derivation_space(t)
        for name, mat in table.items():
            assert is_derivation(t, mat), name
            assert der.contains(mat), name
    # published sample values at (7,3): t_2 doubles the top of the chain and
    # g_1 sends e_0 to e_r
    table = dict(catalog.lnr_derivation_table(7, 3))
    t2 = table["t2"]
    assert t2[6, 6] == as_scalar(2)
    g1 = table["g1"]
    assert g1.column(0) == tuple(ONE if i == 3 else ZERO for i in range(7))
    # h_k parity rule: at (9,5) only odd k at or below r-3, everything above
    names = {name for name, _ in catalog.lnr_derivation_table(9, 5)}
    assert "h3" in names and "h4" not in names and "h5" in names and "h6" in names
    with pytest.raises(InputError):
        catalog.lnr_derivation_table(5, 3)


def test_lnr_h_table_matches_derivation_space_dimension():
    # every derivation-table generator is independent; together with nothing
    # else they span Der (adjudicated by the solver, not the printed count)
    for (n, r) in [(7, 3), (9, 3), (9, 5), (9, 7)]:
        t = catalog.build("Lnr", n, {"r": r})
        der = derivation_space(t)
        table = catalog.lnr_derivation_table(n, r)
        from leibnizalg.linalg import Subspace

        span = Subspace.from_vectors(n * n, [m.vectorize() for _, m in table])
        assert span.dim == len(table)
        assert span == der.as_subspace()


def test_r3_known_defect_is_recorded():
    spec = catalog.get_spec("R3")
    assert spec.known_defect
    t = catalog.build("R3", 6, {})   # builds, but is knowingly not Leibniz
    rep = leibniz_check(t)
    assert not rep.ok
    assert rep.violations[0][0] == (8, 1, 6)   # the (y, e_1, e_n) triple


def test_aliases_and_canonical_names():
    assert catalog.canonical_name("L1(beta)") == "L1"
    assert catalog.canonical_name("L") == "L(a,b,g)"
    assert catalog.canonical_name("G(a,b,g)") == "G(a,b,g)"
    assert catalog.canonical_name("Lnr(n,r)") == "Lnr"
