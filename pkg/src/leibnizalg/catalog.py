"""Constructors for every named algebra family handled by this package.

Families covered, with their canonical ASCII names:

* type-I quasi-filiform nilpotent families      L1(b) ... L5(b,g)
* type-II quasi-filiform nilpotent families     Ltype2_1 ... Ltype2_8
* the two unified nilpotent families            L(a,b,g), G(a,b,g)
* the quasi-filiform Lie family                 Lnr (basis e_0 ... e_{n-1})
* solvable extensions of L(a,b,g), codim 2      R1(b), R2, R3, R4
* solvable extensions of G(a,b,g), codim 1      Hc1_1 ... Hc1_5
* solvable extensions of G(a,b,g), codim 2      Hc2_1 ... Hc2_6

Every builder validates its parameter domain and parity rule, then runs the
Leibniz checker on the result, so a successfully built tensor is always a
Leibniz algebra.  Two entries in the published type-II table are internally
inconsistent as printed and are corrected here to the unique values that the
surrounding family data forces; the corrections are covered by tests.

The solvable extension tables are generated from the parametrized form of
the corresponding codimension-1/2 analysis evaluated at each family's
normalization constants.  Where a printed per-family list disagrees with
that form, the printed version fails the Leibniz identity and the generated
one is kept ("known_misprints" in each spec records the entries).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping, Sequence

from .errors import CheckFailure, InputError
from .linalg import Matrix
from .scalars import ONE, ZERO, Scalar, as_scalar, rational
from .tensor import StructureTensor, is_lie, leibniz_check

Params = Mapping[str, Scalar]


@dataclass(frozen=True)
class FamilySpec:
    name: str
    kind: str
    dim_rule: str                     # "n", "n+1" or "n+2"
    param_names: tuple[str, ...]
    param_domain: str
    parity_rule: str                  # "none" or "n-odd"
    min_n: int
    builder: Callable[[int, Params], StructureTensor]
    validator: Callable[[int, Params], None]
    grid: Callable[[int], list[dict[str, Scalar]]]
    aliases: tuple[str, ...] = ()
    known_misprints: tuple[str, ...] = ()
    known_defect: str = ""            # set when even the corrected table cannot work

    def total_dim(self, n: int) -> int:
        return n + {"n": 0, "n+1": 1, "n+2": 2}[self.dim_rule]


_REGISTRY: dict[str, FamilySpec] = {}
_ALIASES: dict[str, str] = {}


def _register(spec: FamilySpec):
    _REGISTRY[spec.name] = spec
    for a in spec.aliases:
        _ALIASES[a] = spec.name


def canonical_name(name: str) -> str:
    s = name.replace(" ", "")
    if s in _REGISTRY:
        return s
    if s in _ALIASES:
        return _ALIASES[s]
    head = s.split("(")[0]
    if head in _REGISTRY:
        return head
    if head in _ALIASES:
        return _ALIASES[head]
    raise InputError(f"unknown family {name!r}; valid: {', '.join(sorted(_REGISTRY))}")


def get_spec(name: str) -> FamilySpec:
    return _REGISTRY[canonical_name(name)]


def list_families(filter_kind: str | None = None) -> list[FamilySpec]:
    specs = list(_REGISTRY.values())
    if filter_kind is not None:
        specs = [s for s in specs if filter_kind in (s.kind, s.name)]
    return specs


def build(name: str, n: int, params: Params | None = None) -> StructureTensor:
    """Build a named family member at size n; validates and Leibniz-checks."""
    spec = get_spec(name)
    params = {k: as_scalar(v) for k, v in (params or {}).items()}
    unknown = set(params) - set(spec.param_names)
    if unknown:
        raise InputError(f"{spec.name} does not take parameters {sorted(unknown)}")
    missing = set(spec.param_names) - set(params)
    if missing:
        raise InputError(f"{spec.name} needs parameters {sorted(missing)}")
    if n < spec.min_n:
        raise InputError(f"{spec.name} needs n >= {spec.min_n}, got {n}")
    if spec.parity_rule == "n-odd" and n % 2 == 0:
        raise InputError(f"{spec.name} needs odd n, got {n}")
    spec.validator(n, params)
    t = spec.builder(n, params)
    rep = leibniz_check(t)
    if not rep.ok and not spec.known_defect:
        raise CheckFailure(
            f"built tensor for {spec.name} fails the Leibniz identity at "
            f"{rep.violations[0][0]}; this is a catalog bug"
        )
    return t


def default_grid(name: str, n: int) -> list[dict[str, Scalar]]:
    return get_spec(name).grid(n)


# ---------------------------------------------------------------------------
# shared small helpers

def _no_params(_n, _params):
    return None


def _sc(x) -> Scalar:
    return as_scalar(x)


def _labels(n: int, extra: Sequence[str] = ()) -> tuple[str, ...]:
    return tuple([f"e{i}" for i in range(1, n + 1)] + list(extra))


def _merge(table: dict, i: int, j: int, entries: Iterable[tuple[int, Scalar]]):
    table.setdefault((i, j), [])
    table[(i, j)].extend((t, _sc(c)) for t, c in entries)


# ---------------------------------------------------------------------------
# type-I families and the unified L(a,b,g)

def _build_type1(n: int, alpha, beta, gamma) -> StructureTensor:
    table: dict = {}
    for i in range(1, n - 2):
        _merge(table, i, 1, [(i + 1, ONE)])
    _merge(table, n - 1, 1, [(n, ONE)])
    if _sc(alpha):
        _merge(table, n - 1, 1, [(2, _sc(alpha))])
    if _sc(beta):
        _merge(table, 1, n - 1, [(n, _sc(beta))])
    if _sc(gamma):
        _merge(table, n - 1, n - 1, [(n, _sc(gamma))])
    return StructureTensor(n, table, _labels(n))


def _unified_L_builder(n, params):
    return _build_type1(n, params["a"], params["b"], params["g"])


def _mk_choice_validator(name: str, combos: list[tuple], param_names: tuple[str, ...]):
    def validator(_n, params):
        got = tuple(params[p] for p in param_names)
        if got not in [tuple(_sc(x) for x in c) for c in combos]:
            pretty = ", ".join(str(c) for c in combos)
            raise InputError(f"{name} parameters must be one of: {pretty}")

    return validator


def _grid_const(combos: list[dict]):
    def grid(_n):
        return [dict(c) for c in combos]

    return grid


_register(FamilySpec(
    name="L1", kind="type1", dim_rule="n", param_names=("b",),
    param_domain="b arbitrary", parity_rule="none", min_n=5,
    builder=lambda n, p: _build_type1(n, 0, p["b"], 0),
    validator=_no_params,
    grid=_grid_const([{"b": ZERO}, {"b": _sc(-1)}, {"b": _sc(2)}, {"b": rational(1, 2)}]),
    aliases=("L1(beta)", "L1(b)"),
))

_register(FamilySpec(
    name="L2", kind="type1", dim_rule="n", param_names=("b",),
    param_domain="b in {0, 1}", parity_rule="none", min_n=5,
    builder=lambda n, p: _build_type1(n, 0, p["b"], 1),
    validator=_mk_choice_validator("L2", [(0,), (1,)], ("b",)),
    grid=_grid_const([{"b": ZERO}, {"b": ONE}]),
    aliases=("L2(beta)", "L2(b)"),
))

_register(FamilySpec(
    name="L3", kind="type1", dim_rule="n", param_names=("b",),
    param_domain="b in {-1, 0, 1}", parity_rule="none", min_n=5,
    builder=lambda n, p: _build_type1(n, 1, p["b"], 0),
    validator=_mk_choice_validator("L3", [(-1,), (0,), (1,)], ("b",)),
    grid=_grid_const([{"b": _sc(-1)}, {"b": ZERO}, {"b": ONE}]),
    aliases=("L3(beta)", "L3(b)"),
))

_register(FamilySpec(
    name="L4", kind="type1", dim_rule="n", param_names=("g",),
    param_domain="g nonzero", parity_rule="none", min_n=5,
    builder=lambda n, p: _build_type1(n, 1, 0, p["g"]),
    validator=lambda _n, p: (_ for _ in ()).throw(InputError("L4 needs g != 0")) if not p["g"] else None,
    grid=_grid_const([{"g": ONE}, {"g": _sc(-1)}, {"g": _sc(2)}, {"g": rational(1, 2)}]),
    aliases=("L4(gamma)", "L4(g)"),
))

_register(FamilySpec(
    name="L5", kind="type1", dim_rule="n", param_names=("b", "g"),
    param_domain="(b, g) in {(1,1), (2,4)}", parity_rule="none", min_n=5,
    builder=lambda n, p: _build_type1(n, 1, p["b"], p["g"]),
    validator=_mk_choice_validator("L5", [(1, 1), (2, 4)], ("b", "g")),
    grid=_grid_const([{"b": ONE, "g": ONE}, {"b": _sc(2), "g": _sc(4)}]),
    aliases=("L5(beta,gamma)",),
))

_register(FamilySpec(
    name="L(a,b,g)", kind="unified-L", dim_rule="n", param_names=("a", "b", "g"),
    param_domain="a, b, g arbitrary", parity_rule="none", min_n=5,
    builder=_unified_L_builder,
    validator=_no_params,
    grid=lambda _n: [
        {"a": _sc(a), "b": _sc(b), "g": _sc(g)}
        for a in (0, 1)
        for b in (0, 1, -1, rational(1, 2))
        for g in (0, 1, 2)
    ],
    aliases=("L",),
))


# ---------------------------------------------------------------------------
# type-II families and the unified G(a,b,g)

def _build_type2(n: int, alpha, beta, gamma) -> StructureTensor:
    alpha, beta, gamma = _sc(alpha), _sc(beta), _sc(gamma)
    table: dict = {}
    _merge(table, 1, 1, [(2, ONE)])
    for i in range(3, n):
        _merge(table, i, 1, [(i + 1, ONE)])
    _merge(table, 1, 3, [(4, -ONE)])
    if beta:
        _merge(table, 1, 3, [(2, beta)])
    for i in range(4, n):
        _merge(table, 1, i, [(i + 1, -ONE)])
    if gamma:
        _merge(table, 3, 3, [(2, gamma)])
    if alpha:
        for i in range(3, n):
            sign = ONE if i % 2 == 0 else -ONE
            _merge(table, i, n + 2 - i, [(n, sign * alpha)])
    return StructureTensor(n, table, _labels(n))


def _g_parity_validator(n, params):
    a = params["a"]
    if n % 2 == 1:
        if a != ZERO and a != ONE:
            raise InputError("G(a,b,g) needs a in {0, 1} for odd n")
    elif a != ZERO:
        raise InputError("G(a,b,g) needs a = 0 for even n")


_register(FamilySpec(
    name="G(a,b,g)", kind="unified-G", dim_rule="n", param_names=("a", "b", "g"),
    param_domain="a in {0,1} (odd n) / a = 0 (even n); b, g arbitrary",
    parity_rule="none", min_n=5,
    builder=lambda n, p: _build_type2(n, p["a"], p["b"], p["g"]),
    validator=_g_parity_validator,
    grid=lambda n: [
        {"a": _sc(a), "b": _sc(b), "g": _sc(g)}
        for a in ((0, 1) if n % 2 == 1 else (0,))
        for b in (0, 1, 2, -2)
        for g in (0, 1, 2)
    ],
    aliases=("G",),
))


def _register_type2(idx: int, alpha, beta, gamma, param_names=(), domain="no parameters",
                    combos=None, grid=None, parity="none", misprints=()):
    if param_names:
        def builder(n, p, _a=alpha, _b=beta, _g=gamma):
            b = p.get("b", _b)
            g = p.get("g", _g)
            return _build_type2(n, _a, b, g)
        validator = _mk_choice_validator(f"Ltype2_{idx}", combos, param_names)
    else:
        def builder(n, _p, _a=alpha, _b=beta, _g=gamma):
            return _build_type2(n, _a, _b, _g)
        validator = _no_params
    _register(FamilySpec(
        name=f"Ltype2_{idx}", kind="type2", dim_rule="n", param_names=param_names,
        param_domain=domain, parity_rule=parity, min_n=5,
        builder=builder, validator=validator,
        grid=grid or _grid_const([{}]),
        known_misprints=misprints,
    ))


# The type-II table prints "[e_1, e_1] = e_1" inside the fourth family; that
# contradicts nilpotency and the unified form G(0,2,1), so e_2 is used.
_register_type2(1, 0, 0, 0)
_register_type2(2, 0, 1, 0)
_register_type2(3, 0, 0, 1)
_register_type2(4, 0, 2, 1, misprints=("[e1,e1] printed as e1; corrected to e2",))
_register_type2(5, 1, 0, 0, parity="n-odd")
_register_type2(
    6, 1, None, 0, param_names=("b",), domain="b in {1, 2}",
    combos=[(1,), (2,)], grid=_grid_const([{"b": ONE}, {"b": _sc(2)}]), parity="n-odd",
)


def _t7_validator(_n, p):
    if not p["g"]:
        raise InputError("Ltype2_7 needs g != 0")


_register(FamilySpec(
    name="Ltype2_7", kind="type2", dim_rule="n", param_names=("g",),
    param_domain="g nonzero", parity_rule="n-odd", min_n=5,
    builder=lambda n, p: _build_type2(n, 1, 0, p["g"]),
    validator=_t7_validator,
    grid=_grid_const([{"g": ONE}, {"g": _sc(-1)}, {"g": _sc(2)}, {"g": rational(1, 2)}]),
))

_register_type2(
    8, 1, None, None, param_names=("b", "g"),
    domain="(b, g) in {(-2,1), (2,1), (4,2)}",
    combos=[(-2, 1), (2, 1), (4, 2)],
    grid=_grid_const([
        {"b": _sc(-2), "g": ONE}, {"b": _sc(2), "g": ONE}, {"b": _sc(4), "g": _sc(2)},
    ]),
    parity="n-odd",
)


# ---------------------------------------------------------------------------
# the quasi-filiform Lie family Lnr (basis e_0 ... e_{n-1}, stored 1-based)

def lnr_admissible(n: int, r: int) -> bool:
    return n >= 5 and r % 2 == 1 and 3 <= r <= 2 * ((n - 1) // 2) - 1


def _lnr_validator(n, params):
    r_s = params["r"]
    if not r_s.is_rational() or r_s.re.denominator != 1:
        raise InputError("Lnr needs an integer r")
    r = int(r_s.re)
    if not lnr_admissible(n, r):
        raise InputError(
            f"Lnr needs r odd with 3 <= r <= 2*floor((n-1)/2)-1; got n={n}, r={r}"
        )


def _lnr_builder(n, params):
    r = int(params["r"].re)
    table: dict = {}
    # chain [e_0, e_i] = e_{i+1} with the antisymmetric completion
    for i in range(1, n - 2):
        _merge(table, 1, i + 1, [(i + 2, ONE)])
        _merge(table, i + 1, 1, [(i + 2, -ONE)])
    # pairs [e_i, e_{r-i}] = (-1)^(i-1) e_{n-1}, antisymmetrically completed
    for i in range(1, (r - 1) // 2 + 1):
        j = r - i
        sign = ONE if (i - 1) % 2 == 0 else -ONE
        _merge(table, i + 1, j + 1, [(n, sign)])
        _merge(table, j + 1, i + 1, [(n, -sign)])
    labels = tuple(f"e{i}" for i in range(n))
    t = StructureTensor(n, table, labels)
    if not is_lie(t):
        raise CheckFailure("Lnr completion failed the Lie check; catalog bug")
    return t


_register(FamilySpec(
    name="Lnr", kind="lie-lnr", dim_rule="n", param_names=("r",),
    param_domain="r odd, 3 <= r <= 2*floor((n-1)/2)-1", parity_rule="none", min_n=5,
    builder=_lnr_builder, validator=_lnr_validator,
    grid=lambda n: [{"r": _sc(r)} for r in range(3, 2 * ((n - 1) // 2), 2)],
    aliases=("Lnr(n,r)",),
))


def lnr_derivation_table(n: int, r: int) -> list[tuple[str, Matrix]]:
    """The named derivation generators of Lnr for n > 5.

    h_k generators follow the rule: k odd whenever k <= r-3, any parity above.
    Every returned matrix is re-verified to be a derivation of the algebra.
    """
    if not lnr_admissible(n, r):
        raise InputError(f"inadmissible (n, r) = ({n}, {r})")
    if n == 5:
        raise InputError("the n = 5 algebra has a different derivation table; not covered")
    from .derivations import is_derivation  # deferred to avoid import cycle

    t = build("Lnr", n, {"r": r})
    out: list[tuple[str, Matrix]] = []

    def mat(assignments: dict[int, list[tuple[int, Scalar]]]) -> Matrix:
        # assignments: storage column index -> [(storage row index, coeff)]
        rows = [[ZERO] * n for _ in range(n)]
        for col, entries in assignments.items():
            for row, c in entries:
                rows[row - 1][col - 1] = c
        return Matrix(rows)

    t0 = {1: [(1, ONE)], n: [(n, _sc(r - 2))]}
    for i in range(2, n - 1):
        t0[i + 1] = [(i + 1, _sc(i - 1))]
    out.append(("t0", mat(t0)))
    out.append(("t1", mat({1: [(2, ONE)], r + 1: [(n, ONE)]})))
    t2 = {n: [(n, _sc(2))]}
    for i in range(1, n - 1):
        t2[i + 1] = [(i + 1, ONE)]
    out.append(("t2", mat(t2)))
    for k in range(3, n - 2):
        if k <= r - 3 and k % 2 == 0:
            continue
        hk = {i + 1: [(k + i + 1, ONE)] for i in range(1, n - 1 - k)}
        out.append((f"h{k}", mat(hk)))
    out.append(("g1", mat({1: [(r + 1, ONE)]})))
    out.append(("g2", mat({1: [(n, ONE)]})))

    for name, d in out:
        if not is_derivation(t, d):
            raise CheckFailure(f"table entry {name} is not a derivation of Lnr({n},{r})")
    return out


# ---------------------------------------------------------------------------
# solvable extensions over L(a,b,g): codim 2 (R families)

def _build_R(n: int, alpha, beta, gamma, a1, mu) -> StructureTensor:
    """Parametrized codim-2 extension table over the L-family nilradical."""
    alpha, beta, gamma, a1, mu = map(_sc, (alpha, beta, gamma, a1, mu))
    dim = n + 2
    x, y = n + 1, n + 2
    nil = _build_type1(n, alpha, beta, gamma)
    table = {k: list(v) for k, v in nil.products.items()}

    def put(i, j, entries):
        ent = [(t, _sc(c)) for t, c in entries if _sc(c)]
        if ent:
            _merge(table, i, j, ent)

    put(1, x, [(1, ONE), (n - 1, a1)])
    put(2, x, [(2, 2 + a1 * alpha), (n, a1 * (1 + beta))])
    for i in range(3, n - 1):
        put(i, x, [(i, i + a1 * alpha)])
    put(n, x, [(n, 1 + a1 * gamma - a1 * alpha * (1 + beta))])
    put(x, 1, [(1, -ONE), (n - 1, -a1)])
    put(x, n, [(n, beta + a1 * gamma)])
    put(1, y, [(n - 1, -a1)])
    put(2, y, [(2, -a1 * alpha), (n, -a1 * (1 + beta))])
    for i in range(3, n - 1):
        put(i, y, [(i, -a1 * alpha)])
    put(n - 1, y, [(n - 1, ONE)])
    put(n, y, [(n, 1 - a1 * gamma + a1 * alpha * (1 + beta))])
    put(y, 1, [(n - 1, -a1 * mu)])
    put(y, n - 1, [(n - 1, mu)])
    put(y, n, [(2, mu * alpha), (n, mu * (1 + a1 * gamma))])
    return StructureTensor(dim, table, _labels(n, ("x", "y")))


def _register_R():
    def r1_validator(_n, p):
        if p["b"] not in (ZERO, _sc(-1)):
            raise InputError("R1 needs b in {-1, 0}")

    _register(FamilySpec(
        name="R1", kind="solvable-R", dim_rule="n+2", param_names=("b",),
        param_domain="b in {-1, 0}", parity_rule="none", min_n=5,
        builder=lambda n, p: _build_R(n, 0, p["b"], 0, 0, p["b"]),
        validator=r1_validator,
        grid=_grid_const([{"b": ZERO}, {"b": _sc(-1)}]),
        aliases=("R1(beta)", "R1(b)"),
    ))
    defects = {
        3: "the printed table violates the Leibniz identity on (y, e_1, e_n): "
           "the relation from that triple forces the e_2 part of [y, e_n] to "
           "vanish, while the rest of the system forces it to -e_2; no "
           "codimension-2 extension of the (1,-1,0) nilradical exists at all "
           "(the constraint solver proves the full system infeasible)",
    }
    for idx, (a, b, g, a1, mu) in {
        2: (0, 1, 1, -1, -1),
        3: (1, -1, 0, -1, -1),
        4: (1, 0, 0, -1, 0),
    }.items():
        _register(FamilySpec(
            name=f"R{idx}", kind="solvable-R", dim_rule="n+2", param_names=(),
            param_domain="no parameters", parity_rule="none", min_n=5,
            builder=lambda n, _p, _v=(a, b, g, a1, mu): _build_R(n, *_v),
            validator=_no_params, grid=_grid_const([{}]),
            known_defect=defects.get(idx, ""),
        ))


_register_R()


# ---------------------------------------------------------------------------
# solvable extensions over G(a,b,g): codim 1 (Hc1 families)

def _build_H1(n: int, alpha, beta, gamma) -> StructureTensor:
    alpha, beta, gamma = map(_sc, (alpha, beta, gamma))
    dim = n + 1
    x = n + 1
    nil = _build_type2(n, alpha, beta, gamma)
    table = {k: list(v) for k, v in nil.products.items()}

    def put(i, j, entries):
        ent = [(t, _sc(c)) for t, c in entries if _sc(c)]
        if ent:
            _merge(table, i, j, ent)

    put(1, x, [(1, ONE)])
    put(2, x, [(2, _sc(2))])
    for i in range(3, n + 1):
        put(i, x, [(i, _sc(i - 2))])
    put(x, 1, [(1, -ONE)])
    for i in range(3, n + 1):
        put(x, i, [(i, _sc(-(i - 2)))])
    if beta:
        put(x, 4, [(2, beta)])
    return StructureTensor(dim, table, _labels(n, ("x",)))


def _register_Hc1():
    fixed = {
        1: (0, 0, 1),
        2: (1, 2, 0),
        4: (1, -2, 1),
        5: (1, 4, 2),
    }
    for idx, (a, b, g) in fixed.items():
        _register(FamilySpec(
            name=f"Hc1_{idx}", kind="solvable-H1", dim_rule="n+1", param_names=(),
            param_domain="no parameters",
            parity_rule="n-odd" if a == 1 else "none", min_n=5,
            builder=lambda n, _p, _v=(a, b, g): _build_H1(n, *_v),
            validator=_no_params, grid=_grid_const([{}]),
        ))

    def h3_validator(_n, p):
        if not p["g"]:
            raise InputError("Hc1_3 needs g != 0")

    _register(FamilySpec(
        name="Hc1_3", kind="solvable-H1", dim_rule="n+1", param_names=("g",),
        param_domain="g nonzero", parity_rule="n-odd", min_n=5,
        builder=lambda n, p: _build_H1(n, 1, 0, p["g"]),
        validator=h3_validator,
        grid=_grid_const([{"g": ONE}, {"g": _sc(-1)}, {"g": _sc(2)}, {"g": rational(1, 2)}]),
    ))


_register_Hc1()


# ---------------------------------------------------------------------------
# solvable extensions over G(a,b,g): codim 2 (Hc2 families)

def _build_H2(n: int, alpha, beta, gamma, a1) -> StructureTensor:
    alpha, beta, gamma, a1 = map(_sc, (alpha, beta, gamma, a1))
    dim = n + 2
    x, y = n + 1, n + 2
    sn = ONE if n % 2 == 0 else -ONE
    nil = _build_type2(n, alpha, beta, gamma)
    table = {k: list(v) for k, v in nil.products.items()}

    def put(i, j, entries):
        ent = [(t, _sc(c)) for t, c in entries if _sc(c)]
        if ent:
            _merge(table, i, j, ent)

    put(1, x, [(1, ONE), (3, a1)])
    put(2, x, [(2, 2 + a1 * beta)])
    put(4, x, [(4, ONE), (2, a1 * gamma)])
    for i in range(5, n):
        put(i, x, [(i, _sc(i - 3))])
    put(n, x, [(n, (n - 3) - sn * a1 * alpha)])
    put(x, 1, [(1, -ONE), (3, -a1)])
    put(x, 4, [(4, -ONE), (2, beta + a1 * gamma)])
    for i in range(5, n):
        put(x, i, [(i, _sc(-(i - 3)))])
    put(x, n, [(n, -((n - 3) - sn * a1 * alpha))])
    put(1, y, [(3, -a1)])
    put(2, y, [(2, -a1 * beta)])
    put(3, y, [(3, ONE)])
    put(4, y, [(4, ONE), (2, -a1 * gamma)])
    for i in range(5, n):
        put(i, y, [(i, ONE)])
    put(n, y, [(n, 1 + sn * a1 * alpha)])
    put(y, 1, [(3, a1)])
    put(y, 3, [(3, -ONE)])
    put(y, 4, [(4, -ONE), (2, -a1 * gamma)])
    for i in range(5, n):
        put(y, i, [(i, -ONE)])
    put(y, n, [(n, -(1 + sn * a1 * alpha))])
    return StructureTensor(dim, table, _labels(n, ("x", "y")))


def _register_Hc2():
    cases = {
        1: (0, 0, 0, 0),
        2: (0, 1, 0, -1),
        3: (0, 2, 1, -1),
        4: (1, 0, 0, -1),
        5: (1, 1, 0, -1),
        6: (1, 2, 1, -1),
    }
    misprints = {
        2: ("[e2,x] printed as 2e2, forced to e2", "[y,e1] printed as e3, forced to -e3"),
        4: ("[e1,y]/[y,e1] signs flipped in print", "e_n coefficient under x is n-4, not n-3"),
        5: ("e_n coefficient under x is n-4, not n-3",),
        6: ("e_n coefficient under x is n-4, not n-3",),
    }
    for idx, (a, b, g, a1) in cases.items():
        _register(FamilySpec(
            name=f"Hc2_{idx}", kind="solvable-H2", dim_rule="n+2", param_names=(),
            param_domain="no parameters",
            parity_rule="n-odd" if a == 1 else "none", min_n=5,
            builder=lambda n, _p, _v=(a, b, g, a1): _build_H2(n, *_v),
            validator=_no_params, grid=_grid_const([{}]),
            known_misprints=misprints.get(idx, ()),
        ))


_register_Hc2()


# ---------------------------------------------------------------------------
# the unified <-> classical name correspondence

def resolve_name(name: str, params: Params | None = None) -> tuple[str, dict[str, Scalar]]:
    """Translate between unified and classical family names.

    The classical direction enforces the classical parameter domains; the
    unified direction is total on the correspondence table.
    """
    params = {k: as_scalar(v) for k, v in (params or {}).items()}
    cname = canonical_name(name)
    if cname == "L(a,b,g)":
        return _unified_L_to_classical(params)
    if cname == "G(a,b,g)":
        return _unified_G_to_classical(params)
    if cname.startswith("L") and not cname.startswith("Lnr"):
        return _classical_to_unified(cname, params)
    raise InputError(f"{name!r} has no entry in the name correspondence")


def _unified_L_to_classical(p):
    a, b, g = p.get("a"), p.get("b"), p.get("g")
    if a is None or b is None or g is None:
        raise InputError("L(a,b,g) correspondence needs a, b and g")
    if a == ZERO and g == ZERO:
        return "L1", {"b": b}
    if a == ZERO and g == ONE:
        get_spec("L2").validator(0, {"b": b})
        return "L2", {"b": b}
    if a == ONE and g == ZERO:
        get_spec("L3").validator(0, {"b": b})
        return "L3", {"b": b}
    if a == ONE and b == ZERO and g:
        return "L4", {"g": g}
    if a == ONE and g:
        get_spec("L5").validator(0, {"b": b, "g": g})
        return "L5", {"b": b, "g": g}
    raise InputError(f"L(a,b,g) at (a,b,g)=({a},{b},{g}) has no classical counterpart")


def _unified_G_to_classical(p):
    a, b, g = p.get("a"), p.get("b"), p.get("g")
    if a is None or b is None or g is None:
        raise InputError("G(a,b,g) correspondence needs a, b and g")
    key = (a, b, g)
    fixed = {
        (ZERO, ZERO, ZERO): ("Ltype2_1", {}),
        (ZERO, ONE, ZERO): ("Ltype2_2", {}),
        (ZERO, ZERO, ONE): ("Ltype2_3", {}),
        (ZERO, _sc(2), ONE): ("Ltype2_4", {}),
        (ONE, ZERO, ZERO): ("Ltype2_5", {}),
    }
    if key in fixed:
        return fixed[key]
    if a == ONE and g == ZERO:
        get_spec("Ltype2_6").validator(0, {"b": b})
        return "Ltype2_6", {"b": b}
    if a == ONE and b == ZERO and g:
        return "Ltype2_7", {"g": g}
    if a == ONE and g:
        get_spec("Ltype2_8").validator(0, {"b": b, "g": g})
        return "Ltype2_8", {"b": b, "g": g}
    raise InputError(f"G(a,b,g) at (a,b,g)=({a},{b},{g}) has no classical counterpart")


def _classical_to_unified(cname, p):
    if cname == "L1":
        return "L(a,b,g)", {"a": ZERO, "b": p["b"], "g": ZERO}
    if cname == "L2":
        get_spec("L2").validator(0, p)
        return "L(a,b,g)", {"a": ZERO, "b": p["b"], "g": ONE}
    if cname == "L3":
        get_spec("L3").validator(0, p)
        return "L(a,b,g)", {"a": ONE, "b": p["b"], "g": ZERO}
    if cname == "L4":
        get_spec("L4").validator(0, p)
        return "L(a,b,g)", {"a": ONE, "b": ZERO, "g": p["g"]}
    if cname == "L5":
        get_spec("L5").validator(0, p)
        return "L(a,b,g)", {"a": ONE, "b": p["b"], "g": p["g"]}
    type2 = {
        "Ltype2_1": {"a": ZERO, "b": ZERO, "g": ZERO},
        "Ltype2_2": {"a": ZERO, "b": ONE, "g": ZERO},
        "Ltype2_3": {"a": ZERO, "b": ZERO, "g": ONE},
        "Ltype2_4": {"a": ZERO, "b": _sc(2), "g": ONE},
        "Ltype2_5": {"a": ONE, "b": ZERO, "g": ZERO},
    }
    if cname in type2:
        return "G(a,b,g)", type2[cname]
    if cname == "Ltype2_6":
        get_spec("Ltype2_6").validator(0, p)
        return "G(a,b,g)", {"a": ONE, "b": p["b"], "g": ZERO}
    if cname == "Ltype2_7":
        get_spec("Ltype2_7").validator(0, p)
        return "G(a,b,g)", {"a": ONE, "b": ZERO, "g": p["g"]}
    if cname == "Ltype2_8":
        get_spec("Ltype2_8").validator(0, p)
        return "G(a,b,g)", {"a": ONE, "b": p["b"], "g": p["g"]}
    raise InputError(f"{cname!r} has no entry in the name correspondence")
