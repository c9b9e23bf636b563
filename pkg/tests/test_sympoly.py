import random

import pytest

from leibnizalg.scalars import ONE, ZERO, as_scalar
from leibnizalg.sympoly import (
    ConstraintSystem,
    PolyExpr,
    as_poly,
    branch_on_factored,
    linear_eliminate,
    solve_to_leaves,
)

x = PolyExpr.var("x")
y = PolyExpr.var("y")
u = PolyExpr.var("u")
v = PolyExpr.var("v")


def test_ring_arithmetic():
    assert (x + 1) * (x - 1) == x * x - as_poly(1)
    assert (x + y) * (x + y) == x * x + 2 * x * y + y * y
    assert (x - x).is_zero()
    assert str(x * x - as_poly(1)) == "-1 + x*x"


def test_substitute_and_evaluate():
    p = x * x - as_poly(1)
    assert p.substitute("x", as_poly(2)) == as_poly(3)
    assert p.evaluate({"x": 2}) == as_scalar(3)
    q = x * y + y
    assert q.substitute("y", x) == x * x + x


def test_constraint_row_evaluation():
    # the derivation-family relation gamma*a - beta*a*(gamma - alpha*(1+beta))
    # at (alpha, beta, gamma) = (1, 1, 0) and a = 1 evaluates to 2, forcing a = 0
    a = PolyExpr.var("a")
    alpha, beta, gamma = as_scalar(1), as_scalar(1), as_scalar(0)
    expr = a.scale(gamma) - a.scale(beta * (gamma - alpha * (1 + beta)))
    assert expr.evaluate({"a": 1}) == as_scalar(2)


def test_degree_never_increases_under_linear_substitution():
    rng = random.Random(2)
    names = ["p", "q", "r", "s"]
    for _ in range(50):
        mono_count = rng.randint(1, 5)
        table = {}
        for _ in range(mono_count):
            mono = tuple(sorted(rng.choice(names) for _ in range(rng.randint(0, 2))))
            table[mono] = as_scalar(rng.randint(-3, 3))
        poly = PolyExpr(table)
        linear = PolyExpr({(rng.choice(names),): as_scalar(rng.randint(1, 3)),
                           (): as_scalar(rng.randint(-2, 2))})
        target = rng.choice(names)
        assert poly.substitute(target, linear).degree() <= max(poly.degree(), 1)


def test_linear_eliminate_solves():
    sys0 = ConstraintSystem.from_equations(["x", "y"], [x + y - 1, x - y - 1])
    out = linear_eliminate(sys0)
    assert out.status == "solved"
    asg = out.resolved_assignment()
    assert asg["x"] == as_poly(1)
    assert asg["y"] == as_poly(0)


def test_linear_eliminate_detects_infeasible():
    sys0 = ConstraintSystem.from_equations(["x"], [x + 1, x - 1])
    out = linear_eliminate(sys0)
    assert out.status == "infeasible"
    assert out.witness is not None and out.witness.is_constant()


def test_branch_on_factored_quadratic():
    sys0 = ConstraintSystem.from_equations(["u"], [u * (u + 1)])
    children = branch_on_factored(sys0)
    values = sorted(str(dict(c.substitutions)["u"]) for c in children)
    assert values == ["-1", "0"]


def test_branch_on_product_of_unknowns():
    sys0 = ConstraintSystem.from_equations(["u", "v"], [u * v])
    children = branch_on_factored(sys0)
    assert len(children) == 2
    assigned = {c.substitutions[0][0] for c in children}
    assert assigned == {"u", "v"}


def test_branch_flags_unsupported_shapes():
    w = PolyExpr.var("w")
    sys0 = ConstraintSystem.from_equations(["u", "v", "w"], [u * v + w * w])
    out = branch_on_factored(linear_eliminate(sys0))
    assert len(out) == 1
    assert out[0].status == "fragment-limit"


def test_solver_leaves_and_logs():
    # u(u+1) = 0 and u + v = 1 has two solution points
    sys0 = ConstraintSystem.from_equations(["u", "v"], [u * (u + 1), u + v - 1])
    outcome = solve_to_leaves(sys0)
    assert len(outcome.solved) == 2
    points = set()
    for leaf in outcome.solved:
        asg = leaf.resolved_assignment()
        points.add((str(asg["u"]), str(asg["v"])))
    assert points == {("0", "1"), ("-1", "2")}


def _random_satisfiable_system(rng):
    names = ["a", "b", "c", "d"]
    point = {nm: as_scalar(rng.randint(-3, 3)) for nm in names}
    eqs = []
    for _ in range(rng.randint(2, 5)):
        table = {}
        for _ in range(rng.randint(1, 3)):
            mono = tuple(sorted(rng.choice(names) for _ in range(rng.randint(1, 2))))
            table[mono] = as_scalar(rng.randint(-2, 2))
        poly = PolyExpr(table)
        poly = poly - as_poly(poly.evaluate(point))
        if not poly.is_zero():
            eqs.append(poly)
    return names, eqs, point


def test_elimination_soundness_on_satisfiable_systems():
    # any assignment satisfying the reduced system plus the substitution log
    # must satisfy the input system
    rng = random.Random(31)
    for _ in range(40):
        names, eqs, point = _random_satisfiable_system(rng)
        sys0 = ConstraintSystem.from_equations(names, eqs)
        out = linear_eliminate(sys0)
        assert out.status != "infeasible"
        # the known satisfying point must satisfy every residual equation and
        # agree with each recorded substitution
        for eq in out.equations:
            assert eq.evaluate(point) == ZERO
        for var, expr in out.resolved_assignment().items():
            assert expr.evaluate(point) == point[var]


def test_confluence_of_elimination_order_on_paper_style_systems():
    # same status and same solution set under a reversed unknown ordering,
    # checked by sampling assignments of the free unknowns
    rng = random.Random(41)
    for _ in range(20):
        names, eqs, point = _random_satisfiable_system(rng)
        sys_fwd = ConstraintSystem.from_equations(names, eqs)
        sys_rev = ConstraintSystem.from_equations(list(reversed(names)), list(reversed(eqs)))
        out_fwd = linear_eliminate(sys_fwd)
        out_rev = linear_eliminate(sys_rev)
        assert (out_fwd.status == "infeasible") == (out_rev.status == "infeasible")
        if out_fwd.status != "infeasible":
            for eq in out_fwd.equations:
                assert eq.evaluate(point) == ZERO
            for eq in out_rev.equations:
                assert eq.evaluate(point) == ZERO
