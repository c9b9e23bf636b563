"""Sparse multivariate polynomials over Q(i) and a staged constraint solver.

The solver handles exactly the fragment the extension analysis needs:
repeated elimination of unknowns that occur linearly, plus explicit
branching on factored quadratic equations of the shapes u*(a*u + b) = 0 and
u*v = 0.  Anything outside that fragment is flagged, never guessed at.
Selection order is deterministic (lexicographic unknown name, then equation
index) so proof logs are reproducible bit for bit.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Iterable, Mapping, Sequence

from .errors import InputError
from .scalars import ONE, ZERO, Scalar, as_scalar

Monomial = tuple[str, ...]   # sorted variable names with multiplicity


class PolyExpr:
    """Polynomial with Scalar coefficients on monomials in named unknowns."""

    __slots__ = ("monomials",)

    def __init__(self, monomials: Mapping[Monomial, Scalar] | None = None):
        table: dict[Monomial, Scalar] = {}
        for mono, coeff in (monomials or {}).items():
            c = as_scalar(coeff)
            if c:
                table[tuple(sorted(mono))] = c
        object.__setattr__(self, "monomials", table)

    def __setattr__(self, name, value):
        raise AttributeError("PolyExpr is immutable")

    # -- constructors --------------------------------------------------------

    @classmethod
    def const(cls, c) -> "PolyExpr":
        return cls({(): as_scalar(c)})

    @classmethod
    def var(cls, name: str) -> "PolyExpr":
        return cls({(name,): ONE})

    # -- queries ---------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.monomials

    def is_constant(self) -> bool:
        return all(m == () for m in self.monomials)

    def constant_value(self) -> Scalar:
        return self.monomials.get((), ZERO)

    def degree(self) -> int:
        return max((len(m) for m in self.monomials), default=0)

    def variables(self) -> set[str]:
        out: set[str] = set()
        for m in self.monomials:
            out.update(m)
        return out

    def coefficient(self, mono: Iterable[str]) -> Scalar:
        return self.monomials.get(tuple(sorted(mono)), ZERO)

    # -- arithmetic ------------------------------------------------------------

    def __add__(self, other) -> "PolyExpr":
        other = as_poly(other)
        table = dict(self.monomials)
        for m, c in other.monomials.items():
            acc = table.get(m, ZERO) + c
            if acc:
                table[m] = acc
            else:
                table.pop(m, None)
        return PolyExpr(table)

    __radd__ = __add__

    def __neg__(self) -> "PolyExpr":
        return PolyExpr({m: -c for m, c in self.monomials.items()})

    def __sub__(self, other) -> "PolyExpr":
        return self + (-as_poly(other))

    def __rsub__(self, other):
        return as_poly(other) - self

    def __mul__(self, other) -> "PolyExpr":
        other = as_poly(other)
        table: dict[Monomial, Scalar] = {}
        for m1, c1 in self.monomials.items():
            for m2, c2 in other.monomials.items():
                m = tuple(sorted(m1 + m2))
                acc = table.get(m, ZERO) + c1 * c2
                if acc:
                    table[m] = acc
                else:
                    table.pop(m, None)
        return PolyExpr(table)

    __rmul__ = __mul__

    def scale(self, c) -> "PolyExpr":
        c = as_scalar(c)
        if not c:
            return PolyExpr()
        return PolyExpr({m: c * v for m, v in self.monomials.items()})

    def substitute(self, var: str, value: "PolyExpr") -> "PolyExpr":
        """Replace an unknown everywhere, expanding powers."""
        out = PolyExpr()
        for m, c in self.monomials.items():
            k = m.count(var)
            if not k:
                out = out + PolyExpr({m: c})
                continue
            rest = tuple(x for x in m if x != var)
            term = PolyExpr({rest: c})
            for _ in range(k):
                term = term * value
            out = out + term
        return out

    def evaluate(self, assignment: Mapping[str, object]) -> Scalar:
        total = ZERO
        for m, c in self.monomials.items():
            val = c
            for v in m:
                if v not in assignment:
                    raise InputError(f"no value for unknown {v}")
                val = val * as_scalar(assignment[v])
            total = total + val
        return total

    # -- comparison / printing ---------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, PolyExpr):
            return self.monomials == other.monomials
        if isinstance(other, (int, Scalar)):
            return self.is_constant() and self.constant_value() == as_scalar(other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.monomials.items()))

    def __str__(self):
        if not self.monomials:
            return "0"
        parts = []
        for m in sorted(self.monomials, key=lambda mm: (len(mm), mm)):
            c = self.monomials[m]
            body = "*".join(m)
            if not m:
                parts.append(str(c))
            elif c == ONE:
                parts.append(body)
            elif c == -ONE:
                parts.append(f"-{body}")
            else:
                parts.append(f"({c})*{body}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"PolyExpr({self})"


def as_poly(x) -> PolyExpr:
    if isinstance(x, PolyExpr):
        return x
    return PolyExpr.const(as_scalar(x))


P_ZERO = PolyExpr()
P_ONE = PolyExpr.const(1)


def _canonical(eq: PolyExpr) -> PolyExpr:
    """Scale so the lexicographically first monomial has coefficient 1."""
    if eq.is_zero():
        return eq
    lead = min(eq.monomials, key=lambda m: (len(m), m))
    return eq.scale(eq.monomials[lead].inverse())


@dataclass(frozen=True)
class ConstraintSystem:
    """Equations (= 0) over named unknowns, with an applied-substitution log.

    The stored equations always have all substitutions applied; the system
    is infeasible exactly when some equation reduced to a nonzero constant.
    """

    unknowns: tuple[str, ...]
    equations: tuple[PolyExpr, ...]
    substitutions: tuple[tuple[str, PolyExpr], ...] = ()
    status: str = "open"             # open | solved | infeasible | branched | fragment-limit
    log: tuple[dict, ...] = ()
    witness: PolyExpr | None = None  # the offending constant equation if infeasible

    @classmethod
    def from_equations(cls, unknowns: Sequence[str], equations: Iterable[PolyExpr]
                       ) -> "ConstraintSystem":
        eqs, seen = [], set()
        witness = None
        for eq in equations:
            eq = _canonical(eq)
            if eq.is_zero():
                continue
            if eq.is_constant():
                witness = eq
                continue
            if eq not in seen:
                seen.add(eq)
                eqs.append(eq)
        status = "infeasible" if witness is not None else "open"
        log = ({"infeasible": str(witness)},) if witness is not None else ()
        return cls(tuple(unknowns), tuple(eqs), status=status, log=log, witness=witness)

    def resolved_assignment(self) -> dict[str, PolyExpr]:
        """Substitution log with later eliminations folded into earlier ones."""
        out: dict[str, PolyExpr] = {}
        for var, expr in reversed(self.substitutions):
            folded = expr
            for v2, e2 in out.items():
                folded = folded.substitute(v2, e2)
            out[var] = folded
        return out

    def free_unknowns(self) -> tuple[str, ...]:
        assigned = {v for v, _ in self.substitutions}
        return tuple(u for u in self.unknowns if u not in assigned)


def _find_linear_candidate(equations: Sequence[PolyExpr]) -> tuple[str, int] | None:
    """Smallest (unknown, equation) pair where the unknown occurs once, linearly.

    Unknowns appearing in a higher-degree monomial of any equation are
    deferred while other candidates exist: substituting affine expressions
    into them would destroy the factored shapes the brancher recognizes.
    """
    quadratic_vars: set[str] = set()
    for eq in equations:
        for m in eq.monomials:
            if len(m) > 1:
                quadratic_vars.update(m)
    best: tuple[str, int] | None = None
    fallback: tuple[str, int] | None = None
    for idx, eq in enumerate(equations):
        counts: dict[str, int] = {}
        for m in eq.monomials:
            for v in set(m):
                counts[v] = counts.get(v, 0) + 1
        for m in eq.monomials:
            if len(m) == 1:
                v = m[0]
                if counts[v] == 1:
                    if v not in quadratic_vars:
                        if best is None or (v, idx) < best:
                            best = (v, idx)
                    elif fallback is None or (v, idx) < fallback:
                        fallback = (v, idx)
    return best if best is not None else fallback


def linear_eliminate(system: ConstraintSystem) -> ConstraintSystem:
    """Exhaustively substitute unknowns that occur linearly in some equation.

    Terminates when no equation has the c*u + p shape with u absent from the
    rest of that equation; infeasibility (a nonzero constant equation) is
    detected and recorded, never raised.
    """
    if system.status == "infeasible":
        return system
    equations = list(system.equations)
    subs = list(system.substitutions)
    log = list(system.log)
    while True:
        cand = _find_linear_candidate(equations)
        if cand is None:
            break
        var, idx = cand
        eq = equations[idx]
        c = eq.coefficient((var,))
        rest = eq - PolyExpr({(var,): c})
        value = rest.scale(-(c.inverse()))
        subs.append((var, value))
        log.append({"eliminate": var, "value": str(value)})
        new_eqs, seen = [], set()
        witness = None
        for j, other in enumerate(equations):
            if j == idx:
                continue
            ne = _canonical(other.substitute(var, value))
            if ne.is_zero():
                continue
            if ne.is_constant():
                witness = ne
                break
            if ne not in seen:
                seen.add(ne)
                new_eqs.append(ne)
        if witness is not None:
            log.append({"infeasible": str(witness)})
            return replace(system, equations=tuple(new_eqs), substitutions=tuple(subs),
                           status="infeasible", log=tuple(log), witness=witness)
        equations = new_eqs
    status = "solved" if not equations else system.status
    return replace(system, equations=tuple(equations), substitutions=tuple(subs),
                   status=status, log=tuple(log))


def _branch_shapes(eq: PolyExpr) -> list[tuple[str, PolyExpr]] | None:
    """Recognize u*(a*u+b) = 0 and u*v = 0; returns per-branch assignments."""
    monos = list(eq.monomials.items())
    if len(monos) == 1:
        m, _ = monos[0]
        if len(m) == 2:
            u, v = m
            if u == v:
                return [(u, P_ZERO)]
            return [(u, P_ZERO), (v, P_ZERO)]
        return None
    if len(monos) == 2:
        by_len = sorted(monos, key=lambda mc: len(mc[0]))
        (m1, c1), (m2, c2) = by_len
        if len(m1) == 1 and len(m2) == 2 and m2 == (m1[0], m1[0]):
            u = m1[0]
            # a*u^2 + b*u = 0  ->  u = 0 or u = -b/a
            return [(u, P_ZERO), (u, PolyExpr.const(-(c1 / c2)))]
    return None


def branch_on_factored(system: ConstraintSystem) -> list[ConstraintSystem]:
    """Split on the first recognizably factored equation; children re-eliminated.

    Returns the unchanged system (flagged fragment-limit) when no equation in
    the supported fragment is present.
    """
    if system.status in ("infeasible", "solved"):
        return [system]
    for idx, eq in enumerate(system.equations):
        shapes = _branch_shapes(eq)
        if shapes is None:
            continue
        children = []
        for var, value in shapes:
            subs = system.substitutions + ((var, value),)
            log = system.log + (
                {"branch": str(eq), "case": f"{var} = {value}"},
            )
            new_eqs = []
            witness = None
            for j, other in enumerate(system.equations):
                ne = _canonical(other.substitute(var, value))
                if ne.is_zero():
                    continue
                if ne.is_constant():
                    witness = ne
                    break
                new_eqs.append(ne)
            child = ConstraintSystem(
                unknowns=system.unknowns, equations=tuple(new_eqs),
                substitutions=subs,
                status="infeasible" if witness is not None else "open",
                log=log + (({"infeasible": str(witness)},) if witness is not None else ()),
                witness=witness,
            )
            children.append(linear_eliminate(child))
        return children
    return [replace(system, status="fragment-limit",
                    log=system.log + ({"fragment-limit": str(system.equations[0])},))]


@dataclass(frozen=True)
class SolveOutcome:
    solved: tuple[ConstraintSystem, ...]
    infeasible: tuple[ConstraintSystem, ...]
    fragment_limited: tuple[ConstraintSystem, ...]

    @property
    def complete(self) -> bool:
        return not self.fragment_limited


def solve_to_leaves(system: ConstraintSystem, max_nodes: int = 500) -> SolveOutcome:
    """Alternate elimination and branching until every leaf is classified."""
    work = [linear_eliminate(system)]
    solved, infeasible, limited = [], [], []
    nodes = 0
    while work:
        nodes += 1
        if nodes > max_nodes:
            raise InputError(f"constraint search exceeded {max_nodes} nodes")
        current = work.pop(0)
        if current.status == "infeasible":
            infeasible.append(current)
            continue
        if current.status == "solved" or not current.equations:
            solved.append(replace(current, status="solved"))
            continue
        children = branch_on_factored(current)
        if len(children) == 1 and children[0].status == "fragment-limit":
            limited.append(children[0])
            continue
        work.extend(children)
    return SolveOutcome(tuple(solved), tuple(infeasible), tuple(limited))
