"""Solution sets of ``XAX = AXA`` for 2x2 matrices over GF(q).

Closed-form constructors cover the distinct-diagonal, Jordan-block and
(odd characteristic, ``disc = -b``) companion classes; every other class is
answered by the brute-force oracle.  :func:`solve` reduces an arbitrary
matrix to its canonical form and conjugates the canonical solutions back.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from . import oracle
from .field import FieldCtx
from .matrix import (COMPANION, DISTINCT_DIAG, JORDAN, SCALAR, Mat2,
                     discriminant, quadratic_irreducible, rational_canonical_form)

ISOLATED = "isolated"
FAMILY_1D = "family_1d"
FAMILY_2D = "family_2d"
ORACLE_BULK = "oracle_bulk"

CLOSED_FORM = "closed_form"
ORACLE = "oracle"
CONJECTURAL = "conjectural"


class SolverError(ValueError):
    pass


def residual(A: Mat2, X: Mat2) -> Mat2:
    """``XAX - AXA``."""
    return X * A * X - A * X * A


def is_solution(A: Mat2, X: Mat2) -> bool:
    return residual(A, X).is_zero()


@dataclass(frozen=True)
class Component:
    label: str
    kind: str
    members: tuple[Mat2, ...]
    dimension: int | None

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "kind": self.kind,
            "dimension": self.dimension,
            "members": [m.to_json() for m in self.members],
        }


@dataclass(frozen=True)
class SolutionSet:
    field: FieldCtx
    matrixA: Mat2
    components: tuple[Component, ...]
    provenance: str
    points: tuple[Mat2, ...] = field(init=False)

    def __post_init__(self):
        pts = sorted({m for c in self.components for m in c.members})
        object.__setattr__(self, "points", tuple(pts))

    def __len__(self) -> int:
        return len(self.points)

    @property
    def cardinality(self) -> int:
        return len(self.points)

    def point_set(self) -> frozenset[Mat2]:
        return frozenset(self.points)

    def component(self, label: str) -> Component:
        for c in self.components:
            if c.label == label:
                return c
        raise KeyError(label)

    def verify(self) -> bool:
        """Recheck every point against the defining equation."""
        return all(is_solution(self.matrixA, X) for X in self.points)

    def to_json(self) -> dict:
        return {
            "field": self.field.spec,
            "A": self.matrixA.to_json(),
            "cardinality": self.cardinality,
            "provenance": self.provenance,
            "components": [c.to_json() for c in self.components],
            "points": [m.to_json() for m in self.points],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def _iso(label: str, X: Mat2) -> Component:
    return Component(label, ISOLATED, (X,), 0)


def brute_force_solutions(A: Mat2, *, max_q: int = oracle.DEFAULT_MAX_Q,
                          workers: int = 1, backend: str | None = None) -> SolutionSet:
    pts = oracle.solutions(A, max_q=max_q, workers=workers, backend=backend)
    return SolutionSet(A.ctx, A, (Component("oracle", ORACLE_BULK, tuple(pts), None),), ORACLE)


def solve_A1_one_zero(ctx: FieldCtx, c1: int) -> SolutionSet:
    """Solutions for ``diag(c1, 0)`` with ``c1 != 0``: three coordinate families."""
    if c1 == 0:
        raise SolverError("c1 must be nonzero")
    E = list(ctx.elements())
    d1 = tuple(Mat2(ctx, (0, 0, a, b)) for a in E for b in E)
    d2 = tuple(Mat2(ctx, (0, a, 0, b)) for a in E for b in E)
    d3 = tuple(Mat2(ctx, (c1, 0, 0, a)) for a in E)
    comps = (Component("D1", FAMILY_2D, d1, 2), Component("D2", FAMILY_2D, d2, 2),
             Component("D3", FAMILY_1D, d3, 1))
    return SolutionSet(ctx, Mat2.diag(ctx, c1, 0), comps, CLOSED_FORM)


def delta_invariant(ctx: FieldCtx, c1: int, c2: int) -> int:
    """``c1^2 - c1 c2 + c2^2``."""
    return ctx.add(ctx.sub(ctx.mul(c1, c1), ctx.mul(c1, c2)), ctx.mul(c2, c2))


def solve_A1_nonzero(ctx: FieldCtx, c1: int, c2: int) -> SolutionSet:
    """Solutions for ``diag(c1, c2)`` with distinct nonzero ``c1, c2``."""
    if c1 == 0 or c2 == 0 or c1 == c2:
        raise SolverError("c1, c2 must be distinct and nonzero")
    E = list(ctx.elements())
    A = Mat2.diag(ctx, c1, c2)
    delta = delta_invariant(ctx, c1, c2)
    iso = [_iso("zero", Mat2.zero(ctx)), _iso("c1_corner", Mat2.diag(ctx, c1, 0)),
           _iso("c2_corner", Mat2.diag(ctx, 0, c2))]
    if delta == 0:
        e1 = tuple(Mat2(ctx, (c1, 0, a, c2)) for a in E)
        e2 = tuple(Mat2(ctx, (c1, a, 0, c2)) for a in E)
        comps = (*iso, Component("E1", FAMILY_1D, e1, 1), Component("E2", FAMILY_1D, e2, 1))
        return SolutionSet(ctx, A, comps, CLOSED_FORM)
    diff = ctx.sub(c1, c2)
    x11 = ctx.div(ctx.mul(c2, c2), ctx.neg(diff))
    x22 = ctx.div(ctx.mul(c1, c1), diff)
    # x12 * x21 = -c1 c2 delta / (c1 - c2)^2
    prod = ctx.neg(ctx.div(ctx.mul(ctx.mul(c1, c2), delta), ctx.mul(diff, diff)))
    e3 = tuple(Mat2(ctx, (x11, a, ctx.div(prod, a), x22)) for a in ctx.nonzero())
    comps = (*iso, _iso("diagonal", A), Component("E3", FAMILY_1D, e3, 1))
    return SolutionSet(ctx, A, comps, CLOSED_FORM)


_SWAP = (0, 1, 1, 0)


def solve_A1(ctx: FieldCtx, c1: int, c2: int) -> SolutionSet:
    """Any distinct-diagonal ``diag(c1, c2)``, including ``c1 == 0``."""
    if c1 == c2:
        raise SolverError("diagonal entries must be distinct")
    if c2 == 0:
        return solve_A1_one_zero(ctx, c1)
    if c1 == 0:
        # diag(0, c) = S diag(c, 0) S with S the coordinate swap
        S = Mat2(ctx, _SWAP)
        base = solve_A1_one_zero(ctx, c2)
        comps = tuple(Component(c.label, c.kind, tuple(S * m * S for m in c.members), c.dimension)
                      for c in base.components)
        return SolutionSet(ctx, Mat2.diag(ctx, 0, c2), comps, CLOSED_FORM)
    return solve_A1_nonzero(ctx, c1, c2)


def solve_A2(ctx: FieldCtx, c: int) -> SolutionSet:
    """Solutions for the Jordan block ``[[c, 1], [0, c]]``."""
    E = list(ctx.elements())
    A = Mat2.jordan(ctx, c)
    if c == 0:
        v1 = tuple(Mat2(ctx, (0, a, 0, b)) for a in E for b in E)
        v2 = tuple(Mat2(ctx, (a, b, 0, 0)) for a in E for b in E)
        comps = (Component("V1", FAMILY_2D, v1, 2), Component("V2", FAMILY_2D, v2, 2))
        return SolutionSet(ctx, A, comps, CLOSED_FORM)
    ci = ctx.inv(c)
    two_c = ctx.add(c, c)
    fam = []
    for a in E:
        # x12 = c^-2 a^2 - 2 c^-1 a + 1
        t = ctx.mul(ci, a)
        x12 = ctx.add(ctx.sub(ctx.mul(t, t), ctx.add(t, t)), 1)
        fam.append(Mat2(ctx, (ctx.sub(two_c, a), x12, ctx.neg(ctx.mul(c, c)), a)))
    comps = (_iso("zero", Mat2.zero(ctx)), _iso("A", A), Component("E", FAMILY_1D, tuple(fam), 1))
    return SolutionSet(ctx, A, comps, CLOSED_FORM)


def companion_regime(ctx: FieldCtx, a: int, b: int) -> str:
    """'isolated' when disc = -b (odd q), 'generic' when disc != -b (odd q), 'even' otherwise."""
    if ctx.p == 2:
        return "even"
    return "isolated" if discriminant(ctx, a, b) == ctx.neg(b) else "generic"


def solve_A3(ctx: FieldCtx, a: int, b: int, *, max_q: int = oracle.DEFAULT_MAX_Q,
             backend: str | None = None) -> SolutionSet:
    """Solutions for the companion matrix of an irreducible ``x^2 - a x + b``."""
    if not quadratic_irreducible(ctx, a, b):
        raise SolverError(f"x^2 - {a}x + {b} is reducible over {ctx}")
    A = Mat2.companion(ctx, a, b)
    regime = companion_regime(ctx, a, b)
    if regime == "isolated":
        return SolutionSet(ctx, A, (_iso("zero", Mat2.zero(ctx)), _iso("A", A)), CLOSED_FORM)
    found = brute_force_solutions(A, max_q=max_q, backend=backend)
    return SolutionSet(ctx, A, found.components, CONJECTURAL if regime == "generic" else ORACLE)


def solve_canonical(ctx: FieldCtx, tag: str, params, *, max_q: int = oracle.DEFAULT_MAX_Q,
                    backend: str | None = None) -> SolutionSet:
    if tag == DISTINCT_DIAG:
        return solve_A1(ctx, *params)
    if tag == JORDAN:
        return solve_A2(ctx, *params)
    if tag == COMPANION:
        return solve_A3(ctx, *params, max_q=max_q, backend=backend)
    if tag == SCALAR:
        return brute_force_solutions(Mat2.scalar(ctx, *params), max_q=max_q, backend=backend)
    raise ValueError(f"unknown canonical tag {tag!r}")


def transport(sol: SolutionSet, P: Mat2, B: Mat2) -> SolutionSet:
    """Map solutions ``Y`` of ``C = P^-1 B P`` to solutions ``P Y P^-1`` of ``B``."""
    Pi = P.inverse()
    comps = tuple(Component(c.label, c.kind, tuple(P * Y * Pi for Y in c.members), c.dimension)
                  for c in sol.components)
    return SolutionSet(sol.field, B, comps, sol.provenance)


def solve(B: Mat2, *, max_q: int = oracle.DEFAULT_MAX_Q, backend: str | None = None) -> SolutionSet:
    """All solutions of ``XBX = BXB`` via the canonical form of ``B``."""
    cf = rational_canonical_form(B)
    base = solve_canonical(B.ctx, cf.tag, cf.params, max_q=max_q, backend=backend)
    if cf.P.entries == (1, 0, 0, 1):
        return SolutionSet(base.field, B, base.components, base.provenance)
    return transport(base, cf.P, B)


@dataclass(frozen=True)
class CardinalityPrediction:
    value: int | None
    source: str
    delta: int | None = None
    discriminant: int | None = None

    def to_json(self) -> dict:
        return {"value": self.value, "source": self.source,
                "deltaInvariant": self.delta, "discriminant": self.discriminant}


def predict_cardinality(B: Mat2) -> CardinalityPrediction:
    ctx = B.ctx
    q = ctx.q
    cf = rational_canonical_form(B)
    if cf.tag == DISTINCT_DIAG:
        c1, c2 = cf.params
        if c1 == 0 or c2 == 0:
            return CardinalityPrediction(2 * q * q, "Thm1_case1")
        delta = delta_invariant(ctx, c1, c2)
        if delta == 0:
            return CardinalityPrediction(2 * q + 2, "Thm1_case2_delta0", delta=delta)
        return CardinalityPrediction(q + 3, "Thm1_case2_deltaNonzero", delta=delta)
    if cf.tag == JORDAN:
        if cf.params[0] == 0:
            return CardinalityPrediction(2 * q * q - q, "Thm2_c0")
        return CardinalityPrediction(q + 2, "Thm2_cNonzero")
    if cf.tag == COMPANION:
        a, b = cf.params
        disc = discriminant(ctx, a, b)
        regime = companion_regime(ctx, a, b)
        if regime == "isolated":
            return CardinalityPrediction(2, "Thm3", discriminant=disc)
        if regime == "generic":
            return CardinalityPrediction(q + 3, "Conjecture6_5", discriminant=disc)
        return CardinalityPrediction(None, "none", discriminant=disc)
    return CardinalityPrediction(None, "none")
