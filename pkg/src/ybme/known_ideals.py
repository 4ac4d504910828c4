"""Explicit ideals attached to specific canonical matrices.

These are fixed generator lists (prime components, defining ideals and a
reference Groebner basis) that the verification campaigns compare against
what the engine computes.
"""

from __future__ import annotations

from dataclasses import dataclass

from .field import FieldCtx
from .ideal import IdealGens
from .poly import PolyRing


@dataclass(frozen=True)
class ComponentIdeals:
    """Defining ideal ``J`` together with its three prime components."""

    J: IdealGens
    p1: IdealGens
    p2: IdealGens
    p3: IdealGens


def one_zero_ideals(ctx: FieldCtx, c1: int) -> ComponentIdeals:
    """Ideals for ``diag(c1, 0)``, ``c1 != 0``."""
    R = PolyRing(ctx)
    x11, x12, x21, x22 = R.gens()
    c = ctx.elem(c1)
    J = IdealGens.of([x11 * x12, x11 * x21, x12 * x21, x11 ** 2 - c * x11], "J")
    p1 = IdealGens.of([x11, x12], "p1")
    p2 = IdealGens.of([x11, x21], "p2")
    p3 = IdealGens.of([x11 - c, x12, x21], "p3")
    return ComponentIdeals(J, p1, p2, p3)


def companion_ideals(ctx: FieldCtx, a: int, b: int) -> ComponentIdeals:
    """Ideals for the companion matrix of ``x^2 - a x + b`` with ``b != 0``.

    The components are the ones for the regime ``a^2 - 4b = -b``.
    """
    R = PolyRing(ctx)
    x11, x12, x21, x22 = R.gens()
    a, b = ctx.elem(a), ctx.elem(b)
    f1 = a * x12 * x21 - b * x11 * x21 + b * x22 + x11 * x12
    f2 = a * x21 * x22 - a * x22 - b * x21 ** 2 + x11 * x22 - x12
    f3 = a * b * x22 + a * x12 * x22 - b * b * x21 - b * x11 * x22 + x12 ** 2
    f4 = (a * a * x22 - a * b * x21 + a * x12 - a * x22 ** 2 - b * x11
          + b * x21 * x22 - x12 * x22)
    g1 = x11 + x22 - a
    g2 = x12 - b * x21 + a * x22 - b
    g3 = x21 ** 2 - (a / b) * x21 * x22 + x21 + b.inverse() * x22 ** 2 - (a / b) * x22 + 1
    h1 = x11 + 2 * x22 - a
    h2 = x12 + a * x22 - b
    h3 = x21 - (a / b) * x22 + 1
    h4 = x22 ** 2 - a * x22 + b
    return ComponentIdeals(
        IdealGens.of([f1, f2, f3, f4], "J"),
        IdealGens.of([g1, g2, g3], "p1"),
        IdealGens.of([h1, h2, h3, h4], "p2"),
        IdealGens.of([x11, x12, x21, x22], "p3"),
    )


def companion_reference_basis(ctx: FieldCtx, a: int, b: int) -> IdealGens:
    """Six-element lex basis of the companion ideal, valid for ``a, b`` invertible."""
    R = PolyRing(ctx)
    x11, x12, x21, x22 = R.gens()
    a, b = ctx.elem(a), ctx.elem(b)
    ai, bi = a.inverse(), b.inverse()
    s1 = (x11 + bi * x12 * x22 - (a / b) * x12 - x21 * x22 + a * x21
          + (a / b) * x22 ** 2 - (a * a / b) * x22)
    s2 = (x12 ** 2 + a * x12 * x22 - b * x12 - b * b * x21 ** 2 + a * b * x21 * x22
          - b * b * x21)
    s3 = (x12 * x21 - (a / b) * x12 * x22 + x12 - (2 * b / a) * x21 ** 2 * x22
          + 2 * x21 * x22 ** 2 + (b / a) * x21 * x22 - b * x21 - (2 * ai) * x22 ** 3
          + (b / a) * x22)
    s4 = (x12 * x22 ** 2 - a * x12 * x22 + b * x12 + b * b * x21 ** 2 - b * x21 * x22 ** 2
          + a * x22 ** 3 - a * a * x22 ** 2 + a * b * x22)
    s5 = (x21 ** 3 - (4 * ai) * x21 ** 2 * x22 + x21 ** 2 + (2 * bi) * x21 * x22 ** 2
          - (4 * ai) * x21 * x22 + x21 - (ai * bi) * x22 ** 3 + bi * x22 ** 2 - ai * x22)
    s6 = (x21 ** 2 * x22 ** 2 - a * x21 ** 2 * x22 - (a / b) * x21 * x22 ** 3
          + 4 * x21 * x22 ** 2 - a * x21 * x22 + bi * x22 ** 4 - (2 * a / b) * x22 ** 3
          + 4 * x22 ** 2 - a * x22)
    return IdealGens.of([s1, s2, s3, s4, s5, s6], "S")
