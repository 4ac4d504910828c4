"""Sparse multivariate polynomials over GF(q) in lex order.

Monomials are exponent tuples; index 0 is the largest variable, so plain
tuple comparison is the lex order.  The four matrix variables are ordered
``x11 > x12 > x21 > x22``; the auxiliary elimination variable ``t`` is
prepended when present.
"""

from __future__ import annotations

import re

from .field import FieldCtx, FqElem

MATRIX_VARS = ("x11", "x12", "x21", "x22")
ELIM_VARS = ("t",) + MATRIX_VARS


def var_names(nvars: int) -> tuple[str, ...]:
    if nvars == 4:
        return MATRIX_VARS
    if nvars == 5:
        return ELIM_VARS
    return tuple(f"y{i}" for i in range(nvars))


def divides(m: tuple, n: tuple) -> bool:
    return all(a <= b for a, b in zip(m, n))


def mono_lcm(m: tuple, n: tuple) -> tuple:
    return tuple(max(a, b) for a, b in zip(m, n))


def mono_div(n: tuple, m: tuple) -> tuple:
    return tuple(b - a for a, b in zip(m, n))


def mono_mul(m: tuple, n: tuple) -> tuple:
    return tuple(a + b for a, b in zip(m, n))


class MPoly:
    """Polynomial with integer-encoded coefficients; treat instances as immutable."""

    __slots__ = ("ctx", "nvars", "terms", "_hash")

    def __init__(self, ctx: FieldCtx, nvars: int, terms: dict | None = None):
        self.ctx = ctx
        self.nvars = nvars
        self.terms = {m: c for m, c in (terms or {}).items() if c}
        self._hash = None

    # construction helpers
    @classmethod
    def const(cls, ctx: FieldCtx, nvars: int, c) -> MPoly:
        return cls(ctx, nvars, {(0,) * nvars: _coerce(ctx, c)})

    @classmethod
    def var(cls, ctx: FieldCtx, nvars: int, i: int) -> MPoly:
        m = [0] * nvars
        m[i] = 1
        return cls(ctx, nvars, {tuple(m): 1})

    def _lift(self, other) -> MPoly:
        if isinstance(other, MPoly):
            if other.ctx != self.ctx or other.nvars != self.nvars:
                raise ValueError("polynomials from different rings")
            return other
        return MPoly.const(self.ctx, self.nvars, other)

    # inspection
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def lm(self) -> tuple:
        return max(self.terms)

    @property
    def lc(self) -> int:
        return self.terms[max(self.terms)]

    def total_degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def sorted_terms(self) -> list[tuple[tuple, int]]:
        return sorted(self.terms.items(), reverse=True)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.ctx == other.ctx and self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    # arithmetic
    def __add__(self, other) -> MPoly:
        other = self._lift(other)
        add = self.ctx.add
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = add(out.get(m, 0), c)
        return MPoly(self.ctx, self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> MPoly:
        neg = self.ctx.neg
        return MPoly(self.ctx, self.nvars, {m: neg(c) for m, c in self.terms.items()})

    def __sub__(self, other) -> MPoly:
        return self + (-self._lift(other))

    def __rsub__(self, other) -> MPoly:
        return self._lift(other) - self

    def __mul__(self, other) -> MPoly:
        if not isinstance(other, MPoly):
            return self.scale(_coerce(self.ctx, other))
        other = self._lift(other)
        mul, add = self.ctx.mul, self.ctx.add
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                out[m] = add(out.get(m, 0), mul(c1, c2))
        return MPoly(self.ctx, self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> MPoly:
        out = MPoly.const(self.ctx, self.nvars, 1)
        for _ in range(n):
            out = out * self
        return out

    def scale(self, c: int) -> MPoly:
        mul = self.ctx.mul
        return MPoly(self.ctx, self.nvars, {m: mul(c, v) for m, v in self.terms.items()})

    def mul_term(self, mono: tuple, c: int) -> MPoly:
        mul = self.ctx.mul
        return MPoly(self.ctx, self.nvars, {mono_mul(m, mono): mul(c, v) for m, v in self.terms.items()})

    def monic(self) -> MPoly:
        if not self.terms:
            return self
        return self.scale(self.ctx.inv(self.lc))

    # evaluation and variable bookkeeping
    def evaluate(self, point) -> int:
        ctx = self.ctx
        mul, add, power = ctx.mul, ctx.add, ctx.power
        acc = 0
        for m, c in self.terms.items():
            v = c
            for x, e in zip(point, m):
                if e:
                    v = mul(v, power(x, e))
            acc = add(acc, v)
        return acc

    def with_leading_var(self) -> MPoly:
        """Embed into the ring with one extra, largest variable."""
        return MPoly(self.ctx, self.nvars + 1, {(0,) + m: c for m, c in self.terms.items()})

    def drop_leading_var(self) -> MPoly:
        if any(m[0] for m in self.terms):
            raise ValueError("polynomial involves the leading variable")
        return MPoly(self.ctx, self.nvars - 1, {m[1:]: c for m, c in self.terms.items()})

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"MPoly({format_poly(self)!r} over {self.ctx})"


def _coerce(ctx: FieldCtx, c) -> int:
    """Field value of a constant: FqElem as-is, Python int via ZZ -> GF(q)."""
    if isinstance(c, FqElem):
        return ctx.elem(c).value
    if isinstance(c, int):
        return ctx.from_int(c)
    raise TypeError(f"cannot use {c!r} as a coefficient")


class PolyRing:
    """Convenience handle exposing the variables of GF(q)[vars] as attributes."""

    def __init__(self, ctx: FieldCtx, nvars: int = 4):
        self.ctx = ctx
        self.nvars = nvars
        self.names = var_names(nvars)
        for i, name in enumerate(self.names):
            setattr(self, name, MPoly.var(ctx, nvars, i))

    def gens(self) -> list[MPoly]:
        return [getattr(self, n) for n in self.names]

    def const(self, c) -> MPoly:
        return MPoly.const(self.ctx, self.nvars, c)

    def zero(self) -> MPoly:
        return MPoly(self.ctx, self.nvars)


def format_poly(f: MPoly) -> str:
    if not f.terms:
        return "0"
    names = var_names(f.nvars)
    parts = []
    for m, c in f.sorted_terms():
        factors = [n if e == 1 else f"{n}^{e}" for n, e in zip(names, m) if e]
        if not factors:
            parts.append(str(c))
        elif c == 1:
            parts.append("*".join(factors))
        else:
            parts.append("*".join([str(c)] + factors))
    return " + ".join(parts)


_TERM_SPLIT = re.compile(r"\s*([+-])\s*")


def parse_poly(text: str, ctx: FieldCtx, nvars: int = 4) -> MPoly:
    """Parse text like ``"3*x11^2*x22 + 4 - x12"``.

    Numeric coefficients are element encodings; a leading ``-`` negates the term.
    """
    names = var_names(nvars)
    index = {n: i for i, n in enumerate(names)}
    s = text.strip()
    if not s:
        raise ValueError("empty polynomial")
    if s[0] not in "+-":
        s = "+" + s
    pieces = _TERM_SPLIT.split(s)[1:]
    out = MPoly(ctx, nvars)
    for sign, body in zip(pieces[0::2], pieces[1::2]):
        if not body:
            raise ValueError(f"dangling sign in {text!r}")
        coeff, mono = 1, [0] * nvars
        for factor in body.split("*"):
            factor = factor.strip()
            if factor.isdigit():
                v = int(factor)
                if v >= ctx.q:
                    raise ValueError(f"coefficient {factor!r} is not an element of {ctx}")
                coeff = ctx.mul(coeff, v)
                continue
            name, _, exp = factor.partition("^")
            if name not in index:
                raise ValueError(f"unknown variable {name!r}")
            if exp and not exp.isdigit():
                raise ValueError(f"bad exponent in {factor!r}")
            mono[index[name]] += int(exp) if exp else 1
        if sign == "-":
            coeff = ctx.neg(coeff)
        out = out + MPoly(ctx, nvars, {tuple(mono): coeff})
    return out
