"""2x2 matrices over GF(q), canonical forms under similarity, and GL2 scans."""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import total_ordering

from .field import FieldCtx, FieldError

DEFAULT_MAX_Q_GL2 = 32


class MatrixError(ValueError):
    pass


@total_ordering
@dataclass(frozen=True)
class Mat2:
    """Row-major 2x2 matrix ``[[x11, x12], [x21, x22]]`` of integer-encoded entries."""

    ctx: FieldCtx
    entries: tuple[int, int, int, int]

    def __post_init__(self):
        if len(self.entries) != 4:
            raise MatrixError("a 2x2 matrix needs exactly four entries")
        q = self.ctx.q
        for e in self.entries:
            if not 0 <= e < q:
                raise MatrixError(f"entry {e} is not a valid element of {self.ctx}")

    @classmethod
    def of(cls, ctx: FieldCtx, rows) -> Mat2:
        (a, b), (c, d) = rows
        return cls(ctx, (a, b, c, d))

    @classmethod
    def zero(cls, ctx: FieldCtx) -> Mat2:
        return cls(ctx, (0, 0, 0, 0))

    @classmethod
    def identity(cls, ctx: FieldCtx) -> Mat2:
        return cls(ctx, (1, 0, 0, 1))

    @classmethod
    def scalar(cls, ctx: FieldCtx, c: int) -> Mat2:
        return cls(ctx, (c, 0, 0, c))

    @classmethod
    def diag(cls, ctx: FieldCtx, c1: int, c2: int) -> Mat2:
        return cls(ctx, (c1, 0, 0, c2))

    @classmethod
    def jordan(cls, ctx: FieldCtx, c: int) -> Mat2:
        return cls(ctx, (c, 1, 0, c))

    @classmethod
    def companion(cls, ctx: FieldCtx, a: int, b: int) -> Mat2:
        """Companion matrix ``[[0, -b], [1, a]]`` of ``x^2 - a x + b``."""
        return cls(ctx, (0, ctx.neg(b), 1, a))

    @classmethod
    def from_index(cls, ctx: FieldCtx, idx: int) -> Mat2:
        q = ctx.q
        idx, x22 = divmod(idx, q)
        idx, x21 = divmod(idx, q)
        x11, x12 = divmod(idx, q)
        return cls(ctx, (x11, x12, x21, x22))

    @property
    def index(self) -> int:
        q = self.ctx.q
        x11, x12, x21, x22 = self.entries
        return ((x11 * q + x12) * q + x21) * q + x22

    @property
    def rows(self) -> list[list[int]]:
        a, b, c, d = self.entries
        return [[a, b], [c, d]]

    def _check(self, other: Mat2) -> None:
        if other.ctx != self.ctx:
            raise FieldError(f"matrices over different fields: {self.ctx} and {other.ctx}")

    def __lt__(self, other: Mat2) -> bool:
        return self.entries < other.entries

    def __add__(self, other: Mat2) -> Mat2:
        self._check(other)
        f = self.ctx.add
        return Mat2(self.ctx, tuple(f(x, y) for x, y in zip(self.entries, other.entries)))

    def __sub__(self, other: Mat2) -> Mat2:
        self._check(other)
        f = self.ctx.sub
        return Mat2(self.ctx, tuple(f(x, y) for x, y in zip(self.entries, other.entries)))

    def __neg__(self) -> Mat2:
        return Mat2(self.ctx, tuple(self.ctx.neg(x) for x in self.entries))

    def __mul__(self, other: Mat2) -> Mat2:
        self._check(other)
        ctx = self.ctx
        m, a = ctx._mul, ctx._add
        a11, a12, a21, a22 = self.entries
        b11, b12, b21, b22 = other.entries
        return Mat2(ctx, (
            a[m[a11][b11]][m[a12][b21]],
            a[m[a11][b12]][m[a12][b22]],
            a[m[a21][b11]][m[a22][b21]],
            a[m[a21][b12]][m[a22][b22]],
        ))

    def scale(self, c: int) -> Mat2:
        return Mat2(self.ctx, tuple(self.ctx.mul(c, x) for x in self.entries))

    def det(self) -> int:
        ctx = self.ctx
        x11, x12, x21, x22 = self.entries
        return ctx.sub(ctx.mul(x11, x22), ctx.mul(x12, x21))

    def trace(self) -> int:
        return self.ctx.add(self.entries[0], self.entries[3])

    def is_zero(self) -> bool:
        return self.entries == (0, 0, 0, 0)

    def is_scalar(self) -> bool:
        x11, x12, x21, x22 = self.entries
        return x12 == 0 and x21 == 0 and x11 == x22

    def is_invertible(self) -> bool:
        return self.det() != 0

    def inverse(self) -> Mat2:
        ctx = self.ctx
        d = self.det()
        if d == 0:
            raise ZeroDivisionError("singular matrix")
        di = ctx.inv(d)
        x11, x12, x21, x22 = self.entries
        return Mat2(ctx, (ctx.mul(di, x22), ctx.mul(di, ctx.neg(x12)),
                          ctx.mul(di, ctx.neg(x21)), ctx.mul(di, x11)))

    def to_json(self) -> list[list[int]]:
        return self.rows

    def __str__(self) -> str:
        a, b, c, d = self.entries
        return f"[[{a},{b}],[{c},{d}]]"

    def __repr__(self) -> str:
        return f"Mat2({self}, {self.ctx})"


_MATRIX_RE = re.compile(r"^\s*\[\s*\[(.*?)\]\s*,\s*\[(.*?)\]\s*\]\s*$")


def parse_matrix(text: str, ctx: FieldCtx) -> Mat2:
    """Parse ``"[[a,b],[c,d]]"`` with integer-encoded entries."""
    m = _MATRIX_RE.match(text)
    if not m:
        raise MatrixError(f"cannot parse matrix literal {text!r}")
    tokens = [t.strip() for t in m.group(1).split(",")] + [t.strip() for t in m.group(2).split(",")]
    if len(tokens) != 4:
        raise MatrixError(f"expected four entries in {text!r}")
    entries = []
    for tok in tokens:
        try:
            v = int(tok)
        except ValueError:
            raise MatrixError(f"matrix entry {tok!r} is not an integer") from None
        if not 0 <= v < ctx.q:
            raise MatrixError(f"matrix entry {tok!r} is not an element of {ctx}")
        entries.append(v)
    return Mat2(ctx, tuple(entries))


def mat_ops(ctx: FieldCtx, op: str, lhs, rhs=None) -> Mat2:
    """Named matrix operation; ``scalar_mul`` takes a field element as ``lhs``."""
    if op == "add":
        return lhs + rhs
    if op == "sub":
        return lhs - rhs
    if op == "mul":
        return lhs * rhs
    if op == "neg":
        return -lhs
    if op == "scalar_mul":
        return rhs.scale(ctx.elem(lhs).value)
    raise ValueError(f"unknown matrix operation {op!r}")


def det_trace(B: Mat2) -> tuple[int, int]:
    return B.det(), B.trace()


# -- univariate polynomials ----------------------------------------------------

@dataclass(frozen=True)
class Poly1:
    """Univariate polynomial, coefficients low degree first, no trailing zeros."""

    ctx: FieldCtx
    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = list(self.coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x: int) -> int:
        ctx = self.ctx
        acc = 0
        for c in reversed(self.coeffs):
            acc = ctx.add(ctx.mul(acc, x), c)
        return acc

    def eval_matrix(self, B: Mat2) -> Mat2:
        acc = Mat2.zero(B.ctx)
        for c in reversed(self.coeffs):
            acc = acc * B + Mat2.scalar(B.ctx, c)
        return acc

    def roots(self) -> list[int]:
        return [x for x in self.ctx.elements() if self(x) == 0]

    def __str__(self) -> str:
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            else:
                terms.append(f"{c}*{mono}")
        return " + ".join(terms) or "0"


def char_poly(B: Mat2) -> Poly1:
    """``x^2 - tr(B) x + det(B)``."""
    ctx = B.ctx
    return Poly1(ctx, (B.det(), ctx.neg(B.trace()), 1))


def min_poly(B: Mat2) -> Poly1:
    ctx = B.ctx
    if B.is_scalar():
        return Poly1(ctx, (ctx.neg(B.entries[0]), 1))
    return char_poly(B)


# -- canonical forms -------------------------------------------------------------

DISTINCT_DIAG = "A1_DistinctDiag"
JORDAN = "A2_Jordan"
COMPANION = "A3_Companion"
SCALAR = "A4_Scalar"


@dataclass(frozen=True)
class CanonicalForm:
    """Similarity class representative with ``P^-1 B P == matrix``.

    ``params`` holds ``(c1, c2)``, ``(c,)``, ``(a, b)`` or ``(c,)`` for the
    four tags respectively.
    """

    tag: str
    params: tuple[int, ...]
    P: Mat2
    root_count: int

    @property
    def ctx(self) -> FieldCtx:
        return self.P.ctx

    @property
    def matrix(self) -> Mat2:
        return canonical_matrix(self.ctx, self.tag, self.params)

    def to_json(self) -> dict:
        names = {DISTINCT_DIAG: ("c1", "c2"), JORDAN: ("c",), COMPANION: ("a", "b"), SCALAR: ("c",)}
        return {
            "tag": self.tag,
            "params": dict(zip(names[self.tag], self.params)),
            "matrix": self.matrix.to_json(),
            "P": self.P.to_json(),
            "root_count": self.root_count,
        }


def canonical_matrix(ctx: FieldCtx, tag: str, params) -> Mat2:
    if tag == DISTINCT_DIAG:
        return Mat2.diag(ctx, *params)
    if tag == JORDAN:
        return Mat2.jordan(ctx, *params)
    if tag == COMPANION:
        return Mat2.companion(ctx, *params)
    if tag == SCALAR:
        return Mat2.scalar(ctx, *params)
    raise ValueError(f"unknown canonical tag {tag!r}")


def _normalize(ctx: FieldCtx, v: tuple[int, int]) -> tuple[int, int]:
    lead = v[0] if v[0] != 0 else v[1]
    li = ctx.inv(lead)
    return ctx.mul(li, v[0]), ctx.mul(li, v[1])


def _kernel_vector(M: Mat2) -> tuple[int, int]:
    """Nonzero vector killed by a rank-1 matrix."""
    ctx = M.ctx
    m11, m12, m21, m22 = M.entries
    if m11 or m12:
        return ctx.neg(m12), m11
    return ctx.neg(m22), m21


def _from_columns(ctx: FieldCtx, u, v) -> Mat2:
    return Mat2(ctx, (u[0], v[0], u[1], v[1]))


def _apply(B: Mat2, v) -> tuple[int, int]:
    ctx = B.ctx
    m, a = ctx._mul, ctx._add
    b11, b12, b21, b22 = B.entries
    return a[m[b11][v[0]]][m[b12][v[1]]], a[m[b21][v[0]]][m[b22][v[1]]]


def rational_canonical_form(B: Mat2) -> CanonicalForm:
    """Classify ``B`` into one of the four similarity types of GF(q) 2x2 matrices."""
    ctx = B.ctx
    if B.is_scalar():
        return CanonicalForm(SCALAR, (B.entries[0],), Mat2.identity(ctx), 1)
    roots = char_poly(B).roots()
    if len(roots) == 2:
        c1, c2 = sorted(roots)
        u = _normalize(ctx, _kernel_vector(B - Mat2.scalar(ctx, c1)))
        v = _normalize(ctx, _kernel_vector(B - Mat2.scalar(ctx, c2)))
        return CanonicalForm(DISTINCT_DIAG, (c1, c2), _from_columns(ctx, u, v), 2)
    if len(roots) == 1:
        c = roots[0]
        N = B - Mat2.scalar(ctx, c)
        # chain (N e, e) for the first standard basis vector e outside ker N
        e = (1, 0) if _apply(N, (1, 0)) != (0, 0) else (0, 1)
        return CanonicalForm(JORDAN, (c,), _from_columns(ctx, _apply(N, e), e), 1)
    # irreducible characteristic polynomial: e1 is a cyclic vector
    e = (1, 0)
    return CanonicalForm(COMPANION, (B.trace(), B.det()), _from_columns(ctx, e, _apply(B, e)), 0)


def conjugate(P: Mat2, X: Mat2) -> Mat2:
    """``P^-1 X P``."""
    return P.inverse() * X * P


def quadratic_irreducible(ctx: FieldCtx, a: int, b: int) -> bool:
    """Whether ``x^2 - a x + b`` has no root in GF(q)."""
    return not Poly1(ctx, (b, ctx.neg(a), 1)).roots()


def discriminant(ctx: FieldCtx, a: int, b: int) -> int:
    return ctx.sub(ctx.mul(a, a), ctx.mul(ctx.from_int(4), b))


def _check_gl2_bound(ctx: FieldCtx, max_q: int) -> None:
    if ctx.q > max_q:
        raise MatrixError(f"q = {ctx.q} exceeds the GL2 enumeration bound {max_q}")


def all_matrices(ctx: FieldCtx):
    for entries in itertools.product(range(ctx.q), repeat=4):
        yield Mat2(ctx, entries)


def gl2_enumerate(ctx: FieldCtx, max_q: int = DEFAULT_MAX_Q_GL2) -> list[Mat2]:
    """All invertible matrices in ascending lexicographic order."""
    _check_gl2_bound(ctx, max_q)
    return [M for M in all_matrices(ctx) if M.det() != 0]


def stabilizer(A: Mat2, max_q: int = DEFAULT_MAX_Q_GL2) -> list[Mat2]:
    """Invertible matrices commuting with ``A``, found by scanning GL2."""
    return [Q for Q in gl2_enumerate(A.ctx, max_q) if Q * A == A * Q]


def centralizer_units(A: Mat2) -> list[Mat2]:
    """Same set as :func:`stabilizer`, built directly.

    A nonscalar 2x2 matrix has centralizer ``{x I + y A}``; a scalar one
    commutes with everything.
    """
    ctx = A.ctx
    if A.is_scalar():
        return gl2_enumerate(ctx, max_q=ctx.q)
    out = []
    for x in ctx.elements():
        for y in ctx.elements():
            M = Mat2.scalar(ctx, x) + A.scale(y)
            if M.det() != 0:
                out.append(M)
    return sorted(out)

