"""Arithmetic in finite fields GF(p^s).

Elements are stored as integer encodings ``e = sum(c[i] * p**i)`` of their
coefficient vectors in the polynomial basis ``1, t, ..., t^(s-1)``, where ``t``
is a root of the field modulus.  All arithmetic goes through precomputed
addition/multiplication tables, which keeps the hot loops in
:mod:`ybme.oracle` free of polynomial bookkeeping.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

DEFAULT_MAX_Q = 1024


class FieldError(ValueError):
    """Raised for invalid field parameters or mixed-field operands."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_power(q: int) -> tuple[int, int]:
    """Split ``q`` as ``p**s``; raise :class:`FieldError` if it is not a prime power."""
    if q < 2:
        raise FieldError(f"{q} is not a prime power")
    p = next(d for d in range(2, q + 1) if q % d == 0)
    s, r = 0, q
    while r % p == 0:
        r //= p
        s += 1
    if r != 1:
        raise FieldError(f"{q} is not a prime power")
    return p, s


# -- polynomials over GF(p) as little-endian coefficient lists ---------------

def _poly_trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mod(num: list[int], den: list[int], p: int) -> list[int]:
    num = _poly_trim(list(num))
    den = _poly_trim(list(den))
    inv_lead = pow(den[-1], p - 2, p)
    while len(num) >= len(den):
        k = num[-1] * inv_lead % p
        shift = len(num) - len(den)
        for i, d in enumerate(den):
            num[shift + i] = (num[shift + i] - k * d) % p
        _poly_trim(num)
    return num


def _monic_polys(p: int, degree: int):
    """Monic degree-``degree`` polynomials in lexicographic (c0, ..., c_{d-1}) order."""
    for low in itertools.product(range(p), repeat=degree):
        yield list(low) + [1]


def is_irreducible(poly: list[int], p: int) -> bool:
    """Exhaustive check: no monic factor of degree 1..deg/2 over GF(p)."""
    deg = len(_poly_trim(list(poly))) - 1
    if deg < 1:
        return False
    if deg == 1:
        return True
    for d in range(1, deg // 2 + 1):
        for f in _monic_polys(p, d):
            if not _poly_mod(poly, f, p):
                return False
    return True


def find_modulus(p: int, s: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree ``s`` over GF(p).

    Returns the full coefficient vector ``(c0, ..., c_{s-1}, 1)``.
    """
    if s == 1:
        return (0, 1)
    for f in _monic_polys(p, s):
        if is_irreducible(f, p):
            return tuple(f)
    raise FieldError(f"no irreducible polynomial of degree {s} over GF({p})")  # pragma: no cover


@dataclass(frozen=True)
class FieldCtx:
    """The finite field GF(p^s) with a fixed polynomial basis.

    Build instances with :func:`make_field`; the lookup tables are derived
    data and excluded from equality and hashing.
    """

    p: int
    s: int
    modulus: tuple[int, ...]
    add_table: np.ndarray = field(repr=False, compare=False)
    mul_table: np.ndarray = field(repr=False, compare=False)
    neg_table: np.ndarray = field(repr=False, compare=False)
    inv_table: np.ndarray = field(repr=False, compare=False)
    _add: list = field(repr=False, compare=False)
    _mul: list = field(repr=False, compare=False)
    _neg: list = field(repr=False, compare=False)
    _inv: list = field(repr=False, compare=False)

    @property
    def q(self) -> int:
        return self.p ** self.s

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def spec(self) -> str:
        return f"{self.p}^{self.s}"

    def __str__(self) -> str:
        return f"GF({self.q})" if self.s == 1 else f"GF({self.p}^{self.s})"

    # integer-encoded arithmetic
    def add(self, x: int, y: int) -> int:
        return self._add[x][y]

    def sub(self, x: int, y: int) -> int:
        return self._add[x][self._neg[y]]

    def mul(self, x: int, y: int) -> int:
        return self._mul[x][y]

    def neg(self, x: int) -> int:
        return self._neg[x]

    def inv(self, x: int) -> int:
        if x == 0:
            raise ZeroDivisionError(f"0 has no inverse in {self}")
        return self._inv[x]

    def div(self, x: int, y: int) -> int:
        return self._mul[x][self.inv(y)]

    def power(self, x: int, n: int) -> int:
        if n < 0:
            return self.power(self.inv(x), -n)
        result, base = 1, x
        while n:
            if n & 1:
                result = self._mul[result][base]
            base = self._mul[base][base]
            n >>= 1
        return result

    def from_int(self, n: int) -> int:
        """Image of the integer ``n`` under ZZ -> GF(q)."""
        return n % self.p

    def encode(self, coeffs) -> int:
        coeffs = list(coeffs)
        if len(coeffs) > self.s:
            raise FieldError(f"too many coefficients for {self}")
        return sum((c % self.p) * self.p ** i for i, c in enumerate(coeffs))

    def decode(self, x: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.s):
            x, r = divmod(x, self.p)
            out.append(r)
        return tuple(out)

    def elements(self) -> range:
        return range(self.q)

    def nonzero(self) -> range:
        return range(1, self.q)

    def is_square(self, x: int) -> bool:
        if x == 0 or self.p == 2:
            return True
        return self.power(x, (self.q - 1) // 2) == 1

    def sqrt(self, x: int) -> int | None:
        """Smallest-encoding square root of ``x``, or None."""
        for y in range(self.q):
            if self._mul[y][y] == x:
                return y
        return None

    def elem(self, x) -> FqElem:
        if isinstance(x, FqElem):
            x._check(self)
            return x
        if not 0 <= x < self.q:
            raise FieldError(f"encoding {x} out of range for {self}")
        return FqElem(self, x)

    def format(self, x: int) -> str:
        return str(x)


def _build_tables(p: int, s: int, modulus: tuple[int, ...]):
    q = p ** s
    idx = np.arange(q)
    digits = np.stack([(idx // p ** i) % p for i in range(s)])
    weights = p ** np.arange(s)
    add = (((digits[:, :, None] + digits[:, None, :]) % p) * weights[:, None, None]).sum(axis=0)
    neg = (((p - digits) % p) * weights[:, None]).sum(axis=0)

    if s == 1:
        mul = np.outer(idx, idx) % p
    else:
        # exp/log tables from the first generator of the multiplicative group
        def polymul(x: int, y: int) -> int:
            a, b = [(x // p ** i) % p for i in range(s)], [(y // p ** i) % p for i in range(s)]
            prod = [0] * (2 * s - 1)
            for i, ai in enumerate(a):
                if ai:
                    for j, bj in enumerate(b):
                        prod[i + j] = (prod[i + j] + ai * bj) % p
            rem = _poly_mod(prod, list(modulus), p)
            return sum(c * p ** i for i, c in enumerate(rem))

        exp = None
        for g in range(2, q):
            powers = [1]
            for _ in range(q - 2):
                powers.append(polymul(powers[-1], g))
            if len(set(powers)) == q - 1:
                exp = np.array(powers)
                break
        assert exp is not None
        log = np.zeros(q, dtype=np.int64)
        log[exp] = np.arange(q - 1)
        mul = exp[(log[:, None] + log[None, :]) % (q - 1)]
        mul[0, :] = 0
        mul[:, 0] = 0

    inv = np.zeros(q, dtype=np.int64)
    rows, cols = np.nonzero(mul == 1)
    inv[rows] = cols
    return (add.astype(np.int32), mul.astype(np.int32), neg.astype(np.int32), inv.astype(np.int32))


@lru_cache(maxsize=None)
def _make_field_cached(p: int, s: int) -> FieldCtx:
    modulus = find_modulus(p, s)
    add, mul, neg, inv = _build_tables(p, s, modulus)
    for t in (add, mul, neg, inv):
        t.setflags(write=False)
    return FieldCtx(p, s, modulus, add, mul, neg, inv,
                    add.tolist(), mul.tolist(), neg.tolist(), inv.tolist())


def make_field(p: int, s: int = 1, max_q: int = DEFAULT_MAX_Q) -> FieldCtx:
    """Return the field GF(p^s).

    Contexts are cached, so repeated calls with the same ``(p, s)`` return
    the identical object.
    """
    if not isinstance(p, int) or not is_prime(p):
        raise FieldError(f"{p} is not prime")
    if not isinstance(s, int) or s < 1:
        raise FieldError(f"extension degree must be >= 1, got {s}")
    if p ** s > max_q:
        raise FieldError(f"q = {p}^{s} = {p ** s} exceeds the bound {max_q}")
    return _make_field_cached(p, s)


_SPEC_RE = re.compile(r"^\s*(\d+)\s*(?:\^\s*(\d+))?\s*$")


def parse_field(spec: str, max_q: int = DEFAULT_MAX_Q) -> FieldCtx:
    """Parse ``"p^s"`` or a plain prime power such as ``"7"`` or ``"9"``."""
    m = _SPEC_RE.match(str(spec))
    if not m:
        raise FieldError(f"cannot parse field spec {spec!r}")
    base, exp = int(m.group(1)), m.group(2)
    if exp is None:
        p, s = prime_power(base)
    else:
        p, s = base, int(exp)
    return make_field(p, s, max_q=max_q)


@dataclass(frozen=True)
class FqElem:
    """A field element bound to its context; supports the usual operators."""

    ctx: FieldCtx
    value: int

    def _check(self, ctx: FieldCtx) -> None:
        if ctx != self.ctx:
            raise FieldError(f"operands from different fields: {self.ctx} and {ctx}")

    def _other(self, other) -> int:
        if isinstance(other, FqElem):
            other._check(self.ctx)
            return other.value
        if isinstance(other, int):
            return self.ctx.from_int(other)
        return NotImplemented

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.ctx.decode(self.value)

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FqElem(self.ctx, self.ctx.add(self.value, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FqElem(self.ctx, self.ctx.sub(self.value, o))

    def __rsub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FqElem(self.ctx, self.ctx.sub(o, self.value))

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FqElem(self.ctx, self.ctx.mul(self.value, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FqElem(self.ctx, self.ctx.div(self.value, o))

    def __neg__(self):
        return FqElem(self.ctx, self.ctx.neg(self.value))

    def __pow__(self, n: int):
        return FqElem(self.ctx, self.ctx.power(self.value, n))

    def inverse(self) -> FqElem:
        return FqElem(self.ctx, self.ctx.inv(self.value))

    def is_square(self) -> bool:
        return self.ctx.is_square(self.value)

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"FqElem({self.value} in {self.ctx})"


_OPS = {"add", "sub", "mul", "neg"}


def arith(ctx: FieldCtx, op: str, x, y=None) -> FqElem:
    """Dispatch a named field operation on elements or raw encodings."""
    if op not in _OPS:
        raise ValueError(f"unknown field operation {op!r}")
    xv = ctx.elem(x).value
    if op == "neg":
        return FqElem(ctx, ctx.neg(xv))
    yv = ctx.elem(y).value
    return FqElem(ctx, getattr(ctx, op)(xv, yv))


def inv(ctx: FieldCtx, x) -> FqElem:
    return FqElem(ctx, ctx.inv(ctx.elem(x).value))


def is_square(ctx: FieldCtx, x) -> bool:
    return ctx.is_square(ctx.elem(x).value)


def enumerate_field(ctx: FieldCtx) -> list[FqElem]:
    return [FqElem(ctx, v) for v in ctx.elements()]
