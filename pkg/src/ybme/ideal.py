"""Ideals in GF(q)[x11, x12, x21, x22]: Groebner bases, membership, intersection."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .field import FieldCtx
from .matrix import Mat2
from .poly import MPoly, PolyRing, divides, mono_div, mono_lcm

DEFAULT_MAX_Q_VARIETY = 32


@dataclass(frozen=True)
class IdealGens:
    """A finite generating set; zero polynomials are dropped on construction."""

    gens: tuple[MPoly, ...]
    label: str = ""

    def __post_init__(self):
        object.__setattr__(self, "gens", tuple(g for g in self.gens if not g.is_zero()))

    @classmethod
    def of(cls, gens, label: str = "") -> IdealGens:
        return cls(tuple(gens), label)

    def __iter__(self):
        return iter(self.gens)

    def __len__(self) -> int:
        return len(self.gens)

    def is_zero_ideal(self) -> bool:
        return not self.gens


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced monic Groebner basis for lex order, sorted by descending leading monomial."""

    basis: tuple[MPoly, ...]
    order: str = "lex"

    def __iter__(self):
        return iter(self.basis)

    def __len__(self) -> int:
        return len(self.basis)

    def as_ideal(self, label: str = "") -> IdealGens:
        return IdealGens(self.basis, label)


def s_polynomial(f: MPoly, g: MPoly) -> MPoly:
    lf, lg = f.lm, g.lm
    L = mono_lcm(lf, lg)
    ctx = f.ctx
    return (f.mul_term(mono_div(L, lf), ctx.inv(f.lc))
            - g.mul_term(mono_div(L, lg), ctx.inv(g.lc)))


def reduce_poly(f: MPoly, G) -> MPoly:
    """Full remainder of ``f`` on division by ``G`` (any nonzero divisors)."""
    ctx = f.ctx
    mul, sub, inv = ctx.mul, ctx.sub, ctx.inv
    divisors = [(g.lm, inv(g.lc), g.terms) for g in G]
    p = dict(f.terms)
    r = {}
    while p:
        m = max(p)
        c = p[m]
        for lm, lci, gterms in divisors:
            if divides(lm, m):
                k = mul(c, lci)
                shift = mono_div(m, lm)
                for gm, gc in gterms.items():
                    t = tuple(a + b for a, b in zip(gm, shift))
                    v = sub(p.get(t, 0), mul(k, gc))
                    if v:
                        p[t] = v
                    else:
                        p.pop(t, None)
                break
        else:
            r[m] = c
            del p[m]
    return MPoly(f.ctx, f.nvars, r)


def normal_form(f: MPoly, G) -> MPoly:
    """Remainder of ``f`` modulo a Groebner basis; zero iff ``f`` lies in the ideal."""
    basis = G.basis if isinstance(G, GroebnerBasis) else tuple(G)
    return reduce_poly(f, basis)


def _reduced(G: list[MPoly]) -> list[MPoly]:
    G = sorted((g.monic() for g in G), key=lambda g: g.lm)
    minimal: list[MPoly] = []
    for g in G:
        if not any(divides(h.lm, g.lm) for h in minimal):
            minimal.append(g)
    out = []
    for i, g in enumerate(minimal):
        rest = minimal[:i] + minimal[i + 1:]
        out.append(reduce_poly(g, rest).monic())
    return sorted(out, key=lambda g: g.lm, reverse=True)


def buchberger(gens: IdealGens | list) -> GroebnerBasis:
    """Reduced Groebner basis in lex order.

    Pairs are processed by smallest total degree of the lcm of leading
    monomials, ties broken by index; pairs with coprime leading monomials
    are skipped.
    """
    polys = tuple(gens.gens if isinstance(gens, IdealGens) else (g for g in gens if not g.is_zero()))
    G = _GB_CACHE.get(polys)
    if G is None:
        G = _GB_CACHE[polys] = _buchberger(polys)
    return G


# keyed by generator tuple; also lets callers audit every basis computed so far
_GB_CACHE: dict[tuple[MPoly, ...], GroebnerBasis] = {}


def computed_bases() -> list[GroebnerBasis]:
    return list(_GB_CACHE.values())


def _buchberger(polys: tuple[MPoly, ...]) -> GroebnerBasis:
    if not polys:
        return GroebnerBasis(())
    G = [g.monic() for g in polys]
    pairs = [(i, j) for j in range(len(G)) for i in range(j)]
    while pairs:
        best = min(range(len(pairs)),
                   key=lambda k: (sum(mono_lcm(G[pairs[k][0]].lm, G[pairs[k][1]].lm)), pairs[k]))
        i, j = pairs.pop(best)
        li, lj = G[i].lm, G[j].lm
        if all(a == 0 or b == 0 for a, b in zip(li, lj)):
            continue
        r = reduce_poly(s_polynomial(G[i], G[j]), G)
        if r.is_zero():
            continue
        r = r.monic()
        if r.total_degree() == 0:
            return GroebnerBasis((r,))
        G.append(r)
        n = len(G) - 1
        pairs.extend((k, n) for k in range(n))
    return GroebnerBasis(tuple(_reduced(G)))


def is_groebner(G) -> bool:
    """Every S-polynomial of basis pairs reduces to zero."""
    basis = list(G)
    return all(reduce_poly(s_polynomial(f, g), basis).is_zero()
               for f, g in itertools.combinations(basis, 2))


def ideal_contains(I: IdealGens, f: MPoly) -> bool:
    return normal_form(f, buchberger(I)).is_zero()


def ideal_subset(I: IdealGens, J: IdealGens) -> bool:
    """``I`` is contained in ``J``."""
    G = buchberger(J)
    return all(normal_form(f, G).is_zero() for f in I.gens)


def ideals_equal(I: IdealGens, J: IdealGens) -> bool:
    return ideal_subset(I, J) and ideal_subset(J, I)


def ideal_product(I: IdealGens, J: IdealGens) -> IdealGens:
    """Ideal generated by all pairwise products of generators."""
    gens = tuple(f * g for f in I.gens for g in J.gens)
    return IdealGens(gens, f"({I.label})*({J.label})")


def ideal_sum(I: IdealGens, J: IdealGens) -> IdealGens:
    return IdealGens(I.gens + J.gens, f"({I.label})+({J.label})")


def ideal_intersect(I: IdealGens, J: IdealGens) -> IdealGens:
    """``I ∩ J`` by eliminating ``t`` from ``t*I + (1 - t)*J``."""
    if I.is_zero_ideal() or J.is_zero_ideal():
        return IdealGens((), f"({I.label})&({J.label})")
    ref = I.gens[0]
    ring = PolyRing(ref.ctx, ref.nvars + 1)
    t = MPoly.var(ref.ctx, ref.nvars + 1, 0)
    one_minus_t = ring.const(1) - t
    lifted = [t * f.with_leading_var() for f in I.gens]
    lifted += [one_minus_t * g.with_leading_var() for g in J.gens]
    G = buchberger(lifted)
    kept = tuple(g.drop_leading_var() for g in G if all(m[0] == 0 for m in g.terms))
    return IdealGens(kept, f"({I.label})&({J.label})")


def ybme_ideal(A: Mat2) -> IdealGens:
    """Entries of ``XAX - AXA`` for the generic matrix ``X`` of indeterminates."""
    ctx = A.ctx
    R = PolyRing(ctx)
    X = [[R.x11, R.x12], [R.x21, R.x22]]
    a = [[MPoly(ctx, 4, {(0, 0, 0, 0): A.entries[2 * i + j]}) for j in range(2)] for i in range(2)]

    def mm(P, Q):
        return [[P[i][0] * Q[0][j] + P[i][1] * Q[1][j] for j in range(2)] for i in range(2)]

    lhs = mm(mm(X, a), X)
    rhs = mm(mm(a, X), a)
    gens = tuple(lhs[i][j] - rhs[i][j] for i in range(2) for j in range(2))
    return IdealGens(gens, f"YBME({A})")


def variety_points(I: IdealGens, ctx: FieldCtx, max_q: int = DEFAULT_MAX_Q_VARIETY) -> list[Mat2]:
    """All GF(q)-rational points of a 4-variable ideal, as sorted matrices."""
    if ctx.q > max_q:
        raise ValueError(f"q = {ctx.q} exceeds the variety enumeration bound {max_q}")
    for g in I.gens:
        if g.nvars != 4:
            raise ValueError("variety_points expects polynomials in x11, x12, x21, x22")
    # low-degree generators first so most points are rejected cheaply
    gens = sorted(I.gens, key=lambda g: (g.total_degree(), len(g.terms)))
    out = []
    for point in itertools.product(range(ctx.q), repeat=4):
        if all(g.evaluate(point) == 0 for g in gens):
            out.append(Mat2(ctx, point))
    return out


def radical_contains(I: IdealGens, f: MPoly) -> bool:
    """``f`` lies in the radical of ``I``: ``1 in I + <1 - y f>`` with a fresh variable ``y``."""
    if f.is_zero():
        return True
    y = MPoly.var(f.ctx, f.nvars + 1, 0)
    gens = [g.with_leading_var() for g in I.gens]
    gens.append(MPoly.const(f.ctx, f.nvars + 1, 1) - y * f.with_leading_var())
    G = buchberger(gens)
    return len(G) == 1 and G.basis[0].total_degree() == 0


def radical_subset(I: IdealGens, J: IdealGens) -> bool:
    """``I`` is contained in the radical of ``J``."""
    return all(radical_contains(J, f) for f in I.gens)
