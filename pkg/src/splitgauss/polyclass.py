"""Twisted-reciprocal and dual polynomials over finite fields.

For monic f with f(0) != 0 over GF(q^2) (involution a -> a^q):

    u_reciprocal(f) = conj(f(0))^{-1} x^n conj(f)(1/x)

so the roots of the image are the twisted inverses conj(root)^{-1}.  The
dual drops the twist: dual(f) = f(0)^{-1} x^n f(1/x), defined when 0, 1, -1
are not roots.  `enumerate_self_u_irreducibles` lists all monic irreducible
self-U-reciprocal polynomials up to a degree bound; only odd degrees occur.
"""

from __future__ import annotations

import itertools

from .field import FieldCtx, frobenius


class Poly:
    """Polynomial over a FieldCtx; coefficients constant-first, trimmed."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx, coeffs):
        self.ctx = ctx
        cs = [ctx(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == self.ctx.one

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return (isinstance(other, Poly) and self.ctx == other.ctx
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.ctx, self.coeffs))

    def __call__(self, x):
        acc = self.ctx.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __mul__(self, other):
        if not self or not other:
            return Poly(self.ctx, [])
        out = [self.ctx.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
        return Poly(self.ctx, out)

    def divmod(self, other):
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = other.degree
        inv = other.coeffs[-1].inverse()
        q = [self.ctx.zero] * max(len(rem) - db, 0)
        while len(rem) - 1 >= db and any(rem):
            while rem and not rem[-1]:
                rem.pop()
            if len(rem) - 1 < db:
                break
            shift = len(rem) - 1 - db
            f = rem[-1] * inv
            q[shift] = f
            for i, c in enumerate(other.coeffs):
                rem[shift + i] = rem[shift + i] - f * c
        return Poly(self.ctx, q), Poly(self.ctx, rem)

    def divides(self, other):
        return not other.divmod(self)[1]

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                parts.append(repr(c))
            elif i == 1:
                parts.append(f"{c!r}*x")
            else:
                parts.append(f"{c!r}*x^{i}")
        return " + ".join(reversed(parts))


def u_reciprocal(f):
    """conj(f(0))^{-1} x^n conj(f)(1/x); monic when f is monic."""
    if not f or not f.coeffs[0]:
        raise ValueError("u_reciprocal needs a nonzero constant term")
    scale = frobenius(f.coeffs[0]).inverse()
    rev = [scale * frobenius(c) for c in reversed(f.coeffs)]
    return Poly(f.ctx, rev)


def is_self_u_reciprocal(f):
    if not f.is_monic():
        raise ValueError("self-U-reciprocity is defined for monic polynomials")
    return f == u_reciprocal(f)


def dual(f):
    """f(0)^{-1} x^n f(1/x); needs 0, 1, -1 to not be roots."""
    ctx = f.ctx
    if not f or not f.coeffs[0]:
        raise ValueError("dual needs a nonzero constant term")
    if not f(ctx.one) or not f(ctx(-1)):
        raise ValueError("dual is undefined when 1 or -1 is a root")
    scale = f.coeffs[0].inverse()
    return Poly(ctx, [scale * c for c in reversed(f.coeffs)])


def is_self_dual(f):
    if not f.is_monic():
        raise ValueError("self-duality is defined for monic polynomials")
    return f == dual(f)


def is_irreducible(f):
    """Trial root/factor search; intended for degree <= 5 over small fields."""
    d = f.degree
    if d < 1:
        return False
    if d == 1:
        return True
    ctx = f.ctx
    for a in ctx.elements():
        if not f(a):
            return False
    if d <= 3:
        return True
    # no linear factors; check irreducible factors of degree 2..d//2
    for e in range(2, d // 2 + 1):
        for tail in itertools.product(range(ctx.order), repeat=e):
            g = Poly(ctx, [ctx(c) for c in tail] + [ctx.one])
            if any(not g(a) for a in ctx.elements()):
                continue
            if g.divides(f):
                return False
    return True


def enumerate_self_u_irreducibles(q, dmax):
    """All monic irreducible self-U-reciprocal polynomials of degree <= dmax
    over GF(q^2).  Every returned degree is odd (Ennola).

    Candidates are generated from the coefficient symmetry: the constant
    term has norm 1 and the lower half of the coefficients is determined by
    the upper half, so only (q+1) q^(2*floor((d-1)/2)) shapes per degree d
    are tested for self-U-reciprocity and irreducibility.
    """
    if dmax > 5:
        raise ValueError("enumeration supported up to degree 5")
    ctx = FieldCtx.of_order(q * q)
    norm_one = [a for a in ctx.units() if a * frobenius(a) == ctx.one]
    out = []
    for d in range(1, dmax + 1):
        if d == 1:
            # x + a0 is self-U-reciprocal exactly when a0 has norm 1
            out.extend(Poly(ctx, [a0, ctx.one]) for a0 in norm_one)
            continue
        half = list(range((d + 1) // 2, d))
        for a0 in norm_one:
            inv_conj_a0 = frobenius(a0).inverse()
            for highs in itertools.product(range(ctx.order), repeat=len(half)):
                coeffs = [ctx.zero] * (d + 1)
                coeffs[0] = a0
                coeffs[d] = ctx.one
                for idx, h in zip(half, highs):
                    coeffs[idx] = ctx(h)
                for j in range(1, (d + 1) // 2):
                    coeffs[j] = inv_conj_a0 * frobenius(coeffs[d - j])
                if d % 2 == 0:
                    mid = d // 2
                    if coeffs[mid] != inv_conj_a0 * frobenius(coeffs[mid]):
                        continue
                f = Poly(ctx, coeffs)
                if is_self_u_reciprocal(f) and is_irreducible(f):
                    out.append(f)
    out.sort(key=lambda f: (f.degree, tuple(c.encode() for c in f.coeffs)))
    return out
