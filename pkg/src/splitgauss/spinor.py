"""Spinor norm of split orthogonal groups by three independent routes:

* elimination: the square class of lam in the canonical diagonal
  diag(1,..,1,lam, 1,..,1, 1/lam) produced by `gauss.decompose`;
* Wall: the discriminant of the Wall-form Gram matrix on the residual
  space Im(I - g);
* reflections: the class of prod Q(u_i) over a constructive
  reflection factorization g = sigma_{u_1} ... sigma_{u_m}, m <= dim.

The factorization peels one reflection at a time: for the first usable
candidate u (anisotropic, with (g - I)u anisotropic) the reflection along
(g - I)u strictly enlarges the fixed space; when the residual space
Im(g - I) is totally isotropic no such u exists, and composing with the
reflection along the first anisotropic vector in the canonical vector
enumeration breaks the degeneracy.  Candidate u's are scanned in a fixed
order: hyperbolic-pair combinations e_i + t e_{-i} first (those are the
anisotropic vectors nearest the split basis), then the full canonical
enumeration.
"""

from __future__ import annotations

import itertools

from dataclasses import dataclass

from .field import square_class, trivial_class
from .forms import (NotInGroupError, ODD_TAGS, bilinear, quadratic,
                    standard_form, wall_gram, discriminant, similitude)
from .gauss import decompose
from .linalg import Matrix


@dataclass
class ReflectionFactorization:
    vectors: list          # anisotropic columns, product of reflections = g
    product_ok: bool

    def __len__(self):
        return len(self.vectors)


def reflection(u, beta):
    """sigma_u = I - (2 / B(u,u)) u . (tu beta); requires Q(u) != 0."""
    ctx = beta.ctx
    buu = bilinear(u, u, beta)
    if not buu:
        raise ValueError("reflection along an isotropic vector")
    n = beta.nrows
    coef = ctx(2) / buu
    row = (u.transpose() * beta).rows[0]
    rows = []
    for i in range(n):
        ui = u[i, 0]
        rows.append([
            (ctx.one if i == j else ctx.zero) - coef * ui * row[j]
            for j in range(n)
        ])
    return Matrix(ctx, rows)


def _vector_enumeration(ctx, n):
    """Canonical enumeration of nonzero column vectors: coordinates run
    through the field's encoding order, last coordinate fastest."""
    space = [list(v) for v in
             itertools.product(range(ctx.order), repeat=n)]
    for coords in space:
        if any(coords):
            yield Matrix.column(ctx, [ctx(c) for c in coords])


def _anisotropic_candidates(beta):
    """Fixed search order for candidate vectors: e_i + t e_{-i} pair
    combinations (plus e_0 in odd size), then the full enumeration."""
    ctx = beta.ctx
    n = beta.nrows
    odd = n % 2 == 1
    l = n // 2
    off = 1 if odd else 0

    def basis_col(i):
        return Matrix.column(ctx, [ctx.one if k == i else ctx.zero for k in range(n)])

    if odd:
        yield basis_col(0)
    for i in range(l):
        for t in ctx.units():
            col = [ctx.zero] * n
            col[off + i] = ctx.one
            col[off + l + i] = t
            yield Matrix.column(ctx, col)
    yield from _vector_enumeration(ctx, n)


def _first_anisotropic(beta):
    for v in _anisotropic_candidates(beta):
        if quadratic(v, beta):
            return v
    raise AssertionError("nondegenerate odd-characteristic space has anisotropic vectors")


def _totally_isotropic_residual(g, beta):
    one_minus = Matrix.identity(g.ctx, g.nrows) - g
    basis = one_minus.column_basis()
    for i, u in enumerate(basis):
        for v in basis[i:]:
            if bilinear(u, v, beta):
                return False
    return True


def reflection_factor(g, beta):
    """Constructive factorization of an isometry into <= n reflections."""
    ctx = g.ctx
    n = g.nrows
    if (g.transpose() * beta * g) != beta:
        raise NotInGroupError("reflection_factor needs an isometry")
    ident = Matrix.identity(ctx, n)
    vectors = []
    h = g
    for _ in range(2 * n + 2):
        if h == ident:
            break
        if _totally_isotropic_residual(h, beta):
            w = _first_anisotropic(beta)
            vectors.append(w)
            h = reflection(w, beta) * h
            continue
        found = None
        for u in _anisotropic_candidates(beta):
            if not quadratic(u, beta):
                continue
            v = h * u - u
            if quadratic(v, beta):
                found = v
                break
        if found is None:
            w = _first_anisotropic(beta)
            vectors.append(w)
            h = reflection(w, beta) * h
            continue
        vectors.append(found)
        h = reflection(found, beta) * h
    prod = ident
    for v in vectors:
        prod = prod * reflection(v, beta)
    ok = prod == g and h == ident
    assert ok, "reflection factorization failed"
    assert len(vectors) <= n, "factorization longer than dim"
    return ReflectionFactorization(vectors, ok)


def spinor_elimination(g, kind):
    """Theta(g) as the class of lam in the elimination diagonal."""
    if kind.tag not in {"o-even", "o-odd"}:
        raise ValueError("spinor norm lives on the isometry kinds o-even/o-odd")
    d = decompose(g, kind)
    if d.lam == kind.ctx.one:
        return trivial_class(kind.ctx)
    return square_class(d.lam)


def spinor_wall(g, beta):
    """Theta_W(g): discriminant of the Wall-form Gram matrix."""
    gram = wall_gram(g, beta)
    cls = discriminant(gram)
    assert cls is not None, "Wall form must be non-degenerate"
    return cls


def spinor_reflect(g, beta):
    """Theta(g) as the class of prod Q(u_i) over a reflection factorization."""
    fact = reflection_factor(g, beta)
    out = trivial_class(beta.ctx)
    for u in fact.vectors:
        out = out * square_class(quadratic(u, beta))
    return out
