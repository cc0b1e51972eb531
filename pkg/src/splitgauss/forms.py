"""Split forms, similitude characters, quadratic form, Wall's residual form.

Standard Gram matrices (block indices 1..l, -1..-l, plus 0 in odd size):

    symplectic 2l:        (0  I_l; -I_l  0)
    orthogonal 2l:        (0  I_l;  I_l  0)
    orthogonal 2l+1:      (2  0  0; 0  0  I_l; 0  I_l  0)
    unitary n over GF(q^2): I_n

A similitude g satisfies tg . beta . g = mu(g) beta (with entrywise
conjugation on the left factor in the unitary case); mu = 1 cuts out the
isometry subgroup.
"""

from __future__ import annotations

from dataclasses import dataclass

from .field import FieldCtx, SquareClass, square_class, trivial_class, frobenius
from .linalg import Matrix

SIMILITUDE_TAGS = {"gsp", "go-even", "go-odd"}
ISOMETRY_TAGS = {"sp", "o-even", "o-odd", "u"}
FORM_TAGS = SIMILITUDE_TAGS | ISOMETRY_TAGS
EVEN_TAGS = {"gsp", "sp", "go-even", "o-even"}
ODD_TAGS = {"go-odd", "o-odd"}
ORTHOGONAL_TAGS = {"go-even", "o-even", "go-odd", "o-odd"}


class NotInGroupError(ValueError):
    """Input matrix is not a member of the requested group."""


@dataclass(frozen=True)
class GroupKind:
    """A classical group family instance: tag, rank parameter, base field."""

    tag: str
    l: int
    ctx: FieldCtx

    def __post_init__(self):
        if self.tag in {"gsp", "sp"}:
            if self.l < 2:
                raise ValueError("symplectic kinds need l >= 2")
        elif self.tag in ORTHOGONAL_TAGS:
            if self.l < 1:
                raise ValueError("orthogonal kinds need l >= 1")
            if self.ctx.char == 2:
                raise ValueError("orthogonal kinds need odd characteristic")
        elif self.tag == "u":
            if self.ctx.kind != "extension" or self.ctx.m % 2 != 0:
                raise ValueError("unitary kinds need a GF(q^2) context")
        elif self.tag in {"gl", "sl"}:
            if self.l < 1:
                raise ValueError("need n >= 1")
        else:
            raise ValueError(f"unknown group tag {self.tag!r}")

    @property
    def dim(self):
        if self.tag in ODD_TAGS:
            return 2 * self.l + 1
        if self.tag in EVEN_TAGS:
            return 2 * self.l
        return self.l

    @property
    def is_odd_orthogonal(self):
        return self.tag in ODD_TAGS

    def __repr__(self):
        return f"{self.tag}({self.dim},{self.ctx!r})"

    # constructors named after the families; `l` for split kinds, `n` otherwise
    @staticmethod
    def gl(n, ctx):
        return GroupKind("gl", n, ctx)

    @staticmethod
    def sl(n, ctx):
        return GroupKind("sl", n, ctx)

    @staticmethod
    def gsp(l, ctx):
        return GroupKind("gsp", l, ctx)

    @staticmethod
    def sp(l, ctx):
        return GroupKind("sp", l, ctx)

    @staticmethod
    def go_even(l, ctx):
        return GroupKind("go-even", l, ctx)

    @staticmethod
    def o_even(l, ctx):
        return GroupKind("o-even", l, ctx)

    @staticmethod
    def go_odd(l, ctx):
        return GroupKind("go-odd", l, ctx)

    @staticmethod
    def o_odd(l, ctx):
        return GroupKind("o-odd", l, ctx)

    @staticmethod
    def u(n, ctx):
        return GroupKind("u", n, ctx)


def standard_form(kind):
    """Gram matrix of the defining split (or hermitian identity) form."""
    ctx = kind.ctx
    if kind.tag not in FORM_TAGS:
        raise ValueError(f"{kind.tag} preserves no form")
    if kind.tag == "u":
        return Matrix.identity(ctx, kind.l)
    l = kind.l
    if kind.tag in {"gsp", "sp"}:
        rows = [[0] * (2 * l) for _ in range(2 * l)]
        for i in range(l):
            rows[i][l + i] = 1
            rows[l + i][i] = -1
        return Matrix(ctx, rows)
    if kind.tag in {"go-even", "o-even"}:
        rows = [[0] * (2 * l) for _ in range(2 * l)]
        for i in range(l):
            rows[i][l + i] = 1
            rows[l + i][i] = 1
        return Matrix(ctx, rows)
    n = 2 * l + 1
    rows = [[0] * n for _ in range(n)]
    rows[0][0] = 2
    for i in range(1, l + 1):
        rows[i][l + i] = 1
        rows[l + i][i] = 1
    return Matrix(ctx, rows)


def similitude(g, kind):
    """mu(g) when tg.beta.g = mu.beta (conjugated for unitary), else None.

    For the isometry tags (sp, o-even, o-odd, u) membership additionally
    requires mu = 1; gl/sl have no form and are rejected.
    """
    beta = standard_form(kind)
    n = beta.nrows
    if g.nrows != n or g.ncols != n:
        raise ValueError("matrix size does not match the group")
    left = g.conj().transpose() if kind.tag == "u" else g.transpose()
    m = left * beta * g
    mu = None
    for i in range(n):
        for j in range(n):
            if beta[i, j]:
                mu = m[i, j] / beta[i, j]
                break
        if mu is not None:
            break
    if not mu:
        return None
    for i in range(n):
        for j in range(n):
            if m[i, j] != mu * beta[i, j]:
                return None
    if kind.tag == "u" and frobenius(mu) != mu:
        return None
    if kind.tag in ISOMETRY_TAGS and mu != kind.ctx.one:
        return None
    return mu


def bilinear(u, v, beta):
    """B(u, v) = tu.beta.v for column matrices u, v."""
    return (u.transpose() * beta * v)[0, 0]


def quadratic(v, beta):
    """Q(v) = B(v, v) / 2 for a symmetric form, odd characteristic."""
    if beta.ctx.char == 2:
        raise ValueError("quadratic form needs odd characteristic")
    if beta != beta.transpose():
        raise ValueError("quadratic form needs a symmetric Gram matrix")
    return bilinear(v, v, beta) / beta.ctx(2)


def wall_gram(g, beta):
    """Gram matrix of Wall's form on the residual space of an isometry.

    Columns u_1..u_r of Im(I-g) are the echelon-selected column basis;
    entry (i, j) is B(u_i, y_j) with (I-g) y_j = u_j.  The result is r x r
    and invertible; g = identity gives the 0 x 0 matrix.
    """
    ctx = g.ctx
    n = g.nrows
    if (g.transpose() * beta * g) != beta:
        raise NotInGroupError("wall_gram needs an isometry of the form")
    one_minus_g = Matrix.identity(ctx, n) - g
    basis = one_minus_g.column_basis()
    ys = []
    for u in basis:
        y = one_minus_g.solve_preimage(u)
        assert y is not None
        ys.append(y)
    rows = [[bilinear(u, y, beta) for y in ys] for u in basis]
    return Matrix(ctx, rows)


def discriminant(m):
    """Square class of det(m); trivial for the 0 x 0 matrix; None when the
    determinant vanishes (the degenerate outcome)."""
    if not m.is_square():
        raise ValueError("discriminant of a non-square matrix")
    if m.nrows == 0:
        return trivial_class(m.ctx)
    d = m.det()
    if not d:
        return None
    return square_class(d)
