"""Gaussian elimination in GSp(2l), GO(2l) and GO(2l+1) over split forms,
plus the classical transvection-only elimination for GL used in Step 1.

`decompose` rewrites a similitude-group element g as

    g = eval(left) . diagonal . eval(right)

with the canonical diagonal

    gsp:     diag(1,..,1, mu,..,mu)
    go-even: diag(1,..,1,lam, mu,..,mu, mu/lam)
    go-odd:  diag(alpha, 1,..,1,lam, mu,..,mu, mu/lam),  alpha^2 = mu

and, for the isometry kinds (mu = 1), the identity diagonal in the
symplectic case and diag(1,..,1,lam, 1,..,1, 1/lam) with leading entry 1 in
the orthogonal cases.  alpha is normalized to the deterministic square root
of mu; the opposite sign is cleared by the index-swap word followed by w[l],
whose combined product is diag(-1, 1, .., 1).

The step sequence: diagonalize the A block by classical elimination (E1
row/column operations), clear the lower-left block by E3 using the
symmetric/skew additive splitting (target entries column-major, lowest
index first), clear the upper-right block by E2, with index-swap words
handling the rank-deficient branch (capped at l+1 re-diagonalization
passes); odd dimension additionally clears the border vectors X and E with
E4 operations, and the symplectic case absorbs lam with a torus word.
Elimination never forms full matrix products: every elementary token is
applied as a row or column operation touching at most three lines.
"""

from __future__ import annotations

from dataclasses import dataclass

from .field import sqrt
from .forms import NotInGroupError, similitude, ODD_TAGS
from .generators import (Word, x_token, w_token, apply_token_left,
                         apply_token_right, eval_word, w_pair, torus_h)
from .linalg import Matrix


@dataclass
class Decomposition:
    kind: object
    left: Word
    right: Word
    diagonal: Matrix
    mu: object
    lam: object
    alpha: object = None

    @property
    def word_length(self):
        return len(self.left) + len(self.right)


# -- classical GL elimination ----------------------------------------------------

def gl_eliminate(a):
    """Write a square matrix as L . diag . R with L, R products of
    transvections I + t e_{i,j} (machine indices, i != j).

    diag is diag(1,..,1,det a) when a is invertible and diag(1,..,1,0,..,0)
    otherwise.  Returns (left tokens, diag, right tokens), tokens being
    (i, j, t) triples whose product is read left-to-right.
    """
    ctx = a.ctx
    n = a.nrows
    if n != a.ncols:
        raise ValueError("gl_eliminate needs a square matrix")
    work = [list(row) for row in a.rows]
    left, right = [], []

    def row_add(i, j, t):
        # work <- (I + t e_{i,j}) . work
        work[i] = [x + t * y for x, y in zip(work[i], work[j])]
        left.append((i, j, t))

    def col_add(i, j, t):
        # work <- work . (I + t e_{i,j}); column j += t * column i
        for r in range(n):
            work[r][j] = work[r][j] + work[r][i] * t
        right.append((i, j, t))

    _transvection_diagonalize(work, n, ctx, row_add, col_add)
    rank = sum(1 for k in range(n) if work[k][k])
    _sweep_to_ones(work, rank, n, ctx, row_add, col_add)

    diag = Matrix.diagonal(ctx, [work[k][k] for k in range(n)])
    left_out = [(i, j, -t) for (i, j, t) in left]
    right_out = [(i, j, -t) for (i, j, t) in reversed(right)]
    return left_out, diag, right_out


def transvection_matrix(ctx, n, token):
    i, j, t = token
    m = [[ctx.one if r == c else ctx.zero for c in range(n)] for r in range(n)]
    m[i][j] = m[i][j] + ctx(t)
    return Matrix(ctx, m)


def _transvection_diagonalize(work, n, ctx, row_add, col_add):
    """Reduce to diag(d_1,..,d_r,0,..,0) using additions only (no swaps).
    Callbacks must mutate `work` themselves; this routine only reads it."""
    for k in range(n):
        if not work[k][k]:
            if not any(work[k][j] for j in range(k, n)):
                pr = None
                for i in range(k + 1, n):
                    if any(work[i][j] for j in range(k, n)):
                        pr = i
                        break
                if pr is None:
                    break
                row_add(k, pr, ctx.one)
            pc = next(j for j in range(k, n) if work[k][j])
            if pc != k:
                col_add(pc, k, work[k][pc].inverse() * (ctx.one - work[k][k]))
        piv = work[k][k]
        inv = piv.inverse()
        for i in range(k + 1, n):
            if work[i][k]:
                row_add(i, k, -(work[i][k] * inv))
        for j in range(k + 1, n):
            if work[k][j]:
                col_add(k, j, -(inv * work[k][j]))


def _sweep_to_ones(work, rank, n, ctx, row_add, col_add):
    """diag(d_1,..,d_r,0,..) -> diag(1,..,1,det,0,..); a trailing zero column
    additionally absorbs the last unit so the singular shape is all ones."""
    for k in range(rank - 1):
        a = work[k][k]
        if a == ctx.one:
            continue
        b = work[k + 1][k + 1]
        row_add(k, k + 1, (ctx.one - a) * b.inverse())
        col_add(k + 1, k, ctx.one)
        row_add(k + 1, k, -b)
        col_add(k, k + 1, -(ctx.one - a))
    if rank and rank < n:
        d = work[rank - 1][rank - 1]
        if d != ctx.one:
            col_add(rank - 1, rank, d.inverse() * (ctx.one - d))
            col_add(rank, rank - 1, ctx.one)
            col_add(rank - 1, rank, -(ctx.one - d))


# -- similitude-group elimination --------------------------------------------------

class _Worker:
    """Mutable copy of g plus the applied-token log for both sides."""

    def __init__(self, g, kind):
        self.kind = kind
        self.ctx = kind.ctx
        self.rows = [list(row) for row in g.rows]
        self.applied_left = []
        self.applied_right = []
        self.l = kind.l
        self.off = 1 if kind.tag in ODD_TAGS else 0   # machine index of block row 1

    def left(self, tok):
        apply_token_left(self.rows, self.kind, tok)
        self.applied_left.append(tok)

    def right(self, tok):
        apply_token_right(self.rows, self.kind, tok)
        self.applied_right.append(tok)

    def left_word(self, word):
        # net left factor must equal eval(word), so apply tokens reversed
        for tok in reversed(word.tokens):
            self.left(tok)

    # block accessors, paper coordinates i, j in 1..l
    def A(self, i, j):
        return self.rows[self.off + i - 1][self.off + j - 1]

    def B(self, i, j):
        return self.rows[self.off + i - 1][self.off + self.l + j - 1]

    def C(self, i, j):
        return self.rows[self.off + self.l + i - 1][self.off + j - 1]

    def D(self, i, j):
        return self.rows[self.off + self.l + i - 1][self.off + self.l + j - 1]

    def X(self, i):
        return self.rows[0][self.off + i - 1]

    def E(self, i):
        return self.rows[self.off + i - 1][0]

    def words(self):
        left = Word(self.kind, tuple(t.inverse() for t in self.applied_left))
        right = Word(self.kind, tuple(t.inverse() for t in reversed(self.applied_right)))
        return left, right


def _step1_diagonalize_A(w):
    """Classical elimination on the A block through E1 tokens; returns rank."""
    l, ctx = w.l, w.ctx
    block = [[w.A(i + 1, j + 1) for j in range(l)] for i in range(l)]

    def row_add(i, j, t):
        block[i] = [x + t * y for x, y in zip(block[i], block[j])]
        w.left(x_token(i + 1, j + 1, t))

    def col_add(i, j, t):
        for r in range(l):
            block[r][j] = block[r][j] + block[r][i] * t
        w.right(x_token(i + 1, j + 1, t))

    _transvection_diagonalize(block, l, ctx, row_add, col_add)
    rank = sum(1 for k in range(l) if block[k][k])
    _sweep_to_ones(block, rank, l, ctx, row_add, col_add)
    for i in range(l):
        for j in range(l):
            assert w.A(i + 1, j + 1) == block[i][j], "block view out of sync"
            if i != j:
                assert not block[i][j], "A not diagonal after step 1"
    return rank


def _step2_clear_C(w, m, symplectic):
    """Clear the top-left m x m of C by E3 tokens: S = -C11 . A11^{-1} is
    symmetric (symplectic) or skew (orthogonal) and splits into generators."""
    ctx = w.ctx
    if m == 0:
        return
    s = {}
    for i in range(1, m + 1):
        for j in range(1, m + 1):
            s[i, j] = -(w.C(i, j) / w.A(j, j))
    for j in range(1, m + 1):
        for i in range(1, j + 1):
            t = s[i, j]
            if i == j:
                if symplectic:
                    if t:
                        w.left(x_token(-i, i, t))
                else:
                    assert not t, "diagonal of a skew splitting must vanish"
            else:
                if symplectic:
                    assert s[j, i] == t, "C splitting is not symmetric"
                else:
                    assert s[j, i] == -t, "C splitting is not skew"
                if t:
                    w.left(x_token(-i, j, t))
    for i in range(1, m + 1):
        for j in range(1, m + 1):
            assert not w.C(i, j), "C11 not cleared"


def _step3_clear_B(w, mu, symplectic):
    """Clear B by E2 tokens: with D = mu . A^{-1} diagonal, R = -B . D^{-1}
    is symmetric (symplectic) or skew (orthogonal)."""
    ctx = w.ctx
    l = w.l
    mu_inv = mu.inverse()
    r = {}
    for i in range(1, l + 1):
        for j in range(1, l + 1):
            r[i, j] = -(w.B(i, j) * w.A(j, j) * mu_inv)
    for j in range(1, l + 1):
        for i in range(1, j + 1):
            t = r[i, j]
            if i == j:
                if symplectic:
                    if t:
                        w.left(x_token(i, -i, t))
                else:
                    assert not t, "diagonal of a skew splitting must vanish"
            else:
                if symplectic:
                    assert r[j, i] == t, "B splitting is not symmetric"
                else:
                    assert r[j, i] == -t, "B splitting is not skew"
                if t:
                    w.left(x_token(i, -j, t))
    for i in range(1, l + 1):
        for j in range(1, l + 1):
            assert not w.B(i, j), "B not cleared"


def _eliminate_even(w, mu, symplectic):
    l, ctx = w.l, w.ctx
    for _ in range(l + 2):
        rank = _step1_diagonalize_A(w)
        _step2_clear_C(w, rank if rank < l else l, symplectic)
        if rank == l:
            break
        for i in range(rank + 1, l + 1):
            w.left_word(w_pair(w.kind, i))
    else:
        raise AssertionError("rank recovery did not terminate")
    for i in range(1, l + 1):
        for j in range(1, l + 1):
            assert not w.C(i, j), "C not cleared"
    _step3_clear_B(w, mu, symplectic)
    if symplectic:
        lam = w.A(l, l)
        if lam != ctx.one:
            w.left_word(torus_h(w.kind, lam.inverse()))


def _eliminate_odd(w, mu):
    l, ctx = w.l, w.ctx
    for _ in range(l + 2):
        rank = _step1_diagonalize_A(w)
        # E4 border clearing at the invertible part of A
        for i in range(1, rank + 1):
            xi = w.X(i)
            if xi:
                w.left(x_token(0, i, -(xi / w.A(i, i))))
        for i in range(1, rank + 1):
            ei = w.E(i)
            if ei:
                w.right(x_token(i, 0, -(ei / (ctx(2) * w.A(i, i)))))
        _step2_clear_C(w, rank, symplectic=False)
        if rank == l:
            break
        for i in range(rank + 1, l + 1):
            w.left_word(w_pair(w.kind, i))
    else:
        raise AssertionError("rank recovery did not terminate")
    for i in range(1, l + 1):
        assert not w.X(i) and not w.E(i), "border not cleared"
        for j in range(1, l + 1):
            assert not w.C(i, j), "C not cleared"
    _step3_clear_B(w, mu, symplectic=False)
    alpha = w.rows[0][0]
    nu = sqrt(mu)
    if nu is None:
        raise NotInGroupError("similitude factor has no square root")
    assert alpha * alpha == mu, "alpha^2 != mu"
    if alpha != nu:
        # net multiplier w[l] . w_pair(l) = diag(-1, 1, .., 1) flips alpha
        w.left_word(w_pair(w.kind, l))
        w.left(w_token(l))


def canonical_diagonal(kind, mu, lam, alpha=None):
    ctx = kind.ctx
    l = kind.l
    if kind.tag in {"gsp", "sp"}:
        entries = [ctx.one] * l + [mu] * l
    elif kind.tag in {"go-even", "o-even"}:
        entries = [ctx.one] * (l - 1) + [lam] + [mu] * (l - 1) + [mu / lam]
    else:
        entries = [alpha] + [ctx.one] * (l - 1) + [lam] + [mu] * (l - 1) + [mu / lam]
    return Matrix.diagonal(ctx, entries)


def decompose(g, kind):
    """Theorem-shaped decomposition of a similitude-group element."""
    if kind.tag not in {"gsp", "sp", "go-even", "o-even", "go-odd", "o-odd"}:
        raise ValueError(f"decompose does not handle kind {kind.tag!r}")
    mu = similitude(g, kind)
    if mu is None:
        raise NotInGroupError(f"matrix is not in {kind!r}")
    w = _Worker(g, kind)
    if kind.tag in ODD_TAGS:
        _eliminate_odd(w, mu)
        alpha = w.rows[0][0]
    else:
        _eliminate_even(w, mu, symplectic=kind.tag in {"gsp", "sp"})
        alpha = None
    lam = w.A(w.l, w.l)
    left, right = w.words()
    diagonal = Matrix(kind.ctx, w.rows)
    assert diagonal == canonical_diagonal(kind, mu, lam, alpha), \
        "diagonal is not in canonical shape"
    return Decomposition(kind, left, right, diagonal, mu, lam, alpha)


def verify(d, g):
    """Exact check: eval(left) . diagonal . eval(right) == g, and the
    diagonal has the canonical shape for d.kind."""
    try:
        expected = canonical_diagonal(d.kind, d.mu, d.lam, d.alpha)
    except (ZeroDivisionError, TypeError):
        return False
    if d.diagonal != expected:
        return False
    if d.kind.tag in ODD_TAGS:
        if d.alpha is None or d.alpha * d.alpha != d.mu:
            return False
    if d.kind.tag in {"sp", "o-even", "o-odd"}:
        if d.mu != d.kind.ctx.one:
            return False
        if d.kind.tag == "o-odd" and d.alpha != d.kind.ctx.one:
            return False
    if d.kind.tag == "sp" and d.lam != d.kind.ctx.one:
        return False
    return eval_word(d.left) * d.diagonal * eval_word(d.right) == g
