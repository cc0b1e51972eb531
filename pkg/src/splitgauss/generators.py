"""Elementary generators of the split classical groups, and words in them.

A token is written x[a,b](t) where a, b are signed block indices (1..l,
-1..-l, plus 0 in odd dimension), or w[l].  The matrix of each legal token:

    gsp :  x[i,j](t)  = I + t(e_{i,j} - e_{-j,-i})       i != j
           x[i,-j](t) = I + t(e_{i,-j} + e_{j,-i})       i < j
           x[-i,j](t) = I + t(e_{-i,j} + e_{-j,i})       i < j
           x[i,-i](t) = I + t e_{i,-i}
           x[-i,i](t) = I + t e_{-i,i}
    go   : x[i,j](t)  = I + t(e_{i,j} - e_{-j,-i})       i != j
           x[i,-j](t) = I + t(e_{i,-j} - e_{j,-i})       i < j
           x[-i,j](t) = I + t(e_{-i,j} - e_{-j,i})       i < j
           w[l]       = I - e_{l,l} - e_{-l,-l} - e_{l,-l} - e_{-l,l}
    go-odd additionally:
           x[i,0](t)  = I + t(2e_{i,0} - e_{0,-i}) - t^2 e_{i,-i}
           x[0,i](t)  = I + t(-2e_{-i,0} + e_{0,i}) - t^2 e_{-i,i}

Words evaluate left-to-right; the empty word is the identity.  Additive
families obey x(s)x(t) = x(s+t), so token inverses stay in the family.

Serialized word text is whitespace-separated tokens, with parameters in the
field's canonical element syntax.  The parser additionally accepts the
macro h[i](t), expanding to the six-token torus word x[i,-i](t) x[-i,i](-1/t)
x[i,-i](t) x[i,-i](-1) x[-i,i](1) x[i,-i](-1); the formatter never emits it.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

from .field import parse_element
from .forms import GroupKind, ORTHOGONAL_TAGS, ODD_TAGS
from .linalg import Matrix, paper_index


@dataclass(frozen=True)
class GeneratorToken:
    kind: str                # "x" | "w"
    a: int                   # signed block row index (w: the index l)
    b: int = 0               # signed block column index (unused for w)
    t: object = None         # FieldElement parameter (None for w)

    def inverse(self):
        if self.kind == "w":
            return self
        return GeneratorToken("x", self.a, self.b, -self.t)

    def __repr__(self):
        if self.kind == "w":
            return f"w[{self.a}]"
        return f"x[{self.a},{self.b}]({self.t!r})"


def x_token(a, b, t):
    return GeneratorToken("x", a, b, t)


def w_token(l):
    return GeneratorToken("w", l)


@dataclass(frozen=True)
class Word:
    kind: GroupKind
    tokens: tuple

    def __len__(self):
        return len(self.tokens)

    def inverse(self):
        return Word(self.kind, tuple(t.inverse() for t in reversed(self.tokens)))

    def __repr__(self):
        return format_word(self)


def _check_token(kind, tok):
    tag, l = kind.tag, kind.l
    odd = tag in ODD_TAGS
    if tok.kind == "w":
        if tag not in ORTHOGONAL_TAGS:
            raise ValueError("w tokens exist only in orthogonal kinds")
        if tok.a != l:
            raise ValueError(f"w index must be l={l}")
        return
    a, b = tok.a, tok.b
    rng = range(-l, l + 1)
    if a not in rng or b not in rng:
        raise ValueError(f"index out of range for l={l}")
    if a == 0 or b == 0:
        if not odd:
            raise ValueError("index 0 tokens exist only in odd orthogonal kinds")
        if a == b or (a < 0 or b < 0):
            raise ValueError("illegal 0-index token")
        return
    if a > 0 and b > 0:
        if a == b:
            raise ValueError("x[i,i] is not a generator")
        return
    if a < 0 and b < 0:
        raise ValueError("illegal token: both indices negative")
    i, j = (a, -b) if a > 0 else (-a, b)
    if i == j:
        if tag not in {"gsp", "sp"}:
            raise ValueError("x[i,-i] tokens exist only in symplectic kinds")
        return
    if i > j:
        raise ValueError("cross tokens need i < j")


def token_terms(kind, tok):
    """The token matrix as I + sum(coeff * e_{row,col}) in machine indices."""
    _check_token(kind, tok)
    tag, l = kind.tag, kind.l
    odd = tag in ODD_TAGS
    ctx = kind.ctx

    def m(idx):
        return paper_index(idx, l, odd)

    if tok.kind == "w":
        mo = ctx(-1)
        return [(m(l), m(l), mo), (m(-l), m(-l), mo), (m(l), m(-l), mo), (m(-l), m(l), mo)]
    a, b, t = tok.a, tok.b, ctx(tok.t)
    symplectic = tag in {"gsp", "sp"}
    if a > 0 and b > 0:
        return [(m(a), m(b), t), (m(-b), m(-a), -t)]
    if b == 0:
        i = a
        return [(m(i), m(0), 2 * t), (m(0), m(-i), -t), (m(i), m(-i), -(t * t))]
    if a == 0:
        i = b
        return [(m(-i), m(0), -(2 * t)), (m(0), m(i), t), (m(-i), m(i), -(t * t))]
    if a > 0 and b < 0:
        i, j = a, -b
        if i == j:
            return [(m(i), m(-i), t)]
        sgn = t if symplectic else -t
        return [(m(i), m(-j), t), (m(j), m(-i), sgn)]
    i, j = -a, b
    if i == j:
        return [(m(-i), m(i), t)]
    sgn = t if symplectic else -t
    return [(m(-i), m(j), t), (m(-j), m(i), sgn)]


def elementary(kind, tok):
    """Exact matrix of a single generator token."""
    n = kind.dim
    rows = [[kind.ctx.one if i == j else kind.ctx.zero for j in range(n)] for i in range(n)]
    for r, c, coeff in token_terms(kind, tok):
        rows[r][c] = rows[r][c] + coeff
    return Matrix(kind.ctx, rows)


# -- fast in-place application (rows for left products, cols for right) -------

def apply_token_left(rows, kind, tok):
    """rows <- M(tok) . rows, touching only the rows M acts on."""
    terms = token_terms(kind, tok)
    targets = {r for r, _, _ in terms}
    new_rows = {r: list(rows[r]) for r in targets}
    for r, c, coeff in terms:
        src = rows[c]
        dst = new_rows[r]
        for k in range(len(src)):
            if src[k]:
                dst[k] = dst[k] + coeff * src[k]
    for r, vals in new_rows.items():
        rows[r] = vals


def apply_token_right(rows, kind, tok):
    """rows <- rows . M(tok), touching only the columns M acts on."""
    terms = token_terms(kind, tok)
    targets = {c for _, c, _ in terms}
    n = len(rows)
    new_cols = {c: [rows[i][c] for i in range(n)] for c in targets}
    for r, c, coeff in terms:
        col = new_cols[c]
        for i in range(n):
            v = rows[i][r]
            if v:
                col[i] = col[i] + v * coeff
    for c, col in new_cols.items():
        for i in range(n):
            rows[i][c] = col[i]


def eval_word(w):
    """Left-to-right product of the token matrices; empty word -> identity."""
    ctx = w.kind.ctx
    n = w.kind.dim
    rows = [[ctx.one if i == j else ctx.zero for j in range(n)] for i in range(n)]
    for tok in w.tokens:
        apply_token_right(rows, w.kind, tok)
    return Matrix(ctx, rows)


# -- derived words -------------------------------------------------------------

@lru_cache(maxsize=None)
def _w_pair_tokens(tag, l, i, ctx):
    one = ctx.one
    if tag in {"gsp", "sp"}:
        return (x_token(i, -i, one), x_token(-i, i, -one), x_token(i, -i, one))
    if tag in ODD_TAGS:
        return (x_token(0, i, -one), x_token(i, 0, one), x_token(0, i, -one))
    # even orthogonal: w_{l,-l} is the w token; lower indices are built
    # inductively from w_{j,-j} w_{j,j-1}-type and w_{j,-(j-1)}-type triples
    if i == l:
        return (w_token(l),)
    j = i + 1
    prev = _w_pair_tokens(tag, l, j, ctx)
    plane = (x_token(j, i, one), x_token(i, j, -one), x_token(j, i, one))
    cross = (x_token(i, -j, -one), x_token(-i, j, -one), x_token(i, -j, -one))
    return prev + plane + cross


def w_pair(kind, i):
    """Word for the index swap w_{i,-i}:

        gsp:    I + e_{i,-i} - e_{-i,i} - e_{i,i} - e_{-i,-i}
        o-even: I - e_{i,-i} - e_{-i,i} - e_{i,i} - e_{-i,-i}
        o-odd:  I - 2 e_{0,0} - e_{i,-i} - e_{-i,i} - e_{i,i} - e_{-i,-i}
    """
    if not 1 <= i <= kind.l:
        raise ValueError("index out of range")
    return Word(kind, _w_pair_tokens(kind.tag, kind.l, i, kind.ctx))


def w_pair_matrix(kind, i):
    """Closed form of w_{i,-i} (what the w_pair word evaluates to)."""
    ctx = kind.ctx
    n = kind.dim
    odd = kind.tag in ODD_TAGS
    rows = [[ctx.one if r == c else ctx.zero for c in range(n)] for r in range(n)]
    mi = paper_index(i, kind.l, odd)
    mn = paper_index(-i, kind.l, odd)
    rows[mi][mi] = ctx.zero
    rows[mn][mn] = ctx.zero
    plus = ctx.one if kind.tag in {"gsp", "sp"} else ctx(-1)
    rows[mi][mn] = plus
    rows[mn][mi] = ctx(-1)
    if odd:
        rows[0][0] = ctx(-1)
    return Matrix(ctx, rows)


def torus_word(kind, i, lam):
    """Word evaluating to diag(.., lam at i, .., 1/lam at -i, ..) via
    h_i(lam) = w_{i,-i}(lam) w_{i,-i}(-1); symplectic kinds only."""
    if kind.tag not in {"gsp", "sp"}:
        raise ValueError("torus words use symplectic x[i,-i] tokens")
    lam = kind.ctx(lam)
    if not lam:
        raise ValueError("lambda must be nonzero")
    one = kind.ctx.one

    def half(t):
        return (x_token(i, -i, t), x_token(-i, i, -t.inverse()), x_token(i, -i, t))

    return Word(kind, half(lam) + half(-one))


def torus_h(kind, lam):
    """Lemma-style torus word at the last index: evaluates to
    diag(1,..,1,lam, 1,..,1, lam^{-1})."""
    return torus_word(kind, kind.l, lam)


# -- text format ----------------------------------------------------------------

_TOKEN_RE = re.compile(r"^(x|w|h)\[(-?\d+)(?:,(-?\d+))?\](?:\((.+)\))?$")


def format_token(tok):
    if tok.kind == "w":
        return f"w[{tok.a}]"
    return f"x[{tok.a},{tok.b}]({tok.t!r})"


def format_word(w):
    return " ".join(format_token(t) for t in w.tokens)


def parse_word(kind, text):
    """Parse whitespace-separated tokens; round-trips format_word output."""
    tokens = []
    for piece in text.split():
        mt = _TOKEN_RE.match(piece)
        if not mt:
            raise ValueError(f"bad token {piece!r}")
        head, a_s, b_s, t_s = mt.groups()
        a = int(a_s)
        if head == "w":
            tokens.append(w_token(a))
            continue
        if t_s is None:
            raise ValueError(f"bad token {piece!r}")
        t = parse_element(kind.ctx, t_s)
        if head == "h":
            tokens.extend(torus_word(kind, a, t).tokens)
            continue
        if b_s is None:
            raise ValueError(f"bad token {piece!r}")
        tokens.append(x_token(a, int(b_s), t))
    w = Word(kind, tuple(tokens))
    for tok in w.tokens:
        _check_token(kind, tok)
    return w
