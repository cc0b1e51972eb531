"""Seeded random elements of the split classical groups.

Elements are sampled as products of random generator tokens times a random
legal diagonal, which guarantees membership by construction and reaches the
whole group: every element is a word times a Theorem-shaped diagonal.
"""

from __future__ import annotations

from .field import sqrt
from .forms import ODD_TAGS
from .generators import Word, eval_word, w_token, x_token
from .linalg import Matrix


def legal_tokens(kind):
    """All token shapes for a kind, parameter slots left open: returns a
    list of (a, b) pairs plus a bool for whether w[l] exists."""
    l = kind.l
    pairs = []
    for i in range(1, l + 1):
        for j in range(1, l + 1):
            if i != j:
                pairs.append((i, j))
            if i < j:
                pairs.append((i, -j))
                pairs.append((-i, j))
    if kind.tag in {"gsp", "sp"}:
        for i in range(1, l + 1):
            pairs.append((i, -i))
            pairs.append((-i, i))
    if kind.tag in ODD_TAGS:
        for i in range(1, l + 1):
            pairs.append((i, 0))
            pairs.append((0, i))
    has_w = kind.tag in {"go-even", "o-even", "go-odd", "o-odd"}
    return pairs, has_w


def random_unit(ctx, rng):
    return ctx(1 + rng.below(ctx.order - 1))


def random_word(kind, rng, min_tokens=20, max_tokens=60):
    pairs, has_w = legal_tokens(kind)
    n_tok = rng.randint(min_tokens, max_tokens)
    tokens = []
    for _ in range(n_tok):
        if has_w and rng.below(len(pairs) + 1) == 0:
            tokens.append(w_token(kind.l))
        else:
            a, b = rng.choice(pairs)
            tokens.append(x_token(a, b, random_unit(kind.ctx, rng)))
    return Word(kind, tuple(tokens))


def random_legal_diagonal(kind, rng):
    """A random member of the torus of Theorem-shaped diagonals."""
    ctx = kind.ctx
    l = kind.l
    if kind.tag in {"gsp", "go-even", "go-odd"}:
        mu = random_unit(ctx, rng)
        if kind.tag == "go-odd":
            nu = random_unit(ctx, rng)
            mu = nu * nu
            alpha = nu if rng.below(2) else -nu
    else:
        mu = ctx.one
        if kind.tag == "o-odd":
            alpha = ctx.one if rng.below(2) else ctx(-1)
    a = [random_unit(ctx, rng) for _ in range(l)]
    entries = a + [mu / ai for ai in a]
    if kind.tag in ODD_TAGS:
        entries = [alpha] + entries
    return Matrix.diagonal(ctx, entries)


def random_element(kind, rng, min_tokens=20, max_tokens=60):
    """Random similitude-group member: word evaluation times a diagonal."""
    word = random_word(kind, rng, min_tokens, max_tokens)
    return eval_word(word) * random_legal_diagonal(kind, rng)
