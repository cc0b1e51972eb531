"""Dense exact matrices over a FieldCtx.

Row/column index convention used throughout the package: for even size
n = 2l the block indices 1..l, -1..-l map to machine rows 0..l-1, l..2l-1;
for odd size n = 2l+1 the indices 0, 1..l, -1..-l map to machine rows 0,
1..l, l+1..2l.  `paper_index` performs the translation.

All eliminations share one pivot rule: first nonzero entry scanning
top-to-bottom in the leftmost unfinished column.
"""

from __future__ import annotations

from .field import FieldCtx, element_from_json


def paper_index(idx, l, odd):
    """Machine row/column for a block index (1..l, -1..-l, and 0 when odd)."""
    if odd:
        if idx == 0:
            return 0
        if 1 <= idx <= l:
            return idx
        if -l <= idx <= -1:
            return l - idx
    else:
        if 1 <= idx <= l:
            return idx - 1
        if -l <= idx <= -1:
            return l - idx - 1
    raise ValueError(f"index {idx} out of range for l={l}")


class Matrix:
    """Immutable dense matrix; entries are FieldElements sharing one ctx."""

    __slots__ = ("ctx", "nrows", "ncols", "rows")

    def __init__(self, ctx, rows):
        self.ctx = ctx
        self.rows = tuple(tuple(ctx(e) for e in row) for row in rows)
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else 0
        for row in self.rows:
            if len(row) != self.ncols:
                raise ValueError("ragged rows")

    # -- constructors ---------------------------------------------------------

    @staticmethod
    def identity(ctx, n):
        return Matrix(ctx, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @staticmethod
    def zeros(ctx, nrows, ncols=None):
        ncols = nrows if ncols is None else ncols
        return Matrix(ctx, [[0] * ncols for _ in range(nrows)])

    @staticmethod
    def diagonal(ctx, entries):
        n = len(entries)
        return Matrix(ctx, [[entries[i] if i == j else ctx.zero for j in range(n)]
                            for i in range(n)])

    @staticmethod
    def unit(ctx, n, i, j, t=1):
        """t * e_{i,j}: t at machine position (i, j), zero elsewhere."""
        rows = [[ctx.zero] * n for _ in range(n)]
        rows[i][j] = ctx(t)
        return Matrix(ctx, rows)

    @staticmethod
    def column(ctx, entries):
        return Matrix(ctx, [[e] for e in entries])

    # -- access ---------------------------------------------------------------

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def col(self, j):
        return [self.rows[i][j] for i in range(self.nrows)]

    def is_square(self):
        return self.nrows == self.ncols

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.ctx == other.ctx
                and self.rows == other.rows)

    def __hash__(self):
        return hash((self.ctx, self.rows))

    def __repr__(self):
        body = "; ".join(" ".join(repr(e) for e in row) for row in self.rows)
        return f"[{body}]"

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other):
        self._check_same_shape(other)
        return Matrix(self.ctx, [[a + b for a, b in zip(r1, r2)]
                                 for r1, r2 in zip(self.rows, other.rows)])

    def __sub__(self, other):
        self._check_same_shape(other)
        return Matrix(self.ctx, [[a - b for a, b in zip(r1, r2)]
                                 for r1, r2 in zip(self.rows, other.rows)])

    def __neg__(self):
        return Matrix(self.ctx, [[-a for a in row] for row in self.rows])

    def _check_same_shape(self, other):
        if self.ctx != other.ctx:
            raise ValueError("mismatched field contexts")
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("shape mismatch")

    def __mul__(self, other):
        if not isinstance(other, Matrix):
            c = self.ctx(other)
            return Matrix(self.ctx, [[c * a for a in row] for row in self.rows])
        if self.ctx != other.ctx:
            raise ValueError("mismatched field contexts")
        if self.ncols != other.nrows:
            raise ValueError("dimension mismatch")
        cols = list(zip(*other.rows)) if other.rows else []
        zero = self.ctx.zero
        out = []
        for row in self.rows:
            orow = []
            for col in cols:
                s = zero
                for a, b in zip(row, col):
                    if a and b:
                        s = s + a * b
                orow.append(s)
            out.append(orow)
        return Matrix(self.ctx, out)

    def __rmul__(self, other):
        c = self.ctx(other)
        return Matrix(self.ctx, [[c * a for a in row] for row in self.rows])

    def transpose(self):
        return Matrix(self.ctx, list(zip(*self.rows)) if self.rows else [])

    def conj(self):
        """Entrywise Frobenius conjugate (GF(q^2) contexts)."""
        from .field import frobenius
        return Matrix(self.ctx, [[frobenius(a) for a in row] for row in self.rows])

    def map(self, fn):
        return Matrix(self.ctx, [[fn(a) for a in row] for row in self.rows])

    # -- elimination kernels ----------------------------------------------------

    def _echelon(self):
        """(working rows, pivot column list); leftmost-pivot, top-down rule."""
        work = [list(row) for row in self.rows]
        pivots = []
        r = 0
        for c in range(self.ncols):
            pr = None
            for i in range(r, self.nrows):
                if work[i][c]:
                    pr = i
                    break
            if pr is None:
                continue
            work[r], work[pr] = work[pr], work[r]
            inv = work[r][c].inverse()
            work[r] = [inv * x for x in work[r]]
            for i in range(self.nrows):
                if i != r and work[i][c]:
                    f = work[i][c]
                    work[i] = [x - f * y for x, y in zip(work[i], work[r])]
            pivots.append(c)
            r += 1
            if r == self.nrows:
                break
        return work, pivots

    def rank(self):
        return len(self._echelon()[1])

    def column_basis(self):
        """Original columns at echelon pivot positions (leftmost-pivot rule)."""
        _, pivots = self._echelon()
        return [Matrix.column(self.ctx, self.col(c)) for c in pivots]

    def det(self):
        if not self.is_square():
            raise ValueError("determinant of a non-square matrix")
        work = [list(row) for row in self.rows]
        n = self.nrows
        det = self.ctx.one
        for c in range(n):
            pr = None
            for i in range(c, n):
                if work[i][c]:
                    pr = i
                    break
            if pr is None:
                return self.ctx.zero
            if pr != c:
                work[c], work[pr] = work[pr], work[c]
                det = -det
            det = det * work[c][c]
            inv = work[c][c].inverse()
            for i in range(c + 1, n):
                if work[i][c]:
                    f = work[i][c] * inv
                    work[i] = [x - f * y for x, y in zip(work[i], work[c])]
        return det

    def inverse(self):
        if not self.is_square():
            raise ValueError("inverse of a non-square matrix")
        n = self.nrows
        work = [list(row) + [self.ctx.one if i == j else self.ctx.zero for j in range(n)]
                for i, row in enumerate(self.rows)]
        r = 0
        for c in range(n):
            pr = None
            for i in range(r, n):
                if work[i][c]:
                    pr = i
                    break
            if pr is None:
                raise ZeroDivisionError("singular matrix")
            work[r], work[pr] = work[pr], work[r]
            inv = work[r][c].inverse()
            work[r] = [inv * x for x in work[r]]
            for i in range(n):
                if i != r and work[i][c]:
                    f = work[i][c]
                    work[i] = [x - f * y for x, y in zip(work[i], work[r])]
            r += 1
        return Matrix(self.ctx, [row[n:] for row in work])

    def solve_preimage(self, v):
        """A solution y of self*y = v, or None when inconsistent.

        Deterministic: free variables are set to 0 under the fixed pivot
        order.  `v` is a column Matrix or a list of entries.
        """
        if isinstance(v, Matrix):
            if v.ncols != 1:
                raise ValueError("right side must be a column")
            vent = [v[i, 0] for i in range(v.nrows)]
        else:
            vent = [self.ctx(e) for e in v]
        if len(vent) != self.nrows:
            raise ValueError("dimension mismatch")
        aug = [list(row) + [vent[i]] for i, row in enumerate(self.rows)]
        pivots = []
        r = 0
        for c in range(self.ncols):
            pr = None
            for i in range(r, self.nrows):
                if aug[i][c]:
                    pr = i
                    break
            if pr is None:
                continue
            aug[r], aug[pr] = aug[pr], aug[r]
            inv = aug[r][c].inverse()
            aug[r] = [inv * x for x in aug[r]]
            for i in range(self.nrows):
                if i != r and aug[i][c]:
                    f = aug[i][c]
                    aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
            pivots.append(c)
            r += 1
            if r == self.nrows:
                break
        for i in range(r, self.nrows):
            if aug[i][self.ncols]:
                return None
        y = [self.ctx.zero] * self.ncols
        for i, c in enumerate(pivots):
            y[c] = aug[i][self.ncols]
        return Matrix.column(self.ctx, y)

    # -- JSON -----------------------------------------------------------------

    def to_json(self):
        return {"field": self.ctx.to_json(),
                "rows": [[e.to_json() for e in row] for row in self.rows]}

    @staticmethod
    def from_json(obj, ctx=None):
        if ctx is None:
            ctx = FieldCtx.from_json(obj["field"])
        rows = [[element_from_json(ctx, e) for e in row] for row in obj["rows"]]
        return Matrix(ctx, rows)


def mul(a, b):
    return a * b


def inverse(a):
    return a.inverse()


def det(a):
    return a.det()


def solve_preimage(a, v):
    return a.solve_preimage(v)


def column_basis(a):
    return a.column_basis()
