"""Exact field arithmetic: GF(p), GF(p^m) and arbitrary-precision rationals.

A `FieldCtx` fixes the field; `FieldElement` values carry a reference to
their ctx and are immutable.  Extension fields GF(p^m) are represented as
GF(p)[x] modulo a monic irreducible `modulus` (coefficient list, constant
term first).  When no modulus is given, the lexicographically smallest monic
irreducible of the requested degree is used (coefficients compared constant
term first), so serialized elements are reproducible across runs.

Canonical integer encoding of a finite-field element: the value itself for
GF(p), and sum(c_i * p^i) for an extension element with coefficients c_i.
Elements print in this encoding, and `FieldCtx.elements()` enumerates the
field in increasing encoding order.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

PRIME, EXTENSION, RATIONAL = "prime", "extension", "rational"


def _is_prime(p):
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


# -- polynomial helpers over GF(p), coefficient lists constant-first --------

def _poly_trim(c):
    while c and c[-1] == 0:
        c = c[:-1]
    return c


def _poly_mul_mod_p(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_trim(out)


def _poly_divmod_p(a, b, p):
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    inv_lb = pow(lb, p - 2, p)
    q = [0] * max(len(a) - db, 0)
    while len(_poly_trim(a)) - 1 >= db and _poly_trim(a):
        a = _poly_trim(a)
        if len(a) - 1 < db:
            break
        shift = len(a) - 1 - db
        factor = (a[-1] * inv_lb) % p
        q[shift] = factor
        for i, bi in enumerate(b):
            a[shift + i] = (a[shift + i] - factor * bi) % p
    return q, _poly_trim(a)


def _poly_irreducible_p(c, p):
    """Trial factor search: no monic divisor of degree 1..deg/2."""
    deg = len(c) - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            div = list(tail) + [1]
            _, r = _poly_divmod_p(c, div, p)
            if not r:
                return False
    return True


def _smallest_irreducible(p, m):
    for tail in itertools.product(range(p), repeat=m):
        cand = list(tail) + [1]
        if _poly_irreducible_p(cand, p):
            return cand
    raise ValueError(f"no irreducible of degree {m} over GF({p})")


class FieldCtx:
    """A prime field GF(p), an extension GF(p^m), or the rationals."""

    def __init__(self, kind, p=None, m=1, modulus=None):
        self.kind = kind
        if kind == RATIONAL:
            self.p = None
            self.m = None
            self.order = None
            self.modulus = None
            return
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.m = m
        self.order = p ** m
        if kind == PRIME:
            self.modulus = None
        else:
            if m < 2:
                raise ValueError("extension degree must be >= 2")
            if modulus is None:
                modulus = _smallest_irreducible(p, m)
            modulus = [c % p for c in modulus]
            if len(modulus) != m + 1 or modulus[-1] != 1:
                raise ValueError("modulus must be monic of degree m")
            if m <= 4 and not _poly_irreducible_p(modulus, p):
                raise ValueError("modulus is reducible")
            self.modulus = tuple(modulus)

    # -- constructors --------------------------------------------------------

    @staticmethod
    def prime(p):
        return FieldCtx(PRIME, p)

    @staticmethod
    def extension(p, m, modulus=None):
        return FieldCtx(EXTENSION, p, m, modulus)

    @staticmethod
    def rational():
        return FieldCtx(RATIONAL)

    @staticmethod
    def of_order(q):
        """GF(q) with the default modulus when q is a proper prime power."""
        p, m = _factor_prime_power(q)
        return FieldCtx.prime(p) if m == 1 else FieldCtx.extension(p, m)

    # -- element creation ----------------------------------------------------

    def __call__(self, value):
        """Coerce an int, Fraction, coefficient list, or element into self."""
        if isinstance(value, FieldElement):
            if value.ctx is not self:
                raise ValueError("mismatched field contexts")
            return value
        if self.kind == RATIONAL:
            return FieldElement(self, Fraction(value))
        if self.kind == PRIME:
            return FieldElement(self, int(value) % self.p)
        if isinstance(value, (list, tuple)):
            coeffs = [int(c) % self.p for c in value]
            if len(coeffs) > self.m:
                raise ValueError("coefficient vector too long")
            coeffs += [0] * (self.m - len(coeffs))
            return FieldElement(self, tuple(coeffs))
        # ints decode through the canonical encoding, negatives through -1*
        v = int(value)
        if v < 0:
            return -self(-v)
        coeffs = []
        for _ in range(self.m):
            coeffs.append(v % self.p)
            v //= self.p
        if v:
            raise ValueError("encoding out of range")
        return FieldElement(self, tuple(coeffs))

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def elements(self):
        """All field elements in increasing canonical encoding (finite only)."""
        if self.kind == RATIONAL:
            raise ValueError("rationals are not enumerable")
        return (self(v) for v in range(self.order))

    def units(self):
        if self.kind == RATIONAL:
            raise ValueError("rationals are not enumerable")
        return (self(v) for v in range(1, self.order))

    @property
    def char(self):
        return 0 if self.kind == RATIONAL else self.p

    def __eq__(self, other):
        return (isinstance(other, FieldCtx)
                and self.kind == other.kind
                and self.p == other.p
                and self.m == other.m
                and self.modulus == other.modulus)

    def __hash__(self):
        return hash((self.kind, self.p, self.m, self.modulus))

    def __repr__(self):
        if self.kind == RATIONAL:
            return "Q"
        if self.kind == PRIME:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.m})"

    # -- JSON spec -----------------------------------------------------------

    def to_json(self):
        if self.kind == RATIONAL:
            return {"rational": True}
        if self.kind == PRIME:
            return {"p": self.p}
        return {"p": self.p, "m": self.m, "modulus": list(self.modulus)}

    @staticmethod
    def from_json(obj):
        if obj.get("rational"):
            return FieldCtx.rational()
        p = obj["p"]
        m = obj.get("m", 1)
        if m == 1:
            return FieldCtx.prime(p)
        return FieldCtx.extension(p, m, obj.get("modulus"))


def _factor_prime_power(q):
    for p in range(2, q + 1):
        if q % p == 0:
            m = 0
            while q > 1:
                if q % p:
                    raise ValueError(f"{q * p**m} is not a prime power")
                q //= p
                m += 1
            if not _is_prime(p):
                raise ValueError("not a prime power")
            return p, m
    raise ValueError("bad order")


class FieldElement:
    """Immutable element of a FieldCtx; supports +, -, *, /, ** and ==."""

    __slots__ = ("ctx", "value")

    def __init__(self, ctx, value):
        self.ctx = ctx
        self.value = value

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.ctx != self.ctx:
                raise ValueError("mismatched field contexts")
            return other
        return self.ctx(other)

    def __add__(self, other):
        other = self._coerce(other)
        k = self.ctx.kind
        if k == PRIME:
            return FieldElement(self.ctx, (self.value + other.value) % self.ctx.p)
        if k == RATIONAL:
            return FieldElement(self.ctx, self.value + other.value)
        p = self.ctx.p
        return FieldElement(self.ctx, tuple((a + b) % p for a, b in zip(self.value, other.value)))

    __radd__ = __add__

    def __neg__(self):
        k = self.ctx.kind
        if k == PRIME:
            return FieldElement(self.ctx, (-self.value) % self.ctx.p)
        if k == RATIONAL:
            return FieldElement(self.ctx, -self.value)
        p = self.ctx.p
        return FieldElement(self.ctx, tuple((-a) % p for a in self.value))

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        k = self.ctx.kind
        if k == PRIME:
            return FieldElement(self.ctx, (self.value * other.value) % self.ctx.p)
        if k == RATIONAL:
            return FieldElement(self.ctx, self.value * other.value)
        p = self.ctx.p
        prod = _poly_mul_mod_p(list(self.value), list(other.value), p)
        if len(prod) > self.ctx.m:
            _, prod = _poly_divmod_p(prod, list(self.ctx.modulus), p)
        prod = list(prod) + [0] * (self.ctx.m - len(prod))
        return FieldElement(self.ctx, tuple(prod))

    __rmul__ = __mul__

    def inverse(self):
        if not self:
            raise ZeroDivisionError("field element has no inverse")
        k = self.ctx.kind
        if k == PRIME:
            return FieldElement(self.ctx, pow(self.value, self.ctx.p - 2, self.ctx.p))
        if k == RATIONAL:
            return FieldElement(self.ctx, 1 / self.value)
        return self ** (self.ctx.order - 2)

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        out = self.ctx.one
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __bool__(self):
        if self.ctx.kind == EXTENSION:
            return any(self.value)
        return self.value != 0

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            other = self.ctx(other)
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.ctx == other.ctx and self.value == other.value

    def __hash__(self):
        return hash((self.ctx, self.value))

    def encode(self):
        """Canonical integer encoding (finite fields only)."""
        k = self.ctx.kind
        if k == PRIME:
            return self.value
        if k == EXTENSION:
            out = 0
            for c in reversed(self.value):
                out = out * self.ctx.p + c
            return out
        raise ValueError("rationals have no integer encoding")

    def __repr__(self):
        if self.ctx.kind == RATIONAL:
            return str(self.value)
        return str(self.encode())

    def to_json(self):
        if self.ctx.kind == PRIME:
            return self.value
        if self.ctx.kind == EXTENSION:
            return list(self.value)
        return f"{self.value.numerator}/{self.value.denominator}"


def element_from_json(ctx, obj):
    if ctx.kind == RATIONAL and isinstance(obj, str):
        n, _, d = obj.partition("/")
        return ctx(Fraction(int(n), int(d) if d else 1))
    return ctx(obj)


def parse_element(ctx, text):
    """Parse the canonical element syntax: encoding int, or n/d for Q."""
    text = text.strip()
    if ctx.kind == RATIONAL:
        n, _, d = text.partition("/")
        return ctx(Fraction(int(n), int(d) if d else 1))
    return ctx(int(text))


# -- operations ---------------------------------------------------------------

def arith(a, b, op):
    """Dispatch form of the four field operations (CLI/JSON convenience)."""
    b = a._coerce(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown op {op!r}")


def frobenius(a):
    """x -> x^q on GF(q^2), the order-2 automorphism fixing GF(q).

    Requires the ctx to be an even-degree extension GF(p^(2k)); q = p^k.
    Prime-field elements viewed in such a ctx are fixed.
    """
    ctx = a.ctx
    if ctx.kind != EXTENSION or ctx.m % 2 != 0:
        raise ValueError("frobenius requires a quadratic-structured extension GF(q^2)")
    q = ctx.p ** (ctx.m // 2)
    return a ** q


class SquareClass:
    """A coset of k^x / k^x2.

    Over a finite field of odd order there are two classes; `rep` is 1 for
    the trivial class and the canonical non-residue (smallest encoding)
    otherwise.  Over the rationals `rep` is the squarefree integer part,
    with sign.
    """

    __slots__ = ("ctx", "trivial", "rep")

    def __init__(self, ctx, trivial, rep):
        self.ctx = ctx
        self.trivial = trivial
        self.rep = rep

    def __mul__(self, other):
        if self.ctx != other.ctx:
            raise ValueError("mismatched field contexts")
        if self.ctx.kind == RATIONAL:
            sf = _squarefree(self.rep * other.rep)
            return SquareClass(self.ctx, sf == 1, sf)
        triv = self.trivial == other.trivial
        return SquareClass(self.ctx, triv, 1 if triv else _nonresidue(self.ctx))

    def __eq__(self, other):
        return (isinstance(other, SquareClass) and self.ctx == other.ctx
                and self.trivial == other.trivial and self.rep == other.rep)

    def __hash__(self):
        return hash((self.ctx, self.trivial, self.rep))

    def __repr__(self):
        if self.trivial:
            return "[square]"
        return f"[nonsquare {self.rep}]"


def _squarefree(n):
    assert n != 0
    sign = -1 if n < 0 else 1
    n = abs(n)
    out = 1
    d = 2
    while d * d <= n:
        e = 0
        while n % d == 0:
            n //= d
            e += 1
        if e % 2:
            out *= d
        d += 1
    return sign * out * n


_NONRESIDUE_CACHE = {}


def _nonresidue(ctx):
    """Smallest-encoding non-residue of a finite field of odd order."""
    if ctx not in _NONRESIDUE_CACHE:
        e = (ctx.order - 1) // 2
        for a in ctx.units():
            if a ** e != ctx.one:
                _NONRESIDUE_CACHE[ctx] = a.encode()
                break
    return _NONRESIDUE_CACHE[ctx]


def square_class(a):
    """Euler-criterion square class of a nonzero element (odd q, or Q)."""
    if not a:
        raise ValueError("0 has no square class")
    ctx = a.ctx
    if ctx.kind == RATIONAL:
        v = a.value
        sf = _squarefree(v.numerator * v.denominator)
        return SquareClass(ctx, sf == 1, sf)
    if ctx.p == 2:
        raise ValueError("square classes need odd characteristic")
    if a ** ((ctx.order - 1) // 2) == ctx.one:
        return SquareClass(ctx, True, 1)
    return SquareClass(ctx, False, _nonresidue(ctx))


def trivial_class(ctx):
    return SquareClass(ctx, True, 1)


def sqrt(a):
    """Deterministic square root over GF(q), odd q: the smaller-encoding
    root of {r, -r}, or None when a is not a square.  Exhaustive search;
    all uses here have q <= 10^4."""
    ctx = a.ctx
    if ctx.kind == RATIONAL:
        raise ValueError("sqrt implemented for finite fields only")
    if ctx.p == 2:
        raise ValueError("sqrt needs odd characteristic")
    if not a:
        return ctx.zero
    for r in ctx.elements():
        if r * r == a:
            return r
    return None
