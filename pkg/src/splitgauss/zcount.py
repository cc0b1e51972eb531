"""Closed-form z-class counting for general linear and unitary groups.

The central series z(x) = prod_i (1 - x^i)^(-p(i)) counts z-classes of
GL(n) over an algebraically closed field; z(x) z(x^2) is the real row, and
prod_i z(x^i) is the finite-field row valid for q > n.  All coefficients
are exact big integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

MAX_TERMS = 64


@dataclass(frozen=True)
class Partition:
    """A partition of n as multiplicities: k[i] parts of size i+1."""

    multiplicities: tuple

    @property
    def n(self):
        return sum((i + 1) * k for i, k in enumerate(self.multiplicities))

    def __repr__(self):
        parts = []
        for i, k in enumerate(self.multiplicities):
            if k:
                parts.append(f"{i + 1}^{k}" if k > 1 else f"{i + 1}")
        return "(" + " ".join(parts) + ")" if parts else "()"


@dataclass(frozen=True)
class Series:
    """Truncated integer power series: coefficients c_0..c_N."""

    truncation: int
    coefficients: tuple

    def __getitem__(self, n):
        return self.coefficients[n]


def partitions(n):
    """All partitions of n as multiplicity vectors (k_1..k_n); complete and
    duplicate-free."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    out = []

    def rec(remaining, largest, mults):
        if remaining == 0:
            ks = [0] * n
            for part in mults:
                ks[part - 1] += 1
            out.append(Partition(tuple(ks)))
            return
        for part in range(min(largest, remaining), 0, -1):
            rec(remaining - part, part, mults + [part])

    rec(n, n if n else 1, [])
    return out


def partition_count(n):
    """p(n) by the standard coin-style dynamic program."""
    if n < 0:
        return 0
    table = [1] + [0] * n
    for part in range(1, n + 1):
        for total in range(part, n + 1):
            table[total] += table[total - part]
    return table[n]


def z_closed(n):
    """Number of z-classes of GL(n) over an algebraically closed field:
    sum over partitions (1^k1 .. n^kn) of prod_i C(p(i) + k_i - 1, k_i)."""
    if n < 1:
        raise ValueError("n must be positive")
    total = 0
    pvals = [partition_count(i) for i in range(n + 1)]
    for lam in partitions(n):
        term = 1
        for i, k in enumerate(lam.multiplicities, start=1):
            if k:
                term *= comb(pvals[i] + k - 1, k)
        total += term
    return total


def _series_mul(a, b, n_max):
    out = [0] * (n_max + 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if i + j > n_max:
                    break
                out[i + j] += ai * bj
    return out


def _closed_coeffs(n_max):
    """z(x) = prod_{i>=1} (1 - x^i)^(-p(i)) truncated at degree n_max."""
    out = [1] + [0] * n_max
    for i in range(1, n_max + 1):
        p_i = partition_count(i)
        # (1 - x^i)^(-p): sum_j C(p + j - 1, j) x^(i j)
        factor = [0] * (n_max + 1)
        for j in range(0, n_max // i + 1):
            factor[i * j] = comb(p_i + j - 1, j)
        out = _series_mul(out, factor, n_max)
    return out


def _substitute(coeffs, k, n_max):
    out = [0] * (n_max + 1)
    for i, c in enumerate(coeffs):
        if i * k > n_max:
            break
        out[i * k] = c
    return out


def series(kind, n_terms):
    """Truncated z-class generating series.

    kind: "closed" for the algebraically closed row, "real" for
    z(x) z(x^2), "finite_large_q" for prod_i z(x^i) (valid at coefficient n
    whenever q > n).
    """
    if not 1 <= n_terms <= MAX_TERMS:
        raise ValueError(f"terms must be in 1..{MAX_TERMS}")
    closed = _closed_coeffs(n_terms)
    if kind == "closed":
        out = closed
    elif kind == "real":
        out = _series_mul(closed, _substitute(closed, 2, n_terms), n_terms)
    elif kind == "finite_large_q":
        out = [1] + [0] * n_terms
        for i in range(1, n_terms + 1):
            out = _series_mul(out, _substitute(closed, i, n_terms), n_terms)
    else:
        raise ValueError(f"unknown series kind {kind!r}")
    return Series(n_terms, tuple(out))


def u_compact(n):
    """z-classes of the compact unitary group on n+1 letters: p(n+1)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return partition_count(n + 1)


def u_lorentz(n):
    """z-class counts in the rank-(n,1) unitary group by element type:
    hyperbolic p(n-1); elliptic sum_{m=1}^{n+1} p(n+1-m); parabolic
    2 + p(n-1) + p(n-2), stated for n >= 2."""
    if n < 2:
        raise ValueError("the parabolic formula is stated for n >= 2")
    return {
        "hyperbolic": partition_count(n - 1),
        "elliptic": sum(partition_count(n + 1 - m) for m in range(1, n + 2)),
        "parabolic": 2 + partition_count(n - 1) + partition_count(n - 2),
    }
