"""
The ring Z[x_1..x_n] / [h_1..h_n].

The ideal is rewritten as [h_1^n, h_2^{n-1}, ..., h_n^1] where h_k^b is the
degree-k complete homogeneous polynomial in x_1..x_b.  The generator
h_{n-t+1}^t contains x_t^{n-t+1}, so every monomial rewrites into the basis

    x_1^a_1 ... x_{n-1}^a_{n-1},   0 <= a_t <= n - t,

and x_n never survives.  The SU(n+1)/T^n ring Z[g_1..g_n]/[h_2..h_{n+1}] is
the same ring with n+1 variables restricted to monomials free of x_{n+1};
``su_reduce`` wraps that.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from functools import lru_cache
from types import MappingProxyType

from .combinatorics import enumerate_multisets
from .sympoly import IntPolynomial, complete_homogeneous


@dataclass(frozen=True)
class QuotientBasis:
    n: int
    by_degree: tuple

    def __len__(self):
        return sum(len(b) for b in self.by_degree)

    @property
    def top_degree(self):
        return len(self.by_degree) - 1


class QuotientElement:
    __slots__ = ("_coeffs",)

    def __init__(self, coeffs):
        self._coeffs = {tuple(k): int(v) for k, v in coeffs.items() if v}

    @property
    def basis_coefficients(self):
        return MappingProxyType(self._coeffs)

    def is_zero(self):
        return not self._coeffs

    def to_polynomial(self, num_vars):
        return IntPolynomial(num_vars, self._coeffs)

    def __eq__(self, other):
        if isinstance(other, QuotientElement):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __repr__(self):
        return f"QuotientElement({dict(sorted(self._coeffs.items(), reverse=True))!r})"


@lru_cache(maxsize=None)
def quotient_basis(n):
    if n < 1:
        raise ValueError("n must be at least 1")
    top = n * (n - 1) // 2
    by_degree = []
    for d in range(top + 1):
        mons = [m for m in enumerate_multisets(n, d)
                if all(a <= n - t for t, a in enumerate(m, 1))]
        by_degree.append(tuple(mons))
    return QuotientBasis(n, tuple(by_degree))


def poincare_counts(n):
    return tuple(len(b) for b in quotient_basis(n).by_degree)


class _Reducer:
    """Memoised monomial -> basis-coefficient map for one ring."""

    def __init__(self, n):
        self.n = n
        self.memo = {}
        self.lock = threading.Lock()
        # tail of the rewrite x_t^{n-t+1} = -(h_{n-t+1}^t - x_t^{n-t+1})
        self.tails = {}
        for t in range(1, n + 1):
            deg = n - t + 1
            h = complete_homogeneous(t, deg, num_vars=n)
            lead = tuple(deg if i == t - 1 else 0 for i in range(n))
            self.tails[t] = [(e, -c) for e, c in h.terms.items() if e != lead]

    def _violation(self, m):
        for t in range(self.n, 0, -1):
            if m[t - 1] >= self.n - t + 1:
                return t
        return None

    def _children(self, m, t):
        cut = self.n - t + 1
        base = list(m)
        base[t - 1] -= cut
        out = {}
        for e, c in self.tails[t]:
            child = tuple(a + b for a, b in zip(base, e))
            out[child] = out.get(child, 0) + c
        return out

    def monomial(self, m):
        m = tuple(m)
        with self.lock:
            if m in self.memo:
                return self.memo[m]
            stack = [m]
            while stack:
                cur = stack[-1]
                if cur in self.memo:
                    stack.pop()
                    continue
                t = self._violation(cur)
                if t is None:
                    self.memo[cur] = {cur: 1}
                    stack.pop()
                    continue
                kids = self._children(cur, t)
                todo = [k for k in kids if k not in self.memo]
                if todo:
                    stack.extend(todo)
                    continue
                acc = {}
                for k, c in kids.items():
                    for b, v in self.memo[k].items():
                        acc[b] = acc.get(b, 0) + c * v
                self.memo[cur] = {b: v for b, v in acc.items() if v}
                stack.pop()
            return self.memo[m]


@lru_cache(maxsize=None)
def _reducer(n):
    return _Reducer(n)


def reduce(p, n):
    """Normal form of p in Z[x_1..x_n]/[h_1..h_n] on the quotient basis."""
    if p.num_vars != n:
        raise ValueError(f"expected a polynomial in {n} variables")
    red = _reducer(n)
    acc = {}
    for e, c in p.terms.items():
        for b, v in red.monomial(e).items():
            acc[b] = acc.get(b, 0) + c * v
    return QuotientElement(acc)


def su_reduce(p):
    """Normal form in the SU(n+1)/T^n ring, p in n variables.

    Keys of the result are length-n exponent vectors with a_t <= n - t + 1.
    """
    n = p.num_vars
    red = _reducer(n + 1)
    acc = {}
    for e, c in p.terms.items():
        for b, v in red.monomial(e + (0,)).items():
            acc[b[:-1]] = acc.get(b[:-1], 0) + c * v
    return QuotientElement(acc)


def su_monomial_normal_form(m):
    """Cached normal form of one monomial of the SU ring (length-n exponents)."""
    red = _reducer(len(m) + 1)
    return {b[:-1]: v for b, v in red.monomial(tuple(m) + (0,)).items()}


def su_basis(n):
    """Quotient basis of the SU(n+1)/T^n ring by degree (n variables)."""
    return tuple(tuple(b[:-1] for b in level) for level in quotient_basis(n + 1).by_degree)


def top_class(n):
    """gamma-hat_empty for SU(n+1)/T^n: exponent n-t+1 on gamma_t."""
    return tuple(n - t + 1 for t in range(1, n + 1))


def zero_criterion(monomial, n):
    """Sufficient test that a monomial of the SU(n+1)/T^n ring is zero.

    Any k of the variables generate a subring whose top degree is
    n + (n-1) + ... + (n-k+1); so the monomial vanishes once the k largest
    exponents add up to more than that, for some k.
    """
    if len(monomial) != n:
        raise ValueError(f"expected {n} exponents")
    exps = sorted(monomial, reverse=True)
    running = bound = 0
    for k, c in enumerate(exps, 1):
        running += c
        bound += n - k + 1
        if running > bound:
            return True
    return False


def top_class_product(i, j, n):
    """c with gamma-hat_i * gamma_j = c * gamma-hat_empty."""
    if not (1 <= i <= n and 1 <= j <= n):
        raise ValueError("indices out of range")
    if j == i:
        return 1
    if j == i + 1:
        return -1
    return 0


def top_class_product_by_reduction(i, j, n):
    """The same coefficient, computed through the normal form."""
    top = top_class(n)
    m = list(top)
    m[i - 1] -= 1
    m[j - 1] += 1
    nf = su_monomial_normal_form(tuple(m))
    extra = set(nf) - {top}
    if extra:
        raise ArithmeticError(f"product left the top class: {sorted(extra)}")
    return nf.get(top, 0)


def permuted_basis_matrix(n, perm, degree):
    """Change-of-basis matrix from the basis to its image under a permutation.

    Row r holds the normal form of the r-th basis monomial with its variables
    permuted by ``perm`` (0-based targets).
    """
    basis = quotient_basis(n).by_degree[degree]
    idx = {b: k for k, b in enumerate(basis)}
    rows = []
    for b in basis:
        p = IntPolynomial.monomial(b).permute(perm)
        row = [0] * len(basis)
        for e, c in reduce(p, n).basis_coefficients.items():
            row[idx[e]] = c
        rows.append(row)
    return rows
