"""
Sparse integer polynomials and the symmetric families built from them.

A polynomial is a map from exponent vectors to nonzero integers.  Printing
uses the generator names g1..gn and lists terms by decreasing degree, then
lexicographically decreasing exponents.

>>> print(elementary_symmetric(3, 2))
1 * g1 g2 + 1 * g1 g3 + 1 * g2 g3
>>> decompose_into_elementary(complete_homogeneous(2, 2))
{Partition(parts=(1, 1)): 1, Partition(parts=(2,)): -1}
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from types import MappingProxyType

from .combinatorics import enumerate_multisets, multiset_index
from .exactmat import IntMatrix, hermite_rows, in_row_span


class IntPolynomial:
    __slots__ = ("num_vars", "_terms", "_hash")

    def __init__(self, num_vars, terms=None):
        self.num_vars = num_vars
        clean = {}
        for exp, c in (terms or {}).items():
            exp = tuple(exp)
            if len(exp) != num_vars:
                raise ValueError(f"exponent {exp} has wrong length for {num_vars} variables")
            if c:
                clean[exp] = int(c)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, num_vars, terms):
        p = cls.__new__(cls)
        p.num_vars = num_vars
        p._terms = {e: c for e, c in terms.items() if c}
        p._hash = None
        return p

    @classmethod
    def constant(cls, num_vars, c=1):
        return cls._raw(num_vars, {(0,) * num_vars: c})

    @classmethod
    def monomial(cls, exps, c=1):
        return cls._raw(len(exps), {tuple(exps): c})

    @classmethod
    def variable(cls, i, num_vars):
        """The generator g_i (1-based)."""
        e = [0] * num_vars
        e[i - 1] = 1
        return cls.monomial(e)

    @property
    def terms(self):
        return MappingProxyType(self._terms)

    def is_zero(self):
        return not self._terms

    def degree(self):
        return max((sum(e) for e in self._terms), default=-1)

    def is_homogeneous(self):
        return len({sum(e) for e in self._terms}) <= 1

    def coefficient(self, exps):
        return self._terms.get(tuple(exps), 0)

    def _coerce(self, other):
        if isinstance(other, IntPolynomial):
            if other.num_vars != self.num_vars:
                raise ValueError("variable count mismatch")
            return other
        if isinstance(other, int):
            return IntPolynomial.constant(self.num_vars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return IntPolynomial._raw(self.num_vars, out)

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial._raw(self.num_vars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial._raw(self.num_vars, {e: c * other for e, c in self._terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = defaultdict(int)
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[tuple(a + b for a, b in zip(e1, e2))] += c1 * c2
        return IntPolynomial._raw(self.num_vars, out)

    __rmul__ = __mul__

    def __pow__(self, k):
        out = IntPolynomial.constant(self.num_vars)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPolynomial.constant(self.num_vars, other)
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.num_vars == other.num_vars and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num_vars, frozenset(self._terms.items())))
        return self._hash

    def embed(self, num_vars):
        """Same polynomial viewed in more variables (appended at the end)."""
        if num_vars < self.num_vars:
            raise ValueError("cannot embed into fewer variables")
        pad = (0,) * (num_vars - self.num_vars)
        return IntPolynomial._raw(num_vars, {e + pad: c for e, c in self._terms.items()})

    def restrict(self, num_vars):
        """Drop trailing variables, which must not occur."""
        if any(any(e[num_vars:]) for e in self._terms):
            raise ValueError("a dropped variable occurs in the polynomial")
        return IntPolynomial._raw(num_vars, {e[:num_vars]: c for e, c in self._terms.items()})

    def permute(self, perm):
        """Substitute g_i -> g_perm[i] (perm is a tuple of 0-based targets)."""
        out = {}
        for e, c in self._terms.items():
            new = [0] * self.num_vars
            for i, a in enumerate(e):
                new[perm[i]] = a
            out[tuple(new)] = c
        return IntPolynomial._raw(self.num_vars, out)

    def substitute(self, i, value):
        """Replace g_i (1-based) by the polynomial ``value``."""
        out = IntPolynomial(self.num_vars)
        for e, c in self._terms.items():
            rest = list(e)
            k = rest[i - 1]
            rest[i - 1] = 0
            out = out + IntPolynomial.monomial(rest, c) * value ** k
        return out

    def sorted_terms(self):
        return sorted(self._terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def __str__(self):
        if not self._terms:
            return "0"
        pieces = []
        for exps, c in self.sorted_terms():
            mono = " ".join(
                f"g{i}" if a == 1 else f"g{i}^{a}"
                for i, a in enumerate(exps, 1) if a
            )
            body = f"{abs(c)} * {mono}" if mono else f"{abs(c)}"
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(("+ " if c > 0 else "- ") + body)
        return " ".join(pieces)

    def __repr__(self):
        return f"IntPolynomial({self.num_vars}, {dict(self.sorted_terms())!r})"


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p <= 0 for p in parts):
            raise ValueError("parts must be positive")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError("parts must be weakly decreasing")
        object.__setattr__(self, "parts", parts)

    @property
    def weight(self):
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def conjugate(self):
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for p in self.parts if p > i) for i in range(self.parts[0])))


def partitions(weight, max_part=None):
    """All partitions of ``weight``, largest first part first."""
    if max_part is None:
        max_part = weight
    if weight == 0:
        yield Partition(())
        return
    for first in range(min(weight, max_part), 0, -1):
        for rest in partitions(weight - first, first):
            yield Partition((first,) + rest.parts)


def elementary_symmetric(n, l):
    if l > n or l < 0:
        raise ValueError(f"sigma_{l} needs 0 <= l <= {n}")
    terms = {}
    for idx in combinations(range(n), l):
        e = [0] * n
        for i in idx:
            e[i] = 1
        terms[tuple(e)] = 1
    return IntPolynomial._raw(n, terms)


def complete_homogeneous(b, l, num_vars=None):
    """h_l in the first b variables, optionally embedded in ``num_vars``."""
    if b < 1 or l < 0:
        raise ValueError("need b >= 1 and l >= 0")
    num_vars = b if num_vars is None else num_vars
    pad = (0,) * (num_vars - b)
    return IntPolynomial._raw(num_vars, {m + pad: 1 for m in enumerate_multisets(b, l)})


def monomial_symmetric(mu, n):
    mu = mu if isinstance(mu, Partition) else Partition(tuple(mu))
    if len(mu) > n:
        raise ValueError("partition has more parts than variables")
    base = mu.parts + (0,) * (n - len(mu))
    return IntPolynomial._raw(n, {e: 1 for e in set(permutations(base))})


def elementary_product(lam, n):
    """sigma_lambda = prod of sigma_{lambda_i} in n variables."""
    out = IntPolynomial.constant(n)
    for part in lam.parts:
        out = out * elementary_symmetric(n, part)
    return out


def complete_product(lam, n):
    out = IntPolynomial.constant(n)
    for part in lam.parts:
        out = out * complete_homogeneous(n, part)
    return out


def count_row_col_matrices(lam, mu):
    """Non-negative integer matrices with row sums lam and column sums mu."""
    lam = lam if isinstance(lam, Partition) else Partition(tuple(lam))
    mu = mu if isinstance(mu, Partition) else Partition(tuple(mu))
    if lam.weight != mu.weight:
        raise ValueError("partitions must have equal weight")

    @lru_cache(maxsize=None)
    def count(row, remaining):
        if row == len(lam.parts):
            return int(not any(remaining))
        total = 0
        for split in _compositions_bounded(lam.parts[row], remaining):
            total += count(row + 1, tuple(r - s for r, s in zip(remaining, split)))
        return total

    return count(0, mu.parts)


def _compositions_bounded(total, caps):
    if not caps:
        if total == 0:
            yield ()
        return
    for first in range(min(total, caps[0]), -1, -1):
        for rest in _compositions_bounded(total - first, caps[1:]):
            yield (first,) + rest


def is_symmetric(p):
    n = p.num_vars
    for i in range(n - 1):
        perm = list(range(n))
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
        if p.permute(perm) != p:
            return False
    return True


def decompose_into_elementary(p):
    """Coefficients c with p = sum c[lam] * sigma_lam (fundamental theorem)."""
    if not is_symmetric(p):
        raise ValueError("polynomial is not symmetric")
    n = p.num_vars
    rest = p
    out = {}
    while not rest.is_zero():
        lead = max(rest.terms)
        c = rest.terms[lead]
        lam = Partition(lead).conjugate()
        out[lam] = out.get(lam, 0) + c
        rest = rest - elementary_product(lam, n) * c
    return dict(sorted(out.items(), key=lambda kv: kv[0].parts))


def xi_generators(n):
    """xi_2..xi_{n+1} in n variables: sigma_l after substituting x_{n+1} = -sum x_i."""
    out = []
    for l in range(2, n + 2):
        terms = defaultdict(int)
        for idx in combinations(range(n), l):
            e = [0] * n
            for i in idx:
                e[i] = 1
            terms[tuple(e)] += 1 - l
        for idx in combinations(range(n), l - 2):
            for k in range(n):
                if k in idx:
                    continue
                e = [0] * n
                for i in idx:
                    e[i] = 1
                e[k] = 2
                terms[tuple(e)] -= 1
        out.append(IntPolynomial._raw(n, terms))
    return out


def phi(n, k, kprime):
    """Sum of all degree-k monomials in x_1..x_{n-k'+1}, inside n variables."""
    if not 1 <= kprime <= k <= n:
        raise ValueError("need 1 <= k' <= k <= n")
    return complete_homogeneous(n - kprime + 1, k, num_vars=n)


def ideal_degree_span(gens, degree, num_vars=None):
    """Rows g*m for every generator g and monomial m landing in ``degree``."""
    if num_vars is None:
        if not gens:
            raise ValueError("num_vars required for an empty generator list")
        num_vars = gens[0].num_vars
    cols = enumerate_multisets(num_vars, degree)
    index = multiset_index(num_vars, degree)
    rows = []
    for g in gens:
        if g.num_vars != num_vars:
            raise ValueError("generators live in different rings")
        if not g.is_homogeneous():
            raise ValueError("generator is not homogeneous")
        if g.is_zero():
            continue
        d = g.degree()
        if d > degree:
            continue
        for m in enumerate_multisets(num_vars, degree - d):
            row = [0] * len(cols)
            for e, c in g.terms.items():
                row[index[tuple(a + b for a, b in zip(e, m))]] = c
            rows.append(row)
    return IntMatrix.from_rows(rows, cols=len(cols))


def _vector(p, degree):
    index = multiset_index(p.num_vars, degree)
    v = [0] * len(index)
    for e, c in p.terms.items():
        v[index[e]] = c
    return v


def in_ideal(p, gens):
    """Integral membership of a homogeneous p in the ideal generated by gens."""
    if p.is_zero():
        return True
    if not p.is_homogeneous():
        raise ValueError("membership is tested degreewise; p must be homogeneous")
    d = p.degree()
    span = ideal_degree_span(gens, d, p.num_vars)
    return in_row_span(hermite_rows(span.to_rows(), span.cols), _vector(p, d))


def ideals_equal_up_to(gens_a, gens_b, max_degree):
    """Degreewise equality of two homogeneous ideals through ``max_degree``.

    Each ideal's degree-d piece is spanned by multiples of its generators of
    degree <= d, so mutual containment of the generators (of degree at most
    ``max_degree``) is equivalent to equality of every piece up to that degree.
    """
    for src, dst in ((gens_a, gens_b), (gens_b, gens_a)):
        for g in src:
            if g.is_zero() or g.degree() > max_degree:
                continue
            if not in_ideal(g, dst):
                return False
    return True


def degree_spans_equal(gens_a, gens_b, degree, num_vars):
    """Literal comparison of the two degree pieces via their Hermite bases."""
    a = ideal_degree_span(gens_a, degree, num_vars)
    b = ideal_degree_span(gens_b, degree, num_vars)
    ha = hermite_rows(a.to_rows(), a.cols)
    hb = hermite_rows(b.to_rows(), b.cols)
    return ha == hb
