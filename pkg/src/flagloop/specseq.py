"""
d^2 on the E_2 page of the free loop fibration over SU(n+1)/T^n and Sp(n)/T^n.

An E_2 element is a finite sum of terms (x_2)_m * y_S * gamma^a: a divided
power of x_2, an ascending exterior product of y's, and a monomial.  d^2 is
the derivation with d^2(y_i) = d^2(gamma_i) = 0 and d^2(x_2) given by the
family, so

    d^2((x_2)_m y_S P) = (x_2)_{m-1} d^2(x_2) y_S P.

Matrices index E_2 slices by the *missing* y's: hat-y_R is the product of
all y_i with i not in R.  A slice (n, x, y) has columns hat-y_R * gamma^a
with |R| = y and deg a = x.
"""

from __future__ import annotations

import enum
from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations

from .combinatorics import (binomial, enumerate_multisets, multiset_coeff,
                            multiset_index, subsets)
from .exactmat import IntMatrix
from .sympoly import (IntPolynomial, complete_homogeneous, elementary_symmetric,
                      ideal_degree_span, in_ideal)


class GroupFamily(enum.Enum):
    SU = "su"
    SP = "sp"

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ValueError(f"unknown family {value!r} (expected su or sp)") from None


def _wedge_sign(s, t):
    """Sign of y_s * y_t rewritten in ascending order, 0 if they share an index."""
    if set(s) & set(t):
        return 0
    inv = sum(1 for a in s for b in t if a > b)
    return -1 if inv % 2 else 1


class E2Element:
    __slots__ = ("n", "_terms")

    def __init__(self, n, terms=None):
        self.n = n
        clean = {}
        for (m, ys, gamma), c in (terms or {}).items():
            ys = tuple(ys)
            gamma = tuple(gamma)
            if m < 0 or len(gamma) != n:
                raise ValueError("bad term")
            if list(ys) != sorted(set(ys)) or any(not 1 <= i <= n for i in ys):
                raise ValueError("y indices must be strictly increasing in 1..n")
            if c:
                key = (m, ys, gamma)
                clean[key] = clean.get(key, 0) + int(c)
        self._terms = {k: c for k, c in clean.items() if c}

    @classmethod
    def _raw(cls, n, terms):
        e = cls.__new__(cls)
        e.n = n
        e._terms = {k: c for k, c in terms.items() if c}
        return e

    @classmethod
    def x2(cls, n, m=1):
        """The divided power (x_2)_m."""
        return cls._raw(n, {(m, (), (0,) * n): 1})

    @classmethod
    def y(cls, n, i):
        return cls._raw(n, {(0, (i,), (0,) * n): 1})

    @classmethod
    def y_hat(cls, n, missing):
        """Product of the y_i with i not in ``missing``."""
        present = tuple(i for i in range(1, n + 1) if i not in set(missing))
        return cls._raw(n, {(0, present, (0,) * n): 1})

    @classmethod
    def from_polynomial(cls, p, m=0, ys=()):
        return cls._raw(p.num_vars, {(m, tuple(ys), e): c for e, c in p.terms.items()})

    @property
    def terms(self):
        return dict(self._terms)

    def is_zero(self):
        return not self._terms

    def __add__(self, other):
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return E2Element._raw(self.n, out)

    def __neg__(self):
        return E2Element._raw(self.n, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return E2Element._raw(self.n, {k: c * other for k, c in self._terms.items()})
        if isinstance(other, IntPolynomial):
            other = E2Element.from_polynomial(other)
        if not isinstance(other, E2Element):
            return NotImplemented
        out = defaultdict(int)
        for (m1, s1, g1), c1 in self._terms.items():
            for (m2, s2, g2), c2 in other._terms.items():
                sign = _wedge_sign(s1, s2)
                if not sign:
                    continue
                # (x_2)_a (x_2)_b = C(a+b, a) (x_2)_{a+b}; x_2 is even so commutes
                coef = sign * binomial(m1 + m2, m1) * c1 * c2
                key = (m1 + m2, tuple(sorted(s1 + s2)), tuple(a + b for a, b in zip(g1, g2)))
                out[key] += coef
        return E2Element._raw(self.n, out)

    def __rmul__(self, other):
        if isinstance(other, (int, IntPolynomial)):
            return self * other
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, E2Element):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def by_y_part(self):
        """Group terms into {(m, ys): polynomial in gamma}."""
        groups = defaultdict(dict)
        for (m, ys, g), c in self._terms.items():
            groups[(m, ys)][g] = c
        return {k: IntPolynomial(self.n, v) for k, v in groups.items()}

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for (m, ys), p in sorted(self.by_y_part().items()):
            label = []
            if m:
                label.append(f"(x2)_{m}")
            label.extend(f"y{i}" for i in ys)
            parts.append(f"{'*'.join(label) or '1'} * ({p})")
        return " + ".join(parts)

    __repr__ = __str__


def su_d2_image(n):
    """d^2(x_2) = sum_i (-1)^(i+1) y_i (gamma_1 + ... + gamma_n + gamma_i)."""
    terms = {}
    for i in range(1, n + 1):
        sign = 1 if i % 2 else -1
        for j in range(1, n + 1):
            g = [0] * n
            g[j - 1] = 1
            terms[(0, (i,), tuple(g))] = sign * (2 if i == j else 1)
    return E2Element._raw(n, terms)


def su_higher_diff_image(n, l):
    """Image of d^{2(l-1)} on x_{2(l-1)}, the three-sum display, 3 <= l <= n+1."""
    if not 3 <= l <= n + 1:
        raise ValueError(f"l must lie in 3..{n + 1}")
    terms = defaultdict(int)

    def add(k, exps, c):
        terms[(0, (k,), tuple(exps))] += c

    idx = range(1, n + 1)
    for k in idx:
        others = [i for i in idx if i != k]
        for s in combinations(others, l - 1):
            e = [0] * n
            for i in s:
                e[i - 1] += 1
            add(k, e, 1 - l)
        for kp in others:
            rest = [i for i in others if i != kp]
            for s in combinations(rest, l - 3):
                e = [0] * n
                for i in s:
                    e[i - 1] += 1
                e[kp - 1] += 2
                add(k, e, -1)
        for s in combinations(others, l - 2):
            e = [0] * n
            for i in s:
                e[i - 1] += 1
            e[k - 1] += 1
            add(k, e, -2)
    return E2Element._raw(n, terms)


def sp_d2_image(n, l):
    """Image on x_{4l-2}: 2 * sum_k y_k gamma_k * (products of l-1 squares avoiding k)."""
    if not 1 <= l <= n:
        raise ValueError(f"l must lie in 1..{n}")
    terms = defaultdict(int)
    for k in range(1, n + 1):
        others = [i for i in range(1, n + 1) if i != k]
        for s in combinations(others, l - 1):
            e = [0] * n
            e[k - 1] = 1
            for i in s:
                e[i - 1] = 2
            terms[(0, (k,), tuple(e))] += 2
    return E2Element._raw(n, terms)


def d2_generator_image(n, family):
    family = GroupFamily.parse(family)
    return su_d2_image(n) if family is GroupFamily.SU else sp_d2_image(n, 1)


def apply_d2(e, family):
    """Leibniz extension of d^2 from its value on x_2."""
    image = d2_generator_image(e.n, family)
    out = E2Element(e.n)
    for (m, ys, g), c in e._terms.items():
        if m == 0:
            continue
        rest = E2Element._raw(e.n, {(0, ys, g): c})
        out = out + E2Element.x2(e.n, m - 1) * image * rest
    return out


def family_ideal(n, family):
    family = GroupFamily.parse(family)
    if family is GroupFamily.SU:
        return [complete_homogeneous(n, l) for l in range(2, n + 2)]
    out = []
    for i in range(1, n + 1):
        sigma = elementary_symmetric(n, i)
        out.append(IntPolynomial(n, {tuple(2 * a for a in e): c for e, c in sigma.terms.items()}))
    return out


def in_family_ideal(e, family):
    """Every gamma-coefficient of e, split by degree, lies in the family ideal."""
    gens = family_ideal(e.n, family)
    for p in e.by_y_part().values():
        by_degree = defaultdict(dict)
        for g, c in p.terms.items():
            by_degree[sum(g)][g] = c
        if not all(in_ideal(IntPolynomial(e.n, t), gens) for t in by_degree.values()):
            return False
    return True


def congruent(a, b, family):
    return in_family_ideal(a - b, family)


def relabel_y(e, images):
    """Substitute y_i -> sign * y_j for each ``i: (sign, j)`` in ``images``."""
    out = E2Element(e.n)
    for (m, ys, g), c in e._terms.items():
        term = E2Element._raw(e.n, {(m, (), g): c})
        for i in ys:
            sign, j = images.get(i, (1, i))
            term = term * (E2Element.y(e.n, j) * sign)
        out = out + term
    return out


def submultiset_matrix(i, x, n):
    """E^{i,x}: row multiset of size i contained in column multiset of size x."""
    if i > x:
        raise ValueError("need i <= x")
    rows = enumerate_multisets(n, i)
    cols = enumerate_multisets(n, x)
    data = [[int(all(a <= b for a, b in zip(r, c))) for c in cols] for r in rows]
    return IntMatrix.from_rows(data, cols=len(cols))


def fixed_submultiset_matrices(x, n):
    """E_1..E_n: row multiset plus one copy of i, as a column indicator."""
    if x < 1:
        raise ValueError("need x >= 1")
    rows = enumerate_multisets(n, x - 1)
    index = multiset_index(n, x)
    out = []
    for i in range(n):
        data = []
        for r in rows:
            row = [0] * len(index)
            target = list(r)
            target[i] += 1
            row[index[tuple(target)]] = 1
            data.append(row)
        out.append(IntMatrix.from_rows(data, cols=len(index)))
    return out


def top_degree(n, family=GroupFamily.SU):
    """Degree of the top class of the flag manifold's cohomology ring."""
    family = GroupFamily.parse(family)
    return n * (n + 1) // 2 if family is GroupFamily.SU else n * n


@dataclass(frozen=True)
class PageCoordinate:
    n: int
    x: int
    y: int
    family: GroupFamily = GroupFamily.SU

    def __post_init__(self):
        object.__setattr__(self, "family", GroupFamily.parse(self.family))
        if self.n < 1:
            raise ValueError("n must be at least 1")
        top = top_degree(self.n, self.family)
        if not 0 <= self.x <= top:
            raise ValueError(f"x must lie in 0..{top}")
        if not 0 <= self.y <= self.n - 1:
            raise ValueError(f"y must lie in 0..{self.n - 1}")


def column_labels(coord):
    labels = []
    for miss in subsets(coord.n, coord.y):
        head = "yhat(" + ",".join(map(str, miss)) + ")"
        for m in enumerate_multisets(coord.n, coord.x):
            mono = "*".join(f"g{i}" if a == 1 else f"g{i}^{a}" for i, a in enumerate(m, 1) if a)
            labels.append(f"{head}*{mono}" if mono else head)
    return labels


def _image_block_rows(coord):
    """Image rows by the block law, one list per (superset, monomial)."""
    n, x, y = coord.n, coord.x, coord.y
    if x == 0:
        return []
    ncols_block = multiset_coeff(n, x)
    col_sets = {s: k for k, s in enumerate(subsets(n, y))}
    h1 = submultiset_matrix(x - 1, x, n).to_rows()
    fixed = [m.to_rows() for m in fixed_submultiset_matrices(x, n)]
    rows = []
    for big in subsets(n, y + 1):
        for r in range(multiset_coeff(n, x - 1)):
            row = [0] * (len(col_sets) * ncols_block)
            for j, i in enumerate(big, 1):
                sign = 1 if j % 2 else -1
                off = col_sets[tuple(v for v in big if v != i)] * ncols_block
                for c in range(ncols_block):
                    v = h1[r][c] + fixed[i - 1][r][c]
                    if v:
                        row[off + c] += sign * v
            rows.append(row)
    return rows


def _ideal_rows(coord, family):
    n, x, y = coord.n, coord.x, coord.y
    nblocks = binomial(n, y)
    width = multiset_coeff(n, x)
    rows = []
    if family is GroupFamily.SU:
        blocks = [submultiset_matrix(x - i, x, n).to_rows() for i in range(2, min(x, n + 1) + 1)]
    else:
        blocks = [ideal_degree_span([g], x, n).to_rows() for g in family_ideal(n, family)
                  if g.degree() <= x]
    for block in blocks:
        for b in range(nblocks):
            for r in block:
                row = [0] * (nblocks * width)
                row[b * width:(b + 1) * width] = r
                rows.append(row)
    return rows


def image_rows_symbolic(coord):
    """Image rows via apply_d2 on (x_2) hat-y_R P, read off as coefficient vectors."""
    family = coord.family
    n, x, y = coord.n, coord.x, coord.y
    if x == 0:
        return []
    width = multiset_coeff(n, x)
    index = multiset_index(n, x)
    col_sets = {s: k for k, s in enumerate(subsets(n, y))}
    full = set(range(1, n + 1))
    rows = []
    for big in subsets(n, y + 1):
        present = tuple(sorted(full - set(big)))
        for mono in enumerate_multisets(n, x - 1):
            elem = E2Element._raw(n, {(1, present, mono): 1})
            row = [0] * (len(col_sets) * width)
            for (m, ys, g), c in apply_d2(elem, family)._terms.items():
                missing = tuple(sorted(full - set(ys)))
                row[col_sets[missing] * width + index[g]] += c
            rows.append(row)
    return rows


def differential_matrix(coord):
    """Image rows stacked over ideal rows; columns hat-y_R * gamma^a.

    SU uses the incidence-block law; Sp reads the image rows off apply_d2.
    """
    family = coord.family
    if family is GroupFamily.SU:
        image = _image_block_rows(coord)
    else:
        image = image_rows_symbolic(coord)
    cols = binomial(coord.n, coord.y) * multiset_coeff(coord.n, coord.x)
    return IntMatrix.from_rows(image + _ideal_rows(coord, family), cols=cols)


def image_matrix(coord):
    """Only the d^2 image rows, i.e. the boundary before the ideal is imposed."""
    if coord.family is GroupFamily.SU:
        rows = _image_block_rows(coord)
    else:
        rows = image_rows_symbolic(coord)
    return IntMatrix.from_rows(rows, cols=binomial(coord.n, coord.y) * multiset_coeff(coord.n, coord.x))
