"""
Dense integer matrices and Smith normal forms.

Everything here works with Python integers, so no entry ever overflows.
Two independent SNF engines are provided:

    snf_naive   smallest-magnitude pivot, Euclidean remainders
    snf_pivot   pivot chosen by the pivot-value heuristic, Bezout 2x2 steps

plus a determinant-divisor oracle for small matrices and a rank routine
over a prime field (numpy, int64).

>>> m = IntMatrix.from_rows([[2, 4], [6, 8]])
>>> snf_naive(m).diagonal
(2, 4)
>>> cokernel(IntMatrix.from_rows([[3, 0]]))
AbelianGroupStructure(free_rank=1, invariant_factors=(3,))
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from itertools import combinations, permutations

import numpy as np

ORACLE_BOUND = 7
AUX_PRIME = 2**31 - 1


class ComputationTimeout(RuntimeError):
    """Raised when an elimination runs past its deadline."""


def _check_deadline(deadline):
    if deadline is not None and time.monotonic() > deadline:
        raise ComputationTimeout("deadline exceeded")


class IntMatrix:
    """Immutable dense matrix of arbitrary-precision integers."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, rows, cols, entries):
        entries = tuple(int(e) for e in entries)
        if rows < 0 or cols < 0:
            raise ValueError("negative dimension")
        if len(entries) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(entries)}")
        self.rows = rows
        self.cols = cols
        self._data = entries

    @classmethod
    def from_rows(cls, rows, cols=None):
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged rows")
        return cls(len(rows), cols, [e for r in rows for e in r])

    @classmethod
    def zeros(cls, rows, cols):
        return cls(rows, cols, [0] * (rows * cols))

    @classmethod
    def identity(cls, n):
        return cls(n, n, [int(i == j) for i in range(n) for j in range(n)])

    @classmethod
    def vstack(cls, blocks, cols):
        data = []
        rows = 0
        for b in blocks:
            if b.cols != cols:
                raise ValueError("column mismatch in vstack")
            data.extend(b._data)
            rows += b.rows
        return cls(rows, cols, data)

    @property
    def shape(self):
        return (self.rows, self.cols)

    @property
    def entries(self):
        return self._data

    def __getitem__(self, ij):
        i, j = ij
        return self._data[i * self.cols + j]

    def row(self, i):
        return self._data[i * self.cols:(i + 1) * self.cols]

    def to_rows(self):
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self):
        return IntMatrix(self.cols, self.rows,
                         [self[i, j] for j in range(self.cols) for i in range(self.rows)])

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        ocols = [other._data[j::other.cols] for j in range(other.cols)]
        out = []
        for i in range(self.rows):
            r = self.row(i)
            out.extend(sum(a * b for a, b in zip(r, c)) for c in ocols)
        return IntMatrix(self.rows, other.cols, out)

    def __eq__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self):
        return hash((self.rows, self.cols, self._data))

    def __repr__(self):
        return f"IntMatrix.from_rows({self.to_rows()!r}, cols={self.cols})"

    def to_numpy(self, modulus=None):
        """int64 array, reduced modulo ``modulus`` when one is given."""
        if modulus is None:
            return np.array(self._data, dtype=object).reshape(self.rows, self.cols)
        arr = np.array([e % modulus for e in self._data], dtype=np.int64)
        return arr.reshape(self.rows, self.cols)

    def to_text(self, comments=()):
        lines = [f"# {c}" if c else "#" for c in comments]
        lines.append(f"{self.rows} {self.cols}")
        lines.extend(" ".join(map(str, self.row(i))) for i in range(self.rows))
        return "\n".join(lines) + "\n"


def parse_matrix_text(text):
    """Parse the matrix text format; returns ``(matrix, comments)``."""
    comments = []
    tokens = []
    header = None
    for lineno, line in enumerate(text.splitlines(), 1):
        stripped = line.strip()
        if stripped.startswith("#"):
            body = stripped[1:]
            comments.append(body[1:] if body.startswith(" ") else body)
            continue
        if header is None:
            if not stripped:
                continue
            parts = stripped.split()
            if len(parts) != 2:
                raise ValueError(f"line {lineno}: expected 'ROWS COLS'")
            try:
                header = (int(parts[0]), int(parts[1]))
            except ValueError:
                raise ValueError(f"line {lineno}: non-integer dimensions") from None
            if min(header) < 0:
                raise ValueError(f"line {lineno}: negative dimension")
            continue
        for tok in stripped.split():
            try:
                tokens.append(int(tok))
            except ValueError:
                raise ValueError(f"line {lineno}: bad integer {tok!r}") from None
    if header is None:
        raise ValueError("missing 'ROWS COLS' header")
    rows, cols = header
    if len(tokens) != rows * cols:
        raise ValueError(f"expected {rows * cols} entries, found {len(tokens)}")
    return IntMatrix(rows, cols, tokens), comments


def read_matrix(path):
    with open(path, encoding="utf-8") as fh:
        return parse_matrix_text(fh.read())[0]


def write_matrix(path, m, comments=()):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(m.to_text(comments))


@dataclass(frozen=True)
class SnfDiagonal:
    diagonal: tuple

    def __post_init__(self):
        d = tuple(self.diagonal)
        object.__setattr__(self, "diagonal", d)
        nz = [e for e in d if e]
        if any(e < 0 for e in d):
            raise ValueError("negative diagonal entry")
        if d[:len(nz)] != tuple(nz):
            raise ValueError("zeros must trail")
        if any(b % a for a, b in zip(nz, nz[1:])):
            raise ValueError("divisibility chain broken")

    @property
    def rank(self):
        return sum(1 for e in self.diagonal if e)

    def largest_first(self):
        """The same entries with nonzero values in decreasing order."""
        nz = [e for e in self.diagonal if e]
        return tuple(reversed(nz)) + (0,) * (len(self.diagonal) - len(nz))

    def __str__(self):
        return " ".join(map(str, self.diagonal))


@dataclass(frozen=True)
class BezoutCertificate:
    gcd: int
    coefficients: tuple


@dataclass(frozen=True)
class AbelianGroupStructure:
    free_rank: int
    invariant_factors: tuple = ()

    def __post_init__(self):
        f = tuple(self.invariant_factors)
        object.__setattr__(self, "invariant_factors", f)
        if self.free_rank < 0:
            raise ValueError("negative free rank")
        if any(d <= 1 for d in f):
            raise ValueError("invariant factors must exceed 1")
        if any(b % a for a, b in zip(f, f[1:])):
            raise ValueError("invariant factors must form a divisibility chain")

    @classmethod
    def cyclic(cls, d):
        """Z for d == 0, Z_d for d > 1, trivial for d == 1."""
        if d == 0:
            return cls(1)
        return cls(0, (d,) if d > 1 else ())

    @property
    def is_trivial(self):
        return self.free_rank == 0 and not self.invariant_factors

    def torsion_count(self, p):
        """Number of invariant factors divisible by ``p``."""
        return sum(1 for d in self.invariant_factors if d % p == 0)

    def __str__(self):
        parts = []
        if self.free_rank == 1:
            parts.append("ℤ")
        elif self.free_rank > 1:
            parts.append(f"ℤ^{self.free_rank}")
        i = 0
        f = self.invariant_factors
        while i < len(f):
            j = i
            while j < len(f) and f[j] == f[i]:
                j += 1
            parts.append(f"ℤ_{f[i]}" + (f"^{j - i}" if j - i > 1 else ""))
            i = j
        return "⊕".join(parts) if parts else "0"


def ext_gcd(a, b):
    """Return (g, x, y) with a*x + b*y = g >= 0."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def vec_gcd(v):
    """Bezout certificate for an integer vector, built up pairwise by Euclid."""
    v = [int(e) for e in v]
    coeffs = [0] * len(v)
    g = 0
    for k, e in enumerate(v):
        if e == 0:
            continue
        g2, x, y = ext_gcd(g, e)
        if g2 == g:
            continue
        coeffs = [c * x for c in coeffs]
        coeffs[k] = y
        g = g2
    return BezoutCertificate(g, tuple(coeffs))


def _normalise_diagonal(diag, size):
    """Turn any diagonal into the ascending divisibility chain."""
    d = [abs(e) for e in diag if e]
    for i in range(len(d)):
        for j in range(i + 1, len(d)):
            a, b = d[i], d[j]
            if b % a:
                g = math.gcd(a, b)
                d[i], d[j] = g, a // g * b
    d.sort()
    return SnfDiagonal(tuple(d) + (0,) * (size - len(d)))


def snf_naive(m, deadline=None):
    """Smith diagonal by repeated division with a smallest-magnitude pivot."""
    a = m.to_rows()
    nr, nc = m.rows, m.cols
    diag = []
    t = 0
    while t < min(nr, nc):
        _check_deadline(deadline)
        best = None
        for i in range(t, nr):
            row = a[i]
            for j in range(t, nc):
                e = row[j]
                if e and (best is None or abs(e) < best[0]):
                    best = (abs(e), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        a[t], a[i] = a[i], a[t]
        if j != t:
            for row in a:
                row[t], row[j] = row[j], row[t]
        while True:
            p = a[t][t]
            dirty = False
            prow = a[t]
            for i in range(t + 1, nr):
                e = a[i][t]
                if e:
                    q = e // p
                    row = a[i]
                    for j in range(t, nc):
                        if prow[j]:
                            row[j] -= q * prow[j]
                    if row[t]:
                        dirty = True
            for j in range(t + 1, nc):
                e = prow[j]
                if e:
                    q = e // p
                    for row in a[t:]:
                        if row[t]:
                            row[j] -= q * row[t]
                    if prow[j]:
                        dirty = True
            if not dirty:
                break
            # move the smallest leftover in row t / column t onto the diagonal
            _check_deadline(deadline)
            bi = min((i for i in range(t, nr) if a[i][t]), key=lambda i: abs(a[i][t]))
            bj = min((j for j in range(t, nc) if prow[j]), key=lambda j: abs(prow[j]))
            if abs(a[bi][t]) <= abs(prow[bj]):
                a[t], a[bi] = a[bi], a[t]
            else:
                for row in a:
                    row[t], row[bj] = row[bj], row[t]
        diag.append(a[t][t])
        t += 1
    return _normalise_diagonal(diag, min(nr, nc))


def _line_score(lines, k):
    """Max post-reduction magnitude when line k is replaced by its gcd combination.

    ``lines`` is a list of equal-length integer sequences (the columns of the
    matrix for a column score, the rows for a row score).
    """
    cert = vec_gcd(lines[k])
    g = cert.gcd
    if g == 0:
        return math.inf
    x = cert.coefficients
    base = lines[k]
    worst = Fraction(g)
    for other in lines:
        w = sum(c * e for c, e in zip(x, other))
        cand = Fraction(max(abs(g * o - w * b) for o, b in zip(other, base)), g)
        if cand > worst:
            worst = cand
    return worst


def pivot_value_matrix(m):
    """Pivot-value scores: column score times row score, inf where a gcd vanishes."""
    rows = m.to_rows()
    cols = [list(c) for c in zip(*rows)] if rows else []
    cscore = [_line_score(cols, k) for k in range(m.cols)]
    rscore = [_line_score(rows, k) for k in range(m.rows)]
    return tuple(tuple(r * c for c in cscore) for r in rscore)


def _best_pivot(a, t, nr, nc):
    sub = [row[t:] for row in a[t:]]
    cols = [list(c) for c in zip(*sub)]
    cscore = [_line_score(cols, k) for k in range(nc - t)]
    rscore = [_line_score(sub, k) for k in range(nr - t)]
    best = None
    for i, rs in enumerate(rscore):
        for j, cs in enumerate(cscore):
            if sub[i][j] == 0:
                continue
            s = rs * cs
            if best is None or s < best[0]:
                best = (s, i + t, j + t)
    return best


def snf_pivot(m, deadline=None):
    """Smith diagonal with pivots ranked by the pivot-value matrix.

    Each pivot row/column is cleared with unimodular 2x2 Bezout steps rather
    than by division, so this engine shares no elimination code with
    ``snf_naive``.
    """
    a = m.to_rows()
    nr, nc = m.rows, m.cols
    diag = []
    for t in range(min(nr, nc)):
        _check_deadline(deadline)
        best = _best_pivot(a, t, nr, nc)
        if best is None:
            break
        _, i, j = best
        a[t], a[i] = a[i], a[t]
        if j != t:
            for row in a:
                row[t], row[j] = row[j], row[t]
        while True:
            changed = False
            for i in range(t + 1, nr):
                b = a[i][t]
                if not b:
                    continue
                p = a[t][t]
                if b % p == 0:
                    q = b // p
                    a[i] = [v - q * u for u, v in zip(a[t], a[i])]
                    continue
                g, x, y = ext_gcd(p, b)
                pg, bg = p // g, b // g
                top, low = a[t], a[i]
                a[t] = [x * u + y * v for u, v in zip(top, low)]
                a[i] = [bg * u - pg * v for u, v in zip(top, low)]
            for j in range(t + 1, nc):
                b = a[t][j]
                if not b:
                    continue
                p = a[t][t]
                if b % p == 0:
                    q = b // p
                    for row in a:
                        if row[t]:
                            row[j] -= q * row[t]
                    continue
                g, x, y = ext_gcd(p, b)
                pg, bg = p // g, b // g
                for row in a:
                    u, v = row[t], row[j]
                    if u or v:
                        row[t], row[j] = x * u + y * v, bg * u - pg * v
                changed = True
            if not changed or not any(a[i][t] for i in range(t + 1, nr)):
                break
            _check_deadline(deadline)
        diag.append(a[t][t])
    return _normalise_diagonal(diag, min(nr, nc))


SNF_ENGINES = {"naive": snf_naive, "pivot": snf_pivot}


def _det(rows):
    """Leibniz expansion; only used on oracle-sized minors."""
    n = len(rows)
    total = 0
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = -1 if inv % 2 else 1
        for i, p in enumerate(perm):
            term *= rows[i][p]
            if not term:
                break
        total += term
    return total


def determinant_divisors(m, bound=ORACLE_BOUND):
    """d_k = gcd of all k x k minors, for k up to the rank."""
    if min(m.rows, m.cols) > bound:
        raise ValueError(f"matrix exceeds oracle bound {bound}")
    a = m.to_rows()
    out = []
    for k in range(1, min(m.rows, m.cols) + 1):
        g = 0
        for rs in combinations(range(m.rows), k):
            for cs in combinations(range(m.cols), k):
                g = math.gcd(g, _det([[a[r][c] for c in cs] for r in rs]))
        if g == 0:
            break
        out.append(g)
    return tuple(out)


def is_prime(p):
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    return all(p % f for f in range(3, math.isqrt(p) + 1, 2))


def rank_mod_p(m, p, deadline=None):
    """Rank over GF(p) by Gaussian elimination on int64 arrays."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p >= 2**31:
        raise ValueError("modulus too large for int64 elimination")
    a = m.to_numpy(modulus=p)
    nr, nc = a.shape
    rank = 0
    for c in range(nc):
        if rank == nr:
            break
        nz = np.nonzero(a[rank:, c])[0]
        if nz.size == 0:
            continue
        r = rank + nz[0]
        if r != rank:
            a[[rank, r]] = a[[r, rank]]
        inv = pow(int(a[rank, c]), -1, p)
        a[rank] = (a[rank] * inv) % p
        below = a[rank + 1:, c]
        hit = np.nonzero(below)[0] + rank + 1
        if hit.size:
            a[hit] = (a[hit] - np.outer(a[hit, c], a[rank]) % p) % p
        rank += 1
        if rank % 64 == 0:
            _check_deadline(deadline)
    return rank


def snf_mod_p(m, p):
    """(rank, nullity) over GF(p); nullity counts columns."""
    r = rank_mod_p(m, p)
    return r, m.cols - r


def cokernel(rows_span, engine="naive", deadline=None):
    """Z^cols modulo the row span, read off the Smith diagonal."""
    snf = SNF_ENGINES[engine](rows_span, deadline=deadline)
    nz = [d for d in snf.diagonal if d]
    return AbelianGroupStructure(rows_span.cols - len(nz), tuple(d for d in nz if d > 1))


# Hermite-style echelon forms, used for integral span membership.

def hermite_rows(rows, width):
    """Row-style Hermite basis of the lattice spanned by ``rows``.

    Returns a list of ``(pivot_column, row)`` pairs with positive pivots,
    ordered by pivot column; entries above each pivot are reduced.
    """
    basis = {}
    for r in rows:
        v = list(r)
        _insert(basis, v, width)
    out = sorted(basis.items())
    for idx, (pc, row) in enumerate(out):
        for pc2, row2 in out[:idx]:
            q = row2[pc] // row[pc]
            if q:
                for j in range(pc, width):
                    row2[j] -= q * row[j]
    return out


def _insert(basis, v, width):
    j = 0
    while True:
        while j < width and v[j] == 0:
            j += 1
        if j == width:
            return
        h = basis.get(j)
        if h is None:
            if v[j] < 0:
                v = [-e for e in v]
            basis[j] = v
            return
        if v[j] % h[j] == 0:
            q = v[j] // h[j]
            v = [a - q * b for a, b in zip(v, h)]
            continue
        g, x, y = ext_gcd(h[j], v[j])
        hg, vg = h[j] // g, v[j] // g
        new_h = [x * a + y * b for a, b in zip(h, v)]
        rest = [vg * a - hg * b for a, b in zip(h, v)]
        basis[j] = new_h
        v = rest


def in_row_span(hermite, v):
    """Decide integral membership of ``v`` in the lattice of a Hermite basis."""
    v = list(v)
    for pc, row in hermite:
        if any(v[:pc]):
            return False
        if v[pc]:
            q, r = divmod(v[pc], row[pc])
            if r:
                return False
            v = [a - q * b for a, b in zip(v, row)]
    return not any(v)


def lcm_all(values):
    return reduce(math.lcm, values, 1)
