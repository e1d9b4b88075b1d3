"""
E_3 entries, torsion tables and the closed forms that predict some of them.

The default route works in the quotient ring directly: columns are the normal
form basis of R_x = Z[g]/I in degree x (one copy per missing-y set), rows are
d^2 of (x_2) hat-y_R P for P running over the basis of R_{x-1}.  Because the
normal form map has kernel exactly I_x, this has the same cokernel as the
full matrix with its ideal rows, and is a few hundred times smaller for n=4.
``method="full"`` builds the full matrix instead.
"""

from __future__ import annotations

import json
import math
import time
from dataclasses import dataclass, field

from .combinatorics import binomial, multiset_coeff, subsets
from .exactmat import (AUX_PRIME, AbelianGroupStructure, ComputationTimeout,
                       IntMatrix, cokernel, is_prime, rank_mod_p)
from .specseq import GroupFamily, PageCoordinate, differential_matrix, image_matrix
from .symquot import su_basis, su_monomial_normal_form

DEFAULT_BUDGET = 300.0


@dataclass(frozen=True)
class ModMultiplicity:
    multiplicity: int
    free_rank: int = 0

    def __post_init__(self):
        if self.multiplicity < 0:
            raise ValueError("multiplicity must be non-negative")


def reduced_matrix(coord):
    """d^2 image rows written on the quotient basis (SU only)."""
    if coord.family is not GroupFamily.SU:
        raise ValueError("the quotient route is implemented for SU only")
    n, x, y = coord.n, coord.x, coord.y
    basis = su_basis(n)
    cols_x = basis[x]
    col_index = {b: k for k, b in enumerate(cols_x)}
    width = len(cols_x)
    blocks = {s: k for k, s in enumerate(subsets(n, y))}
    rows = []
    if x == 0:
        return IntMatrix(0, len(blocks) * width, [])
    for big in subsets(n, y + 1):
        for mono in basis[x - 1]:
            row = [0] * (len(blocks) * width)
            for j, i in enumerate(big, 1):
                sign = 1 if j % 2 else -1
                off = blocks[tuple(v for v in big if v != i)] * width
                for t in range(n):
                    shifted = list(mono)
                    shifted[t] += 1
                    mult = 2 if t == i - 1 else 1
                    for b, v in su_monomial_normal_form(tuple(shifted)).items():
                        row[off + col_index[b]] += sign * mult * v
            rows.append(row)
    return IntMatrix.from_rows(rows, cols=len(blocks) * width)


def _matrix_for(coord, method):
    if method == "quotient" and coord.family is GroupFamily.SU:
        return reduced_matrix(coord)
    if method in ("quotient", "full"):
        return differential_matrix(coord)
    raise ValueError(f"unknown method {method!r}")


def e3_entry(coord, method="quotient", engine="naive", deadline=None):
    return cokernel(_matrix_for(coord, method), engine=engine, deadline=deadline)


def rational_rank(m, deadline=None):
    """Rank over Q, via rank modulo a large auxiliary prime."""
    return rank_mod_p(m, AUX_PRIME, deadline=deadline)


def e3_entry_mod_p(coord, p, method="quotient", deadline=None):
    """Count of p-divisible invariant factors: rank over Q minus rank over GF(p)."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    m = _matrix_for(coord, method)
    rq = rational_rank(m, deadline)
    rp = rank_mod_p(m, p, deadline)
    return ModMultiplicity(rq - rp, m.cols - rq)


def bottom_row_group(n, p_cols):
    """Z at degree 0, otherwise Z_g with g = gcd(C(n+1,1), ..., C(n+1,p))."""
    if p_cols == 0:
        return AbelianGroupStructure(1)
    g = 0
    for k in range(1, p_cols + 1):
        g = math.gcd(g, binomial(n + 1, k))
    return AbelianGroupStructure.cyclic(g)


def last_column_group(n, k):
    """Top-degree group with k of the y's present: Z, Z_{n+1}, then 0."""
    if not 0 <= k <= n:
        raise ValueError(f"k must lie in 0..{n}")
    if k == 0:
        return AbelianGroupStructure(1)
    if k == 1:
        return AbelianGroupStructure.cyclic(n + 1)
    return AbelianGroupStructure(0)


def prequotient_free_rank(n, j, p):
    """Free rank before the ideal is imposed, j = number of y's present.

    sum_k (-1)^k C(n, j-k) * multiset(n, p-k).
    """
    return sum((-1) ** k * binomial(n, j - k) * multiset_coeff(n, p - k)
               for k in range(0, min(j, p) + 1))


@dataclass(frozen=True)
class TableCell:
    degree: int
    status: str
    group: AbelianGroupStructure | None = None
    multiplicity: int | None = None
    free_rank: int | None = None

    def text(self):
        if self.status != "ok":
            return "?"
        if self.group is not None:
            return str(self.group)
        return str(self.multiplicity)


@dataclass
class TorsionTable:
    n: int
    family: GroupFamily
    p: int | None
    cells: dict = field(default_factory=dict)

    @property
    def mode(self):
        return "integral" if self.p is None else "mod-p"

    def row_keys(self):
        return list(range(self.n - 1, 0, -1)) + [0]

    def row(self, y):
        top = self.n * (self.n + 1) // 2
        return [self.cells[(y, x)] for x in range(top + 1)]

    @property
    def complete(self):
        return all(c.status == "ok" for c in self.cells.values())

    def to_json(self):
        rows = []
        for y in self.row_keys():
            cells = []
            for c in self.row(y):
                if c.status != "ok":
                    cells.append({"degree": c.degree, "free_rank": 0,
                                  "invariant_factors": [], "status": "unknown"})
                elif c.group is not None:
                    cells.append({"degree": c.degree, "free_rank": c.group.free_rank,
                                  "invariant_factors": list(c.group.invariant_factors),
                                  "status": "ok"})
                else:
                    cells.append({"degree": c.degree, "free_rank": c.free_rank,
                                  "invariant_factors": [self.p] * c.multiplicity,
                                  "status": "ok"})
            rows.append({"missing": y if y else "bottom", "cells": cells})
        doc = {"n": self.n, "family": self.family.name, "mode": self.mode}
        if self.p is not None:
            doc["p"] = self.p
        doc["rows"] = rows
        return json.dumps(doc, ensure_ascii=False)

    def to_text(self):
        top = self.n * (self.n + 1) // 2
        labels = {y: (f"missing {y}" if y else "bottom") for y in self.row_keys()}
        body = {y: [c.text() for c in self.row(y)] for y in self.row_keys()}
        head = [str(x) for x in range(top + 1)]
        widths = [max(len(head[x]), *(len(body[y][x]) for y in body)) for x in range(top + 1)]
        lw = max(len(v) for v in labels.values())
        title = (f"E3 page, SU({self.n + 1})/T^{self.n}"
                 + ("" if self.p is None else f", multiplicity of {self.p}-torsion"))
        lines = [title,
                 " " * lw + " | " + " | ".join(h.rjust(w) for h, w in zip(head, widths))]
        lines.append("-" * len(lines[-1]))
        for y in self.row_keys():
            lines.append(labels[y].ljust(lw) + " | "
                         + " | ".join(v.rjust(w) for v, w in zip(body[y], widths)))
        return "\n".join(lines) + "\n"


def torsion_table(n, p=None, budget=DEFAULT_BUDGET, method="quotient", engine="naive"):
    """Every E_3 cell of the SU(n+1)/T^n tables; over-budget cells are unknown."""
    if n < 2:
        raise ValueError("tables start at n = 2")
    if p is not None and not is_prime(p):
        raise ValueError(f"{p} is not prime")
    table = TorsionTable(n, GroupFamily.SU, p)
    top = n * (n + 1) // 2
    for y in table.row_keys():
        for x in range(top + 1):
            coord = PageCoordinate(n, x, y)
            deadline = None if budget is None else time.monotonic() + budget
            try:
                if p is None:
                    g = e3_entry(coord, method=method, engine=engine, deadline=deadline)
                    cell = TableCell(x, "ok", group=g)
                else:
                    mm = e3_entry_mod_p(coord, p, method=method, deadline=deadline)
                    cell = TableCell(x, "ok", multiplicity=mm.multiplicity,
                                     free_rank=mm.free_rank)
            except ComputationTimeout:
                cell = TableCell(x, "unknown")
            table.cells[(y, x)] = cell
    return table


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def _primes_upto(k):
    return [q for q in range(2, k + 1) if is_prime(q)]


def cross_check(n, method="quotient"):
    """Closed forms, divisor property and mod-p counts checked cell by cell."""
    results = []
    top = n * (n + 1) // 2
    groups = {}
    for y in range(n):
        for x in range(top + 1):
            groups[(y, x)] = e3_entry(PageCoordinate(n, x, y), method=method)

    bad = [x for x in range(top + 1) if groups[(0, x)] != bottom_row_group(n, x)]
    results.append(CheckResult("bottom row closed form", not bad,
                               f"mismatch at degrees {bad}" if bad else
                               " ".join(str(groups[(0, x)]) for x in range(top + 1))))

    bad = [y for y in range(n) if groups[(y, top)] != last_column_group(n, n - y)]
    top_rank = len(su_basis(n)[top])
    if AbelianGroupStructure(top_rank) != last_column_group(n, 0):
        bad.append("pure polynomial slice")
    results.append(CheckResult("last column closed form", not bad,
                               f"mismatch in rows {bad}" if bad else
                               " ".join(str(groups[(y, top)]) for y in range(n))))

    bad = [(y, x) for (y, x), g in groups.items()
           if any((n + 1) % d for d in g.invariant_factors)]
    results.append(CheckResult(f"torsion divides {n + 1}", not bad,
                               f"offending cells {bad}" if bad else ""))

    primes = sorted(set(_primes_upto(7)) | {q for q in _primes_upto(n + 1) if (n + 1) % q == 0})
    bad = []
    for q in primes:
        for (y, x), g in groups.items():
            mm = e3_entry_mod_p(PageCoordinate(n, x, y), q, method=method)
            if mm.multiplicity != g.torsion_count(q) or mm.free_rank != g.free_rank:
                bad.append((q, y, x))
    results.append(CheckResult("mod-p multiplicities match SNF", not bad,
                               f"mismatches {bad}" if bad else f"primes {primes}"))

    bad = []
    for y in range(n):
        for x in range(top + 1):
            coord = PageCoordinate(n, x, y)
            m = image_matrix(coord)
            if m.cols - rational_rank(m) != prequotient_free_rank(n, n - y, x):
                bad.append((y, x))
    results.append(CheckResult("pre-quotient free rank formula", not bad,
                               f"mismatches {bad}" if bad else ""))

    if n == 3:
        mult = [groups[(1, x)].torsion_count(2) for x in range(1, top + 1)]
        results.append(CheckResult("palindromic 2-torsion, missing 1", mult == mult[::-1],
                                   " ".join(map(str, mult))))
    return results
