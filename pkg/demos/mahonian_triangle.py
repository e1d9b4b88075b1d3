# Mahonian rows two ways, and how they count the quotient basis.
import math

from flagloop.combinatorics import mahonian_explicit, mahonian_row
from flagloop.symquot import poincare_counts

for n in range(7):
    row = mahonian_row(n)
    if n:
        assert row == tuple(mahonian_explicit(n, k) for k in range(len(row)))
    print(f"n={n}: {' '.join(map(str, row))}   (sum {sum(row)} = {n + 1}!)")
    assert sum(row) == math.factorial(n + 1)

# degree counts of Z[x1..xn]/[h1..hn] are the previous row
for n in range(1, 7):
    assert poincare_counts(n) == mahonian_row(n - 1)
print("\nPoincare counts of the quotient with 5 variables:", poincare_counts(5))
