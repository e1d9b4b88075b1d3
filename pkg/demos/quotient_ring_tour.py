"""Normal forms in Z[x1..x4]/[h1..h4] and the top class."""

from flagloop.sympoly import IntPolynomial, complete_homogeneous
from flagloop.symquot import quotient_basis, reduce, su_reduce, top_class, zero_criterion

n = 4
x = [IntPolynomial.variable(i, n) for i in range(1, n + 1)]

basis = quotient_basis(n)
print(f"{len(basis)} basis monomials, top degree {basis.top_degree}")

for label, p in [("x4", x[3]), ("x3^2", x[2] ** 2), ("x1^4", x[0] ** 4),
                 ("x1 x2 x3 x4", x[0] * x[1] * x[2] * x[3]),
                 ("h3", complete_homogeneous(n, 3))]:
    print(f"  {label:12} -> {reduce(p, n).to_polynomial(n)}")

# SU(4)/T^3 uses three variables; the zero test is sufficient but not sharp
m = 3
top = top_class(m)
print("\ntop class exponents for SU(4)/T^3:", top)
for mono in [(4, 0, 0), (3, 3, 0), (2, 2, 0), (0, 3, 0)]:
    nf = su_reduce(IntPolynomial.monomial(mono))
    print(f"  {mono}: criterion says zero={zero_criterion(mono, m)}, normal form zero={nf.is_zero()}")
