"""SU(3)/T^2 end to end: ring, differential, matrices, groups."""

from flagloop.exactmat import snf_naive
from flagloop.specseq import (E2Element, PageCoordinate, apply_d2, column_labels,
                              differential_matrix, su_d2_image)
from flagloop.symquot import su_basis
from flagloop.torsion import e3_entry, torsion_table

n = 2

print("Basis of H*(SU(3)/T^2) by degree:")
for d, level in enumerate(su_basis(n)):
    print(f"  {d}: {level}")

print("\nd2(x2) =", su_d2_image(n))
print("d2((x2)_2 y1) =", apply_d2(E2Element.x2(n, 2) * E2Element.y(n, 1), "su"))

coord = PageCoordinate(n, 2, 1)
m = differential_matrix(coord)
print(f"\nSlice x={coord.x}, one y missing: {m.rows}x{m.cols} matrix")
print("  columns:", " ".join(column_labels(coord)))
for row in m.to_rows():
    print("  ", row)
print("  Smith diagonal:", snf_naive(m))
print("  cokernel:", e3_entry(coord))

print()
print(torsion_table(n).to_text())
