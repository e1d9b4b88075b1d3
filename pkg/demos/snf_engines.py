# Both Smith engines against the minor-gcd oracle, then on a real differential matrix.
import random
import time

from flagloop.exactmat import IntMatrix, determinant_divisors, pivot_value_matrix, snf_naive, snf_pivot
from flagloop.specseq import PageCoordinate, differential_matrix

rng = random.Random(1)
m = IntMatrix.from_rows([[rng.randint(-9, 9) for _ in range(4)] for _ in range(4)])
print(m.to_text(["random 4x4"]))
print("determinant divisors:", determinant_divisors(m))
print("naive:", snf_naive(m), " pivot:", snf_pivot(m))
print("pivot values of [[5]]:", pivot_value_matrix(IntMatrix.from_rows([[5]])))

big = differential_matrix(PageCoordinate(3, 4, 1))
for name, engine in (("naive", snf_naive), ("pivot", snf_pivot)):
    t = time.perf_counter()
    d = engine(big)
    print(f"{name}: {big.rows}x{big.cols}, nontrivial entries "
          f"{[e for e in d.diagonal if e != 1]}, {time.perf_counter() - t:.2f}s")
