import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from flagloop.exactmat import (AbelianGroupStructure, IntMatrix, SnfDiagonal, cokernel,
                               determinant_divisors, hermite_rows, in_row_span, is_prime,
                               parse_matrix_text, pivot_value_matrix, rank_mod_p, read_matrix,
                               snf_mod_p, snf_naive, snf_pivot, vec_gcd, write_matrix)

from conftest import random_matrix, random_unimodular

ENGINES = [snf_naive, snf_pivot]


def oracle_diagonal(m):
    d = determinant_divisors(m)
    prev = 1
    out = []
    for dk in d:
        out.append(dk // prev)
        prev = dk
    return tuple(out) + (0,) * (min(m.rows, m.cols) - len(out))


small_matrices = st.integers(0, 5).flatmap(
    lambda r: st.integers(0, 5).flatmap(
        lambda c: st.lists(st.lists(st.integers(-30, 30), min_size=c, max_size=c),
                           min_size=r, max_size=r).map(lambda rows: IntMatrix.from_rows(rows, cols=c))))


@pytest.mark.parametrize("engine", ENGINES)
class TestSnfExamples:
    def test_identity(self, engine):
        assert engine(IntMatrix.identity(3)).diagonal == (1, 1, 1)

    def test_two_by_two(self, engine):
        assert engine(IntMatrix.from_rows([[2, 4], [6, 8]])).diagonal == (2, 4)

    def test_zero(self, engine):
        assert engine(IntMatrix.zeros(2, 3)).diagonal == (0, 0)

    def test_empty(self, engine):
        assert engine(IntMatrix.zeros(0, 4)).diagonal == ()
        assert engine(IntMatrix.zeros(3, 0)).diagonal == ()

    def test_input_unmodified(self, engine):
        m = IntMatrix.from_rows([[4, 6], [10, 14]])
        before = m.to_rows()
        engine(m)
        assert m.to_rows() == before

    def test_big_entries(self, engine):
        big = 10**40
        m = IntMatrix.from_rows([[big, 0], [0, big * 6]])
        assert engine(m).diagonal == (big, 6 * big)


def test_oracle_example():
    assert determinant_divisors(IntMatrix.from_rows([[2, 4], [6, 8]])) == (2, 8)
    assert determinant_divisors(IntMatrix.identity(4)) == (1, 1, 1, 1)
    assert determinant_divisors(IntMatrix.zeros(3, 3)) == ()


def test_oracle_bound():
    with pytest.raises(ValueError):
        determinant_divisors(IntMatrix.identity(8))


@settings(max_examples=150, deadline=None)
@given(small_matrices)
def test_engines_match_oracle(m):
    want = oracle_diagonal(m)
    assert snf_naive(m).diagonal == want
    assert snf_pivot(m).diagonal == want


@settings(max_examples=60, deadline=None)
@given(small_matrices)
def test_mod_p_rank_counts_units(m):
    d = snf_naive(m).diagonal
    for p in (2, 3, 5):
        assert rank_mod_p(m, p) == sum(1 for e in d if e % p)


def test_unimodular_invariance(rng):
    for _ in range(40):
        r, c = rng.randint(1, 5), rng.randint(1, 5)
        m = random_matrix(rng, r, c)
        u, v = random_unimodular(rng, r), random_unimodular(rng, c)
        want = snf_naive(m).diagonal
        assert snf_naive(u @ m @ v).diagonal == want
        assert snf_pivot(u @ m @ v).diagonal == want


def test_pivot_values():
    assert pivot_value_matrix(IntMatrix.from_rows([[5]])) == ((25,),)
    z = pivot_value_matrix(IntMatrix.zeros(2, 2))
    assert all(v == math.inf for row in z for v in row)
    eye = pivot_value_matrix(IntMatrix.identity(2))
    assert eye[0][0] < math.inf and eye[1][1] < math.inf


@pytest.mark.parametrize("v, g", [((6, 10, 15), 1), ((0, 0), 0), ((-4, 6), 2), ((), 0),
                                  ((7,), 7), ((-7,), 7), ((12, 18, 0, 30), 6)])
def test_vec_gcd(v, g):
    cert = vec_gcd(v)
    assert cert.gcd == g
    assert sum(a * b for a, b in zip(cert.coefficients, v)) == g
    if not any(v):
        assert cert.coefficients == (0,) * len(v)


@given(st.lists(st.integers(-10**12, 10**12), max_size=8))
def test_vec_gcd_certificate(v):
    cert = vec_gcd(v)
    assert cert.gcd == math.gcd(*v) if v else cert.gcd == 0
    assert sum(a * b for a, b in zip(cert.coefficients, v)) == cert.gcd
    assert all(e % cert.gcd == 0 for e in v) if cert.gcd else not any(v)


@pytest.mark.parametrize("m, p, want", [
    (IntMatrix.identity(3), 2, (3, 0)),
    (IntMatrix.from_rows([[2, 0], [0, 3]]), 2, (1, 1)),
    (IntMatrix.from_rows([[1, 1], [1, 1]]), 3, (1, 1)),
])
def test_snf_mod_p(m, p, want):
    assert snf_mod_p(m, p) == want


@pytest.mark.parametrize("p", [0, 1, 4, 9, 2**31 - 2])
def test_mod_p_rejects_composites(p):
    with pytest.raises(ValueError):
        snf_mod_p(IntMatrix.identity(2), p)


def test_is_prime():
    assert [q for q in range(30) if is_prime(q)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert is_prime(2**31 - 1)


def test_cokernel_examples():
    assert cokernel(IntMatrix.from_rows([[3, 0]])) == AbelianGroupStructure(1, (3,))
    assert cokernel(IntMatrix.identity(3)) == AbelianGroupStructure(0)
    assert cokernel(IntMatrix.zeros(0, 4)) == AbelianGroupStructure(4)


def test_group_text():
    assert str(AbelianGroupStructure(6, (2, 4))) == "ℤ^6⊕ℤ_2⊕ℤ_4"
    assert str(AbelianGroupStructure(0, (5, 5, 5))) == "ℤ_5^3"
    assert str(AbelianGroupStructure(1)) == "ℤ"
    assert str(AbelianGroupStructure(0)) == "0"


def test_group_validation():
    with pytest.raises(ValueError):
        AbelianGroupStructure(0, (4, 2))
    with pytest.raises(ValueError):
        AbelianGroupStructure(0, (1,))
    with pytest.raises(ValueError):
        SnfDiagonal((2, 3))
    with pytest.raises(ValueError):
        SnfDiagonal((0, 2))


def test_largest_first():
    assert SnfDiagonal((1, 2, 6, 0)).largest_first() == (6, 2, 1, 0)


def test_text_round_trip(tmp_path, rng):
    m = random_matrix(rng, 4, 3, -10**30, 10**30)
    path = tmp_path / "m.txt"
    write_matrix(path, m, ["hello", "n=2"])
    text = path.read_text()
    back, comments = parse_matrix_text(text)
    assert back == m and comments == ["hello", "n=2"]
    assert back.to_text(comments) == text
    assert read_matrix(path) == m


def test_text_empty_matrix():
    m, _ = parse_matrix_text("0 3\n")
    assert m.shape == (0, 3)


@pytest.mark.parametrize("text, fragment", [
    ("", "header"),
    ("2\n1 2\n", "ROWS COLS"),
    ("1 2\n1 x\n", "bad integer"),
    ("2 2\n1 2 3\n", "expected 4"),
    ("-1 2\n", "negative"),
])
def test_text_errors(text, fragment):
    with pytest.raises(ValueError, match=fragment):
        parse_matrix_text(text)


def test_hermite_membership():
    h = hermite_rows([[2, 4], [0, 6]], 2)
    assert in_row_span(h, [2, 10])
    assert not in_row_span(h, [1, 0])
    assert not in_row_span(h, [0, 3])


def test_matrix_basics():
    a = IntMatrix.from_rows([[1, 2], [3, 4]])
    assert a.transpose().to_rows() == [[1, 3], [2, 4]]
    assert (a @ IntMatrix.identity(2)) == a
    assert a[1, 0] == 3
    with pytest.raises(ValueError):
        IntMatrix.from_rows([[1, 2], [3]])
