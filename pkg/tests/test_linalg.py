import random
from fractions import Fraction

from jwcat.linalg import Matrix


def rand_matrix(rng, n, m, lo=-5, hi=5):
    return Matrix(n, m, [[Fraction(rng.randint(lo, hi)) for _ in range(m)]
                         for _ in range(n)])


def test_identity_and_mul():
    rng = random.Random(3)
    for _ in range(20):
        n, m = rng.randint(0, 5), rng.randint(0, 5)
        a = rand_matrix(rng, n, m)
        assert Matrix.identity(n) * a == a
        assert a * Matrix.identity(m) == a


def test_rank_nullity():
    rng = random.Random(5)
    for _ in range(50):
        n, m = rng.randint(1, 6), rng.randint(1, 6)
        a = rand_matrix(rng, n, m)
        assert a.rank() + len(a.nullspace()) == m


def test_nullspace_annihilated():
    rng = random.Random(9)
    for _ in range(50):
        a = rand_matrix(rng, rng.randint(1, 5), rng.randint(1, 5))
        for v in a.nullspace():
            assert all(c == 0 for c in a.apply(v))


def test_solve_consistency():
    rng = random.Random(13)
    for _ in range(50):
        n, m = rng.randint(1, 5), rng.randint(1, 5)
        a = rand_matrix(rng, n, m)
        x = [Fraction(rng.randint(-4, 4)) for _ in range(m)]
        b = a.apply(x)
        sol = a.solve(b)
        assert sol is not None
        assert a.apply(sol) == b


def test_solve_inconsistent():
    a = Matrix.from_rows([[1, 0], [1, 0]])
    assert a.solve([Fraction(1), Fraction(2)]) is None


def test_inverse():
    rng = random.Random(17)
    found = 0
    for _ in range(60):
        n = rng.randint(1, 5)
        a = rand_matrix(rng, n, n)
        inv = a.inverse()
        if inv is not None:
            found += 1
            assert a * inv == Matrix.identity(n)
            assert inv * a == Matrix.identity(n)
    assert found > 10


def test_rref_idempotent():
    rng = random.Random(19)
    for _ in range(30):
        a = rand_matrix(rng, rng.randint(1, 5), rng.randint(1, 5))
        r, piv = a.rref()
        r2, piv2 = r.rref()
        assert r == r2 and piv == piv2
