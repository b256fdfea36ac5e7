import random

import pytest

from nullacert.errors import CapacityError
from nullacert.gf2 import Gf2Matrix, in_span, rank, solve


def pack_rows(dense):
    """Each row as an integer, bit c = column c."""
    return [sum(bit << c for c, bit in enumerate(row)) for row in dense]


def rank_oracle(dense) -> int:
    """Row-space enumeration: the span of the rows has size 2^rank."""
    space = {0}
    for r in pack_rows(dense):
        space |= {s ^ r for s in space}
    return len(space).bit_length() - 1


def solve_oracle(dense, b):
    """Exhaustive search over all 2^cols candidate solutions (Gray code)."""
    rows = len(dense)
    cols = len(dense[0]) if rows else 0
    col_ints = [
        sum(dense[r][c] << r for r in range(rows)) for c in range(cols)
    ]
    target = sum(bit << r for r, bit in enumerate(b))
    val = 0
    x = 0
    if val == target:
        return 0
    for step in range(1, 1 << cols):
        flip = (step & -step).bit_length() - 1
        x ^= 1 << flip
        val ^= col_ints[flip]
        if val == target:
            return x
    return None


def random_dense(rng, rows, cols):
    return [[rng.randint(0, 1) for _ in range(cols)] for _ in range(rows)]


def test_rank_fixtures():
    assert rank(Gf2Matrix.identity(5)) == 5
    assert rank(Gf2Matrix.zeros(4, 7)) == 0
    assert rank(Gf2Matrix.from_dense([[1, 1], [1, 1], [0, 1]])) == 2


def test_rank_against_oracle():
    rng = random.Random(0)
    for _ in range(150):
        dense = random_dense(rng, rng.randint(1, 6), rng.randint(1, 6))
        assert rank(Gf2Matrix.from_dense(dense)) == rank_oracle(dense)


def test_rank_equals_rank_transpose():
    rng = random.Random(1)
    for _ in range(80):
        m = Gf2Matrix.from_dense(random_dense(rng, rng.randint(1, 9), rng.randint(1, 9)))
        assert rank(m) == rank(m.transpose())


def test_transpose_involution_and_layout():
    rng = random.Random(2)
    for _ in range(20):
        dense = random_dense(rng, rng.randint(1, 70), rng.randint(1, 70))
        m = Gf2Matrix.from_dense(dense)
        t = m.transpose()
        assert t.rows == m.cols and t.cols == m.rows
        assert t.transpose() == m
        for r in range(min(5, m.rows)):
            for c in range(min(5, m.cols)):
                assert m.get(r, c) == t.get(c, r)


def test_solve_fixtures():
    ident = Gf2Matrix.identity(4)
    res = solve(ident, [1, 0, 1, 1])
    assert res.feasible and res.solution == (1, 0, 1, 1) and res.rank == 4
    res = solve(Gf2Matrix.zeros(3, 5), [0, 1, 0])
    assert not res.feasible
    res = solve(Gf2Matrix.zeros(3, 5), [0, 0, 0])
    assert res.feasible and res.solution == (0,) * 5
    with pytest.raises(ValueError):
        solve(ident, [1, 0])


def test_solve_against_oracle():
    rng = random.Random(3)
    for _ in range(200):
        rows, cols = rng.randint(1, 8), rng.randint(1, 10)
        dense = random_dense(rng, rows, cols)
        b = [rng.randint(0, 1) for _ in range(rows)]
        res = solve(Gf2Matrix.from_dense(dense), b)
        oracle = solve_oracle(dense, b)
        assert res.feasible == (oracle is not None)
        if res.feasible:
            for r in range(rows):
                acc = 0
                for c in range(cols):
                    acc ^= dense[r][c] & res.solution[c]
                assert acc == b[r]


def test_solve_feasibility_monotone_under_consistent_rows():
    rng = random.Random(4)
    for _ in range(60):
        rows, cols = rng.randint(1, 6), rng.randint(1, 8)
        dense = random_dense(rng, rows, cols)
        b = [0] * rows
        x = [rng.randint(0, 1) for _ in range(cols)]
        for r in range(rows):
            b[r] = sum(dense[r][c] & x[c] for c in range(cols)) % 2
        res = solve(Gf2Matrix.from_dense(dense), b)
        assert res.feasible
        new_row = [rng.randint(0, 1) for _ in range(cols)]
        beta = sum(new_row[c] & x[c] for c in range(cols)) % 2
        res2 = solve(Gf2Matrix.from_dense(dense + [new_row]), b + [beta])
        assert res2.feasible


def test_solve_deterministic():
    rng = random.Random(5)
    dense = random_dense(rng, 9, 12)
    b = [rng.randint(0, 1) for _ in range(9)]
    m = Gf2Matrix.from_dense(dense)
    assert solve(m, b) == solve(m, b)


def test_in_span():
    assert in_span([[1, 0, 1]], [1, 0, 1]) == (True, [0])
    ok, witness = in_span([], [0, 0])
    assert ok and witness == []
    ok, witness = in_span([], [1, 0])
    assert not ok and witness is None
    with pytest.raises(ValueError):
        in_span([[1, 0]], [1, 0, 0])


def test_in_span_against_oracle():
    rng = random.Random(6)
    for _ in range(120):
        count, length = rng.randint(0, 5), rng.randint(1, 12)
        vectors = [
            [rng.randint(0, 1) for _ in range(length)] for _ in range(count)
        ]
        target = [rng.randint(0, 1) for _ in range(length)]
        reachable = {tuple([0] * length)}
        for v in vectors:
            reachable |= {
                tuple(a ^ b for a, b in zip(s, v)) for s in reachable
            }
        ok, witness = in_span(vectors, target)
        assert ok == (tuple(target) in reachable)
        if ok:
            acc = [0] * length
            for i in witness:
                acc = [a ^ b for a, b in zip(acc, vectors[i])]
            assert acc == target


def test_matrix_immutable_and_padded():
    m = Gf2Matrix.from_dense([[1, 1, 0], [0, 1, 1]])
    with pytest.raises(ValueError):
        m._words[0, 0] = 0
    assert m.row_support(0) == [0, 1]
    assert m.to_dense() == [[1, 1, 0], [0, 1, 1]]


def test_bit_cap():
    with pytest.raises(CapacityError):
        Gf2Matrix.zeros(1 << 20, 1 << 20)
    Gf2Matrix.zeros(1 << 20, 1 << 20, bit_cap=None)  # explicit opt-out is fine
    with pytest.raises(CapacityError):
        Gf2Matrix.zeros(100, 100, bit_cap=99)


def test_builders_agree():
    dense = [[1, 0, 1, 0], [0, 0, 0, 0], [1, 1, 1, 1]]
    by_rows = Gf2Matrix.from_row_supports(4, [[0, 2], [], [0, 1, 2, 3]])
    by_cols = Gf2Matrix.from_col_supports(3, [[0, 2], [2], [0, 2], [2]])
    assert by_rows == Gf2Matrix.from_dense(dense) == by_cols
