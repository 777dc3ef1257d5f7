"""Linear algebra over Z_p: span of the distinct-entry p-tuples, the printed
basis audit, and kernel demonstrations."""

import itertools
import random

import pytest

from confset import (
    ModPMatrix,
    claimed_basis,
    config_matrix,
    config_span_dim,
    dependent_columns_demo,
    norm_kernel_embedding,
    norm_kernel_membership,
    solve_homogeneous,
    span_contains,
)
from confset.modp import (
    _echelon,
    is_prime,
    random_zero_sum_tuple,
    rank,
    read_matrix,
    write_matrix,
)


def span_by_accumulation(p, rows):
    """Reference oracle: grow the span as a set, one row at a time.

    Exponential in dimension; fine for p <= 5.
    """
    span = {(0,) * len(rows[0])}
    for row in rows:
        additions = True
        while additions:
            additions = False
            for v in list(span):
                w = tuple((a + b) % p for a, b in zip(v, row))
                if w not in span:
                    span.add(w)
                    additions = True
    return span


def gf_rank_reference(p, rows):
    """Textbook elimination over Z_p, independent of the library's routine."""
    m = [list(r) for r in rows]
    rank_count, col = 0, 0
    ncols = len(m[0]) if m else 0
    while rank_count < len(m) and col < ncols:
        pivot = next((r for r in range(rank_count, len(m)) if m[r][col] % p), None)
        if pivot is None:
            col += 1
            continue
        m[rank_count], m[pivot] = m[pivot], m[rank_count]
        inv = pow(m[rank_count][col], -1, p)
        m[rank_count] = [(v * inv) % p for v in m[rank_count]]
        for r in range(len(m)):
            if r != rank_count and m[r][col] % p:
                c = m[r][col]
                m[r] = [(a - c * b) % p for a, b in zip(m[r], m[rank_count])]
        rank_count += 1
        col += 1
    return rank_count


def test_is_prime():
    assert [n for n in range(2, 20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]


def test_config_matrix_rows_are_permutations():
    m = config_matrix(3)
    assert m.shape == (6, 3)
    rows = {tuple(r) for r in m.rows.tolist()}
    assert rows == {t for t in itertools.permutations(range(3))}


def test_span_dim_matches_accumulation_oracle_p3():
    m = config_matrix(3)
    span = span_by_accumulation(3, m.rows.tolist())
    assert len(span) == 9  # 3^2
    assert config_span_dim(3) == 2


def test_span_dim_matches_accumulation_oracle_p5():
    m = config_matrix(5)
    span = span_by_accumulation(5, m.rows.tolist())
    assert len(span) == 625  # 5^4
    assert config_span_dim(5) == 4


def test_span_dims():
    assert config_span_dim(3) == 2
    assert config_span_dim(5) == 4
    assert config_span_dim(7) == 6


def test_span_members_sum_to_zero():
    m = config_matrix(3)
    for v in span_by_accumulation(3, m.rows.tolist()):
        assert sum(v) % 3 == 0


def test_rank_matches_reference():
    rng = random.Random(5)
    for p in (3, 5, 7):
        for _ in range(30):
            rows = [
                [rng.randrange(p) for _ in range(rng.randrange(1, 6))]
                for _ in range(rng.randrange(1, 6))
            ]
            width = max(len(r) for r in rows)
            rows = [r + [0] * (width - len(r)) for r in rows]
            assert rank(ModPMatrix.from_rows(p, rows)) == gf_rank_reference(p, rows)


def test_rank_metamorphic_invariances():
    rng = random.Random(6)
    p = 5
    rows = [[rng.randrange(p) for _ in range(4)] for _ in range(3)]
    base = rank(ModPMatrix.from_rows(p, rows))
    shuffled = rows[::-1]
    assert rank(ModPMatrix.from_rows(p, shuffled)) == base
    # appending a combination of existing rows never changes the rank
    combo = [(2 * a + 3 * b) % p for a, b in zip(rows[0], rows[1])]
    assert rank(ModPMatrix.from_rows(p, rows + [combo])) == base


# -- claimed basis ------------------------------------------------------------------


def test_claimed_basis_frozen_p3():
    audit = claimed_basis(3)
    assert audit.vectors == [(1, 0, 2), (0, 1, 2)]
    assert audit.consistent
    assert audit.span_dim == 2


def test_claimed_basis_frozen_p5():
    audit = claimed_basis(5)
    assert audit.vectors == [
        (1, 0, 2, 3, 4),
        (0, 1, 2, 3, 4),
        (0, 0, 1, 3, 1),
        (0, 0, 0, 1, 4),
    ]
    assert audit.consistent
    assert audit.independent
    assert all(audit.in_span)


def test_claimed_basis_frozen_p7():
    audit = claimed_basis(7)
    assert audit.vectors == [
        (1, 0, 2, 3, 4, 5, 6),
        (0, 1, 2, 3, 4, 5, 6),
        (0, 0, 1, 3, 6, 1, 3),
        (0, 0, 0, 1, 4, 0, 2),
        (0, 0, 0, 0, 1, 5, 1),
        (0, 0, 0, 0, 0, 1, 6),
    ]
    assert audit.consistent


def test_claimed_basis_decompositions_verified():
    for p in (5, 7):
        audit = claimed_basis(p)
        for d in audit.decompositions:
            assert d["sum_matches"]
            assert d["a_in_config"]
            assert d["b_in_config"]


def test_claimed_basis_report_dict_shape():
    d = claimed_basis(5).as_dict()
    assert set(d) >= {
        "p",
        "vectors",
        "lengths_ok",
        "in_span",
        "independent",
        "span_dim",
        "decompositions",
        "consistent",
    }


# -- span membership and solving ---------------------------------------------------


def test_span_contains_zero_sum_vectors():
    rng = random.Random(1)
    for p in (3, 5):
        m = config_matrix(p)
        ech, pivots = _echelon(p, m.rows)
        for _ in range(50):
            v = random_zero_sum_tuple(p, rng)
            assert sum(v) % p == 0
            assert span_contains(p, ech, pivots, v)
        # a vector with nonzero sum never lies in the span
        bad = (1,) + (0,) * (p - 1)
        assert not span_contains(p, ech, pivots, bad)


def test_scalar_closure_of_span():
    rng = random.Random(2)
    p = 5
    m = config_matrix(p)
    ech, pivots = _echelon(p, m.rows)
    for _ in range(30):
        v = random_zero_sum_tuple(p, rng)
        for lam in range(1, p):  # zero collapses entries; excluded by decision
            w = tuple((lam * x) % p for x in v)
            assert span_contains(p, ech, pivots, w)


def test_solve_homogeneous_identity_matrix():
    m = ModPMatrix.from_rows(3, [[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    assert solve_homogeneous(m) is None  # full rank, only the trivial solution


def test_solve_homogeneous_zero_matrix():
    m = ModPMatrix.from_rows(5, [[0, 0], [0, 0]])
    x = solve_homogeneous(m)
    assert x is not None and any(x)


def test_solve_homogeneous_wide_matrix():
    rng = random.Random(3)
    for p in (3, 5):
        for _ in range(20):
            rows = [[rng.randrange(p) for _ in range(4)] for _ in range(2)]
            x = solve_homogeneous(ModPMatrix.from_rows(p, rows))
            assert x is not None and any(x)
            for row in rows:
                assert sum(a * b for a, b in zip(row, x)) % p == 0


def test_dependent_columns_demo():
    rng = random.Random(4)
    for p in (3, 5):
        for _ in range(100):
            matrix, x = dependent_columns_demo(p, rng)
            assert matrix.p == p
            assert any(v % p for v in x)
            # columns are p distinct zero-sum tuples and Ax = 0
            cols = list(zip(*matrix.rows.tolist()))
            assert len(set(cols)) == p
            for col in cols:
                assert sum(col) % p == 0
            for row in matrix.rows.tolist():
                assert sum(a * b for a, b in zip(row, x)) % p == 0


# -- norm kernel interface ------------------------------------------------------------


def test_norm_kernel_membership():
    assert norm_kernel_membership(3, (1, 2, 0))
    assert not norm_kernel_membership(3, (1, 1, 0))


def test_norm_kernel_embedding_roundtrip():
    rng = random.Random(7)
    for p in (3, 5, 7):
        for _ in range(25):
            v = tuple(rng.randrange(p) for _ in range(p - 1))
            w = norm_kernel_embedding(p, v)
            assert len(w) == p
            assert w[1:] == v
            assert norm_kernel_membership(p, w)
    with pytest.raises(ValueError):
        norm_kernel_embedding(5, (1, 2, 3))  # needs length p-1


# -- serialization ---------------------------------------------------------------------


def test_matrix_io_roundtrip(tmp_path):
    rng = random.Random(8)
    m = ModPMatrix.from_rows(5, [[rng.randrange(5) for _ in range(3)] for _ in range(4)])
    path = tmp_path / "m.txt"
    with open(path, "w", encoding="utf-8") as fh:
        write_matrix(m, fh)
    with open(path, encoding="utf-8") as fh:
        back = read_matrix(fh)
    assert back.p == 5
    assert back.rows.tolist() == m.rows.tolist()


def test_prime_validation():
    with pytest.raises(ValueError):
        config_matrix(4)
    with pytest.raises(ValueError):
        config_span_dim(2)
    with pytest.raises(ValueError):
        claimed_basis(9)
