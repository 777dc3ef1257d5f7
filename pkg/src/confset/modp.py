"""Linear algebra over the prime field Z_p for distinct-entry tuple spans.

Over Z_p the p-entry distinct tuples are the arrangements of all p
residues.  Stacked as matrix rows they span the zero-sum hyperplane, so
the span has dimension p-1; the helpers here compute that rank, audit a
claimed explicit basis as printed, and solve homogeneous systems whose
columns are zero-sum tuples.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Iterable, Sequence, TextIO

import numpy as np


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for d in range(2, int(n**0.5) + 1):
        if n % d == 0:
            return False
    return True


def _check_prime(p: int) -> None:
    if not is_prime(p):
        raise ValueError(f"modulus must be prime, got {p}")


@dataclass
class ModPMatrix:
    """Integer matrix with entries reduced modulo a prime."""

    p: int
    rows: np.ndarray

    @classmethod
    def from_rows(cls, p: int, rows: Iterable[Sequence[int]]) -> "ModPMatrix":
        _check_prime(p)
        arr = np.array([[int(v) for v in r] for r in rows], dtype=np.int64)
        if arr.ndim != 2:
            raise ValueError("rows must form a rectangular matrix")
        return cls(p, arr % p)

    @property
    def shape(self) -> tuple[int, int]:
        return (int(self.rows.shape[0]), int(self.rows.shape[1]))


def _echelon(p: int, a: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and pivot columns, working mod p."""
    a = a.copy() % p
    nrows, ncols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            a[[r, pr]] = a[[pr, r]]
        a[r] = (a[r] * pow(int(a[r, c]), -1, p)) % p
        factors = a[:, c].copy()
        factors[r] = 0
        a = (a - np.outer(factors, a[r])) % p
        pivots.append(c)
        r += 1
    return a, pivots


def rank(matrix: ModPMatrix) -> int:
    """Rank over Z_p by Gaussian elimination."""
    if matrix.rows.size == 0:
        return 0
    return len(_echelon(matrix.p, matrix.rows)[1])


def solve_homogeneous(matrix: ModPMatrix) -> tuple[int, ...] | None:
    """A nonzero kernel vector of Ax = 0 over Z_p, or None if only trivial."""
    p = matrix.p
    nrows, ncols = matrix.shape
    if ncols == 0:
        return None
    ech, pivots = _echelon(p, matrix.rows) if matrix.rows.size else (matrix.rows, [])
    free = [c for c in range(ncols) if c not in pivots]
    if not free:
        return None
    f = free[0]
    x = [0] * ncols
    x[f] = 1
    for row_idx, c in enumerate(pivots):
        x[c] = int((-ech[row_idx, f]) % p)
    residual = (matrix.rows @ np.array(x, dtype=np.int64)) % p if nrows else np.zeros(0)
    assert not residual.any() and any(x)
    return tuple(x)


def span_contains(p: int, echelon_rows: np.ndarray, pivots: Sequence[int],
                  v: Sequence[int]) -> bool:
    """Reduce v against an echelon basis; membership iff the remainder is zero."""
    rem = np.array([int(x) for x in v], dtype=np.int64) % p
    for row_idx, c in enumerate(pivots):
        rem = (rem - rem[c] * echelon_rows[row_idx]) % p
    return not rem.any()


def norm_kernel_membership(p: int, v: Sequence[int]) -> bool:
    """Whether the entries sum to zero mod p (the entry-product criterion)."""
    _check_prime(p)
    return sum(int(x) for x in v) % p == 0


def norm_kernel_embedding(p: int, v: Sequence[int]) -> tuple[int, ...]:
    """Prepend the balancing entry so the extended tuple sums to zero."""
    _check_prime(p)
    vv = [int(x) % p for x in v]
    if len(vv) != p - 1:
        raise ValueError(f"expected arity {p - 1}, got {len(vv)}")
    return ((-sum(vv)) % p, *vv)


def config_matrix(p: int) -> ModPMatrix:
    """All distinct-entry p-tuples over Z_p as matrix rows (p! of them)."""
    _check_prime(p)
    if p > 8:
        raise ValueError(f"row enumeration budget is p <= 8, got {p}")
    return ModPMatrix(p, np.array(list(itertools.permutations(range(p))),
                                  dtype=np.int64))


def config_span_dim(p: int) -> int:
    """Dimension of the span of all distinct-entry p-tuples over Z_p."""
    if p < 3:
        raise ValueError(f"needs p >= 3, got {p}")
    return rank(config_matrix(p))


# -- claimed explicit basis, audited as printed ---------------------------


def _claimed_vector(p: int, i: int) -> tuple[int, ...]:
    if i == 1:
        raw: tuple[int, ...] = (1, 0, *range(2, p))
    elif i == 2:
        raw = tuple(range(p))
    elif i == p - 1:
        raw = (0,) * (p - 2) + (1, p - 1)
    else:
        # (0,..,0,1,i,i+3,...,2p-i-1): after the leading 1 the run starts
        # at i, jumps by 3 once, then climbs by 2 up to 2p-i-1.
        run = [i, *range(i + 3, 2 * p - i, 2)]
        raw = (0,) * (i - 1) + (1, *run)
    return tuple(v % p for v in raw)


def _decomposition_summands(
    p: int, i: int
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    a = (*range(1, i), 0, *range(i, p))
    b = (*range(p - 1, p - i, -1), 1, 0, *range(2, p - i + 1))
    return a, b


@dataclass
class BasisReport:
    """Audit of the printed basis family for the distinct-tuple span."""

    p: int
    vectors: list[tuple[int, ...]] = field(default_factory=list)
    lengths_ok: list[bool] = field(default_factory=list)
    in_span: list[bool] = field(default_factory=list)
    independent: bool = False
    span_dim: int = 0
    decompositions: list[dict] = field(default_factory=list)

    @property
    def consistent(self) -> bool:
        """All printed claims hold against the span oracle."""
        return (
            all(self.lengths_ok)
            and all(self.in_span)
            and self.independent
            and all(d["sum_matches"] and d["a_in_config"] and d["b_in_config"]
                    for d in self.decompositions)
        )

    def as_dict(self) -> dict:
        return {
            "p": self.p,
            "vectors": [list(v) for v in self.vectors],
            "lengths_ok": self.lengths_ok,
            "in_span": self.in_span,
            "independent": self.independent,
            "span_dim": self.span_dim,
            "decompositions": self.decompositions,
            "consistent": self.consistent,
        }


def claimed_basis(p: int) -> BasisReport:
    """Build the printed p-1 vector family verbatim and audit it.

    Formula defects (wrong length, a vector outside the span, a failed
    decomposition) are recorded in the report, never repaired.
    """
    _check_prime(p)
    if p < 3:
        raise ValueError(f"needs p >= 3, got {p}")
    report = BasisReport(p=p)
    full = config_matrix(p)
    ech, pivots = _echelon(p, full.rows)
    report.span_dim = len(pivots)
    for i in range(1, p):
        v = _claimed_vector(p, i)
        report.vectors.append(v)
        ok = len(v) == p
        report.lengths_ok.append(ok)
        report.in_span.append(ok and span_contains(p, ech, pivots, v))
    usable = [v for v, ok in zip(report.vectors, report.lengths_ok) if ok]
    report.independent = (
        len(usable) == p - 1
        and rank(ModPMatrix.from_rows(p, usable)) == p - 1
    )
    for i in range(3, p - 1):
        a, b = _decomposition_summands(p, i)
        target = report.vectors[i - 1]
        total = tuple((x + y) % p for x, y in zip(a, b))
        report.decompositions.append(
            {
                "i": i,
                "summand_a": list(a),
                "summand_b": list(b),
                "sum_matches": len(target) == p and total == target,
                "a_in_config": sorted(a) == list(range(p)),
                "b_in_config": sorted(b) == list(range(p)),
            }
        )
    return report


# -- kernel demonstrations -------------------------------------------------


def random_zero_sum_tuple(p: int, rng: random.Random) -> tuple[int, ...]:
    """Uniform member of the zero-sum subgroup of Z_p^p."""
    rest = [rng.randrange(p) for _ in range(p - 1)]
    return ((-sum(rest)) % p, *rest)


def dependent_columns_demo(
    p: int, rng: random.Random
) -> tuple[ModPMatrix, tuple[int, ...]]:
    """p distinct zero-sum columns always admit a nonzero kernel vector.

    The columns live in the (p-1)-dimensional zero-sum hyperplane, so the
    p-column homogeneous system is singular by counting.
    """
    cols: list[tuple[int, ...]] = []
    seen = set()
    while len(cols) < p:
        z = random_zero_sum_tuple(p, rng)
        if z not in seen:
            seen.add(z)
            cols.append(z)
    matrix = ModPMatrix.from_rows(p, list(zip(*cols)))
    x = solve_homogeneous(matrix)
    if x is None:
        raise AssertionError("p zero-sum columns cannot be independent")
    return matrix, x


# -- text serialization ------------------------------------------------------


def write_matrix(matrix: ModPMatrix, sink: TextIO) -> None:
    """First line ``p rows cols``, then row-major residues."""
    nrows, ncols = matrix.shape
    sink.write(f"{matrix.p} {nrows} {ncols}\n")
    for row in matrix.rows:
        sink.write(" ".join(str(int(v)) for v in row) + "\n")


def read_matrix(source: TextIO) -> ModPMatrix:
    tokens = source.read().split()
    if len(tokens) < 3:
        raise ValueError("matrix text must start with 'p rows cols'")
    p, nrows, ncols = (int(t) for t in tokens[:3])
    body = tokens[3:]
    if len(body) != nrows * ncols:
        raise ValueError(f"expected {nrows * ncols} entries, got {len(body)}")
    arr = np.array([int(t) for t in body], dtype=np.int64).reshape(nrows, ncols)
    return ModPMatrix.from_rows(p, arr)
