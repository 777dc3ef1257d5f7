"""Tuples with pairwise-distinct entries over a finite group.

For a group G and arity k the configuration set is the subset of the
k-th direct power whose tuples repeat no entry.  These sets are natural
generating-set candidates for the power, and the predicates here decide
when a family of tuples interacts with them the way a generating family
should.
"""

from __future__ import annotations

import itertools
import random
from typing import Iterable, Iterator, Sequence

from .errors import OracleDisagreement
from .groups import Group, format_tuple, tuple_mul

_EXHAUSTIVE_PAIR_LIMIT = 1_000_000
_SAMPLE_PAIRS = 100_000


def falling_factorial(n: int, k: int) -> int:
    out = 1
    for i in range(k):
        out *= max(n - i, 0)
    return out


def config_count(group: Group, k: int) -> int:
    """|{k-tuples with pairwise-distinct entries}| = n(n-1)...(n-k+1)."""
    if k < 1:
        raise ValueError(f"arity must be >= 1, got {k}")
    return falling_factorial(group.order, k)


def config_iter(group: Group, k: int) -> Iterator[tuple[int, ...]]:
    """Distinct-entry k-tuples in lexicographic (= packed code) order.

    Empty when the group has fewer than k elements.
    """
    if k < 1:
        raise ValueError(f"arity must be >= 1, got {k}")
    return itertools.permutations(range(group.order), k)


def config_contains(group: Group, t: Sequence[int]) -> bool:
    """Whether the tuple has valid ids and pairwise-distinct entries."""
    for g in t:
        group.check_element(g)
    return len(set(t)) == len(t)


def punctured_config_iter(group: Group, k: int) -> Iterator[tuple[int, ...]]:
    """Distinct-entry k-tuples avoiding the identity, lexicographic order."""
    if k < 1:
        raise ValueError(f"arity must be >= 1, got {k}")
    return itertools.permutations(range(1, group.order), k)


def punctured_config_count(group: Group, k: int) -> int:
    if k < 1:
        raise ValueError(f"arity must be >= 1, got {k}")
    return falling_factorial(group.order - 1, k)


def norm(group: Group, t: Sequence[int]) -> int:
    """Left-to-right product of the entries of a tuple."""
    if not t:
        raise ValueError("norm needs arity >= 1")
    acc = t[0]
    group.check_element(acc)
    for g in t[1:]:
        acc = group.mul(acc, g)
    return acc


def norm_is_homomorphism(
    group: Group, k: int, *, rng: random.Random | None = None
) -> bool:
    """Whether |st| = |s||t| over the k-th power; true exactly for abelian groups.

    Exhaustive when the pair count is small.  Otherwise every pair of
    one-coordinate tuples (which already decides commutativity) is
    checked, plus a seeded random sample.
    """
    if k < 2:
        raise ValueError(f"needs arity >= 2, got {k}")
    n = group.order
    total = n**k

    def holds(s: tuple[int, ...], t: tuple[int, ...]) -> bool:
        return norm(group, tuple_mul(group, s, t)) == group.mul(
            norm(group, s), norm(group, t)
        )

    if total * total <= _EXHAUSTIVE_PAIR_LIMIT:
        everything = list(itertools.product(range(n), repeat=k))
        return all(holds(s, t) for s in everything for t in everything)
    for x in range(n):
        for y in range(n):
            s = (0, x) + (0,) * (k - 2)
            t = (y,) + (0,) * (k - 1)
            if not holds(s, t):
                return False
    rng = rng or random.Random(0)
    for _ in range(_SAMPLE_PAIRS):
        s = tuple(rng.randrange(n) for _ in range(k))
        t = tuple(rng.randrange(n) for _ in range(k))
        if not holds(s, t):
            return False
    return True


def project(t: Sequence[int]) -> tuple[int, ...]:
    """Drop the last entry."""
    if len(t) < 2:
        raise ValueError("projection needs arity >= 2")
    return tuple(t[:-1])


def _distinct(t: Sequence[int]) -> bool:
    return len(set(t)) == len(t)


def has_configuration_property(group: Group, X: Iterable[Sequence[int]]) -> bool:
    """Whether a set of (k+1)-tuples respects the distinct-entry sets.

    Requires (1) some member projects (by dropping the last entry) onto a
    distinct-entry k-tuple, and (2) every member that does is itself a
    distinct-entry (k+1)-tuple.  The empty set fails by convention.
    """
    members = [tuple(x) for x in X]
    if not members:
        return False
    arities = {len(x) for x in members}
    if len(arities) != 1:
        raise ValueError("mixed arities in tuple set")
    if arities.pop() < 2:
        raise ValueError("configuration property needs arity >= 2")
    for x in members:
        for g in x:
            group.check_element(g)
    meets = False
    for x in members:
        if _distinct(x[:-1]):
            meets = True
            if not _distinct(x):
                return False
    return meets


def augmented_config_property(
    group: Group, k: int, alpha: Sequence[int]
) -> bool:
    """Property verdict for the distinct-entry k-tuples plus one outside tuple.

    Holds exactly when the projection of ``alpha`` already repeats an
    entry; the direct evaluation and that criterion are cross-checked.
    """
    alpha = tuple(alpha)
    if len(alpha) != k:
        raise ValueError(f"alpha has arity {len(alpha)}, expected {k}")
    if k < 2:
        raise ValueError(f"needs arity >= 2, got {k}")
    if config_contains(group, alpha):
        raise ValueError("alpha must repeat an entry")
    if group.order < k + 1:
        raise ValueError(f"group order must be >= {k + 1}")
    X = list(config_iter(group, k))
    X.append(alpha)
    result = has_configuration_property(group, X)
    expected = not config_contains(group, project(alpha))
    if result != expected:
        raise OracleDisagreement(
            f"augmented property {result} but projection criterion {expected}"
        )
    return result


def standard_generators(group: Group, k: int) -> list[tuple[int, ...]]:
    """One-coordinate tuples: g in one slot, identity elsewhere; sorted.

    Duplicates of the all-identity tuple collapse, leaving k(|G|-1) + 1
    members.
    """
    if k < 1:
        raise ValueError(f"arity must be >= 1, got {k}")
    out = {(0,) * k}
    for pos in range(k):
        for g in range(1, group.order):
            t = [0] * k
            t[pos] = g
            out.add(tuple(t))
    return sorted(out)


def format_tuple_set(tuples: Iterable[Sequence[int]]) -> str:
    """One tuple per line, lexicographic order, trailing newline."""
    lines = [format_tuple(t) for t in sorted(tuple(t) for t in tuples)]
    return "\n".join(lines) + "\n" if lines else ""
