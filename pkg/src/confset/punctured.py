"""Rebasing distinct-entry tuples by their first entry.

Translating a distinct-entry (k+1)-tuple on the right by the inverse of
its first entry and dropping that entry lands in the distinct-entry
k-tuples over the non-identity elements.  The helpers here audit how far
that map is from a bijection: its fibers are the right-translates of a
punctured tuple, the induced map on fibers is a bijection, and the map
itself is multiplicative exactly for abelian groups.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Sequence

from .configsets import (
    config_contains,
    config_iter,
    punctured_config_count,
    punctured_config_iter,
)
from .groups import Group, format_tuple, tuple_mul

_EXHAUSTIVE_PAIR_LIMIT = 1_000_000
_SAMPLE_PAIRS = 100_000


def rebase(group: Group, t: Sequence[int]) -> tuple[int, ...]:
    """Right-translate by the first entry's inverse and drop that entry."""
    if len(t) < 2:
        raise ValueError("rebasing needs arity >= 2")
    for g in t:
        group.check_element(g)
    anchor_inv = group.inv(t[0])
    return tuple(group.mul(x, anchor_inv) for x in t[1:])


def rebase_image_check(group: Group, k: int) -> bool:
    """Image of the distinct (k+1)-tuples equals the punctured k-tuples."""
    image = {rebase(group, t) for t in config_iter(group, k + 1)}
    return image == set(punctured_config_iter(group, k))


def product_bijection_check(group: Group, k: int) -> bool:
    """t <-> (anchor, rebased remainder) is a bijection with G x punctured set."""
    n = group.order
    forward = {}
    for t in config_iter(group, k + 1):
        key = (t[0], rebase(group, t))
        if key in forward:
            return False
        back = (key[0], *(group.mul(h, key[0]) for h in key[1]))
        if back != t:
            return False
        forward[key] = t
    expected = {
        (g, q)
        for g in range(n)
        for q in punctured_config_iter(group, k)
    }
    return set(forward) == expected


@dataclass
class FiberSet:
    """All right-translates of a punctured tuple, anchored by the translator."""

    base: tuple[int, ...]
    members: tuple[tuple[int, ...], ...]


def fiber(group: Group, base: Sequence[int]) -> FiberSet:
    """The full rebase preimage of ``base``: {(g, p_1 g, ..., p_k g)}."""
    base = tuple(base)
    if not base:
        raise ValueError("fiber needs arity >= 1")
    for p in base:
        group.check_element(p)
        if p == group.identity:
            raise ValueError("base tuple must avoid the identity")
    if len(set(base)) != len(base):
        raise ValueError("base tuple must have distinct entries")
    members = []
    for g in group.elements():
        member = (g, *(group.mul(p, g) for p in base))
        assert config_contains(group, member)
        assert rebase(group, member) == base
        members.append(member)
    return FiberSet(base, tuple(sorted(members)))


@dataclass
class QuotientAudit:
    """Outcome of collapsing one fiber and asking if rebasing descends to a bijection."""

    group: str
    k: int
    base: tuple[int, ...]
    quotient_size: int
    image_size: int
    injective: bool
    surjective: bool

    @property
    def verdict(self) -> str:
        return "bijection" if self.injective and self.surjective else "not-a-bijection"

    def as_dict(self) -> dict:
        return {
            "group": self.group,
            "k": self.k,
            "base": list(self.base),
            "quotient_size": self.quotient_size,
            "image_size": self.image_size,
            "injective": self.injective,
            "surjective": self.surjective,
            "verdict": self.verdict,
        }


def literal_quotient_audit(
    group: Group, k: int, base: Sequence[int] | None = None
) -> QuotientAudit:
    """Collapse exactly one fiber to a point and audit the induced map.

    The quotient classes are that single fiber plus singletons for every
    other tuple.  Whenever a second fiber exists its members stay
    distinct classes sharing one image point, so the induced map fails
    injectivity; the audit records the verdict instead of assuming one.
    """
    if base is None:
        base = next(punctured_config_iter(group, k), None)
        if base is None:
            raise ValueError("punctured tuple set is empty; no base point exists")
    fib = fiber(group, tuple(base))
    collapsed = set(fib.members)
    values = [fib.base]
    for t in config_iter(group, k + 1):
        if t not in collapsed:
            values.append(rebase(group, t))
    image = set(punctured_config_iter(group, k))
    quotient_size = len(values)
    value_set = set(values)
    return QuotientAudit(
        group=group.name,
        k=k,
        base=fib.base,
        quotient_size=quotient_size,
        image_size=len(image),
        injective=len(value_set) == quotient_size,
        surjective=value_set == image,
    )


def orbit_quotient_check(group: Group, k: int) -> bool:
    """Collapsing every fiber yields a bijection onto the punctured tuples."""
    blocks: dict[tuple[int, ...], int] = {}
    for t in config_iter(group, k + 1):
        key = rebase(group, t)
        blocks[key] = blocks.get(key, 0) + 1
    expected = punctured_config_count(group, k)
    return (
        len(blocks) == expected
        and set(blocks) == set(punctured_config_iter(group, k))
        and all(v == group.order for v in blocks.values())
    )


def rebase_homomorphism_iff_abelian(
    group: Group, k: int, *, rng: random.Random | None = None
) -> bool:
    """Whether rebasing is multiplicative on the (k+1)-th power.

    Exhaustive when the pair count is small; otherwise every pair of
    one-coordinate tuples (already decisive for commutativity) plus a
    seeded random sample.
    """
    if k < 1:
        raise ValueError(f"needs k >= 1, got {k}")
    n = group.order
    arity = k + 1
    total = n**arity

    def holds(x: tuple[int, ...], y: tuple[int, ...]) -> bool:
        return rebase(group, tuple_mul(group, x, y)) == tuple_mul(
            group, rebase(group, x), rebase(group, y)
        )

    if total * total <= _EXHAUSTIVE_PAIR_LIMIT:
        everything = list(itertools.product(range(n), repeat=arity))
        return all(holds(x, y) for x in everything for y in everything)
    for a in range(n):
        for b in range(n):
            x = (a,) + (0,) * (arity - 1)
            y = (0, b) + (0,) * (arity - 2)
            if not holds(x, y):
                return False
    rng = rng or random.Random(0)
    for _ in range(_SAMPLE_PAIRS):
        x = tuple(rng.randrange(n) for _ in range(arity))
        y = tuple(rng.randrange(n) for _ in range(arity))
        if not holds(x, y):
            return False
    return True
