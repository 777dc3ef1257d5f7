"""Subgroup closure by breadth-first products, and generation certificates.

The closure of a tuple set inside a direct power decides whether the set
generates the power.  For abelian groups whose order equals the arity
there is an independent certificate: every distinct-entry tuple has the
same entry product, which pins the closure inside a proper subgroup.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, TextIO

import numpy as np

from .configsets import config_contains, config_iter, norm
from .errors import OracleDisagreement, OrderCapExceeded
from .groups import (
    DEFAULT_ORDER_CAP,
    DirectPowerGroup,
    Group,
    as_code,
    direct_power,
    format_tuple,
    tuple_inv,
    tuple_mul,
)

_EXHAUSTIVE_VERIFY_SIZE = 1000
_SAMPLED_VERIFY_PAIRS = 10_000


@dataclass
class SubgroupCarrier:
    """Element set of a subgroup, with the generator codes that produced it."""

    ambient: Group
    codes: np.ndarray  # sorted element codes
    generators: tuple[int, ...] = ()

    @property
    def size(self) -> int:
        return int(self.codes.size)

    def contains(self, x: int | Sequence[int]) -> bool:
        code = as_code(self.ambient, x)
        pos = int(np.searchsorted(self.codes, code))
        return pos < self.size and int(self.codes[pos]) == code

    def index(self) -> int:
        """Number of cosets in the ambient group (exact division enforced)."""
        q, r = divmod(self.ambient.order, self.size)
        if r:
            raise OracleDisagreement(
                f"subgroup size {self.size} does not divide order {self.ambient.order}"
            )
        return q

    def first_outside(self) -> int | None:
        """Least ambient code not in the subgroup, or None if it is everything."""
        if self.size == self.ambient.order:
            return None
        gaps = np.flatnonzero(self.codes != np.arange(self.size, dtype=np.int64))
        return int(gaps[0]) if gaps.size else self.size

    def tuples(self) -> Iterator[tuple[int, ...]]:
        if not isinstance(self.ambient, DirectPowerGroup):
            raise TypeError("ambient group is not a direct power")
        return (self.ambient.unpack(int(c)) for c in self.codes)

    def write_codes(self, sink: TextIO) -> None:
        """Sorted packed codes, one per line."""
        for c in self.codes:
            sink.write(f"{int(c)}\n")

    @classmethod
    def from_members(
        cls,
        ambient: Group,
        members: Iterable[int | Sequence[int]],
        generators: tuple[int, ...] = (),
        *,
        verify: bool = True,
        seed: int = 0,
    ) -> "SubgroupCarrier":
        codes = np.unique(
            np.array([as_code(ambient, m) for m in members], dtype=np.int64)
        )
        carrier = cls(ambient, codes, generators)
        if verify:
            carrier.verify(seed=seed)
        return carrier

    def _member_mask(self, codes: np.ndarray) -> np.ndarray:
        pos = np.searchsorted(self.codes, codes)
        pos = np.minimum(pos, self.size - 1)
        return self.codes[pos] == codes

    def verify(self, seed: int = 0) -> None:
        """Spot-check the subgroup axioms; raises OracleDisagreement on failure."""
        if self.size == 0 or int(self.codes[0]) != self.ambient.identity:
            raise OracleDisagreement("subgroup is missing the identity")
        self.index()  # Lagrange divisibility
        if not bool(np.all(self._member_mask(self.ambient.inv_many(self.codes)))):
            raise OracleDisagreement("subgroup is not closed under inverses")
        if self.size <= _EXHAUSTIVE_VERIFY_SIZE:
            a = np.repeat(self.codes, self.size)
            b = np.tile(self.codes, self.size)
        else:
            rng = random.Random(seed)
            idx_a = [rng.randrange(self.size) for _ in range(_SAMPLED_VERIFY_PAIRS)]
            idx_b = [rng.randrange(self.size) for _ in range(_SAMPLED_VERIFY_PAIRS)]
            a = self.codes[idx_a]
            b = self.codes[idx_b]
        if not bool(np.all(self._member_mask(self.ambient.mul_pairs(a, b)))):
            raise OracleDisagreement("subgroup is not closed under products")


def closure(
    ambient: Group,
    X: Iterable[int | Sequence[int]],
    *,
    cap: int = DEFAULT_ORDER_CAP,
    verify: bool = True,
    seed: int = 0,
) -> SubgroupCarrier:
    """Smallest subgroup of ``ambient`` containing X.

    Seeds with the identity and the symmetrized generators, then
    breadth-first multiplies frontier elements by generators until no new
    element appears.  The result is independent of traversal order.
    """
    if ambient.order > cap:
        raise OrderCapExceeded(
            f"ambient order {ambient.order} exceeds cap {cap}"
        )
    gens = sorted({as_code(ambient, x) for x in X})
    sym = sorted({*gens, *(ambient.inv(g) for g in gens)} - {ambient.identity})
    visited = np.zeros(ambient.order, dtype=bool)
    frontier = np.array([ambient.identity] + sym, dtype=np.int64)
    visited[frontier] = True
    while frontier.size:
        new_parts = []
        for s in sym:
            prods = np.unique(ambient.mul_many(frontier, s))
            prods = prods[~visited[prods]]
            if prods.size:
                visited[prods] = True
                new_parts.append(prods)
        if not new_parts:
            break
        frontier = np.concatenate(new_parts)
    carrier = SubgroupCarrier(ambient, np.flatnonzero(visited).astype(np.int64),
                              tuple(gens))
    if verify:
        carrier.verify(seed=seed)
    return carrier


def is_generating(
    ambient: Group,
    X: Iterable[int | Sequence[int]],
    *,
    cap: int = DEFAULT_ORDER_CAP,
) -> bool:
    """Whether the closure of X is the whole ambient group."""
    return closure(ambient, X, cap=cap, verify=False).size == ambient.order


def index(sub: SubgroupCarrier) -> int:
    return sub.index()


def factor_diagonal_k2(
    group: Group, g: int
) -> tuple[tuple[int, int], tuple[int, int]]:
    """Split the diagonal pair (g,g) into two distinct-entry pairs.

    (g,g) = (1,g) * (g,1) entrywise; both factors are distinct-entry
    pairs exactly when g is not the identity.
    """
    group.check_element(g)
    if g == group.identity:
        raise ValueError("g must not be the identity")
    first = (group.identity, g)
    second = (g, group.identity)
    assert tuple_mul(group, first, second) == (g, g)
    return first, second


def factor_standard_generator(
    group: Group, k: int, position: int, g: int
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Split a one-coordinate tuple into two distinct-entry k-tuples.

    The tuple with g at ``position`` and identity elsewhere factors as
    (h_1,..,g,..,h_{k-1}) * (h_1^-1,..,1,..,h_{k-1}^-1) where the h_i are
    the first k-1 element ids outside {identity, g}.  Needs k >= 3 and
    |G| >= k+1 so that enough h_i exist.
    """
    group.check_element(g)
    if k < 3:
        raise ValueError(f"needs arity >= 3, got {k}")
    if not 0 <= position < k:
        raise ValueError(f"position {position} out of range for arity {k}")
    if g == group.identity:
        raise ValueError("g must not be the identity")
    if group.order < k + 1:
        raise ValueError(f"group order must be >= {k + 1}")
    hs = [h for h in range(1, group.order) if h != g][: k - 1]
    first = list(hs)
    second = [group.inv(h) for h in hs]
    first.insert(position, g)
    second.insert(position, group.identity)
    target = [group.identity] * k
    target[position] = g
    f, s = tuple(first), tuple(second)
    assert config_contains(group, f) and config_contains(group, s)
    assert tuple_mul(group, f, s) == tuple(target)
    return f, s


def abelian_norm_obstruction(group: Group) -> tuple[int, SubgroupCarrier]:
    """Shared entry product of all distinct-entry |G|-tuples, and its span.

    For abelian G with |G| = k >= 3 every member of the configuration set
    is an arrangement of all of G, so its entry product is the fixed
    element s = product of the non-identity elements, and the closure of
    the configuration set lies inside the proper preimage of <s> under
    the product map.  Some element escapes <s>, certifying that the
    configuration set does not generate the power.
    """
    if not group.is_abelian:
        raise ValueError("norm obstruction needs an abelian group")
    k = group.order
    if k < 3:
        raise ValueError("needs group order >= 3")
    s = group.identity
    for g in range(1, group.order):
        s = group.mul(s, g)
    carrier = closure(group, [s])
    if math.factorial(k) <= 50_000:
        for t in config_iter(group, k):
            if norm(group, t) != s:
                raise OracleDisagreement(
                    f"tuple {format_tuple(t)} has norm {norm(group, t)}, expected {s}"
                )
    if carrier.size >= group.order:
        raise OracleDisagreement("norm span is not a proper subgroup")
    return s, carrier


def diagonal_subgroup(
    group: Group, k: int, cap: int = DEFAULT_ORDER_CAP
) -> SubgroupCarrier:
    """Constant tuples inside the k-th power; isomorphic copy of the base."""
    power = direct_power(group, k, cap)
    members = [power.pack((g,) * k) for g in group.elements()]
    return SubgroupCarrier.from_members(power, members)
