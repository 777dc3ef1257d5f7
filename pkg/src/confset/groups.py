"""Finite groups with dense integer element ids.

Every group's elements are the ids 0..order-1 and 0 is the identity.
Cyclic, dihedral, and symmetric groups multiply arithmetically; direct
products and direct powers combine factor ids in mixed radix with the
first factor (or tuple entry) most significant.  Small groups can also
be loaded from explicit multiplication tables.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import GroupSpecError, OrderCapExceeded

DEFAULT_ORDER_CAP = 1 << 26

# Dense product tables are only materialized for small base groups; the
# vectorized direct-power paths depend on them.
TABLE_CACHE_LIMIT = 4096

_FULL_ASSOC_LIMIT = 24
_SAMPLED_ASSOC_TRIPLES = 4096


def format_tuple(t: Sequence[int]) -> str:
    """Render a tuple of element ids as ``(0,1,2)`` (no spaces)."""
    return "(" + ",".join(str(int(g)) for g in t) + ")"


class Group:
    """Finite group on element ids 0..order-1 with 0 as the identity."""

    identity = 0

    def __init__(self, name: str, order: int):
        self.name = name
        self.order = order
        self.cache_tables = True
        self._element_orders: dict[int, int] = {}
        self._mul_table: np.ndarray | None = None
        self._inv_table: np.ndarray | None = None
        self._is_abelian: bool | None = None

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"<{type(self).__name__} {self.name} order={self.order}>"

    def mul(self, a: int, b: int) -> int:
        raise NotImplementedError

    def inv(self, a: int) -> int:
        raise NotImplementedError

    def elements(self) -> range:
        return range(self.order)

    def check_element(self, g: int) -> None:
        if not 0 <= g < self.order:
            raise ValueError(f"element id {g} out of range for {self.name}")

    def label(self, g: int) -> str:
        return str(g)

    def element_order(self, g: int) -> int:
        """Smallest m >= 1 with g^m equal to the identity."""
        self.check_element(g)
        cached = self._element_orders.get(g)
        if cached is None:
            m, acc = 1, g
            while acc != self.identity:
                acc = self.mul(acc, g)
                m += 1
            self._element_orders[g] = cached = m
        return cached

    @property
    def is_abelian(self) -> bool:
        if self._is_abelian is None:
            self._is_abelian = self._compute_is_abelian()
        return self._is_abelian

    def _compute_is_abelian(self) -> bool:
        return all(
            self.mul(a, b) == self.mul(b, a)
            for a in self.elements()
            for b in self.elements()
        )

    # -- dense tables (small groups only) --------------------------------

    def mul_table(self) -> np.ndarray | None:
        """Full product table, or None above the cache limit."""
        if not self.cache_tables or self.order > TABLE_CACHE_LIMIT:
            return None
        if self._mul_table is None:
            n = self.order
            t = np.empty((n, n), dtype=np.int64)
            for a in range(n):
                row = t[a]
                for b in range(n):
                    row[b] = self.mul(a, b)
            self._mul_table = t
        return self._mul_table

    def inv_table(self) -> np.ndarray | None:
        if not self.cache_tables or self.order > TABLE_CACHE_LIMIT:
            return None
        if self._inv_table is None:
            self._inv_table = np.fromiter(
                (self.inv(a) for a in self.elements()), dtype=np.int64, count=self.order
            )
        return self._inv_table

    # -- vectorized hooks (overridden where it matters) -------------------

    def mul_many(self, codes: np.ndarray, s: int) -> np.ndarray:
        """Right-multiply an id array by the fixed element s."""
        codes = np.asarray(codes, dtype=np.int64)
        return np.fromiter(
            (self.mul(int(c), s) for c in codes), dtype=np.int64, count=codes.size
        )

    def mul_pairs(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        return np.fromiter(
            (self.mul(int(x), int(y)) for x, y in zip(a, b)),
            dtype=np.int64,
            count=a.size,
        )

    def inv_many(self, codes: np.ndarray) -> np.ndarray:
        codes = np.asarray(codes, dtype=np.int64)
        return np.fromiter(
            (self.inv(int(c)) for c in codes), dtype=np.int64, count=codes.size
        )


class CyclicGroup(Group):
    """Additive integers modulo n."""

    def __init__(self, n: int):
        if n < 1:
            raise ValueError(f"cyclic parameter must be >= 1, got {n}")
        super().__init__(f"Z{n}", n)
        self._is_abelian = True

    def mul(self, a: int, b: int) -> int:
        return (a + b) % self.order

    def inv(self, a: int) -> int:
        return (-a) % self.order

    def element_order(self, g: int) -> int:
        self.check_element(g)
        return self.order // math.gcd(self.order, g) if g else 1

    def mul_table(self) -> np.ndarray | None:
        if not self.cache_tables or self.order > TABLE_CACHE_LIMIT:
            return None
        if self._mul_table is None:
            r = np.arange(self.order, dtype=np.int64)
            self._mul_table = (r[:, None] + r[None, :]) % self.order
        return self._mul_table


class DihedralGroup(Group):
    """Symmetries of a regular n-gon, order 2n.

    Rotation by i steps has id i (0 <= i < n); the reflection obtained by
    following rotation i with the base reflection has id n + i.
    """

    def __init__(self, n: int):
        if n < 3:
            raise ValueError(f"dihedral parameter must be >= 3, got {n}")
        super().__init__(f"D{n}", 2 * n)
        self.sides = n
        self._is_abelian = False

    def mul(self, a: int, b: int) -> int:
        n = self.sides
        ra, rb = a % n, b % n
        if a < n:  # rotation * x
            r = (ra + rb) % n
            return r if b < n else r + n
        r = (ra - rb) % n  # reflection * x flips the rotation part
        return r + n if b < n else r

    def inv(self, a: int) -> int:
        n = self.sides
        return (n - a) % n if a < n else a

    def element_order(self, g: int) -> int:
        self.check_element(g)
        n = self.sides
        if g >= n:
            return 2
        return n // math.gcd(n, g) if g else 1


def perm_rank(p: Sequence[int]) -> int:
    """Lexicographic rank of a permutation of 0..n-1 (identity ranks 0)."""
    r = 0
    n = len(p)
    for i in range(n):
        smaller = sum(1 for j in range(i + 1, n) if p[j] < p[i])
        r = r * (n - i) + smaller
    return r


def perm_unrank(n: int, r: int) -> tuple[int, ...]:
    """Inverse of perm_rank."""
    digits = []
    for base in range(1, n + 1):
        digits.append(r % base)
        r //= base
    if r:
        raise ValueError("rank out of range")
    avail = list(range(n))
    return tuple(avail.pop(d) for d in reversed(digits))


class SymmetricGroup(Group):
    """All permutations of 0..n-1, ranked lexicographically."""

    _CACHE_MAX_ORDER = 40320  # keep the full permutation list through S8

    def __init__(self, n: int):
        if n < 1:
            raise ValueError(f"symmetric parameter must be >= 1, got {n}")
        super().__init__(f"S{n}", math.factorial(n))
        self.degree = n
        self._is_abelian = n <= 2
        self._perms: list[tuple[int, ...]] | None = None
        self._ranks: dict[tuple[int, ...], int] | None = None
        if self.order <= self._CACHE_MAX_ORDER:
            self._perms = list(itertools.permutations(range(n)))
            self._ranks = {p: i for i, p in enumerate(self._perms)}

    def perm(self, g: int) -> tuple[int, ...]:
        self.check_element(g)
        if self._perms is not None:
            return self._perms[g]
        return perm_unrank(self.degree, g)

    def rank(self, p: Sequence[int]) -> int:
        if self._ranks is not None:
            return self._ranks[tuple(p)]
        return perm_rank(p)

    def mul(self, a: int, b: int) -> int:
        pa, pb = self.perm(a), self.perm(b)
        return self.rank(tuple(pa[pb[i]] for i in range(self.degree)))

    def inv(self, a: int) -> int:
        pa = self.perm(a)
        q = [0] * self.degree
        for i, v in enumerate(pa):
            q[v] = i
        return self.rank(tuple(q))

    def element_order(self, g: int) -> int:
        p = self.perm(g)
        seen = [False] * self.degree
        order = 1
        for start in range(self.degree):
            if seen[start]:
                continue
            length, j = 0, start
            while not seen[j]:
                seen[j] = True
                j = p[j]
                length += 1
            order = math.lcm(order, length)
        return order


class TableGroup(Group):
    """Group defined by an explicit multiplication table (row = left factor)."""

    def __init__(self, table: np.ndarray, name: str = "table"):
        table = np.asarray(table, dtype=np.int64)
        if table.ndim != 2 or table.shape[0] != table.shape[1]:
            raise ValueError("multiplication table must be square")
        n = table.shape[0]
        super().__init__(f"{name}({n})", n)
        self._table = table
        self._check_axioms()
        self._mul_table = table

    @classmethod
    def from_file(cls, path: str) -> "TableGroup":
        try:
            with open(path, encoding="utf-8") as fh:
                tokens = fh.read().split()
        except OSError as exc:
            raise GroupSpecError(f"cannot read table file {path!r}: {exc}") from exc
        if not tokens:
            raise GroupSpecError(f"table file {path!r} is empty")
        n = int(tokens[0])
        if n < 1 or len(tokens) != 1 + n * n:
            raise GroupSpecError(
                f"table file {path!r} must hold an order line and {n}x{n} entries"
            )
        table = np.array([int(t) for t in tokens[1:]], dtype=np.int64).reshape(n, n)
        return cls(table, name="table")

    def _check_axioms(self) -> None:
        t = self._table
        n = self.order
        ar = np.arange(n, dtype=np.int64)
        if t.min() < 0 or t.max() >= n:
            raise GroupSpecError("table entries are not valid element ids")
        if not (np.array_equal(t[0], ar) and np.array_equal(t[:, 0], ar)):
            raise GroupSpecError("id 0 is not a two-sided identity in the table")
        # Latin-square rows/columns give cancellation and two-sided inverses.
        if not all(np.array_equal(np.sort(t[i]), ar) for i in range(n)):
            raise GroupSpecError("some table row is not a permutation")
        if not all(np.array_equal(np.sort(t[:, i]), ar) for i in range(n)):
            raise GroupSpecError("some table column is not a permutation")
        if n <= _FULL_ASSOC_LIMIT:
            ok = np.array_equal(t[t, :], t[:, t])
        else:
            rng = random.Random(0)
            ok = all(
                t[t[a, b], c] == t[a, t[b, c]]
                for a, b, c in (
                    (rng.randrange(n), rng.randrange(n), rng.randrange(n))
                    for _ in range(_SAMPLED_ASSOC_TRIPLES)
                )
            )
        if not ok:
            raise GroupSpecError("table is not associative")

    def mul(self, a: int, b: int) -> int:
        return int(self._table[a, b])

    def inv(self, a: int) -> int:
        return int(np.flatnonzero(self._table[a] == 0)[0])

    def mul_table(self) -> np.ndarray | None:
        return self._table


class DirectProductGroup(Group):
    """Componentwise product; ids mix factor ids with the first factor most significant."""

    def __init__(self, factors: Sequence[Group], name: str | None = None):
        factors = tuple(factors)
        if not factors:
            raise ValueError("direct product needs at least one factor")
        order = math.prod(f.order for f in factors)
        super().__init__(name or "x".join(f.name for f in factors), order)
        self.factors = factors
        weights = []
        w = order
        for f in factors:
            w //= f.order
            weights.append(w)
        self._weights = tuple(weights)

    def split(self, g: int) -> tuple[int, ...]:
        self.check_element(g)
        return tuple((g // w) % f.order for w, f in zip(self._weights, self.factors))

    def join(self, parts: Sequence[int]) -> int:
        return sum(p * w for p, w in zip(parts, self._weights))

    def mul(self, a: int, b: int) -> int:
        return self.join(
            f.mul(x, y) for f, x, y in zip(self.factors, self.split(a), self.split(b))
        )

    def inv(self, a: int) -> int:
        return self.join(f.inv(x) for f, x in zip(self.factors, self.split(a)))

    def element_order(self, g: int) -> int:
        return math.lcm(
            *(f.element_order(x) for f, x in zip(self.factors, self.split(g)))
        )

    def _compute_is_abelian(self) -> bool:
        return all(f.is_abelian for f in self.factors)


class DirectPowerGroup(Group):
    """k-th direct power of a base group over packed tuple codes.

    A tuple (g_0,...,g_{k-1}) packs to the mixed-radix integer with g_0
    most significant, so code order and lexicographic tuple order agree.
    """

    def __init__(self, base: Group, k: int, cap: int = DEFAULT_ORDER_CAP):
        if k < 1:
            raise ValueError(f"power arity must be >= 1, got {k}")
        order = base.order**k
        if order > cap:
            raise OrderCapExceeded(
                f"direct power order {base.order}^{k} = {order} exceeds cap {cap}"
            )
        super().__init__(f"{base.name}^{k}", order)
        self.base = base
        self.arity = k
        self._weights = np.array(
            [base.order ** (k - 1 - i) for i in range(k)], dtype=np.int64
        )

    def pack(self, t: Sequence[int]) -> int:
        if len(t) != self.arity:
            raise ValueError(f"expected arity {self.arity}, got {len(t)}")
        code = 0
        for g in t:
            self.base.check_element(g)
            code = code * self.base.order + g
        return code

    def unpack(self, code: int) -> tuple[int, ...]:
        self.check_element(code)
        n = self.base.order
        out = []
        for _ in range(self.arity):
            code, r = divmod(code, n)
            out.append(r)
        return tuple(reversed(out))

    def tuples(self) -> Iterable[tuple[int, ...]]:
        return itertools.product(range(self.base.order), repeat=self.arity)

    def label(self, g: int) -> str:
        return format_tuple(self.unpack(g))

    def mul(self, a: int, b: int) -> int:
        base = self.base
        return self.pack(
            tuple(base.mul(x, y) for x, y in zip(self.unpack(a), self.unpack(b)))
        )

    def inv(self, a: int) -> int:
        base = self.base
        return self.pack(tuple(base.inv(x) for x in self.unpack(a)))

    def element_order(self, g: int) -> int:
        return math.lcm(*(self.base.element_order(x) for x in self.unpack(g)))

    def _compute_is_abelian(self) -> bool:
        return self.base.is_abelian

    # -- vectorized paths --------------------------------------------------

    def mul_many(self, codes: np.ndarray, s: int) -> np.ndarray:
        table = self.base.mul_table()
        if table is None:
            return super().mul_many(codes, s)
        codes = np.asarray(codes, dtype=np.int64)
        out = np.zeros(codes.shape, dtype=np.int64)
        n = self.base.order
        for w, sd in zip(self._weights, self.unpack(int(s))):
            out += table[(codes // w) % n, sd] * w
        return out

    def mul_pairs(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        table = self.base.mul_table()
        if table is None:
            return super().mul_pairs(a, b)
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        out = np.zeros(a.shape, dtype=np.int64)
        n = self.base.order
        for w in self._weights:
            out += table[(a // w) % n, (b // w) % n] * w
        return out

    def inv_many(self, codes: np.ndarray) -> np.ndarray:
        itab = self.base.inv_table()
        if itab is None:
            return super().inv_many(codes)
        codes = np.asarray(codes, dtype=np.int64)
        out = np.zeros(codes.shape, dtype=np.int64)
        n = self.base.order
        for w in self._weights:
            out += itab[(codes // w) % n] * w
        return out


def direct_power(base: Group, k: int, cap: int = DEFAULT_ORDER_CAP) -> DirectPowerGroup:
    """k-fold direct power of ``base`` with entrywise operations."""
    return DirectPowerGroup(base, k, cap)


def as_code(ambient: Group, x: int | Sequence[int]) -> int:
    """Normalize an element given as id/code or, for powers, as a tuple."""
    if isinstance(x, (tuple, list)):
        if not isinstance(ambient, DirectPowerGroup):
            raise TypeError(f"{ambient.name} elements are plain ids, not tuples")
        return ambient.pack(tuple(x))
    code = int(x)
    ambient.check_element(code)
    return code


def tuple_mul(base: Group, s: Sequence[int], t: Sequence[int]) -> tuple[int, ...]:
    """Entrywise product of two tuples over the base group."""
    if len(s) != len(t):
        raise ValueError("tuple arities differ")
    return tuple(base.mul(a, b) for a, b in zip(s, t))


def tuple_inv(base: Group, t: Sequence[int]) -> tuple[int, ...]:
    """Entrywise inverse of a tuple over the base group."""
    return tuple(base.inv(a) for a in t)


# -- spec grammar --------------------------------------------------------


@dataclass(frozen=True)
class GroupAtom:
    kind: str  # "Z" | "D" | "S" | "table"
    param: int = 0
    path: str = ""

    def order(self) -> int:
        if self.kind == "Z":
            return self.param
        if self.kind == "D":
            return 2 * self.param
        if self.kind == "S":
            return math.factorial(self.param)
        return self.param  # table: order read from the file header


@dataclass(frozen=True)
class GroupSpec:
    text: str
    atoms: tuple[GroupAtom, ...]
    order: int


_ATOM_BOUNDS = {"Z": 1, "D": 3, "S": 1}


def _read_table_order(path: str) -> int:
    try:
        with open(path, encoding="utf-8") as fh:
            first = fh.readline().split()
    except OSError as exc:
        raise GroupSpecError(f"cannot read table file {path!r}: {exc}") from exc
    if not first:
        raise GroupSpecError(f"table file {path!r} is empty")
    try:
        n = int(first[0])
    except ValueError as exc:
        raise GroupSpecError(f"table file {path!r} has a malformed order line") from exc
    if n < 1:
        raise GroupSpecError(f"table file {path!r} declares order {n}")
    return n


def _parse_atom(s: str, i: int) -> tuple[GroupAtom, int]:
    if s.startswith("table:", i):
        # The path runs to the next 'x' separator or end of string, so
        # table paths themselves must not contain a bare 'x'.
        j = s.find("x", i + 6)
        j = len(s) if j < 0 else j
        path = s[i + 6 : j]
        if not path:
            raise GroupSpecError("empty table path", i + 6)
        return GroupAtom("table", _read_table_order(path), path), j
    c = s[i] if i < len(s) else ""
    if c in _ATOM_BOUNDS:
        j = i + 1
        while j < len(s) and s[j].isdigit():
            j += 1
        if j == i + 1:
            raise GroupSpecError(f"expected integer after {c!r}", i + 1)
        n = int(s[i + 1 : j])
        if n < _ATOM_BOUNDS[c]:
            raise GroupSpecError(
                f"atom {c}{n} out of range (minimum {c}{_ATOM_BOUNDS[c]})", i
            )
        return GroupAtom(c, n), j
    raise GroupSpecError("expected atom 'Z'|'D'|'S'|'table:'", i)


def parse_group_spec(text: str, cap: int = DEFAULT_ORDER_CAP) -> GroupSpec:
    """Parse ``atom {"x" atom}`` group spec text, e.g. ``Z2xZ2`` or ``D3``."""
    s = text.strip()
    if not s:
        raise GroupSpecError("empty group spec", 0)
    atoms: list[GroupAtom] = []
    i = 0
    while True:
        atom, i = _parse_atom(s, i)
        atoms.append(atom)
        if i == len(s):
            break
        if s[i] != "x":
            raise GroupSpecError(f"expected 'x' or end of spec, found {s[i]!r}", i)
        i += 1
    order = math.prod(a.order() for a in atoms)
    if order > cap:
        raise OrderCapExceeded(f"group order {order} exceeds cap {cap}")
    return GroupSpec(s, tuple(atoms), order)


def _build_atom(atom: GroupAtom) -> Group:
    if atom.kind == "Z":
        return CyclicGroup(atom.param)
    if atom.kind == "D":
        return DihedralGroup(atom.param)
    if atom.kind == "S":
        return SymmetricGroup(atom.param)
    return TableGroup.from_file(atom.path)


def build_group(spec: GroupSpec | str, cap: int = DEFAULT_ORDER_CAP) -> Group:
    """Construct the group named by a GroupSpec (or raw spec text)."""
    if isinstance(spec, str):
        spec = parse_group_spec(spec, cap)
    factors = [_build_atom(a) for a in spec.atoms]
    if len(factors) == 1:
        return factors[0]
    return DirectProductGroup(factors)


# -- homomorphism transport ------------------------------------------------


def _as_id_map(f: Mapping[int, int] | Sequence[int], order: int) -> list[int]:
    if isinstance(f, Mapping):
        return [int(f[g]) for g in range(order)]
    out = [int(v) for v in f]
    if len(out) != order:
        raise ValueError(f"map covers {len(out)} ids, expected {order}")
    return out


def verify_homomorphism(
    domain: Group,
    codomain: Group,
    f: Mapping[int, int] | Sequence[int],
    *,
    rng: random.Random | None = None,
    exhaustive_pairs: int = 10_000,
    sample_pairs: int = 100_000,
) -> list[int]:
    """Check f(ab) = f(a)f(b); exhaustive for small domains, sampled above.

    Returns the map as a dense id list.
    """
    fm = _as_id_map(f, domain.order)
    for v in fm:
        codomain.check_element(v)
    n = domain.order
    if n * n <= exhaustive_pairs:
        pairs: Iterable[tuple[int, int]] = itertools.product(range(n), repeat=2)
    else:
        rng = rng or random.Random(0)
        pairs = ((rng.randrange(n), rng.randrange(n)) for _ in range(sample_pairs))
    for a, b in pairs:
        if fm[domain.mul(a, b)] != codomain.mul(fm[a], fm[b]):
            raise ValueError(f"map is not a homomorphism at pair ({a}, {b})")
    return fm


def hom_power_transport(
    domain: Group,
    codomain: Group,
    f: Mapping[int, int] | Sequence[int],
    tuples: Iterable[Sequence[int]],
    *,
    rng: random.Random | None = None,
) -> set[tuple[int, ...]]:
    """Apply a verified isomorphism entrywise to a set of tuples."""
    if domain.order != codomain.order:
        raise ValueError("transport needs groups of equal order")
    fm = verify_homomorphism(domain, codomain, f, rng=rng)
    if sorted(fm) != list(range(codomain.order)):
        raise ValueError("map is not a bijection on element ids")
    return {tuple(fm[g] for g in t) for t in tuples}
