"""Subgroup closure, generation decisions, explicit factorizations, and the
abelian entry-product obstruction."""

import itertools
import random

import pytest

from confset import (
    OracleDisagreement,
    SubgroupCarrier,
    abelian_norm_obstruction,
    build_group,
    closure,
    config_contains,
    config_iter,
    diagonal_subgroup,
    direct_power,
    factor_diagonal_k2,
    factor_standard_generator,
    index,
    is_generating,
    norm,
    tuple_mul,
)


def naive_closure(group, seeds):
    """Reference oracle: repeated pairwise products until fixpoint.

    Deliberately dumb; no frontier tricks, no vectorization.
    """
    members = {group.identity}
    members.update(seeds)
    members.update(group.inv(g) for g in seeds)
    while True:
        fresh = set()
        for a in members:
            for b in members:
                c = group.mul(a, b)
                if c not in members:
                    fresh.add(c)
        if not fresh:
            return members
        members |= fresh


def packed(power, tuples):
    return [power.pack(t) for t in tuples]


# -- closure against the naive oracle ----------------------------------------------


def test_closure_matches_naive_on_random_seeds():
    g = build_group("Z4")
    p = direct_power(g, 2)
    rng = random.Random(0)
    for _ in range(25):
        seeds = [rng.randrange(p.order) for _ in range(rng.randrange(1, 4))]
        expected = naive_closure(p, seeds)
        got = closure(p, seeds)
        assert set(got.codes.tolist()) == expected


def test_closure_matches_naive_on_config_sets():
    for text, k in [("Z3", 3), ("S3", 2), ("Z2xZ2", 2), ("D3", 2)]:
        g = build_group(text)
        p = direct_power(g, k)
        seeds = packed(p, config_iter(g, k))
        expected = naive_closure(p, seeds)
        got = closure(p, seeds)
        assert set(got.codes.tolist()) == expected


def test_closure_frozen_z3_cube():
    g = build_group("Z3")
    p = direct_power(g, 3)
    sub = closure(p, list(config_iter(g, 3)))
    assert sub.size == 9
    assert sub.index() == 3
    # every member has zero entry sum: the obstruction subgroup
    for code in sub.codes.tolist():
        assert sum(p.unpack(code)) % 3 == 0


def test_closure_idempotent_and_inverse_invariant():
    g = build_group("S3")
    p = direct_power(g, 2)
    members = list(config_iter(g, 2))
    sub = closure(p, members)
    again = closure(p, sub.codes.tolist())
    assert sub.codes.tolist() == again.codes.tolist()
    with_inverses = members + [
        tuple(g.inv(v) for v in t) for t in members
    ]
    assert closure(p, with_inverses).codes.tolist() == sub.codes.tolist()


def test_closure_accepts_tuples_and_codes():
    g = build_group("Z4")
    p = direct_power(g, 2)
    a = closure(p, [(0, 1), (1, 0)])
    b = closure(p, [p.pack((0, 1)), p.pack((1, 0))])
    assert a.codes.tolist() == b.codes.tolist()


def test_is_generating_and_index():
    g = build_group("Z4")
    p = direct_power(g, 3)
    assert is_generating(p, list(config_iter(g, 3)))
    sub = closure(p, list(config_iter(g, 3)))
    assert index(sub) == 1


def test_closure_of_standard_generators_is_everything():
    from confset import standard_generators

    g = build_group("Z3")
    p = direct_power(g, 3)
    assert is_generating(p, standard_generators(g, 3))


# -- carrier invariants -------------------------------------------------------------


def test_carrier_verify_passes_on_real_subgroup():
    g = build_group("Z6")
    p = direct_power(g, 2)
    sub = closure(p, [(1, 1)])
    sub.verify()
    assert sub.size == 6
    assert sub.contains(p.pack((2, 2)))
    assert not sub.contains(p.pack((1, 2)))


def test_carrier_verify_rejects_corrupted_set():
    g = build_group("Z5")
    p = direct_power(g, 2)
    with pytest.raises(OracleDisagreement):
        SubgroupCarrier.from_members(p, [p.pack((0, 0)), p.pack((1, 2))], verify=True)


def test_carrier_rejects_lagrange_violation():
    g = build_group("Z5")
    p = direct_power(g, 1)
    # three elements cannot be a subgroup of a 5-element group
    with pytest.raises(OracleDisagreement):
        SubgroupCarrier.from_members(p, [0, 1, 4], verify=True)


def test_first_outside():
    g = build_group("Z3")
    p = direct_power(g, 3)
    sub = closure(p, list(config_iter(g, 3)))
    escape = sub.first_outside()
    assert escape is not None
    assert not sub.contains(escape)
    assert sum(p.unpack(escape)) % 3 != 0


def test_write_codes(tmp_path):
    g = build_group("Z2")
    p = direct_power(g, 2)
    sub = closure(p, list(config_iter(g, 2)))
    path = tmp_path / "codes.txt"
    with open(path, "w", encoding="utf-8") as fh:
        sub.write_codes(fh)
    assert path.read_text() == "0\n1\n2\n3\n"


# -- factorizations ------------------------------------------------------------------


def test_factor_diagonal_k2():
    for text in ("Z4", "D3", "S3", "Z5"):
        g = build_group(text)
        for v in range(1, g.order):
            a, b = factor_diagonal_k2(g, v)
            assert config_contains(g, a)
            assert config_contains(g, b)
            assert tuple_mul(g, a, b) == (v, v)


def test_factor_standard_generator_frozen_example():
    g = build_group("Z5")
    a, b = factor_standard_generator(g, 3, 2, 1)
    assert (a, b) == ((2, 3, 1), (3, 2, 0))
    assert tuple_mul(g, a, b) == (0, 0, 1)


def test_factor_standard_generator_sweep():
    for text, k in [("Z5", 3), ("Z5", 4), ("Z6", 3), ("S3", 3), ("S3", 4), ("D4", 3)]:
        g = build_group(text)
        for pos in range(k):
            for v in range(1, g.order):
                a, b = factor_standard_generator(g, k, pos, v)
                assert config_contains(g, a)
                assert config_contains(g, b)
                target = tuple(v if i == pos else 0 for i in range(k))
                assert tuple_mul(g, a, b) == target


def test_factor_standard_generator_validation():
    g = build_group("Z5")
    with pytest.raises(ValueError):
        factor_standard_generator(g, 2, 0, 1)  # needs k >= 3
    with pytest.raises(ValueError):
        factor_standard_generator(g, 5, 0, 1)  # needs |G| >= k+1
    with pytest.raises(ValueError):
        factor_standard_generator(g, 3, 0, 0)  # identity is not factored
    with pytest.raises(ValueError):
        factor_standard_generator(g, 3, 3, 1)  # position out of range


def test_z4_explicit_identities():
    g = build_group("Z4")
    combos = [
        ([(3, (2, 0, 1)), (3, (0, 1, 3)), (3, (1, 3, 0))], (1, 0, 0)),
        ([(1, (2, 0, 1)), (1, (3, 0, 1)), (1, (3, 1, 2))], (0, 1, 0)),
        ([(3, (0, 1, 2)), (3, (1, 3, 0)), (3, (3, 0, 1))], (0, 0, 1)),
    ]
    for combo, target in combos:
        acc = (0, 0, 0)
        for coeff, t in combo:
            assert config_contains(g, t)
            for _ in range(coeff):
                acc = tuple_mul(g, acc, t)
        assert acc == target


# -- generating sets must meet the distinct tuples (k = 2) -----------------------------


def test_generating_pairs_intersect_config_exhaustive_z2():
    g = build_group("Z2")
    p = direct_power(g, 2)
    squares = list(itertools.product(range(2), repeat=2))
    config = {t for t in squares if len(set(t)) == 2}
    for r in range(len(squares) + 1):
        for subset in itertools.combinations(squares, r):
            sub = closure(p, list(subset), verify=False)
            if sub.size == p.order:
                assert set(subset) & config


@pytest.mark.parametrize("text", ["Z3", "Z4"])
def test_generating_pairs_intersect_config_sampled(text):
    g = build_group(text)
    p = direct_power(g, 2)
    squares = list(itertools.product(range(g.order), repeat=2))
    config = {t for t in squares if len(set(t)) == 2}
    rng = random.Random(11)
    generating_seen = 0
    for _ in range(500):
        subset = {squares[rng.randrange(len(squares))] for _ in range(rng.randrange(1, 5))}
        sub = closure(p, list(subset), verify=False)
        if sub.size == p.order:
            generating_seen += 1
            assert subset & config
    assert generating_seen > 50


# -- abelian obstruction -----------------------------------------------------------


def test_obstruction_values():
    s, span = abelian_norm_obstruction(build_group("Z3"))
    assert s == 0 and span.size == 1
    s, span = abelian_norm_obstruction(build_group("Z4"))
    assert s == 2 and span.size == 2
    s, span = abelian_norm_obstruction(build_group("Z6"))
    assert s == 3 and span.size == 2
    s, span = abelian_norm_obstruction(build_group("Z2xZ2"))
    assert s == 0 and span.size == 1
    s, span = abelian_norm_obstruction(build_group("Z2xZ3"))
    assert s == 3 and span.size == 2  # product of non-identity elements is (1,0)


def test_obstruction_covers_all_member_norms():
    for text in ("Z3", "Z4", "Z2xZ2", "Z5"):
        g = build_group(text)
        s, span = abelian_norm_obstruction(g)
        # entries of a full-arity member are a permutation of G, so every
        # member has exactly the norm s
        for t in config_iter(g, g.order):
            assert norm(g, t) == s
        assert span.size < g.order  # proper subgroup: the obstruction bites


def test_obstruction_rejects_nonabelian():
    with pytest.raises(ValueError):
        abelian_norm_obstruction(build_group("D3"))


def test_obstruction_rejects_small_order():
    with pytest.raises(ValueError):
        abelian_norm_obstruction(build_group("Z2"))


# -- diagonal subgroup -------------------------------------------------------------


def test_diagonal_subgroup():
    g = build_group("S3")
    sub = diagonal_subgroup(g, 2)
    assert sub.size == 6
    assert sub.index() == 6
    p = direct_power(g, 2)
    for v in range(6):
        assert sub.contains(p.pack((v, v)))
    sub.verify()
