"""Group encodings, the expression parser, and homomorphism helpers."""

import itertools
import math
import random

import pytest

from confset import (
    CyclicGroup,
    DihedralGroup,
    DirectPowerGroup,
    DirectProductGroup,
    GroupSpecError,
    OrderCapExceeded,
    SymmetricGroup,
    TableGroup,
    build_group,
    direct_power,
    hom_power_transport,
    parse_group_spec,
    perm_rank,
    perm_unrank,
    tuple_inv,
    tuple_mul,
    verify_homomorphism,
)
from confset.groups import as_code


def brute_order(group, g):
    acc, n = g, 1
    while acc != group.identity:
        acc = group.mul(acc, g)
        n += 1
    return n


# -- parser -------------------------------------------------------------------


def test_parse_atoms():
    assert parse_group_spec("Z12").order == 12
    assert parse_group_spec("D4").order == 8
    assert parse_group_spec("S4").order == 24
    assert parse_group_spec("Z2xZ3xS3").order == 36
    assert parse_group_spec(" Z2xZ2 ").order == 4  # edges are stripped


@pytest.mark.parametrize("bad", ["", "Q8", "Z", "Zx", "Z2x", "xZ2", "Z2xxZ3", "D2", "S0", "Z0"])
def test_parse_rejects(bad):
    with pytest.raises(GroupSpecError):
        parse_group_spec(bad)


def test_parse_error_positions():
    with pytest.raises(GroupSpecError) as exc:
        parse_group_spec("Z2xQ8")
    assert "position 3" in str(exc.value)


def test_parse_order_cap():
    with pytest.raises(OrderCapExceeded):
        parse_group_spec("S8xS8", cap=10**6)


# -- cyclic -------------------------------------------------------------------


def test_cyclic_basics():
    g = CyclicGroup(6)
    assert g.order == 6 and g.identity == 0
    assert g.mul(4, 5) == 3
    assert g.inv(2) == 4
    for x in range(6):
        assert g.element_order(x) == brute_order(g, x)
    assert g.is_abelian


# -- dihedral -----------------------------------------------------------------


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_dihedral_relations(n):
    g = DihedralGroup(n)
    r, a = 1, n  # a rotation generator and a reflection
    rn = 0
    for _ in range(n):
        rn = g.mul(rn, r)
    assert rn == g.identity
    assert g.mul(a, a) == g.identity
    # a r a = r^-1
    assert g.mul(g.mul(a, r), a) == g.inv(r)
    for x in range(2 * n):
        assert g.mul(x, g.inv(x)) == g.identity
        assert g.element_order(x) == brute_order(g, x)
    assert not g.is_abelian


def test_dihedral_order_multiset():
    g = DihedralGroup(3)
    orders = sorted(g.element_order(x) for x in range(6))
    assert orders == [1, 2, 2, 2, 3, 3]


def test_dihedral_associativity_exhaustive():
    g = DihedralGroup(4)
    for a in range(8):
        for b in range(8):
            for c in range(8):
                assert g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c))


# -- symmetric ----------------------------------------------------------------


def test_perm_rank_unrank_roundtrip():
    for n in range(1, 6):
        for r, p in enumerate(itertools.permutations(range(n))):
            assert perm_rank(p) == r
            assert perm_unrank(n, r) == p


def test_symmetric_composition():
    g = SymmetricGroup(3)
    # rank 0 is the identity permutation
    assert g.identity == 0
    pa = perm_rank((1, 0, 2))
    pb = perm_rank((0, 2, 1))
    # composition applies the right factor first
    left = perm_unrank(3, g.mul(pa, pb))
    pa_t, pb_t = (1, 0, 2), (0, 2, 1)
    assert left == tuple(pa_t[pb_t[i]] for i in range(3))
    orders = sorted(g.element_order(x) for x in range(6))
    assert orders == [1, 2, 2, 2, 3, 3]
    assert not g.is_abelian
    assert SymmetricGroup(2).is_abelian


def test_symmetric_inverse():
    g = SymmetricGroup(4)
    rng = random.Random(0)
    for _ in range(50):
        x = rng.randrange(24)
        assert g.mul(x, g.inv(x)) == 0
        assert g.mul(g.inv(x), x) == 0


# -- table groups ---------------------------------------------------------------


def test_table_group_accepts_z4_table():
    z4 = CyclicGroup(4)
    table = [[z4.mul(a, b) for b in range(4)] for a in range(4)]
    g = TableGroup(table)
    assert g.order == 4
    assert g.is_abelian
    for a in range(4):
        for b in range(4):
            assert g.mul(a, b) == z4.mul(a, b)


def test_table_group_rejects_broken_latin_square():
    table = [[0, 1], [1, 1]]
    with pytest.raises(GroupSpecError):
        TableGroup(table)


def test_table_group_rejects_wrong_identity():
    table = [[1, 0], [0, 1]]
    with pytest.raises(GroupSpecError):
        TableGroup(table)


def test_table_group_rejects_nonassociative_loop():
    # order-5 loop: Latin square with identity 0 but (1*1)*2 != 1*(1*2)
    table = [
        [0, 1, 2, 3, 4],
        [1, 0, 3, 4, 2],
        [2, 3, 4, 0, 1],
        [3, 4, 1, 2, 0],
        [4, 2, 0, 1, 3],
    ]
    with pytest.raises(GroupSpecError):
        TableGroup(table)


def test_table_group_from_file(tmp_path):
    z3 = CyclicGroup(3)
    path = tmp_path / "z3.tbl"
    rows = [" ".join(str(z3.mul(a, b)) for b in range(3)) for a in range(3)]
    path.write_text("3\n" + "\n".join(rows) + "\n")
    g = TableGroup.from_file(str(path))
    assert g.order == 3
    spec = parse_group_spec(f"table:{path}")
    assert spec.order == 3
    built = build_group(spec)
    assert built.mul(1, 2) == 0


# -- products and powers ----------------------------------------------------------


def test_direct_product_orders():
    g = DirectProductGroup([CyclicGroup(2), CyclicGroup(3)])
    assert g.order == 6
    assert g.is_abelian
    orders = sorted(g.element_order(x) for x in range(6))
    assert orders == [1, 2, 3, 3, 6, 6]


def test_direct_product_mixed_radix_is_lexicographic():
    g = DirectProductGroup([CyclicGroup(2), CyclicGroup(3)])
    tuples = [g.split(x) for x in range(6)]
    assert tuples == sorted(tuples)
    for x in range(6):
        assert g.join(g.split(x)) == x


def test_direct_power_pack_unpack():
    base = DihedralGroup(3)
    p = direct_power(base, 3)
    assert p.order == 216
    seen = []
    for code in range(p.order):
        t = p.unpack(code)
        assert p.pack(t) == code
        seen.append(t)
    assert seen == sorted(seen)  # code order is lexicographic tuple order


def test_direct_power_componentwise_ops():
    base = CyclicGroup(4)
    p = direct_power(base, 2)
    a = p.pack((1, 3))
    b = p.pack((2, 2))
    assert p.unpack(p.mul(a, b)) == (3, 1)
    assert p.unpack(p.inv(a)) == (3, 1)
    assert p.label(a) == "(1,3)"


def test_direct_power_vectorized_matches_scalar():
    import numpy as np

    base = DihedralGroup(3)
    p = direct_power(base, 2)
    rng = random.Random(1)
    codes = np.array([rng.randrange(p.order) for _ in range(200)], dtype=np.int64)
    s = rng.randrange(p.order)
    got = p.mul_many(codes, s)
    expect = [p.mul(int(c), s) for c in codes]
    assert got.tolist() == expect
    other = np.array([rng.randrange(p.order) for _ in range(200)], dtype=np.int64)
    assert p.mul_pairs(codes, other).tolist() == [
        p.mul(int(a), int(b)) for a, b in zip(codes, other)
    ]
    assert p.inv_many(codes).tolist() == [p.inv(int(c)) for c in codes]


def test_direct_power_cap():
    with pytest.raises(OrderCapExceeded):
        direct_power(SymmetricGroup(4), 10, cap=10**9)


def test_tuple_helpers():
    base = CyclicGroup(5)
    assert tuple_mul(base, (1, 2, 3), (4, 4, 4)) == (0, 1, 2)
    assert tuple_inv(base, (1, 2, 0)) == (4, 3, 0)


def test_as_code_validation():
    p = direct_power(CyclicGroup(3), 2)
    assert as_code(p, (1, 2)) == p.pack((1, 2))
    assert as_code(p, 4) == 4
    with pytest.raises(ValueError):
        as_code(p, 9)
    with pytest.raises(TypeError):
        as_code(CyclicGroup(3), (0, 1))


# -- homomorphisms ---------------------------------------------------------------


def test_verify_homomorphism_accepts_doubling():
    z2, z4 = CyclicGroup(2), CyclicGroup(4)
    f = verify_homomorphism(z2, z4, {0: 0, 1: 2}, rng=random.Random(0))
    assert f == [0, 2]


def test_verify_homomorphism_rejects_shift():
    z4 = CyclicGroup(4)
    with pytest.raises(ValueError):
        verify_homomorphism(z4, z4, [1, 2, 3, 0], rng=random.Random(0))


def _find_isomorphism(a, b):
    """Brute-force isomorphism search; identity must map to identity."""
    n = a.order
    for tail in itertools.permutations(range(1, n)):
        f = (0,) + tail
        if all(
            f[a.mul(x, y)] == b.mul(f[x], f[y]) for x in range(n) for y in range(n)
        ):
            return list(f)
    return None


def test_dihedral_symmetric_isomorphism_transport():
    d3, s3 = DihedralGroup(3), SymmetricGroup(3)
    f = _find_isomorphism(d3, s3)
    assert f is not None
    from confset import config_iter

    image = hom_power_transport(d3, s3, f, config_iter(d3, 2), rng=random.Random(0))
    assert image == set(config_iter(s3, 2))


def test_identity_and_negation_transport():
    from confset import config_iter

    z3 = CyclicGroup(3)
    fixed = set(config_iter(z3, 3))
    assert hom_power_transport(z3, z3, [0, 1, 2], fixed) == fixed
    z4 = CyclicGroup(4)
    pairs = set(config_iter(z4, 2))
    assert hom_power_transport(z4, z4, [0, 3, 2, 1], pairs) == pairs


def test_transport_rejects_non_bijections():
    z4 = CyclicGroup(4)
    with pytest.raises(ValueError):
        hom_power_transport(z4, z4, [0, 2, 0, 2], [(0, 1)])


def test_monomorphism_preserves_distinctness():
    z2, z4 = CyclicGroup(2), CyclicGroup(4)
    from confset import config_iter

    f = verify_homomorphism(z2, z4, [0, 2], rng=random.Random(0))
    image = {tuple(f[x] for x in t) for t in config_iter(z2, 2)}
    assert image == {(0, 2), (2, 0)}
    assert image <= set(config_iter(z4, 2))
    z3, z6 = CyclicGroup(3), CyclicGroup(6)
    f = verify_homomorphism(z3, z6, [0, 2, 4], rng=random.Random(0))
    image = {tuple(f[x] for x in t) for t in config_iter(z3, 2)}
    assert image <= set(config_iter(z6, 2))
    assert len(image) == 6


def test_element_labels():
    g = build_group("Z3")
    assert g.label(2) == "2"
    p = direct_power(g, 2)
    assert p.label(5) == "(1,2)"


def test_build_group_string_roundtrip():
    for text, order in [("Z5", 5), ("D3", 6), ("S3", 6), ("Z2xZ2", 4)]:
        g = build_group(text)
        assert g.order == order
