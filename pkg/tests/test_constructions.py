import pytest

from subdepth.chartab import character_table
from subdepth.constructions import (base_groups, block_shift, direct_product,
                                    distance_witness_pair, family,
                                    klein_labels, seed_characters,
                                    sym4_labels, wreath_cyclic)
from subdepth.errors import EnumerationCapExceeded
from subdepth.perm import parse_cycle_notation, subgroup_core


def test_base_groups(bg):
    assert bg.s4.order == 24 and bg.v4.order == 4 and bg.d8.order == 8 and bg.s3.order == 6
    from subdepth.perm import is_normal
    assert is_normal(bg.s4, bg.v4)
    m = bg.markers
    assert m["g4p"] in bg.d8 and m["g4p"] not in bg.v4
    assert m["g2"].cycle_string() == "(1,3)(2,4)"


def test_block_shift():
    assert block_shift(4, 2) == parse_cycle_notation("(1,5)(2,6)(3,7)(4,8)", 8)
    sigma3 = block_shift(4, 3)
    assert sigma3.order() == 3
    with pytest.raises(ValueError):
        block_shift(4, 1)


def test_shift_conjugation_moves_blocks(bg):
    sigma = block_shift(4, 3)
    g = parse_cycle_notation("(1,2)", 4).shifted(0, 12)
    assert g.conjugated_by(sigma) == parse_cycle_notation("(5,6)", 12)
    assert g.conjugated_by(sigma ** 2) == parse_cycle_notation("(9,10)", 12)


def test_wreath_group(bg):
    wr = wreath_cyclic(bg.s4, 2)
    assert wr.group.order == 24 ** 2 * 2
    assert len(wr.group.classes()) == 20
    with pytest.raises(ValueError):
        wreath_cyclic(bg.s4, 1)


def test_family_a1(bg):
    fam = family("A", 1)
    assert fam.ambient == bg.s4 and fam.subgroup == bg.v4
    assert fam.core == bg.v4
    assert fam.expected_depth == 2


def test_family_a2():
    fam = family("A", 2)
    assert fam.ambient.order == 1152 and fam.subgroup.order == 96
    assert fam.base_block.order == 576 and fam.core.order == 16
    assert fam.expected_depth == 4
    assert fam.ambient.contains_group(fam.subgroup)
    assert fam.base_block.contains_group(fam.subgroup)
    # the core is the intersection of the shift-conjugates of the subgroup
    h = set(fam.subgroup.frozen())
    conj = {(fam.sigma * x * fam.sigma.inverse()).images for x in fam.subgroup.elements}
    assert h & conj == set(fam.core.frozen())


def test_family_b2():
    fam = family("B", 2)
    assert fam.subgroup.order == 192 and fam.expected_depth == 8
    assert fam.core.order == 16  # the Klein blocks survive in the core


def test_family_c():
    fam1 = family("C", 1)
    assert fam1.ambient.order == 24 and fam1.subgroup.order == 8
    assert fam1.expected_depth == 4
    fam2 = family("C", 2)
    assert fam2.ambient.order == 1152 and fam2.subgroup.order == 192
    assert fam2.expected_depth == 8
    # the next step exceeds the default cap and must say so
    with pytest.raises(EnumerationCapExceeded):
        family("C", 3, cap=10**5)


def test_family_errors():
    with pytest.raises(ValueError):
        family("X", 2)
    with pytest.raises(ValueError):
        family("A", 0)


def test_enumeration_identity_of_subgroup():
    # the subgroup built as a product equals the one generated from the core
    # seed and the shifted block copies (checked inside family()); a3 exercises
    # the three-block case including the order formula 4 * 24 * 24
    fam = family("A", 3)
    assert fam.subgroup.order == 4 * 24 * 24
    assert fam.ambient.order == 24 ** 3 * 3
    assert len(fam.ambient.classes()) == 55
    # independent counting: cyclic-orbit triples plus twisted classes
    assert (5 ** 3 - 5) // 3 + 5 + 2 * 5 == 55
    assert fam.core.order == 64
    assert subgroup_core(fam.ambient, fam.subgroup) == fam.core


def test_seed_characters(bg, s4_table):
    k2 = direct_product([bg.s4, bg.s4])
    table = character_table(k2)
    seeds = seed_characters(2, s4_table, table)
    assert len(seeds) == 6
    assert sorted(sc.labels for sc in seeds) == [
        (4, 1), (4, 2), (4, 3), (5, 1), (5, 2), (5, 3)]
    k3 = direct_product([bg.s4] * 3)
    seeds3 = seed_characters(3, s4_table, character_table(k3))
    assert len(seeds3) == 18
    # exactly one faithful slot, in first position: the first factor has
    # degree 3, the others are non-faithful (degree 1 or 2)
    for sc in seeds3:
        assert sc.labels[0] in (4, 5)
        assert all(l in (1, 2, 3) for l in sc.labels[1:])


def test_distance_witness_pair(bg, s4_table, v4_table):
    fam = family("A", 2)
    sub_table = character_table(fam.subgroup)
    a, b = distance_witness_pair(2, sub_table, v4_table, s4_table)
    assert a != b
    assert sub_table.irreducibles[a].degree() == 1
    assert sub_table.irreducibles[b].degree() == 1
    # n = 1 collapses both endpoints onto the same character
    x, y = distance_witness_pair(1, v4_table, v4_table, s4_table)
    assert x == y


def test_witness_pair_induces_to_faithful_sum(bg, s4_table, v4_table):
    # inducing the first witness character one level up (to the full block
    # product) yields the sum of the two faithful characters in slot one
    from subdepth.chartab import decompose, induce_character
    from subdepth.perm import class_fusion

    fam = family("A", 2)
    sub_table = character_table(fam.subgroup)
    block_table = character_table(fam.base_block)
    first, _ = distance_witness_pair(2, sub_table, v4_table, s4_table)
    emb = class_fusion(fam.base_block, fam.subgroup)
    mults = decompose(induce_character(sub_table.irreducibles[first], emb), block_table)
    chi = sym4_labels(s4_table)
    by_row = {row: idx for idx, row in block_table.product_labels.items()}
    nonzero = {by_row[i]: m for i, m in enumerate(mults) if m}
    assert nonzero == {(chi["chi4"], chi["chi1"]): 1, (chi["chi5"], chi["chi1"]): 1}


def test_block_product_normalises_subgroup():
    # the Klein block is normal in its S4 copy, so the series-A subgroup is
    # normal in the full block product; the block product always has index n
    from subdepth.perm import is_normal
    for series, n, normal in (("A", 2, True), ("B", 2, False)):
        fam = family(series, n)
        assert is_normal(fam.base_block, fam.subgroup) == normal
        assert fam.ambient.order // fam.base_block.order == n


def test_fusion_of_one_transposition_class():
    # a subgroup element with a transposition in one block and nothing else
    # fuses to the ambient class of untwisted pairs with exactly one
    # transposition component
    fam = family("A", 2)
    x = parse_cycle_notation("(5,6)", 8)
    h_cls = fam.subgroup.classes()
    g_cls = fam.ambient.classes()
    fused = fam.embedding_subgroup().fusion[h_cls.class_of[x.images]]
    rep = g_cls.classes[fused].rep
    # decode: no block swap, component cycle shapes are {transposition, identity}
    assert all((rep.images[i] < 4) == (i < 4) for i in range(8))
    shapes = sorted(
        tuple(sorted(len(c) for c in rep.window(off, 4).cycles())) for off in (0, 4))
    assert shapes == [(), (2,)]


def test_labels(s4_table, v4_table):
    chi = sym4_labels(s4_table)
    nu = klein_labels(v4_table)
    assert sorted(chi) == [f"chi{i}" for i in range(1, 6)]
    assert sorted(nu) == [f"nu{i}" for i in range(1, 5)]
    assert s4_table.irreducibles[chi["chi1"]].values == \
        tuple([s4_table.irreducibles[chi["chi1"]].values[0]] * 5)
