import json
import random

import pytest

from subdepth.chartab import (character_table, decompose, direct_product_table,
                              dixon_character_table, induce_character,
                              induce_character_bruteforce, inner_product,
                              restrict_character, table_from_obj, table_to_obj,
                              wreath_cyclic_table, ClassFunction)
from subdepth.constructions import (direct_product, klein_labels, sym4_labels,
                                    wreath_cyclic)
from subdepth.cyclo import Cyclotomic
from subdepth.errors import (GroupMismatchError, NotACharacterError,
                             TableConsistencyError)
from subdepth.perm import PermGroup, class_fusion, parse_generators

# The classic tables of the Klein four-group and S4, frozen with their
# conventional class order (identity, the marker double transpositions /
# the marker elements (1,3)(2,4), 3-cycle, transposition, 4-cycle).
V4_CLASSIC_CLASSES = ["()", "(1,3)(2,4)", "(1,2)(3,4)", "(1,4)(2,3)"]
V4_CLASSIC_ROWS = {
    "nu1": [1, 1, 1, 1],
    "nu2": [1, 1, -1, -1],
    "nu3": [1, -1, 1, -1],
    "nu4": [1, -1, -1, 1],
}
S4_CLASSIC_CLASSES = ["()", "(1,3)(2,4)", "(1,2,3)", "(1,3)", "(1,2,3,4)"]
S4_CLASSIC_ROWS = {
    "chi1": [1, 1, 1, 1, 1],
    "chi2": [1, 1, 1, -1, -1],
    "chi3": [2, 2, -1, 0, 0],
    "chi4": [3, -1, 0, 1, -1],
    "chi5": [3, -1, 0, -1, 1],
}
# restrictions to the Klein subgroup, as multiplicity vectors over nu1..nu4
S4_RESTRICTIONS = {
    "chi1": (1, 0, 0, 0),
    "chi2": (1, 0, 0, 0),
    "chi3": (2, 0, 0, 0),
    "chi4": (0, 1, 1, 1),
    "chi5": (0, 1, 1, 1),
}


def classic_value(table, labels, name, class_rep_text):
    from subdepth.perm import parse_cycle_notation
    k = table.classes.class_of[parse_cycle_notation(class_rep_text, table.group.degree).images]
    return table.irreducibles[labels[name]].values[k].as_integer()


def test_dixon_v4_matches_classic(v4_table):
    labels = klein_labels(v4_table)
    for name, row in V4_CLASSIC_ROWS.items():
        got = [classic_value(v4_table, labels, name, rep) for rep in V4_CLASSIC_CLASSES]
        assert got == row, name


def test_dixon_s4_matches_classic(s4_table):
    labels = sym4_labels(s4_table)
    for name, row in S4_CLASSIC_ROWS.items():
        got = [classic_value(s4_table, labels, name, rep) for rep in S4_CLASSIC_CLASSES]
        assert got == row, name


def test_dixon_c2():
    c2 = PermGroup.generated(parse_generators("(1,2)", degree=2))
    t = dixon_character_table(c2)
    assert [[v.as_integer() for v in chi.values] for chi in t.irreducibles] == [[1, -1], [1, 1]]


def test_dixon_prime_override(s4_table, bg):
    t = dixon_character_table(bg.s4, prime=37)  # 37 = 3*12+1 > 2*sqrt(24)
    assert t == s4_table
    with pytest.raises(ValueError):
        dixon_character_table(bg.s4, prime=13 * 2)  # not prime
    with pytest.raises(ValueError):
        dixon_character_table(bg.s4, prime=11)  # wrong residue


def test_inner_products(s4_table, v4_table, bg):
    labels = sym4_labels(s4_table)
    chi4 = s4_table.irreducibles[labels["chi4"]]
    chi5 = s4_table.irreducibles[labels["chi5"]]
    assert inner_product(chi4, chi4) == 1
    assert inner_product(chi4, chi5) == 0
    emb = class_fusion(bg.s4, bg.v4)
    chi3 = s4_table.irreducibles[labels["chi3"]]
    nu1 = v4_table.irreducibles[klein_labels(v4_table)["nu1"]]
    assert inner_product(restrict_character(chi3, emb), nu1) == 2
    with pytest.raises(GroupMismatchError):
        inner_product(chi4, nu1)


def test_restrictions_match_classic(s4_table, v4_table, bg):
    chi_labels = sym4_labels(s4_table)
    nu_labels = klein_labels(v4_table)
    emb = class_fusion(bg.s4, bg.v4)
    order = ["nu1", "nu2", "nu3", "nu4"]
    for name, expected in S4_RESTRICTIONS.items():
        chi = s4_table.irreducibles[chi_labels[name]]
        mults = decompose(restrict_character(chi, emb), v4_table)
        got = tuple(mults[nu_labels[nu]] for nu in order)
        assert got == expected, name


def test_induction(s4_table, v4_table, bg):
    emb = class_fusion(bg.s4, bg.v4)
    chi_labels = sym4_labels(s4_table)
    nu_labels = klein_labels(v4_table)
    # Frobenius reciprocity applied to the frozen restriction list gives the
    # expected multiplicities of each induced character.
    for nu_name in ("nu1", "nu2", "nu3", "nu4"):
        psi = v4_table.irreducibles[nu_labels[nu_name]]
        ind = induce_character(psi, emb)
        assert ind.degree() == emb.index * psi.degree()
        mults = decompose(ind, s4_table)
        k = ["nu1", "nu2", "nu3", "nu4"].index(nu_name)
        expected = tuple(S4_RESTRICTIONS[chi][k] for chi in
                         ("chi1", "chi2", "chi3", "chi4", "chi5"))
        got = tuple(mults[chi_labels[f"chi{j}"]] for j in range(1, 6))
        assert got == expected
        # the closed-form induction agrees with the literal sum over the group
        assert induce_character_bruteforce(psi, emb).values == ind.values


def test_induce_identity_embedding(s4_table, bg):
    emb = class_fusion(bg.s4, bg.s4)
    triv = s4_table.irreducibles[sym4_labels(s4_table)["chi1"]]
    assert induce_character(triv, emb).values == triv.values


def test_frobenius_reciprocity_random(s4_table, d8_table, bg):
    emb = class_fusion(bg.s4, bg.d8)
    rng = random.Random(11)
    for _ in range(50):
        psi = d8_table.irreducibles[rng.randrange(5)]
        chi = s4_table.irreducibles[rng.randrange(5)]
        assert inner_product(induce_character(psi, emb), chi) == \
            inner_product(psi, restrict_character(chi, emb))


def test_decompose_zero_and_rejection(s4_table, bg):
    zero = ClassFunction(bg.s4, [Cyclotomic.from_rational(0)] * 5)
    assert decompose(zero, s4_table) == (0, 0, 0, 0, 0)
    from fractions import Fraction
    bad = ClassFunction(bg.s4, [Cyclotomic.from_rational(Fraction(1, 2))] * 5)
    with pytest.raises(NotACharacterError):
        decompose(bad, s4_table)
    minus = ClassFunction(bg.s4, [Cyclotomic.from_rational(-1)] * 5)
    with pytest.raises(NotACharacterError):
        decompose(minus, s4_table)


def test_direct_product_table(bg, v4_table, s4_table):
    h2 = direct_product([bg.v4, bg.s4])
    table = direct_product_table([v4_table, s4_table], h2)
    assert len(table.irreducibles) == 20
    assert sum(d * d for d in table.degrees()) == 96
    # the product table is exactly what the general engine produces
    assert table == dixon_character_table(h2)
    # outer product values multiply
    labels = table.product_labels
    assert len(labels) == 20


def test_product_with_trivial(bg, s4_table):
    triv = PermGroup.trivial(1)
    prod = direct_product([bg.s4, triv])
    table = direct_product_table([s4_table, character_table(triv)], prod)
    assert [chi.degree() for chi in table.irreducibles] == [chi.degree() for chi in s4_table.irreducibles]
    assert [[v for v in chi.values] for chi in table.irreducibles] == \
        [[v for v in chi.values] for chi in s4_table.irreducibles]


def test_wreath_oracle_matches_dixon_c2(bg, s4_table):
    wr = wreath_cyclic(bg.s4, 2)
    oracle = wreath_cyclic_table(s4_table, wr.group, wr.shift, 2)
    assert len(oracle.irreducibles) == len(wr.group.classes()) == 20
    assert sum(d * d for d in oracle.degrees()) == wr.group.order
    assert oracle == dixon_character_table(wr.group)


def test_wreath_composite_copies_rejected(bg, s4_table):
    with pytest.raises(ValueError):
        wreath_cyclic_table(s4_table, None, None, 4)


def test_decompose_reassembles_exactly(bg, s4_table, d8_table):
    # multiplicities against the full irreducible basis determine the function
    emb = class_fusion(bg.s4, bg.d8)
    for chi in s4_table.irreducibles:
        restricted = restrict_character(chi, emb)
        mults = decompose(restricted, d8_table)
        acc = None
        for m, psi in zip(mults, d8_table.irreducibles):
            if not m:
                continue
            term = ClassFunction(bg.d8, [m * v for v in psi.values])
            acc = term if acc is None else acc + term
        assert acc.values == restricted.values


def test_dixon_irrational_values():
    # cyclic groups exercise the root-of-unity lift directly
    c5 = PermGroup.generated(parse_generators("(1,2,3,4,5)"))
    t5 = dixon_character_table(c5)
    assert t5.degrees() == [1] * 5
    from subdepth.cyclo import zeta
    values = {v for chi in t5.irreducibles for v in chi.values}
    assert zeta(5) in values and zeta(5, 2) in values
    # the Frobenius group of order 21 has two degree-3 characters whose values
    # at the 7-cycles are the roots of x^2 + x + 2 (conductor 7), alongside
    # conductor-3 values; exact orthogonality over the composite field is the
    # hard part and is asserted by validation
    f21 = PermGroup.generated(parse_generators("(1,2,3,4,5,6,7);(2,3,5)(4,7,6)"))
    t21 = dixon_character_table(f21)
    assert t21.degrees() == [1, 1, 1, 3, 3]
    deg3 = [chi for chi in t21.irreducibles if chi.degree() == 3]
    seven = sorted({v for chi in deg3 for v in chi.values if v.conductor == 7},
                   key=lambda v: v.sort_key())
    assert len(seven) == 2
    assert seven[0] + seven[1] == -1 and seven[0] * seven[1] == 2
    # the quaternion group on 8 points: degrees 1,1,1,1,2
    q8 = PermGroup.generated(parse_generators("(1,2,3,4)(5,6,7,8);(1,5,3,7)(2,8,4,6)"))
    assert dixon_character_table(q8).degrees() == [1, 1, 1, 1, 2]


def test_value_conductors_divide_element_orders(s4_table, d8_table):
    f21 = PermGroup.generated(parse_generators("(1,2,3,4,5,6,7);(2,3,5)(4,7,6)"))
    for table in (s4_table, d8_table, dixon_character_table(f21)):
        for chi in table.irreducibles:
            for cls, v in zip(table.classes.classes, chi.values):
                assert cls.rep.order() % v.conductor == 0


def test_table_validation_catches_corruption(bg, s4_table):
    rows = [list(chi.values) for chi in s4_table.irreducibles]
    rows[0], rows[1] = rows[0], [Cyclotomic.from_rational(2)] + list(rows[1][1:])
    from subdepth.chartab import CharacterTable
    with pytest.raises(TableConsistencyError):
        CharacterTable(bg.s4, [ClassFunction(bg.s4, r) for r in rows])


def test_table_serialization_roundtrip(bg, s4_table):
    obj = json.loads(json.dumps(table_to_obj(s4_table)))
    rebuilt = table_from_obj(obj, bg.s4)
    assert rebuilt == s4_table
    # tampering is rejected by the exact orthogonality validation
    obj["irreducibles"][0][1] = "2"
    with pytest.raises(TableConsistencyError):
        table_from_obj(obj, bg.s4)
    # a mismatched group is rejected up front
    with pytest.raises(GroupMismatchError):
        table_from_obj(json.loads(json.dumps(table_to_obj(s4_table))), bg.d8)
