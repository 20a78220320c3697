"""Named groups and the three subgroup families built from them.

The base groups act on four points: the symmetric group S4, its normal Klein
four-subgroup V4 = <(1,3)(2,4), (1,2)(3,4)>, the dihedral D8 = <(1,3),
(1,2,3,4)> and the point stabiliser S3 = <(1,2), (1,2,3)>.

Larger groups live on ``4n`` points split into n consecutive blocks of four;
the shift permutation sends each point to the matching point of the next
block, so conjugating the block-0 copy of S4 by the k-th power of the shift
yields the copy acting on block k.  The three families:

* series A: ambient S4 wr C_n, subgroup V4 x S4^(n-1)   (target depth 2n)
* series B: ambient S4 wr C_n, subgroup D8 x S4^(n-1)   (target depth 4n)
* series C: iterated wreath doubling starting from (S4, D8), subgroup
  doubled alongside                                     (target depth 2^(step+1))
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .chartab import character_table
from .errors import SubdepthError
from .perm import (DEFAULT_CAP, PermGroup, Permutation, class_fusion,
                   parse_cycle_notation, subgroup_core)

__all__ = [
    "base_groups", "BaseGroups", "block_shift", "direct_product",
    "wreath_cyclic", "CyclicWreath", "family", "FamilyInstance",
    "klein_labels", "sym4_labels", "seed_characters", "SeedCharacter",
    "distance_witness_pair",
]


@dataclass(frozen=True)
class BaseGroups:
    s4: PermGroup
    v4: PermGroup
    d8: PermGroup
    s3: PermGroup
    markers: dict  # conventional element names -> Permutation


def base_groups():
    """The degree-4 base groups with their conventional marker elements."""
    s4 = PermGroup.generated([parse_cycle_notation("(1,2)", 4),
                              parse_cycle_notation("(1,2,3,4)", 4)])
    v4 = PermGroup.generated([parse_cycle_notation("(1,3)(2,4)", 4),
                              parse_cycle_notation("(1,2)(3,4)", 4)])
    d8 = PermGroup.generated([parse_cycle_notation("(1,3)", 4),
                              parse_cycle_notation("(1,2,3,4)", 4)])
    s3 = PermGroup.generated([parse_cycle_notation("(1,2)", 4),
                              parse_cycle_notation("(1,2,3)", 4)])
    markers = {
        "g1": Permutation.identity(4),
        "g2": parse_cycle_notation("(1,3)(2,4)", 4),
        "g3": parse_cycle_notation("(1,2)(3,4)", 4),
        "g3p": parse_cycle_notation("(1,2,3)", 4),
        "g4": parse_cycle_notation("(1,4)(2,3)", 4),
        "g4p": parse_cycle_notation("(1,3)", 4),
        "g5": parse_cycle_notation("(1,2,3,4)", 4),
    }
    return BaseGroups(s4, v4, d8, s3, markers)


def klein_labels(v4_table):
    """Conventional numbering of the V4 irreducibles.

    nu1 is trivial; for k in {2, 3, 4}, nu_k is the linear character taking
    value 1 at the marker double transposition g_k (g2 = (1,3)(2,4),
    g3 = (1,2)(3,4), g4 = (1,4)(2,3)).
    """
    cs = v4_table.classes
    markers = base_groups().markers
    out = {}
    one = [c.rep.is_identity for c in cs.classes].index(True)
    for i, chi in enumerate(v4_table.irreducibles):
        if all(v.as_integer() == 1 for v in chi.values):
            out["nu1"] = i
            continue
        for name in ("g2", "g3", "g4"):
            k = cs.class_of[markers[name].images]
            if chi.values[k].as_integer() == 1:
                out["nu" + name[1]] = i
    if sorted(out) != ["nu1", "nu2", "nu3", "nu4"]:
        raise SubdepthError("failed to label the Klein-group characters")
    return out


def sym4_labels(s4_table):
    """Conventional numbering of the S4 irreducibles.

    chi1 trivial, chi2 sign, chi3 the degree-2 character, chi4/chi5 the
    degree-3 characters with value +1/-1 at the transposition class.
    """
    cs = s4_table.classes
    transposition = cs.class_of[parse_cycle_notation("(1,3)", 4).images]
    out = {}
    for i, chi in enumerate(s4_table.irreducibles):
        d = chi.degree()
        if d == 2:
            out["chi3"] = i
        elif d == 1:
            out["chi1" if chi.values[transposition].as_integer() == 1 else "chi2"] = i
        else:
            out["chi4" if chi.values[transposition].as_integer() == 1 else "chi5"] = i
    if sorted(out) != [f"chi{k}" for k in range(1, 6)]:
        raise SubdepthError("failed to label the S4 characters")
    return out


# ---------------------------------------------------------------------------
# Block constructions
# ---------------------------------------------------------------------------

def block_shift(block_size, blocks):
    """The permutation of ``block_size * blocks`` points sending each point to
    the matching point one block onward (cyclically)."""
    if blocks < 2:
        raise ValueError("need at least two blocks to shift")
    n = block_size * blocks
    return Permutation([(i + block_size) % n for i in range(n)])


def direct_product(factors, cap=DEFAULT_CAP):
    """The direct product acting on consecutive point blocks.

    Elements are all concatenations of factor elements (deterministic nested
    order); the factor layout is recorded on ``product_structure`` so the
    outer-product character table can be built later.
    """
    from itertools import product as iter_product

    degree = sum(f.degree for f in factors)
    total = 1
    for f in factors:
        total *= f.order
    if total > cap:
        from .errors import EnumerationCapExceeded
        raise EnumerationCapExceeded(cap, total)
    offsets = []
    at = 0
    for f in factors:
        offsets.append(at)
        at += f.degree
    raw = []
    for combo in iter_product(*[f.raw_elements for f in factors]):
        img = []
        for off, piece in zip(offsets, combo):
            img.extend(off + v for v in piece)
        raw.append(tuple(img))
    gens = []
    for off, f in zip(offsets, factors):
        gens.extend(g.shifted(off, degree) for g in f.generators)
    group = PermGroup(degree, raw, gens, _trusted=True)
    group.product_structure = tuple(zip(offsets, factors))
    return group


@dataclass(frozen=True)
class CyclicWreath:
    group: PermGroup       # base wr C_n on base.degree * n points
    base: PermGroup        # the degree-d factor
    copies: int
    shift: Permutation


def wreath_cyclic(base, copies, cap=DEFAULT_CAP):
    """base wr C_n, generated by the block-0 copy of the base and the shift."""
    if copies < 2:
        raise ValueError("a wreath product needs at least two copies")
    degree = base.degree * copies
    shift = block_shift(base.degree, copies)
    gens = [g.shifted(0, degree) for g in base.generators] + [shift]
    group = PermGroup.generated(gens, cap=cap)
    if group.order != base.order ** copies * copies:
        raise SubdepthError("wreath product closure has the wrong order")
    return CyclicWreath(group, base, copies, shift)


# ---------------------------------------------------------------------------
# The three families
# ---------------------------------------------------------------------------

@dataclass
class FamilyInstance:
    """One member of a family: ambient group, subgroup, and the helpers
    (full base-block product, core, shift) used by the verification code."""

    series: str
    n: int
    ambient: PermGroup
    subgroup: PermGroup
    base_block: PermGroup          # the product of all block copies (K)
    core: PermGroup                # Core_ambient(subgroup)
    sigma: Permutation | None
    expected_depth: int
    _emb_sub: object = field(default=None, repr=False)
    _emb_block: object = field(default=None, repr=False)

    def embedding_subgroup(self):
        if self._emb_sub is None:
            self._emb_sub = class_fusion(self.ambient, self.subgroup)
        return self._emb_sub

    def embedding_base_block(self):
        if self._emb_block is None:
            self._emb_block = class_fusion(self.ambient, self.base_block)
        return self._emb_block


def _verify_family(inst, generated_sub=None):
    if not inst.ambient.contains_group(inst.subgroup):
        raise SubdepthError("family subgroup is not inside the ambient group")
    if inst.base_block is not None and not inst.ambient.contains_group(inst.base_block):
        raise SubdepthError("family base block is not inside the ambient group")
    if generated_sub is not None and generated_sub != inst.subgroup:
        raise SubdepthError("product subgroup differs from its generated form")
    core = subgroup_core(inst.ambient, inst.subgroup)
    if core != inst.core:
        raise SubdepthError("family core does not match the computed core")
    return inst


def family(series, n, cap=DEFAULT_CAP):
    """Build a family member: series "A" (V4 base), "B" (D8 base) or "C"
    (wreath doubling; ``n`` counts doubling steps starting at (S4, D8))."""
    series = series.upper()
    if n < 1:
        raise ValueError("the family index must be a positive integer")
    bg = base_groups()
    if series in ("A", "B"):
        seed = bg.v4 if series == "A" else bg.d8
        expected = 2 * n if series == "A" else 4 * n
        if n == 1:
            inst = FamilyInstance(series, 1, bg.s4, seed, bg.s4,
                                  subgroup_core(bg.s4, seed), None, expected)
            return _verify_family(inst)
        wr = wreath_cyclic(bg.s4, n, cap=cap)
        subgroup = direct_product([seed] + [bg.s4] * (n - 1), cap=cap)
        base_blk = direct_product([bg.s4] * n, cap=cap)
        core = direct_product([bg.v4] * n, cap=cap)
        # the subgroup is also generated by the core seed plus the shifted copies
        gens = [g.shifted(0, wr.group.degree) for g in seed.generators]
        for i in range(1, n):
            conj = wr.shift ** i
            gens.extend(g.shifted(0, wr.group.degree).conjugated_by(conj)
                        for g in bg.s4.generators)
        generated_sub = PermGroup.generated(gens, cap=cap)
        inst = FamilyInstance(series, n, wr.group, subgroup, base_blk,
                              core, wr.shift, expected)
        return _verify_family(inst, generated_sub)
    if series == "C":
        ambient, sub = bg.s4, bg.d8
        sigma = None
        base_blk = bg.s4
        for _ in range(1, n):
            wr = wreath_cyclic(ambient, 2, cap=cap)
            sub = direct_product([sub, ambient], cap=cap)
            base_blk = direct_product([ambient, ambient], cap=cap)
            ambient = wr.group
            sigma = wr.shift
        inst = FamilyInstance("C", n, ambient, sub, base_blk,
                              subgroup_core(ambient, sub), sigma, 2 ** (n + 1))
        return _verify_family(inst)
    raise ValueError(f"unknown series {series!r} (expected A, B or C)")


# ---------------------------------------------------------------------------
# Distinguished characters of the family subgroups and base blocks
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SeedCharacter:
    """An outer-product character of the base block with its faithful factor
    in the first slot and non-faithful factors elsewhere, tagged by the
    conventional label tuple."""

    labels: tuple          # e.g. (4, 1, 3): chi4 x chi1 x chi3
    row: int               # index in the base-block table
    values: object         # the ClassFunction


def _faithful_split(s4_table):
    """Indices of faithful vs non-faithful S4 irreducibles with their labels."""
    labels = sym4_labels(s4_table)
    by_index = {v: int(k[3:]) for k, v in labels.items()}
    faithful, plain = [], []
    for i, chi in enumerate(s4_table.irreducibles):
        deg = chi.degree()
        kernel_bigger = any(not c.rep.is_identity and v == deg * 1
                            for c, v in zip(s4_table.classes.classes,
                                            [x.as_integer() for x in chi.values]))
        (plain if kernel_bigger else faithful).append(i)
    return faithful, plain, by_index


def seed_characters(n, s4_table, block_table):
    """All outer products over n block slots with exactly one faithful factor,
    sitting in slot one; there are 2 * 3^(n-1) of them."""
    from itertools import product as iter_product

    faithful, plain, by_index = _faithful_split(s4_table)
    out = []
    for first in faithful:
        for rest in iter_product(plain, repeat=n - 1):
            idx = (first,) + rest
            row = block_table.product_labels[idx]
            labels = tuple(by_index[i] for i in idx)
            out.append(SeedCharacter(labels, row, block_table.irreducibles[row]))
    out.sort(key=lambda sc: sc.labels)
    return out


def distance_witness_pair(n, sub_table, v4_table, s4_table):
    """The two subgroup characters realising the extremal relation distance.

    First factor: the Klein-group linear character with the marker element
    (1,3)(2,4) in its kernel.  Remaining factors: all trivial for the first
    character, all sign for the second.  For n = 1 both collapse to the same
    character.
    """
    nu = klein_labels(v4_table)
    chi = sym4_labels(s4_table)
    if n == 1:
        row = [i for i, c in enumerate(sub_table.irreducibles)
               if c.values == v4_table.irreducibles[nu["nu2"]].values]
        return row[0], row[0]
    first = sub_table.product_labels[(nu["nu2"],) + (chi["chi1"],) * (n - 1)]
    second = sub_table.product_labels[(nu["nu2"],) + (chi["chi2"],) * (n - 1)]
    return first, second


def family_subgroup_table(inst):
    """Character table of the family subgroup (outer product when available)."""
    return character_table(inst.subgroup)


def family_block_table(inst):
    return character_table(inst.base_block)
