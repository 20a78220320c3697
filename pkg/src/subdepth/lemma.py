"""Structural verification of the seed-character machinery for series A.

For the pair (S4 wr C_n, V4 x S4^(n-1)) the even depth 2n is certified by a
five-part argument about the 2*3^(n-1) outer-product characters of the full
block product whose first factor is faithful ("seeds"):

  i.   every seed induces irreducibly to the ambient group, injectively;
  ii.  the induced set is closed under sharing a subgroup constituent;
  iii. the sharing graph on the induced set is exactly the Cartesian product
       of a single edge (the two faithful labels) with n-1 triangles (the
       non-faithful labels), under the label tuples;
  iv.  that product graph puts (4,1,...,1) and (4,2,...,2) at distance n-1;
  v.   the two subgroup characters of :func:`distance_witness_pair` sit at
       relation distance exactly n.

Each part is checked exactly and failures carry a concrete counterexample.
"""

from __future__ import annotations

from dataclasses import dataclass

from .chartab import character_table, induce_character, inner_product
from .constructions import (distance_witness_pair, seed_characters,
                            sym4_labels, base_groups)
from .depth import char_distance, inclusion_matrix, relation_graph
from .graphs import Graph, bfs_distance, cartesian_product
from .perm import class_fusion

__all__ = ["LemmaPart", "LemmaReport", "seed_factor_graphs",
           "expected_overlap_graph", "lemma_report"]


@dataclass(frozen=True)
class LemmaPart:
    passed: bool
    detail: str


@dataclass(frozen=True)
class LemmaReport:
    n: int
    parts: dict

    @property
    def passed(self):
        return all(p.passed for p in self.parts.values())

    def to_obj(self):
        return {
            "schema": 1,
            "kind": "lemma_report",
            "n": self.n,
            "passed": self.passed,
            "parts": {k: {"passed": p.passed, "detail": p.detail}
                      for k, p in self.parts.items()},
        }


def seed_factor_graphs():
    """The two factor graphs on conventional labels: one edge joining the
    faithful labels {4, 5}; a triangle on the non-faithful labels {1, 2, 3}."""
    pair = Graph.build([4, 5], [(4, 5)])
    triangle = Graph.build([1, 2, 3], [(1, 2), (1, 3), (2, 3)])
    return pair, triangle


def expected_overlap_graph(n):
    """Cartesian product of the pair graph with n-1 triangles (n >= 2)."""
    pair, triangle = seed_factor_graphs()
    g = pair
    for _ in range(n - 1):
        g = cartesian_product(g, triangle)
    return g


def lemma_report(n, fam=None, cap=None):
    """Run the five checks for the series-A member at index n (n >= 2)."""
    from .constructions import family
    from .perm import DEFAULT_CAP

    if n < 2:
        raise ValueError("the seed-structure checks need n >= 2")
    if fam is None:
        fam = family("A", n, cap=cap or DEFAULT_CAP)
    bg = base_groups()
    s4_table = character_table(bg.s4)
    v4_table = character_table(bg.v4)
    ambient_table = character_table(fam.ambient)
    sub_table = character_table(fam.subgroup)
    block_table = character_table(fam.base_block)
    emb_block = class_fusion(fam.ambient, fam.base_block)
    emb_sub = fam.embedding_subgroup()

    parts = {}
    seeds = seed_characters(n, s4_table, block_table)

    # (i) seeds induce irreducibly and injectively
    induced_rows = {}
    bad = None
    for sc in seeds:
        ind = induce_character(sc.values, emb_block)
        norm = inner_product(ind, ind).as_integer()
        if norm != 1:
            bad = f"seed {sc.labels} induces with norm {norm}"
            break
        row = ambient_table.index_of(ind.values)
        if row in induced_rows:
            bad = f"seeds {induced_rows[row]} and {sc.labels} induce to the same character"
            break
        induced_rows[row] = sc.labels
    expected_count = 2 * 3 ** (n - 1)
    if bad is None and len(induced_rows) != expected_count:
        bad = f"got {len(induced_rows)} induced characters, expected {expected_count}"
    parts["i"] = LemmaPart(bad is None,
                           bad or f"{expected_count} seeds induce irreducibly and injectively")

    matrix = inclusion_matrix(ambient_table, sub_table, emb_sub)
    r, s = matrix.shape
    supports = [frozenset(i for i in range(r) if matrix.entries[i][j]) for j in range(s)]
    y_rows = set(induced_rows)

    # (ii) closure under sharing a subgroup constituent
    bad = None
    for y in sorted(y_rows):
        for j in range(s):
            if j not in y_rows and supports[y] & supports[j]:
                bad = (f"induced character {induced_rows[y]} shares a constituent with "
                       f"outside character amb:{j}")
                break
        if bad:
            break
    parts["ii"] = LemmaPart(bad is None, bad or "induced set is closed under the relation")

    # (iii) the sharing graph equals the expected product graph under the labels
    edges = set()
    rows_sorted = sorted(y_rows)
    for a_pos, ya in enumerate(rows_sorted):
        for yb in rows_sorted[a_pos + 1:]:
            if supports[ya] & supports[yb]:
                edges.add(frozenset((induced_rows[ya], induced_rows[yb])))
    expected = expected_overlap_graph(n)
    got_graph = Graph.build([induced_rows[y] for y in rows_sorted], edges)
    if got_graph.edges == expected.edges and set(got_graph.vertices) == set(expected.vertices):
        parts["iii"] = LemmaPart(True, f"sharing graph matches on {len(edges)} edges")
    else:
        missing = sorted(tuple(sorted(e)) for e in expected.edges - got_graph.edges)
        extra = sorted(tuple(sorted(e)) for e in got_graph.edges - expected.edges)
        parts["iii"] = LemmaPart(False, f"edge mismatch: missing {missing[:3]} extra {extra[:3]}")

    # (iv) distance of the two marked vertices in the product graph
    u = (4,) + (1,) * (n - 1)
    v = (4,) + (2,) * (n - 1)
    dist = bfs_distance(expected, u, v)
    parts["iv"] = LemmaPart(dist == n - 1, f"distance {u} -- {v} is {dist} (want {n - 1})")

    # (v) the witness pair sits at relation distance exactly n
    first, second = distance_witness_pair(n, sub_table, v4_table, s4_table)
    graph = relation_graph(matrix)
    wdist = char_distance(graph, first, second)
    parts["v"] = LemmaPart(wdist == n, f"witness characters at distance {wdist} (want {n})")

    return LemmaReport(n, parts)
