import json

import pytest

from schubcrystal.crystals import (
    CrystalGraph, build_crystal, character, decompose_rfc, demazure_shape_of_character,
    demazure_truncate, key_crystal, rf_crystal, rfc_crystal, ssyt_crystal,
    verify_demazure_by_character, verify_demazure_isomorphism,
)
from schubcrystal.factorizations import ReducedFactorization
from schubcrystal.key_tableaux import column_sort
from schubcrystal.permutations import (
    all_permutations, parse_permutation, reduced_words, sort_composition,
)
from schubcrystal.polynomials import demazure_character, schur_via_ssyt, stanley_polynomial

W = parse_permutation("153264")

NAMES = {
    "b1": "()(4)(35)(23)", "b2": "()(45)(3)(23)", "c2": "(4)()(35)(23)",
    "a3": "()(45)(23)(2)", "c3": "(4)(5)(3)(23)", "C3": "(4)(3)(5)(23)",
    "b4": "(4)(5)(23)(2)", "B4": "(4)(3)(25)(3)", "c4": "(4)(35)()(23)", "d4": "(45)()(3)(23)",
    "b5": "(4)(35)(2)(3)", "c5": "(45)()(23)(2)", "d5": "(45)(3)()(23)",
    "a6": "(4)(35)(23)()", "c6": "(45)(3)(2)(3)", "b7": "(45)(3)(23)()",
    "xc1": "()(4)(3)(235)", "xb2": "()(4)(23)(25)", "xd2": "(4)()(3)(235)",
    "xa3": "()(4)(235)(2)", "xc3": "(4)()(23)(25)", "xd3": "(4)(3)()(235)",
    "xb4": "(4)()(235)(2)", "xc4": "(4)(3)(2)(35)", "xb5": "(4)(3)(23)(5)",
    "xa6": "(4)(3)(235)()",
}

EDGES = """
b1 2 b2, b1 3 c2, b2 1 a3, c2 2 C3, b2 3 c3, c3 1 b4, C3 1 B4, C3 2 c4, a3 3 b4,
c3 3 d4, c4 1 b5, d4 1 c5, B4 2 b5, d4 2 d5, b4 3 c5, c4 3 d5, b5 1 a6, d5 1 c6,
b5 3 c6, c6 1 b7, a6 3 b7,
xc1 1 xb2, xc1 3 xd2, xb2 1 xa3, xb2 3 xc3, xd2 1 xc3, xd2 2 xd3, xa3 3 xb4,
xc3 1 xb4, xd3 1 xc4, xc4 1 xb5, xb5 1 xa6
"""

OUTSIDE_TRUNCATION = {"1,1/2,2/3|4", "1,1/2,2/4|4", "1,1/2,3/4|4", "1,2/2,3/4|4"}


def six(name):
    return str(ReducedFactorization.parse(NAMES[name], ell=6))


def test_ssyt_crystal_sizes():
    graph = ssyt_crystal((2, 2, 1), 4)
    assert len(graph) == 20
    assert graph.highest_weight_nodes() == ["1,1/2,2/3|4"]
    assert character(graph) == schur_via_ssyt((2, 2, 1), 4)
    assert len(ssyt_crystal((1,), 1)) == 1


def test_dual_truncation_matches_key_polynomial():
    dual = ssyt_crystal((2, 2, 1), 4).dual()
    top = dual.highest_weight_nodes()
    assert top == ["2,3/3,4/4|4"]
    subset = demazure_truncate(dual, top[0], (1, 3, 2, 3))
    assert len(subset) == 16
    assert set(dual.nodes) - subset.members == OUTSIDE_TRUNCATION
    assert character(subset) == demazure_character((0, 2, 1, 2))
    assert subset.is_closed_under_raising()


def test_truncation_for_311():
    dual = ssyt_crystal((3, 1, 1), 4).dual()
    subset = demazure_truncate(dual, dual.highest_weight_nodes()[0], (1, 2, 3))
    assert character(subset) == demazure_character((0, 3, 1, 1))


def test_truncation_does_not_depend_on_the_reduced_word():
    dual = ssyt_crystal((2, 2, 1), 4).dual()
    top = dual.highest_weight_nodes()[0]
    _, w, word = sort_composition((0, 2, 1, 2))
    found = {demazure_truncate(dual, top, rw).members for rw in reduced_words(w)}
    assert len(found) == 1
    assert found == {demazure_truncate(dual, top, word).members}
    with pytest.raises(ValueError):
        demazure_truncate(dual, top, (1, 1))


def test_key_crystal_is_the_truncation():
    keys = key_crystal((0, 2, 1, 2))
    assert len(keys) == 16 and len(keys.edges) == 21
    assert character(keys) == demazure_character((0, 2, 1, 2))
    dual = ssyt_crystal((2, 2, 1), 4).dual()
    subset = demazure_truncate(dual, dual.highest_weight_nodes()[0], (1, 3, 2, 3))
    image = {k: column_sort(t, 4).key() for k, t in keys.nodes.items()}
    assert set(image.values()) == subset.members
    assert {(image[s], i, image[t]) for s, i, t in keys.edges} == subset.edges()


def test_key_crystals_match_dual_truncations():
    for a in [(0, 1), (1, 0, 2), (0, 3, 1, 1), (2, 0, 1, 1), (0, 0, 2, 1), (1, 2, 0, 2)]:
        lam, _, word = sort_composition(a)
        dual = ssyt_crystal(lam, len(a)).dual()
        subset = demazure_truncate(dual, dual.highest_weight_nodes()[0], word)
        image = {column_sort(t, len(a)).key() for t in key_crystal(a).nodes.values()}
        assert image == subset.members, a


def test_rfc_crystal_of_153264():
    graph = rfc_crystal(W)
    assert len(graph) == 26 and len(graph.edges) == 32
    assert len(graph.components()) == 2
    expected = set()
    for line in EDGES.replace("\n", " ").split(","):
        if line.strip():
            s, i, t = line.split()
            expected.add((six(s), int(i), six(t)))
    assert len(expected) == 32
    assert set(graph.edges) == expected
    assert graph.highest_weight_nodes() == sorted([six("b1"), six("xc1")])


def test_rf_crystal_character_is_stanley():
    for w in [(2, 1), (1, 3, 2), (3, 2, 1), (2, 4, 1, 3)]:
        assert character(rf_crystal(w, 3)) == stanley_polynomial(w, 3)


def test_decompose_rfc_of_153264():
    comps = decompose_rfc(W)
    summary = sorted((c.weight, c.shape, c.word, len(c.members)) for c in comps)
    assert summary == [
        ((2, 2, 1, 0, 0, 0), (0, 2, 1, 2, 0, 0), (1, 3, 2, 3), 16),
        ((3, 1, 1, 0, 0, 0), (0, 3, 1, 1, 0, 0), (1, 2, 3), 10),
    ]


def test_rfc_components_match_truncations_on_s4():
    for n in range(1, 5):
        for w in all_permutations(n):
            for report in verify_demazure_isomorphism(w):
                assert report.passed, report.line()


def test_components_are_demazure_on_s5():
    for w in all_permutations(5):
        for report in verify_demazure_by_character(w):
            assert report.passed, report.line()


def test_isomorphism_report_lines():
    lines = [r.line() for r in verify_demazure_isomorphism(W)]
    assert len(lines) == 2 and all(line.startswith("PASS") for line in lines)
    assert any("word=1323 size=16" in line for line in lines)


def test_shape_of_character():
    poly = demazure_character((0, 2, 1, 2))
    assert demazure_shape_of_character(poly, (2, 2, 1)) == (0, 2, 1, 2)
    assert demazure_shape_of_character(poly, (3, 1, 1)) is None


def test_exports_are_deterministic():
    a, b = rfc_crystal(W), rfc_crystal(W)
    assert a.to_dot() == b.to_dot() and a.to_json() == b.to_json()
    dot = a.to_dot()
    assert dot.startswith("digraph crystal {") and dot.count("->") == 32
    data = json.loads(a.to_json())
    assert data["nvars"] == 6 and len(data["nodes"]) == 26 and len(data["edges"]) == 32
    assert {e["color"] for e in data["edges"]} == {1, 2, 3}


def test_empty_graph():
    empty = CrystalGraph({}, {}, (), 3)
    assert len(empty) == 0 and empty.components() == []
    assert empty.to_dot() == "digraph crystal {\n}\n"
    assert json.loads(empty.to_json()) == {"nvars": 3, "nodes": [], "edges": []}


class Bit:
    def __init__(self, v):
        self.v = v

    def key(self):
        return str(self.v)

    def __eq__(self, other):
        return isinstance(other, Bit) and self.v == other.v


def test_inconsistent_operators_are_rejected():
    with pytest.raises(RuntimeError):
        build_crystal([Bit(0)], lambda x, i: Bit(1) if x.v == 0 else None,
                      lambda x, i: None, [1], lambda x: (x.v,), 2)
