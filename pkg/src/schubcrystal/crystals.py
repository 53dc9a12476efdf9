"""
Finite crystal graphs: closure under raising and lowering operators, Demazure
truncation, characters, export, and the Demazure decomposition of reduced
factorizations with cutoff.

Nodes are identified by the payload's ``key()`` string, so two graphs over
different kinds of objects never share nodes by accident.
"""

import json
from collections import deque
from dataclasses import dataclass, field
from itertools import permutations as _arrangements

from .edelman_greene import weak_eg
from .factorizations import enumerate_rf, enumerate_rfc
from .key_tableaux import column_sort, enumerate_sskt
from .permutations import check_permutation, is_reduced, sort_composition
from .polynomials import demazure_character, generating_polynomial
from .ssyt import highest_weight_tableau

__all__ = [
    "CrystalGraph", "DemazureSubset", "build_crystal", "demazure_truncate",
    "character", "ssyt_crystal", "key_crystal", "rf_crystal", "rfc_crystal",
    "RfcComponent", "decompose_rfc", "ComponentReport", "verify_demazure_isomorphism",
    "demazure_shape_of_character", "match_from_top", "verify_demazure_by_character",
]

_PALETTE = ["red", "blue", "darkgreen", "orange", "purple", "brown", "magenta", "cyan"]


@dataclass
class CrystalGraph:
    """
    nodes: key -> payload, in sorted key order; weights: key -> weight tuple;
    edges: sorted (source, i, target) triples meaning f_i(source) = target.
    """
    nodes: dict
    weights: dict
    edges: tuple
    nvars: int
    _f: dict = field(default=None, repr=False, compare=False)
    _e: dict = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        self._f = {(s, i): t for s, i, t in self.edges}
        self._e = {(t, i): s for s, i, t in self.edges}

    def __len__(self):
        return len(self.nodes)

    def f(self, node, i):
        return self._f.get((node, i))

    def e(self, node, i):
        return self._e.get((node, i))

    def colors(self):
        return sorted({i for _, i, _ in self.edges})

    def highest_weight_nodes(self):
        return [k for k in self.nodes if not any((k, i) in self._e for i in range(1, self.nvars))]

    def components(self):
        """Weakly connected components as sorted key lists, ordered by first key."""
        parent = {k: k for k in self.nodes}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for s, _, t in self.edges:
            a, b = find(s), find(t)
            if a != b:
                parent[max(a, b)] = min(a, b)
        groups = {}
        for k in self.nodes:
            groups.setdefault(find(k), []).append(k)
        return sorted(groups.values())

    def subgraph(self, keys):
        keys = set(keys)
        return CrystalGraph(
            {k: v for k, v in self.nodes.items() if k in keys},
            {k: v for k, v in self.weights.items() if k in keys},
            tuple(x for x in self.edges if x[0] in keys and x[2] in keys),
            self.nvars)

    def dual(self):
        """Edge (u, i, v) for each original edge (v, n - i, u); weights reversed."""
        n = self.nvars
        edges = tuple(sorted((t, n - i, s) for s, i, t in self.edges))
        weights = {k: tuple(reversed(w)) for k, w in self.weights.items()}
        return CrystalGraph(dict(self.nodes), weights, edges, n)

    def to_dot(self):
        ids = {k: f"n{j}" for j, k in enumerate(self.nodes)}
        lines = ["digraph crystal {"]
        for k, j in ids.items():
            label = k.replace("\\", "\\\\").replace('"', '\\"')
            lines.append(f'  {j} [label="{label}"];')
        for s, i, t in self.edges:
            color = _PALETTE[(i - 1) % len(_PALETTE)]
            lines.append(f'  {ids[s]} -> {ids[t]} [label="{i}", color={color}];')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json(self):
        ids = {k: j for j, k in enumerate(self.nodes)}
        nodes = []
        for k, payload in self.nodes.items():
            data = payload.to_json() if hasattr(payload, "to_json") else str(payload)
            nodes.append({"id": ids[k], "key": k, "weight": list(self.weights[k]), "payload": data})
        edges = [{"src": ids[s], "color": i, "dst": ids[t]} for s, i, t in self.edges]
        return json.dumps({"nvars": self.nvars, "nodes": nodes, "edges": edges},
                          indent=1, sort_keys=True) + "\n"


@dataclass(frozen=True)
class DemazureSubset:
    parent: CrystalGraph
    members: frozenset
    word: tuple

    def __len__(self):
        return len(self.members)

    def edges(self):
        """Edges of the parent with both ends inside the subset."""
        return {x for x in self.parent.edges if x[0] in self.members and x[2] in self.members}

    def is_closed_under_raising(self):
        return all(self.parent.e(k, i) in self.members
                   for k in self.members for i in range(1, self.parent.nvars)
                   if self.parent.e(k, i) is not None)

    def graph(self):
        return self.parent.subgraph(self.members)


def build_crystal(seeds, lower, raise_, colors, weight, nvars):
    """
    Close the seeds under lower(x, i) and raise_(x, i) for i in colors.  The
    operators must be partial inverses of each other; a violation raises
    RuntimeError naming the offending element.
    """
    nodes = {}
    queue = deque()
    for s in seeds:
        if s.key() not in nodes:
            nodes[s.key()] = s
            queue.append(s)
    edges = set()
    while queue:
        x = queue.popleft()
        for i in colors:
            for op, back, forward in ((lower, raise_, True), (raise_, lower, False)):
                y = op(x, i)
                if y is None:
                    continue
                if back(y, i) != x:
                    raise RuntimeError(f"operators {i} are not inverse at {x.key()} -> {y.key()}")
                edges.add((x.key(), i, y.key()) if forward else (y.key(), i, x.key()))
                if y.key() not in nodes:
                    nodes[y.key()] = y
                    queue.append(y)
    ordered = dict(sorted(nodes.items()))
    weights = {k: tuple(weight(v)) for k, v in ordered.items()}
    return CrystalGraph(ordered, weights, tuple(sorted(edges)), nvars)


def demazure_truncate(graph, top, word):
    """
    D_{i_1} ... D_{i_k} {top}, with D_{i_k} applied first; D_i X adds every
    element that raises into X along the i-string.
    """
    word = tuple(word)
    if not is_reduced(word, max(graph.nvars, 1)):
        raise ValueError(f"{word} is not a reduced word")
    members = {top}
    for i in reversed(word):
        grown = set(members)
        for x in members:
            y = graph.f(x, i)
            while y is not None:
                grown.add(y)
                y = graph.f(y, i)
        members = grown
    return DemazureSubset(graph, frozenset(members), word)


def character(obj):
    """Weight generating polynomial of a graph or a Demazure subset."""
    if isinstance(obj, DemazureSubset):
        return generating_polynomial((obj.parent.weights[k] for k in obj.members), obj.parent.nvars)
    return generating_polynomial(obj.weights.values(), obj.nvars)


def ssyt_crystal(lam, n):
    """B(lam) on SSYT with entries 1..n, grown from the highest weight tableau."""
    return build_crystal([highest_weight_tableau(lam, n)],
                         lambda t, i: t.lower(i), lambda t, i: t.raise_(i),
                         range(1, n), lambda t: t.weight(), n)


def key_crystal(a):
    a = tuple(a)
    return build_crystal(enumerate_sskt(a), lambda t, i: t.lower(i), lambda t, i: t.raise_(i),
                         range(1, len(a)), lambda t: t.weight(), len(a))


def rf_crystal(w, ell):
    return build_crystal(enumerate_rf(w, ell), lambda r, i: r.lower(i), lambda r, i: r.raise_(i),
                         range(1, ell), lambda r: r.weight(), ell)


def rfc_crystal(w):
    w = check_permutation(w)
    n = len(w)
    return build_crystal(enumerate_rfc(w),
                         lambda r, i: r.lower(i, cutoff=True),
                         lambda r, i: r.raise_(i, cutoff=True),
                         range(1, n), lambda r: r.weight(), n)


def demazure_shape_of_character(poly, lam):
    """The rearrangement a of lam with demazure_character(a) == poly, or None."""
    n = poly.nvars
    lam = tuple(lam) + (0,) * (n - len(lam))
    for a in sorted(set(_arrangements(lam))):
        if demazure_character(a) == poly:
            return a
    return None


@dataclass(frozen=True)
class RfcComponent:
    highest: object
    weight: tuple
    shape: tuple
    word: tuple
    members: tuple


def decompose_rfc(w, graph=None):
    """
    One entry per highest weight element r of RFC(w): wt(r), the key shape
    sh(P_hat(r)) and the sorting word of that shape, with the component's nodes.
    """
    graph = rfc_crystal(w) if graph is None else graph
    out = []
    for comp in graph.components():
        tops = [k for k in comp if k in set(graph.highest_weight_nodes())]
        if len(tops) != 1:
            raise RuntimeError(f"component with highest weights {tops}")
        r = graph.nodes[tops[0]]
        shape = weak_eg(r).p_hat.shape()
        _, _, word = sort_composition(shape)
        out.append(RfcComponent(r, r.weight(), shape, word, tuple(comp)))
    return out


@dataclass(frozen=True)
class ComponentReport:
    highest: str
    weight: tuple
    shape: tuple
    word: tuple
    size: int
    passed: bool
    detail: str

    def line(self):
        status = "PASS" if self.passed else "FAIL"
        return (f"{status} {self.highest} wt={self.weight} shape={self.shape} "
                f"word={''.join(map(str, self.word)) or '-'} size={self.size} {self.detail}".rstrip())


def verify_demazure_isomorphism(w):
    """
    For each component of RFC(w), check that r -> column_sort(Q_hat(r)) is a
    weight- and edge-preserving bijection onto the Demazure truncation of the
    dual of B(wt(r)) along the sorting word of sh(P_hat(r)).
    """
    w = check_permutation(w)
    n = len(w)
    graph = rfc_crystal(w)
    reports = []
    for comp in decompose_rfc(w, graph):
        target = ssyt_crystal(comp.weight, n).dual()
        top = target.highest_weight_nodes()
        problems = []
        if len(top) != 1:
            problems.append("target has no unique top")
            subset = None
        else:
            subset = demazure_truncate(target, top[0], comp.word)
        image = {}
        for k in comp.members:
            q_hat = weak_eg(graph.nodes[k]).q_hat
            if not q_hat.is_valid():
                problems.append(f"Q_hat of {k} is not a semi-standard key tableau")
                break
            image[k] = column_sort(q_hat, n).key()
        if subset is not None and not problems:
            if len(set(image.values())) != len(image):
                problems.append("map is not injective")
            elif set(image.values()) != set(subset.members):
                problems.append(f"image has {len(image)} nodes, truncation has {len(subset)}")
            elif any(target.weights[image[k]] != graph.weights[k] for k in comp.members):
                problems.append("weights differ")
            else:
                inside = set(comp.members)
                mapped = {(image[s], i, image[t]) for s, i, t in graph.edges
                          if s in inside and t in inside}
                if mapped != subset.edges():
                    problems.append("edges differ")
                elif character(subset) != demazure_character(comp.shape):
                    problems.append("character differs from the Demazure character")
        reports.append(ComponentReport(
            str(comp.highest), comp.weight, comp.shape, comp.word, len(comp.members),
            not problems, "; ".join(problems)))
    return reports


def match_from_top(graph, members, top, other, other_members, other_top):
    """
    Pair up two edge-coloured subgraphs by following the same f_i from their
    tops.  Return the node map if it is a weight- and edge-preserving
    bijection, else None.
    """
    members, other_members = set(members), set(other_members)
    if len(members) != len(other_members):
        return None
    image = {top: other_top}
    queue = deque([top])
    colors = range(1, graph.nvars)
    while queue:
        x = queue.popleft()
        y = image[x]
        if graph.weights[x] != other.weights[y]:
            return None
        for i in colors:
            fx, fy = graph.f(x, i), other.f(y, i)
            fx = fx if fx in members else None
            fy = fy if fy in other_members else None
            if (fx is None) != (fy is None):
                return None
            if fx is None:
                continue
            if fx in image:
                if image[fx] != fy:
                    return None
            else:
                image[fx] = fy
                queue.append(fx)
    if set(image) != members or set(image.values()) != other_members:
        return None
    inverse_map = {v: k for k, v in image.items()}
    for y in other_members:
        for i in colors:
            ey = other.e(y, i)
            ex = graph.e(inverse_map[y], i)
            if (ey in other_members) != (ex in members):
                return None
    return image


def verify_demazure_by_character(w):
    """
    For each component of RFC(w): find the composition a whose key polynomial
    is the component's character, truncate the dual of B(wt(top)) along the
    sorting word of a, and match the two graphs from their tops.
    """
    w = check_permutation(w)
    n = len(w)
    graph = rfc_crystal(w)
    tops = set(graph.highest_weight_nodes())
    reports = []
    for comp in graph.components():
        top = next(k for k in comp if k in tops)
        lam = graph.weights[top]
        poly = generating_polynomial((graph.weights[k] for k in comp), n)
        a = demazure_shape_of_character(poly, lam)
        problems = []
        word = ()
        if a is None:
            problems.append("character is not a key polynomial")
        else:
            _, _, word = sort_composition(a)
            target = ssyt_crystal(lam, n).dual()
            subset = demazure_truncate(target, target.highest_weight_nodes()[0], word)
            if match_from_top(graph, comp, top, target, subset.members, target.highest_weight_nodes()[0]) is None:
                problems.append("no crystal isomorphism onto the Demazure subset")
        reports.append(ComponentReport(top, lam, a, word, len(comp), not problems, "; ".join(problems)))
    return reports
