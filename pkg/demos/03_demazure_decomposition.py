"""
The cutoff factorizations RFC(153264) split into two Demazure crystals.  The
Schubert polynomial of the inverse permutation 143625 is the sum of their
characters.

    python demos/03_demazure_decomposition.py
"""

from schubcrystal import decompose_rfc, rfc_crystal, verify_demazure_isomorphism
from schubcrystal.edelman_greene import demazure_expansion_schubert
from schubcrystal.permutations import parse_permutation
from schubcrystal.polynomials import schubert_bgg

w = parse_permutation("153264")
graph = rfc_crystal(w)
print(f"RFC(153264): {len(graph)} elements, {len(graph.edges)} edges,"
      f" {len(graph.components())} components")
for comp in decompose_rfc(w, graph):
    print(f"  top {comp.highest}  weight {comp.weight}  key shape {comp.shape}"
          f"  word {''.join(map(str, comp.word))}  size {len(comp.members)}")

print("\nchecking each component against the Demazure truncation:")
for report in verify_demazure_isomorphism(w):
    print(" ", report.line())

v = parse_permutation("143625")
print("\nSchubert polynomial of 143625 as key polynomials:", demazure_expansion_schubert(v))
print(schubert_bgg(v))

with open("rfc_153264.dot", "w", encoding="utf-8") as out:
    out.write(graph.to_dot())
print("\nwrote rfc_153264.dot (render with: dot -Tpng rfc_153264.dot -o rfc.png)")
