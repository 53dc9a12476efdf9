"""
Tableau crystals: the full crystal on SSYT(2,2,1) in four letters, and the
key tableaux of shape (0,2,1,2) sitting inside it as a Demazure subset.

    python demos/01_tableau_crystals.py
"""

from schubcrystal import (
    character, column_sort, demazure_character, demazure_truncate, enumerate_sskt,
    key_crystal, ssyt_crystal,
)
from schubcrystal.permutations import sort_composition

lam, n = (2, 2, 1), 4
full = ssyt_crystal(lam, n)
print(f"B{lam} in {n} letters: {len(full)} tableaux, {len(full.edges)} edges")
print("character is the Schur polynomial:", character(full))

a = (0, 2, 1, 2)
keys = enumerate_sskt(a)
print(f"\n{len(keys)} semi-standard key tableaux of shape {a}; the first one:")
print(keys[0])
print("key polynomial:", demazure_character(a))

# column sorting carries key tableaux into SSYT, but it exchanges raising and
# lowering, so the key crystal lands in the dual graph, grown down from its top
_, _, word = sort_composition(a)
dual = full.dual()
top = dual.highest_weight_nodes()[0]
subset = demazure_truncate(dual, top, word)
image = {column_sort(t, n).key() for t in keys}
print(f"\ntruncating the dual along {''.join(map(str, word))}: {len(subset)} nodes,"
      f" equal to the column-sorted key tableaux: {image == subset.members}")
print("left out of the truncation:", sorted(set(dual.nodes) - subset.members))
print("key crystal edges match:", len(key_crystal(a).edges) == len(subset.edges()))
