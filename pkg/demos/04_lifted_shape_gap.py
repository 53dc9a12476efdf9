"""
Where the lifted insertion tableau picks the wrong key shape.

For the highest weight element r = ()()()(24)(134) of RFC(31542), lifting P(r)
gives a key tableau of shape (3,2), yet the component through r has character
kappa_(2,3).  The component is still a Demazure crystal; only the shape read
off the lift is off.  In S_4 this never happens.

    python demos/04_lifted_shape_gap.py
"""

from schubcrystal import weak_eg
from schubcrystal.crystals import verify_demazure_by_character
from schubcrystal.factorizations import ReducedFactorization
from schubcrystal.permutations import all_permutations, parse_permutation

w = parse_permutation("31542")
r = ReducedFactorization.parse("(24)(134)", ell=5)
pair = weak_eg(r)
print(f"r = {r}\nlifted P (shape {pair.p_hat.shape()}):\n{pair.p_hat}")

print("\ncomponents of RFC(31542), shape from the character:")
for report in verify_demazure_by_character(w):
    print(" ", report.line())

for n in (4, 5):
    gaps = 0
    for v in all_permutations(n):
        tops = {rep.highest: rep.shape for rep in verify_demazure_by_character(v)}
        gaps += sum(weak_eg(ReducedFactorization.parse(k, ell=n)).p_hat.shape() != a
                    for k, a in tops.items())
    print(f"S_{n}: {gaps} component(s) whose lifted shape differs from the character shape")
