"""
Reduced factorizations of 153264, the pairing-rule operators on them, and
Edelman-Greene insertion with its weak (key-shaped) variant.

    python demos/02_factorizations_and_insertion.py
"""

from schubcrystal import ReducedFactorization, eg_record_factorization, weak_eg
from schubcrystal.factorizations import enumerate_rf, enumerate_rfc
from schubcrystal.permutations import format_word, parse_permutation, reduced_words

w = parse_permutation("153264")
words = sorted(reduced_words(w))
print(f"{len(words)} reduced words for 153264:", " ".join(format_word(x) for x in words))
print(f"{len(enumerate_rf(w, 4))} factorizations into 4 blocks,"
      f" {len(enumerate_rfc(w))} of them (in 6 blocks) satisfy the cutoff")

r = ReducedFactorization.parse("(2)(13)(23)")
print(f"\nr = {r}: unpaired letters for i=1 are {r.pairing(1)}")
print(f"f_1 r = {r.lower(1)},  e_1 r = {r.raise_(1)}")

r = ReducedFactorization.parse("(4)(5)(23)(2)")
pair = eg_record_factorization(r)
print(f"\ninserting {r}:")
print(f"P =\n{pair.p}\nQ =\n{pair.q}")
weak = weak_eg(r)
print(f"lifted P (shape {weak.p_hat.shape()}):\n{weak.p_hat}")
print(f"key recording tableau, weight {weak.q_hat.weight()}:\n{weak.q_hat}")

# raising r leaves P_hat alone and raises Q_hat
r6 = r.padded(6)
up = r6.raise_(1, cutoff=True)
print(f"\ne_1 r = {up}")
print("P_hat unchanged:", weak_eg(up).p_hat == weak_eg(r6).p_hat)
print("Q_hat raised:", weak_eg(up).q_hat == weak_eg(r6).q_hat.raise_(1))
