"""
Exhaustive small-rank checks of the identities relating the polynomial,
tableau, factorization and crystal models.  Each check returns a `Check`
recording how many cases were examined and the first few failures.
"""

from dataclasses import dataclass, field
from itertools import product

from .crystals import (
    character, ssyt_crystal, verify_demazure_by_character, verify_demazure_isomorphism,
)
from .edelman_greene import (
    demazure_expansion_schubert, eg_record_factorization, weak_eg,
)
from .factorizations import enumerate_rf, enumerate_rfc
from .key_tableaux import column_sort, enumerate_sskt
from .permutations import (
    all_permutations, format_permutation, shift,
)
from .polynomials import (
    SparsePolynomial, demazure_character, generating_polynomial, schubert_bgg,
    schubert_via_rfc, schur_via_ssyt, stanley_polynomial,
)

__all__ = [
    "Check", "check_schubert_methods", "check_demazure_expansion",
    "check_demazure_characters", "check_schur_characters", "check_key_commute",
    "check_rf_intertwining", "check_weak_eg_intertwining", "check_demazure_decomposition",
    "check_demazure_components", "check_stable_limit", "run_all",
]

_MAX_FAILURES = 5


@dataclass
class Check:
    name: str
    cases: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self):
        return not self.failures

    def fail(self, message):
        if len(self.failures) < _MAX_FAILURES:
            self.failures.append(message)
        elif self.failures[-1] != "...":
            self.failures.append("...")

    def line(self):
        head = f"{'PASS' if self.passed else 'FAIL'} {self.name} ({self.cases} cases)"
        return head + "".join(f"\n    {f}" for f in self.failures)


def _perms(max_n):
    for n in range(1, max_n + 1):
        yield from all_permutations(n)


def check_schubert_methods(max_n):
    check = Check(f"divided differences = cutoff factorizations, S_n for n <= {max_n}")
    for w in _perms(max_n):
        check.cases += 1
        if schubert_bgg(w) != schubert_via_rfc(w):
            check.fail(format_permutation(w))
    return check


def check_demazure_expansion(max_n):
    check = Check(f"Schubert = sum of key polynomials over lifted shapes, S_n for n <= {max_n}")
    for w in _perms(max_n):
        check.cases += 1
        total = SparsePolynomial.zero(len(w))
        for a, m in demazure_expansion_schubert(w).items():
            total = total + demazure_character(a) * m
        if total != schubert_bgg(w):
            check.fail(f"{format_permutation(w)}: {demazure_expansion_schubert(w)}")
    return check


def _compositions(max_part, max_len):
    for length in range(1, max_len + 1):
        yield from product(range(max_part + 1), repeat=length)


def check_demazure_characters(max_part=3, max_len=4):
    check = Check(f"key polynomial = key tableau sum, parts <= {max_part}, length <= {max_len}")
    for a in _compositions(max_part, max_len):
        check.cases += 1
        gen = generating_polynomial((t.weight() for t in enumerate_sskt(a)), len(a))
        if demazure_character(a) != gen:
            check.fail(str(a))
    return check


def _partitions_in_box(rows, cols):
    def grow(prefix, cap):
        yield tuple(prefix)
        if len(prefix) < rows:
            for p in range(1, cap + 1):
                yield from grow(prefix + [p], p)
    yield from grow([], cols)


def check_schur_characters(max_n=4, box=(3, 3)):
    check = Check(f"crystal character = Schur polynomial, shapes in {box[0]}x{box[1]}, n <= {max_n}")
    for n in range(1, max_n + 1):
        for lam in _partitions_in_box(*box):
            if len(lam) > n:
                continue
            check.cases += 1
            graph = ssyt_crystal(lam, n)
            if character(graph) != schur_via_ssyt(lam, n):
                check.fail(f"{lam}, n={n}")
    return check


def check_key_commute(max_part=3, max_len=4):
    """Column sorting sends e_i to f_{n-i} and f_i to e_{n-i}."""
    check = Check(f"column sort swaps e_i and f_(n-i), parts <= {max_part}, length <= {max_len}")
    for a in _compositions(max_part, max_len):
        n = len(a)
        for t in enumerate_sskt(a):
            y = column_sort(t, n)
            for i in range(1, n):
                check.cases += 1
                up, down = t.raise_(i), t.lower(i)
                if up is not None and column_sort(up, n) != y.lower(n - i):
                    check.fail(f"e_{i} at {t.key()}")
                if down is not None and column_sort(down, n) != y.raise_(n - i):
                    check.fail(f"f_{i} at {t.key()}")
    return check


def check_rf_intertwining(max_n=4, ell=4):
    check = Check(f"EG insertion intertwines e_i with f_(l-i), RF^{ell}(w), S_n for n <= {max_n}")
    for w in _perms(max_n):
        for r in enumerate_rf(w, ell):
            pair = eg_record_factorization(r)
            for i in range(1, ell):
                up = r.raise_(i)
                if up is None:
                    continue
                check.cases += 1
                moved = eg_record_factorization(up)
                if moved.p != pair.p or moved.q != pair.q.lower(ell - i):
                    check.fail(f"{r} e_{i}")
    return check


def check_weak_eg_intertwining(max_n=4):
    check = Check(f"weak EG insertion intertwines e_i, RFC(w), S_n for n <= {max_n}")
    for w in _perms(max_n):
        for r in enumerate_rfc(w):
            pair = weak_eg(r)
            if pair.q_hat.weight() != r.weight():
                check.fail(f"{r}: weight of Q_hat")
            for i in range(1, r.ell):
                up = r.raise_(i, cutoff=True)
                if up is None:
                    continue
                check.cases += 1
                moved = weak_eg(up)
                if moved.p_hat != pair.p_hat or moved.q_hat != pair.q_hat.raise_(i):
                    check.fail(f"{r} e_{i}")
    return check


def check_demazure_decomposition(max_n):
    check = Check(f"RFC(w) is a union of Demazure crystals via weak EG, S_n for n <= {max_n}")
    for w in _perms(max_n):
        for report in verify_demazure_isomorphism(w):
            check.cases += 1
            if not report.passed:
                check.fail(f"RFC({format_permutation(w)}): {report.line()}")
    return check


def check_demazure_components(max_n):
    check = Check(f"RFC(w) components are Demazure crystals (shape from character), S_n for n <= {max_n}")
    for w in _perms(max_n):
        for report in verify_demazure_by_character(w):
            check.cases += 1
            if not report.passed:
                check.fail(f"RFC({format_permutation(w)}): {report.line()}")
    return check


def check_stable_limit(perms=("132", "213", "231", "312", "321"), max_ell=3, extra=3):
    """
    Schubert polynomial of 1^m x w in ell variables equals F_w for
    m = ell-1 .. ell-1+extra; from m = ell - 1 on the cutoff never binds.
    """
    check = Check(f"stable limit in <= {max_ell} variables for {', '.join(perms)}")
    for text in perms:
        w = tuple(int(c) for c in text)
        for ell in range(1, max_ell + 1):
            target = stanley_polynomial(w, ell)
            for m in range(ell - 1, ell + extra):
                check.cases += 1
                if schubert_bgg(shift(w, m)).restrict(ell) != target:
                    check.fail(f"w={text}, ell={ell}, m={m}")
    return check


def run_all(max_n=4):
    """All checks at rank max_n, in a fixed order."""
    small = min(max_n, 4)
    return [
        check_schubert_methods(max_n),
        check_demazure_characters(3 if max_n <= 4 else 2, max_n),
        check_schur_characters(max_n),
        check_key_commute(3 if max_n <= 4 else 2, max_n),
        check_rf_intertwining(small),
        check_weak_eg_intertwining(max_n),
        check_demazure_expansion(max_n),
        check_demazure_decomposition(max_n),
        check_demazure_components(max_n),
        check_stable_limit(),
    ]

