"""
Sparse integer polynomials and the divided difference calculus.

Only the operations needed for Schubert and Demazure computations are
provided; coefficients are plain Python integers so arithmetic is exact.
"""

import json

from .permutations import (
    check_permutation, compose, canonical_reduced_word, inverse, is_reduced,
    longest, sort_composition,
)

__all__ = [
    "SparsePolynomial", "divided_difference", "isobaric_divided_difference",
    "apply_operator_word", "schubert_bgg", "demazure_character",
    "schur_via_ssyt", "stanley_polynomial", "schubert_via_rfc",
    "generating_polynomial",
]


class SparsePolynomial:
    """A polynomial in x_1..x_nvars stored as {exponent tuple: coefficient}."""

    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        clean = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != nvars:
                raise ValueError(f"exponent vector {exps} has length != {nvars}")
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            if coeff:
                clean[exps] = clean.get(exps, 0) + int(coeff)
        self._terms = {e: c for e, c in clean.items() if c}
        self._hash = None

    @classmethod
    def zero(cls, nvars):
        return cls(nvars)

    @classmethod
    def one(cls, nvars):
        return cls(nvars, {(0,) * nvars: 1})

    @classmethod
    def monomial(cls, exps, coeff=1):
        exps = tuple(exps)
        return cls(len(exps), {exps: coeff})

    @classmethod
    def variable(cls, i, nvars):
        exps = [0] * nvars
        exps[i - 1] = 1
        return cls(nvars, {tuple(exps): 1})

    def terms(self):
        """(exponents, coefficient) pairs in canonical order (lex descending)."""
        return sorted(self._terms.items(), reverse=True)

    def coefficient(self, exps):
        return self._terms.get(tuple(exps), 0)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def mass(self):
        """Sum of all coefficients, i.e. the value at x = (1, ..., 1)."""
        return sum(self._terms.values())

    def is_zero(self):
        return not self._terms

    def _check(self, other):
        if not isinstance(other, SparsePolynomial):
            raise TypeError(f"cannot combine polynomial with {type(other).__name__}")
        if other.nvars != self.nvars:
            raise ValueError(f"nvars mismatch: {self.nvars} vs {other.nvars}")
        return other

    def __eq__(self, other):
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    def __add__(self, other):
        self._check(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return SparsePolynomial(self.nvars, out)

    def __neg__(self):
        return SparsePolynomial(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return SparsePolynomial(self.nvars, {e: c * other for e, c in self._terms.items()})
        self._check(other)
        out = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return SparsePolynomial(self.nvars, out)

    __rmul__ = __mul__

    def swap(self, i):
        """The polynomial s_i f, exchanging x_i and x_{i+1}."""
        out = {}
        for e, c in self._terms.items():
            e = list(e)
            e[i - 1], e[i] = e[i], e[i - 1]
            out[tuple(e)] = c
        return SparsePolynomial(self.nvars, out)

    def restrict(self, nvars):
        """Set x_{nvars+1}, x_{nvars+2}, ... to zero and drop those variables."""
        out = {}
        for e, c in self._terms.items():
            if any(e[nvars:]):
                continue
            head = tuple(e[:nvars]) + (0,) * max(0, nvars - self.nvars)
            out[head] = out.get(head, 0) + c
        return SparsePolynomial(nvars, out)

    def pad(self, nvars):
        """Regard the polynomial as one in more variables."""
        if nvars < self.nvars:
            raise ValueError("pad can only add variables")
        extra = (0,) * (nvars - self.nvars)
        return SparsePolynomial(nvars, {e + extra: c for e, c in self._terms.items()})

    def to_json(self):
        return [{"exponents": list(e), "coeff": c} for e, c in self.terms()]

    @classmethod
    def from_json(cls, data, nvars=None):
        if nvars is None:
            if not data:
                raise ValueError("nvars required for the zero polynomial")
            nvars = len(data[0]["exponents"])
        return cls(nvars, {tuple(t["exponents"]): t["coeff"] for t in data})

    def dumps(self):
        return json.dumps(self.to_json())

    def __str__(self):
        if not self._terms:
            return "0"
        pieces = []
        for e, c in self.terms():
            mono = "*".join(
                f"x{i}" if p == 1 else f"x{i}^{p}"
                for i, p in enumerate(e, start=1) if p)
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            pieces.append((sign, body))
        text = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"SparsePolynomial({self.nvars}, {dict(self.terms())!r})"


def _check_index(i, f):
    if not 1 <= i < f.nvars:
        raise ValueError(f"index {i} out of range for {f.nvars} variables")


def divided_difference(i: int, f: SparsePolynomial) -> SparsePolynomial:
    """
    (f - s_i f) / (x_i - x_{i+1}), computed monomial by monomial from

        x_i^p x_{i+1}^q  ->  sum_{j=0}^{p-q-1} x_i^{p-1-j} x_{i+1}^{q+j}   (p > q)

    and antisymmetry when p < q, so the division is exact by construction.
    """
    _check_index(i, f)
    out = {}
    for e, c in f._terms.items():
        p, q = e[i - 1], e[i]
        if p == q:
            continue
        sign = 1
        if p < q:
            p, q, sign = q, p, -1
        e = list(e)
        for j in range(p - q):
            e[i - 1], e[i] = p - 1 - j, q + j
            key = tuple(e)
            out[key] = out.get(key, 0) + sign * c
    return SparsePolynomial(f.nvars, out)


def isobaric_divided_difference(i: int, f: SparsePolynomial) -> SparsePolynomial:
    _check_index(i, f)
    return divided_difference(i, SparsePolynomial.variable(i, f.nvars) * f)


def apply_operator_word(word, f: SparsePolynomial, kind: str = "partial") -> SparsePolynomial:
    """
    Apply d_{i_1} d_{i_2} ... d_{i_k} to f (so i_k acts first), where d is the
    divided difference (kind="partial") or its isobaric version (kind="pi").
    """
    ops = {"partial": divided_difference, "pi": isobaric_divided_difference}
    if kind not in ops:
        raise ValueError(f"unknown operator kind {kind!r}")
    word = tuple(word)
    if not is_reduced(word, max(f.nvars, 1)):
        raise ValueError(f"word {word} is not reduced")
    op = ops[kind]
    for i in reversed(word):
        f = op(i, f)
    return f


def schubert_bgg(w) -> SparsePolynomial:
    """Schubert polynomial of w in S_n by divided differences on the staircase."""
    w = check_permutation(w)
    n = len(w)
    staircase = SparsePolynomial.monomial(tuple(range(n - 1, -1, -1)) if n else ())
    u = compose(inverse(w), longest(n))
    return apply_operator_word(canonical_reduced_word(u), staircase, "partial")


def demazure_character(a) -> SparsePolynomial:
    lam, _, word = sort_composition(a)
    return apply_operator_word(word, SparsePolynomial.monomial(lam), "pi")


def generating_polynomial(weights, nvars) -> SparsePolynomial:
    """Sum of x^wt over an iterable of weight vectors."""
    out = {}
    for wt in weights:
        wt = tuple(wt)
        out[wt] = out.get(wt, 0) + 1
    return SparsePolynomial(nvars, out)


def schur_via_ssyt(lam, n: int) -> SparsePolynomial:
    from .ssyt import enumerate_ssyt
    return generating_polynomial((t.weight() for t in enumerate_ssyt(lam, n)), n)


def stanley_polynomial(w, ell: int) -> SparsePolynomial:
    """F_w(x_1..x_ell) as the generating polynomial of RF^ell(w^{-1})."""
    from .factorizations import enumerate_rf
    if ell < 1:
        raise ValueError("need at least one block")
    w = check_permutation(w)
    return generating_polynomial((r.weight() for r in enumerate_rf(inverse(w), ell)), ell)


def schubert_via_rfc(w) -> SparsePolynomial:
    """Schubert polynomial as the generating polynomial of RFC(w^{-1})."""
    from .factorizations import enumerate_rfc
    w = check_permutation(w)
    return generating_polynomial((r.weight() for r in enumerate_rfc(inverse(w))), len(w))

