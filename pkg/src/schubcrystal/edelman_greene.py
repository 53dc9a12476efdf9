"""
Edelman-Greene insertion for reduced words and its weak (key-shaped) variant.

Insertion tableaux are `Ssyt` values in French notation whose rows and
columns strictly increase; weak insertion tableaux are `KeyTableau` values
whose rows strictly increase left to right.

>>> pair = eg_correspondence((4, 5, 2, 3, 2))
>>> pair.p.rows, pair.q.rows
(((2, 3), (3, 5), (4,)), ((1, 2), (3, 4), (5,)))
>>> lift(pair.p).rows
((), (2, 3), (3,), (4, 5))
"""

from collections import Counter
from dataclasses import dataclass

from .factorizations import ReducedFactorization, enumerate_rfc
from .key_tableaux import KeyTableau, column_sort_inverse
from .permutations import apply_word, check_permutation, inverse, is_reduced, reduced_words
from .ssyt import Ssyt

__all__ = [
    "InsertionPair", "WeakInsertionPair", "eg_insert", "eg_correspondence",
    "eg_record_factorization", "lift", "drop", "weak_eg", "row_word",
    "insertion_tableaux", "weak_insertion_tableaux", "schur_expansion_stanley",
    "demazure_expansion_schubert",
]


@dataclass(frozen=True)
class InsertionPair:
    p: Ssyt
    q: Ssyt

    def shape(self):
        return self.p.shape()

    def to_json(self):
        return {"kind": "young", "P": self.p.to_json(), "Q": self.q.to_json()}


@dataclass(frozen=True)
class WeakInsertionPair:
    p_hat: KeyTableau
    q_hat: KeyTableau

    def shape(self):
        return self.p_hat.shape()

    def to_json(self):
        return {"kind": "key", "P": self.p_hat.to_json(), "Q": self.q_hat.to_json()}


def _alphabet(word):
    return max(word, default=0) + 1


def _insert_rows(rows, x):
    """Insert x into rows (bottom-up lists, modified in place); return the new cell's row."""
    for r, row in enumerate(rows):
        bigger = next((k for k, z in enumerate(row) if z > x), None)
        if bigger is None:
            row.append(x)
            return r
        y = row[bigger]
        if not (y == x + 1 and x in row):
            row[bigger] = x
        x = y
    rows.append([x])
    return len(rows) - 1


def eg_insert(p, x):
    """P <- x for an insertion tableau P."""
    rows = [list(row) for row in p.rows]
    _insert_rows(rows, x)
    return Ssyt(tuple(tuple(row) for row in rows), max(p.n, x + 1))


def _run(word, labels, n_record):
    word = tuple(word)
    if not is_reduced(word, _alphabet(word)):
        raise ValueError(f"{word} is not a reduced word")
    rows, rec = [], []
    for x, label in zip(word, labels):
        r = _insert_rows(rows, x)
        if r == len(rec):
            rec.append([])
        rec[r].append(label)
    p = Ssyt(tuple(tuple(row) for row in rows), _alphabet(word))
    q = Ssyt(tuple(tuple(row) for row in rec), n_record)
    return InsertionPair(p, q)


def eg_correspondence(word):
    """(P(word), Q(word)) with Q standard."""
    word = tuple(word)
    return _run(word, range(1, len(word) + 1), len(word))


def eg_record_factorization(r):
    """(P(r), Q(r)): a letter from block i (from the right) records ell - i + 1."""
    labels = [k + 1 for k, block in enumerate(r.blocks) for _ in block]
    return _run(r.word(), labels, r.ell)


def row_word(tableau):
    """Rows read left to right, from the top row down."""
    return tuple(v for row in reversed(tableau.rows) for v in row)


def lift(p, length=None):
    """
    Raise column 1 so each entry sits in the row equal to its value; then, column
    by column and top to bottom, put each entry in the highest row below the one
    just used whose entry to the left is strictly smaller.
    """
    cols = []
    for c in range(len(p.rows[0]) if p.rows else 0):
        cols.append([row[c] for row in p.rows if len(row) > c])
    height = max(cols[0], default=0) if cols else 0
    length = height if length is None else length
    if length < height:
        raise ValueError(f"lift needs {height} rows, got {length}")
    out = [[] for _ in range(length)]
    for c, col in enumerate(cols):
        below = length + 1
        for v in reversed(col):
            if c == 0:
                r = v
            else:
                r = next((r for r in range(below - 1, 0, -1)
                          if len(out[r - 1]) == c and out[r - 1][c - 1] < v), None)
                if r is None:
                    raise ValueError(f"cannot lift entry {v} of column {c + 1}")
            if r >= below:
                raise ValueError(f"cannot lift entry {v} of column {c + 1}")
            out[r - 1].append(v)
            below = r
    return KeyTableau(tuple(tuple(row) for row in out))


def drop(p_hat, n=None):
    """Let the entries of each column fall, keeping their relative order."""
    heights = [len(p_hat.column(c)) for c in range(1, p_hat.ncols() + 1)]
    if any(heights[k] < heights[k + 1] for k in range(len(heights) - 1)):
        raise ValueError("dropped entries do not form a partition shape")
    rows = [[] for _ in range(heights[0] if heights else 0)]
    for c in range(1, p_hat.ncols() + 1):
        for k, (_, v) in enumerate(p_hat.column(c)):
            rows[k].append(v)
    n = max((v for row in rows for v in row), default=0) + 1 if n is None else n
    return Ssyt(tuple(tuple(row) for row in rows), n)


def weak_eg(r, length=None):
    """
    (P_hat, Q_hat) for a reduced factorization, or for a bare reduced word
    (standard recording).  Q_hat is the key tableau of shape sh(P_hat) whose
    column sort is the ordinary recording tableau.
    """
    if isinstance(r, ReducedFactorization):
        pair = eg_record_factorization(r)
        alphabet = r.ell
        length = r.ell if length is None else length
    else:
        pair = eg_correspondence(r)
        alphabet = len(tuple(r))
    p_hat = lift(pair.p, length)
    q_hat = column_sort_inverse(pair.q, p_hat.shape(), alphabet, semistandard=False)
    if q_hat is None:
        raise RuntimeError(f"no key recording tableau of shape {p_hat.shape()} for {pair.q.rows}")
    return WeakInsertionPair(p_hat, q_hat)


def insertion_tableaux(w):
    """Distinct EG insertion tableaux over all reduced words of w."""
    w = check_permutation(w)
    return sorted({eg_correspondence(word).p for word in reduced_words(w)})


def weak_insertion_tableaux(w):
    """Lifted insertion tableaux whose row word is still a reduced word for w."""
    w = check_permutation(w)
    n = len(w)
    found = set()
    for p in insertion_tableaux(w):
        p_hat = lift(p, n)
        word = row_word(p_hat)
        if is_reduced(word, n) and apply_word(word, n) == w:
            found.add(p_hat)
    return sorted(found)


def schur_expansion_stanley(w):
    """F_w as {partition: multiplicity}, from insertion tableaux of w^{-1}."""
    w = check_permutation(w)
    return dict(Counter(p.shape() for p in insertion_tableaux(inverse(w))))


def demazure_expansion_schubert(w):
    """Schubert polynomial of w as {weak composition: multiplicity}."""
    w = check_permutation(w)
    v = inverse(w)
    out = Counter()
    for r in enumerate_rfc(v):
        if all(r.raise_(i, cutoff=True) is None for i in range(1, r.ell)):
            out[weak_eg(r).p_hat.shape()] += 1
    return dict(out)
