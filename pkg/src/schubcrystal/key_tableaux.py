"""
Semi-standard key tableaux, their Demazure crystal operators, and the column
sorting map onto semi-standard Young tableaux.

A key tableau of shape a (a weak composition of length n) is stored as
``rows[r - 1]`` = the entries of row r, left to right; rows of length zero are
kept so that row indices never shift.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement

from .ssyt import Ssyt

__all__ = [
    "KeyTableau", "enumerate_sskt", "column_sort", "column_sort_inverse",
    "sorting_raise", "sorting_raise_word", "lower_by_inverse", "validate",
    "dominant_key_tableau",
]


@dataclass(frozen=True, order=True)
class KeyTableau:
    rows: tuple

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(tuple(int(v) for v in row) for row in self.rows))

    @classmethod
    def from_rows(cls, rows, semistandard=True):
        t = cls(tuple(tuple(r) for r in rows))
        problem = t.violation(semistandard)
        if problem:
            raise ValueError(problem)
        return t

    @classmethod
    def from_dict(cls, shape_len, rows_by_index):
        """Build from {row index: entries}, e.g. {2: [2, 2], 3: [3], 4: [4, 4]}."""
        return cls(tuple(tuple(rows_by_index.get(r, ())) for r in range(1, shape_len + 1)))

    @property
    def n(self):
        return len(self.rows)

    def shape(self):
        return tuple(len(row) for row in self.rows)

    def entry(self, r, c):
        """Entry in row r, column c (1-based), or None for no cell."""
        row = self.rows[r - 1] if 1 <= r <= len(self.rows) else ()
        return row[c - 1] if 1 <= c <= len(row) else None

    def column(self, c):
        """(row, entry) pairs of column c, bottom to top."""
        return [(r, row[c - 1]) for r, row in enumerate(self.rows, start=1) if len(row) >= c]

    def ncols(self):
        return max((len(row) for row in self.rows), default=0)

    def violation(self, semistandard=True):
        """Name the first broken key tableau condition and its cell, or None."""
        for r, row in enumerate(self.rows, start=1):
            for c, v in enumerate(row, start=1):
                if v < 1:
                    return f"non-positive entry {v} at row {r}, column {c}"
                if c > 1 and row[c - 2] < v:
                    return f"row {r} increases at column {c}"
                if semistandard and v > r:
                    return f"entry {v} exceeds its row index at row {r}, column {c}"
        for c in range(1, self.ncols() + 1):
            col = self.column(c)
            seen = set()
            for r, v in col:
                if v in seen:
                    return f"repeated entry {v} in column {c} at row {r}"
                seen.add(v)
            # i above k with i < k needs an entry j > i immediately right of k
            for lo, (r_low, k) in enumerate(col):
                for r_high, i in col[lo + 1:]:
                    if i < k:
                        j = self.entry(r_low, c + 1)
                        if j is None or j <= i:
                            return (f"column inversion: {i} at row {r_high} above {k} "
                                    f"at row {r_low}, column {c}")
        return None

    def is_valid(self, semistandard=True):
        return self.violation(semistandard) is None

    def weight(self, n=None):
        n = self.n if n is None else n
        wt = [0] * n
        for row in self.rows:
            for v in row:
                wt[v - 1] += 1
        return tuple(wt)

    def cells(self):
        """Cells (row, column), 1-based, in reading order: columns right to left, top down."""
        out = []
        for c in range(self.ncols(), 0, -1):
            for r in range(len(self.rows), 0, -1):
                if len(self.rows[r - 1]) >= c:
                    out.append((r, c))
        return out

    def reading_word(self):
        return tuple(self.entry(r, c) for r, c in self.cells())

    def _with(self, changes):
        rows = [list(row) for row in self.rows]
        for (r, c), v in changes.items():
            rows[r - 1][c - 1] = v
        return KeyTableau(tuple(tuple(row) for row in rows))

    def _partner_swap(self, columns, r0, old, new):
        """In each column: the cell at row r0 goes old -> new, any `new` goes to `old`."""
        changes = {}
        for c in columns:
            changes[(r0, c)] = new
            for r, v in self.column(c):
                if r != r0 and v == new:
                    changes[(r, c)] = old
        return self._with(changes)

    def _suffix_scores(self, i):
        """m_i(w, r) for r = 1..k+1, where w is the reading word; r = k+1 is the empty suffix."""
        word = self.reading_word()
        scores = [0] * (len(word) + 1)
        run = 0
        for pos in range(len(word) - 1, -1, -1):
            run += (word[pos] == i + 1) - (word[pos] == i)
            scores[pos] = run
        return scores

    def raise_(self, i):
        """The crystal operator e_i, or None."""
        _check_color(i, self.n)
        scores = self._suffix_scores(i)[:-1]
        if not scores or max(scores) <= 0:
            return None
        m = max(scores)
        q = max(pos for pos, s in enumerate(scores) if s == m)
        r0, c0 = self.cells()[q]
        run = []
        c = c0
        while self.entry(r0, c) == i + 1:
            run.append(c)
            c += 1
        return self._partner_swap(run, r0, i + 1, i)

    def lower_direct(self, i):
        """
        The crystal operator f_i by its explicit rule.  With p the leftmost
        position attaining max m_i (the empty suffix counts), the letter just
        before it is an i in some cell y.  That i and every i immediately left
        of y that has an i+1 in its column become i+1, and those i+1 become i.
        Undefined if p = 1 or y lies in row i.
        """
        _check_color(i, self.n)
        scores = self._suffix_scores(i)
        m = max(scores)
        p = min(pos for pos, s in enumerate(scores) if s == m)
        if p == 0:
            return None
        r0, c0 = self.cells()[p - 1]
        if r0 == i:
            return None
        run = [c0]
        c = c0 - 1
        while c >= 1 and self.entry(r0, c) == i and any(v == i + 1 for _, v in self.column(c)):
            run.append(c)
            c -= 1
        return self._partner_swap(run, r0, i, i + 1)

    def lower(self, i):
        """The crystal operator f_i, or None."""
        return self.lower_direct(i)

    def key(self):
        return "|".join(",".join(str(v) for v in row) for row in self.rows)

    def to_json(self):
        return {"shape": list(self.shape()), "rows": [list(row) for row in self.rows]}

    @classmethod
    def from_json(cls, data):
        rows = data["rows"]
        if [len(r) for r in rows] != list(data.get("shape", [len(r) for r in rows])):
            raise ValueError("rows do not match shape")
        return cls(tuple(tuple(r) for r in rows))

    def __str__(self):
        if not self.rows:
            return "|"
        return "\n".join(
            "|" + " ".join(str(v) for v in row) for row in reversed(self.rows))


def _check_color(i, n):
    if not 1 <= i < n:
        raise ValueError(f"crystal index {i} out of range for {n} rows")


def validate(tableau, semistandard=True):
    problem = tableau.violation(semistandard)
    return problem is None, problem


def dominant_key_tableau(lam):
    """The unique element of SSKT(lambda) for a partition lambda."""
    return KeyTableau(tuple((r,) * p for r, p in enumerate(lam, start=1)))


@lru_cache(maxsize=None)
def _sskt(a):
    found = []
    options = [list(combinations_with_replacement(range(r, 0, -1), p))
               for r, p in enumerate(a, start=1)]
    rows = []

    def extend(r):
        if r == len(a):
            t = KeyTableau(tuple(rows))
            if t.is_valid():
                found.append(t)
            return
        for row in options[r]:
            if any(row[c] == prev[c] for prev in rows for c in range(min(len(row), len(prev)))):
                continue
            rows.append(row)
            extend(r + 1)
            rows.pop()

    extend(0)
    return tuple(sorted(found))


def enumerate_sskt(a):
    """All semi-standard key tableaux of shape a."""
    a = tuple(a)
    if any(p < 0 for p in a):
        raise ValueError(f"negative part in {a}")
    return list(_sskt(a))


@lru_cache(maxsize=None)
def _raise_inverse(a, i):
    return {t.raise_(i): t for t in _sskt(a) if t.raise_(i) is not None}


def lower_by_inverse(i, tableau):
    """f_i as the partial inverse of e_i on SSKT(shape)."""
    _check_color(i, tableau.n)
    return _raise_inverse(tableau.shape(), i).get(tableau)


def column_sort(tableau, n=None):
    """
    Drop cells to close gaps, sort each column to decrease bottom to top, and
    complement entries v -> n - v + 1.
    """
    n = tableau.n if n is None else n
    cols = []
    for c in range(1, tableau.ncols() + 1):
        col = sorted((v for _, v in tableau.column(c)), reverse=True)
        cols.append([n - v + 1 for v in col])
    nrows = max((len(col) for col in cols), default=0)
    rows = tuple(tuple(col[r] for col in cols if len(col) > r) for r in range(nrows))
    return Ssyt(rows, n)


def column_sort_inverse(young, a, n=None, semistandard=True):
    """
    The key tableau T of shape a with column_sort(T) == young, or None when
    young is not in the image.
    """
    a = tuple(a)
    n = len(a) if n is None else n
    lam = tuple(sorted((p for p in a if p), reverse=True))
    if young.shape() != lam:
        raise ValueError(f"shape {young.shape()} does not sort {a}")
    ncols = lam[0] if lam else 0
    pools = []
    for c in range(ncols):
        pools.append(sorted(n - row[c] + 1 for row in young.rows if len(row) > c))
    rows = [[0] * p for p in a]
    for c in range(ncols - 1, -1, -1):
        pool = pools[c]
        for r, p in enumerate(a):
            if p <= c:
                continue
            right = rows[r][c + 1] if p > c + 1 else 0
            choice = next((v for v in pool if v >= right), None)
            if choice is None:
                return None
            pool.remove(choice)
            rows[r][c] = choice
    t = KeyTableau(tuple(tuple(row) for row in rows))
    if not t.is_valid(semistandard) or column_sort(t, n) != young:
        return None
    return t


def sorting_raise(i, tableau):
    """
    The operator E_i: SSKT(a) -> SSKT(s_i a) for a_i < a_{i+1}.  Raise along
    the i-string to its top, then re-fill the same columns in shape s_i a.
    """
    a = tableau.shape()
    if not 1 <= i < len(a) or not a[i - 1] < a[i]:
        raise ValueError(f"sorting operator {i} needs a_{i} < a_{i + 1} in {a}")
    top = tableau
    while (up := top.raise_(i)) is not None:
        top = up
    b = list(a)
    b[i - 1], b[i] = b[i], b[i - 1]
    out = column_sort_inverse(column_sort(top), tuple(b))
    if out is None:
        raise RuntimeError(f"no tableau of shape {tuple(b)} with the columns of {top.rows}")
    return out


def sorting_raise_word(word, tableau):
    """Apply E_{i_1}, then E_{i_2}, ... along the word."""
    for i in word:
        tableau = sorting_raise(i, tableau)
    return tableau
