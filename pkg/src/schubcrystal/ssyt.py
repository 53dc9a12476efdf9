"""
Semi-standard Young tableaux in French notation and their type A crystal
operators.

Rows are stored bottom-up: ``rows[0]`` is the longest row.
"""

from dataclasses import dataclass

__all__ = ["Ssyt", "enumerate_ssyt", "highest_weight_tableau", "lowest_weight_tableau"]


@dataclass(frozen=True, order=True)
class Ssyt:
    rows: tuple
    n: int

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in row) for row in self.rows)
        while rows and not rows[-1]:
            rows = rows[:-1]
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_rows(cls, rows, n):
        t = cls(tuple(tuple(r) for r in rows), n)
        problem = t.violation()
        if problem:
            raise ValueError(problem)
        return t

    def violation(self):
        """Describe the first broken tableau condition, or return None."""
        rows = self.rows
        for r in range(1, len(rows)):
            if len(rows[r]) > len(rows[r - 1]):
                return f"row {r + 1} is longer than row {r}"
        for r, row in enumerate(rows):
            for c, v in enumerate(row):
                if not 1 <= v <= self.n:
                    return f"entry {v} at row {r + 1}, column {c + 1} outside 1..{self.n}"
                if c and row[c - 1] > v:
                    return f"row {r + 1} decreases at column {c + 1}"
                if r and rows[r - 1][c] >= v:
                    return f"column {c + 1} not strictly increasing at row {r + 1}"
        return None

    def is_valid(self):
        return self.violation() is None

    def shape(self):
        return tuple(len(row) for row in self.rows)

    def weight(self):
        wt = [0] * self.n
        for row in self.rows:
            for v in row:
                wt[v - 1] += 1
        return tuple(wt)

    def cells(self):
        """Cells (row, column), 0-based, in column reading order."""
        ncols = len(self.rows[0]) if self.rows else 0
        out = []
        for c in range(ncols):
            for r in range(len(self.rows) - 1, -1, -1):
                if c < len(self.rows[r]):
                    out.append((r, c))
        return out

    def reading_word(self):
        """Read down columns, left to right."""
        return tuple(self.rows[r][c] for r, c in self.cells())

    def _replace(self, cell, value):
        r, c = cell
        rows = [list(row) for row in self.rows]
        rows[r][c] = value
        return Ssyt(tuple(tuple(row) for row in rows), self.n)

    def lower(self, i):
        """The crystal operator f_i, or None."""
        _check_color(i, self.n)
        cells = self.cells()
        word = [self.rows[r][c] for r, c in cells]
        best, p, run = 0, 0, 0
        for pos, letter in enumerate(word, start=1):
            run += (letter == i) - (letter == i + 1)
            if run > best:
                best, p = run, pos
        if best <= 0:
            return None
        return self._replace(cells[p - 1], i + 1)

    def raise_(self, i):
        """The crystal operator e_i, or None."""
        _check_color(i, self.n)
        cells = self.cells()
        word = [self.rows[r][c] for r, c in cells]
        best, q, run = 0, 0, 0
        for pos, letter in enumerate(word, start=1):
            run += (letter == i) - (letter == i + 1)
            if run >= best:
                best, q = run, pos
        if q == len(word):
            return None
        return self._replace(cells[q], i)

    def key(self):
        return "/".join(",".join(str(v) for v in row) for row in self.rows) + f"|{self.n}"

    def to_json(self):
        return {"shape": list(self.shape()), "rows": [list(row) for row in self.rows]}

    @classmethod
    def from_json(cls, data, n):
        return cls.from_rows(data["rows"], n)

    def __str__(self):
        if not self.rows:
            return "."
        return "\n".join(" ".join(str(v) for v in row) for row in reversed(self.rows))


def _check_color(i, n):
    if not 1 <= i < n:
        raise ValueError(f"crystal index {i} out of range for alphabet 1..{n}")


def enumerate_ssyt(lam, n):
    """All semi-standard Young tableaux of shape lam with entries in 1..n."""
    lam = tuple(p for p in lam if p)
    if any(lam[k] < lam[k + 1] for k in range(len(lam) - 1)):
        raise ValueError(f"{lam} is not a partition")
    if len(lam) > n:
        return []
    cells = [(r, c) for r in range(len(lam)) for c in range(lam[r])]
    grid = [[0] * p for p in lam]
    found = []

    def fill(k):
        if k == len(cells):
            found.append(Ssyt(tuple(tuple(row) for row in grid), n))
            return
        r, c = cells[k]
        low = 1
        if c:
            low = grid[r][c - 1]
        if r:
            low = max(low, grid[r - 1][c] + 1)
        # leave room for the strictly increasing column above
        high = n - (sum(1 for rr in range(r + 1, len(lam)) if lam[rr] > c))
        for v in range(low, high + 1):
            grid[r][c] = v
            fill(k + 1)
        grid[r][c] = 0

    fill(0)
    return sorted(found)


def highest_weight_tableau(lam, n):
    """u_lambda: row i filled with i."""
    lam = tuple(p for p in lam if p)
    return Ssyt(tuple((r + 1,) * p for r, p in enumerate(lam)), n)


def lowest_weight_tableau(lam, n):
    """The tableau whose column of height h holds n-h+1..n."""
    lam = tuple(p for p in lam if p)
    rows = []
    for r, p in enumerate(lam):
        row = []
        for c in range(p):
            height = sum(1 for q in lam if q > c)
            row.append(n - height + 1 + r)
        rows.append(tuple(row))
    return Ssyt(tuple(rows), n)
