"""
Permutations in one-line notation, weak compositions, and reduced words.

Permutations are tuples of the integers 1..n.  A word i_1 i_2 ... i_k acts on
the identity by swapping positions i_j, i_j + 1 of the one-line notation, read
left to right, so that

>>> apply_word((4, 5, 3, 2, 3), 6)
(1, 5, 3, 2, 6, 4)
>>> apply_word((1, 3, 2, 3), 4)
(2, 4, 3, 1)
"""

from functools import lru_cache
from itertools import permutations as _all_perms

__all__ = [
    "Permutation", "Word", "WeakComposition", "Partition",
    "check_permutation", "identity", "longest", "inverse", "compose",
    "inversions", "apply_word", "is_reduced", "reduced_words",
    "canonical_reduced_word", "right_descents", "sort_composition",
    "act_on_composition", "all_permutations", "shift", "parse_permutation",
    "format_permutation", "parse_word", "format_word", "parse_composition",
    "format_composition", "is_partition",
]

Permutation = tuple[int, ...]
Word = tuple[int, ...]
WeakComposition = tuple[int, ...]
Partition = tuple[int, ...]


def check_permutation(w) -> Permutation:
    w = tuple(int(v) for v in w)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise ValueError(f"not a permutation of 1..{len(w)}: {w}")
    return w


def identity(n: int) -> Permutation:
    return tuple(range(1, n + 1))


def longest(n: int) -> Permutation:
    return tuple(range(n, 0, -1))


def inverse(w: Permutation) -> Permutation:
    inv = [0] * len(w)
    for pos, val in enumerate(w, start=1):
        inv[val - 1] = pos
    return tuple(inv)


def compose(u: Permutation, v: Permutation) -> Permutation:
    """Return the product uv, i.e. j -> u(v(j))."""
    if len(u) != len(v):
        raise ValueError("permutations of different sizes")
    return tuple(u[v[j] - 1] for j in range(len(v)))


def shift(w: Permutation, m: int) -> Permutation:
    """The permutation 1^m x w of size m + n."""
    return tuple(range(1, m + 1)) + tuple(v + m for v in w)


def all_permutations(n: int):
    """All permutations of S_n in lexicographic order."""
    return [tuple(p) for p in _all_perms(range(1, n + 1))]


def inversions(w: Permutation) -> int:
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def apply_word(word: Word, n: int) -> Permutation:
    w = list(range(1, n + 1))
    for i in word:
        if not 1 <= i < n:
            raise ValueError(f"letter {i} out of range for S_{n}")
        w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def is_reduced(word: Word, n: int) -> bool:
    return len(word) == inversions(apply_word(word, n))


def right_descents(w: Permutation) -> list[int]:
    return [i for i in range(1, len(w)) if w[i - 1] > w[i]]


def _swap(w: Permutation, i: int) -> Permutation:
    w = list(w)
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


@lru_cache(maxsize=None)
def _reduced_words(w: Permutation) -> frozenset:
    descents = right_descents(w)
    if not descents:
        return frozenset([()])
    out = set()
    for i in descents:
        for prefix in _reduced_words(_swap(w, i)):
            out.add(prefix + (i,))
    return frozenset(out)


def reduced_words(w: Permutation) -> set[Word]:
    """The set R(w) of all reduced words of w."""
    return set(_reduced_words(check_permutation(w)))


def canonical_reduced_word(w: Permutation) -> Word:
    """
    The reduced word obtained by repeatedly peeling off the largest right
    descent; equivalently the reduced word whose reversal is
    lexicographically greatest.

    >>> canonical_reduced_word((2, 4, 3, 1))
    (1, 3, 2, 3)
    """
    w = check_permutation(w)
    letters = []
    while True:
        descents = right_descents(w)
        if not descents:
            break
        i = descents[-1]
        letters.append(i)
        w = _swap(w, i)
    return tuple(reversed(letters))


def act_on_composition(w: Permutation, a: WeakComposition) -> WeakComposition:
    """(w . a)_i = a_{w(i)}."""
    if len(w) != len(a):
        raise ValueError(f"size mismatch: permutation {len(w)}, composition {len(a)}")
    return tuple(a[w[i] - 1] for i in range(len(w)))


def sort_composition(a: WeakComposition) -> tuple[Partition, Permutation, Word]:
    """
    Return (lambda, w, word): the decreasing rearrangement of a, the shortest
    permutation with w . a = lambda, and a reduced word for w.

    >>> sort_composition((0, 2, 1, 2))
    ((2, 2, 1, 0), (2, 4, 3, 1), (1, 3, 2, 3))
    """
    a = tuple(a)
    if any(p < 0 for p in a):
        raise ValueError(f"negative part in {a}")
    # stable sort on -part keeps equal parts in position order, which is minimal
    order = sorted(range(len(a)), key=lambda j: -a[j])
    w = tuple(j + 1 for j in order)
    lam = tuple(a[j] for j in order)
    return lam, w, canonical_reduced_word(w)


def is_partition(parts) -> bool:
    return all(p >= 0 for p in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1))


# text formats

def format_permutation(w: Permutation) -> str:
    if len(w) <= 9:
        return "".join(str(v) for v in w)
    return ",".join(str(v) for v in w)


def parse_permutation(text: str) -> Permutation:
    text = text.strip()
    if "," in text:
        return check_permutation(int(t) for t in text.split(","))
    return check_permutation(int(c) for c in text)


def format_word(word: Word) -> str:
    if any(i > 9 for i in word):
        return ",".join(str(i) for i in word)
    return "".join(str(i) for i in word)


def parse_word(text: str) -> Word:
    text = text.strip()
    if not text:
        return ()
    if "," in text:
        return tuple(int(t) for t in text.split(","))
    return tuple(int(c) for c in text)


def parse_composition(text: str) -> WeakComposition:
    parts = tuple(int(t) for t in text.strip().split(","))
    if any(p < 0 for p in parts):
        raise ValueError(f"negative part in {text!r}")
    return parts


def format_composition(a) -> str:
    return "(" + ",".join(str(p) for p in a) + ")"
