"""
Reduced factorizations, the cutoff condition, and the pairing-rule crystal.

A factorization ``r = r^l ... r^1`` is stored as its blocks in display order,
left to right, so ``blocks[-1]`` is r^1.  Block i always means the i-th block
from the right.

>>> r = ReducedFactorization.parse("(2)(13)(23)")
>>> str(r.lower(1)), str(r.raise_(1))
('(2)(123)(2)', '(2)(3)(123)')
"""

import re
from dataclasses import dataclass
from functools import lru_cache

from .permutations import (
    apply_word, check_permutation, format_permutation, reduced_words,
)

__all__ = [
    "ReducedFactorization", "CompatibleSequence", "enumerate_rf",
    "enumerate_rfc", "is_compatible",
]


@dataclass(frozen=True, order=True)
class ReducedFactorization:
    blocks: tuple

    def __post_init__(self):
        blocks = tuple(tuple(int(v) for v in b) for b in self.blocks)
        for b in blocks:
            if any(b[k] >= b[k + 1] for k in range(len(b) - 1)):
                raise ValueError(f"block {b} is not strictly increasing")
        object.__setattr__(self, "blocks", blocks)

    @classmethod
    def parse(cls, text, ell=None):
        """
        Read ``(45)(3)(23)()``; with ell given, pad on the left with empty
        blocks up to ell blocks.  Letters above 9 need commas: ``(3,10)``.
        """
        found = re.findall(r"\(([^()]*)\)", text)
        if "".join(f"({b})" for b in found) != re.sub(r"\s+", "", text):
            raise ValueError(f"cannot parse factorization {text!r}")
        blocks = []
        for body in found:
            if "," in body:
                blocks.append(tuple(int(t) for t in body.split(",")))
            else:
                blocks.append(tuple(int(ch) for ch in body))
        r = cls(tuple(blocks))
        return r if ell is None else r.padded(ell)

    @classmethod
    def from_right(cls, blocks_from_right):
        """Build from [r^1, r^2, ..., r^l]."""
        return cls(tuple(reversed([tuple(b) for b in blocks_from_right])))

    def padded(self, ell):
        if ell < self.ell:
            if any(self.blocks[: self.ell - ell]):
                raise ValueError(f"{self} has non-empty blocks beyond {ell}")
            return ReducedFactorization(self.blocks[self.ell - ell:])
        return ReducedFactorization(((),) * (ell - self.ell) + self.blocks)

    @property
    def ell(self):
        return len(self.blocks)

    def block(self, i):
        """The i-th block from the right, r^i."""
        return self.blocks[self.ell - i]

    def word(self):
        return tuple(v for b in self.blocks for v in b)

    def permutation(self, n):
        return apply_word(self.word(), n)

    def weight(self):
        return tuple(len(self.block(i)) for i in range(1, self.ell + 1))

    def satisfies_cutoff(self):
        return all(not self.block(i) or self.block(i)[0] >= i for i in range(1, self.ell + 1))

    def _replace(self, i, new_lower, new_upper):
        blocks = list(self.blocks)
        blocks[self.ell - i] = tuple(sorted(new_lower))
        blocks[self.ell - i - 1] = tuple(sorted(new_upper))
        return ReducedFactorization(tuple(blocks))

    def pairing(self, i):
        """
        (R_i, L_i): the unpaired letters of r^i and of r^{i+1}.  Letters b of r^i
        are taken in decreasing order, each pairing with the smallest unused
        a > b of r^{i+1}.
        """
        self._check_color(i)
        lower, upper = self.block(i), self.block(i + 1)
        free = sorted(upper)
        unpaired = []
        for b in sorted(lower, reverse=True):
            match = next((a for a in free if a > b), None)
            if match is None:
                unpaired.append(b)
            else:
                free.remove(match)
        return set(unpaired), set(free)

    def lower(self, i, cutoff=False):
        """The crystal operator f_i: move a letter from r^i up into r^{i+1}."""
        right, _ = self.pairing(i)
        if not right:
            return None
        lower, upper = set(self.block(i)), set(self.block(i + 1))
        b = min(right)
        t = 0
        while b - t - 1 in lower:
            t += 1
        out = self._replace(i, lower - {b}, upper | {b - t})
        if cutoff and not out.satisfies_cutoff():
            return None
        return out

    def raise_(self, i, cutoff=False):
        """The crystal operator e_i: move a letter from r^{i+1} down into r^i."""
        _, left = self.pairing(i)
        if not left:
            return None
        lower, upper = set(self.block(i)), set(self.block(i + 1))
        a = max(left)
        s = 0
        while a + s + 1 in upper:
            s += 1
        out = self._replace(i, lower | {a + s}, upper - {a})
        if cutoff and not out.satisfies_cutoff():
            return None
        return out

    def _check_color(self, i):
        if not 1 <= i < self.ell:
            raise ValueError(f"crystal index {i} out of range for {self.ell} blocks")

    def to_compatible(self):
        if not self.satisfies_cutoff():
            raise ValueError(f"{self} violates the cutoff condition")
        seq = tuple(self.ell - k for k, b in enumerate(self.blocks) for _ in b)
        return CompatibleSequence(self.word(), seq)

    @classmethod
    def from_compatible(cls, comp, ell=None):
        if not is_compatible(comp.word, comp.seq):
            raise ValueError(f"{comp.seq} is not compatible with {comp.word}")
        ell = max(comp.seq, default=0) if ell is None else ell
        if comp.seq and comp.seq[0] > ell:
            raise ValueError(f"need at least {comp.seq[0]} blocks")
        blocks = [[] for _ in range(ell)]
        for letter, a in zip(comp.word, comp.seq):
            blocks[ell - a].append(letter)
        return cls(tuple(tuple(b) for b in blocks))

    def key(self):
        return str(self)

    def to_json(self, n=None):
        data = {"blocks": [list(b) for b in self.blocks]}
        if n is not None:
            data["permutation"] = format_permutation(self.permutation(n))
        return data

    @classmethod
    def from_json(cls, data):
        return cls(tuple(tuple(b) for b in data["blocks"]))

    def __str__(self):
        sep = "," if any(v > 9 for v in self.word()) else ""
        return "".join("(" + sep.join(str(v) for v in b) + ")" for b in self.blocks)


@dataclass(frozen=True)
class CompatibleSequence:
    word: tuple
    seq: tuple


def is_compatible(word, seq):
    """Weakly decreasing, seq_j <= word_j, strict descent wherever the word descends."""
    if len(word) != len(seq) or any(a < 1 for a in seq):
        return False
    for j in range(len(word)):
        if seq[j] > word[j]:
            return False
        if j + 1 < len(word):
            if seq[j] < seq[j + 1]:
                return False
            if word[j] > word[j + 1] and seq[j] == seq[j + 1]:
                return False
    return True


def _block_labels(word, ell, cutoff):
    """Weakly decreasing labels in 1..ell keeping each block strictly increasing."""
    out = []
    labels = []

    def extend(j):
        if j == len(word):
            out.append(tuple(labels))
            return
        top = ell if j == 0 else labels[-1]
        if j and word[j - 1] >= word[j]:
            top -= 1
        if cutoff:
            top = min(top, word[j])
        for a in range(top, 0, -1):
            labels.append(a)
            extend(j + 1)
            labels.pop()

    extend(0)
    return out


@lru_cache(maxsize=None)
def _factorizations(w, ell, cutoff):
    found = []
    for word in sorted(reduced_words(w)):
        for labels in _block_labels(word, ell, cutoff):
            blocks = [[] for _ in range(ell)]
            for letter, a in zip(word, labels):
                blocks[ell - a].append(letter)
            found.append(ReducedFactorization(tuple(tuple(b) for b in blocks)))
    return tuple(sorted(found))


def enumerate_rf(w, ell):
    """RF^ell(w): all increasing factorizations into ell blocks of reduced words of w."""
    return list(_factorizations(check_permutation(w), ell, False))


def enumerate_rfc(w):
    """RFC(w) for w in S_n, as factorizations into n blocks."""
    w = check_permutation(w)
    return list(_factorizations(w, len(w), True))
