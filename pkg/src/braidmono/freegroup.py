"""Reduced words in a free group with generators mu_1..mu_k.

Letters are signed 1-based indices, ``-i`` standing for the inverse of
``mu_i``. The helpers here work on plain tuples so the hot loops of the
Artin action stay allocation-light.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import StrandMismatchError, ValidationError

Letters = tuple[int, ...]


def free_reduce(letters: Iterable[int]) -> Letters:
    """Cancel adjacent ``x, -x`` pairs until none remain."""
    out: list[int] = []
    for x in letters:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def invert(letters: Sequence[int]) -> Letters:
    return tuple(-x for x in reversed(letters))


def join(a: Sequence[int], b: Sequence[int]) -> Letters:
    """Product of two reduced words, cancelling only at the junction."""
    na, nb = len(a), len(b)
    t = 0
    limit = min(na, nb)
    while t < limit and a[na - 1 - t] == -b[t]:
        t += 1
    return tuple(a[: na - t]) + tuple(b[t:])


def join_all(*words: Sequence[int]) -> Letters:
    out: Letters = ()
    for w in words:
        out = join(out, w)
    return out


def cyclic_reduce(letters: Sequence[int]) -> Letters:
    """Strip matching inverse pairs from the two ends of a reduced word."""
    w = tuple(letters)
    i, j = 0, len(w) - 1
    while i < j and w[i] == -w[j]:
        i += 1
        j -= 1
    return w[i : j + 1]


def substitute(word: Sequence[int], images: Sequence[Sequence[int]]) -> Letters:
    """Replace each generator ``mu_i`` by ``images[i-1]`` and reduce."""
    out: Letters = ()
    for x in word:
        img = images[x - 1] if x > 0 else invert(images[-x - 1])
        out = join(out, img)
    return out


@dataclass(frozen=True, slots=True)
class FreeWord:
    """A freely reduced word over ``mu_1..mu_rank``."""

    rank: int
    letters: Letters = ()

    def __post_init__(self) -> None:
        if self.rank < 0:
            raise ValidationError(f"rank must be nonnegative, got {self.rank}")
        letters = tuple(int(x) for x in self.letters)
        for x in letters:
            if x == 0 or abs(x) > self.rank:
                raise ValidationError(f"letter {x} outside generators 1..{self.rank}")
        object.__setattr__(self, "letters", free_reduce(letters))

    @classmethod
    def generator(cls, i: int, rank: int) -> FreeWord:
        return cls(rank, (i,))

    @classmethod
    def mu_infinity(cls, rank: int) -> FreeWord:
        """``(mu_k ... mu_1)^-1``, the loop around every puncture."""
        return cls(rank, invert(range(rank, 0, -1)))

    def _check(self, other: FreeWord) -> None:
        if self.rank != other.rank:
            raise StrandMismatchError(f"rank {self.rank} vs {other.rank}")

    def __mul__(self, other: FreeWord) -> FreeWord:
        self._check(other)
        return FreeWord(self.rank, join(self.letters, other.letters))

    def inverse(self) -> FreeWord:
        return FreeWord(self.rank, invert(self.letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return " ".join(f"m{x}" if x > 0 else f"m{-x}^-1" for x in self.letters)
