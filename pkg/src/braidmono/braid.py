"""Braid words in Artin generators and the exact equality oracle.

A braid on ``d`` strands is a tuple of signed indices: ``i`` is the
counterclockwise half-twist sigma_i and ``-i`` its inverse. Words are never
normalized; equality in the group is decided by :func:`braids_equal`, which
compares the right Artin action on the free group of rank ``d``.

Conventions: ``conj(a, b) = b^-1 a b`` (written a^b) and
``star(b, a) = b a b^-1`` (written b*a).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Sequence

from . import freegroup as fg
from .errors import ResourceLimitError, StrandMismatchError, ValidationError
from .freegroup import FreeWord, Letters

DEFAULT_LENGTH_CAP = 10**6


@dataclass(frozen=True, slots=True)
class BraidWord:
    """A word in the Artin generators of the braid group on ``strands`` strands."""

    strands: int
    letters: Letters = ()

    def __post_init__(self) -> None:
        if self.strands < 1:
            raise ValidationError(f"strand count must be positive, got {self.strands}")
        letters = tuple(int(x) for x in self.letters)
        for x in letters:
            if x == 0 or abs(x) > self.strands - 1:
                raise ValidationError(
                    f"letter {x} outside sigma_1..sigma_{self.strands - 1}"
                )
        object.__setattr__(self, "letters", letters)

    @classmethod
    def identity(cls, strands: int) -> BraidWord:
        return cls(strands, ())

    @classmethod
    def sigma(cls, i: int, strands: int, power: int = 1) -> BraidWord:
        s = 1 if power >= 0 else -1
        return cls(strands, (s * i,) * abs(power))

    @classmethod
    def parse(cls, text: str, strands: int) -> BraidWord:
        """Read the text form ``s1 s2^-1 s1^3``; ``1`` or an empty string is the identity."""
        letters: list[int] = []
        for tok in text.replace("*", " ").split():
            if tok in ("1", "e"):
                continue
            m = re.fullmatch(r"s(\d+)(?:\^(-?\d+))?", tok)
            if not m:
                raise ValidationError(f"cannot parse braid token {tok!r}")
            i, p = int(m.group(1)), int(m.group(2) or 1)
            letters.extend([i if p > 0 else -i] * abs(p))
        return cls(strands, tuple(letters))

    def _check(self, other: BraidWord) -> None:
        if self.strands != other.strands:
            raise StrandMismatchError(f"strand count {self.strands} vs {other.strands}")

    def __mul__(self, other: BraidWord) -> BraidWord:
        self._check(other)
        return BraidWord(self.strands, self.letters + other.letters)

    def __pow__(self, e: int) -> BraidWord:
        base = self if e >= 0 else self.inverse()
        return BraidWord(self.strands, base.letters * abs(e))

    def __xor__(self, other: BraidWord) -> BraidWord:
        """``a ^ b`` is the conjugate b^-1 a b."""
        return conj(self, other)

    def inverse(self) -> BraidWord:
        return BraidWord(self.strands, fg.invert(self.letters))

    def reduced(self) -> BraidWord:
        """Free cancellation of adjacent inverse letters (a group-level identity)."""
        return BraidWord(self.strands, fg.free_reduce(self.letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        parts: list[str] = []
        run, count = self.letters[0], 0
        for x in self.letters + (0,):
            if x == run:
                count += 1
                continue
            i, s = abs(run), (1 if run > 0 else -1) * count
            parts.append(f"s{i}" if s == 1 else f"s{i}^{s}")
            run, count = x, 1
        return " ".join(parts)


def compose(a: BraidWord, b: BraidWord) -> BraidWord:
    return a * b


def invert(a: BraidWord) -> BraidWord:
    return a.inverse()


def conj(a: BraidWord, b: BraidWord) -> BraidWord:
    """a^b = b^-1 a b."""
    a._check(b)
    return BraidWord(a.strands, fg.invert(b.letters) + a.letters + b.letters)


def star(b: BraidWord, a: BraidWord) -> BraidWord:
    """b*a = b a b^-1."""
    a._check(b)
    return BraidWord(a.strands, b.letters + a.letters + fg.invert(b.letters))


def product(words: Iterable[BraidWord], strands: int) -> BraidWord:
    return reduce(compose, words, BraidWord.identity(strands))


def pseudo_coxeter(xs: Sequence[BraidWord], strands: int | None = None) -> BraidWord:
    """The reversed product x_r ... x_1."""
    if not xs:
        if strands is None:
            raise ValidationError("strand count required for an empty list")
        return BraidWord.identity(strands)
    d = xs[0].strands if strands is None else strands
    return product(reversed(xs), d)


# ---------------------------------------------------------------- Artin action


def artin_images(
    b: BraidWord, cap: int = DEFAULT_LENGTH_CAP
) -> list[Letters]:
    """Images of mu_1..mu_d under the right action w -> w^b.

    The letters of ``b`` act left to right, so the images are assembled by
    scanning ``b`` from the right and substituting the running images into
    the one-letter rule.
    """
    d = b.strands
    images: list[Letters] = [(i,) for i in range(1, d + 1)]
    for x in reversed(b.letters):
        j = abs(x)
        lo, hi = images[j - 1], images[j]
        if x > 0:
            images[j - 1] = hi
            images[j] = fg.join(fg.join(hi, lo), fg.invert(hi))
            grown = images[j]
        else:
            images[j] = lo
            images[j - 1] = fg.join(fg.join(fg.invert(lo), hi), lo)
            grown = images[j - 1]
        if len(grown) > cap:
            raise ResourceLimitError(
                f"free word of length {len(grown)} exceeds the cap of {cap} letters"
            )
    return images


def artin_act(b: BraidWord, w: FreeWord, cap: int = DEFAULT_LENGTH_CAP) -> FreeWord:
    """The right action w^b of the braid on the free group of matching rank."""
    if b.strands != w.rank:
        raise StrandMismatchError(f"braid on {b.strands} strands vs free rank {w.rank}")
    return FreeWord(w.rank, fg.substitute(w.letters, artin_images(b, cap)))


def braids_equal(a: BraidWord, b: BraidWord, cap: int = DEFAULT_LENGTH_CAP) -> bool:
    """Exact equality in the braid group via faithfulness of the Artin action.

    Both automorphisms are evaluated on the basis and compared, which is the
    same test as asking a*b^-1 to fix every mu_i but keeps intermediate
    words short.
    """
    a._check(b)
    if exponent_sum(a) != exponent_sum(b):
        return False
    if permutation_of(a) != permutation_of(b):
        return False
    return artin_images(a, cap) == artin_images(b, cap)


def is_identity(a: BraidWord, cap: int = DEFAULT_LENGTH_CAP) -> bool:
    return braids_equal(a, BraidWord.identity(a.strands), cap)


# ------------------------------------------------------------ cheap invariants


@dataclass(frozen=True, slots=True)
class Permutation:
    """``images[i-1]`` is the final position of the strand starting at position i."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        imgs = tuple(int(x) for x in self.images)
        if sorted(imgs) != list(range(1, len(imgs) + 1)):
            raise ValidationError(f"not a permutation: {imgs}")
        object.__setattr__(self, "images", imgs)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def fixes(self, i: int) -> bool:
        return self(i) == i

    def is_identity(self) -> bool:
        return all(self(i) == i for i in range(1, len(self.images) + 1))

    def cycles(self) -> list[tuple[int, ...]]:
        seen: set[int] = set()
        out = []
        for i in range(1, len(self.images) + 1):
            if i in seen:
                continue
            cyc = [i]
            seen.add(i)
            j = self(i)
            while j != i:
                cyc.append(j)
                seen.add(j)
                j = self(j)
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out


def permutation_of(a: BraidWord) -> Permutation:
    at = list(range(a.strands + 1))  # at[p] = strand currently at position p
    for x in a.letters:
        j = abs(x)
        at[j], at[j + 1] = at[j + 1], at[j]
    final = [0] * a.strands
    for p in range(1, a.strands + 1):
        final[at[p] - 1] = p
    return Permutation(tuple(final))


def exponent_sum(a: BraidWord) -> int:
    return sum(1 if x > 0 else -1 for x in a.letters)


# ------------------------------------------------------------ special elements


def half_twist(d: int) -> BraidWord:
    """Positive Garside element Delta_d = s1 (s2 s1) (s3 s2 s1) ..."""
    letters: list[int] = []
    for top in range(1, d):
        letters.extend(range(top, 0, -1))
    return BraidWord(max(d, 1), tuple(letters))


def full_twist(d: int) -> BraidWord:
    """Delta_d^2 as the word (s_{d-1} ... s_1)^d."""
    if d < 1:
        raise ValidationError(f"d must be positive, got {d}")
    return BraidWord(d, tuple(range(d - 1, 0, -1)) * d)


def shift_embed(a: BraidWord, shift: int, strands: int) -> BraidWord:
    """Raise every index by ``shift`` and re-home the word on ``strands`` strands."""
    if shift < 0 or shift + a.strands > strands:
        raise ValidationError(
            f"cannot shift {a.strands} strands by {shift} inside {strands}"
        )
    return BraidWord(strands, tuple(x + shift if x > 0 else x - shift for x in a.letters))


def partial_garside(i: int, j: int, d: int) -> BraidWord:
    """Delta_{i,j}: the half twist of the strand band i..j inside B_d."""
    if not 1 <= i <= j <= d:
        raise ValidationError(f"need 1 <= i <= j <= d, got ({i}, {j}, {d})")
    return shift_embed(half_twist(j - i + 1), i - 1, d)


def forget_strand(a: BraidWord, s: int) -> BraidWord:
    """Delete the strand that starts at position ``s``."""
    if not 1 <= s <= a.strands:
        raise ValidationError(f"strand {s} out of range 1..{a.strands}")
    if a.strands == 1:
        return a
    p = s
    out: list[int] = []
    for x in a.letters:
        j = abs(x)
        if j == p:
            p += 1
        elif j == p - 1:
            p -= 1
        elif j > p:
            out.append(x - 1 if x > 0 else x + 1)
        else:
            out.append(x)
    return BraidWord(a.strands - 1, tuple(out))


# --------------------------------------------------------- marked subgroup


@dataclass(frozen=True, slots=True)
class MarkedBraidWord:
    """A braid on k+1 strands whose permutation fixes the last strand (the point 0)."""

    word: BraidWord
    k: int

    def __post_init__(self) -> None:
        if self.word.strands != self.k + 1:
            raise StrandMismatchError(
                f"marked braid with k={self.k} needs {self.k + 1} strands"
            )
        if not permutation_of(self.word).fixes(self.k + 1):
            raise ValidationError(f"permutation does not fix strand {self.k + 1}")


def _band_conjugate(p: int, k: int, sign: int) -> list[int]:
    """(s_p^-1 ... s_{k-1}^-1) s_k^{2 sign} (s_{k-1} ... s_p)."""
    return [-i for i in range(p, k)] + [sign * k] * 2 + list(range(k - 1, p - 1, -1))


def to_marked_generators(a: BraidWord) -> BraidWord:
    """Rewrite a braid fixing the last strand over s_1..s_{k-1} and s_k^{+-2}.

    The output is equal to ``a`` in the group, and every maximal run of s_k
    letters has even length, which is the input format required by the
    Kummer lifts.
    """
    k = a.strands - 1
    if not permutation_of(a).fixes(k + 1):
        raise ValidationError(f"permutation does not fix strand {k + 1}")
    p = k + 1
    out: list[int] = []
    for x in a.letters:
        j, pos = abs(x), x > 0
        if p == k + 1:
            if j < k:
                out.append(x)
            else:  # j == k
                if not pos:
                    out.extend([-k, -k])
                p = k
        elif j == p:
            if pos:
                out.extend(_band_conjugate(p, k, 1))
            p += 1
        elif j == p - 1:
            if not pos:
                out.extend(_band_conjugate(p - 1, k, -1))
            p -= 1
        elif j > p:
            out.append(x - 1 if pos else x + 1)
        else:
            out.append(x)
    return BraidWord(a.strands, tuple(out))
