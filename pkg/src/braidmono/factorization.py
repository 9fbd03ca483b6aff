"""Ordered tuples of braids standing for a braid monodromy."""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Sequence

from .braid import (
    BraidWord,
    braids_equal,
    conj,
    exponent_sum,
    forget_strand,
    full_twist,
    is_identity,
    permutation_of,
    pseudo_coxeter,
    star,
)
from .errors import (
    ProductMismatchError,
    StrandMismatchError,
    ValidationError,
)

Label = str | None


@dataclass(frozen=True)
class Factorization:
    """Braids ``entries`` on a common strand count, read as (tau_1, ..., tau_r).

    ``marked`` records that every entry fixes the last strand; ``labels``
    carries optional per-entry tags such as ``"x=0"`` or ``"infinity"``.
    """

    strands: int
    entries: tuple[BraidWord, ...] = ()
    marked: bool = False
    labels: tuple[Label, ...] = field(default=())

    def __post_init__(self) -> None:
        entries = tuple(self.entries)
        for e in entries:
            if e.strands != self.strands:
                raise StrandMismatchError(
                    f"entry on {e.strands} strands in a factorization on {self.strands}"
                )
        labels = tuple(self.labels) if self.labels else (None,) * len(entries)
        if len(labels) != len(entries):
            raise ValidationError(f"{len(labels)} labels for {len(entries)} entries")
        if self.marked:
            for i, e in enumerate(entries):
                if not permutation_of(e).fixes(self.strands):
                    raise ValidationError(
                        f"entry {i + 1} does not fix the marked strand {self.strands}"
                    )
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "labels", labels)

    @classmethod
    def of(cls, strands: int, *entries: BraidWord | Sequence[int], **kw) -> Factorization:
        """Convenience constructor accepting raw letter sequences."""
        words = tuple(
            e if isinstance(e, BraidWord) else BraidWord(strands, tuple(e)) for e in entries
        )
        return cls(strands, words, **kw)

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, i: int) -> BraidWord:
        return self.entries[i]

    def __iter__(self):
        return iter(self.entries)

    def with_entries(
        self, entries: Sequence[BraidWord], labels: Sequence[Label] | None = None
    ) -> Factorization:
        return replace(self, entries=tuple(entries), labels=tuple(labels or ()))

    def pseudo_coxeter(self) -> BraidWord:
        return pseudo_coxeter(self.entries, self.strands)

    def exponent_sum(self) -> int:
        return sum(exponent_sum(e) for e in self.entries)


def _check_index(f: Factorization, i: int, upper: int) -> None:
    if not 1 <= i <= upper:
        raise ValidationError(f"index {i} outside 1..{upper}")


def hurwitz(f: Factorization, i: int, inverse: bool = False) -> Factorization:
    """Hurwitz move at positions i, i+1 (1-based).

    Forward: (a, b) -> (b, b a b^-1).  Inverse: (a, b) -> (a^-1 b a, a).
    """
    _check_index(f, i, len(f) - 1)
    es, ls = list(f.entries), list(f.labels)
    a, b = es[i - 1], es[i]
    if inverse:
        es[i - 1], es[i] = conj(b, a), a
    else:
        es[i - 1], es[i] = b, star(b, a)
    ls[i - 1], ls[i] = ls[i], ls[i - 1]
    return f.with_entries(es, ls)


def apply_moves(f: Factorization, moves: Sequence[int]) -> Factorization:
    """Apply signed Hurwitz moves in order: ``i`` is hur_i, ``-i`` its inverse."""
    for m in moves:
        f = hurwitz(f, abs(m), inverse=m < 0)
    return f


def conjugate_all(f: Factorization, g: BraidWord) -> Factorization:
    """Replace every entry tau by tau^g."""
    return f.with_entries([conj(e, g) for e in f.entries], f.labels)


def is_generic(f: Factorization) -> bool:
    """True iff the pseudo-Coxeter element is the full twist."""
    d = f.strands
    if d >= 2 and not f.entries:
        return False
    if f.exponent_sum() != d * (d - 1):
        return False
    return braids_equal(f.pseudo_coxeter(), full_twist(d))


def replace_entry(
    f: Factorization,
    i: int,
    parts: Sequence[BraidWord],
    labels: Sequence[Label] | None = None,
) -> Factorization:
    """Splice ``parts`` in place of entry i (1-based) after checking their product."""
    _check_index(f, i, len(f))
    parts = list(parts)
    target = f.entries[i - 1]
    if not braids_equal(pseudo_coxeter(parts, f.strands), target):
        raise ProductMismatchError(
            f"pseudo-Coxeter of the parts differs from entry {i}: {target}"
        )
    tag = f.labels[i - 1]
    new_labels = list(labels) if labels is not None else [tag] * len(parts)
    es = list(f.entries[: i - 1]) + parts + list(f.entries[i:])
    ls = list(f.labels[: i - 1]) + new_labels + list(f.labels[i:])
    return f.with_entries(es, ls)


def forget_strand_all(f: Factorization, s: int) -> Factorization:
    for i, e in enumerate(f.entries):
        if not permutation_of(e).fixes(s):
            raise ValidationError(f"entry {i + 1} does not fix strand {s}")
    return Factorization(
        f.strands - 1,
        tuple(forget_strand(e, s) for e in f.entries),
        marked=False,
        labels=f.labels,
    )


def drop_trivial_entries(f: Factorization) -> Factorization:
    keep = [(e, l) for e, l in zip(f.entries, f.labels) if not is_identity(e)]
    return f.with_entries([e for e, _ in keep], [l for _, l in keep])


def infinity_braid(f: Factorization) -> BraidWord:
    """Delta_d^2 (tau_r ... tau_1)^-1, the braid around the line at infinity."""
    return full_twist(f.strands) * f.pseudo_coxeter().inverse()


def entrywise_diff(
    got: Factorization, expected: Sequence[BraidWord]
) -> list[int]:
    """1-based positions where ``got`` and ``expected`` differ as braids."""
    n = max(len(got), len(expected))
    bad = []
    for i in range(n):
        if i >= len(got) or i >= len(expected):
            bad.append(i + 1)
        elif not braids_equal(got.entries[i], expected[i]):
            bad.append(i + 1)
    return bad
