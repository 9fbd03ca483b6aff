"""Product-preserving rewrites that turn a monodromy into a generic one.

Each rule replaces one entry by a tuple whose reversed product is that
entry, so the pseudo-Coxeter element never changes. Decompositions are
always supplied by the caller and validated with the exact oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Sequence

from .braid import (
    BraidWord,
    braids_equal,
    is_identity,
    partial_garside,
    product,
    shift_embed,
    star,
)
from .errors import OracleMismatchError, ValidationError
from .factorization import Factorization, replace_entry

Kind = Literal["cusp", "node", "inflection"]


@dataclass(frozen=True)
class TangencyModel:
    """A local model word on the band starting at strand ``a``, conjugated by ``eta``.

    ``cusp`` is (s_{a+1} s_a)^2, ``node`` is s_a s_{a+1} s_a and
    ``inflection`` of order m is s_{a+m-2} ... s_a on the m strands a..a+m-1.
    """

    kind: Kind
    a: int = 1
    eta: BraidWord | None = None
    m: int = 3

    def _strands_needed(self) -> int:
        return self.a + (2 if self.kind in ("cusp", "node") else self.m - 1)

    def _word(self, letters: Sequence[int], d: int) -> BraidWord:
        w = BraidWord(d, tuple(letters))
        return star(self.eta, w) if self.eta is not None else w

    def model(self, d: int) -> BraidWord:
        self._check(d)
        a = self.a
        if self.kind == "cusp":
            return self._word([a + 1, a, a + 1, a], d)
        if self.kind == "node":
            return self._word([a, a + 1, a], d)
        return self._word(range(a + self.m - 2, a - 1, -1), d)

    def parts(self, d: int) -> list[BraidWord]:
        self._check(d)
        a = self.a
        if self.kind == "cusp":
            raw = [[-(a + 1), a, a + 1], [a + 1] * 3]
        elif self.kind == "node":
            raw = [[-a, a + 1, a], [a, a]]
        else:
            raw = [[i] for i in range(a, a + self.m - 1)]
        return [self._word(r, d) for r in raw]

    def _check(self, d: int) -> None:
        if self.kind not in ("cusp", "node", "inflection"):
            raise ValidationError(f"unknown tangency kind {self.kind!r}")
        if self.kind == "inflection" and self.m < 2:
            raise ValidationError("inflection order must be at least 2")
        if self.a < 1 or self._strands_needed() > d:
            raise ValidationError(f"{self.kind} model at band {self.a} does not fit in {d} strands")
        if self.eta is not None and self.eta.strands != d:
            raise ValidationError("conjugator strand count differs from the factorization")


def replace_tangency(f: Factorization, i: int, model: TangencyModel) -> Factorization:
    """Replace entry i (1-based) by the generic tuple of a cusp, node or inflection."""
    if not 1 <= i <= len(f):
        raise ValidationError(f"index {i} outside 1..{len(f)}")
    if not braids_equal(f.entries[i - 1], model.model(f.strands)):
        raise OracleMismatchError(
            f"entry {i} is not the conjugated {model.kind} model at band {model.a}"
        )
    return replace_entry(f, i, model.parts(f.strands))


def split_locally_generic(f: Factorization, i: int, parts: Sequence[BraidWord]) -> Factorization:
    """Split entry i into pairwise commuting parts whose product is the entry."""
    parts = list(parts)
    for x in range(len(parts)):
        for y in range(x + 1, len(parts)):
            p, q = parts[x], parts[y]
            if not braids_equal(p * q, q * p):
                raise ValidationError(f"parts {x + 1} and {y + 1} do not commute")
    return replace_entry(f, i, parts)


# ----------------------------------------------------------------- arrangements


@dataclass(frozen=True)
class ArrangementEntry:
    """tau = beta * alpha with alpha the product of Delta^2 over the partition blocks."""

    tau: BraidWord
    beta: BraidWord
    partition: tuple[int, ...]

    def alpha(self) -> BraidWord:
        n = self.tau.strands
        return product(
            (
                partial_garside(lo, hi - 1, n) ** 2
                for lo, hi in zip(self.partition, self.partition[1:])
            ),
            n,
        )


@dataclass(frozen=True)
class ArrangementInput:
    """Augmented monodromy of n non-vertical lines plus the vertical-line positions.

    ``vertical`` holds the 1-based indices of the entries that circle the k
    vertical lines through the projection point.
    """

    n: int
    entries: tuple[ArrangementEntry, ...]
    vertical: tuple[int, ...] = ()

    @property
    def k(self) -> int:
        return len(self.vertical)

    def validate(self) -> None:
        for idx, e in enumerate(self.entries, start=1):
            if e.tau.strands != self.n or e.beta.strands != self.n:
                raise ValidationError(f"entry {idx} must live on {self.n} strands")
            p = e.partition
            if not p or p[0] != 1 or p[-1] != self.n + 1 or list(p) != sorted(set(p)):
                raise ValidationError(
                    f"entry {idx}: partition must rise strictly from 1 to {self.n + 1}"
                )
            if not braids_equal(star(e.beta, e.alpha()), e.tau):
                raise OracleMismatchError(f"entry {idx}: beta*alpha differs from tau")
        if list(self.vertical) != sorted(set(self.vertical)):
            raise ValidationError("vertical indices must be strictly increasing")
        for v in self.vertical:
            if not 1 <= v <= len(self.entries):
                raise ValidationError(f"vertical index {v} is not among the entries")


def arrangement_generify(
    inp: ArrangementInput,
    nonvertical_order: Literal["descending", "ascending"] = "descending",
    include_vertical_twist: bool = True,
) -> Factorization:
    """Generic monodromy on n+k strands for the arrangement plus k vertical lines.

    Non-vertical entries become their nontrivial conjugated block twists,
    vertical entries become twists of blocks extended by one strand behind
    the moving vertical strand, and the twist of the k vertical strands is
    appended last.
    """
    inp.validate()
    n, k = inp.n, inp.k
    d = n + k
    out: list[BraidWord] = []
    labels: list[str] = []
    for idx, e in enumerate(inp.entries, start=1):
        beta = shift_embed(e.beta, 0, d)
        p = e.partition
        m = len(p) - 1
        if idx in inp.vertical:
            j = inp.vertical.index(idx) + 1
            lead = beta * BraidWord(d, tuple(-x for x in range(n + j - 1, n, -1)))
            for s in range(m, 0, -1):
                tail = product(
                    (partial_garside(p[t - 1], p[t], d) for t in range(m, s, -1)), d
                )
                out.append(star(lead * tail, partial_garside(p[s - 1], p[s], d) ** 2))
                labels.append(f"vertical {j}, entry {idx}")
        else:
            order = range(m, 0, -1) if nonvertical_order == "descending" else range(1, m + 1)
            for s in order:
                twist = partial_garside(p[s - 1], p[s] - 1, d) ** 2
                if is_identity(twist):
                    continue
                out.append(star(beta, twist))
                labels.append(f"entry {idx}")
    if include_vertical_twist and k:
        out.append(partial_garside(n + 1, n + k, d) ** 2)
        labels.append("vertical twist")
    return Factorization(d, tuple(out), False, tuple(labels))


def arrangement_entry(tau: BraidWord, beta: BraidWord, partition: Sequence[int]) -> ArrangementEntry:
    return ArrangementEntry(tau, beta, tuple(partition))

