"""Lifting marked braids through the cover z -> z^n of the punctured plane.

A braid in B_{k,1} (k moving strands plus the fixed point 0, which is the
last strand) lifts to a braid in B_{nk,1}. Three generator systems on the
cover are supported:

``circular``
    Generators sigma_{i,j} with flat index (i-1)n + j, the fixed strand last.
``radial``
    Generators rho_{i,j} with flat index (j-1)k + i (right-lexicographic).
``straight2``
    Only for n = 2: the real-line system t_1 > ... > t_k > 0 > -t_k > ... > -t_1,
    whose fixed strand is the middle one, k+1.

``letters="native"`` returns words in the chosen system's own generators.
``letters="artin"`` (the default) rewrites radial and straight2 output in the
circular generators so that results from all systems compare under
:func:`braids_equal`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Literal

from . import freegroup as fg
from .braid import (
    BraidWord,
    MarkedBraidWord,
    conj,
    forget_strand,
    full_twist,
    to_marked_generators,
)
from .errors import StrandMismatchError, ValidationError
from .factorization import Factorization

System = Literal["circular", "radial", "straight2"]
LetterMode = Literal["artin", "native"]
SYSTEMS = ("circular", "radial", "straight2")


def _inv(w: list[int]) -> list[int]:
    return [-x for x in reversed(w)]


def _star(b: list[int], a: list[int]) -> list[int]:
    return b + a + _inv(b)


def _ascending(lo: int, hi: int, sign: int = 1) -> list[int]:
    return [sign * x for x in range(lo, hi + 1)]


def _descending(lo: int, hi: int, sign: int = 1) -> list[int]:
    return [sign * x for x in range(hi, lo - 1, -1)]


@dataclass(frozen=True)
class LiftSpec:
    """Cover degree ``n``, base strand count ``k`` and target generator system."""

    n: int
    k: int
    system: System = "circular"

    def __post_init__(self) -> None:
        if self.n < 1 or self.k < 1:
            raise ValidationError(f"need n, k >= 1, got n={self.n}, k={self.k}")
        if self.system not in SYSTEMS:
            raise ValidationError(f"unknown system {self.system!r}")
        if self.system == "straight2" and self.n != 2:
            raise ValidationError("the straight2 system requires n = 2")

    @property
    def d(self) -> int:
        return self.n * self.k

    @property
    def strands(self) -> int:
        return self.d + 1

    def fixed_strand(self, letters: LetterMode = "artin") -> int:
        if self.system == "straight2" and letters == "native":
            return self.k + 1
        return self.strands

    # ------------------------------------------------------------ indexing

    def circ(self, i: int, j: int) -> int:
        """Flat index of sigma_{i,j}."""
        return (i - 1) * self.n + j

    def rad(self, i: int, j: int) -> int:
        """Flat index of rho_{i,j}."""
        return (j - 1) * self.k + i

    # ------------------------------------------------- circular half-twists

    def alpha(self, i: int, j: int, form: int = 1, via: tuple[int, int] | None = None) -> list[int]:
        """The half-twist alpha_{i,j} on the arc t_i xi^{j-1} -- t_{i+1} xi^{j-1}.

        ``form`` selects one of three equal expressions; ``via`` is the
        intermediate generator used by form 2.
        """
        if not (1 <= i < self.k and 1 <= j <= self.n):
            raise ValidationError(f"alpha_{{{i},{j}}} undefined for k={self.k}, n={self.n}")
        a, a2, e = self.circ(i, j), self.circ(i + 1, j), self.d
        if form == 1:
            return _star(_ascending(a2, e) + _ascending(a, e, -1), [e])
        if form == 2:
            c = self.circ(*via) if via else a
            if not a <= c <= e - 1:
                raise ValidationError("form 2 needs an intermediate between alpha and sigma_{k,n}")
            pre = _ascending(a2, e - 1) + [e, e] + _descending(c + 1, e - 1) + _ascending(a, c, -1)
            return _star(pre, [c])
        if form == 3:
            pre = _ascending(a2, e - 1) + [e, e] + _descending(a, e - 1)
            return _star(pre, [a])
        raise ValidationError(f"unknown alpha form {form}")

    # ---------------------------------------------------------- generator images

    def _native_images(self) -> tuple[list[list[int]], list[int]]:
        k, n = self.k, self.n
        if self.system == "circular":
            gens = [sum((self.alpha(i, j) for j in range(1, n + 1)), []) for i in range(1, k)]
            sq = [self.d, self.d] + _descending(self.circ(k, 1), self.d - 1)
        elif self.system == "radial":
            gens = [[self.rad(i, j) for j in range(1, n + 1)] for i in range(1, k)]
            sq = [self.rad(k, n)] * 2 + _descending(self.rad(k, 1), self.rad(k - 1, n))
            for j in range(2, n + 1):
                sq += [-self.rad(i, j) for i in range(1, k)]
        else:
            gens = [[i, 2 * k - i + 1] for i in range(1, k)]
            sq = [k + 1, k, k + 1]
        return gens, sq

    def _radial_to_circular(self) -> dict[int, list[int]]:
        """Circular words for each rho_{i,j}."""
        k, n = self.k, self.n
        table: dict[int, list[int]] = {}
        for j in range(1, n + 1):
            for i in range(1, k):
                table[self.rad(i, j)] = self.alpha(i, j)
        for j in range(1, n):
            beta = sum((table[self.rad(i, j + 1)] for i in range(k - 1, 0, -1)), [])
            table[self.rad(k, j)] = _inv(beta) + [self.circ(k, j)] + beta
        table[self.rad(k, n)] = [self.d]
        return table

    def _straight_to_radial(self) -> dict[int, list[int]]:
        """Radial-native words for each real-line generator when n = 2."""
        k = self.k
        table: dict[int, list[int]] = {}
        for i in range(1, k):
            table[i] = [i]
            table[2 * k + 1 - i] = [k + i]
        table[k + 1] = [2 * k]
        table[k] = _star(_ascending(k, 2 * k - 1, -1), [2 * k])
        return table

    @cached_property
    def _tables(self) -> dict[str, object]:
        gens, sq = self._native_images()
        if self.system == "circular":
            conv = None
        elif self.system == "radial":
            conv = self._radial_to_circular()
        else:
            to_rad = self._straight_to_radial()
            rad = LiftSpec(2, self.k, "radial")._radial_to_circular()
            conv = {g: _subst(w, rad) for g, w in to_rad.items()}
        return {"native": (gens, sq), "conv": conv}

    def images(self, letters: LetterMode = "artin") -> tuple[list[BraidWord], BraidWord]:
        """Images of sigma_1..sigma_{k-1} and of sigma_k^2."""
        gens, sq = self._tables["native"]
        conv = self._tables["conv"]
        if letters == "artin" and conv is not None:
            gens = [_subst(g, conv) for g in gens]
            sq = _subst(sq, conv)
        d1 = self.strands
        return [BraidWord(d1, tuple(g)) for g in gens], BraidWord(d1, tuple(sq))

    def to_artin(self, w: BraidWord) -> BraidWord:
        """Rewrite a native word of this system in circular generators."""
        conv = self._tables["conv"]
        if conv is None:
            return w
        return BraidWord(self.strands, tuple(_subst(w.letters, conv)))


def _subst(word, table: dict[int, list[int]]) -> list[int]:
    out: list[int] = []
    for x in word:
        out += table[x] if x > 0 else _inv(table[-x])
    return out


def _sk_runs(letters: tuple[int, ...], k: int) -> list[tuple[int, int]]:
    """Maximal runs of sigma_k^{+-1} as (start, length) after free reduction."""
    runs, i = [], 0
    while i < len(letters):
        if abs(letters[i]) == k:
            j = i
            while j < len(letters) and letters[j] == letters[i]:
                j += 1
            runs.append((i, j - i))
            i = j
        else:
            i += 1
    return runs


def lift_braid(
    spec: LiftSpec,
    b: BraidWord | MarkedBraidWord,
    letters: LetterMode = "artin",
) -> BraidWord:
    """Image of a braid in B_{k,1} under the n-fold Kummer lift.

    The input must use sigma_k only in even powers; use
    :func:`to_marked_generators` first for arbitrary stabilizer words.
    """
    if isinstance(b, MarkedBraidWord):
        b = b.word
    if b.strands != spec.k + 1:
        raise StrandMismatchError(f"braid on {b.strands} strands, lift expects k+1={spec.k + 1}")
    if spec.n == 1:
        return b
    w = fg.free_reduce(b.letters)
    k = spec.k
    for start, length in _sk_runs(w, k):
        if length % 2:
            raise ValidationError(
                f"odd power sigma_{k}^{length} at position {start + 1}: not in the marked subgroup generators"
            )
    gens, sq = spec.images(letters)
    sq_inv = sq.inverse()
    out: list[int] = []
    i = 0
    while i < len(w):
        x = w[i]
        if abs(x) == k:
            out += (sq if x > 0 else sq_inv).letters
            i += 2
        else:
            g = gens[abs(x) - 1]
            out += g.letters if x > 0 else g.inverse().letters
            i += 1
    return BraidWord(spec.strands, tuple(out))


def lift_factorization(
    spec: LiftSpec,
    T: Factorization,
    letters: LetterMode = "artin",
    forget: bool = False,
) -> Factorization:
    """Lift an extended monodromy (tau_1, ..., tau_r, tau_0) whose last entry circles x=0.

    Output: blocks L(tau_i)^{L(tau_0)^j} for j = 0..n-1 followed by L(tau_0)^n.
    With ``forget`` the fixed strand is deleted from every entry.
    """
    if T.strands != spec.k + 1:
        raise StrandMismatchError(f"factorization on {T.strands} strands, expected {spec.k + 1}")
    if len(T) < 1:
        raise ValidationError("an extended monodromy needs at least the x=0 entry")
    *taus, zero = [lift_braid(spec, e, letters) for e in T.entries]
    *tags, _ = T.labels
    entries, labels = [], []
    for j in range(spec.n):
        g = zero**j
        for t, tag in zip(taus, tags):
            entries.append(conj(t, g) if j else t)
            labels.append(f"block {j}" + (f": {tag}" if tag else ""))
    entries.append(zero**spec.n)
    labels.append("x=0 lifted")
    fixed = spec.fixed_strand(letters)
    if forget:
        return Factorization(
            spec.d, tuple(forget_strand(e, fixed) for e in entries), False, tuple(labels)
        )
    return Factorization(spec.strands, tuple(entries), fixed == spec.strands, tuple(labels))


def kummer_infinity_braid(
    spec: LiftSpec, T: Factorization, letters: LetterMode = "artin"
) -> BraidWord:
    """Lift of Delta_{k+1}^{2n} c_T^{-n}, the new braid at infinity on the cover."""
    c = T.pseudo_coxeter()
    base = full_twist(spec.k + 1) ** spec.n * c.inverse() ** spec.n
    return lift_braid(spec, to_marked_generators(base), letters)
